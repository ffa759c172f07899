#include "zetaflow/io/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "zetaflow/errors.hpp"

namespace zetaflow::io {

using cdet::LogMonomial;
using exact::Int;
using exact::IntMatrix;
using exact::IntPolynomial;
using exact::Rat;
using json = nlohmann::json;

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError("unknown field '" + it.key() + "' in " + where);
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + " must be an integer");
    return j.get<long long>();
}

IntMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + " must be a non-empty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw ParseError(where + " rows must be non-empty arrays");
        std::vector<Int> r;
        for (const auto& v : row) r.emplace_back(as_int(v, where + " entry"));
        if (!rows.empty() && rows[0].size() != r.size())
            throw ParseError(where + " rows must all have the same length");
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

SystemDescription parse_system(const json& j) {
    if (!j.is_object()) throw ParseError("system description must be an object");
    require_keys(j, {"name", "mode", "matrix", "matrices", "p", "length", "options"},
                 "system description");

    SystemDescription d;
    if (!j.contains("name") || !j.at("name").is_string() ||
        j.at("name").get<std::string>().empty())
        throw ParseError("system description needs a non-empty string 'name'");
    d.name = j.at("name").get<std::string>();

    if (!j.contains("mode") || !j.at("mode").is_string())
        throw ParseError("system '" + d.name + "' needs a 'mode' of torus or graded");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "torus") {
        d.mode = SystemDescription::Mode::torus;
        if (!j.contains("matrix") || j.contains("matrices"))
            throw ParseError("torus system '" + d.name + "' takes exactly 'matrix'");
        d.matrix = parse_matrix(j.at("matrix"), "matrix of '" + d.name + "'");
    } else if (mode == "graded") {
        d.mode = SystemDescription::Mode::graded;
        if (!j.contains("matrices") || j.contains("matrix"))
            throw ParseError("graded system '" + d.name + "' takes exactly 'matrices'");
        const json& ms = j.at("matrices");
        if (!ms.is_array() || ms.empty())
            throw ParseError("matrices of '" + d.name + "' must be a non-empty array");
        for (size_t i = 0; i < ms.size(); ++i)
            d.matrices.push_back(parse_matrix(
                ms[i], "matrices[" + std::to_string(i) + "] of '" + d.name + "'"));
    } else {
        throw ParseError("mode of '" + d.name + "' must be torus or graded");
    }

    const bool has_p = j.contains("p"), has_len = j.contains("length");
    if (has_p == has_len)
        throw ParseError("system '" + d.name + "' needs exactly one of 'p' or 'length'");
    if (has_p) {
        d.ell = torus::PeriodScale::log_integer(as_int(j.at("p"), "'p'"));
    } else {
        if (!j.at("length").is_number())
            throw ParseError("'length' of '" + d.name + "' must be a number");
        d.ell = torus::PeriodScale::plain(j.at("length").get<double>());
    }

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) throw ParseError("'options' must be an object");
        require_keys(o, {"max_period", "series_order"}, "options of '" + d.name + "'");
        if (o.contains("max_period")) {
            const long long m = as_int(o.at("max_period"), "'max_period'");
            if (m < 1 || m > 60)
                throw ValidationError("max_period must lie in 1..60");
            d.options.max_period = static_cast<int>(m);
        }
        if (o.contains("series_order")) {
            const long long m = as_int(o.at("series_order"), "'series_order'");
            if (m < 0 || m > 200)
                throw ValidationError("series_order must lie in 0..200");
            d.options.series_order = static_cast<int>(m);
        }
    }
    return d;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (int k = 0; k < m.cols(); ++k)
            r.push_back(m.at(i, k).convert_to<long long>());
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json rat_json(const Rat& r) {
    ordered_json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

ordered_json ell_json(const torus::PeriodScale& e) {
    ordered_json j;
    if (e.kind == torus::PeriodScale::Kind::log_of_integer)
        j["log_of"] = e.p;
    else
        j["value"] = e.length;
    return j;
}

ordered_json mono_json(const LogMonomial& m, const torus::PeriodScale& e) {
    ordered_json j;
    j["coeff"] = rat_json(m.coeff());
    j["ell_pow"] = m.ell_power();
    j["ell"] = ell_json(e);
    return j;
}

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json c = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).str());
    if (p.is_zero()) c.push_back("0");
    return c;
}

std::string ell_display(const torus::PeriodScale& e) {
    if (e.kind == torus::PeriodScale::Kind::log_of_integer)
        return "log(" + std::to_string(e.p) + ")";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", e.length);
    return buf;
}

std::string group_display(const cdet::DegreeHomology& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1) parts.push_back("Z");
    else if (h.free_rank > 1) parts.push_back("Z^" + std::to_string(h.free_rank));
    for (const Int& d : h.torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

const char* series_status_name(SeriesOutcome::Status s) {
    switch (s) {
        case SeriesOutcome::Status::ok: return "ok";
        case SeriesOutcome::Status::degenerate_orbits: return "degenerate_orbits";
        case SeriesOutcome::Status::sign_unstable: return "sign_unstable";
        default: return "not_applicable";
    }
}

ordered_json system_report_json(const SystemOutcome& o) {
    ordered_json j;
    j["name"] = o.desc.name;
    j["mode"] = o.desc.mode == SystemDescription::Mode::torus ? "torus" : "graded";
    j["ell"] = ell_json(o.desc.ell);

    ordered_json coh = ordered_json::array();
    long long euler = 0;
    for (size_t i = 0; i < o.cohomology.size(); ++i) {
        const auto& h = o.cohomology[i];
        euler += (i % 2 == 0 ? 1 : -1) * h.free_rank;
        ordered_json g;
        g["degree"] = i;
        g["rank"] = h.free_rank;
        ordered_json t = ordered_json::array();
        for (const Int& d : h.torsion) t.push_back(d.str());
        g["torsion"] = std::move(t);
        g["display"] = group_display(h);
        coh.push_back(std::move(g));
    }
    j["cohomology"] = std::move(coh);
    j["euler_characteristic"] = euler;
    j["semisimple_at_one"] = o.semisimple;

    ordered_json pg;
    pg["rank"] = o.periods.rank;
    pg["generator"] = mono_json(o.periods.generator, o.desc.ell);
    j["period_group"] = std::move(pg);

    ordered_json z;
    z["numerator"] = poly_json(o.report.zeta.num);
    z["denominator"] = poly_json(o.report.zeta.den);
    z["display"] = "(" + o.report.zeta.num.to_string() + ") / (" +
                   o.report.zeta.den.to_string() + ")";
    j["zeta"] = std::move(z);

    ordered_json checks;
    {
        ordered_json a;
        a["pass"] = o.report.acyclic;
        checks["acyclicity"] = std::move(a);
    }
    {
        ordered_json v;
        v["status"] = o.report.ord_checked ? "checked" : "skipped";
        v["zeta_order"] = o.report.ord_lhs;
        v["cohomological_order"] = o.report.ord_rhs;
        v["comparison"] = "exact";
        if (o.report.ord_checked) v["pass"] = o.report.ord_equal;
        checks["vanishing_order"] = std::move(v);
    }
    {
        ordered_json l;
        l["status"] = o.report.leading_checked ? "checked" : "skipped";
        l["absolute_value"] = mono_json(o.report.leading_abs, o.desc.ell);
        if (o.report.leading_checked)
            l["predicted"] = mono_json(o.report.rhs, o.desc.ell);
        l["sign"] = o.report.sign;
        l["comparison"] = "exact";
        if (o.report.leading_checked) l["pass"] = o.report.leading_equal;
        checks["leading_value"] = std::move(l);
    }
    j["checks"] = std::move(checks);

    ordered_json series;
    {
        ordered_json t;
        t["status"] = series_status_name(o.trace_series.status);
        t["order"] = o.trace_series.order;
        t["comparison"] = "exact";
        t["pass"] = o.trace_series.pass;
        series["traces_vs_rational"] = std::move(t);
    }
    {
        ordered_json t;
        t["status"] = series_status_name(o.orbit_series.status);
        if (o.orbit_series.status == SeriesOutcome::Status::degenerate_orbits)
            t["period"] = o.orbit_series.degenerate_period;
        if (o.orbit_series.status == SeriesOutcome::Status::ok) {
            t["order"] = o.orbit_series.order;
            t["comparison"] = "exact";
            t["pass"] = o.orbit_series.pass;
        }
        series["orbits_vs_rational"] = std::move(t);
    }
    j["series"] = std::move(series);

    j["pass"] = o.pass;
    return j;
}

void markdown_system(std::ostringstream& os, const SystemOutcome& o) {
    os << "## " << o.desc.name << "\n\n";
    os << "- mode: "
       << (o.desc.mode == SystemDescription::Mode::torus ? "torus" : "graded")
       << ", ell = " << ell_display(o.desc.ell) << "\n";
    os << "- cohomology:";
    for (size_t i = 0; i < o.cohomology.size(); ++i)
        os << (i ? "," : "") << " H^" << i << " = " << group_display(o.cohomology[i]);
    os << "\n";
    os << "- semisimple at 1: " << (o.semisimple ? "yes" : "no") << "\n";
    os << "- period group: rank " << o.periods.rank << ", generator "
       << o.periods.generator.to_string() << "\n";
    os << "- zeta(t) = (" << o.report.zeta.num.to_string() << ") / ("
       << o.report.zeta.den.to_string() << ")\n";
    os << "- acyclicity: " << (o.report.acyclic ? "pass" : "fail") << "\n";
    if (o.report.ord_checked)
        os << "- vanishing order: zeta " << o.report.ord_lhs << ", cohomology "
           << o.report.ord_rhs << " -> " << (o.report.ord_equal ? "pass" : "fail")
           << "\n";
    else
        os << "- vanishing order: skipped (not acyclic); zeta order is "
           << o.report.ord_lhs << "\n";
    if (o.report.leading_checked)
        os << "- leading value: |zeta*| = " << o.report.leading_abs.to_string()
           << ", predicted = " << o.report.rhs.to_string() << ", sign "
           << (o.report.sign >= 0 ? "+1" : "-1") << " -> "
           << (o.report.leading_equal ? "pass" : "fail") << "\n";
    else
        os << "- leading value: skipped (not acyclic); |zeta*| = "
           << o.report.leading_abs.to_string() << "\n";
    os << "- trace series through order " << o.trace_series.order << ": "
       << (o.trace_series.pass ? "agree" : "disagree") << "\n";
    switch (o.orbit_series.status) {
        case SeriesOutcome::Status::ok:
            os << "- orbit series through order " << o.orbit_series.order << ": "
               << (o.orbit_series.pass ? "agree" : "disagree") << "\n";
            break;
        case SeriesOutcome::Status::degenerate_orbits:
            os << "- orbit series: skipped, no isolated fixed points at iterate "
               << o.orbit_series.degenerate_period << "\n";
            break;
        case SeriesOutcome::Status::sign_unstable:
            os << "- orbit series: skipped, unstable signs along iterates\n";
            break;
        default:
            os << "- orbit series: not applicable (graded input)\n";
    }
    os << "- result: " << (o.pass ? "PASS" : "FAIL") << "\n\n";
}

} // namespace

std::vector<SystemDescription> parse_systems_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<SystemDescription> out;
    if (doc.is_object() && doc.contains("systems")) {
        require_keys(doc, {"systems"}, "document");
        if (!doc.at("systems").is_array())
            throw ParseError("'systems' must be an array");
        for (const auto& s : doc.at("systems")) out.push_back(parse_system(s));
    } else {
        out.push_back(parse_system(doc));
    }
    if (out.empty()) throw ParseError("document contains no systems");
    std::set<std::string> seen;
    for (const auto& d : out)
        if (!seen.insert(d.name).second)
            throw ValidationError("duplicate system name '" + d.name + "'");
    return out;
}

std::vector<SystemDescription> load_systems_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_systems_text(buf.str());
}

ordered_json system_to_json(const SystemDescription& d) {
    ordered_json j;
    j["name"] = d.name;
    j["mode"] = d.mode == SystemDescription::Mode::torus ? "torus" : "graded";
    if (d.mode == SystemDescription::Mode::torus) {
        j["matrix"] = matrix_json(d.matrix);
    } else {
        ordered_json ms = ordered_json::array();
        for (const auto& m : d.matrices) ms.push_back(matrix_json(m));
        j["matrices"] = std::move(ms);
    }
    if (d.ell.kind == torus::PeriodScale::Kind::log_of_integer)
        j["p"] = d.ell.p;
    else
        j["length"] = d.ell.length;
    if (d.options.max_period || d.options.series_order) {
        ordered_json o;
        if (d.options.max_period) o["max_period"] = *d.options.max_period;
        if (d.options.series_order) o["series_order"] = *d.options.series_order;
        j["options"] = std::move(o);
    }
    return j;
}

SystemOutcome verify_system(const SystemDescription& d, int default_max_period,
                            int default_series_order) {
    SystemOutcome out;
    out.desc = d;
    const torus::GradedEndo endo = d.mode == SystemDescription::Mode::torus
                                       ? torus::torus_system(d.matrix, d.ell)
                                       : torus::graded_system(d.matrices, d.ell);
    const torus::SuspensionCohomology s = torus::suspension_cohomology(endo);
    out.cohomology = torus::cohomology_summary(s);
    out.semisimple = torus::check_semisimple_at_one(endo);
    out.periods = torus::period_group(endo);
    out.report = zeta::verify_special_value(endo);

    const int order = d.options.series_order.value_or(default_series_order);
    const int max_period = d.options.max_period.value_or(default_max_period);

    out.trace_series.status = SeriesOutcome::Status::ok;
    out.trace_series.order = order;
    out.trace_series.pass =
        zeta::lefschetz_series(endo, order) == zeta::taylor(out.report.zeta, order);

    if (d.mode == SystemDescription::Mode::torus) {
        try {
            const zeta::OrbitCensus census = zeta::orbit_census(d.matrix, max_period);
            const int m = std::min(order, max_period);
            out.orbit_series.status = SeriesOutcome::Status::ok;
            out.orbit_series.order = m;
            out.orbit_series.pass = zeta::euler_product_series(census, m) ==
                                    zeta::taylor(out.report.zeta, m);
        } catch (const DegenerateOrbits& e) {
            out.orbit_series.status = SeriesOutcome::Status::degenerate_orbits;
            out.orbit_series.degenerate_period = e.period;
        } catch (const SignInstability&) {
            out.orbit_series.status = SeriesOutcome::Status::sign_unstable;
        }
    }

    const bool orbit_ok = out.orbit_series.status != SeriesOutcome::Status::ok ||
                          out.orbit_series.pass;
    out.pass = out.report.acyclic && out.report.ord_equal &&
               out.report.leading_equal && out.trace_series.pass && orbit_ok;
    return out;
}

ordered_json report_to_json(const std::vector<SystemOutcome>& outcomes) {
    ordered_json j;
    j["tool"] = "zetaflow";
    j["report"] = "special-value-verification";
    ordered_json systems = ordered_json::array();
    bool all = true;
    for (const auto& o : outcomes) {
        all = all && o.pass;
        systems.push_back(system_report_json(o));
    }
    j["systems"] = std::move(systems);
    j["all_pass"] = all;
    return j;
}

std::string report_to_markdown(const std::vector<SystemOutcome>& outcomes) {
    std::ostringstream os;
    size_t passed = 0;
    for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
    os << "# special value verification\n\n";
    os << "overall: " << (passed == outcomes.size() ? "PASS" : "FAIL") << " ("
       << passed << " of " << outcomes.size() << " systems)\n\n";
    for (const auto& o : outcomes) markdown_system(os, o);
    std::string out = os.str();
    out.pop_back(); // single newline at end of file
    return out;
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace zetaflow::io

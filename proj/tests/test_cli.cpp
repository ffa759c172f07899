#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

#include "zetaflow/errors.hpp"
#include "zetaflow/io/json_io.hpp"

#ifndef ZETAFLOW_CLI_PATH
#error "ZETAFLOW_CLI_PATH must point at the command line binary"
#endif
#ifndef ZETAFLOW_DATA_DIR
#error "ZETAFLOW_DATA_DIR must point at the bundled data directory"
#endif

using namespace zetaflow;
using io::SystemDescription;

namespace {

std::string data_path(const std::string& name) {
    return std::string(ZETAFLOW_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(ZETAFLOW_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string temp_file(const std::string& name) {
    return std::string("/tmp/zetaflow_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

bool descriptions_equal(const SystemDescription& a, const SystemDescription& b) {
    if (a.name != b.name || a.mode != b.mode) return false;
    if (!(a.matrix == b.matrix)) return false;
    if (a.matrices.size() != b.matrices.size()) return false;
    for (size_t i = 0; i < a.matrices.size(); ++i)
        if (!(a.matrices[i] == b.matrices[i])) return false;
    if (a.ell.kind != b.ell.kind) return false;
    if (a.ell.kind == torus::PeriodScale::Kind::log_of_integer) {
        if (a.ell.p != b.ell.p) return false;
    } else if (a.ell.length != b.ell.length) {
        return false;
    }
    return a.options.max_period == b.options.max_period &&
           a.options.series_order == b.options.series_order;
}

} // namespace

TEST_CASE("parsing accepts single systems and batches") {
    const auto single = io::load_systems_file(data_path("anosov.json"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].name == "anosov");
    CHECK(single[0].mode == SystemDescription::Mode::torus);
    CHECK(single[0].matrix == exact::IntMatrix::from_rows({{2, 1}, {1, 1}}));
    CHECK(single[0].ell.p == 2);
    CHECK_FALSE(single[0].options.max_period.has_value());

    const auto batch = io::load_systems_file(data_path("corpus.json"));
    REQUIRE(batch.size() == 6);
    CHECK(batch[0].name == "circle_identity");
    CHECK(batch[0].mode == SystemDescription::Mode::graded);
    CHECK(batch[4].name == "hyperbolic_sum");
    CHECK(batch[4].ell.kind == torus::PeriodScale::Kind::plain_length);
    CHECK(batch[4].options.max_period == 10);
    CHECK(batch[4].options.series_order == 16);
}

TEST_CASE("serialize then parse is the identity") {
    for (const auto& d : io::load_systems_file(data_path("corpus.json"))) {
        const std::string text = io::render_json(io::system_to_json(d));
        const auto back = io::parse_systems_text(text);
        REQUIRE(back.size() == 1);
        CHECK(descriptions_equal(d, back[0]));
    }
}

TEST_CASE("malformed documents are parse errors") {
    CHECK_THROWS_AS(io::parse_systems_text("not json at all"), ParseError);
    CHECK_THROWS_AS(io::parse_systems_text("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS(io::parse_systems_text("{\"systems\": {}}"), ParseError);
    CHECK_THROWS_AS(io::parse_systems_text("{\"systems\": []}"), ParseError);
    CHECK_THROWS_AS(io::load_systems_file(data_path("no_such_file.json")), ParseError);

    const std::string base =
        R"({"name": "x", "mode": "torus", "matrix": [[2, 1], [1, 1]], "p": 2})";
    CHECK_NOTHROW(io::parse_systems_text(base));

    // one broken field at a time
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"mode": "torus", "matrix": [[1]], "p": 2})"),
                    ParseError); // missing name
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "odd", "matrix": [[1]], "p": 2})"),
                    ParseError); // unknown mode
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1]]})"),
                    ParseError); // no scale
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1]], "p": 2, "length": 1.0})"),
                    ParseError); // two scales
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1, 2], [3]], "p": 2})"),
                    ParseError); // ragged matrix
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1.5]], "p": 2})"),
                    ParseError); // non-integer entry
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1]], "p": 2, "extra": 1})"),
                    ParseError); // unknown field
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "graded", "matrix": [[1]], "p": 2})"),
                    ParseError); // wrong matrix key for the mode
}

TEST_CASE("bad values are validation errors") {
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1]], "p": 1})"),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_systems_text(
                        R"({"name": "x", "mode": "torus", "matrix": [[1]], "length": -1.0})"),
                    ValidationError);
    CHECK_THROWS_AS(
        io::parse_systems_text(
            R"({"name": "x", "mode": "torus", "matrix": [[1]], "p": 2, "options": {"max_period": 0}})"),
        ValidationError);
    CHECK_THROWS_AS(
        io::parse_systems_text(
            R"({"systems": [{"name": "x", "mode": "torus", "matrix": [[1]], "p": 2},
                            {"name": "x", "mode": "torus", "matrix": [[1]], "p": 2}]})"),
        ValidationError); // duplicate names

    // non-unimodular torus matrices surface when the system is built
    const auto bad = io::parse_systems_text(
        R"({"name": "x", "mode": "torus", "matrix": [[2, 0], [0, 1]], "p": 2})");
    CHECK_THROWS_AS(io::verify_system(bad[0], 12, 20), NotUnimodular);
}

TEST_CASE("verification outcomes drive the pass flags") {
    const auto systems = io::load_systems_file(data_path("corpus.json"));
    std::vector<io::SystemOutcome> outcomes;
    for (const auto& d : systems) outcomes.push_back(io::verify_system(d, 12, 20));

    CHECK(outcomes[0].pass); // circle identity
    CHECK(outcomes[1].pass); // quarter turn
    CHECK(outcomes[2].pass); // hyperbolic
    CHECK(outcomes[3].pass); // order four
    CHECK(outcomes[4].pass); // block sum of hyperbolics
    CHECK_FALSE(outcomes[5].pass); // unipotent

    CHECK(outcomes[1].orbit_series.status == io::SeriesOutcome::Status::degenerate_orbits);
    CHECK(outcomes[1].orbit_series.degenerate_period == 4);
    CHECK(outcomes[2].orbit_series.status == io::SeriesOutcome::Status::ok);
    CHECK(outcomes[2].orbit_series.pass);
    CHECK(outcomes[0].orbit_series.status == io::SeriesOutcome::Status::not_applicable);
    CHECK(outcomes[4].trace_series.order == 16); // file option wins
    CHECK(outcomes[4].orbit_series.order == 10);

    const auto j = io::report_to_json(outcomes);
    CHECK(j.at("all_pass") == false);
    CHECK(j.at("systems").size() == 6);
    CHECK(j.at("systems")[5].at("checks").at("acyclicity").at("pass") == false);
    CHECK(j.at("systems")[5].at("checks").at("vanishing_order").at("status") == "skipped");
    CHECK(j.at("systems")[2].at("checks").at("leading_value").at("sign") == -1);
    CHECK(j.at("systems")[1].at("checks").at("leading_value").at("predicted").at("coeff")
              .at("num") == "2");
    CHECK(j.at("systems")[1].at("checks").at("leading_value").at("predicted")
              .at("ell_pow") == -2);
}

TEST_CASE("sign-unstable orbit data is reported without failing the system") {
    const auto d = io::parse_systems_text(
        R"({"name": "neg", "mode": "torus", "matrix": [[-2, -1], [-1, -1]], "p": 2})");
    const auto o = io::verify_system(d[0], 8, 12);
    CHECK(o.orbit_series.status == io::SeriesOutcome::Status::sign_unstable);
    CHECK(o.pass); // the determinant-form clauses all hold
    CHECK(o.report.acyclic);
    CHECK(o.report.ord_equal);
    CHECK(o.report.leading_equal);
}

TEST_CASE("cli: golden reports are byte identical") {
    const std::string out_json = temp_file("report.json");
    const std::string out_md = temp_file("report.md");
    CHECK(run_cli("verify --input " + data_path("corpus.json") + " --report " + out_json +
                  " --format json") == 1);
    CHECK(run_cli("verify --input " + data_path("corpus.json") + " --report " + out_md +
                  " --format md") == 1);
    CHECK(slurp(out_json) == slurp(data_path("golden/corpus_report.json")));
    CHECK(slurp(out_md) == slurp(data_path("golden/corpus_report.md")));

    // a second run reproduces the same bytes
    const std::string again = temp_file("report_again.json");
    CHECK(run_cli("verify --input " + data_path("corpus.json") + " --report " + again +
                  " --format json") == 1);
    CHECK(slurp(again) == slurp(out_json));
    std::remove(out_json.c_str());
    std::remove(out_md.c_str());
    std::remove(again.c_str());
}

TEST_CASE("cli: exit codes follow the contract") {
    // all clauses pass
    CHECK(run_cli("verify --input " + data_path("anosov.json") + " --report " +
                  temp_file("pass.json")) == 0);
    // a clause fails
    CHECK(run_cli("verify --input " + data_path("unipotent.json") + " --report " +
                  temp_file("fail.json")) == 1);
    // unreadable input
    CHECK(run_cli("verify --input " + data_path("no_such_file.json") + " --report " +
                  temp_file("missing.json")) == 2);

    const std::string bad = temp_file("bad_input.json");
    write_file(bad, "{\"name\": \"x\", ");
    CHECK(run_cli("verify --input " + bad + " --report " + temp_file("bad.json")) == 2);
    write_file(bad, R"({"name": "x", "mode": "torus", "matrix": [[2]], "p": 2})");
    CHECK(run_cli("verify --input " + bad + " --report " + temp_file("bad.json")) == 2);
    std::remove(bad.c_str());
    std::remove(temp_file("pass.json").c_str());
    std::remove(temp_file("fail.json").c_str());
}

TEST_CASE("cli: failure paths are reported in the text, not crashes") {
    const std::string out = temp_file("unipotent.md");
    CHECK(run_cli("verify --input " + data_path("unipotent.json") + " --report " + out +
                  " --format md") == 1);
    const std::string text = slurp(out);
    CHECK(text.find("acyclicity: fail") != std::string::npos);
    CHECK(text.find("vanishing order: skipped") != std::string::npos);
    CHECK(text.find("result: FAIL") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("cli: regdet suite passes at its default tolerance") {
    CHECK(run_cli("regdet-suite > " + temp_file("suite.txt")) == 0);
    const std::string text = slurp(temp_file("suite.txt"));
    CHECK(text.find("suite: PASS") != std::string::npos);
    std::remove(temp_file("suite.txt").c_str());
}

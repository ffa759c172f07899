#ifndef ZETAFLOW_IO_JSON_IO_HPP
#define ZETAFLOW_IO_JSON_IO_HPP

// System descriptions and verification reports as JSON. Reports are fully
// deterministic: fixed field order, exact integers rendered as decimal
// strings, no timestamps.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zetaflow/torus/suspension.hpp"
#include "zetaflow/zeta/ruelle.hpp"

namespace zetaflow::io {

using ordered_json = nlohmann::ordered_json;

struct SystemOptions {
    std::optional<int> max_period;
    std::optional<int> series_order;
};

struct SystemDescription {
    enum class Mode { torus, graded };
    std::string name;
    Mode mode = Mode::torus;
    exact::IntMatrix matrix;                // torus mode
    std::vector<exact::IntMatrix> matrices; // graded mode
    torus::PeriodScale ell;
    SystemOptions options;
};

// a document is a single system object or {"systems": [...]}
std::vector<SystemDescription> parse_systems_text(const std::string& text);
std::vector<SystemDescription> load_systems_file(const std::string& path);
ordered_json system_to_json(const SystemDescription& d);

struct SeriesOutcome {
    enum class Status { ok, degenerate_orbits, sign_unstable, not_applicable };
    Status status = Status::not_applicable;
    int degenerate_period = 0;
    int order = 0;
    bool pass = false;
};

struct SystemOutcome {
    SystemDescription desc;
    cdet::HomologySummary cohomology;
    bool semisimple = false;
    torus::PeriodGroup periods;
    zeta::SpecialValueReport report;
    SeriesOutcome trace_series; // alternating traces vs determinant form
    SeriesOutcome orbit_series; // Euler product vs determinant form
    bool pass = false;
};

SystemOutcome verify_system(const SystemDescription& d, int default_max_period,
                            int default_series_order);

ordered_json report_to_json(const std::vector<SystemOutcome>& outcomes);
std::string report_to_markdown(const std::vector<SystemOutcome>& outcomes);

// 2-space indent plus trailing newline, the one true rendering
std::string render_json(const ordered_json& j);

} // namespace zetaflow::io

#endif

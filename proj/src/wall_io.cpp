#include "wallkit/wall_io.hpp"

#include <fstream>

#include <json.hpp>

#include "wallkit/errors.hpp"

namespace wallkit {

using nlohmann::ordered_json;

Wall wall_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::schema_error, std::string("wall JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ground") || !j.contains("bricks"))
        fail(errc::schema_error, "wall JSON needs 'ground' and 'bricks'");
    if (!j["ground"].is_number_integer())
        fail(errc::schema_error, "wall JSON: 'ground' must be an integer");
    int ground = j["ground"].get<int>();
    if (ground < 1 || ground > 16) fail(errc::schema_error, "wall JSON: ground out of range");
    if (!j["bricks"].is_array() || j["bricks"].empty())
        fail(errc::schema_error, "wall JSON: 'bricks' must be a nonempty array");
    std::vector<std::uint32_t> bricks;
    for (const auto& arr : j["bricks"]) {
        if (!arr.is_array()) fail(errc::schema_error, "wall JSON: each brick is an array");
        std::uint32_t mask = 0;
        for (const auto& e : arr) {
            if (!e.is_number_integer()) fail(errc::schema_error, "wall JSON: brick elements are integers");
            int v = e.get<int>();
            if (v < 1 || v > ground) fail(errc::schema_error, "wall JSON: brick element out of range");
            mask |= std::uint32_t(1) << (v - 1);
        }
        if (mask == 0) fail(errc::empty_brick, "wall JSON: empty brick");
        bricks.push_back(mask);
    }
    const int r = static_cast<int>(bricks.size());
    std::vector<std::pair<int, int>> rel;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) fail(errc::schema_error, "wall JSON: 'relations' must be an array");
        for (const auto& pr : j["relations"]) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
                !pr[1].is_number_integer())
                fail(errc::schema_error, "wall JSON: relation entries are [i,j] pairs");
            int a = pr[0].get<int>(), b = pr[1].get<int>();
            if (a < 1 || a > r || b < 1 || b > r)
                fail(errc::schema_error, "wall JSON: relation index out of range");
            rel.emplace_back(a, b);
        }
    }
    Wall w;
    w.ground = ground;
    w.bricks = bricks;
    w.order = transitive_closure(std::move(rel), r); // throws CycleDetected on bad input
    w = canonical_form(w);
    auto report = validate_wall(w);
    if (!report.ok) fail(errc::schema_error, "wall JSON violates invariant: " + report.clause);
    return w;
}

std::string wall_to_json_text(const Wall& w) {
    Wall c = canonical_form(w);
    ordered_json j;
    j["ground"] = c.ground;
    j["bricks"] = ordered_json::array();
    for (auto b : c.bricks) j["bricks"].push_back(mask_elements(b));
    j["relations"] = ordered_json::array();
    for (auto [a, b] : c.order.rel) j["relations"].push_back(std::vector<int>{a, b});
    return j.dump();
}

Wall load_wall_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::schema_error, "cannot open wall file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return wall_from_json_text(text);
}

std::string complex_report_json(const Wall& w, const HomologySummary& summary) {
    ordered_json j;
    j["wall"] = ordered_json::parse(wall_to_json_text(w));
    j["graded_counts"] = summary.graded_counts;
    j["betti"] = summary.betti;
    j["torsion"] = summary.torsion;
    j["d_squared_zero"] = summary.d_squared_zero;
    j["euler"] = summary.euler;
    return j.dump();
}

} // namespace wallkit

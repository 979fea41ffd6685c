#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wallkit/bimod.hpp"
#include "wallkit/colouring.hpp"
#include "wallkit/dimseq.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/verify.hpp"
#include "wallkit/wall_io.hpp"

namespace {

constexpr const char* kArtifactVersion = "wallkit-0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(const wallkit::Error& e) {
    switch (e.code()) {
        case wallkit::errc::budget_exceeded:
            return kExitBudget;
        case wallkit::errc::sign_convention_broken:
        case wallkit::errc::dimension_mismatch:
            return kExitInvariant;
        default:
            return kExitValidation;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) wallkit::fail(wallkit::errc::schema_error, "cannot open output file: " + out_path);
    out << text;
}

// Read-through cache for pure enumeration output, keyed by command
// parameters and the artifact version. Disabled when WALLKIT_CACHE_DIR is
// not set.
std::string cached_or_compute(const std::string& cache_key,
                              const std::function<std::string()>& compute) {
    const char* dir = std::getenv("WALLKIT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return compute();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : cache_key) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::filesystem::path path =
        std::filesystem::path(dir) / ("wallkit-" + std::to_string(h) + ".cache");
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string text = compute();
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    return text;
}

std::string render_enum(int ground, int bricks, bool connected, const std::string& format,
                        const wallkit::WallBudget& budget) {
    auto walls = wallkit::enumerate_walls(ground, bricks, connected, budget);
    std::string text;
    if (format == "csv") {
        text += "index,ground,bricks,relations\n";
        int idx = 1;
        for (const auto& w : walls) {
            std::string bs, rs;
            for (std::size_t i = 0; i < w.bricks.size(); ++i) {
                if (i) bs += "|";
                auto elems = wallkit::mask_elements(w.bricks[i]);
                for (std::size_t t = 0; t < elems.size(); ++t)
                    bs += (t ? " " : "") + std::to_string(elems[t]);
            }
            for (std::size_t t = 0; t < w.order.rel.size(); ++t) {
                if (t) rs += "|";
                rs += std::to_string(w.order.rel[t].first) + "<" +
                      std::to_string(w.order.rel[t].second);
            }
            text += std::to_string(idx++) + "," + std::to_string(w.ground) + "," + bs + "," + rs +
                    "\n";
        }
        text = "count," + std::to_string(walls.size()) + "\n" + text;
    } else {
        text += "{\"count\":" + std::to_string(walls.size()) + ",\"walls\":[";
        for (std::size_t i = 0; i < walls.size(); ++i) {
            if (i) text += ",";
            text += wallkit::wall_to_json_text(walls[i]);
        }
        text += "]}\n";
    }
    return text;
}

std::string render_free_dims(const wallkit::DimSeq& gens, int max_weight, int max_arity,
                             bool with_oracle, const std::string& format,
                             const wallkit::WallBudget& budget) {
    std::ostringstream out;
    const bool csv = format == "csv";
    if (csv) {
        out << "weight,arity,dim,closed2" << (with_oracle ? ",level_oracle" : "") << "\n";
    }
    std::string json = "[";
    bool first = true;
    for (int rho = 1; rho <= max_weight; ++rho)
        for (int n = 1; n <= max_arity; ++n) {
            long long dim = wallkit::free_proto_dims(gens, rho, n, budget);
            std::string closed2 = rho == 2 ? std::to_string(wallkit::free_weight2_closed(gens, n)) : "";
            std::string oracle;
            if (with_oracle) oracle = std::to_string(wallkit::free_proto_dims_level_oracle(gens, rho, n));
            if (csv) {
                out << rho << "," << n << "," << dim << "," << closed2;
                if (with_oracle) out << "," << oracle;
                out << "\n";
            } else {
                if (!first) json += ",";
                first = false;
                json += "{\"weight\":" + std::to_string(rho) + ",\"arity\":" + std::to_string(n) +
                        ",\"dim\":" + std::to_string(dim);
                if (!closed2.empty()) json += ",\"closed2\":" + closed2;
                if (with_oracle) json += ",\"level_oracle\":" + oracle;
                json += "}";
            }
        }
    if (!csv) return json + "]\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wall calculus toolkit"};
    app.require_subcommand(1);

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "enumerate canonical walls");
    int ground = 0, bricks = 0;
    bool connected = false;
    std::string format = "json", out_path;
    int budget_ground = 6, budget_bricks = 6;
    cmd_enum->add_option("--ground", ground, "ground set size")->required();
    cmd_enum->add_option("--bricks", bricks, "number of bricks")->required();
    cmd_enum->add_flag("--connected", connected, "restrict to connected walls");
    cmd_enum->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_enum->add_option("--out", out_path, "output path (default stdout)");
    cmd_enum->add_option("--budget-ground", budget_ground, "enumeration guard override");
    cmd_enum->add_option("--budget-bricks", budget_bricks, "enumeration guard override");

    // free-dims
    auto* cmd_free = app.add_subcommand("free-dims", "free protoperad dimension table");
    std::string gens_text;
    int max_weight = 2, max_arity = 4;
    bool with_oracle = false;
    std::string free_format = "csv", free_out;
    cmd_free->add_option("--gens", gens_text, "generator dims, e.g. \"0,1\"")->required();
    cmd_free->add_option("--max-weight", max_weight, "largest weight");
    cmd_free->add_option("--max-arity", max_arity, "largest arity");
    cmd_free->add_flag("--oracle", with_oracle, "add the levelled-partition column");
    cmd_free->add_option("--format", free_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_free->add_option("--out", free_out, "output path (default stdout)");

    // colouring
    auto* cmd_col = app.add_subcommand("colouring", "colouring complex report for a wall file");
    std::string wall_path, col_out;
    bool with_betti = true, with_d2 = true;
    cmd_col->add_option("wall", wall_path, "wall JSON file")->required();
    cmd_col->add_flag("--betti", with_betti, "include Betti numbers (always on)");
    cmd_col->add_flag("--check-d2", with_d2, "verify d^2 = 0 (always on)");
    cmd_col->add_option("--out", col_out, "output path (default stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    int vmax_ground = 3, vmax_bricks = 4;
    bool corrupt_signs = false;
    cmd_verify->add_option("--max-ground", vmax_ground, "wall sweep ground bound");
    cmd_verify->add_option("--max-bricks", vmax_bricks, "wall sweep brick bound");
    cmd_verify->add_flag("--corrupt-signs", corrupt_signs, "negative control for the sign rule")
        ->group(""); // hidden
    std::string verify_out;
    cmd_verify->add_option("--out", verify_out, "output path (default stdout)");

    // ind-check
    auto* cmd_ind = app.add_subcommand("ind-check", "induction functor monoidality table");
    std::string gens_v, gens_w;
    int ind_arity = 3;
    std::string ind_out;
    cmd_ind->add_option("--gens-v", gens_v, "dims of v")->required();
    cmd_ind->add_option("--gens-w", gens_w, "dims of w")->required();
    cmd_ind->add_option("--max-arity", ind_arity, "largest arity (at most 4)");
    cmd_ind->add_option("--out", ind_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_enum->parsed()) {
            wallkit::WallBudget budget{budget_ground, budget_bricks};
            std::string key = std::string(kArtifactVersion) + "|enum|" + std::to_string(ground) +
                              "|" + std::to_string(bricks) + "|" + (connected ? "c" : "a") + "|" +
                              format;
            std::string text = cached_or_compute(
                key, [&] { return render_enum(ground, bricks, connected, format, budget); });
            emit(text, out_path);
        } else if (cmd_free->parsed()) {
            wallkit::DimSeq gens = wallkit::parse_dimseq(gens_text);
            if (max_weight < 1 || max_arity < 1)
                wallkit::fail(wallkit::errc::budget_exceeded, "weight and arity must be positive");
            if (with_oracle && (max_weight > 4 || max_arity > 4))
                wallkit::fail(wallkit::errc::budget_exceeded,
                              "--oracle limited to weight <= 4 and arity <= 4");
            wallkit::WallBudget budget;
            emit(render_free_dims(gens, max_weight, max_arity, with_oracle, free_format, budget),
                 free_out);
        } else if (cmd_col->parsed()) {
            wallkit::Wall w = wallkit::load_wall_file(wall_path);
            auto cx = wallkit::build_complex(w);
            auto summary = wallkit::betti_numbers(cx);
            emit(wallkit::complex_report_json(w, summary) + "\n", col_out);
        } else if (cmd_verify->parsed()) {
            wallkit::VerifyOptions opts;
            opts.max_ground = vmax_ground;
            opts.max_bricks = vmax_bricks;
            opts.corrupt_signs = corrupt_signs;
            auto results = wallkit::run_verification(opts);
            std::string text;
            bool all_pass = true;
            for (const auto& r : results) {
                text += (r.pass ? "PASS " : "FAIL ") + r.name;
                if (!r.pass) {
                    text += ": " + r.detail;
                    all_pass = false;
                }
                text += "\n";
            }
            emit(text, verify_out);
            return all_pass ? kExitOk : kExitInvariant;
        } else if (cmd_ind->parsed()) {
            if (ind_arity < 1 || ind_arity > 4)
                wallkit::fail(wallkit::errc::budget_exceeded, "ind-check arity must be in 1..4");
            wallkit::DimSeq v = wallkit::parse_dimseq(gens_v);
            wallkit::DimSeq w = wallkit::parse_dimseq(gens_w);
            wallkit::DimSeq box = wallkit::boxtimes_dims(v, w, ind_arity);
            std::string text = "arity,lhs_n_factorial_boxtimes,rhs_induced_product,verdict\n";
            bool all_equal = true;
            for (int n = 1; n <= ind_arity; ++n) {
                long long lhs = wallkit::factorial(n) * box.at(n);
                long long rhs = wallkit::val_boxtimes_induced_dims(v, w, n);
                bool eq = lhs == rhs;
                all_equal = all_equal && eq;
                text += std::to_string(n) + "," + std::to_string(lhs) + "," + std::to_string(rhs) +
                        "," + (eq ? "equal" : "DIFFER") + "\n";
            }
            emit(text, ind_out);
            return all_equal ? kExitOk : kExitInvariant;
        }
    } catch (const wallkit::Error& e) {
        std::cerr << "error (" << wallkit::errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

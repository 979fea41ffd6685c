#ifndef WALLKIT_VERIFY_HPP
#define WALLKIT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace wallkit {

struct VerifyOptions {
    int max_ground = 3;
    int max_bricks = 4;
    bool corrupt_signs = false; // negative control for the sign convention
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Each check returns nullopt on success, a short failure detail otherwise.
namespace checks {
std::optional<std::string> walls_validate(int max_ground, int max_bricks);
std::optional<std::string> free_action_count(int max_ground, int max_bricks);
std::optional<std::string> kappa_associative(int max_ground);
std::optional<std::string> interchange_law(int max_ground, int max_total_bricks);
std::optional<std::string> weight2_count_identity(int max_ground);
std::optional<std::string> xconn_kappa(int max_ground);
std::optional<std::string> slog_inverse(int n_max);
std::optional<std::string> s_permute_boxtimes(int n_max);
std::optional<std::string> exponential_property(int n_max);
std::optional<std::string> boxtimes_laws(int n_max);
std::optional<std::string> free_dims_agreement(int max_rho, int max_arity);
std::optional<std::string> ind_monoidality(int max_arity);
std::optional<std::string> phi_psi_section(int max_degree);
std::optional<std::string> colouring_sweep(int max_ground, int max_bricks);
std::optional<std::string> colouring_aut_invariance(int max_ground, int max_bricks);
std::optional<std::string> res_counterexamples();
std::optional<std::string> graft_associativity(int max_ground);
} // namespace checks

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

} // namespace wallkit

#endif

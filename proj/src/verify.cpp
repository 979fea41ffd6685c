#include "wallkit/verify.hpp"

#include <algorithm>
#include <random>

#include "wallkit/bimod.hpp"
#include "wallkit/colouring.hpp"
#include "wallkit/dimseq.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/wall.hpp"

namespace wallkit {
namespace checks {

namespace {

std::optional<std::string> ok() { return std::nullopt; }

std::vector<Wall> all_walls_up_to(int max_ground, int max_bricks, const WallBudget& budget) {
    std::vector<Wall> out;
    for (int n = 1; n <= max_ground; ++n)
        for (int r = 1; r <= max_bricks; ++r)
            for (auto& w : enumerate_walls(n, r, false, budget)) out.push_back(std::move(w));
    return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            self(self, rest - k);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Independent enumeration of ordered walls: brick tuples paired with every
// strict poset that is fiber-total and generated by intersecting pairs.
long long count_ordered_walls_direct(int ground, int r) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 1; a <= r; ++a)
        for (int b = 1; b <= r; ++b)
            if (a != b) all_pairs.emplace_back(a, b);
    std::vector<StrictPoset> posets;
    for (std::uint32_t sel = 0; sel < (std::uint32_t(1) << all_pairs.size()); ++sel) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t t = 0; t < all_pairs.size(); ++t)
            if (sel >> t & 1) rel.push_back(all_pairs[t]);
        try {
            StrictPoset p = transitive_closure(rel, r);
            if (p.rel == rel) posets.push_back(std::move(p));
        } catch (const Error&) {
        }
    }
    const std::uint32_t top = (std::uint32_t(1) << ground) - 1;
    std::vector<std::uint32_t> seq(static_cast<std::size_t>(r), 1);
    long long count = 0;
    while (true) {
        std::uint32_t covered = 0;
        for (auto b : seq) covered |= b;
        if (covered == top) {
            for (const auto& p : posets) {
                bool good = true;
                std::vector<std::pair<int, int>> gen;
                for (int a = 1; a <= r && good; ++a)
                    for (int b = a + 1; b <= r && good; ++b)
                        if (seq[static_cast<std::size_t>(a - 1)] & seq[static_cast<std::size_t>(b - 1)]) {
                            if (!p.comparable(a, b)) good = false;
                        }
                if (!good) continue;
                for (auto [a, b] : p.rel)
                    if (seq[static_cast<std::size_t>(a - 1)] & seq[static_cast<std::size_t>(b - 1)]) gen.emplace_back(a, b);
                if (transitive_closure(gen, r) == p) ++count;
            }
        }
        int i = r - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == top) --i;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
        std::fill(seq.begin() + i + 1, seq.end(), 1);
    }
    return count;
}

DimSeq random_dims(std::mt19937& rng, int n_max, int cap) {
    std::uniform_int_distribution<int> dist(0, cap);
    std::vector<long long> d;
    for (int i = 0; i < n_max; ++i) d.push_back(dist(rng));
    return DimSeq(std::move(d));
}

} // namespace

std::optional<std::string> walls_validate(int max_ground, int max_bricks) {
    WallBudget budget{std::max(max_ground, 6), std::max(max_bricks, 6)};
    for (const auto& w : all_walls_up_to(max_ground, max_bricks, budget)) {
        auto rep = validate_wall(w);
        if (!rep.ok) return "enumerated wall fails validation: " + rep.clause;
        if (!(canonical_form(w) == w)) return "canonical form is not idempotent";
    }
    return ok();
}

std::optional<std::string> free_action_count(int max_ground, int max_bricks) {
    for (int n = 1; n <= std::min(max_ground, 3); ++n)
        for (int r = 1; r <= std::min(max_bricks, 3); ++r) {
            long long via_quotient = count_ordered_walls(n, r);
            long long direct = count_ordered_walls_direct(n, r);
            if (via_quotient != direct)
                return "ordered wall counts disagree at (" + std::to_string(n) + "," +
                       std::to_string(r) + "): " + std::to_string(via_quotient) + " vs " +
                       std::to_string(direct);
        }
    return ok();
}

std::optional<std::string> kappa_associative(int max_ground) {
    for (int n = 1; n <= std::min(max_ground, 4); ++n) {
        auto parts = enumerate_partitions(n);
        for (const auto& i : parts)
            for (const auto& j : parts)
                for (const auto& l : parts) {
                    auto left = kappa_pair(kappa_pair(i, j), l);
                    auto right = kappa_pair(i, kappa_pair(j, l));
                    if (!(left == right)) return "kappa fails associativity at n=" + std::to_string(n);
                }
    }
    return ok();
}

std::optional<std::string> interchange_law(int max_ground, int max_total_bricks) {
    WallBudget budget;
    for (int s = 1; s <= std::min(max_ground, 3); ++s)
        for (int t = 1; t <= std::min(max_ground, 3); ++t) {
            std::vector<Wall> over_s, over_t;
            for (int r = 1; r < max_total_bricks; ++r) {
                for (auto& w : enumerate_walls(s, r, false, budget)) over_s.push_back(std::move(w));
                for (auto& w : enumerate_walls(t, r, false, budget)) over_t.push_back(std::move(w));
            }
            for (const auto& a : over_s)
                for (const auto& b : over_s) {
                    if (a.brick_count() + b.brick_count() > max_total_bricks) continue;
                    for (const auto& c : over_t)
                        for (const auto& d : over_t) {
                            if (c.brick_count() + d.brick_count() > max_total_bricks) continue;
                            Wall lhs = horizontal_product(vertical_product(a, b),
                                                          vertical_product(c, d));
                            Wall rhs = vertical_product(horizontal_product(a, c),
                                                        horizontal_product(b, d));
                            if (!(lhs == rhs)) return "interchange law fails";
                        }
                }
        }
    return ok();
}

std::optional<std::string> weight2_count_identity(int max_ground) {
    for (int n = 1; n <= std::min(max_ground, 5); ++n) {
        long long walls = static_cast<long long>(enumerate_walls(n, 2, true).size());
        long long pairs = 0;
        const std::uint32_t full = (std::uint32_t(1) << n) - 1;
        for (std::uint32_t k = 1; k <= full; ++k)
            for (std::uint32_t l = 1; l <= full; ++l)
                if ((k | l) == full && (k & l)) ++pairs;
        if (walls != pairs)
            return "two-brick connected wall count mismatch at n=" + std::to_string(n);
    }
    return ok();
}

std::optional<std::string> xconn_kappa(int max_ground) {
    for (int n = 1; n <= std::min(max_ground, 4); ++n)
        for (const auto& pr : enumerate_xconn(n)) {
            if (kappa(wall_from_partition_pair(pr)).blocks.size() != 1)
                return "xconn pair builds a disconnected wall";
        }
    return ok();
}

std::optional<std::string> slog_inverse(int n_max) {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 25; ++trial) {
        DimSeq p = random_dims(rng, n_max, 3);
        if (!(s_log(s_dims(p, n_max), n_max) == p)) return "s_log does not invert s_dims";
    }
    return ok();
}

std::optional<std::string> s_permute_boxtimes(int n_max) {
    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 10; ++trial) {
        DimSeq p = random_dims(rng, n_max, 2);
        DimSeq q = random_dims(rng, n_max, 2);
        DimSeq lhs = s_dims(boxtimes_dims(p, q, n_max), n_max);
        DimSeq rhs = hadamard_dims(s_dims(p, n_max), s_dims(q, n_max), n_max);
        if (!(lhs == rhs)) return "S(P box Q) != SP . SQ";
    }
    return ok();
}

std::optional<std::string> exponential_property(int n_max) {
    std::mt19937 rng(20240903);
    for (int trial = 0; trial < 10; ++trial) {
        DimSeq p = random_dims(rng, n_max, 2);
        DimSeq q = random_dims(rng, n_max, 2);
        DimSeq sp = s_dims(p, n_max), sq = s_dims(q, n_max);
        DimSeq lhs = s_dims(p + q, n_max);
        DimSeq rhs = sp + sq + conc_dims(sp, sq, n_max);
        if (!(lhs == rhs)) return "exponential property fails";
    }
    return ok();
}

std::optional<std::string> boxtimes_laws(int n_max) {
    std::mt19937 rng(20240904);
    DimSeq unit = DimSeq::delta(1, n_max);
    for (int trial = 0; trial < 6; ++trial) {
        DimSeq p = random_dims(rng, n_max, 2);
        DimSeq q = random_dims(rng, n_max, 2);
        DimSeq r = random_dims(rng, n_max, 2);
        if (!(boxtimes_dims(p, unit, n_max) == p)) return "unit law fails";
        if (!(boxtimes_dims(p, q, n_max) == boxtimes_dims(q, p, n_max))) return "symmetry fails";
        DimSeq left = boxtimes_dims(boxtimes_dims(p, q, n_max), r, n_max);
        DimSeq right = boxtimes_dims(p, boxtimes_dims(q, r, n_max), n_max);
        if (!(left == right)) return "associativity fails";
    }
    return ok();
}

std::optional<std::string> free_dims_agreement(int max_rho, int max_arity) {
    std::vector<DimSeq> gens = {DimSeq::delta(1, 4), DimSeq::delta(2, 4),
                                DimSeq({1, 1}), DimSeq({1, 1, 1})};
    for (const auto& gen : gens)
        for (int rho = 1; rho <= max_rho; ++rho)
            for (int n = 1; n <= max_arity; ++n) {
                long long wall_path = free_proto_dims(gen, rho, n);
                long long level_path = free_proto_dims_level_oracle(gen, rho, n);
                if (wall_path != level_path)
                    return "free protoperad paths disagree (rho=" + std::to_string(rho) +
                           ", n=" + std::to_string(n) + "): " + std::to_string(wall_path) +
                           " vs " + std::to_string(level_path);
                if (rho == 2 && wall_path != free_weight2_closed(gen, n))
                    return "weight-2 closed form disagrees at n=" + std::to_string(n);
            }
    return ok();
}

std::optional<std::string> ind_monoidality(int max_arity) {
    std::vector<DimSeq> gens = {DimSeq::delta(1, 4), DimSeq::delta(2, 4), DimSeq({1, 1})};
    for (const auto& v : gens)
        for (const auto& w : gens) {
            DimSeq box = boxtimes_dims(v, w, max_arity);
            for (int n = 1; n <= max_arity; ++n) {
                long long lhs = val_boxtimes_induced_dims(v, w, n);
                long long rhs = factorial(n) * box.at(n);
                if (lhs != rhs)
                    return "Ind monoidality fails at n=" + std::to_string(n) + ": " +
                           std::to_string(lhs) + " vs " + std::to_string(rhs);
            }
        }
    return ok();
}

std::optional<std::string> phi_psi_section(int max_degree) {
    for (int N = 1; N <= max_degree; ++N) {
        auto comps = compositions_of(N);
        for (const auto& kbar : comps)
            for (const auto& jbar : comps) {
                auto connected = connected_permutations(jbar, kbar);
                for (const auto& sigma : connected) {
                    auto [K, J] = section(sigma, kbar, jbar);
                    if (partition_pair_to_connected_permutation(K, J) != sigma)
                        return "phi(psi(sigma)) != sigma at N=" + std::to_string(N);
                }
                // Image of phi over connected listed pairs equals the
                // connected permutation set.
                std::vector<Perm> image;
                auto listed = [&](const std::vector<int>& profile) {
                    std::vector<OrderedPartition> out;
                    for (const auto& perm : all_permutations(N)) {
                        OrderedPartition p;
                        int at = 0;
                        for (int sz : profile) {
                            p.emplace_back(perm.begin() + at, perm.begin() + at + sz);
                            at += sz;
                        }
                        out.push_back(std::move(p));
                    }
                    return out;
                };
                auto as_partition = [&](const OrderedPartition& p) {
                    std::vector<std::uint32_t> blocks;
                    for (const auto& b : p) {
                        std::uint32_t m = 0;
                        for (int e : b) m |= std::uint32_t(1) << (e - 1);
                        blocks.push_back(m);
                    }
                    return make_partition(N, blocks);
                };
                for (const auto& K : listed(kbar))
                    for (const auto& J : listed(jbar)) {
                        if (!partition_pair_connected(as_partition(K), as_partition(J))) continue;
                        Perm sigma = partition_pair_to_connected_permutation(K, J);
                        if (!is_connected_permutation(sigma, jbar, kbar))
                            return "phi image leaves the connected set at N=" + std::to_string(N);
                        image.push_back(std::move(sigma));
                    }
                std::sort(image.begin(), image.end());
                image.erase(std::unique(image.begin(), image.end()), image.end());
                if (image != connected)
                    return "phi is not surjective at N=" + std::to_string(N);
            }
    }
    return ok();
}

std::optional<std::string> colouring_sweep(int max_ground, int max_bricks) {
    WallBudget budget{std::max(max_ground, 6), std::max(max_bricks, 6)};
    for (const auto& w : all_walls_up_to(max_ground, max_bricks, budget)) {
        IntegerChainComplex cx;
        try {
            cx = build_complex(w); // raises SignConventionBroken when d^2 != 0
        } catch (const Error& e) {
            return std::string("complex construction failed: ") + e.what();
        }
        auto s = betti_numbers(cx);
        bool has_succ = !succ_pairs(w.order).empty();
        if (has_succ) {
            if (!s.acyclic()) return "wall with successors has nonzero homology";
            if (s.euler != 0) return "wall with successors has nonzero Euler characteristic";
        } else {
            for (int k = 1; k <= static_cast<int>(s.betti.size()); ++k) {
                long long expect = (k == w.brick_count()) ? 1 : 0;
                if (s.betti[static_cast<std::size_t>(k - 1)] != expect)
                    return "successor-free wall homology is not rank 1 in top degree";
            }
            if (s.euler != (w.brick_count() % 2 == 0 ? 1 : -1))
                return "successor-free wall has wrong Euler characteristic";
        }
    }
    return ok();
}

std::optional<std::string> colouring_aut_invariance(int max_ground, int max_bricks) {
    WallBudget budget;
    for (int n = 1; n <= std::min(max_ground, 3); ++n)
        for (int r = 1; r <= std::min(max_bricks, 3); ++r)
            for (const auto& w : enumerate_walls(n, r, false, budget)) {
                auto counts = [&](const Wall& v) {
                    std::vector<std::size_t> out;
                    for (const auto& lvl : enumerate_colourings(v)) out.push_back(lvl.size());
                    return out;
                };
                auto base = counts(w);
                for (const auto& sigma : all_permutations(n))
                    if (counts(aut_action(w, sigma)) != base)
                        return "colouring counts change under the ground action";
            }
    return ok();
}

std::optional<std::string> res_counterexamples() {
    // First counterexample: P(1,1)=P(1,2)=1, Q(1,1)=Q(2,1)=1; trivial actions.
    BimodDimGrid p, q;
    p.set(1, 1, 1);
    p.set(1, 2, 1);
    q.set(1, 1, 1);
    q.set(2, 1, 1);
    auto pq = bimod_compose_dims(p, q, CoinvariantMode::trivial_action, 2, 2, 2);
    long long lhs = res_dims(pq, 2).at(1);
    DimSeq rp = res_dims(p, 2), rq = res_dims(q, 2);
    long long rhs = hadamard_dims(rp, rq, 2).at(1);
    if (lhs != 2 || rhs != 1) return "composition counterexample values off";
    // Second: P(1,2)=1, Q(2,1)=1; restriction kills both factors.
    BimodDimGrid p2, q2;
    p2.set(1, 2, 1);
    q2.set(2, 1, 1);
    auto conc = bimod_conc_dims(p2, q2, 3, 3);
    long long diag3 = res_dims(conc, 3).at(3);
    long long split = conc_dims(res_dims(p2, 3), res_dims(q2, 3), 3).at(3);
    if (diag3 < 1 || split != 0) return "concatenation counterexample values off";
    return ok();
}

namespace {

// Increasing injection that realizes `sub` as a subset of `sup`, written in
// the positions of sup's elements.
std::vector<int> subinjection(std::uint32_t sub, std::uint32_t sup) {
    std::vector<int> inj;
    auto sup_elems = mask_elements(sup);
    for (int e : mask_elements(sub)) {
        auto it = std::find(sup_elems.begin(), sup_elems.end(), e);
        inj.push_back(static_cast<int>(it - sup_elems.begin()) + 1);
    }
    return inj;
}

} // namespace

std::optional<std::string> graft_associativity(int max_ground) {
    const int T = std::min(max_ground, 3);
    auto single = [](std::uint32_t mask) {
        std::vector<std::uint32_t> b{(std::uint32_t(1) << mask_size(mask)) - 1};
        return wall_from_brick_sequence(mask_size(mask), b);
    };
    const std::uint32_t full = (std::uint32_t(1) << T) - 1;
    for (std::uint32_t M = 1; M <= full; ++M)
        for (std::uint32_t N = 1; N <= full; ++N)
            for (std::uint32_t U = 1; U <= full; ++U) {
                if ((M | N | U) != full) continue;
                std::uint32_t R = M | N, S = N | U;
                Wall wm = single(M), wn = single(N), wu = single(U);
                auto rel = subinjection;
                // Axiom H: staircase M below N below U.
                if ((M & N) && (N & U)) {
                    Wall ws = graft(rel(N, S), rel(U, S), wn, wu, mask_size(S));
                    Wall left = graft(rel(M, full), rel(S, full), wm, ws, T);
                    Wall wr = graft(rel(M, R), rel(N, R), wm, wn, mask_size(R));
                    Wall right = graft(rel(R, full), rel(U, full), wr, wu, T);
                    if (!(left == right)) return "graft axiom H fails";
                }
                // Axiom V: N below both M and U, tops disjoint.
                if ((N & M) && (N & U) && !(M & U)) {
                    Wall ws = graft(rel(N, S), rel(U, S), wn, wu, mask_size(S)); // N below U
                    Wall left = graft(rel(S, full), rel(M, full), ws, wm, T);    // then M on top
                    Wall wr = graft(rel(N, R), rel(M, R), wn, wm, mask_size(R)); // N below M
                    Wall right = graft(rel(R, full), rel(U, full), wr, wu, T);   // then U on top
                    if (!(left == right)) return "graft axiom V fails";
                }
                // Axiom Lambda: M and U both below N, bottoms disjoint.
                if ((M & N) && (U & N) && !(M & U)) {
                    Wall ws = graft(rel(U, S), rel(N, S), wu, wn, mask_size(S)); // U below N
                    Wall left = graft(rel(M, full), rel(S, full), wm, ws, T);    // M below the rest
                    Wall wr = graft(rel(M, R), rel(N, R), wm, wn, mask_size(R)); // M below N
                    Wall right = graft(rel(U, full), rel(R, full), wu, wr, T);   // U below the rest
                    if (!(left == right)) return "graft axiom Lambda fails";
                }
            }
    return ok();
}

} // namespace checks

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const int G = opts.max_ground, B = opts.max_bricks;
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, std::optional<std::string> outcome) {
        results.push_back({name, !outcome.has_value(), outcome.value_or("")});
    };
    add("walls-validate", checks::walls_validate(G, B));
    add("free-action-count", checks::free_action_count(G, B));
    add("kappa-associative", checks::kappa_associative(G));
    add("interchange-law", checks::interchange_law(G, 3));
    add("weight2-count-identity", checks::weight2_count_identity(G));
    add("xconn-kappa", checks::xconn_kappa(G));
    add("slog-inverse", checks::slog_inverse(8));
    add("s-permute-boxtimes", checks::s_permute_boxtimes(6));
    add("exponential-property", checks::exponential_property(6));
    add("boxtimes-laws", checks::boxtimes_laws(5));
    add("free-dims-agreement", checks::free_dims_agreement(3, std::min(G + 1, 4)));
    add("ind-monoidality", checks::ind_monoidality(3));
    add("phi-psi-section", checks::phi_psi_section(3));
    add("graft-associativity", checks::graft_associativity(G));
    {
        if (opts.corrupt_signs) detail::sign_corruption.store(1);
        add("colouring-d2-acyclicity", checks::colouring_sweep(G, B));
        if (opts.corrupt_signs) detail::sign_corruption.store(0);
    }
    add("colouring-aut-invariance", checks::colouring_aut_invariance(G, B));
    add("res-counterexamples", checks::res_counterexamples());
    return results;
}

} // namespace wallkit

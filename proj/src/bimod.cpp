#include "wallkit/bimod.hpp"

#include <algorithm>
#include <numeric>

#include "wallkit/errors.hpp"

namespace wallkit {

long long BimodDimGrid::at(int m, int n) const {
    if (m < 1 || n < 1) return 0;
    auto it = entries_.find({m, n});
    return it == entries_.end() ? 0 : it->second;
}

void BimodDimGrid::set(int m, int n, long long value) {
    if (m < 1 || n < 1) fail(errc::index_out_of_range, "grid indices must be positive");
    if (value < 0) fail(errc::negative_dimension, "grid entries must be nonnegative");
    if (value == 0)
        entries_.erase({m, n});
    else
        entries_[{m, n}] = value;
}

BimodDimGrid ind_dims(const DimSeq& v, int n_max) {
    BimodDimGrid g;
    for (int n = 1; n <= n_max; ++n) g.set(n, n, factorial(n) * v.at(n));
    return g;
}

DimSeq res_dims(const BimodDimGrid& g, int n_max) {
    DimSeq d = DimSeq::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) d.set(n, g.at(n, n));
    return d;
}

BimodDimGrid bimod_compose_dims(const BimodDimGrid& p, const BimodDimGrid& q,
                                std::optional<CoinvariantMode> mode, int max_inner,
                                int max_out, int max_in) {
    if (!mode)
        fail(errc::freeness_not_asserted,
             "composition of dimension grids requires an asserted coinvariant mode");
    BimodDimGrid out;
    for (int m = 1; m <= max_out; ++m)
        for (int n = 1; n <= max_in; ++n) {
            long long acc = 0;
            for (int N = 1; N <= max_inner; ++N) {
                long long term = p.at(m, N) * q.at(N, n);
                if (term == 0) continue;
                if (*mode == CoinvariantMode::free_right_action) {
                    long long f = factorial(N);
                    if (term % f != 0)
                        fail(errc::dimension_mismatch,
                             "free coinvariants are not integral; action cannot be free");
                    term /= f;
                }
                acc += term;
            }
            out.set(m, n, acc);
        }
    return out;
}

BimodDimGrid identity_compose_grid(int n_max) {
    BimodDimGrid g;
    for (int n = 1; n <= n_max; ++n) g.set(n, n, factorial(n));
    return g;
}

BimodDimGrid bimod_conc_dims(const BimodDimGrid& p, const BimodDimGrid& q, int max_out,
                             int max_in) {
    BimodDimGrid out;
    for (int m = 1; m <= max_out; ++m)
        for (int n = 1; n <= max_in; ++n) {
            long long acc = 0;
            for (int a = 1; a <= m - 1; ++a)
                for (int b = 1; b <= n - 1; ++b)
                    acc += binomial(m, a) * binomial(n, b) * p.at(a, b) * q.at(m - a, n - b);
            out.set(m, n, acc);
        }
    return out;
}

namespace {

std::vector<int> group_of_positions(const std::vector<int>& sizes) {
    std::vector<int> g;
    for (std::size_t a = 0; a < sizes.size(); ++a)
        for (int t = 0; t < sizes[a]; ++t) g.push_back(static_cast<int>(a));
    return g;
}

} // namespace

bool is_connected_permutation(const Perm& sigma, const std::vector<int>& alpha,
                              const std::vector<int>& beta) {
    const int N = static_cast<int>(sigma.size());
    auto ga = group_of_positions(alpha);
    auto gb = group_of_positions(beta);
    if (static_cast<int>(ga.size()) != N || static_cast<int>(gb.size()) != N)
        fail(errc::size_mismatch, "grouping tuples must sum to the permutation size");
    const int na = static_cast<int>(alpha.size()), nb = static_cast<int>(beta.size());
    std::vector<int> parent(static_cast<std::size_t>(na + nb));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= N; ++i) parent[find(ga[i - 1])] = find(na + gb[sigma[i - 1] - 1]);
    int root = find(0);
    for (int v = 1; v < na + nb; ++v)
        if (find(v) != root) return false;
    return true;
}

std::vector<Perm> connected_permutations(const std::vector<int>& alpha,
                                         const std::vector<int>& beta) {
    long long suma = std::accumulate(alpha.begin(), alpha.end(), 0LL);
    long long sumb = std::accumulate(beta.begin(), beta.end(), 0LL);
    if (suma != sumb) fail(errc::size_mismatch, "grouping tuples have different totals");
    if (suma < 1 || suma > 8) fail(errc::budget_exceeded, "permutation degree out of budget");
    const int N = static_cast<int>(suma);
    Perm sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<Perm> out;
    do {
        if (is_connected_permutation(sigma, alpha, beta)) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace {

std::vector<int> listing(const OrderedPartition& p) {
    std::vector<int> out;
    for (const auto& block : p) out.insert(out.end(), block.begin(), block.end());
    return out;
}

void check_listing_is_permutation(const std::vector<int>& l) {
    std::vector<bool> seen(l.size(), false);
    for (int v : l) {
        if (v < 1 || v > static_cast<int>(l.size()) || seen[static_cast<std::size_t>(v - 1)])
            fail(errc::size_mismatch, "block listing is not a permutation of 1..N");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

} // namespace

Perm partition_pair_to_connected_permutation(const OrderedPartition& K,
                                             const OrderedPartition& J) {
    auto lk = listing(K);
    auto lj = listing(J);
    if (lk.size() != lj.size()) fail(errc::size_mismatch, "partition pair sizes disagree");
    check_listing_is_permutation(lk);
    check_listing_is_permutation(lj);
    const int N = static_cast<int>(lk.size());
    std::vector<int> pos_in_k(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) pos_in_k[static_cast<std::size_t>(lk[i - 1] - 1)] = i;
    Perm out(static_cast<std::size_t>(N));
    for (int x = 1; x <= N; ++x) out[x - 1] = pos_in_k[static_cast<std::size_t>(lj[x - 1] - 1)];
    return out;
}

std::pair<OrderedPartition, OrderedPartition> section(const Perm& sigma,
                                                      const std::vector<int>& kbar,
                                                      const std::vector<int>& jbar) {
    const int N = static_cast<int>(sigma.size());
    long long sk = std::accumulate(kbar.begin(), kbar.end(), 0LL);
    long long sj = std::accumulate(jbar.begin(), jbar.end(), 0LL);
    if (sk != N || sj != N) fail(errc::size_mismatch, "block sizes do not match the permutation");
    Perm inv(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) inv[static_cast<std::size_t>(sigma[i - 1] - 1)] = i;
    OrderedPartition K, J;
    int at = 0;
    for (int sz : kbar) {
        std::vector<int> block;
        for (int t = 0; t < sz; ++t) block.push_back(inv[static_cast<std::size_t>(at + t)]);
        K.push_back(std::move(block));
        at += sz;
    }
    at = 0;
    for (int sz : jbar) {
        std::vector<int> block;
        for (int t = 0; t < sz; ++t) block.push_back(at + t + 1);
        J.push_back(std::move(block));
        at += sz;
    }
    return {K, J};
}

namespace {

// One summand side of the pre-quotient index set: an unordered matching of
// blocks; `left`/`right` are aligned block masks.
struct Matching {
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
};

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for (const auto& part : enumerate_partitions(n)) {
        const int r = static_cast<int>(part.blocks.size());
        for (const auto& ordered : enumerate_ordered_partitions(n, r))
            out.push_back({part.blocks, ordered});
    }
    return out;
}

} // namespace

long long val_boxtimes_induced_dims(const DimSeq& v, const DimSeq& w, int n) {
    if (n < 1) fail(errc::index_out_of_range, "arity must be positive");
    if (n > 4) fail(errc::budget_exceeded, "val_boxtimes_induced_dims: n beyond budget (4)");
    auto matchings = enumerate_matchings(n);
    struct Side {
        long long weight;
        SetPartition inner;
    };
    auto sides = [&](const DimSeq& dims, bool inner_is_right) {
        std::vector<Side> res;
        for (const auto& m : matchings) {
            long long weight = 1;
            bool ok = true;
            for (std::size_t t = 0; t < m.left.size() && ok; ++t) {
                int a = mask_size(m.left[t]), b = mask_size(m.right[t]);
                if (a != b)
                    ok = false;
                else
                    weight *= factorial(a) * dims.at(a);
            }
            if (!ok || weight == 0) continue;
            res.push_back({weight, make_partition(n, inner_is_right ? m.right : m.left)});
        }
        return res;
    };
    auto first = sides(v, true);   // {I, K'}: K' is the inner partition
    auto second = sides(w, false); // {K'', J}: K'' is the inner partition
    long long total = 0;
    for (const auto& a : first)
        for (const auto& b : second)
            if (partition_pair_connected(a.inner, b.inner)) total += a.weight * b.weight;
    long long f = factorial(n);
    if (total % f != 0)
        fail(errc::dimension_mismatch, "coinvariant total not divisible by n!");
    return total / f;
}

} // namespace wallkit

#include "wallkit/dimseq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "wallkit/errors.hpp"

namespace wallkit {

DimSeq::DimSeq(std::vector<long long> dims) : dims_(std::move(dims)) {
    for (auto d : dims_)
        if (d < 0) fail(errc::negative_dimension, "dimension entries must be nonnegative");
}

DimSeq DimSeq::zeros(int n_max) { return DimSeq(std::vector<long long>(static_cast<std::size_t>(n_max), 0)); }

DimSeq DimSeq::delta(int arity, int n_max) {
    DimSeq d = zeros(n_max);
    d.set(arity, 1);
    return d;
}

DimSeq DimSeq::ones(int n_max) { return DimSeq(std::vector<long long>(static_cast<std::size_t>(n_max), 1)); }

long long DimSeq::at(int arity) const {
    if (arity < 1) fail(errc::index_out_of_range, "arity must be positive");
    if (arity > max_arity()) return 0;
    return dims_[static_cast<std::size_t>(arity - 1)];
}

void DimSeq::set(int arity, long long value) {
    if (arity < 1 || arity > max_arity()) fail(errc::index_out_of_range, "arity out of range");
    if (value < 0) fail(errc::negative_dimension, "dimension entries must be nonnegative");
    dims_[static_cast<std::size_t>(arity - 1)] = value;
}

DimSeq parse_dimseq(const std::string& text) {
    std::vector<long long> dims;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            fail(errc::schema_error, "cannot parse dimension entry '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) fail(errc::schema_error, "trailing junk in dimension entry");
        if (v < 0) fail(errc::negative_dimension, "negative dimension entry");
        dims.push_back(v);
    }
    if (dims.empty()) fail(errc::schema_error, "empty dimension sequence");
    return DimSeq(std::move(dims));
}

std::string format_dimseq(const DimSeq& d) {
    std::string out;
    for (int n = 1; n <= d.max_arity(); ++n) {
        if (n > 1) out += ",";
        out += std::to_string(d.at(n));
    }
    return out;
}

DimSeq operator+(const DimSeq& p, const DimSeq& q) {
    int n = std::max(p.max_arity(), q.max_arity());
    DimSeq out = DimSeq::zeros(n);
    for (int i = 1; i <= n; ++i) out.set(i, p.at(i) + q.at(i));
    return out;
}

DimSeq hadamard_dims(const DimSeq& p, const DimSeq& q, int n_max) {
    DimSeq out = DimSeq::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) out.set(n, p.at(n) * q.at(n));
    return out;
}

DimSeq conc_dims(const DimSeq& p, const DimSeq& q, int n_max) {
    DimSeq out = DimSeq::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        long long acc = 0;
        for (int k = 1; k <= n - 1; ++k) acc += binomial(n, k) * p.at(k) * q.at(n - k);
        out.set(n, acc);
    }
    return out;
}

DimSeq s_dims(const DimSeq& p, int n_max) {
    // s(n) = sum_k C(n-1,k-1) p(k) s(n-k), s(0) = 1: the block containing
    // element n has size k.
    std::vector<long long> s(static_cast<std::size_t>(n_max + 1), 0);
    s[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) s[n] += binomial(n - 1, k - 1) * p.at(k) * s[n - k];
    DimSeq out = DimSeq::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) out.set(n, s[static_cast<std::size_t>(n)]);
    return out;
}

DimSeq s_log(const DimSeq& s, int n_max) {
    std::vector<long long> g(static_cast<std::size_t>(n_max + 1), 0);
    std::vector<long long> sfull(static_cast<std::size_t>(n_max + 1), 0);
    sfull[0] = 1;
    for (int n = 1; n <= n_max; ++n) sfull[n] = s.at(n);
    DimSeq out = DimSeq::zeros(n_max);
    for (int n = 1; n <= n_max; ++n) {
        long long acc = sfull[n];
        for (int k = 1; k <= n - 1; ++k) acc -= binomial(n - 1, k - 1) * g[k] * sfull[n - k];
        if (acc < 0) fail(errc::negative_dimension, "s_log inversion produced a negative value");
        g[n] = acc;
        out.set(n, acc);
    }
    return out;
}

namespace {

const std::vector<PartitionPair>& xconn_cached(int n) {
    static std::map<int, std::vector<PartitionPair>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_xconn(n)).first;
    return it->second;
}

} // namespace

long long boxtimes_dims_xconn_oracle(const DimSeq& p, const DimSeq& q, int n) {
    long long acc = 0;
    for (const auto& pr : xconn_cached(n)) {
        long long term = 1;
        for (auto b : pr.first.blocks) term *= p.at(mask_size(b));
        for (auto b : pr.second.blocks) term *= q.at(mask_size(b));
        acc += term;
    }
    return acc;
}

DimSeq boxtimes_dims(const DimSeq& p, const DimSeq& q, int n_max) {
    DimSeq fast = s_log(hadamard_dims(s_dims(p, n_max), s_dims(q, n_max), n_max), n_max);
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        long long oracle = boxtimes_dims_xconn_oracle(p, q, n);
        if (oracle != fast.at(n))
            fail(errc::dimension_mismatch,
                 "boxtimes paths disagree at arity " + std::to_string(n) + ": " +
                     std::to_string(oracle) + " vs " + std::to_string(fast.at(n)));
    }
    return fast;
}

long long free_proto_dims(const DimSeq& gen, int rho, int n, const WallBudget& budget) {
    if (rho < 1 || n < 1) fail(errc::index_out_of_range, "free_proto_dims: bad parameters");
    long long acc = 0;
    for (const auto& w : enumerate_walls(n, rho, true, budget)) {
        long long term = 1;
        for (auto b : w.bricks) term *= gen.at(mask_size(b));
        acc += term;
    }
    return acc;
}

long long free_weight2_closed(const DimSeq& gen, int n) {
    if (n < 1 || n > 16) fail(errc::index_out_of_range, "free_weight2_closed: bad arity");
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    long long acc = 0;
    for (std::uint32_t k = 1; k <= full; ++k)
        for (std::uint32_t l = 1; l <= full; ++l)
            if ((k | l) == full && (k & l) != 0)
                acc += gen.at(mask_size(k)) * gen.at(mask_size(l));
    return acc;
}

namespace {

struct LevelState {
    const DimSeq* gen;
    int rho;
    int n;
    std::uint32_t full;
    const std::vector<SetPartition>* partitions;
    long long total = 0;
};

// Depth-first over levels. `prev_marked_union` is the union of the marked
// blocks one level down; `glued` is the running iterated kappa partition;
// `marked_so_far` counts marked blocks.
void level_dfs(LevelState& st, int level, std::uint32_t prev_marked_union,
               const SetPartition& glued, int marked_so_far, long long weight) {
    for (const auto& part : *st.partitions) {
        // Choose the marked blocks: non-singletons are forced marked,
        // singletons are free, at least one block marked.
        std::vector<int> free_idx;
        std::uint32_t forced = 0;
        int forced_count = 0;
        long long forced_weight = 1;
        bool ok = true;
        for (std::size_t i = 0; i < part.blocks.size() && ok; ++i) {
            auto b = part.blocks[i];
            if (mask_size(b) > 1) {
                if (level > 1 && (b & prev_marked_union) == 0) ok = false;
                forced |= b;
                ++forced_count;
                forced_weight *= st.gen->at(mask_size(b));
            } else {
                free_idx.push_back(static_cast<int>(i));
            }
        }
        if (!ok) continue;
        const int nfree = static_cast<int>(free_idx.size());
        for (std::uint32_t sel = 0; sel < (std::uint32_t(1) << nfree); ++sel) {
            int marked = forced_count;
            long long weight_here = forced_weight;
            std::uint32_t marked_union = forced;
            bool valid = true;
            for (int t = 0; t < nfree && valid; ++t) {
                if (!(sel >> t & 1)) continue;
                auto b = part.blocks[static_cast<std::size_t>(free_idx[t])];
                if (level > 1 && (b & prev_marked_union) == 0) {
                    valid = false;
                    break;
                }
                marked_union |= b;
                ++marked;
                weight_here *= st.gen->at(1);
            }
            if (!valid || marked == 0) continue;
            if (marked_so_far + marked > st.rho) continue;
            if (weight * weight_here == 0) continue;
            SetPartition next_glued = level == 1 ? part : kappa_pair(glued, part);
            if (marked_so_far + marked == st.rho) {
                if (next_glued.blocks.size() == 1) st.total += weight * weight_here;
                continue;
            }
            level_dfs(st, level + 1, marked_union, next_glued, marked_so_far + marked,
                      weight * weight_here);
        }
    }
}

} // namespace

long long free_proto_dims_level_oracle(const DimSeq& gen, int rho, int n) {
    if (rho < 1 || n < 1) fail(errc::index_out_of_range, "level oracle: bad parameters");
    if (rho > 4 || n > 4) fail(errc::budget_exceeded, "level oracle: beyond n <= 4, rho <= 4");
    auto partitions = enumerate_partitions(n);
    LevelState st;
    st.gen = &gen;
    st.rho = rho;
    st.n = n;
    st.full = (std::uint32_t(1) << n) - 1;
    st.partitions = &partitions;
    SetPartition trivial; // placeholder for level 1
    level_dfs(st, 1, 0, trivial, 0, 1);
    return st.total;
}

} // namespace wallkit

#include "wallkit/poset.hpp"

#include <algorithm>
#include <cstdint>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

// Row-major reachability bitmask, below[a-1] bit (b-1) set iff a < b.
std::vector<std::uint64_t> relation_rows(const StrictPoset& p) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(p.size), 0);
    for (auto [a, b] : p.rel) rows[a - 1] |= std::uint64_t(1) << (b - 1);
    return rows;
}

std::vector<std::pair<int, int>> rows_to_pairs(const std::vector<std::uint64_t>& rows) {
    std::vector<std::pair<int, int>> out;
    const int m = static_cast<int>(rows.size());
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            if (rows[a - 1] >> (b - 1) & 1) out.emplace_back(a, b);
    return out;
}

} // namespace

bool StrictPoset::less(int a, int b) const {
    return std::binary_search(rel.begin(), rel.end(), std::make_pair(a, b));
}

bool operator==(const StrictPoset& a, const StrictPoset& b) {
    return a.size == b.size && a.rel == b.rel;
}

StrictPoset transitive_closure(std::vector<std::pair<int, int>> pairs, int size) {
    if (size < 0 || size > 64) fail(errc::index_out_of_range, "poset carrier size out of range");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(size), 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > size || b < 1 || b > size)
            fail(errc::index_out_of_range, "relation pair outside carrier");
        if (a == b) fail(errc::cycle_detected, "reflexive pair in strict relation");
        rows[a - 1] |= std::uint64_t(1) << (b - 1);
    }
    // Floyd-Warshall on bitrows.
    for (int k = 0; k < size; ++k)
        for (int a = 0; a < size; ++a)
            if (rows[a] >> k & 1) rows[a] |= rows[k];
    for (int a = 0; a < size; ++a) {
        if (rows[a] >> a & 1) fail(errc::cycle_detected, "relation closure contains a cycle");
        for (int b = a + 1; b < size; ++b)
            if ((rows[a] >> b & 1) && (rows[b] >> a & 1))
                fail(errc::cycle_detected, "relation closure breaks antisymmetry");
    }
    StrictPoset p;
    p.size = size;
    p.rel = rows_to_pairs(rows);
    return p;
}

std::vector<std::pair<int, int>> succ_pairs(const StrictPoset& p) {
    auto rows = relation_rows(p);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : p.rel) {
        // (a,b) is a successor pair iff no t with a < t < b.
        bool between = false;
        for (int t = 1; t <= p.size && !between; ++t)
            between = (rows[a - 1] >> (t - 1) & 1) && (rows[t - 1] >> (b - 1) & 1);
        if (!between) out.emplace_back(a, b);
    }
    return out;
}

std::vector<int> heights(const StrictPoset& p) {
    auto rows = relation_rows(p);
    std::vector<int> h(static_cast<std::size_t>(p.size), 0);
    // Longest chain ending at each element; relation is acyclic, so iterate
    // in any linear extension (repeat-until-stable is fine at these sizes).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int b = 0; b < p.size; ++b) {
            int best = 1;
            for (int a = 0; a < p.size; ++a)
                if (rows[a] >> b & 1) best = std::max(best, (h[a] == 0 ? 1 : h[a]) + 1);
            if (h[b] != best) {
                h[b] = best;
                changed = true;
            }
        }
    }
    return h;
}

int height(const StrictPoset& p, int k) {
    if (k < 1 || k > p.size) fail(errc::index_out_of_range, "height: element outside carrier");
    return heights(p)[k - 1];
}

StrictPoset quotient_by_successor_pair(const StrictPoset& p, std::pair<int, int> kl) {
    auto succ = succ_pairs(p);
    if (!std::count(succ.begin(), succ.end(), kl))
        fail(errc::not_successor_pair, "quotient: pair is not a successor pair");
    const int k = kl.first, l = kl.second;
    const int lo = std::min(k, l), hi = std::max(k, l);
    auto relabel = [&](int t) { return t > hi ? t - 1 : t; };
    auto cls = [&](int t) { return (t == k || t == l) ? lo : relabel(t); };
    std::vector<std::pair<int, int>> gen;
    for (int r = 1; r <= p.size; ++r) {
        for (int s = 1; s <= p.size; ++s) {
            if (r == s) continue;
            bool rin = (r == k || r == l), sin = (s == k || s == l);
            if (!rin && !sin) {
                if (p.less(r, s)) gen.emplace_back(cls(r), cls(s));
            } else if (!rin && sin) {
                if (p.less(r, k) || p.less(r, l)) gen.emplace_back(cls(r), lo);
                if (p.less(k, r) || p.less(l, r)) gen.emplace_back(lo, cls(r));
            }
        }
    }
    return transitive_closure(std::move(gen), p.size - 1);
}

} // namespace wallkit

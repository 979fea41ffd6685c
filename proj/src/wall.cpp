#include "wallkit/wall.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

std::uint32_t full_mask(int ground) { return (std::uint32_t(1) << ground) - 1; }

void check_ground(int ground) {
    if (ground < 1 || ground > 16) fail(errc::index_out_of_range, "ground size out of range");
}

std::vector<std::pair<int, int>> intersecting_restriction(const Wall& w) {
    std::vector<std::pair<int, int>> gen;
    for (auto [a, b] : w.order.rel)
        if (w.bricks[a - 1] & w.bricks[b - 1]) gen.emplace_back(a, b);
    return gen;
}

} // namespace

bool operator==(const Wall& a, const Wall& b) {
    return a.ground == b.ground && a.bricks == b.bricks && a.order == b.order;
}

Wall wall_from_brick_sequence(int ground, const std::vector<std::uint32_t>& bricks) {
    check_ground(ground);
    if (bricks.empty()) fail(errc::empty_brick, "wall needs at least one brick");
    std::uint32_t seen = 0;
    for (auto b : bricks) {
        if (b == 0) fail(errc::empty_brick, "brick is empty");
        if (b & ~full_mask(ground)) fail(errc::index_out_of_range, "brick outside ground");
        seen |= b;
    }
    if (seen != full_mask(ground)) fail(errc::coverage_failure, "bricks do not cover the ground set");
    const int r = static_cast<int>(bricks.size());
    std::vector<std::pair<int, int>> gen;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (bricks[i - 1] & bricks[j - 1]) gen.emplace_back(i, j);
    Wall w;
    w.ground = ground;
    w.bricks = bricks;
    w.order = transitive_closure(std::move(gen), r);
    return canonical_form(w);
}

WallReport validate_wall(const Wall& w) {
    if (w.ground < 1 || w.ground > 16) return {false, "ground-out-of-range"};
    if (w.bricks.empty()) return {false, "no-bricks"};
    std::uint32_t seen = 0;
    for (auto b : w.bricks) {
        if (b == 0) return {false, "empty-brick"};
        if (b & ~full_mask(w.ground)) return {false, "brick-outside-ground"};
        seen |= b;
    }
    if (seen != full_mask(w.ground)) return {false, "coverage-failure"};
    const int r = w.brick_count();
    if (w.order.size != r) return {false, "order-carrier-mismatch"};
    try {
        if (!(transitive_closure(w.order.rel, r) == w.order)) return {false, "order-not-closed"};
    } catch (const Error&) {
        return {false, "order-not-a-partial-order"};
    }
    for (int e = 0; e < w.ground; ++e) {
        std::vector<int> fiber;
        for (int i = 1; i <= r; ++i)
            if (w.bricks[i - 1] >> e & 1) fiber.push_back(i);
        for (std::size_t x = 0; x < fiber.size(); ++x)
            for (std::size_t y = x + 1; y < fiber.size(); ++y)
                if (!w.order.comparable(fiber[x], fiber[y]))
                    return {false, "fiber-not-totally-ordered"};
    }
    if (!(transitive_closure(intersecting_restriction(w), r) == w.order))
        return {false, "non-canonical-order"};
    // Canonical brick arrangement: sorted by (height, min element).
    auto h = heights(w.order);
    for (int i = 1; i < r; ++i) {
        auto key = [&](int t) {
            return std::make_pair(h[t], mask_min_element(w.bricks[t]));
        };
        if (key(i) < key(i - 1)) return {false, "non-canonical-brick-sort"};
    }
    return {};
}

Wall canonical_form(const Wall& w) {
    const int r = w.brick_count();
    auto h = heights(w.order);
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::make_pair(h[a], mask_min_element(w.bricks[a])) <
               std::make_pair(h[b], mask_min_element(w.bricks[b]));
    });
    std::vector<int> pos(static_cast<std::size_t>(r)); // old index (0-based) -> new 1-based
    for (int k = 0; k < r; ++k) pos[idx[k]] = k + 1;
    Wall out;
    out.ground = w.ground;
    out.bricks.resize(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) out.bricks[k] = w.bricks[idx[k]];
    std::vector<std::pair<int, int>> rel;
    rel.reserve(w.order.rel.size());
    for (auto [a, b] : w.order.rel) rel.emplace_back(pos[a - 1], pos[b - 1]);
    std::sort(rel.begin(), rel.end());
    out.order = StrictPoset{r, std::move(rel)};
    return out;
}

std::string wall_key(const Wall& w) {
    std::string key = "g" + std::to_string(w.ground) + ";b";
    for (auto b : w.bricks) key += std::to_string(b) + ",";
    key += ";r";
    for (auto [a, b] : w.order.rel) key += std::to_string(a) + "<" + std::to_string(b) + ",";
    return key;
}

std::vector<Wall> enumerate_walls(int ground, int bricks, bool connected, const WallBudget& budget) {
    if (ground < 1 || bricks < 1) fail(errc::index_out_of_range, "enumerate_walls: bad parameters");
    if (ground > budget.max_ground || bricks > budget.max_bricks)
        fail(errc::budget_exceeded, "enumerate_walls: ground/bricks beyond budget");
    const std::uint32_t top = full_mask(ground);
    std::vector<std::uint32_t> seq(static_cast<std::size_t>(bricks), 1);
    std::vector<Wall> out;
    std::unordered_set<std::string> seen;
    while (true) {
        std::uint32_t covered = 0;
        for (auto b : seq) covered |= b;
        if (covered == top) {
            Wall w = wall_from_brick_sequence(ground, seq);
            if (!connected || is_connected(w)) {
                if (seen.insert(wall_key(w)).second) out.push_back(std::move(w));
            }
        }
        int i = bricks - 1;
        while (i >= 0 && seq[i] == top) --i;
        if (i < 0) break;
        ++seq[i];
        std::fill(seq.begin() + i + 1, seq.end(), 1);
    }
    std::sort(out.begin(), out.end(),
              [](const Wall& a, const Wall& b) { return wall_key(a) < wall_key(b); });
    return out;
}

long long count_ordered_walls(int ground, int bricks, const WallBudget& budget) {
    return factorial(bricks) *
           static_cast<long long>(enumerate_walls(ground, bricks, false, budget).size());
}

std::vector<std::vector<int>> connected_components(const Wall& w) {
    const int r = w.brick_count();
    std::vector<int> parent(static_cast<std::size_t>(r));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : succ_pairs(w.order))
        if (w.bricks[a - 1] & w.bricks[b - 1]) parent[find(a - 1)] = find(b - 1);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) classes[find(i)].push_back(i + 1);
    std::vector<std::vector<int>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Wall& w) { return connected_components(w).size() == 1; }

SetPartition kappa(const Wall& w) {
    std::vector<std::uint32_t> blocks;
    for (const auto& comp : connected_components(w)) {
        std::uint32_t u = 0;
        for (int i : comp) u |= w.bricks[i - 1];
        blocks.push_back(u);
    }
    return make_partition(w.ground, std::move(blocks));
}

Wall wall_from_partition_pair(const PartitionPair& p) {
    if (p.first.ground != p.second.ground)
        fail(errc::ground_mismatch, "partition pair over different grounds");
    std::vector<std::uint32_t> bricks = p.first.blocks;
    bricks.insert(bricks.end(), p.second.blocks.begin(), p.second.blocks.end());
    const int nf = static_cast<int>(p.first.blocks.size());
    const int r = static_cast<int>(bricks.size());
    std::vector<std::pair<int, int>> gen;
    for (int i = 1; i <= nf; ++i)
        for (int j = nf + 1; j <= r; ++j)
            if (bricks[i - 1] & bricks[j - 1]) gen.emplace_back(i, j);
    Wall w;
    w.ground = p.first.ground;
    w.bricks = std::move(bricks);
    w.order = transitive_closure(std::move(gen), r);
    return canonical_form(w);
}

bool partition_pair_connected(const SetPartition& first, const SetPartition& second) {
    return kappa_pair(first, second).blocks.size() == 1;
}

SetPartition kappa_pair(const SetPartition& first, const SetPartition& second) {
    if (first.ground != second.ground)
        fail(errc::ground_mismatch, "kappa_pair over different grounds");
    const int n = first.ground;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto glue = [&](const SetPartition& p) {
        for (auto block : p.blocks) {
            int lead = mask_min_element(block) - 1;
            for (int e : mask_elements(block)) parent[find(e - 1)] = find(lead);
        }
    };
    glue(first);
    glue(second);
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < n; ++e) acc[find(e)] |= std::uint32_t(1) << e;
    std::vector<std::uint32_t> blocks;
    for (auto m : acc)
        if (m) blocks.push_back(m);
    return make_partition(n, std::move(blocks));
}

std::vector<PartitionPair> enumerate_xconn(int n, const WallBudget& budget) {
    if (n < 1) fail(errc::index_out_of_range, "enumerate_xconn: n must be positive");
    if (n > std::max(budget.max_ground, 7) || n > 7)
        fail(errc::budget_exceeded, "enumerate_xconn: n beyond budget");
    auto parts = enumerate_partitions(n);
    std::vector<PartitionPair> out;
    for (const auto& i : parts)
        for (const auto& j : parts)
            if (partition_pair_connected(i, j)) out.push_back({i, j});
    return out;
}

Wall vertical_product(const Wall& w, const Wall& l) {
    if (w.ground != l.ground) fail(errc::ground_mismatch, "vertical product over different grounds");
    std::vector<std::uint32_t> bricks = w.bricks;
    bricks.insert(bricks.end(), l.bricks.begin(), l.bricks.end());
    const int nw = w.brick_count();
    const int r = static_cast<int>(bricks.size());
    std::vector<std::pair<int, int>> gen = w.order.rel;
    for (auto [a, b] : l.order.rel) gen.emplace_back(nw + a, nw + b);
    for (int i = 1; i <= nw; ++i)
        for (int j = nw + 1; j <= r; ++j)
            if (bricks[i - 1] & bricks[j - 1]) gen.emplace_back(i, j);
    Wall out;
    out.ground = w.ground;
    out.bricks = std::move(bricks);
    out.order = transitive_closure(std::move(gen), r);
    return canonical_form(out);
}

Wall horizontal_product(const Wall& w, const Wall& l) {
    const int m = w.ground;
    check_ground(m + l.ground);
    std::vector<std::uint32_t> bricks = w.bricks;
    for (auto b : l.bricks) bricks.push_back(b << m);
    const int nw = w.brick_count();
    std::vector<std::pair<int, int>> gen = w.order.rel;
    for (auto [a, b] : l.order.rel) gen.emplace_back(nw + a, nw + b);
    Wall out;
    out.ground = m + l.ground;
    out.bricks = std::move(bricks);
    out.order = transitive_closure(std::move(gen), static_cast<int>(out.bricks.size()));
    return canonical_form(out);
}

namespace {

std::uint32_t relabel_mask(std::uint32_t mask, const std::vector<int>& inj) {
    std::uint32_t out = 0;
    for (int e : mask_elements(mask)) out |= std::uint32_t(1) << (inj[e - 1] - 1);
    return out;
}

void check_injection(const std::vector<int>& inj, int domain, int codomain) {
    if (static_cast<int>(inj.size()) != domain)
        fail(errc::size_mismatch, "injection domain size mismatch");
    std::uint32_t seen = 0;
    for (int v : inj) {
        if (v < 1 || v > codomain) fail(errc::index_out_of_range, "injection image out of range");
        std::uint32_t bit = std::uint32_t(1) << (v - 1);
        if (seen & bit) fail(errc::not_a_permutation, "map is not injective");
        seen |= bit;
    }
}

} // namespace

Wall graft(const std::vector<int>& iota, const std::vector<int>& jota, const Wall& wm,
           const Wall& wn, int ground) {
    check_ground(ground);
    check_injection(iota, wm.ground, ground);
    check_injection(jota, wn.ground, ground);
    std::uint32_t im_i = 0, im_j = 0;
    for (int v : iota) im_i |= std::uint32_t(1) << (v - 1);
    for (int v : jota) im_j |= std::uint32_t(1) << (v - 1);
    if ((im_i | im_j) != full_mask(ground))
        fail(errc::coverage_failure, "graft: images do not cover the ground set");
    if ((im_i & im_j) == 0) fail(errc::empty_overlap, "graft: images do not overlap");
    std::vector<std::uint32_t> bricks;
    for (auto b : wm.bricks) bricks.push_back(relabel_mask(b, iota));
    for (auto b : wn.bricks) bricks.push_back(relabel_mask(b, jota));
    const int nm = wm.brick_count();
    const int r = static_cast<int>(bricks.size());
    std::vector<std::pair<int, int>> gen = wm.order.rel;
    for (auto [a, b] : wn.order.rel) gen.emplace_back(nm + a, nm + b);
    for (int i = 1; i <= nm; ++i)
        for (int j = nm + 1; j <= r; ++j)
            if (bricks[i - 1] & bricks[j - 1]) gen.emplace_back(i, j);
    Wall out;
    out.ground = ground;
    out.bricks = std::move(bricks);
    out.order = transitive_closure(std::move(gen), r);
    return canonical_form(out);
}

Wall aut_action(const Wall& w, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != w.ground)
        fail(errc::not_a_permutation, "permutation size mismatch");
    std::uint32_t seen = 0;
    for (int v : sigma) {
        if (v < 1 || v > w.ground) fail(errc::not_a_permutation, "permutation value out of range");
        std::uint32_t bit = std::uint32_t(1) << (v - 1);
        if (seen & bit) fail(errc::not_a_permutation, "permutation repeats a value");
        seen |= bit;
    }
    Wall out;
    out.ground = w.ground;
    out.order = w.order;
    out.bricks.reserve(w.bricks.size());
    for (auto b : w.bricks) {
        std::uint32_t nb = 0;
        for (int e = 1; e <= w.ground; ++e)
            if (b >> (sigma[e - 1] - 1) & 1) nb |= std::uint32_t(1) << (e - 1);
        out.bricks.push_back(nb);
    }
    return canonical_form(out);
}

} // namespace wallkit

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "wallkit/errors.hpp"
#include "wallkit/verify.hpp"
#include "wallkit/wall.hpp"

using namespace wallkit;

namespace {

// The paper's connected four-brick wall over 1..4:
// {1,2} and {3,4} below both {2,3} and {1,4}.
Wall four_brick_wall() {
    return wall_from_brick_sequence(4, {0b0011, 0b1100, 0b0110, 0b1001});
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("one intersecting pair gives a two-brick tower") {
    Wall w = wall_from_brick_sequence(2, {0b11, 0b01});
    REQUIRE(w.brick_count() == 2);
    CHECK(w.bricks == std::vector<std::uint32_t>{0b11, 0b01});
    CHECK(w.order.rel == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(validate_wall(w).ok);
}

TEST_CASE("the four-brick wall has the square order") {
    Wall w = four_brick_wall();
    REQUIRE(w.brick_count() == 4);
    // Canonical order: {1,2}, {3,4} at height 1; {1,4}, {2,3} at height 2.
    CHECK(w.bricks == std::vector<std::uint32_t>{0b0011, 0b1100, 0b1001, 0b0110});
    CHECK(w.order.rel ==
          std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(is_connected(w));
}

TEST_CASE("disjoint bricks give the antichain wall") {
    Wall w = wall_from_brick_sequence(2, {0b01, 0b10});
    CHECK(w.order.rel.empty());
    CHECK(connected_components(w).size() == 2);
}

TEST_CASE("construction rejects empty bricks and bad coverage") {
    CHECK_THROWS_AS(wall_from_brick_sequence(2, {0b01, 0}), Error);
    CHECK_THROWS_AS(wall_from_brick_sequence(2, {0b01}), Error);
}

TEST_CASE("validation flags a fiber that is not totally ordered") {
    Wall w;
    w.ground = 2;
    w.bricks = {0b11, 0b01};
    w.order = StrictPoset{2, {}}; // intersecting bricks left incomparable
    auto rep = validate_wall(w);
    CHECK_FALSE(rep.ok);
    CHECK(rep.clause == "fiber-not-totally-ordered");
}

TEST_CASE("validation flags an order pair not generated by intersections") {
    Wall w;
    w.ground = 2;
    w.bricks = {0b01, 0b10};
    w.order = StrictPoset{2, {{1, 2}}}; // spurious pair between disjoint bricks
    auto rep = validate_wall(w);
    CHECK_FALSE(rep.ok);
    CHECK(rep.clause == "non-canonical-order");
}

TEST_CASE("canonical form is idempotent") {
    Wall w = four_brick_wall();
    CHECK(canonical_form(w) == w);
}

TEST_CASE("both index orderings of a tower canonicalize identically") {
    Wall a = wall_from_brick_sequence(2, {0b11, 0b01}); // {1,2} < {1}
    Wall b;
    b.ground = 2;
    b.bricks = {0b01, 0b11};
    b.order = StrictPoset{2, {{2, 1}}}; // same wall, indices swapped
    CHECK(canonical_form(b) == a);
}

TEST_CASE("index shuffles of the four-brick wall all canonicalize equally") {
    Wall w = four_brick_wall();
    for (const auto& perm : permutations_of(4)) {
        Wall shuffled;
        shuffled.ground = w.ground;
        shuffled.bricks.resize(4);
        for (int i = 0; i < 4; ++i) shuffled.bricks[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = w.bricks[static_cast<std::size_t>(i)];
        std::vector<std::pair<int, int>> rel;
        for (auto [a, b] : w.order.rel)
            rel.emplace_back(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
        std::sort(rel.begin(), rel.end());
        shuffled.order = StrictPoset{4, rel};
        CHECK(canonical_form(shuffled) == w);
    }
}

TEST_CASE("a wall is rebuilt from any linear extension of its order") {
    Wall w = four_brick_wall();
    for (const auto& perm : permutations_of(4)) {
        // perm lists brick indices; accept it only when it extends the order.
        bool extends = true;
        std::vector<int> pos(5);
        for (int t = 0; t < 4; ++t) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] = t;
        for (auto [a, b] : w.order.rel)
            if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) extends = false;
        if (!extends) continue;
        std::vector<std::uint32_t> seq;
        for (int t = 0; t < 4; ++t) seq.push_back(w.bricks[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)] - 1)]);
        CHECK(wall_from_brick_sequence(4, seq) == w);
    }
}

TEST_CASE("single brick over a single element") {
    auto walls = enumerate_walls(1, 1, false);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].bricks == std::vector<std::uint32_t>{0b1});
}

TEST_CASE("five connected two-brick walls over two elements") {
    CHECK(enumerate_walls(2, 2, true).size() == 5);
    CHECK(enumerate_walls(2, 2, false).size() == 6); // plus the antichain
}

TEST_CASE("the paper's three-brick multiset admits exactly four walls") {
    auto walls = enumerate_walls(4, 3, false);
    std::vector<std::uint32_t> multiset = {0b0011, 0b1100, 0b0110}; // {1,2},{3,4},{2,3}
    std::sort(multiset.begin(), multiset.end());
    int count = 0;
    for (const auto& w : walls) {
        auto bricks = w.bricks;
        std::sort(bricks.begin(), bricks.end());
        if (bricks == multiset) ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("ordered wall counts factor through the free action") {
    CHECK(count_ordered_walls(1, 1) == 1);
    CHECK(count_ordered_walls(2, 1) == 1);
    CHECK(count_ordered_walls(2, 2) == 12);
    CHECK_FALSE(checks::free_action_count(3, 3).has_value());
}

TEST_CASE("enumeration refuses requests beyond the budget") {
    CHECK_THROWS_AS(enumerate_walls(9, 9, false), Error);
    WallBudget loose{9, 2};
    CHECK(enumerate_walls(7, 1, false, loose).size() == 1);
}

TEST_CASE("connected components of the paper's walls") {
    Wall split = wall_from_brick_sequence(4, {0b0011, 0b1100, 0b0011});
    CHECK(connected_components(split).size() == 2);
    CHECK(connected_components(four_brick_wall()).size() == 1);
    Wall anti = wall_from_brick_sequence(2, {0b01, 0b10});
    CHECK(connected_components(anti).size() == 2);
}

TEST_CASE("kappa projects to the partition of component supports") {
    Wall split = wall_from_brick_sequence(4, {0b0011, 0b1100, 0b0011});
    CHECK(kappa(split) == make_partition(4, {0b0011, 0b1100}));
    CHECK(kappa(four_brick_wall()) == make_partition(4, {0b1111}));
    Wall anti = wall_from_brick_sequence(3, {0b001, 0b010, 0b100});
    CHECK(kappa(anti) == make_partition(3, {0b001, 0b010, 0b100}));
}

TEST_CASE("partition pairs embed as height-two walls") {
    PartitionPair p{make_partition(2, {0b11}), make_partition(2, {0b01, 0b10})};
    Wall w = wall_from_partition_pair(p);
    REQUIRE(w.brick_count() == 3);
    CHECK(w.bricks[0] == 0b11);
    CHECK(w.order.rel == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

    PartitionPair tower{make_partition(1, {0b1}), make_partition(1, {0b1})};
    Wall t = wall_from_partition_pair(tower);
    CHECK(t.brick_count() == 2);
    CHECK(t.order.rel == std::vector<std::pair<int, int>>{{1, 2}});

    PartitionPair cross{make_partition(3, {0b011, 0b100}), make_partition(3, {0b001, 0b110})};
    CHECK(is_connected(wall_from_partition_pair(cross)));
}

TEST_CASE("xconn pairs: the one-element and two-element counts") {
    auto one = enumerate_xconn(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == make_partition(1, {0b1}));

    // Independent derivation for n = 2: two partitions, four pairs; a pair
    // is connected iff at least one side is the one-block partition.
    auto two = enumerate_xconn(2);
    CHECK(two.size() == 3);
    int oracle = 0;
    auto parts = enumerate_partitions(2);
    for (const auto& i : parts)
        for (const auto& j : parts) {
            // hand-rolled bipartite reachability over block intersections
            std::vector<std::uint32_t> left = i.blocks, right = j.blocks;
            std::vector<bool> lseen(left.size(), false), rseen(right.size(), false);
            lseen[0] = true;
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t a = 0; a < left.size(); ++a)
                    for (std::size_t b = 0; b < right.size(); ++b)
                        if ((left[a] & right[b]) != 0) {
                            if (lseen[a] && !rseen[b]) rseen[b] = grew = true;
                            if (rseen[b] && !lseen[a]) lseen[a] = grew = true;
                        }
            }
            bool conn = std::all_of(lseen.begin(), lseen.end(), [](bool x) { return x; }) &&
                        std::all_of(rseen.begin(), rseen.end(), [](bool x) { return x; });
            if (conn) ++oracle;
        }
    CHECK(oracle == 3);
}

TEST_CASE("every xconn pair builds a wall that kappa sends to one block") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& pr : enumerate_xconn(n))
            CHECK(kappa(wall_from_partition_pair(pr)).blocks.size() == 1);
}

TEST_CASE("vertical product of full bricks is the tower") {
    Wall s = wall_from_brick_sequence(3, {0b111});
    Wall t = vertical_product(s, s);
    CHECK(t.brick_count() == 2);
    CHECK(t.order.rel == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("vertical product of partition walls is the pair wall") {
    auto parts = enumerate_partitions(3);
    for (const auto& i : parts)
        for (const auto& j : parts) {
            Wall left = vertical_product(wall_from_brick_sequence(3, i.blocks),
                                         wall_from_brick_sequence(3, j.blocks));
            CHECK(left == wall_from_partition_pair({i, j}));
        }
}

TEST_CASE("vertical product is associative on small walls") {
    std::vector<Wall> pool;
    for (int r = 1; r <= 2; ++r)
        for (auto& w : enumerate_walls(3, r, false)) pool.push_back(std::move(w));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                CHECK(vertical_product(vertical_product(a, b), c) ==
                      vertical_product(a, vertical_product(b, c)));
}

TEST_CASE("horizontal product concatenates grounds and components") {
    Wall a = wall_from_brick_sequence(1, {0b1});
    Wall h = horizontal_product(a, a);
    CHECK(h.ground == 2);
    CHECK(h.order.rel.empty());
    Wall f = four_brick_wall();
    CHECK(connected_components(horizontal_product(f, a)).size() ==
          connected_components(f).size() + 1);
}

TEST_CASE("interchange law on walls with at most two bricks over two elements") {
    std::vector<Wall> pool;
    for (int n = 1; n <= 2; ++n)
        for (int r = 1; r <= 2; ++r)
            for (auto& w : enumerate_walls(n, r, false)) pool.push_back(std::move(w));
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.ground != b.ground) continue;
            for (const auto& c : pool)
                for (const auto& d : pool) {
                    if (c.ground != d.ground) continue;
                    Wall lhs = horizontal_product(vertical_product(a, b), vertical_product(c, d));
                    Wall rhs = vertical_product(horizontal_product(a, c), horizontal_product(b, d));
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("grafting along identities is the vertical product") {
    std::vector<int> id3{1, 2, 3};
    for (const auto& a : enumerate_walls(3, 2, false))
        for (const auto& b : enumerate_walls(3, 2, false))
            CHECK(graft(id3, id3, a, b, 3) == vertical_product(a, b));
}

TEST_CASE("grafting single bricks over overlapping grounds stacks them") {
    Wall m = wall_from_brick_sequence(2, {0b11});
    Wall n = wall_from_brick_sequence(2, {0b11});
    Wall g = graft({1, 2}, {2, 3}, m, n, 3);
    CHECK(g.bricks == std::vector<std::uint32_t>{0b011, 0b110});
    CHECK(g.order.rel == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(is_connected(g));
}

TEST_CASE("graft rejects non-covering or disjoint images") {
    Wall m = wall_from_brick_sequence(1, {0b1});
    CHECK_THROWS_AS(graft({1}, {2}, m, m, 3), Error); // no coverage
    CHECK_THROWS_AS(graft({1}, {2}, m, m, 2), Error); // empty overlap
}

TEST_CASE("graft associativity axioms hold exhaustively on small grounds") {
    CHECK_FALSE(checks::graft_associativity(3).has_value());
}

TEST_CASE("identity permutation fixes every wall") {
    Wall w = four_brick_wall();
    CHECK(aut_action(w, {1, 2, 3, 4}) == w);
}

TEST_CASE("the ground action is a right action on the four-brick wall") {
    Wall w = four_brick_wall();
    auto perms = permutations_of(4);
    for (const auto& sigma : perms)
        for (const auto& tau : perms) {
            std::vector<int> comp(4);
            for (int i = 0; i < 4; ++i) comp[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)] - 1)];
            CHECK(aut_action(aut_action(w, sigma), tau) == aut_action(w, comp));
        }
}

TEST_CASE("the ground action preserves connectedness") {
    for (const auto& w : enumerate_walls(3, 2, false))
        for (const auto& sigma : permutations_of(3))
            CHECK(is_connected(aut_action(w, sigma)) == is_connected(w));
}

TEST_CASE("two-brick connected walls are counted by covering pairs") {
    for (int n = 1; n <= 5; ++n) {
        long long pairs = 0;
        const std::uint32_t full = (std::uint32_t(1) << n) - 1;
        for (std::uint32_t k = 1; k <= full; ++k)
            for (std::uint32_t l = 1; l <= full; ++l)
                if ((k | l) == full && (k & l)) ++pairs;
        CHECK(static_cast<long long>(enumerate_walls(n, 2, true).size()) == pairs);
    }
}

TEST_CASE("kappa is associative on partition triples") {
    CHECK_FALSE(checks::kappa_associative(4).has_value());
}

TEST_CASE("every enumerated wall validates and kappa matches connectivity") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (const auto& w : enumerate_walls(n, r, false)) {
                CHECK(validate_wall(w).ok);
                CHECK((kappa(w).blocks.size() == 1) == is_connected(w));
            }
}

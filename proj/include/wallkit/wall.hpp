#ifndef WALLKIT_WALL_HPP
#define WALLKIT_WALL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wallkit/partition.hpp"
#include "wallkit/poset.hpp"

namespace wallkit {

struct WallBudget {
    int max_ground = 6;
    int max_bricks = 6;
};

/// A wall over 1..ground: nonempty bricks (element bitmasks, duplicates
/// allowed) covering the ground, plus the strict partial order on brick
/// indices generated by the total orders of the fibers through each
/// element. The order is stored transitively closed.
///
/// Canonical form sorts bricks by (height in the order, minimum element);
/// that key is injective within one wall, so canonical forms of equal
/// walls coincide.
struct Wall {
    int ground = 0;
    std::vector<std::uint32_t> bricks; // index i+1 <-> bricks[i]
    StrictPoset order;                 // carrier = brick indices 1..r

    int brick_count() const { return static_cast<int>(bricks.size()); }
};

bool operator==(const Wall& a, const Wall& b);

struct PartitionPair {
    SetPartition first;
    SetPartition second;
};

/// Order = closure of position order restricted to intersecting pairs;
/// result is canonical. Any sequence of nonempty covering bricks is valid.
Wall wall_from_brick_sequence(int ground, const std::vector<std::uint32_t>& bricks);

struct WallReport {
    bool ok = true;
    std::string clause; // first violated clause, empty when ok
};

WallReport validate_wall(const Wall& w);

Wall canonical_form(const Wall& w);

/// Stable byte encoding of a canonical wall; equal walls in W(S) have
/// equal keys.
std::string wall_key(const Wall& w);

std::vector<Wall> enumerate_walls(int ground, int bricks, bool connected,
                                  const WallBudget& budget = {});

long long count_ordered_walls(int ground, int bricks, const WallBudget& budget = {});

/// Classes of the adjacency "intersect and form a successor pair", as
/// sorted lists of brick indices, ordered by least index.
std::vector<std::vector<int>> connected_components(const Wall& w);

bool is_connected(const Wall& w);

/// Partition of the ground set by unions of bricks over each connected
/// component.
SetPartition kappa(const Wall& w);

/// Blocks of both partitions as bricks; every first-block below every
/// intersecting second-block.
Wall wall_from_partition_pair(const PartitionPair& p);

bool partition_pair_connected(const SetPartition& first, const SetPartition& second);

/// All pairs (I,J) of partitions of 1..n whose block-intersection
/// bipartite graph is connected.
std::vector<PartitionPair> enumerate_xconn(int n, const WallBudget& budget = {});

/// kappa applied to a partition pair: one step of the iterated projection.
SetPartition kappa_pair(const SetPartition& first, const SetPartition& second);

Wall vertical_product(const Wall& w, const Wall& l);
Wall horizontal_product(const Wall& w, const Wall& l);

/// Relabel wm along iota and wn along jota (1-based images in 1..ground),
/// stack the images: wm-brick below every intersecting wn-brick.
/// Images must cover 1..ground and intersect.
Wall graft(const std::vector<int>& iota, const std::vector<int>& jota, const Wall& wm,
           const Wall& wn, int ground);

/// Right action by a permutation of the ground set: bricks are replaced by
/// preimages, then the wall is canonicalized.
Wall aut_action(const Wall& w, const std::vector<int>& sigma);

} // namespace wallkit

#endif

#ifndef WALLKIT_PARTITION_HPP
#define WALLKIT_PARTITION_HPP

#include <cstdint>
#include <vector>

namespace wallkit {

/// Blocks are element bitmasks (bit e-1 <=> element e), kept sorted by
/// minimum element, pairwise disjoint, jointly covering 1..ground.
struct SetPartition {
    int ground = 0;
    std::vector<std::uint32_t> blocks;
};

bool operator==(const SetPartition& a, const SetPartition& b);
bool operator<(const SetPartition& a, const SetPartition& b);

SetPartition make_partition(int ground, std::vector<std::uint32_t> blocks);

/// All set partitions of 1..n, restricted-growth order.
std::vector<SetPartition> enumerate_partitions(int n);

/// All ordered partitions (sequences of disjoint nonempty masks covering
/// 1..n) with exactly r blocks, lexicographic in the block sequence.
std::vector<std::vector<std::uint32_t>> enumerate_ordered_partitions(int n, int r);

long long binomial(int n, int k);
long long factorial(int n);
long long bell_number(int n);
long long stirling2(int n, int r);

int mask_min_element(std::uint32_t mask);
int mask_size(std::uint32_t mask);
std::vector<int> mask_elements(std::uint32_t mask);

} // namespace wallkit

#endif

#ifndef WALLKIT_POSET_HPP
#define WALLKIT_POSET_HPP

#include <utility>
#include <vector>

namespace wallkit {

/// Strict partial order on the carrier 1..size. The relation is kept
/// transitively closed; (a,b) present means a < b.
struct StrictPoset {
    int size = 0;
    std::vector<std::pair<int, int>> rel; // sorted lexicographically

    bool less(int a, int b) const;
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
};

bool operator==(const StrictPoset& a, const StrictPoset& b);

/// Smallest transitively closed superset of `pairs` on 1..size.
/// Throws CycleDetected when the closure would break antisymmetry.
StrictPoset transitive_closure(std::vector<std::pair<int, int>> pairs, int size);

/// All pairs (k,l) with k < l and nothing strictly between, in
/// lexicographic order.
std::vector<std::pair<int, int>> succ_pairs(const StrictPoset& p);

/// Length of the longest chain ending at k; minimal elements have height 1.
int height(const StrictPoset& p, int k);

/// Heights of every carrier element, indexed by element-1.
std::vector<int> heights(const StrictPoset& p);

/// Merge a successor pair (k,l) into one class. The class sits at index
/// min(k,l); indices above max(k,l) shift down by one.
StrictPoset quotient_by_successor_pair(const StrictPoset& p, std::pair<int, int> kl);

} // namespace wallkit

#endif

#ifndef WALLKIT_COLOURING_HPP
#define WALLKIT_COLOURING_HPP

#include <atomic>
#include <cstdint>
#include <vector>

#include "wallkit/intmatrix.hpp"
#include "wallkit/wall.hpp"

namespace wallkit {

/// Isomorphism class of a colouring: the partition of the wall's bricks
/// into fibers. Fibers are brick-index bitmasks sorted by least index.
/// Valid iff every fiber is connected as the sub-wall it spans and the
/// relation induced on fibers by the wall order is acyclic.
struct Colouring {
    Wall wall;
    std::vector<std::uint32_t> fibers;

    int colour_count() const { return static_cast<int>(fibers.size()); }
};

bool operator==(const Colouring& a, const Colouring& b);

/// Degree-graded lists: result[k-1] holds the colourings with k colours,
/// canonically ordered. Budget: at most 8 bricks.
std::vector<std::vector<Colouring>> enumerate_colourings(const Wall& w);

bool colouring_is_valid(const Wall& w, const std::vector<std::uint32_t>& fibers);

/// Total order extending the wall order: brick indices sorted by
/// (height, min element); position = rank.
std::vector<int> brick_total_order(const Wall& w);

/// The closed strict order induced on fibers (carrier = fiber positions).
StrictPoset colour_quotient_order(const Colouring& c);

/// Successor pairs of the colour order, sorted by the least brick of the
/// union of the two fibers.
std::vector<std::pair<int, int>> succ_colour_pairs(const Colouring& c);

/// Merge a successor pair of colours; revalidates and throws InvalidMerge
/// if the result is not a colouring.
Colouring merge_colour_pair(const Colouring& c, std::pair<int, int> pair);

/// Exponent of the sign carried by merging `pair`.
int sign_lambda(const Colouring& c, std::pair<int, int> pair);

struct IntegerChainComplex {
    std::vector<std::vector<Colouring>> basis; // basis[k-1] = degree k
    std::vector<IntMatrix> boundary;           // boundary[k-1]: C_k -> C_{k-1}

    int top_degree() const { return static_cast<int>(basis.size()); }
};

/// Builds the complex and verifies boundary * boundary = 0; a failure
/// raises SignConventionBroken.
IntegerChainComplex build_complex(const Wall& w);

struct HomologySummary {
    std::vector<long long> graded_counts;         // index k-1 = |Col_k|
    std::vector<long long> betti;                 // index k-1 = rank H_k
    std::vector<std::vector<long long>> torsion;  // invariant factors > 1 of H_k
    bool d_squared_zero = true;
    long long euler = 0; // sum (-1)^k |Col_k|

    bool acyclic() const;
};

HomologySummary betti_numbers(const IntegerChainComplex& cx);

/// Connected components as stand-alone walls over their own grounds.
std::vector<Wall> component_walls(const Wall& w);

/// For a disconnected wall: graded counts and Betti numbers of its complex
/// equal the tensor product of the component complexes.
bool complex_tensor_check(const Wall& w);

namespace detail {
/// Test hook: nonzero values corrupt the sign rule so the d^2 = 0 check
/// must fail; used by the verification runner's negative control.
extern std::atomic<int> sign_corruption;
} // namespace detail

} // namespace wallkit

#endif

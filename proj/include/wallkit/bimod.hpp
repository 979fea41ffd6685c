#ifndef WALLKIT_BIMOD_HPP
#define WALLKIT_BIMOD_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wallkit/dimseq.hpp"

namespace wallkit {

/// (out-arity, in-arity)-indexed dimensions of a reduced bimodule.
class BimodDimGrid {
public:
    long long at(int m, int n) const;
    void set(int m, int n, long long value);
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    friend bool operator==(const BimodDimGrid& a, const BimodDimGrid& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<std::pair<int, int>, long long> entries_;
};

/// Induced grid: (n,n) -> n! v(n), zero off the diagonal.
BimodDimGrid ind_dims(const DimSeq& v, int n_max);

/// Restriction along the diagonal: d(n) = g(n,n).
DimSeq res_dims(const BimodDimGrid& g, int n_max);

/// How the symmetric group acts on a distinguished basis of the in-arity
/// component; decides the coinvariant dimension in the composition product.
enum class CoinvariantMode {
    free_right_action, // regular-type: divide by N!
    trivial_action,    // basis fixed pointwise: plain product
};

/// Composition product of grids. `mode` must be asserted by the caller;
/// passing nullopt raises FreenessNotAsserted.
BimodDimGrid bimod_compose_dims(const BimodDimGrid& p, const BimodDimGrid& q,
                                std::optional<CoinvariantMode> mode, int max_inner,
                                int max_out, int max_in);

/// Unit grid for the composition product: (n,n) -> n!.
BimodDimGrid identity_compose_grid(int n_max);

/// Concatenation product:
/// d(m,n) = sum C(m,a) C(n,b) p(a,b) q(m-a,n-b), both splits nonempty.
BimodDimGrid bimod_conc_dims(const BimodDimGrid& p, const BimodDimGrid& q, int max_out,
                             int max_in);

using Perm = std::vector<int>; // one-line notation, perm[i-1] = image of i

/// Ordered partition whose blocks carry a significant listing order.
using OrderedPartition = std::vector<std::vector<int>>;

/// Permutations of S_N whose strand graph is connected when position i is
/// gathered by the alpha grouping and sigma(i) by the beta grouping.
std::vector<Perm> connected_permutations(const std::vector<int>& alpha,
                                         const std::vector<int>& beta);

bool is_connected_permutation(const Perm& sigma, const std::vector<int>& alpha,
                              const std::vector<int>& beta);

/// phi: reads both listings and returns sigma_K^{-1} o sigma_J, where
/// sigma_K maps position i to the i-th listed element of K.
Perm partition_pair_to_connected_permutation(const OrderedPartition& K,
                                             const OrderedPartition& J);

/// psi: K = ((sigma^{-1}(1..k1)), ...), J = the jbar interval blocks.
/// Section of phi: phi(psi(sigma)) = sigma.
std::pair<OrderedPartition, OrderedPartition> section(const Perm& sigma,
                                                      const std::vector<int>& kbar,
                                                      const std::vector<int>& jbar);

/// Dimension of (Ind v boxtimes Ind w)(n,n) computed from the pre-quotient
/// index set, divided by n! (free action). Budget: n <= 4.
long long val_boxtimes_induced_dims(const DimSeq& v, const DimSeq& w, int n);

} // namespace wallkit

#endif

#ifndef WALLKIT_DIMSEQ_HPP
#define WALLKIT_DIMSEQ_HPP

#include <string>
#include <vector>

#include "wallkit/wall.hpp"

namespace wallkit {

/// Arity-indexed dimensions of a reduced module, arities 1..max_arity;
/// entries beyond the stored range are zero.
class DimSeq {
public:
    DimSeq() = default;
    explicit DimSeq(std::vector<long long> dims);

    static DimSeq zeros(int n_max);
    static DimSeq delta(int arity, int n_max); // 1 at `arity`, else 0
    static DimSeq ones(int n_max);

    long long at(int arity) const;
    void set(int arity, long long value);
    int max_arity() const { return static_cast<int>(dims_.size()); }
    const std::vector<long long>& raw() const { return dims_; }

    friend bool operator==(const DimSeq& a, const DimSeq& b) { return a.dims_ == b.dims_; }

private:
    std::vector<long long> dims_;
};

DimSeq parse_dimseq(const std::string& text);
std::string format_dimseq(const DimSeq& d);

DimSeq operator+(const DimSeq& p, const DimSeq& q);

/// Pointwise product (the composition product at dimension level).
DimSeq hadamard_dims(const DimSeq& p, const DimSeq& q, int n_max);

/// d(n) = sum_{k=1}^{n-1} C(n,k) p(k) q(n-k).
DimSeq conc_dims(const DimSeq& p, const DimSeq& q, int n_max);

/// Commutative free monoid transform: s(n) = sum over set partitions of
/// [1,n] of the product of p over block sizes.
DimSeq s_dims(const DimSeq& p, int n_max);

/// Inverse of s_dims; throws NegativeDimension when no preimage exists.
DimSeq s_log(const DimSeq& s, int n_max);

/// Connected composition product. Computed via s_log(s(p) * s(q)); for
/// n <= 6 an independent enumeration over X^conn(n) is run as well and the
/// two values are required to agree.
DimSeq boxtimes_dims(const DimSeq& p, const DimSeq& q, int n_max);

/// The X^conn enumeration path on its own (test oracle).
long long boxtimes_dims_xconn_oracle(const DimSeq& p, const DimSeq& q, int n);

/// Weight-rho part of the free protoperad on `gen`, at arity n: sum over
/// connected walls with rho bricks of the product of gen over brick sizes.
long long free_proto_dims(const DimSeq& gen, int rho, int n, const WallBudget& budget = {});

/// Closed form of the weight-2 part: ordered pairs (K,L), K u L = S,
/// K n L != 0, weighted by gen(|K|) gen(|L|).
long long free_weight2_closed(const DimSeq& gen, int n);

/// Independent levelled-partition evaluation of free_proto_dims.
/// Budget: n <= 4, rho <= 4.
long long free_proto_dims_level_oracle(const DimSeq& gen, int rho, int n);

} // namespace wallkit

#endif

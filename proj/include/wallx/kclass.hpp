#pragma once

#include <compare>
#include <map>
#include <vector>

#include "wallx/zrat.hpp"

namespace wallx {

// Bigraded character z^a s^m. Even m encodes t^{m/2}; odd m is a genuine
// half weight of t.
struct Weight {
    long a = 0;
    long m = 0;
    auto operator<=>(const Weight&) const = default;
};

// Equivariant K-theory class as a finite multiset of weights; multiplicities
// may be negative, zeros are never stored.
class KClassRep {
  public:
    KClassRep() = default;

    KClassRep& add(Weight w, long mult);
    long mult(Weight w) const;
    const std::map<Weight, long>& weights() const { return mult_; }
    bool empty() const { return mult_.empty(); }

    // Sum of all multiplicities.
    long rank() const;

  private:
    std::map<Weight, long> mult_;
};

// K-theoretic Euler class: product over weights w of (1 - w^{-1})^{mult}.
// The trivial character in a denominator position (negative multiplicity)
// is an uninvertible 1 - 1 factor and is rejected.
ZRat euler(const KClassRep& k);

// One Chern-root factor -s^{-1}(s^2 - z^a s^m)/(1 - z^a s^m); a != 0.
ZRat sym_euler_factor(long a, long m);

// 1/e-hat of F^dual - t^{-1} F: the product of sym_euler_factor over the
// Chern roots of F. Every weight must have a != 0.
ZRat sym_euler_inverse(const KClassRep& f);

// rank of the positive-z part minus rank of the negative-z part.
long mb_index(const KClassRep& f);

// (-1)^ind (s^ind - s^{-ind}) with ind = mb_index(f).
SRat residue_jump(const KClassRep& f);

struct FixedLocusDatum {
    SRat amplitude;
    KClassRep f; // all weights with a != 0
};

// kres(sum_Z amplitude_Z * sym_euler_inverse(F_Z))
//   - sum_Z amplitude_Z * residue_jump(F_Z);  identically zero.
SRat master_relation_residual(const std::vector<FixedLocusDatum>& loci);

// (-1)^N s^{-N} sum_{i,j=0}^N (-1)^{i+j} h^{i,j} s^{2j} with h^{i,j} the
// Hodge numbers of P^N; equals qint(N+1). N >= 0.
SPoly projective_bundle_factor(long n);

} // namespace wallx

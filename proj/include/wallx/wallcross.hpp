#pragma once

#include <map>
#include <utility>

#include "wallx/lattice.hpp"
#include "wallx/srat.hpp"

namespace wallx {

// Semistable invariants VW_alpha, keyed by class.
class InvariantTable {
  public:
    InvariantTable() = default;

    void set(const ChernClass& alpha, SRat value);
    bool has(const ChernClass& alpha) const;
    const SRat& at(const ChernClass& alpha) const; // throws when missing
    const std::map<ChernClass, SRat>& entries() const { return entries_; }

    bool operator==(const InvariantTable&) const = default;

  private:
    std::map<ChernClass, SRat> entries_;
};

// Pair invariants tilde-VW(k, alpha), keyed by (framing twist, class).
class PairTable {
  public:
    PairTable() = default;

    void set(long k, const ChernClass& alpha, SRat value);
    bool has(long k, const ChernClass& alpha) const;
    const SRat& at(long k, const ChernClass& alpha) const;
    const std::map<std::pair<long, ChernClass>, SRat>& entries() const {
        return entries_;
    }

    bool operator==(const PairTable&) const = default;

  private:
    std::map<std::pair<long, ChernClass>, SRat> entries_;
};

// Expansion of semistable invariants into pair invariants at twist k:
// for each target alpha,
//   tilde(k, alpha) = sum over ordered decompositions (a_1, ..., a_n)
//     (1/n!) prod_j [lambda_k(a_j) - chi(a_1 + ... + a_{j-1}, a_j)] VW_{a_j}.
// Classes with lambda_k <= 0 among the decomposition parts produce a
// warning (the geometry requires k >> 0).
PairTable forward_expand(const ClassLattice& lattice, const InvariantTable& vw,
                         long k, const std::vector<ChernClass>& targets,
                         std::vector<std::string>* warnings = nullptr);

// Unique inverse of forward_expand, by recursion on tilde_r. Requires
// lambda_k(alpha) != 0 for every class involved.
InvariantTable invert(const ClassLattice& lattice, const PairTable& tilde,
                      long k, const std::vector<ChernClass>& targets);

// Wall-crossing relation residual at target alpha:
//   [lambda_{k2}(alpha)] tilde1(alpha) - [lambda_{k1}(alpha)] tilde2(alpha)
//   + sum over ordered 2-part decompositions alpha = a1 + a2 of
//     [lambda_{k2}(a1) - lambda_{k1}(a2) + chi(a1, a2)] tilde1(a1) tilde2(a2).
// Identically zero when both tables expand a common invariant table.
SRat relation_residual(const ClassLattice& lattice, const PairTable& tilde1,
                       long k1, const PairTable& tilde2, long k2,
                       const ChernClass& target);

// First two terms only (the case with no decomposable contribution).
SRat relation_residual_simple(const ClassLattice& lattice,
                              const PairTable& tilde1, long k1,
                              const PairTable& tilde2, long k2,
                              const ChernClass& target);

// Combinatorial coefficient C_{alpha_1..alpha_n} on integer data: vectors
// a, b of length n and an anti-symmetric integer matrix c.
SPoly c_coeff(const std::vector<long>& a, const std::vector<long>& b,
              const std::vector<std::vector<long>>& c);

// Sum of c_coeff over all n! simultaneous permutations of (a, b, c).
// Identically zero.
SPoly perm_sum_residual(const std::vector<long>& a, const std::vector<long>& b,
                        const std::vector<std::vector<long>>& c);

// [a+b][c] - [c-a][b] - [b+c][a]; identically zero.
SPoly jacobi_residual(long a, long b, long c);

} // namespace wallx

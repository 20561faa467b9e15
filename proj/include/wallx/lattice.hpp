#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallx/rational.hpp"

namespace wallx {

// Topological class in the lattice, as integer coordinates.
struct ChernClass {
    std::vector<long> coords;

    bool is_zero() const;
    auto operator<=>(const ChernClass&) const = default;
    ChernClass operator+(const ChernClass& rhs) const;
    std::string to_string() const;
};

// Monic polynomial in n over Q, coefficients ascending; leading coefficient
// is exactly 1.
class MonicPoly {
  public:
    explicit MonicPoly(std::vector<Rat> ascending_coeffs);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long i) const { return coeffs_[static_cast<size_t>(i)]; }
    Rat eval(const Rat& x) const;
    bool operator==(const MonicPoly&) const = default;
    std::string to_string() const;

  private:
    std::vector<Rat> coeffs_;
};

enum class Ord { LT, EQ, GT };

// Gieseker order on monic polynomials: f <= g iff deg f > deg g, or equal
// degree and the first differing coefficient from the top makes f smaller
// (equivalently f(n) <= g(n) for n >> 0).
Ord tau_cmp(const MonicPoly& f, const MonicPoly& g);

// Value of the pair stability condition tau_mu. The infinite branches occur
// only for alpha = 0.
struct StabilityValue {
    enum class First { minus_infinity, finite, plus_infinity };
    First kind = First::finite;
    std::optional<MonicPoly> poly; // set iff kind == finite
    Rat second;

    bool operator==(const StabilityValue&) const = default;
};

Ord stability_cmp(const StabilityValue& x, const StabilityValue& y);

// Integer lattice of topological classes with Hilbert-polynomial and
// chi-pairing data. hilbert is a (dim+1) x m matrix: row i gives the n^i
// coefficient of P_alpha as a linear functional of alpha. chi is an
// anti-symmetric m x m pairing matrix. The effective set is the declared
// finite list of classes over which decompositions are enumerated.
class ClassLattice {
  public:
    ClassLattice(size_t m, int dim, std::vector<std::vector<Rat>> hilbert,
                 std::vector<std::vector<Rat>> chi,
                 std::vector<ChernClass> effective);

    size_t m() const { return m_; }
    int dim() const { return dim_; }
    const std::vector<ChernClass>& effective() const { return effective_; }
    const std::vector<std::vector<Rat>>& hilbert_matrix() const {
        return hilbert_;
    }
    const std::vector<std::vector<Rat>>& chi_matrix() const { return chi_; }

    // Coefficients of P_alpha, ascending, length dim+1.
    std::vector<Rat> hilbert_poly(const ChernClass& alpha) const;

    // lambda_k(alpha) = P_alpha(k); must be an integer.
    long lambda_k(const ChernClass& alpha, long k) const;

    // Leading coefficient of P_alpha.
    Rat rank_r(const ChernClass& alpha) const;

    // (dim)! * r(alpha); must be a positive integer for nonzero classes.
    long tilde_r(const ChernClass& alpha) const;

    // Normalized Hilbert polynomial P_alpha / r(alpha); alpha must have
    // r(alpha) > 0.
    MonicPoly tau(const ChernClass& alpha) const;

    StabilityValue tau_mu(const ChernClass& alpha,
                          const std::vector<long>& dvec,
                          const std::vector<Rat>& mu) const;

    // alpha^T chi beta; must be an integer.
    long chi_pair(const ChernClass& alpha, const ChernClass& beta) const;

    // True iff every effective beta with tau(beta) = tau(alpha) is a
    // rational multiple of alpha.
    bool is_generic(const ChernClass& alpha) const;
    bool is_generic(const std::vector<ChernClass>& effective,
                    const ChernClass& alpha) const;

    // All tuples of effective classes summing to alpha with each part's tau
    // equal to tau(alpha). Ordered tuples when `ordered`; otherwise one
    // representative per multiset, parts in declaration order.
    std::vector<std::vector<ChernClass>>
    decompositions(const ChernClass& alpha, bool ordered,
                   std::optional<int> max_n = std::nullopt) const;
    std::vector<std::vector<ChernClass>>
    decompositions(const ChernClass& alpha,
                   const std::vector<ChernClass>& effective, bool ordered,
                   std::optional<int> max_n = std::nullopt) const;

  private:
    void check_class(const ChernClass& alpha) const;

    size_t m_;
    int dim_;
    std::vector<std::vector<Rat>> hilbert_;
    std::vector<std::vector<Rat>> chi_;
    std::vector<ChernClass> effective_;
};

} // namespace wallx

#pragma once

#include <map>
#include <string>

#include "wallx/rational.hpp"

namespace wallx {

// Laurent polynomial in the variable s over Rat. s encodes t^{1/2}, so the
// exponent of t^k is 2k. The zero polynomial is the empty term map; stored
// coefficients are never zero.
class SPoly {
  public:
    SPoly() = default;
    explicit SPoly(const Rat& constant);
    explicit SPoly(long constant);

    static SPoly monomial(const Rat& coeff, long exp);
    static SPoly s_power(long exp) { return monomial(Rat(1), exp); }
    static SPoly one() { return SPoly(Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    // Lowest/highest exponent with nonzero coefficient. Requires nonzero.
    long min_exp() const;
    long max_exp() const;

    Rat coeff(long exp) const;
    Rat leading_coeff() const; // coefficient of max_exp()
    const std::map<long, Rat>& terms() const { return terms_; }

    SPoly& operator+=(const SPoly& rhs);
    SPoly& operator-=(const SPoly& rhs);
    SPoly& operator*=(const SPoly& rhs);
    SPoly operator-() const;

    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator*(const SPoly& a, const SPoly& b);

    bool operator==(const SPoly& rhs) const { return terms_ == rhs.terms_; }

    SPoly& scale(const Rat& c);           // multiply by a scalar
    SPoly shifted(long exp) const;        // multiply by s^exp
    SPoly& add_term(long exp, const Rat& c);

    // Substitution s -> 1/s.
    SPoly inverted() const;
    bool is_palindromic() const { return *this == inverted(); }

    // Evaluation at a nonzero rational point (negative exponents allowed).
    Rat eval(const Rat& x) const;

    // Evaluation mod p at s = s0 (0 < s0 < p, p prime). Used as a fast
    // exact pre-check before polynomial gcds.
    unsigned long eval_mod(unsigned long s0, unsigned long p) const;

    std::string to_string() const; // diagnostics only

  private:
    std::map<long, Rat> terms_;
};

// Quantities from the quantized wall-crossing calculus.

// Symmetrized quantum integer [n]: (-1)^{n-1}(s^n - s^{-n})/(s - s^{-1}),
// computed in telescoped closed form.
SPoly qint(long n);

enum class AdditionBranch { upper, lower };

// [a+b] - ((-1)^a s^{+a}[b] + (-1)^b s^{-b}[a]) for the upper branch, with
// both exponent signs flipped for the lower branch. Identically zero.
SPoly qint_addition_residual(long a, long b, AdditionBranch branch);

// Polynomial division helpers over Q, on ordinary (min_exp >= 0)
// polynomials. divmod requires a nonzero divisor.
struct SPolyDivMod {
    SPoly quot;
    SPoly rem;
};
SPolyDivMod spoly_divmod(const SPoly& a, const SPoly& b);

// Monic gcd with min_exp 0; gcd(0, 0) = 0. Inputs may be Laurent: unit
// factors s^k are divided out first.
SPoly spoly_gcd(const SPoly& a, const SPoly& b);

// Exact quotient; throws if the division leaves a remainder.
SPoly spoly_divexact(const SPoly& a, const SPoly& b);

} // namespace wallx

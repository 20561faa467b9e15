#pragma once

#include "wallx/spoly.hpp"

namespace wallx {

// Element of Q(s), the fraction field of Laurent polynomials in s. Kept in
// canonical form: gcd(num, den) = 1 after clearing s-powers, and the
// denominator is an ordinary polynomial with min_exp 0 and leading
// coefficient 1. Equality is structural.
class SRat {
  public:
    SRat() : num_(), den_(SPoly::one()) {}
    SRat(const Rat& constant) : num_(constant), den_(SPoly::one()) {}
    SRat(long constant) : num_(constant), den_(SPoly::one()) {}
    explicit SRat(SPoly num) : num_(std::move(num)), den_(SPoly::one()) {}
    SRat(SPoly num, SPoly den); // throws on zero denominator

    static SRat s_power(long exp) { return SRat(SPoly::s_power(exp)); }
    static SRat one() { return SRat(1); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    SRat& operator+=(const SRat& rhs);
    SRat& operator-=(const SRat& rhs);
    SRat& operator*=(const SRat& rhs);
    SRat& operator/=(const SRat& rhs); // throws on zero divisor
    SRat operator-() const;

    friend SRat operator+(SRat a, const SRat& b) { return a += b; }
    friend SRat operator-(SRat a, const SRat& b) { return a -= b; }
    friend SRat operator*(SRat a, const SRat& b) { return a *= b; }
    friend SRat operator/(SRat a, const SRat& b) { return a /= b; }

    SRat inverse() const;

    bool operator==(const SRat& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    // Value at s = 1, i.e. the t -> 1 limit. Throws domain_error when the
    // reduced denominator vanishes at 1.
    Rat classical_limit() const;

    // Value mod p at s = s0; false when a denominator vanishes mod p.
    bool eval_mod(unsigned long s0, unsigned long p, unsigned long& out) const;

    std::string to_string() const;

  private:
    void normalize();

    SPoly num_;
    SPoly den_;
};

Rat classical_limit(const SRat& x);

} // namespace wallx

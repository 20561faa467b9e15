#pragma once

#include <map>
#include <vector>

#include "wallx/srat.hpp"

namespace wallx {

// Dense polynomial in z with SRat coefficients; index = z-exponent. The
// coefficient vector carries no trailing zeros (zero polynomial = empty).
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(SRat constant);
    explicit ZPoly(std::vector<SRat> coeffs);

    static ZPoly one() { return ZPoly(SRat(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    long degree() const; // requires nonzero
    long valuation() const; // lowest index with nonzero coefficient

    const SRat& coeff(long i) const;
    const std::vector<SRat>& coeffs() const { return coeffs_; }
    const SRat& leading() const;

    ZPoly& operator+=(const ZPoly& rhs);
    ZPoly& operator-=(const ZPoly& rhs);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator-() const;

    bool operator==(const ZPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    ZPoly& scale(const SRat& c);
    ZPoly shifted(long k) const; // multiply by z^k; k >= -valuation
    ZPoly reversed() const;      // z^degree * p(1/z)

    ZPoly& trim();

  private:
    std::vector<SRat> coeffs_;
};

struct ZPolyDivMod {
    ZPoly quot;
    ZPoly rem;
};
ZPolyDivMod zpoly_divmod(const ZPoly& a, const ZPoly& b);

// gcd over the coefficient field SRat, returned with primitive integer
// coefficients; gcd(0, 0) = 0. A modular evaluation certificate
// short-circuits the common coprime case; otherwise a primitive
// pseudo-remainder sequence over Z[s][z] runs.
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// Rational function of z over SRat, stored as z^v * num/den with
// num(0) != 0 (when num != 0), den(0) != 0, and gcd(num, den) = 1. The
// representation is unique up to a unit of SRat, so equality is decided by
// cross-multiplication.
class ZRat {
  public:
    ZRat() : den_(ZPoly::one()) {}
    ZRat(const SRat& constant);
    ZRat(long constant) : ZRat(SRat(constant)) {}

    static ZRat z_power(long k);
    static ZRat monomial(const SRat& coeff, long z_exp);
    // General constructor: z^v * num/den, normalized. Throws on den = 0.
    static ZRat from_parts(long v, ZPoly num, ZPoly den);

    bool is_zero() const { return num_.is_zero(); }
    long valuation_shift() const { return v_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    ZRat& operator+=(const ZRat& rhs);
    ZRat& operator-=(const ZRat& rhs);
    ZRat& operator*=(const ZRat& rhs);
    ZRat& operator/=(const ZRat& rhs); // throws on zero divisor
    ZRat operator-() const;

    friend ZRat operator+(ZRat a, const ZRat& b) { return a += b; }
    friend ZRat operator-(ZRat a, const ZRat& b) { return a -= b; }
    friend ZRat operator*(ZRat a, const ZRat& b) { return a *= b; }
    friend ZRat operator/(ZRat a, const ZRat& b) { return a /= b; }

    ZRat inverse() const;

    bool operator==(const ZRat& rhs) const {
        if (is_zero() || rhs.is_zero())
            return is_zero() == rhs.is_zero();
        return v_ == rhs.v_ && num_ * rhs.den_ == rhs.num_ * den_;
    }

    // Laurent expansion around z = 0: coefficients of z^e for e from the
    // valuation up to `order`, zero entries omitted. Requires order >= 0.
    std::map<long, SRat> expand_at_zero(long order) const;

    // Laurent expansion around z = infinity, reported on z-exponents; the
    // entries run from the leading exponent down to z^{-order}.
    std::map<long, SRat> expand_at_infinity(long order) const;

    // K-theoretic residue: z^0 coefficient of (expansion at 0) minus z^0
    // coefficient of (expansion at infinity).
    SRat kres() const;

    // Limits at the two ends; throw domain_error when the valuation there
    // is negative (pole).
    SRat limit_zero() const;
    SRat limit_infinity() const;

  private:
    void normalize();

    long v_ = 0;
    ZPoly num_;
    ZPoly den_;
};

} // namespace wallx

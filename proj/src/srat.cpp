#include "wallx/srat.hpp"

namespace wallx {

SRat::SRat(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void SRat::normalize() {
    if (den_.is_zero())
        throw domain_error("SRat with zero denominator");
    if (num_.is_zero()) {
        den_ = SPoly::one();
        return;
    }
    if (den_.is_constant() && num_.is_constant()) {
        num_ = SPoly(num_.coeff(num_.min_exp()) / den_.coeff(0));
        // constant num_ may sit at a nonzero exponent: rebuild explicitly
        den_ = SPoly::one();
        return;
    }
    long vn = num_.min_exp();
    long vd = den_.min_exp();
    SPoly n0 = num_.shifted(-vn);
    SPoly d0 = den_.shifted(-vd);
    if (!d0.is_constant()) {
        SPoly g = spoly_gcd(n0, d0);
        if (!g.is_one() && !g.is_zero()) {
            n0 = spoly_divexact(n0, g);
            d0 = spoly_divexact(d0, g);
        }
    }
    Rat lead = d0.leading_coeff();
    if (lead != 1) {
        Rat inv = 1 / lead;
        n0.scale(inv);
        d0.scale(inv);
    }
    num_ = n0.shifted(vn - vd);
    den_ = std::move(d0);
}

SRat& SRat::operator+=(const SRat& rhs) {
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ += rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

SRat& SRat::operator-=(const SRat& rhs) {
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ -= rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

SRat& SRat::operator*=(const SRat& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    if (!(den_.is_one()))
        normalize();
    return *this;
}

SRat& SRat::operator/=(const SRat& rhs) {
    if (rhs.is_zero())
        throw domain_error("division by zero SRat");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

SRat SRat::operator-() const {
    SRat out = *this;
    out.num_ = -out.num_;
    return out;
}

SRat SRat::inverse() const {
    if (is_zero())
        throw domain_error("inverse of zero SRat");
    SRat out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

Rat SRat::classical_limit() const {
    Rat d = den_.eval(Rat(1));
    if (d == 0)
        throw domain_error("pole at s = 1 in classical limit");
    return num_.eval(Rat(1)) / d;
}

bool SRat::eval_mod(unsigned long s0, unsigned long p,
                    unsigned long& out) const {
    unsigned long d = den_.eval_mod(s0, p);
    if (d == 0)
        return false;
    unsigned long n;
    try {
        n = num_.eval_mod(s0, p);
    } catch (const domain_error&) {
        return false; // a coefficient's denominator vanished mod p
    }
    // d != 0 so the inverse exists
    unsigned long dinv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1)
            dinv = static_cast<unsigned long>(
                (static_cast<unsigned __int128>(dinv) * base) % p);
        base = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    out = static_cast<unsigned long>(
        (static_cast<unsigned __int128>(n) * dinv) % p);
    return true;
}

std::string SRat::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Rat classical_limit(const SRat& x) { return x.classical_limit(); }

} // namespace wallx

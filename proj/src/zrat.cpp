#include "wallx/zrat.hpp"

#include <algorithm>

namespace wallx {

namespace {
const SRat kZero{};
} // namespace

ZPoly::ZPoly(SRat constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

ZPoly::ZPoly(std::vector<SRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

long ZPoly::degree() const {
    if (is_zero())
        throw domain_error("degree of zero polynomial");
    return static_cast<long>(coeffs_.size()) - 1;
}

long ZPoly::valuation() const {
    if (is_zero())
        throw domain_error("valuation of zero polynomial");
    long i = 0;
    while (coeffs_[static_cast<size_t>(i)].is_zero())
        ++i;
    return i;
}

const SRat& ZPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const SRat& ZPoly::leading() const {
    if (is_zero())
        throw domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

ZPoly& ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    return *this;
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return trim();
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return trim();
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero())
        return ZPoly{};
    ZPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, SRat{});
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out.trim();
}

ZPoly ZPoly::operator-() const {
    ZPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

ZPoly& ZPoly::scale(const SRat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

ZPoly ZPoly::shifted(long k) const {
    if (is_zero())
        return ZPoly{};
    if (k == 0)
        return *this;
    if (k < 0) {
        if (valuation() < -k)
            throw domain_error("negative shift below valuation");
        ZPoly out;
        out.coeffs_.assign(coeffs_.begin() + static_cast<size_t>(-k),
                           coeffs_.end());
        return out;
    }
    ZPoly out;
    out.coeffs_.assign(static_cast<size_t>(k), SRat{});
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

ZPoly ZPoly::reversed() const {
    ZPoly out = *this;
    std::reverse(out.coeffs_.begin(), out.coeffs_.end());
    return out.trim();
}

ZPolyDivMod zpoly_divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    ZPolyDivMod out;
    out.rem = a;
    long db = b.degree();
    SRat lb_inv = b.leading().inverse();
    while (!out.rem.is_zero() && out.rem.degree() >= db) {
        long e = out.rem.degree() - db;
        SRat c = out.rem.leading() * lb_inv;
        ZPoly step = b.shifted(e);
        step.scale(c);
        out.rem -= step;
        // record quotient term
        ZPoly term = ZPoly(c).shifted(e);
        out.quot += term;
        // guard against non-cancellation (cannot happen; keeps loop finite)
        if (!out.rem.is_zero() && out.rem.degree() >= db + e + 1)
            throw domain_error("division failed to reduce degree");
    }
    return out;
}

namespace {

// Exact coprimality certificate: evaluate both polynomials at s = s0 over
// F_p and take a gcd there. A degree-0 modular gcd proves coprimality over
// Q(s) provided the leading coefficients survive the evaluation.
bool coprime_certificate(const ZPoly& a, const ZPoly& b) {
    static const unsigned long kPrimes[] = {2147483647ul, 2147483629ul};
    static const unsigned long kPoints[] = {2, 3, 5, 7, 11};
    for (unsigned long p : kPrimes) {
        for (unsigned long s0 : kPoints) {
            std::vector<unsigned long> av, bv;
            bool ok = true;
            for (const auto& c : a.coeffs()) {
                unsigned long v;
                if (!c.eval_mod(s0, p, v)) {
                    ok = false;
                    break;
                }
                av.push_back(v);
            }
            if (ok)
                for (const auto& c : b.coeffs()) {
                    unsigned long v;
                    if (!c.eval_mod(s0, p, v)) {
                        ok = false;
                        break;
                    }
                    bv.push_back(v);
                }
            if (!ok || av.empty() || bv.empty())
                continue;
            if (av.back() == 0 || bv.back() == 0)
                continue; // leading coefficient dropped: point unusable
            // Euclid in F_p[z]
            auto mod_trim = [](std::vector<unsigned long>& v) {
                while (!v.empty() && v.back() == 0)
                    v.pop_back();
            };
            while (!bv.empty()) {
                // av mod bv
                unsigned long inv = 1, base = bv.back(), e = p - 2;
                while (e) {
                    if (e & 1)
                        inv = static_cast<unsigned long>(
                            (static_cast<unsigned __int128>(inv) * base) % p);
                    base = static_cast<unsigned long>(
                        (static_cast<unsigned __int128>(base) * base) % p);
                    e >>= 1;
                }
                while (av.size() >= bv.size()) {
                    unsigned long c = static_cast<unsigned long>(
                        (static_cast<unsigned __int128>(av.back()) * inv) % p);
                    size_t off = av.size() - bv.size();
                    for (size_t i = 0; i < bv.size(); ++i) {
                        unsigned long sub = static_cast<unsigned long>(
                            (static_cast<unsigned __int128>(c) * bv[i]) % p);
                        av[off + i] = (av[off + i] + p - sub) % p;
                    }
                    mod_trim(av);
                    if (av.empty())
                        break;
                }
                std::swap(av, bv);
                mod_trim(bv);
            }
            return av.size() == 1; // constant gcd <=> coprime
        }
    }
    return false; // no usable point: caller falls back to the full gcd
}

} // namespace

namespace {

// Coefficient-wise view over Q[s^{\pm}][z] used by the primitive PRS below.
using SPolyVec = std::vector<SPoly>;

void strip_trailing(SPolyVec& v) {
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
}

// gcd of all coefficients (monic, min_exp 0); the s-content of the poly.
SPoly content_s(const SPolyVec& v) {
    SPoly g;
    for (const auto& c : v) {
        if (c.is_zero())
            continue;
        g = spoly_gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

// Scale so every rational coefficient becomes an integer and the integer
// content is 1. Keeps the pseudo-remainder sequence inside primitive
// Z[s^{\pm}][z], where coefficient growth stays in check.
void strip_rational_content(SPolyVec& v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : v)
        for (const auto& [e, q] : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                    q.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    q.get_den().get_mpz_t());
        }
    if (num_gcd == 0)
        return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale == 1)
        return;
    for (auto& c : v)
        c.scale(scale);
}

void divide_content(SPolyVec& v) {
    strip_rational_content(v);
    SPoly g = content_s(v);
    if (!g.is_zero() && !g.is_one())
        for (auto& c : v)
            if (!c.is_zero())
                c = spoly_divexact(c, g);
    strip_rational_content(v);
}

// Clear SRat denominators; the result represents the input up to a unit of
// Q(s), which is all a gcd computation needs.
SPolyVec clear_denominators(const ZPoly& p) {
    SPoly lcm = SPoly::one();
    for (const auto& c : p.coeffs()) {
        if (c.is_zero() || c.den().is_one())
            continue;
        SPoly g = spoly_gcd(lcm, c.den());
        lcm = spoly_divexact(lcm * c.den(), g);
    }
    SPolyVec out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.is_zero())
            out.push_back(SPoly{});
        else
            out.push_back(c.num() * spoly_divexact(lcm, c.den()));
    }
    strip_trailing(out);
    return out;
}

// Pseudo-remainder of a by b over Q[s^{\pm}][z] (b nonzero, deg a >= deg b).
SPolyVec pseudo_rem(SPolyVec a, const SPolyVec& b) {
    const SPoly& lb = b.back();
    size_t db = b.size() - 1;
    while (a.size() > db) {
        SPoly la = a.back();
        size_t shift = a.size() - 1 - db;
        for (auto& c : a)
            c *= lb;
        for (size_t i = 0; i < db; ++i)
            a[shift + i] -= b[i] * la;
        a.pop_back(); // top term cancels by construction
        strip_trailing(a);
    }
    return a;
}

// Primitive PRS gcd in z over Q(s), with primitive integer coefficients.
ZPoly primitive_prs_gcd(const ZPoly& a, const ZPoly& b) {
    SPolyVec f = clear_denominators(a);
    SPolyVec g = clear_denominators(b);
    if (f.size() < g.size())
        std::swap(f, g);
    divide_content(f);
    divide_content(g);
    while (!g.empty()) {
        if (g.size() == 1)
            return ZPoly::one();
        SPolyVec r = pseudo_rem(std::move(f), g);
        divide_content(r);
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<SRat> out;
    out.reserve(f.size());
    for (auto& c : f)
        out.push_back(SRat(std::move(c)));
    return ZPoly(std::move(out));
}

} // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero())
        return ZPoly{};
    if (a.is_zero() || b.is_zero()) {
        ZPoly g = a.is_zero() ? b : a;
        g.scale(g.leading().inverse());
        return g;
    }
    if (a.is_constant() || b.is_constant())
        return ZPoly::one();
    if (coprime_certificate(a, b))
        return ZPoly::one();
    return primitive_prs_gcd(a, b);
}

ZRat::ZRat(const SRat& constant) : num_(constant), den_(ZPoly::one()) {}

ZRat ZRat::z_power(long k) {
    ZRat out(SRat(1));
    out.v_ = k;
    return out;
}

ZRat ZRat::monomial(const SRat& coeff, long z_exp) {
    ZRat out(coeff);
    if (!out.is_zero())
        out.v_ = z_exp;
    return out;
}

ZRat ZRat::from_parts(long v, ZPoly num, ZPoly den) {
    ZRat out;
    out.v_ = v;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.normalize();
    return out;
}

void ZRat::normalize() {
    if (den_.is_zero())
        throw domain_error("ZRat with zero denominator");
    if (num_.is_zero()) {
        v_ = 0;
        den_ = ZPoly::one();
        return;
    }
    long vn = num_.valuation();
    long vd = den_.valuation();
    if (vn > 0)
        num_ = num_.shifted(-vn);
    if (vd > 0)
        den_ = den_.shifted(-vd);
    v_ += vn - vd;
    if (!den_.is_constant() && !num_.is_constant()) {
        ZPoly g = zpoly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = zpoly_divmod(num_, g).quot;
            den_ = zpoly_divmod(den_, g).quot;
        }
    }
}

ZRat& ZRat::operator+=(const ZRat& rhs) {
    if (rhs.is_zero())
        return *this;
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    long v = std::min(v_, rhs.v_);
    // add over the least common denominator so the reduction step only ever
    // sees the small cofactors, not the full product of denominators
    ZPoly g = zpoly_gcd(den_, rhs.den_);
    ZPoly lhs_cof = g.is_constant() ? den_ : zpoly_divmod(den_, g).quot;
    ZPoly rhs_cof = g.is_constant() ? rhs.den_ : zpoly_divmod(rhs.den_, g).quot;
    ZPoly n = num_.shifted(v_ - v) * rhs_cof +
              rhs.num_.shifted(rhs.v_ - v) * lhs_cof;
    den_ = den_ * rhs_cof;
    num_ = std::move(n);
    v_ = v;
    normalize();
    return *this;
}

ZRat& ZRat::operator-=(const ZRat& rhs) {
    *this += -rhs;
    return *this;
}

ZRat& ZRat::operator*=(const ZRat& rhs) {
    if (is_zero() || rhs.is_zero()) {
        *this = ZRat{};
        return *this;
    }
    // cancel across the two reduced fractions first
    ZPoly g1 = zpoly_gcd(num_, rhs.den_);
    ZPoly g2 = zpoly_gcd(rhs.num_, den_);
    ZPoly n1 = g1.is_constant() ? num_ : zpoly_divmod(num_, g1).quot;
    ZPoly d2 = g1.is_constant() ? rhs.den_ : zpoly_divmod(rhs.den_, g1).quot;
    ZPoly n2 = g2.is_constant() ? rhs.num_ : zpoly_divmod(rhs.num_, g2).quot;
    ZPoly d1 = g2.is_constant() ? den_ : zpoly_divmod(den_, g2).quot;
    v_ += rhs.v_;
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize();
    return *this;
}

ZRat& ZRat::operator/=(const ZRat& rhs) {
    *this *= rhs.inverse();
    return *this;
}

ZRat ZRat::operator-() const {
    ZRat out = *this;
    out.num_ = -out.num_;
    return out;
}

ZRat ZRat::inverse() const {
    if (is_zero())
        throw domain_error("inverse of zero ZRat");
    ZRat out;
    out.v_ = -v_;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

std::map<long, SRat> ZRat::expand_at_zero(long order) const {
    if (order < 0)
        throw domain_error("expansion order must be nonnegative");
    std::map<long, SRat> out;
    if (is_zero() || v_ > order)
        return out;
    // invert the unit part of den_ as a power series: den_(0) != 0
    long nterms = order - v_ + 1;
    SRat c0_inv = den_.coeff(0).inverse();
    std::vector<SRat> inv(static_cast<size_t>(nterms));
    inv[0] = c0_inv;
    for (long j = 1; j < nterms; ++j) {
        SRat acc;
        for (long i = 1; i <= std::min<long>(j, den_.degree()); ++i)
            acc += den_.coeff(i) * inv[static_cast<size_t>(j - i)];
        inv[static_cast<size_t>(j)] = -(acc * c0_inv);
    }
    for (long j = 0; j < nterms; ++j) {
        SRat acc;
        for (long i = 0; i <= j; ++i) {
            const SRat& nc = num_.coeff(i);
            if (!nc.is_zero())
                acc += nc * inv[static_cast<size_t>(j - i)];
        }
        if (!acc.is_zero())
            out.emplace(v_ + j, std::move(acc));
    }
    return out;
}

std::map<long, SRat> ZRat::expand_at_infinity(long order) const {
    if (order < 0)
        throw domain_error("expansion order must be nonnegative");
    std::map<long, SRat> out;
    if (is_zero())
        return out;
    // substitute w = 1/z: f = w^{v'} rev(num)/rev(den) with
    // v' = deg den - deg num - v
    ZRat rev = ZRat::from_parts(den_.degree() - num_.degree() - v_,
                                num_.reversed(), den_.reversed());
    for (auto& [we, c] : rev.expand_at_zero(order))
        out.emplace(-we, std::move(c));
    return out;
}

SRat ZRat::kres() const {
    if (is_zero())
        return SRat{};
    SRat at_zero;
    if (v_ <= 0) {
        auto m = expand_at_zero(0);
        if (auto it = m.find(0); it != m.end())
            at_zero = it->second;
    }
    SRat at_inf;
    long vprime = den_.degree() - num_.degree() - v_;
    if (vprime <= 0) {
        auto m = expand_at_infinity(0);
        if (auto it = m.find(0); it != m.end())
            at_inf = it->second;
    }
    return at_zero - at_inf;
}

SRat ZRat::limit_zero() const {
    if (is_zero())
        return SRat{};
    if (v_ < 0)
        throw domain_error("limit at z = 0 does not exist (pole)");
    if (v_ > 0)
        return SRat{};
    return num_.coeff(0) / den_.coeff(0);
}

SRat ZRat::limit_infinity() const {
    if (is_zero())
        return SRat{};
    long vprime = den_.degree() - num_.degree() - v_;
    if (vprime < 0)
        throw domain_error("limit at z = infinity does not exist (pole)");
    if (vprime > 0)
        return SRat{};
    return num_.leading() / den_.leading();
}

} // namespace wallx

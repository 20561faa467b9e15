#include "wallx/spoly.hpp"

#include <sstream>

namespace wallx {

SPoly::SPoly(const Rat& constant) {
    if (constant != 0)
        terms_[0] = constant;
}

SPoly::SPoly(long constant) : SPoly(Rat(constant)) {}

SPoly SPoly::monomial(const Rat& coeff, long exp) {
    SPoly p;
    if (coeff != 0)
        p.terms_[exp] = coeff;
    return p;
}

bool SPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
}

bool SPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long SPoly::min_exp() const {
    if (is_zero())
        throw domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long SPoly::max_exp() const {
    if (is_zero())
        throw domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rat SPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat SPoly::leading_coeff() const { return terms_.rbegin()->second; }

SPoly& SPoly::add_term(long exp, const Rat& c) {
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

SPoly& SPoly::operator+=(const SPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

SPoly& SPoly::operator-=(const SPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

SPoly& SPoly::operator*=(const SPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

SPoly SPoly::operator-() const {
    SPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

SPoly& SPoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

SPoly SPoly::shifted(long exp) const {
    SPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e + exp] = c;
    return out;
}

SPoly SPoly::inverted() const {
    SPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[-e] = c;
    return out;
}

Rat SPoly::eval(const Rat& x) const {
    if (is_zero())
        return Rat(0);
    if (x == 0 && min_exp() < 0)
        throw domain_error("evaluation of Laurent polynomial at 0");
    Rat acc(0);
    long cur_exp = min_exp();
    Rat cur = [&] {
        Rat p(1);
        mpz_class num = x.get_num(), den = x.get_den();
        unsigned long k = static_cast<unsigned long>(
            cur_exp < 0 ? -cur_exp : cur_exp);
        mpz_class nk, dk;
        mpz_pow_ui(nk.get_mpz_t(), num.get_mpz_t(), k);
        mpz_pow_ui(dk.get_mpz_t(), den.get_mpz_t(), k);
        if (cur_exp >= 0)
            p = Rat(nk, dk);
        else
            p = Rat(dk, nk);
        p.canonicalize();
        return p;
    }();
    for (const auto& [e, c] : terms_) {
        while (cur_exp < e) {
            cur *= x;
            ++cur_exp;
        }
        acc += c * cur;
    }
    return acc;
}

namespace {

unsigned long mod_pow(unsigned long base, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            r = static_cast<unsigned long>(
                (static_cast<unsigned __int128>(r) * base) % p);
        base = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return r;
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
    return mod_pow(a, p - 2, p); // p prime
}

unsigned long rat_mod(const Rat& q, unsigned long p) {
    unsigned long n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    unsigned long d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (d == 0)
        throw domain_error("rational denominator vanishes mod p");
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(n) * mod_inv(d, p)) % p);
}

} // namespace

unsigned long SPoly::eval_mod(unsigned long s0, unsigned long p) const {
    unsigned long acc = 0;
    unsigned long s0_inv = mod_inv(s0 % p, p);
    for (const auto& [e, c] : terms_) {
        unsigned long pw = e >= 0
                               ? mod_pow(s0, static_cast<unsigned long>(e), p)
                               : mod_pow(s0_inv,
                                         static_cast<unsigned long>(-e), p);
        unsigned long term = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(rat_mod(c, p)) * pw) % p);
        acc = (acc + term) % p;
    }
    return acc;
}

std::string SPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rat a = abs(c);
        if (a != 1 || e == 0)
            os << rat_to_string(a);
        if (e != 0) {
            if (a != 1)
                os << "*";
            os << "s";
            if (e != 1)
                os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

SPoly qint(long n) {
    if (n == 0)
        return SPoly{};
    if (n < 0)
        return -qint(-n);
    Rat sign((n - 1) % 2 == 0 ? 1 : -1);
    SPoly p;
    for (long e = 1 - n; e <= n - 1; e += 2)
        p.add_term(e, sign);
    return p;
}

SPoly qint_addition_residual(long a, long b, AdditionBranch branch) {
    long sgn = branch == AdditionBranch::upper ? 1 : -1;
    Rat sign_a(a % 2 == 0 ? 1 : -1);
    Rat sign_b(b % 2 == 0 ? 1 : -1);
    SPoly rhs = qint(b).shifted(sgn * a).scale(sign_a) +
                qint(a).shifted(-sgn * b).scale(sign_b);
    return qint(a + b) - rhs;
}

SPolyDivMod spoly_divmod(const SPoly& a, const SPoly& b) {
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    if (!a.is_zero() && a.min_exp() < 0)
        throw domain_error("divmod requires an ordinary polynomial dividend");
    if (b.min_exp() < 0)
        throw domain_error("divmod requires an ordinary polynomial divisor");
    SPolyDivMod out;
    out.rem = a;
    long db = b.max_exp();
    Rat lb = b.leading_coeff();
    while (!out.rem.is_zero() && out.rem.max_exp() >= db) {
        long e = out.rem.max_exp() - db;
        Rat c = out.rem.leading_coeff() / lb;
        out.quot.add_term(e, c);
        out.rem -= b.shifted(e).scale(c);
    }
    return out;
}

namespace {

// Dense integer image of an ordinary polynomial: clear denominators and
// divide by the integer content, so the result is primitive in Z[x].
std::vector<mpz_class> primitive_integer_image(const SPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    std::vector<mpz_class> out(static_cast<size_t>(p.max_exp()) + 1);
    mpz_class content = 0;
    for (const auto& [e, c] : p.terms()) {
        out[static_cast<size_t>(e)] = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                out[static_cast<size_t>(e)].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : out)
            c /= content;
    return out;
}

using ModPoly = std::vector<unsigned long>;

void mod_trim(ModPoly& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

ModPoly to_mod(const std::vector<mpz_class>& f, unsigned long p) {
    ModPoly out(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    mod_trim(out);
    return out;
}

ModPoly mod_gcd(ModPoly f, ModPoly g, unsigned long p) {
    mod_trim(f);
    mod_trim(g);
    while (!g.empty()) {
        unsigned long inv = powmod(g.back(), p - 2, p);
        while (f.size() >= g.size()) {
            unsigned long c = mulmod(f.back(), inv, p);
            size_t off = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                f[off + i] = (f[off + i] + p - mulmod(c, g[i], p)) % p;
            mod_trim(f);
            if (f.empty())
                break;
        }
        std::swap(f, g);
        mod_trim(g);
    }
    return f;
}

// Exact division test in Z[x]; quotient discarded.
bool divides_exactly(const std::vector<mpz_class>& f,
                     const std::vector<mpz_class>& d) {
    if (d.empty())
        return false;
    std::vector<mpz_class> rem = f;
    while (rem.size() >= d.size()) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0)
            return false;
        size_t off = rem.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            rem[off + i] -= q * d[i];
        if (rem.back() != 0)
            return false;
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
    }
    return rem.empty();
}

SPoly from_integer_image(const std::vector<mpz_class>& f) {
    SPoly out;
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0)
            out.add_term(static_cast<long>(i), Rat(f[i]));
    return out;
}

// Modular gcd in Z[x] with CRT lifting and a rigorous division check.
SPoly modular_gcd(const SPoly& a, const SPoly& b) {
    std::vector<mpz_class> f = primitive_integer_image(a);
    std::vector<mpz_class> g = primitive_integer_image(b);
    mpz_class lead_gcd;
    mpz_gcd(lead_gcd.get_mpz_t(), f.back().get_mpz_t(),
            g.back().get_mpz_t());

    mpz_class prime_seed("2305843009213693951"); // 2^61 - 1
    mpz_class modulus = 0;
    std::vector<mpz_class> candidate;
    size_t best_degree = SIZE_MAX;
    for (int tries = 0; tries < 64; ++tries) {
        unsigned long p = prime_seed.get_ui();
        mpz_nextprime(prime_seed.get_mpz_t(), prime_seed.get_mpz_t());
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0 ||
            mpz_fdiv_ui(g.back().get_mpz_t(), p) == 0)
            continue;
        ModPoly gp = mod_gcd(to_mod(f, p), to_mod(g, p), p);
        if (gp.empty())
            continue; // cannot happen for nonzero inputs
        size_t deg = gp.size() - 1;
        if (deg == 0)
            return SPoly::one();
        if (deg > best_degree)
            continue; // unlucky prime
        if (deg < best_degree) {
            best_degree = deg;
            modulus = 0;
            candidate.assign(deg + 1, 0);
        }
        // normalize so the leading coefficient is lead_gcd mod p
        unsigned long scale =
            mulmod(mpz_fdiv_ui(lead_gcd.get_mpz_t(), p),
                   powmod(gp.back(), p - 2, p), p);
        std::vector<mpz_class> lifted(gp.size());
        for (size_t i = 0; i < gp.size(); ++i)
            lifted[i] = mpz_class(mulmod(gp[i], scale, p));
        bool stable = true;
        if (modulus == 0) {
            for (size_t i = 0; i <= deg; ++i) {
                mpz_class v = lifted[i];
                if (v > mpz_class(p) / 2)
                    v -= p;
                if (candidate[i] != v) {
                    stable = false;
                    candidate[i] = v;
                }
            }
            modulus = p;
        } else {
            // CRT combine into the symmetric range
            mpz_class new_mod = modulus * p;
            mpz_class m_inv;
            mpz_class pz(p);
            mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i <= deg; ++i) {
                mpz_class r1 = candidate[i];
                mpz_class diff = (lifted[i] - r1) % pz;
                if (diff < 0)
                    diff += pz;
                mpz_class t = (diff * m_inv) % pz;
                if (t < 0)
                    t += pz;
                mpz_class v = r1 + modulus * t;
                v %= new_mod;
                if (v > new_mod / 2)
                    v -= new_mod;
                if (v < -(new_mod / 2))
                    v += new_mod;
                if (candidate[i] != v) {
                    stable = false;
                    candidate[i] = v;
                }
            }
            modulus = new_mod;
        }
        if (!stable)
            continue;
        // candidate stabilized: make primitive and verify by division
        std::vector<mpz_class> prim = candidate;
        mpz_class content = 0;
        for (const auto& c : prim)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content > 1)
            for (auto& c : prim)
                c /= content;
        if (prim.back() < 0)
            for (auto& c : prim)
                c = -c;
        if (divides_exactly(f, prim) && divides_exactly(g, prim)) {
            SPoly out = from_integer_image(prim);
            out.scale(1 / out.leading_coeff());
            return out;
        }
    }
    // unreachable in practice; fall through to the classical remainder loop
    SPoly gg = a, hh = b;
    while (!hh.is_zero()) {
        if (hh.is_constant())
            return SPoly::one();
        hh.scale(1 / hh.leading_coeff());
        SPoly r = spoly_divmod(gg, hh).rem;
        gg = hh;
        hh = std::move(r);
    }
    gg.scale(1 / gg.leading_coeff());
    return gg;
}

} // namespace

SPoly spoly_gcd(const SPoly& a, const SPoly& b) {
    SPoly g = a.is_zero() ? SPoly{} : a.shifted(-a.min_exp());
    SPoly h = b.is_zero() ? SPoly{} : b.shifted(-b.min_exp());
    if (g.is_zero() || h.is_zero()) {
        SPoly& nz = g.is_zero() ? h : g;
        if (nz.is_zero())
            return SPoly{};
        nz.scale(1 / nz.leading_coeff());
        return nz;
    }
    if (g.is_constant() || h.is_constant())
        return SPoly::one();
    if (g.max_exp() > 24 || h.max_exp() > 24)
        return modular_gcd(g, h);
    while (!h.is_zero()) {
        if (h.is_constant())
            return SPoly::one();
        h.scale(1 / h.leading_coeff());
        SPoly r = spoly_divmod(g, h).rem;
        g = h;
        h = std::move(r);
    }
    g.scale(1 / g.leading_coeff());
    return g.shifted(-g.min_exp());
}

SPoly spoly_divexact(const SPoly& a, const SPoly& b) {
    if (a.is_zero())
        return SPoly{};
    long shift = a.min_exp() - b.min_exp();
    auto [q, r] = spoly_divmod(a.shifted(-a.min_exp()), b.shifted(-b.min_exp()));
    if (!r.is_zero())
        throw domain_error("inexact polynomial division");
    return q.shifted(shift);
}

} // namespace wallx

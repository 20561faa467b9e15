#include "wallx/kclass.hpp"

namespace wallx {

KClassRep& KClassRep::add(Weight w, long mult) {
    if (mult == 0)
        return *this;
    auto [it, inserted] = mult_.emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            mult_.erase(it);
    }
    return *this;
}

long KClassRep::mult(Weight w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
}

long KClassRep::rank() const {
    long r = 0;
    for (const auto& [w, m] : mult_)
        r += m;
    return r;
}

namespace {

ZRat zrat_pow(const ZRat& base, long e) {
    if (e == 0)
        return ZRat(1);
    ZRat b = e > 0 ? base : base.inverse();
    long n = e > 0 ? e : -e;
    ZRat acc(1);
    for (long i = 0; i < n; ++i)
        acc *= b;
    return acc;
}

} // namespace

ZRat euler(const KClassRep& k) {
    ZRat out(1);
    for (const auto& [w, mult] : k.weights()) {
        if (w.a == 0 && w.m == 0) {
            if (mult < 0)
                throw domain_error(
                    "trivial weight in Euler denominator (1 - 1 factor)");
            // factor (1 - 1)^mult = 0
            return ZRat{};
        }
        // 1 - z^{-a} s^{-m}
        ZRat factor = ZRat(1) - ZRat::monomial(SRat::s_power(-w.m), -w.a);
        out *= zrat_pow(factor, mult);
    }
    return out;
}

ZRat sym_euler_factor(long a, long m) {
    if (a == 0)
        throw domain_error("sym_euler_factor requires a != 0");
    // -s^{-1}(s^2 - z^a s^m) / (1 - z^a s^m)
    ZRat num = ZRat(SRat::s_power(1)) -
               ZRat::monomial(SRat::s_power(m - 1), a);
    ZRat den = ZRat(1) - ZRat::monomial(SRat::s_power(m), a);
    return -(num / den);
}

ZRat sym_euler_inverse(const KClassRep& f) {
    ZRat out(1);
    for (const auto& [w, mult] : f.weights()) {
        if (w.a == 0)
            throw domain_error("Chern root with a = 0 in sym_euler_inverse");
        out *= zrat_pow(sym_euler_factor(w.a, w.m), mult);
    }
    return out;
}

long mb_index(const KClassRep& f) {
    long ind = 0;
    for (const auto& [w, mult] : f.weights()) {
        if (w.a == 0)
            throw domain_error("Chern root with a = 0 in mb_index");
        ind += w.a > 0 ? mult : -mult;
    }
    return ind;
}

SRat residue_jump(const KClassRep& f) {
    long ind = mb_index(f);
    SPoly diff = SPoly::s_power(ind) - SPoly::s_power(-ind);
    if (ind % 2 != 0)
        diff = -diff;
    return SRat(diff);
}

SRat master_relation_residual(const std::vector<FixedLocusDatum>& loci) {
    ZRat total;
    SRat jumps;
    for (const auto& locus : loci) {
        total += ZRat(locus.amplitude) * sym_euler_inverse(locus.f);
        jumps += locus.amplitude * residue_jump(locus.f);
    }
    return total.kres() - jumps;
}

SPoly projective_bundle_factor(long n) {
    if (n < 0)
        throw domain_error("projective_bundle_factor requires N >= 0");
    SPoly sum;
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            long h = i == j ? 1 : 0; // Hodge numbers of P^N
            if (h == 0)
                continue;
            Rat sign((i + j) % 2 == 0 ? 1 : -1);
            sum.add_term(2 * j, sign * h);
        }
    sum = sum.shifted(-n);
    if (n % 2 != 0)
        sum = -sum;
    return sum;
}

} // namespace wallx

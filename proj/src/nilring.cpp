#include "wallx/nilring.hpp"

#include <map>

namespace wallx {

NilElt::NilElt(int order) {
    if (order < 1)
        throw domain_error("nilpotency order must be >= 1");
    coeffs_.assign(static_cast<size_t>(order), SRat{});
}

NilElt NilElt::constant(const SRat& c, int order) {
    NilElt out(order);
    out.coeffs_[0] = c;
    return out;
}

NilElt NilElt::eps(int order) {
    NilElt out(order);
    if (order >= 2)
        out.coeffs_[1] = SRat(1);
    return out;
}

bool NilElt::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool NilElt::is_eps_free() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

NilElt& NilElt::operator+=(const NilElt& rhs) {
    if (order() != rhs.order())
        throw domain_error("mixed nilpotency orders");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

NilElt& NilElt::operator-=(const NilElt& rhs) {
    if (order() != rhs.order())
        throw domain_error("mixed nilpotency orders");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

NilElt operator*(const NilElt& a, const NilElt& b) {
    if (a.order() != b.order())
        throw domain_error("mixed nilpotency orders");
    NilElt out(a.order());
    for (int i = 0; i < a.order(); ++i) {
        if (a.coeff(i).is_zero())
            continue;
        for (int j = 0; i + j < a.order(); ++j) {
            if (b.coeff(j).is_zero())
                continue;
            out.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

NilElt NilElt::operator-() const {
    NilElt out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

NilElt NilElt::inverse() const {
    if (coeffs_[0].is_zero())
        throw domain_error("non-unit in nilpotent ring (zero constant term)");
    // write x = c0 (1 + n) with n nilpotent; 1/x = (1/c0) sum (-n)^k
    SRat c0_inv = coeffs_[0].inverse();
    NilElt n(order());
    for (size_t i = 1; i < coeffs_.size(); ++i)
        n.coeffs_[i] = coeffs_[i] * c0_inv;
    NilElt acc = NilElt::constant(SRat(1), order());
    NilElt pw = NilElt::constant(SRat(1), order());
    for (int k = 1; k < order(); ++k) {
        pw = pw * n;
        if (pw.is_zero())
            break;
        if (k % 2 == 1)
            acc -= pw;
        else
            acc += pw;
    }
    for (auto& c : acc.coeffs_)
        c *= c0_inv;
    return acc;
}

NilElt nil_limit_factor(long a, long m, int order, LimitPoint at) {
    if (a == 0)
        throw domain_error("nil_limit_factor requires a != 0 (pole at w = 1)");
    if (order < 1)
        throw domain_error("nilpotency order must be >= 1");
    // 1 + eps
    NilElt root = NilElt::constant(SRat(1), order) + NilElt::eps(order);
    // numerator -s^{-1}(s^2 - z^a s^m (1+eps)) expands to
    // -s * z^0 + s^{m-1}(1+eps) * z^a; denominator is 1 - z^a s^m (1+eps).
    std::map<long, NilElt> num, den;
    num.emplace(0, NilElt::constant(-SRat::s_power(1), order));
    num.emplace(a, NilElt::constant(SRat::s_power(m - 1), order) * root);
    den.emplace(0, NilElt::constant(SRat(1), order));
    den.emplace(a, NilElt::constant(-SRat::s_power(m), order) * root);

    long e_num, e_den;
    if (at == LimitPoint::zero) {
        e_num = num.begin()->first;
        e_den = den.begin()->first;
    } else {
        e_num = num.rbegin()->first;
        e_den = den.rbegin()->first;
    }
    if (e_num < e_den && at == LimitPoint::zero)
        throw domain_error("pole in nil limit at z = 0");
    if (e_num > e_den && at == LimitPoint::infinity)
        throw domain_error("pole in nil limit at z = infinity");
    if (e_num != e_den)
        return NilElt(order); // limit 0
    return num.at(e_num) * den.at(e_den).inverse();
}

} // namespace wallx

#include "wallx/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace wallx {

bool ChernClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](long c) { return c == 0; });
}

ChernClass ChernClass::operator+(const ChernClass& rhs) const {
    if (coords.size() != rhs.coords.size())
        throw domain_error("class dimension mismatch");
    ChernClass out = *this;
    for (size_t i = 0; i < coords.size(); ++i)
        out.coords[i] += rhs.coords[i];
    return out;
}

std::string ChernClass::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
    os << ")";
    return os.str();
}

MonicPoly::MonicPoly(std::vector<Rat> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    if (coeffs_.empty() || coeffs_.back() != 1)
        throw domain_error("MonicPoly requires leading coefficient 1");
}

Rat MonicPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string MonicPoly::to_string() const {
    std::ostringstream os;
    for (long i = degree(); i >= 0; --i) {
        if (coeff(i) == 0 && degree() > 0)
            continue;
        if (os.tellp() > 0)
            os << " + ";
        os << rat_to_string(coeff(i));
        if (i > 0)
            os << "*n^" << i;
    }
    return os.str();
}

Ord tau_cmp(const MonicPoly& f, const MonicPoly& g) {
    if (f.degree() != g.degree())
        return f.degree() > g.degree() ? Ord::LT : Ord::GT;
    for (long i = f.degree(); i >= 0; --i) {
        if (f.coeff(i) != g.coeff(i))
            return f.coeff(i) < g.coeff(i) ? Ord::LT : Ord::GT;
    }
    return Ord::EQ;
}

Ord stability_cmp(const StabilityValue& x, const StabilityValue& y) {
    auto level = [](StabilityValue::First k) {
        switch (k) {
        case StabilityValue::First::minus_infinity: return -1;
        case StabilityValue::First::finite: return 0;
        case StabilityValue::First::plus_infinity: return 1;
        }
        return 0;
    };
    if (level(x.kind) != level(y.kind))
        return level(x.kind) < level(y.kind) ? Ord::LT : Ord::GT;
    if (x.kind == StabilityValue::First::finite) {
        Ord first = tau_cmp(*x.poly, *y.poly);
        if (first != Ord::EQ)
            return first;
    }
    if (x.second != y.second)
        return x.second < y.second ? Ord::LT : Ord::GT;
    return Ord::EQ;
}

ClassLattice::ClassLattice(size_t m, int dim,
                           std::vector<std::vector<Rat>> hilbert,
                           std::vector<std::vector<Rat>> chi,
                           std::vector<ChernClass> effective)
    : m_(m), dim_(dim), hilbert_(std::move(hilbert)), chi_(std::move(chi)),
      effective_(std::move(effective)) {
    if (m_ == 0)
        throw domain_error("lattice rank must be positive");
    if (dim_ < 1)
        throw domain_error("lattice dim must be >= 1");
    if (hilbert_.size() != static_cast<size_t>(dim_) + 1)
        throw domain_error("hilbert matrix must have dim+1 rows");
    for (const auto& row : hilbert_)
        if (row.size() != m_)
            throw domain_error("hilbert matrix row width mismatch");
    if (chi_.size() != m_)
        throw domain_error("chi matrix must be m x m");
    for (const auto& row : chi_)
        if (row.size() != m_)
            throw domain_error("chi matrix must be m x m");
    for (size_t i = 0; i < m_; ++i)
        for (size_t j = 0; j < m_; ++j)
            if (chi_[i][j] + chi_[j][i] != 0)
                throw domain_error("chi matrix is not anti-symmetric");
    for (const auto& alpha : effective_) {
        check_class(alpha);
        if (alpha.is_zero())
            throw domain_error("zero class declared effective");
        tilde_r(alpha); // validates positivity and integrality
    }
}

void ClassLattice::check_class(const ChernClass& alpha) const {
    if (alpha.coords.size() != m_)
        throw domain_error("class has wrong coordinate length");
}

std::vector<Rat> ClassLattice::hilbert_poly(const ChernClass& alpha) const {
    check_class(alpha);
    std::vector<Rat> out(static_cast<size_t>(dim_) + 1, Rat(0));
    for (size_t i = 0; i <= static_cast<size_t>(dim_); ++i)
        for (size_t j = 0; j < m_; ++j)
            out[i] += hilbert_[i][j] * alpha.coords[j];
    return out;
}

long ClassLattice::lambda_k(const ChernClass& alpha, long k) const {
    auto p = hilbert_poly(alpha);
    Rat acc(0);
    Rat x(k);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    if (!rat_is_integer(acc))
        throw domain_error("lambda_k(" + alpha.to_string() + ", " +
                           std::to_string(k) + ") = " + rat_to_string(acc) +
                           " is not an integer");
    return rat_to_long(acc);
}

Rat ClassLattice::rank_r(const ChernClass& alpha) const {
    return hilbert_poly(alpha).back();
}

long ClassLattice::tilde_r(const ChernClass& alpha) const {
    if (alpha.is_zero())
        throw domain_error("tilde_r of the zero class");
    Rat value = rank_r(alpha) * Rat(factorial(static_cast<unsigned long>(dim_)));
    if (!rat_is_integer(value) || value <= 0)
        throw domain_error("tilde_r(" + alpha.to_string() + ") = " +
                           rat_to_string(value) +
                           " is not a positive integer");
    return rat_to_long(value);
}

MonicPoly ClassLattice::tau(const ChernClass& alpha) const {
    if (alpha.is_zero())
        throw domain_error("tau of the zero class");
    auto p = hilbert_poly(alpha);
    Rat lead = p.back();
    if (lead <= 0)
        throw domain_error("tau requires positive leading coefficient, got " +
                           rat_to_string(lead) + " for " + alpha.to_string());
    for (auto& c : p)
        c /= lead;
    return MonicPoly(std::move(p));
}

StabilityValue ClassLattice::tau_mu(const ChernClass& alpha,
                                    const std::vector<long>& dvec,
                                    const std::vector<Rat>& mu) const {
    check_class(alpha);
    if (dvec.size() != mu.size())
        throw domain_error("dimension vector and mu length mismatch");
    Rat mu_d(0);
    long d_norm = 0;
    for (size_t i = 0; i < dvec.size(); ++i) {
        mu_d += mu[i] * dvec[i];
        d_norm += dvec[i] < 0 ? -dvec[i] : dvec[i];
    }
    StabilityValue out;
    if (!alpha.is_zero()) {
        out.kind = StabilityValue::First::finite;
        out.poly = tau(alpha);
        out.second = mu_d / tilde_r(alpha);
        return out;
    }
    if (d_norm == 0)
        throw domain_error("tau_mu of (0, 0) is undefined");
    out.kind = mu_d > 0 ? StabilityValue::First::plus_infinity
                        : StabilityValue::First::minus_infinity;
    out.second = mu_d / d_norm;
    return out;
}

long ClassLattice::chi_pair(const ChernClass& alpha,
                            const ChernClass& beta) const {
    check_class(alpha);
    check_class(beta);
    Rat acc(0);
    for (size_t i = 0; i < m_; ++i) {
        if (alpha.coords[i] == 0)
            continue;
        for (size_t j = 0; j < m_; ++j)
            acc += Rat(alpha.coords[i]) * chi_[i][j] * beta.coords[j];
    }
    if (!rat_is_integer(acc))
        throw domain_error("chi(" + alpha.to_string() + ", " +
                           beta.to_string() + ") = " + rat_to_string(acc) +
                           " is not an integer");
    return rat_to_long(acc);
}

namespace {

// b = c * a for some rational c; for nonzero classes this is exactly the
// vanishing of all 2x2 minors.
bool proportional(const ChernClass& a, const ChernClass& b) {
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = i + 1; j < a.coords.size(); ++j)
            if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i])
                return false;
    return true;
}

} // namespace

bool ClassLattice::is_generic(const ChernClass& alpha) const {
    return is_generic(effective_, alpha);
}

bool ClassLattice::is_generic(const std::vector<ChernClass>& effective,
                              const ChernClass& alpha) const {
    check_class(alpha);
    MonicPoly t = tau(alpha);
    for (const auto& beta : effective) {
        if (tau_cmp(tau(beta), t) != Ord::EQ)
            continue;
        if (!proportional(alpha, beta))
            return false;
    }
    return true;
}

std::vector<std::vector<ChernClass>>
ClassLattice::decompositions(const ChernClass& alpha, bool ordered,
                             std::optional<int> max_n) const {
    return decompositions(alpha, effective_, ordered, max_n);
}

std::vector<std::vector<ChernClass>>
ClassLattice::decompositions(const ChernClass& alpha,
                             const std::vector<ChernClass>& effective,
                             bool ordered, std::optional<int> max_n) const {
    check_class(alpha);
    std::vector<std::vector<ChernClass>> out;
    if (alpha.is_zero() || rank_r(alpha) <= 0)
        return out;
    MonicPoly target_tau = tau(alpha);

    struct Part {
        ChernClass cls;
        long tr;
    };
    std::vector<Part> parts;
    for (const auto& beta : effective) {
        long tr = tilde_r(beta); // also validates tr >= 1
        if (tau_cmp(tau(beta), target_tau) == Ord::EQ)
            parts.push_back({beta, tr});
    }

    long budget = tilde_r(alpha);
    std::vector<ChernClass> current;
    std::vector<long> remaining = alpha.coords;

    auto remaining_zero = [&] {
        return std::all_of(remaining.begin(), remaining.end(),
                           [](long c) { return c == 0; });
    };

    auto recurse = [&](auto&& self, long left, size_t min_index) -> void {
        if (left == 0) {
            if (!current.empty() && remaining_zero())
                out.push_back(current);
            return;
        }
        if (max_n && static_cast<int>(current.size()) >= *max_n)
            return;
        size_t start = ordered ? 0 : min_index;
        for (size_t i = start; i < parts.size(); ++i) {
            if (parts[i].tr > left)
                continue;
            for (size_t c = 0; c < m_; ++c)
                remaining[c] -= parts[i].cls.coords[c];
            current.push_back(parts[i].cls);
            self(self, left - parts[i].tr, i);
            current.pop_back();
            for (size_t c = 0; c < m_; ++c)
                remaining[c] += parts[i].cls.coords[c];
        }
    };
    recurse(recurse, budget, 0);
    return out;
}

} // namespace wallx

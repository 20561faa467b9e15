#pragma once

#include <vector>

#include "wallx/srat.hpp"

namespace wallx {

// Element of SRat[eps]/(eps^N): exactly N stored coefficients
// c_0 + c_1 eps + ... + c_{N-1} eps^{N-1}. Models formal Chern roots
// L = 1 + eps with 1 - L nilpotent.
class NilElt {
  public:
    explicit NilElt(int order); // zero of the given order, order >= 1
    static NilElt constant(const SRat& c, int order);
    static NilElt eps(int order); // the generator (0 for order 1)

    int order() const { return static_cast<int>(coeffs_.size()); }
    const SRat& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_eps_free() const; // all coefficients above c_0 vanish

    NilElt& operator+=(const NilElt& rhs);
    NilElt& operator-=(const NilElt& rhs);
    friend NilElt operator+(NilElt a, const NilElt& b) { return a += b; }
    friend NilElt operator-(NilElt a, const NilElt& b) { return a -= b; }
    friend NilElt operator*(const NilElt& a, const NilElt& b);
    NilElt operator-() const;

    // Multiplicative inverse; exists iff c_0 != 0.
    NilElt inverse() const;

    bool operator==(const NilElt& rhs) const { return coeffs_ == rhs.coeffs_; }

  private:
    std::vector<SRat> coeffs_;
};

enum class LimitPoint { zero, infinity };

// Limit of -s^{-1} (s^2 - z^a s^m (1+eps)) / (1 - z^a s^m (1+eps)) at the
// requested point, computed in SRat[eps]/(eps^order). Requires a != 0. The
// result is eps-free and equals -s or -s^{-1} by the sign of a and the
// evaluation point.
NilElt nil_limit_factor(long a, long m, int order, LimitPoint at);

} // namespace wallx

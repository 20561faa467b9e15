#include "wallx/rng.hpp"

namespace wallx {

long Rng::uniform(long lo, long hi) {
    if (lo > hi)
        throw domain_error("empty range in uniform draw");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) // full 64-bit range
        return static_cast<long>(next());
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % range);
}

long Rng::uniform_nonzero(long lo, long hi) {
    long x;
    do {
        x = uniform(lo, hi);
    } while (x == 0);
    return x;
}

Rat Rng::rat(long max_abs_num, long max_den) {
    long num = uniform(-max_abs_num, max_abs_num);
    long den = uniform(1, max_den);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

SPoly Rng::spoly(long deg_bound, long max_shift) {
    SPoly p;
    long lo = -max_shift;
    for (long e = lo; e <= deg_bound; ++e)
        if (uniform(0, 2) != 0) // ~2/3 density
            p.add_term(e, rat(4, 3));
    return p;
}

SPoly Rng::spoly_nonzero(long deg_bound, long max_shift) {
    SPoly p = spoly(deg_bound, max_shift);
    if (p.is_zero())
        p.add_term(uniform(-max_shift, deg_bound), Rat(uniform_nonzero(-4, 4)));
    return p;
}

SRat Rng::srat(long num_deg, long den_deg) {
    return SRat(spoly(num_deg, 2), spoly_nonzero(den_deg, 0));
}

SRat Rng::srat_nonzero(long num_deg, long den_deg) {
    return SRat(spoly_nonzero(num_deg, 2), spoly_nonzero(den_deg, 0));
}

KClassRep Rng::kclass(long a_bound, long m_bound, long rank_bound,
                      bool allow_negative_mult) {
    KClassRep f;
    long budget = uniform(1, rank_bound);
    while (budget > 0) {
        Weight w{uniform_nonzero(-a_bound, a_bound),
                 uniform(-m_bound, m_bound)};
        long mult = uniform(1, budget);
        budget -= mult;
        if (allow_negative_mult && uniform(0, 3) == 0)
            mult = -mult;
        f.add(w, mult);
    }
    return f;
}

} // namespace wallx

#pragma once

#include <cstdint>
#include <random>

#include "wallx/kclass.hpp"
#include "wallx/srat.hpp"

namespace wallx {

// Deterministic random source for verification sweeps. mt19937_64 with a
// fixed seed is fully specified by the standard; uniform draws go through
// rejection sampling so the stream is identical on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi);

    // Uniform over [lo, hi] \ {0}; requires lo <= -1 or hi >= 1.
    long uniform_nonzero(long lo, long hi);

    Rat rat(long max_abs_num, long max_den);

    // Laurent polynomial with exponents in [-max_shift, deg_bound] and small
    // integer coefficients; may be zero.
    SPoly spoly(long deg_bound, long max_shift);
    SPoly spoly_nonzero(long deg_bound, long max_shift);

    // Random reduced rational function in s.
    SRat srat(long num_deg, long den_deg);
    SRat srat_nonzero(long num_deg, long den_deg);

    // Weight multiset with z-exponents in [-a_bound, a_bound] \ {0},
    // s-exponents in [-m_bound, m_bound], total rank in [1, rank_bound].
    KClassRep kclass(long a_bound, long m_bound, long rank_bound,
                     bool allow_negative_mult = false);

  private:
    std::mt19937_64 engine_;
};

} // namespace wallx

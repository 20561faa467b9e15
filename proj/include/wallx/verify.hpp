#pragma once

#include <string>
#include <vector>

#include "wallx/lattice.hpp"
#include "wallx/rng.hpp"

namespace wallx {

// One verification record; serialized as a single JSON line.
struct CheckRecord {
    std::string check;
    std::string input; // short canonical case descriptor
    bool pass = false;
    std::string detail; // nonempty only on failure
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;
    std::size_t cases = 0;
    std::size_t failures = 0;

    bool all_pass() const { return failures == 0; }
};

// Suites: qint, jacobi, comb, projective, master, residue, stability,
// roundtrip, all. `range` and `cases` <= 0 select per-suite defaults.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, long range,
                      long cases);

std::vector<std::string> suite_names();

// Line-oriented JSON: one record per line plus a trailing summary line.
std::string report_to_jsonl(const SuiteResult& result);

// Random lattice scenario shared by the verification sweeps: a lattice
// whose effective classes all carry the same reduced Hilbert polynomial
// (shared_tau) or an unconstrained one, plus targets and two usable twists.
struct LatticeScenario {
    ClassLattice lattice;
    std::vector<ChernClass> targets;
    long k1 = 0;
    long k2 = 0;
};

LatticeScenario random_lattice_scenario(Rng& rng, bool shared_tau);

} // namespace wallx

#include "wallx/wallcross.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wallx {

void InvariantTable::set(const ChernClass& alpha, SRat value) {
    entries_[alpha] = std::move(value);
}

bool InvariantTable::has(const ChernClass& alpha) const {
    return entries_.count(alpha) != 0;
}

const SRat& InvariantTable::at(const ChernClass& alpha) const {
    auto it = entries_.find(alpha);
    if (it == entries_.end())
        throw domain_error("missing invariant table entry for " +
                           alpha.to_string());
    return it->second;
}

void PairTable::set(long k, const ChernClass& alpha, SRat value) {
    entries_[{k, alpha}] = std::move(value);
}

bool PairTable::has(long k, const ChernClass& alpha) const {
    return entries_.count({k, alpha}) != 0;
}

const SRat& PairTable::at(long k, const ChernClass& alpha) const {
    auto it = entries_.find({k, alpha});
    if (it == entries_.end())
        throw domain_error("missing pair table entry for k=" +
                           std::to_string(k) + ", " + alpha.to_string());
    return it->second;
}

namespace {

// Product term of one ordered decomposition, including the 1/n! weight.
SRat decomposition_term(const ClassLattice& lattice, const InvariantTable& vw,
                        long k, const std::vector<ChernClass>& parts) {
    SRat term(Rat(1, factorial(static_cast<unsigned long>(parts.size()))));
    ChernClass partial{std::vector<long>(lattice.m(), 0)};
    for (const auto& part : parts) {
        long arg = lattice.lambda_k(part, k) - lattice.chi_pair(partial, part);
        term *= SRat(qint(arg));
        term *= vw.at(part);
        if (term.is_zero())
            return term;
        partial = partial + part;
    }
    return term;
}

} // namespace

PairTable forward_expand(const ClassLattice& lattice, const InvariantTable& vw,
                         long k, const std::vector<ChernClass>& targets,
                         std::vector<std::string>* warnings) {
    PairTable out;
    std::set<ChernClass> warned;
    for (const auto& target : targets) {
        auto decomps = lattice.decompositions(target, /*ordered=*/true);
        SRat value;
        for (const auto& parts : decomps) {
            for (const auto& part : parts) {
                if (warnings && lattice.lambda_k(part, k) <= 0 &&
                    warned.insert(part).second)
                    warnings->push_back("lambda_" + std::to_string(k) + "(" +
                                        part.to_string() +
                                        ") <= 0: twist k is not large enough "
                                        "for this class");
            }
            value += decomposition_term(lattice, vw, k, parts);
        }
        out.set(k, target, std::move(value));
    }
    return out;
}

InvariantTable invert(const ClassLattice& lattice, const PairTable& tilde,
                      long k, const std::vector<ChernClass>& targets) {
    // collect every class reachable through decompositions
    std::set<ChernClass> needed(targets.begin(), targets.end());
    std::vector<ChernClass> queue(targets.begin(), targets.end());
    std::map<ChernClass, std::vector<std::vector<ChernClass>>> decomp_of;
    while (!queue.empty()) {
        ChernClass alpha = queue.back();
        queue.pop_back();
        if (decomp_of.count(alpha))
            continue;
        auto& ds = decomp_of[alpha];
        ds = lattice.decompositions(alpha, /*ordered=*/true);
        for (const auto& parts : ds)
            for (const auto& part : parts)
                if (needed.insert(part).second)
                    queue.push_back(part);
    }
    for (const auto& alpha : needed)
        if (!decomp_of.count(alpha))
            decomp_of[alpha] = lattice.decompositions(alpha, /*ordered=*/true);

    // order by tilde_r: every proper part of alpha is strictly smaller
    std::vector<ChernClass> order(needed.begin(), needed.end());
    std::sort(order.begin(), order.end(),
              [&](const ChernClass& x, const ChernClass& y) {
                  long tx = lattice.tilde_r(x), ty = lattice.tilde_r(y);
                  if (tx != ty)
                      return tx < ty;
                  return x < y;
              });

    InvariantTable vw;
    for (const auto& alpha : order) {
        long lam = lattice.lambda_k(alpha, k);
        if (lam == 0)
            throw domain_error("zero quantum integer: lambda_" +
                               std::to_string(k) + "(" + alpha.to_string() +
                               ") = 0, inversion undefined");
        SRat rest;
        for (const auto& parts : decomp_of.at(alpha)) {
            if (parts.size() < 2)
                continue;
            rest += decomposition_term(lattice, vw, k, parts);
        }
        SRat value = (tilde.at(k, alpha) - rest) / SRat(qint(lam));
        vw.set(alpha, std::move(value));
    }

    InvariantTable out;
    for (const auto& target : targets)
        out.set(target, vw.at(target));
    return out;
}

SRat relation_residual_simple(const ClassLattice& lattice,
                              const PairTable& tilde1, long k1,
                              const PairTable& tilde2, long k2,
                              const ChernClass& target) {
    SRat first = SRat(qint(lattice.lambda_k(target, k2))) *
                 tilde1.at(k1, target);
    SRat second = SRat(qint(lattice.lambda_k(target, k1))) *
                  tilde2.at(k2, target);
    return first - second;
}

SRat relation_residual(const ClassLattice& lattice, const PairTable& tilde1,
                       long k1, const PairTable& tilde2, long k2,
                       const ChernClass& target) {
    SRat out = relation_residual_simple(lattice, tilde1, k1, tilde2, k2,
                                        target);
    for (const auto& parts :
         lattice.decompositions(target, /*ordered=*/true, 2)) {
        if (parts.size() != 2)
            continue;
        const ChernClass& a1 = parts[0];
        const ChernClass& a2 = parts[1];
        long arg = lattice.lambda_k(a1, k2) - lattice.lambda_k(a2, k1) +
                   lattice.chi_pair(a1, a2);
        out += SRat(qint(arg)) * tilde1.at(k1, a1) * tilde2.at(k2, a2);
    }
    return out;
}

namespace {

void check_c_matrix(size_t n, const std::vector<long>& a,
                    const std::vector<long>& b,
                    const std::vector<std::vector<long>>& c) {
    if (a.size() != n || b.size() != n)
        throw domain_error("a and b must both have length n");
    if (c.size() != n)
        throw domain_error("c must be an n x n matrix");
    for (const auto& row : c)
        if (row.size() != n)
            throw domain_error("c must be an n x n matrix");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (c[i][j] + c[j][i] != 0)
                throw domain_error("c must be anti-symmetric");
}

} // namespace

SPoly c_coeff(const std::vector<long>& a, const std::vector<long>& b,
              const std::vector<std::vector<long>>& c) {
    size_t n = a.size();
    check_c_matrix(n, a, b, c);
    SPoly total;
    for (size_t m = 0; m <= n; ++m) {
        long head = 0;
        for (size_t i = 0; i < m; ++i)
            head += b[i];
        for (size_t j = m; j < n; ++j)
            head -= a[j];
        for (size_t i = 0; i < m; ++i)
            for (size_t j = m; j < n; ++j)
                head += c[i][j];
        SPoly term = qint(head);
        term.scale(Rat(binomial(n, m)));
        for (size_t i = 0; i < m && !term.is_zero(); ++i) {
            long arg = a[i];
            for (size_t k = 0; k < i; ++k)
                arg -= c[k][i];
            term *= qint(arg);
        }
        for (size_t j = m; j < n && !term.is_zero(); ++j) {
            long arg = b[j];
            for (size_t k = m; k < j; ++k)
                arg -= c[k][j];
            term *= qint(arg);
        }
        total += term;
    }
    return total;
}

SPoly perm_sum_residual(const std::vector<long>& a, const std::vector<long>& b,
                        const std::vector<std::vector<long>>& c) {
    size_t n = a.size();
    check_c_matrix(n, a, b, c);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SPoly total;
    do {
        std::vector<long> pa(n), pb(n);
        std::vector<std::vector<long>> pc(n, std::vector<long>(n));
        for (size_t i = 0; i < n; ++i) {
            pa[i] = a[perm[i]];
            pb[i] = b[perm[i]];
            for (size_t j = 0; j < n; ++j)
                pc[i][j] = c[perm[i]][perm[j]];
        }
        total += c_coeff(pa, pb, pc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SPoly jacobi_residual(long a, long b, long c) {
    return qint(a + b) * qint(c) - qint(c - a) * qint(b) -
           qint(b + c) * qint(a);
}

} // namespace wallx

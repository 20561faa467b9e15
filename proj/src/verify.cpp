#include "wallx/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wallx/json_io.hpp"
#include "wallx/kclass.hpp"
#include "wallx/nilring.hpp"
#include "wallx/wallcross.hpp"

namespace wallx {

namespace {

class Recorder {
  public:
    explicit Recorder(SuiteResult& out) : out_(out) {}

    void record(const std::string& check, const std::string& input, bool pass,
                const std::string& detail = "") {
        out_.records.push_back({check, input, pass, pass ? "" : detail});
        ++out_.cases;
        if (!pass)
            ++out_.failures;
    }

  private:
    SuiteResult& out_;
};

std::string fmt_case(std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first)
            os << ",";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

// ---- qint ----------------------------------------------------------------

void suite_qint(Recorder& rec, long range) {
    if (range <= 0)
        range = 20;
    for (long n = -range; n <= range; ++n) {
        std::string c = fmt_case({{"n", n}});
        rec.record("qint.antisymmetry", c, qint(-n) == -qint(n));
        rec.record("qint.palindromic", c, qint(n).is_palindromic());
        Rat expect(((n - 1) % 2 == 0) ? n : -n);
        rec.record("qint.classical_limit", c,
                   SRat(qint(n)).classical_limit() == expect);
    }
    long ra = std::min<long>(range, 12);
    for (long a = -ra; a <= ra; ++a)
        for (long b = -ra; b <= ra; ++b) {
            std::string c = fmt_case({{"a", a}, {"b", b}});
            rec.record(
                "qint.addition_upper", c,
                qint_addition_residual(a, b, AdditionBranch::upper).is_zero());
            rec.record(
                "qint.addition_lower", c,
                qint_addition_residual(a, b, AdditionBranch::lower).is_zero());
        }
}

// ---- jacobi ---------------------------------------------------------------

void suite_jacobi(Recorder& rec, long range) {
    if (range <= 0)
        range = 10;
    for (long a = -range; a <= range; ++a)
        for (long b = -range; b <= range; ++b)
            for (long c = -range; c <= range; ++c)
                rec.record("jacobi.residual",
                           fmt_case({{"a", a}, {"b", b}, {"c", c}}),
                           jacobi_residual(a, b, c).is_zero());
}

// ---- comb -----------------------------------------------------------------

std::vector<std::vector<long>> random_antisym(Rng& rng, size_t n, long bound) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            c[i][j] = rng.uniform(-bound, bound);
            c[j][i] = -c[i][j];
        }
    return c;
}

void suite_comb(Recorder& rec, Rng& rng, long range, long cases) {
    if (range <= 0)
        range = 6;
    if (cases <= 0)
        cases = 200;
    rec.record("comb.c_empty", "n=0", c_coeff({}, {}, {}).is_zero());
    for (long i = 0; i < std::min<long>(cases, 100); ++i) {
        long a = rng.uniform(-range, range), b = rng.uniform(-range, range);
        rec.record("comb.c_single", fmt_case({{"a", a}, {"b", b}}),
                   c_coeff({a}, {b}, {{0}}).is_zero());
    }
    for (long a1 = -3; a1 <= 3; ++a1)
        for (long a2 = -3; a2 <= 3; ++a2)
            for (long b1 = -3; b1 <= 3; ++b1)
                for (long b2 = -3; b2 <= 3; ++b2)
                    for (long c12 = -3; c12 <= 3; ++c12) {
                        std::vector<std::vector<long>> c = {{0, c12},
                                                            {-c12, 0}};
                        rec.record("comb.perm2_exhaustive",
                                   fmt_case({{"a1", a1},
                                             {"a2", a2},
                                             {"b1", b1},
                                             {"b2", b2},
                                             {"c12", c12}}),
                                   perm_sum_residual({a1, a2}, {b1, b2}, c)
                                       .is_zero());
                    }
    for (size_t n : {3ul, 4ul}) {
        for (long i = 0; i < cases; ++i) {
            std::vector<long> a(n), b(n);
            for (auto& x : a)
                x = rng.uniform(-range, range);
            for (auto& x : b)
                x = rng.uniform(-range, range);
            auto c = random_antisym(rng, n, range);
            rec.record("comb.perm" + std::to_string(n) + "_random",
                       fmt_case({{"case", i}}),
                       perm_sum_residual(a, b, c).is_zero());
        }
    }
}

// ---- projective -----------------------------------------------------------

void suite_projective(Recorder& rec, long range) {
    if (range <= 0)
        range = 40;
    for (long n = 0; n <= range; ++n)
        rec.record("projective.bundle_factor", fmt_case({{"N", n}}),
                   projective_bundle_factor(n) == qint(n + 1));
}

// ---- master ---------------------------------------------------------------

SRat signed_s_power(long rank, long exp) {
    SPoly p = SPoly::s_power(exp);
    if (rank % 2 != 0)
        p = -p;
    return SRat(p);
}

void suite_master(Recorder& rec, Rng& rng, long cases) {
    if (cases <= 0)
        cases = 500;
    for (long i = 0; i < cases; ++i) {
        KClassRep f = rng.kclass(3, 4, 6, /*allow_negative_mult=*/true);
        ZRat sei = sym_euler_inverse(f);
        std::string c = fmt_case({{"case", i}, {"rank", f.rank()}});
        bool jump_ok = sei.kres() == residue_jump(f);
        rec.record("master.residue_jump", c, jump_ok);
        long ind = mb_index(f);
        bool limits_ok = sei.limit_zero() == signed_s_power(f.rank(), ind) &&
                         sei.limit_infinity() ==
                             signed_s_power(f.rank(), -ind);
        rec.record("master.limits", c, limits_ok);
    }
    long multi = std::max<long>(cases / 5, 1);
    for (long i = 0; i < multi; ++i) {
        std::vector<FixedLocusDatum> loci;
        long count = rng.uniform(2, 5);
        for (long l = 0; l < count; ++l)
            loci.push_back(
                {rng.srat_nonzero(2, 2), rng.kclass(3, 4, 4)});
        rec.record("master.multi_locus",
                   fmt_case({{"case", i}, {"loci", count}}),
                   master_relation_residual(loci).is_zero());
    }
    for (long a = -4; a <= 4; ++a) {
        if (a == 0)
            continue;
        for (long m = -6; m <= 6; ++m) {
            ZRat factor = sym_euler_factor(a, m);
            SRat at_zero = factor.limit_zero();
            SRat at_inf = factor.limit_infinity();
            for (int order = 1; order <= 5; ++order) {
                NilElt nz = nil_limit_factor(a, m, order, LimitPoint::zero);
                NilElt ni =
                    nil_limit_factor(a, m, order, LimitPoint::infinity);
                bool ok = nz.is_eps_free() && ni.is_eps_free() &&
                          nz.coeff(0) == at_zero && ni.coeff(0) == at_inf;
                rec.record("master.nil_factor",
                           fmt_case({{"a", a}, {"m", m}, {"N", order}}), ok);
            }
        }
    }
}

// ---- residue --------------------------------------------------------------

ZRat random_z_laurent(Rng& rng) {
    ZRat f;
    long terms = rng.uniform(1, 4);
    for (long i = 0; i < terms; ++i)
        f += ZRat::monomial(rng.srat(2, 2), rng.uniform(-4, 4));
    return f;
}

ZRat random_factored(Rng& rng) {
    // product of Chern-root factors and inverses: both limits always exist
    ZRat f(rng.srat_nonzero(2, 2));
    long factors = rng.uniform(1, 4);
    for (long i = 0; i < factors; ++i) {
        ZRat g = sym_euler_factor(rng.uniform_nonzero(-3, 3),
                                  rng.uniform(-3, 3));
        f *= rng.uniform(0, 1) ? g : g.inverse();
    }
    return f;
}

ZRat random_zrat(Rng& rng) {
    // general rational function: random numerator/denominator z-polynomials
    std::vector<SRat> num, den;
    long dn = rng.uniform(0, 3), dd = rng.uniform(0, 3);
    for (long i = 0; i <= dn; ++i)
        num.push_back(rng.srat(2, 1));
    den.push_back(SRat(1));
    for (long i = 1; i <= dd; ++i)
        den.push_back(rng.srat(2, 1));
    return ZRat::from_parts(rng.uniform(-3, 3), ZPoly(num), ZPoly(den));
}

void suite_residue(Recorder& rec, Rng& rng, long cases) {
    if (cases <= 0)
        cases = 100;
    for (long i = 0; i < cases; ++i) {
        rec.record("residue.kills_laurent", fmt_case({{"case", i}}),
                   random_z_laurent(rng).kres().is_zero());
    }
    for (long i = 0; i < cases; ++i) {
        ZRat f = random_factored(rng);
        rec.record("residue.limit_difference", fmt_case({{"case", i}}),
                   f.kres() == f.limit_zero() - f.limit_infinity());
    }
    for (long i = 0; i < cases; ++i) {
        ZRat f = random_zrat(rng);
        ZRat g = rng.uniform(0, 1) ? random_factored(rng)
                                   : random_z_laurent(rng);
        SRat c = rng.srat(1, 1), d = rng.srat(1, 1);
        SRat lhs = (ZRat(c) * f + ZRat(d) * g).kres();
        SRat rhs = c * f.kres() + d * g.kres();
        rec.record("residue.linearity", fmt_case({{"case", i}}), lhs == rhs);
    }
    long pairs = std::max<long>(cases, 200);
    for (long i = 0; i < pairs; ++i) {
        ZRat f = random_zrat(rng);
        ZRat g = random_zrat(rng);
        if (f.is_zero() || g.is_zero()) {
            rec.record("residue.cauchy_product", fmt_case({{"case", i}}),
                       (f * g).is_zero());
            continue;
        }
        long order = rng.uniform(0, 4);
        // coefficients of fg up to `order` need f up to order - val(g)
        long vf = f.valuation_shift(), vg = g.valuation_shift();
        auto ef = f.expand_at_zero(std::max(order - std::min(vg, 0L), 0L));
        auto eg = g.expand_at_zero(std::max(order - std::min(vf, 0L), 0L));
        auto efg = (f * g).expand_at_zero(order);
        std::map<long, SRat> prod;
        for (const auto& [e1, c1] : ef)
            for (const auto& [e2, c2] : eg) {
                if (e1 + e2 > order)
                    continue;
                prod[e1 + e2] += c1 * c2;
            }
        bool ok = true;
        for (long e = vf + vg; e <= order; ++e) {
            SRat lhs = efg.count(e) ? efg.at(e) : SRat{};
            SRat rhs = prod.count(e) ? prod.at(e) : SRat{};
            if (!(lhs == rhs)) {
                ok = false;
                break;
            }
        }
        rec.record("residue.cauchy_product", fmt_case({{"case", i}}), ok);
    }
}

// ---- stability ------------------------------------------------------------

MonicPoly random_monic(Rng& rng) {
    long deg = rng.uniform(0, 3);
    std::vector<Rat> c;
    for (long i = 0; i < deg; ++i)
        c.push_back(rng.rat(4, 3));
    c.push_back(Rat(1));
    return MonicPoly(std::move(c));
}

int ord_sign(Ord o) { return o == Ord::LT ? -1 : (o == Ord::EQ ? 0 : 1); }

void suite_stability(Recorder& rec, Rng& rng, long cases) {
    if (cases <= 0)
        cases = 500;
    for (long i = 0; i < cases; ++i) {
        MonicPoly f = random_monic(rng), g = random_monic(rng),
                  h = random_monic(rng);
        std::string c = fmt_case({{"case", i}});
        bool antisym = ord_sign(tau_cmp(f, g)) == -ord_sign(tau_cmp(g, f));
        bool refl = tau_cmp(f, f) == Ord::EQ;
        bool eq_iff = (tau_cmp(f, g) == Ord::EQ) == (f == g);
        rec.record("stability.order_antisymmetry", c, antisym && refl);
        rec.record("stability.order_discrimination", c, eq_iff);
        // transitivity: sort the triple by tau_cmp and verify pairwise order
        std::vector<MonicPoly> v{f, g, h};
        std::sort(v.begin(), v.end(), [](const MonicPoly& x, const MonicPoly& y) {
            return tau_cmp(x, y) == Ord::LT;
        });
        bool trans = tau_cmp(v[0], v[1]) != Ord::GT &&
                     tau_cmp(v[1], v[2]) != Ord::GT &&
                     tau_cmp(v[0], v[2]) != Ord::GT;
        rec.record("stability.order_transitivity", c, trans);
    }
    for (long i = 0; i < std::max<long>(cases / 10, 5); ++i) {
        LatticeScenario sc = random_lattice_scenario(rng, /*shared_tau=*/true);
        const auto& eff = sc.lattice.effective();
        bool ok = true;
        for (size_t x = 0; x < eff.size() && ok; ++x)
            for (size_t y = 0; y < eff.size() && ok; ++y) {
                if (tau_cmp(sc.lattice.tau(eff[x]), sc.lattice.tau(eff[y])) !=
                    Ord::EQ)
                    continue;
                ChernClass sum = eff[x] + eff[y];
                ok = tau_cmp(sc.lattice.tau(sum), sc.lattice.tau(eff[x])) ==
                         Ord::EQ &&
                     sc.lattice.tilde_r(sum) == sc.lattice.tilde_r(eff[x]) +
                                                    sc.lattice.tilde_r(eff[y]);
            }
        rec.record("stability.additivity", fmt_case({{"case", i}}), ok);
    }
    // tau_mu branches on a fixed two-vertex configuration
    {
        ClassLattice lat(1, 1, {{Rat(1)}, {Rat(1)}}, {{Rat(0)}},
                         {ChernClass{{1}}});
        ChernClass alpha{{1}}, zero{{0}};
        std::vector<Rat> mu{Rat(1), Rat(-2)};
        auto fin = lat.tau_mu(alpha, {0, 0}, mu);
        bool finite_ok = fin.kind == StabilityValue::First::finite &&
                         fin.second == 0;
        rec.record("stability.tau_mu_finite", "alpha!=0,d=0", finite_ok);
        auto plus = lat.tau_mu(zero, {2, 0}, mu);
        bool plus_ok = plus.kind == StabilityValue::First::plus_infinity &&
                       plus.second == Rat(1);
        rec.record("stability.tau_mu_plus", "alpha=0,mu.d>0", plus_ok);
        auto zero_branch = lat.tau_mu(zero, {2, 1}, mu);
        bool zero_ok =
            zero_branch.kind == StabilityValue::First::minus_infinity &&
            zero_branch.second == 0;
        rec.record("stability.tau_mu_zero", "alpha=0,mu.d=0", zero_ok);
        auto minus = lat.tau_mu(zero, {0, 1}, mu);
        bool minus_ok = minus.kind == StabilityValue::First::minus_infinity &&
                        minus.second == Rat(-2);
        rec.record("stability.tau_mu_minus", "alpha=0,mu.d<0", minus_ok);
        bool order_ok =
            stability_cmp(minus, fin) == Ord::LT &&
            stability_cmp(fin, plus) == Ord::LT &&
            stability_cmp(minus, plus) == Ord::LT &&
            stability_cmp(plus, plus) == Ord::EQ;
        rec.record("stability.tau_mu_order", "branch comparisons", order_ok);
    }
}

// ---- roundtrip ------------------------------------------------------------

InvariantTable random_vw(Rng& rng, const std::vector<ChernClass>& classes) {
    InvariantTable vw;
    for (const auto& alpha : classes)
        vw.set(alpha, rng.srat_nonzero(2, 2));
    return vw;
}

void suite_roundtrip(Recorder& rec, Rng& rng, long cases) {
    if (cases <= 0)
        cases = 20;
    for (long i = 0; i < cases; ++i) {
        bool shared = rng.uniform(0, 3) != 0; // mostly rich decompositions
        LatticeScenario sc = random_lattice_scenario(rng, shared);
        InvariantTable vw = random_vw(rng, sc.targets);
        PairTable tilde1 =
            forward_expand(sc.lattice, vw, sc.k1, sc.targets);
        PairTable tilde2 =
            forward_expand(sc.lattice, vw, sc.k2, sc.targets);
        InvariantTable back1 = invert(sc.lattice, tilde1, sc.k1, sc.targets);
        InvariantTable back2 = invert(sc.lattice, tilde2, sc.k2, sc.targets);
        std::string c =
            fmt_case({{"case", i}, {"k1", sc.k1}, {"k2", sc.k2}});
        rec.record("roundtrip.identity", c, back1 == vw);
        rec.record("roundtrip.k_independence", c, back1 == back2);
        bool relation_ok = true;
        for (const auto& target : sc.targets)
            if (!relation_residual(sc.lattice, tilde1, sc.k1, tilde2, sc.k2,
                                   target)
                     .is_zero()) {
                relation_ok = false;
                break;
            }
        rec.record("roundtrip.relation", c, relation_ok);
        bool generic_ok = true;
        for (const auto& target : sc.targets) {
            if (!sc.lattice.is_generic(target))
                continue;
            for (const auto& parts :
                 sc.lattice.decompositions(target, true, 2))
                if (parts.size() == 2 &&
                    sc.lattice.chi_pair(parts[0], parts[1]) != 0)
                    generic_ok = false;
        }
        rec.record("roundtrip.generic_chi", c, generic_ok);
        // the quantum integers feeding the expansion specialize at t = 1
        bool classical_ok = true;
        for (const auto& parts :
             sc.lattice.decompositions(sc.targets.front(), true)) {
            ChernClass partial{std::vector<long>(sc.lattice.m(), 0)};
            for (const auto& part : parts) {
                long arg = sc.lattice.lambda_k(part, sc.k1) -
                           sc.lattice.chi_pair(partial, part);
                Rat expect(((arg - 1) % 2 == 0) ? arg : -arg);
                if (SRat(qint(arg)).classical_limit() != expect)
                    classical_ok = false;
                partial = partial + part;
            }
        }
        rec.record("roundtrip.classical", c, classical_ok);
    }
}

} // namespace

LatticeScenario random_lattice_scenario(Rng& rng, bool shared_tau) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        size_t m = static_cast<size_t>(rng.uniform(1, 3));
        int dim = static_cast<int>(rng.uniform(1, 2));
        std::vector<std::vector<Rat>> hilbert(
            static_cast<size_t>(dim) + 1, std::vector<Rat>(m, Rat(0)));
        if (shared_tau) {
            // P_alpha = (u . alpha) W(n) with W monic integral: all classes
            // with u . alpha > 0 share the same reduced Hilbert polynomial
            std::vector<long> u(m);
            bool nonzero = false;
            for (auto& x : u) {
                x = rng.uniform(0, 3);
                nonzero |= x != 0;
            }
            if (!nonzero)
                u[0] = 1;
            std::vector<long> w(static_cast<size_t>(dim) + 1);
            w.back() = 1;
            for (size_t i = 0; i < w.size() - 1; ++i)
                w[i] = rng.uniform(-3, 3);
            for (size_t i = 0; i < hilbert.size(); ++i)
                for (size_t j = 0; j < m; ++j)
                    hilbert[i][j] = Rat(w[i]) * Rat(u[j]);
        } else {
            for (auto& row : hilbert)
                for (auto& c : row)
                    c = Rat(rng.uniform(-2, 2));
        }
        std::vector<std::vector<Rat>> chi(m, std::vector<Rat>(m, Rat(0)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                chi[i][j] = Rat(rng.uniform(-2, 2));
                chi[j][i] = -chi[i][j];
            }

        auto rank_of = [&](const ChernClass& alpha) {
            Rat r(0);
            for (size_t j = 0; j < m; ++j)
                r += hilbert.back()[j] * alpha.coords[j];
            return r;
        };

        // primitive classes, then close under a few sums
        std::vector<ChernClass> effective;
        std::set<ChernClass> seen;
        int guard = 0;
        while (effective.size() < 2 && guard++ < 64) {
            ChernClass alpha{std::vector<long>(m, 0)};
            for (auto& c : alpha.coords)
                c = rng.uniform(0, 2);
            if (alpha.is_zero())
                continue;
            Rat r = rank_of(alpha);
            if (r <= 0 || !rat_is_integer(r * Rat(factorial(
                              static_cast<unsigned long>(dim)))))
                continue;
            if (seen.insert(alpha).second)
                effective.push_back(alpha);
        }
        if (effective.size() < 2)
            continue;
        std::vector<ChernClass> sums{effective[0] + effective[1],
                                     effective[0] + effective[0]};
        for (const auto& sum : sums)
            if (effective.size() < 4 && seen.insert(sum).second)
                effective.push_back(sum);

        ClassLattice lattice = [&]() -> ClassLattice {
            return ClassLattice(m, dim, hilbert, chi, effective);
        }();

        // two twists where every class has a strictly positive lambda
        std::vector<long> good;
        for (long k = 3; k <= 40 && good.size() < 2; ++k) {
            bool ok = true;
            for (const auto& alpha : effective)
                if (lattice.lambda_k(alpha, k) <= 0) {
                    ok = false;
                    break;
                }
            if (ok)
                good.push_back(k);
        }
        if (good.size() < 2)
            continue;
        return LatticeScenario{std::move(lattice), effective, good[0],
                               good[1]};
    }
    throw domain_error("failed to generate a random lattice scenario");
}

std::vector<std::string> suite_names() {
    return {"qint",   "jacobi",  "comb",      "projective", "master",
            "residue", "stability", "roundtrip", "all"};
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, long range,
                      long cases) {
    SuiteResult out;
    out.suite = suite;
    out.seed = seed;
    Recorder rec(out);
    Rng rng(seed);
    bool known = false;
    auto want = [&](const char* name) {
        bool w = suite == name || suite == "all";
        known |= suite == name;
        return w;
    };
    if (want("qint"))
        suite_qint(rec, range);
    if (want("jacobi"))
        suite_jacobi(rec, range);
    if (want("comb"))
        suite_comb(rec, rng, range, cases);
    if (want("projective"))
        suite_projective(rec, range);
    if (want("master"))
        suite_master(rec, rng, cases);
    if (want("residue"))
        suite_residue(rec, rng, cases);
    if (want("stability"))
        suite_stability(rec, rng, cases);
    if (want("roundtrip"))
        suite_roundtrip(rec, rng, cases);
    if (!known && suite != "all")
        throw parse_error("unknown suite: " + suite);
    return out;
}

std::string report_to_jsonl(const SuiteResult& result) {
    std::ostringstream os;
    for (const auto& r : result.records) {
        Json line;
        line["check"] = r.check;
        line["input"] = r.input;
        line["digest"] = digest(r.input);
        line["status"] = r.pass ? "PASS" : "FAIL";
        if (!r.detail.empty())
            line["detail"] = r.detail;
        os << line.dump() << "\n";
    }
    Json summary;
    summary["suite"] = result.suite;
    summary["seed"] = result.seed;
    summary["cases"] = result.cases;
    summary["failures"] = result.failures;
    summary["status"] = result.all_pass() ? "PASS" : "FAIL";
    os << summary.dump() << "\n";
    return os.str();
}

} // namespace wallx

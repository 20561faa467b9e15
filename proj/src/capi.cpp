#include "wallx/wallx.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "wallx/json_io.hpp"
#include "wallx/verify.hpp"

using namespace wallx;

struct wallx_engine {
    std::string last_error;
};

struct wallx_lattice {
    ClassLattice lattice;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
wallx_status guarded(wallx_engine* engine, Fn&& fn) {
    if (!engine)
        return WALLX_INTERNAL_ERROR;
    engine->last_error.clear();
    try {
        return fn();
    } catch (const parse_error& e) {
        engine->last_error = e.what();
        return WALLX_PARSE_ERROR;
    } catch (const domain_error& e) {
        engine->last_error = e.what();
        return WALLX_CONTRACT_VIOLATION;
    } catch (const std::exception& e) {
        engine->last_error = e.what();
        return WALLX_INTERNAL_ERROR;
    } catch (...) {
        engine->last_error = "unknown internal error";
        return WALLX_INTERNAL_ERROR;
    }
}

const ClassLattice& need_lattice(const wallx_lattice* lattice) {
    if (!lattice)
        throw parse_error("null lattice handle");
    return lattice->lattice;
}

std::string need_text(const char* text, const char* what) {
    if (!text)
        throw parse_error(std::string("null ") + what);
    return text;
}

} // namespace

extern "C" {

const char* wallx_version(void) { return "wallx 1.0.0"; }

wallx_engine* wallx_engine_new(void) { return new (std::nothrow) wallx_engine; }

void wallx_engine_free(wallx_engine* engine) { delete engine; }

const char* wallx_last_error(const wallx_engine* engine) {
    return engine ? engine->last_error.c_str() : "";
}

void wallx_string_free(char* text) { std::free(text); }

wallx_status wallx_lattice_parse(wallx_engine* engine, const char* json,
                                 wallx_lattice** out) {
    return guarded(engine, [&] {
        if (!out)
            throw parse_error("null output handle");
        Json doc = parse_json_text(need_text(json, "lattice JSON"));
        *out = new wallx_lattice{lattice_from_json(doc)};
        return WALLX_OK;
    });
}

void wallx_lattice_free(wallx_lattice* lattice) { delete lattice; }

wallx_status wallx_qint(wallx_engine* engine, long n, char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        *out_json = dup_string(spoly_to_json(qint(n)).dump());
        return WALLX_OK;
    });
}

wallx_status wallx_kres(wallx_engine* engine, const char* zrat_json,
                        char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        ZRat f = zrat_from_json(parse_json_text(need_text(zrat_json, "ZRat")));
        *out_json = dup_string(srat_to_json(f.kres()).dump());
        return WALLX_OK;
    });
}

wallx_status wallx_master_check(wallx_engine* engine, const char* loci_json,
                                char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        auto loci =
            loci_from_json(parse_json_text(need_text(loci_json, "loci")));
        SRat residual = master_relation_residual(loci);
        bool pass = residual.is_zero();
        Json out;
        out["residual"] = srat_to_json(residual);
        out["status"] = pass ? "PASS" : "FAIL";
        *out_json = dup_string(out.dump());
        return pass ? WALLX_OK : WALLX_CONTRACT_VIOLATION;
    });
}

wallx_status wallx_expand(wallx_engine* engine, const wallx_lattice* lattice,
                          const char* table_json, long k,
                          const char* targets_json, char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        const ClassLattice& lat = need_lattice(lattice);
        InvariantTable vw = invariant_table_from_json(
            parse_json_text(need_text(table_json, "invariant table")));
        auto targets = targets_from_json(
            parse_json_text(need_text(targets_json, "targets")));
        std::vector<std::string> warnings;
        PairTable tilde = forward_expand(lat, vw, k, targets, &warnings);
        Json out = pair_table_to_json(tilde);
        if (!warnings.empty())
            out["warnings"] = warnings;
        *out_json = dup_string(out.dump());
        return WALLX_OK;
    });
}

wallx_status wallx_invert(wallx_engine* engine, const wallx_lattice* lattice,
                          const char* table_json, long k,
                          const char* targets_json, char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        const ClassLattice& lat = need_lattice(lattice);
        PairTable tilde = pair_table_from_json(
            parse_json_text(need_text(table_json, "pair table")));
        auto targets = targets_from_json(
            parse_json_text(need_text(targets_json, "targets")));
        InvariantTable vw = invert(lat, tilde, k, targets);
        *out_json = dup_string(invariant_table_to_json(vw).dump());
        return WALLX_OK;
    });
}

wallx_status wallx_check_relation(wallx_engine* engine,
                                  const wallx_lattice* lattice,
                                  const char* table1_json, long k1,
                                  const char* table2_json, long k2,
                                  const char* targets_json, char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        const ClassLattice& lat = need_lattice(lattice);
        PairTable tilde1 = pair_table_from_json(
            parse_json_text(need_text(table1_json, "pair table 1")));
        PairTable tilde2 = pair_table_from_json(
            parse_json_text(need_text(table2_json, "pair table 2")));
        auto targets = targets_from_json(
            parse_json_text(need_text(targets_json, "targets")));
        bool all_pass = true;
        Json checks = Json::array();
        for (const auto& target : targets) {
            SRat residual =
                relation_residual(lat, tilde1, k1, tilde2, k2, target);
            bool pass = residual.is_zero();
            all_pass = all_pass && pass;
            Json entry;
            entry["target"] = targets_to_json({target})[0];
            entry["residual"] = srat_to_json(residual);
            entry["status"] = pass ? "PASS" : "FAIL";
            checks.push_back(std::move(entry));
        }
        Json out;
        out["k1"] = k1;
        out["k2"] = k2;
        out["checks"] = std::move(checks);
        out["status"] = all_pass ? "PASS" : "FAIL";
        *out_json = dup_string(out.dump());
        return all_pass ? WALLX_OK : WALLX_CONTRACT_VIOLATION;
    });
}

wallx_status wallx_stability(wallx_engine* engine,
                             const wallx_lattice* lattice,
                             const char* targets_json, const long* ks,
                             size_t ks_len, char** out_json) {
    return guarded(engine, [&] {
        if (!out_json)
            throw parse_error("null output pointer");
        const ClassLattice& lat = need_lattice(lattice);
        auto targets = targets_from_json(
            parse_json_text(need_text(targets_json, "targets")));
        Json rows = Json::array();
        for (const auto& alpha : targets) {
            Json row;
            row["class"] = targets_to_json({alpha})[0];
            Json hp = Json::array();
            for (const auto& c : lat.hilbert_poly(alpha))
                hp.push_back(rat_to_string(c));
            row["hilbert"] = std::move(hp);
            row["r"] = rat_to_string(lat.rank_r(alpha));
            if (!alpha.is_zero() && lat.rank_r(alpha) > 0) {
                row["tilde_r"] = lat.tilde_r(alpha);
                row["tau"] = lat.tau(alpha).to_string();
                row["generic"] = lat.is_generic(alpha);
            }
            Json lambdas = Json::array();
            for (size_t i = 0; i < ks_len; ++i)
                lambdas.push_back(
                    Json::array({ks[i], lat.lambda_k(alpha, ks[i])}));
            row["lambda"] = std::move(lambdas);
            rows.push_back(std::move(row));
        }
        // pairwise tau order on the distinct nonzero targets
        Json order = Json::array();
        for (size_t i = 0; i < targets.size(); ++i)
            for (size_t j = i + 1; j < targets.size(); ++j) {
                if (targets[i].is_zero() || targets[j].is_zero())
                    continue;
                if (lat.rank_r(targets[i]) <= 0 || lat.rank_r(targets[j]) <= 0)
                    continue;
                Ord o = tau_cmp(lat.tau(targets[i]), lat.tau(targets[j]));
                const char* sym = o == Ord::LT ? "<" : (o == Ord::EQ ? "=" : ">");
                order.push_back(Json::array(
                    {targets_to_json({targets[i]})[0], sym,
                     targets_to_json({targets[j]})[0]}));
            }
        Json out;
        out["classes"] = std::move(rows);
        out["tau_order"] = std::move(order);
        *out_json = dup_string(out.dump());
        return WALLX_OK;
    });
}

wallx_status wallx_verify(wallx_engine* engine, const char* suite,
                          unsigned long long seed, long range, long cases,
                          char** out_report) {
    return guarded(engine, [&] {
        if (!out_report)
            throw parse_error("null output pointer");
        SuiteResult result =
            run_suite(need_text(suite, "suite name"), seed, range, cases);
        *out_report = dup_string(report_to_jsonl(result));
        return result.all_pass() ? WALLX_OK : WALLX_CONTRACT_VIOLATION;
    });
}

} // extern "C"

#include "wallx/json_io.hpp"

#include <cstdint>

namespace wallx {

namespace {

long to_long(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw parse_error(std::string("expected an integer for ") + what);
    return j.get<long>();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw parse_error("expected a rational as \"p/q\" string");
}

ChernClass class_from_json(const Json& j) {
    if (!j.is_array())
        throw parse_error("expected a class as an array of integers");
    ChernClass out;
    for (const auto& c : j)
        out.coords.push_back(to_long(c, "class coordinate"));
    return out;
}

Json class_to_json(const ChernClass& alpha) {
    Json out = Json::array();
    for (long c : alpha.coords)
        out.push_back(c);
    return out;
}

} // namespace

Json spoly_to_json(const SPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json::array(
            {e, c.get_num().get_str(), c.get_den().get_str()}));
    return out;
}

SPoly spoly_from_json(const Json& j) {
    if (!j.is_array())
        throw parse_error("expected a coefficient list [[exp, num, den], ...]");
    SPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw parse_error("coefficient must be [exponent, num, den]");
        long e = to_long(term[0], "s-exponent");
        Rat num = rat_from_json(term[1]);
        Rat den = rat_from_json(term[2]);
        if (den == 0)
            throw parse_error("zero denominator in coefficient");
        p.add_term(e, num / den);
    }
    return p;
}

Json srat_to_json(const SRat& x) {
    Json out;
    out["num"] = spoly_to_json(x.num());
    out["den"] = spoly_to_json(x.den());
    return out;
}

SRat srat_from_json(const Json& j) {
    if (j.is_array()) {
        // also accept the bare pair form [num_terms, den_terms]
        if (j.size() != 2)
            throw parse_error("SRat pair form must have two coefficient lists");
        return SRat(spoly_from_json(j[0]), spoly_from_json(j[1]));
    }
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("SRat must be {\"num\": [...], \"den\": [...]}");
    return SRat(spoly_from_json(j["num"]), spoly_from_json(j["den"]));
}

Json zrat_to_json(const ZRat& f) {
    Json out;
    Json num = Json::array();
    for (size_t i = 0; i < f.num().coeffs().size(); ++i) {
        const SRat& c = f.num().coeffs()[i];
        if (!c.is_zero())
            num.push_back(Json::array(
                {f.valuation_shift() + static_cast<long>(i), srat_to_json(c)}));
    }
    Json den = Json::array();
    for (size_t i = 0; i < f.den().coeffs().size(); ++i) {
        const SRat& c = f.den().coeffs()[i];
        if (!c.is_zero())
            den.push_back(
                Json::array({static_cast<long>(i), srat_to_json(c)}));
    }
    out["num"] = std::move(num);
    out["den"] = std::move(den);
    return out;
}

ZRat zrat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("ZRat must be {\"num\": [...], \"den\": [...]}");
    auto read_side = [](const Json& side, long& shift) {
        if (!side.is_array())
            throw parse_error("ZRat side must be a [z-exponent, SRat] list");
        std::map<long, SRat> terms;
        for (const auto& term : side) {
            if (!term.is_array() || term.size() != 2)
                throw parse_error("ZRat term must be [z-exponent, SRat]");
            long e = to_long(term[0], "z-exponent");
            SRat c = srat_from_json(term[1]);
            if (!c.is_zero())
                terms[e] = terms.count(e) ? terms[e] + c : c;
        }
        shift = terms.empty() ? 0 : terms.begin()->first;
        std::vector<SRat> coeffs;
        if (!terms.empty()) {
            long top = terms.rbegin()->first;
            coeffs.assign(static_cast<size_t>(top - shift) + 1, SRat{});
            for (auto& [e, c] : terms)
                coeffs[static_cast<size_t>(e - shift)] = std::move(c);
        }
        return ZPoly(std::move(coeffs));
    };
    long vn = 0, vd = 0;
    ZPoly num = read_side(j["num"], vn);
    ZPoly den = read_side(j["den"], vd);
    if (den.is_zero())
        throw parse_error("ZRat denominator is zero");
    return ZRat::from_parts(vn - vd, std::move(num), std::move(den));
}

Json lattice_to_json(const ClassLattice& lattice) {
    Json out;
    out["m"] = lattice.m();
    out["dim"] = lattice.dim();
    auto mat = [](const std::vector<std::vector<Rat>>& rows) {
        Json m = Json::array();
        for (const auto& row : rows) {
            Json r = Json::array();
            for (const auto& c : row)
                r.push_back(rat_to_string(c));
            m.push_back(std::move(r));
        }
        return m;
    };
    out["hilbert"] = mat(lattice.hilbert_matrix());
    out["chi"] = mat(lattice.chi_matrix());
    Json eff = Json::array();
    for (const auto& alpha : lattice.effective())
        eff.push_back(class_to_json(alpha));
    out["effective"] = std::move(eff);
    return out;
}

ClassLattice lattice_from_json(const Json& j) {
    if (!j.is_object())
        throw parse_error("lattice must be a JSON object");
    for (const char* key : {"m", "dim", "hilbert", "chi", "effective"})
        if (!j.contains(key))
            throw parse_error(std::string("lattice is missing \"") + key +
                              "\"");
    size_t m = static_cast<size_t>(to_long(j["m"], "m"));
    int dim = static_cast<int>(to_long(j["dim"], "dim"));
    auto mat = [](const Json& rows, const char* what) {
        if (!rows.is_array())
            throw parse_error(std::string(what) + " must be a matrix");
        std::vector<std::vector<Rat>> out;
        for (const auto& row : rows) {
            if (!row.is_array())
                throw parse_error(std::string(what) + " must be a matrix");
            std::vector<Rat> r;
            for (const auto& c : row)
                r.push_back(rat_from_json(c));
            out.push_back(std::move(r));
        }
        return out;
    };
    std::vector<ChernClass> effective;
    for (const auto& e : j["effective"])
        effective.push_back(class_from_json(e));
    try {
        return ClassLattice(m, dim, mat(j["hilbert"], "hilbert"),
                            mat(j["chi"], "chi"), std::move(effective));
    } catch (const domain_error& err) {
        throw parse_error(std::string("invalid lattice: ") + err.what());
    }
}

Json invariant_table_to_json(const InvariantTable& table) {
    Json entries = Json::array();
    for (const auto& [alpha, value] : table.entries())
        entries.push_back(
            Json::array({class_to_json(alpha), srat_to_json(value)}));
    Json out;
    out["entries"] = std::move(entries);
    return out;
}

InvariantTable invariant_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw parse_error("invariant table must be {\"entries\": [...]}");
    InvariantTable out;
    for (const auto& entry : j["entries"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw parse_error("table entry must be [class, SRat]");
        out.set(class_from_json(entry[0]), srat_from_json(entry[1]));
    }
    return out;
}

Json pair_table_to_json(const PairTable& table) {
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries())
        entries.push_back(Json::array(
            {key.first, class_to_json(key.second), srat_to_json(value)}));
    Json out;
    out["entries"] = std::move(entries);
    return out;
}

PairTable pair_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw parse_error("pair table must be {\"entries\": [...]}");
    PairTable out;
    for (const auto& entry : j["entries"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw parse_error("pair table entry must be [k, class, SRat]");
        out.set(to_long(entry[0], "twist k"), class_from_json(entry[1]),
                srat_from_json(entry[2]));
    }
    return out;
}

Json targets_to_json(const std::vector<ChernClass>& targets) {
    Json out = Json::array();
    for (const auto& t : targets)
        out.push_back(class_to_json(t));
    return out;
}

std::vector<ChernClass> targets_from_json(const Json& j) {
    if (!j.is_array())
        throw parse_error("targets must be an array of classes");
    std::vector<ChernClass> out;
    for (const auto& t : j)
        out.push_back(class_from_json(t));
    return out;
}

Json loci_to_json(const std::vector<FixedLocusDatum>& loci) {
    Json out = Json::array();
    for (const auto& locus : loci) {
        Json l;
        l["amplitude"] = srat_to_json(locus.amplitude);
        Json ws = Json::array();
        for (const auto& [w, mult] : locus.f.weights())
            ws.push_back(Json::array({w.a, w.m, mult}));
        l["weights"] = std::move(ws);
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<FixedLocusDatum> loci_from_json(const Json& j) {
    if (!j.is_array())
        throw parse_error("loci must be an array");
    std::vector<FixedLocusDatum> out;
    for (const auto& l : j) {
        if (!l.is_object() || !l.contains("amplitude") ||
            !l.contains("weights"))
            throw parse_error(
                "locus must be {\"amplitude\": ..., \"weights\": [...]}");
        FixedLocusDatum datum;
        datum.amplitude = srat_from_json(l["amplitude"]);
        for (const auto& w : l["weights"]) {
            if (!w.is_array() || w.size() != 3)
                throw parse_error("weight must be [a, m, mult]");
            datum.f.add({to_long(w[0], "a"), to_long(w[1], "m")},
                        to_long(w[2], "mult"));
        }
        out.push_back(std::move(datum));
    }
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string digest(const std::string& canonical_text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string digest(const Json& j) { return digest(j.dump()); }

} // namespace wallx

#pragma once

#include <string>

#include "json.hpp"

#include "wallx/kclass.hpp"
#include "wallx/lattice.hpp"
#include "wallx/wallcross.hpp"
#include "wallx/zrat.hpp"

namespace wallx {

using Json = nlohmann::ordered_json;

// All rationals travel as "p/q" strings, never floats. An SRat is a pair of
// coefficient lists; each coefficient is [s-exponent, "p", "q"].
Json srat_to_json(const SRat& x);
SRat srat_from_json(const Json& j);

Json spoly_to_json(const SPoly& p);
SPoly spoly_from_json(const Json& j);

// A ZRat is numerator/denominator lists of [z-exponent, SRat] pairs.
Json zrat_to_json(const ZRat& f);
ZRat zrat_from_json(const Json& j);

Json lattice_to_json(const ClassLattice& lattice);
ClassLattice lattice_from_json(const Json& j);

Json invariant_table_to_json(const InvariantTable& table);
InvariantTable invariant_table_from_json(const Json& j);

Json pair_table_to_json(const PairTable& table);
PairTable pair_table_from_json(const Json& j);

Json targets_to_json(const std::vector<ChernClass>& targets);
std::vector<ChernClass> targets_from_json(const Json& j);

Json loci_to_json(const std::vector<FixedLocusDatum>& loci);
std::vector<FixedLocusDatum> loci_from_json(const Json& j);

// Strict parse of a whole document; throws parse_error on bad JSON.
Json parse_json_text(const std::string& text);

// FNV-1a 64-bit digest of a canonical serialization, as 16 hex digits.
std::string digest(const std::string& canonical_text);
std::string digest(const Json& j);

} // namespace wallx

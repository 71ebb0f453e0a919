#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "bsglab/int_set.hpp"
#include "bsglab/lattice_set.hpp"
#include "bsglab/pair_constraint.hpp"

namespace bsglab {

using Json = nlohmann::ordered_json;

// Sets above this size are written as runs instead of an element list.
inline constexpr int64_t kElementListLimit = 1'000'000;

Json ToJson(const IntSet& a);
Json ToJson(const LatticeSet& a);
Json ToJson(const PairConstraint& g);

IntSet IntSetFromJson(const Json& j);
LatticeSet LatticeSetFromJson(const Json& j);
PairConstraint PairConstraintFromJson(const Json& j);

// Streamed writers producing the same text as ToJson(...).dump(); they avoid
// building a DOM for sets with millions of entries.
void WriteJson(std::ostream& os, const IntSet& a);
void WriteJson(std::ostream& os, const PairConstraint& g);

Json ReadJsonFile(const std::string& path);
std::string ReadTextFile(const std::string& path);
// Writes atomically enough for our purposes: truncate and write.
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace bsglab

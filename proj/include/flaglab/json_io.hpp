#pragma once

#include "flaglab/classify.hpp"
#include "flaglab/search.hpp"

#include "json.hpp"

namespace flaglab {

inline constexpr const char* kToolName = "flaglab";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

std::string iso_timestamp_utc();

/// Common report envelope: tool, version, kind, timestamp.
Json report_skeleton(const std::string& kind);

/// Big integers travel as decimal strings so any JSON consumer keeps them
/// exact.
inline std::string big_str(const BigInt& v) { return v.get_str(); }

Json family_to_json(const FlagFamily& F);
/// Validates n, q and the vertex hash against the universe before trusting
/// any index.
FlagFamily family_from_json(std::shared_ptr<const FlagUniverse> u, const Json& j);

Json construction_to_json(const ConstructionSpec& spec);
ConstructionSpec construction_from_json(const Json& j);

Json subspace_list_to_json(int n, int q, const std::vector<Subspace>& spaces);
std::vector<Subspace> subspace_list_from_json(const Json& j, int expect_q = 0);

/// Minimal structural JSON-schema check: type, required, properties, items,
/// enum, pattern. Returns human-readable problems (empty = valid).
std::vector<std::string> validate_schema(const Json& value, const Json& schema,
                                         const std::string& where = "$");

}  // namespace flaglab

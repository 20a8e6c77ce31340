#include "flaglab/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <regex>

namespace flaglab {

std::string iso_timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

Json report_skeleton(const std::string& kind) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["kind"] = kind;
  j["timestamp"] = iso_timestamp_utc();
  return j;
}

Json family_to_json(const FlagFamily& F) {
  const FlagUniverse& u = F.universe();
  Json j;
  j["n"] = u.ps().n;
  j["q"] = u.ps().q;
  j["vertex_hash"] = u.vertex_hash();
  j["indices"] = F.members();
  return j;
}

FlagFamily family_from_json(std::shared_ptr<const FlagUniverse> u, const Json& j) {
  if (!j.contains("n") || !j.contains("q") || !j.contains("vertex_hash") ||
      !j.contains("indices"))
    fail(Errc::BadFormat, "family JSON needs n, q, vertex_hash, indices");
  if (j["n"].get<int>() != u->ps().n || j["q"].get<int>() != u->ps().q)
    fail(Errc::BadFormat, "family is for (n=" + j["n"].dump() + ", q=" + j["q"].dump() +
                              "), not (n=" + std::to_string(u->ps().n) +
                              ", q=" + std::to_string(u->ps().q) + ")");
  if (j["vertex_hash"].get<std::string>() != u->vertex_hash())
    fail(Errc::BadFormat,
         "vertex hash mismatch: indices were minted against a different enumeration");
  return FlagFamily(std::move(u), j["indices"].get<std::vector<int>>());
}

Json construction_to_json(const ConstructionSpec& spec) {
  Json j;
  j["variant"] = variant_name(spec.variant);
  j["anchor1"] = spec.anchor1.serialize();
  j["anchor2"] = spec.anchor2.serialize();
  return j;
}

ConstructionSpec construction_from_json(const Json& j) {
  if (!j.contains("variant") || !j.contains("anchor1") || !j.contains("anchor2"))
    fail(Errc::BadFormat, "construction JSON needs variant, anchor1, anchor2");
  auto v = variant_parse(j["variant"].get<std::string>());
  if (!v) fail(Errc::BadFormat, "unknown variant '" + j["variant"].get<std::string>() + "'");
  return ConstructionSpec{*v, Subspace::parse(j["anchor1"].get<std::string>()),
                          Subspace::parse(j["anchor2"].get<std::string>())};
}

Json subspace_list_to_json(int n, int q, const std::vector<Subspace>& spaces) {
  Json j;
  j["n"] = n;
  j["q"] = q;
  Json arr = Json::array();
  for (const Subspace& s : spaces) arr.push_back(s.serialize());
  j["subspaces"] = std::move(arr);
  return j;
}

std::vector<Subspace> subspace_list_from_json(const Json& j, int expect_q) {
  if (!j.contains("subspaces") || !j["subspaces"].is_array())
    fail(Errc::BadFormat, "expected a 'subspaces' array of serialized subspaces");
  std::vector<Subspace> out;
  for (const auto& s : j["subspaces"]) out.push_back(Subspace::parse(s.get<std::string>()));
  if (expect_q)
    for (const Subspace& s : out)
      if (s.field().q() != expect_q)
        fail(Errc::BadFormat, "subspace " + s.serialize() + " is not over GF(" +
                                  std::to_string(expect_q) + ")");
  return out;
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

}  // namespace

std::vector<std::string> validate_schema(const Json& value, const Json& schema,
                                         const std::string& where) {
  std::vector<std::string> problems;
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& tt : t) ok = ok || type_matches(value, tt.get<std::string>());
    }
    if (!ok) {
      problems.push_back(where + ": expected type " + t.dump() + ", got " +
                         std::string(value.type_name()));
      return problems;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || (e == value);
    if (!ok) problems.push_back(where + ": value " + value.dump() + " not in enum");
  }
  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re))
      problems.push_back(where + ": '" + value.get<std::string>() + "' does not match pattern " +
                         schema["pattern"].get<std::string>());
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!value.contains(k.get<std::string>()))
          problems.push_back(where + ": missing required key '" + k.get<std::string>() + "'");
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key())) {
          auto sub = validate_schema(value[it.key()], it.value(), where + "." + it.key());
          problems.insert(problems.end(), sub.begin(), sub.end());
        }
  }
  if (value.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& item : value) {
      auto sub = validate_schema(item, schema["items"], where + "[" + std::to_string(i) + "]");
      problems.insert(problems.end(), sub.begin(), sub.end());
      ++i;
    }
  }
  return problems;
}

}  // namespace flaglab

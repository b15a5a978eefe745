#include "mdsgrs/serialize.hpp"

#include <sstream>

namespace mdsgrs {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned()) parse_fail(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> as_uint_list(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) parse_fail(std::string("\"") + key + "\" must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > 0xffffffffULL)
      parse_fail(std::string("\"") + key + "\" entries must be non-negative integers");
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  j["modulus"] = f.modulus();
  j["theta"] = f.theta().code();
  return j;
}

FieldPtr field_from_json(const Json& j, std::uint64_t table_limit) {
  const auto p = as_uint(j, "p");
  const auto m = as_uint(j, "m");
  const auto modulus = as_uint_list(j, "modulus");
  if (p > 0xffffffffULL || m > 64) parse_fail("field parameters out of range");
  if (j.contains("theta") && j["theta"] != Json(2)) parse_fail("theta must be encoded as 2");
  FieldPtr f;
  try {
    f = make_field_with_modulus(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus, table_limit);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TableLimitExceeded) throw;
    parse_fail(std::string("bad field: ") + e.what());
  }
  return f;
}

Json code_to_json(const SelfDualCode& code) {
  const EvalSet& es = code.eval;
  Json j;
  j["field"] = field_to_json(*es.field);
  Json a = Json::array(), v = Json::array();
  for (Elem x : es.points) a.push_back(x.code());
  for (Elem x : es.multipliers) v.push_back(x.code());
  j["a"] = std::move(a);
  j["v"] = std::move(v);
  j["extended"] = es.extended;
  j["k"] = code.k;
  const Json& params = code.provenance.params;
  j["provenance"] = Json{{"theorem", code.provenance.theorem}, {"params", params.is_null() ? Json::object() : params}};
  return j;
}

SelfDualCode code_from_json(const Json& j, std::uint64_t table_limit) {
  FieldPtr f = field_from_json(member(j, "field"), table_limit);
  const auto a = as_uint_list(j, "a");
  const auto v = as_uint_list(j, "v");
  const Json& ext = member(j, "extended");
  if (!ext.is_boolean()) parse_fail("\"extended\" must be a boolean");
  const auto k = as_uint(j, "k");
  if (a.empty()) parse_fail("\"a\" is empty");
  if (v.size() != a.size()) parse_fail("\"v\" and \"a\" differ in length");

  std::vector<Elem> points, mults;
  for (auto x : a) points.emplace_back(x);
  for (auto x : v) {
    if (!f->contains(Elem(x))) parse_fail("multiplier " + std::to_string(x) + " is not an element of " + f->name());
    mults.emplace_back(x);
  }
  SelfDualCode code;
  try {
    code.eval = make_eval_set(f, std::move(points), ext.get<bool>());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EnumerationTooLarge) throw;
    parse_fail(std::string("bad evaluation points: ") + e.what());
  }
  code.eval.multipliers = std::move(mults);
  if (2 * k != code.eval.length()) parse_fail("k must be half the length");
  code.k = k;

  if (j.contains("provenance")) {
    const Json& pv = j["provenance"];
    const Json& th = member(pv, "theorem");
    if (!th.is_string()) parse_fail("provenance theorem must be a string");
    code.provenance.theorem = th.get<std::string>();
    if (pv.contains("params")) {
      if (!pv["params"].is_object()) parse_fail("provenance params must be an object");
      code.provenance.params = pv["params"];
    }
  }
  return code;
}

SelfDualCode code_from_string(const std::string& text, std::uint64_t table_limit) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return code_from_json(j, table_limit);
}

std::string generator_text(const GeneratorMatrix& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out << ' ';
      out << g.at(i, c).code();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mdsgrs

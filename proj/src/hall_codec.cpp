#include <charconv>

#include <json.hpp>

#include "normforge/errors.hpp"
#include "normforge/hall.hpp"

namespace normforge {

namespace {

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

unsigned parse_universe(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object", "/");
  if (!j.contains("N") || !j["N"].is_number_unsigned()) throw ParseError("missing or non-integer \"N\"", "/N");
  const auto N = j["N"].get<std::uint64_t>();
  if (N < 1 || N > kMaxFnUniverse) throw ParseError("N must lie in 1..16", "/N");
  return static_cast<unsigned>(N);
}

}  // namespace

FnSet parse_fnset(std::string_view text) {
  const auto j = parse_json(text);
  const unsigned N = parse_universe(j);
  if (!j.contains("functions") || !j["functions"].is_array()) throw ParseError("missing \"functions\" array", "/functions");
  std::vector<Mask> out;
  const auto& fs = j["functions"];
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "/functions/" + std::to_string(i);
    if (!fs[i].is_string()) throw ParseError("function must be a 0/1 string", where);
    const auto s = fs[i].get<std::string>();
    if (s.size() != N) throw ParseError("function length " + std::to_string(s.size()) + " differs from N", where);
    if (s.find_first_not_of("01") != std::string::npos) throw ParseError("function strings use only 0 and 1", where);
    out.push_back(fn_from_string(s));
  }
  return FnSet(N, std::move(out));
}

std::string emit_function_list(const FnSet& A) {
  std::string s = "[";
  bool first = true;
  for (Mask f : A) {
    if (!first) s += ",";
    s += "\"" + fn_to_string(f, A.N()) + "\"";
    first = false;
  }
  return s + "]";
}

std::string emit_fnset(const FnSet& A) {
  return "{\"N\":" + std::to_string(A.N()) + ",\"functions\":" + emit_function_list(A) + "}\n";
}

FnFamily parse_fnfamily(std::string_view text) {
  const auto j = parse_json(text);
  const unsigned N = parse_universe(j);
  if (!j.contains("pfns") || !j["pfns"].is_array()) throw ParseError("missing \"pfns\" array", "/pfns");
  std::vector<PartialFn> out;
  const auto& ps = j["pfns"];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string where = "/pfns/" + std::to_string(i);
    if (!ps[i].is_object()) throw ParseError("partial function must be an object", where);
    Mask dom = 0, ones = 0;
    for (const auto& [key, value] : ps[i].items()) {
      const std::string at = where + "/" + key;
      unsigned idx = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
      if (ec != std::errc() || ptr != key.data() + key.size() || key.empty() || (key.size() > 1 && key[0] == '0'))
        throw ParseError("key \"" + key + "\" is not a point index", at);
      if (idx >= N) throw ParseError("point " + key + " ≥ N", at);
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 1) throw ParseError("value must be 0 or 1", at);
      dom |= bit(idx);
      if (value.get<std::uint64_t>() == 1) ones |= bit(idx);
    }
    out.emplace_back(dom, ones);
  }
  return FnFamily(N, std::move(out));
}

std::string emit_pfn(const PartialFn& s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : mask_elements(s.dom)) {
    if (!first) out += ",";
    out += "\"" + std::to_string(i) + "\":" + ((s.ones & bit(i)) ? "1" : "0");
    first = false;
  }
  return out + "}";
}

std::string emit_pfn_list(const FnFamily& d) {
  std::string s = "[";
  bool first = true;
  for (const auto& p : d) {
    if (!first) s += ",";
    s += emit_pfn(p);
    first = false;
  }
  return s + "]";
}

std::string emit_fnfamily(const FnFamily& d) {
  return "{\"N\":" + std::to_string(d.N()) + ",\"pfns\":" + emit_pfn_list(d) + "}\n";
}

}  // namespace normforge

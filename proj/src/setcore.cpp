#include "normforge/setcore.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "normforge/errors.hpp"

namespace normforge {

std::vector<unsigned> mask_elements(Mask m) {
  std::vector<unsigned> out;
  while (m) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask elements_mask(const std::vector<unsigned>& elements) {
  Mask m = 0;
  for (unsigned e : elements) {
    if (e >= 32) throw DomainError("element " + std::to_string(e) + " exceeds mask width");
    m |= bit(e);
  }
  return m;
}

std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (unsigned e : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

Mask compress_bits(Mask x, Mask z) {
  Mask out = 0;
  unsigned j = 0;
  for (unsigned e : mask_elements(z)) {
    if (x & bit(e)) out |= bit(j);
    ++j;
  }
  return out;
}

Mask expand_bits(Mask x, Mask z) {
  Mask out = 0;
  unsigned j = 0;
  for (unsigned e : mask_elements(z)) {
    if (x & bit(j)) out |= bit(e);
    ++j;
  }
  return out;
}

Universe::Universe(unsigned size) : size_(size) {
  if (size < 1 || size > kMaxUniverse)
    throw DomainError("universe size " + std::to_string(size) + " outside 1.." + std::to_string(kMaxUniverse));
}

Family::Family(unsigned universe, std::vector<Mask> members) : universe_(universe), members_(std::move(members)) {
  if (universe > kMaxUniverse) throw DomainError("universe size " + std::to_string(universe) + " too large");
  const Mask full = full_mask(universe);
  for (Mask m : members_)
    if (!is_subset(m, full)) throw DomainError("member " + mask_to_string(m) + " outside universe " + std::to_string(universe));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(Mask m) const { return std::binary_search(members_.begin(), members_.end(), m); }

Partition::Partition(unsigned universe, std::vector<Mask> parts) : universe_(universe), parts_(std::move(parts)) {
  Mask seen = 0;
  for (Mask p : parts_) {
    if (p == 0) throw DomainError("partition has an empty part");
    if (seen & p) throw DomainError("partition parts overlap");
    seen |= p;
  }
  if (seen != full_mask(universe)) throw DomainError("partition does not cover the universe");
  std::sort(parts_.begin(), parts_.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

bool Partition::splits(const Family& A) const {
  for (Mask a : A)
    for (Mask p : parts_)
      if (is_subset(a, p)) return false;
  return true;
}

Family restrict(const Family& A, Mask z) {
  if (!is_subset(z, full_mask(A.universe())))
    throw DomainError("restriction mask " + mask_to_string(z) + " outside universe " + std::to_string(A.universe()));
  std::vector<Mask> out;
  for (Mask a : A)
    if (is_subset(a, z)) out.push_back(a);
  return Family(A.universe(), std::move(out));
}

BigCount counting_norm(const Family& A) { return BigCount(A.size()); }

Family family_union(const Family& A, const Family& B) {
  if (A.universe() != B.universe()) throw DomainError("family union across different universes");
  std::vector<Mask> out(A.members());
  out.insert(out.end(), B.begin(), B.end());
  return Family(A.universe(), std::move(out));
}

Family with_universe(const Family& A, unsigned universe) { return Family(universe, A.members()); }

std::vector<Mask> size_lex_order(std::vector<Mask> members) {
  std::sort(members.begin(), members.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    // For equal sizes, lexicographic on ascending elements: compare the
    // lowest differing bit; whoever owns it comes first.
    Mask d = a ^ b;
    if (d == 0) return false;
    return (a & (d & (~d + 1))) != 0;
  });
  return members;
}

std::string emit_mask(Mask m) {
  std::string s = "[";
  bool first = true;
  for (unsigned e : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "]";
}

std::string emit_sets(const Family& A) {
  std::string s = "[";
  bool first = true;
  for (Mask m : size_lex_order(A.members())) {
    if (!first) s += ",";
    s += emit_mask(m);
    first = false;
  }
  return s + "]";
}

std::string emit_family(const Family& A) {
  return "{\"universe\":" + std::to_string(A.universe()) + ",\"sets\":" + emit_sets(A) + "}\n";
}

std::string emit_partition(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += emit_mask(p.parts()[i]);
  }
  return s + "]";
}

Family parse_family(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
  if (!j.is_object()) throw ParseError("family must be a JSON object", "/");
  if (!j.contains("universe") || !j["universe"].is_number_unsigned())
    throw ParseError("missing or non-integer \"universe\"", "/universe");
  const auto N = j["universe"].get<std::uint64_t>();
  if (N < 1 || N > kMaxUniverse) throw ParseError("universe must lie in 1..24", "/universe");
  if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("missing \"sets\" array", "/sets");
  std::vector<Mask> members;
  const auto& sets = j["sets"];
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = "/sets/" + std::to_string(i);
    if (!sets[i].is_array()) throw ParseError("set must be an array", where);
    Mask m = 0;
    for (std::size_t t = 0; t < sets[i].size(); ++t) {
      const auto& el = sets[i][t];
      const std::string at = where + "/" + std::to_string(t);
      if (!el.is_number_unsigned()) throw ParseError("element must be a nonnegative integer", at);
      const auto v = el.get<std::uint64_t>();
      if (v >= N) throw ParseError("element " + std::to_string(v) + " ≥ universe", at);
      if (m & bit(static_cast<unsigned>(v))) throw ParseError("duplicate element " + std::to_string(v), at);
      m |= bit(static_cast<unsigned>(v));
    }
    members.push_back(m);
  }
  return Family(static_cast<unsigned>(N), std::move(members));
}

}  // namespace normforge

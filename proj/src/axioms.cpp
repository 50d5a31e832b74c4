#include "normforge/axioms.hpp"

#include "normforge/coloring.hpp"
#include "normforge/errors.hpp"
#include "normforge/exclusion.hpp"
#include "normforge/rng.hpp"
#include "normforge/subset_norm.hpp"

namespace normforge {

std::string norm_name(NormId id) {
  switch (id) {
    case NormId::counting: return "norm0";
    case NormId::exclusion: return "norm1";
    case NormId::subset: return "norm2";
    case NormId::coloring: return "norm3";
    case NormId::hall: return "norm4";
  }
  return "norm?";
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

void record(AxiomReport& r, AxiomFailure f) {
  if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(std::move(f));
}

}  // namespace

AxiomReport check_axioms(std::size_t m, const std::function<ExactRatio(std::uint64_t)>& value, std::uint64_t seed,
                         std::uint64_t samples) {
  if (m > 63) throw BudgetError("axiom ground list too large");
  AxiomReport r;
  r.ground_size = m;
  const std::uint64_t full = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
  if (m <= kAxiomExhaustiveLimit) {
    std::vector<ExactRatio> v(std::size_t{1} << m);
    for (std::uint64_t C = 0; C <= full; ++C) v[C] = value(C);
    // Cover pairs suffice: monotonicity along covers implies it for all B ⊆ C.
    for (std::uint64_t C = 0; C <= full; ++C)
      for (std::size_t i = 0; i < m; ++i)
        if (C >> i & 1) {
          ++r.checks;
          const std::uint64_t B = C & ~(std::uint64_t{1} << i);
          if (v[B] > v[C]) {
            r.monotone = false;
            record(r, {"monotone", B, C, v[B], v[C]});
          }
        }
  } else {
    r.exhaustive = false;
    for (std::uint64_t s = 0; s < samples; ++s) {
      CaseRng rng(seed, s);
      const std::uint64_t C = rng.next() & full;
      const std::uint64_t B = C & rng.next();
      ++r.checks;
      const ExactRatio vb = value(B), vc = value(C);
      if (vb > vc) {
        r.monotone = false;
        record(r, {"monotone", B, C, vb, vc});
      }
    }
  }
  if (m > 1) {
    ++r.checks;
    const ExactRatio top = value(full);
    if (top <= ExactRatio(0)) {
      r.positive = false;
      record(r, {"positive", full, full, top, top});
    }
    for (std::size_t i = 0; i < m; ++i) {
      ++r.checks;
      const std::uint64_t s = std::uint64_t{1} << i;
      const ExactRatio vs = value(s);
      if (vs > ExactRatio(1)) {
        r.singleton = false;
        record(r, {"singleton", s, s, vs, ExactRatio(1)});
      }
    }
  }
  return r;
}

namespace {

template <class T>
const T& subject_as(const AxiomSubject& A, const char* what) {
  if (!std::holds_alternative<T>(A)) throw DomainError(std::string("axiom check expects ") + what);
  return std::get<T>(A);
}

template <class Elem>
std::vector<Elem> pick(const std::vector<Elem>& ground, std::uint64_t idx) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (idx >> i & 1) out.push_back(ground[i]);
  return out;
}

}  // namespace

AxiomReport axiom_check(NormId id, const NormParams& params, const AxiomSubject& A, std::uint64_t seed) {
  switch (id) {
    case NormId::counting: {
      const Family& fam = subject_as<Family>(A, "a family");
      return check_axioms(fam.size(), [](std::uint64_t idx) { return ExactRatio(std::popcount(idx)); }, seed);
    }
    case NormId::exclusion: {
      const Mask set = subject_as<Mask>(A, "a subset of G");
      const ExclusionParams p(params.F, params.G);
      if (!is_subset(set, full_mask(p.G))) throw DomainError("set not inside G");
      const auto pts = mask_elements(set);
      return check_axioms(pts.size(), [&](std::uint64_t idx) {
        Mask B = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (idx >> i & 1) B |= bit(pts[i]);
        return norm1(p, B);
      }, seed);
    }
    case NormId::subset: {
      const Family& fam = subject_as<Family>(A, "a family");
      const SubsetNormParams p(params.n, fam.universe());
      norm2(p, fam);  // validates membership
      return check_axioms(fam.size(), [&](std::uint64_t idx) {
        return ExactRatio(norm2(p, Family(fam.universe(), pick(fam.members(), idx))).k);
      }, seed);
    }
    case NormId::coloring: {
      const Family& fam = subject_as<Family>(A, "a family");
      const PolygonFamily whole(fam);
      return check_axioms(fam.size(), [&](std::uint64_t idx) {
        return ExactRatio(norm3(PolygonFamily(fam.universe(), pick(fam.members(), idx))).norm);
      }, seed);
    }
    case NormId::hall: {
      const FnSet& fs = subject_as<FnSet>(A, "a set of total functions");
      return check_axioms(fs.size(), [&](std::uint64_t idx) {
        return ExactRatio(hall_norm4(FnSet(fs.N(), pick(fs.members(), idx))));
      }, seed);
    }
  }
  throw DomainError("unknown norm");
}

}  // namespace normforge

#include "acts/preenvelope.hpp"

#include <algorithm>

#include "acts/enumeration.hpp"
#include "acts/error.hpp"

namespace acts {

std::int64_t LazyProductAct::full_size() const {
  std::int64_t total = 1;
  for (const auto& [target, f] : coordinates) total *= target->size;
  return total;
}

std::vector<int> LazyProductAct::map_tuple(int a) const {
  std::vector<int> tuple;
  tuple.reserve(coordinates.size());
  for (const auto& [target, f] : coordinates) tuple.push_back(f.map[a]);
  return tuple;
}

std::vector<ActPtr> class_representatives(const ActClass& cls, int bound) {
  std::vector<ActPtr> reps;
  if (cls.kind == ClassKind::Extensional) {
    for (const ActPtr& m : cls.members)
      if (m->size <= bound) reps.push_back(m);
    std::sort(reps.begin(), reps.end(), [](const ActPtr& a, const ActPtr& b) {
      if (a->size != b->size) return a->size < b->size;
      return a->action < b->action;
    });
    return reps;
  }
  for (int m = 1; m <= bound; ++m)
    for (const ActPtr& cand : enumerate_acts(cls.monoid, m, std::max(bound, kMaxEnumActSize)))
      if (class_contains(cls, cand)) reps.push_back(cand);
  return reps;
}

namespace {

// Pins for "g composed with phi equals f"; nullopt when phi collapses two
// elements that f separates, in which case no g exists.
std::optional<PinnedMap> factoring_pins(const ActHom& phi, const ActHom& f) {
  PinnedMap pins;
  for (int a = 0; a < phi.source->size; ++a) {
    auto [it, inserted] = pins.emplace(phi.map[a], f.map[a]);
    if (!inserted && it->second != f.map[a]) return std::nullopt;
  }
  return pins;
}

} // namespace

FactoringReport verify_preenvelope(const ActHom& phi, const ActClass& cls, int verify_bound) {
  if (!class_contains(cls, phi.target))
    throw Error(ErrorKind::TargetNotInClass,
                "verify_preenvelope: target '" + phi.target->name + "' is not in class " +
                    cls.describe());
  FactoringReport report{phi, cls, verify_bound, true, std::nullopt, {}};
  for (const ActPtr& obstacle : class_representatives(cls, verify_bound)) {
    for (const ActHom& f : enumerate_homs(phi.source, obstacle)) {
      std::optional<PinnedMap> pins = factoring_pins(phi, f);
      std::optional<ActHom> g;
      if (pins) g = first_hom(phi.target, obstacle, *pins);
      if (!g) {
        report.verified = false;
        report.counterexample = std::make_pair(obstacle, f);
        return report;
      }
      report.certificates.push_back(FactoringCertificate{obstacle, f, std::move(*g)});
    }
  }
  return report;
}

LazyProductAct product_preenvelope(const ActPtr& act, const ActClass& cls, int rep_bound) {
  LazyProductAct product;
  product.source = act;
  for (const ActPtr& rep : class_representatives(cls, rep_bound))
    for (ActHom& f : enumerate_homs(act, rep))
      product.coordinates.emplace_back(rep, std::move(f));
  return product;
}

bool check_projection_certificates(const LazyProductAct& product) {
  for (int a = 0; a < product.source->size; ++a) {
    std::vector<int> tuple = product.map_tuple(a);
    for (size_t i = 0; i < product.coordinates.size(); ++i)
      if (tuple[i] != product.coordinates[i].second.map[a]) return false;
  }
  return true;
}

namespace {

ActPtr one_point_act(const MonoidPtr& monoid, const std::string& name) {
  std::vector<std::vector<int>> table(1, std::vector<int>(monoid->order, 0));
  return validate_act(name, monoid, table, {"pt"});
}

} // namespace

ProductReduction reduce_via_pure_closure(const LazyProductAct& product, std::int64_t cap) {
  const ActPtr& act = product.source;
  std::int64_t total = product.full_size();
  if (total > cap)
    throw Error(ErrorKind::TooLarge,
                "reduce_via_pure_closure: product size " + std::to_string(total) +
                    " exceeds cap " + std::to_string(cap),
                {static_cast<long>(total)});

  ActPtr materialized;
  std::vector<std::int64_t> stride(product.coordinates.size(), 1);
  if (product.coordinates.empty()) {
    materialized = one_point_act(act->monoid, act->name + "_P");
  } else {
    std::vector<ActPtr> factors;
    for (const auto& [target, f] : product.coordinates) factors.push_back(target);
    materialized = product_act(factors, cap);
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * factors[i + 1]->size;
  }

  auto tuple_index = [&](int a) {
    std::int64_t idx = 0;
    for (size_t i = 0; i < product.coordinates.size(); ++i)
      idx += stride[i] * product.coordinates[i].second.map[a];
    return static_cast<int>(idx);
  };

  std::vector<int> image;
  for (int a = 0; a < act->size; ++a) image.push_back(tuple_index(a));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  PureClosureResult closure = pure_closure_detailed(materialized, image);
  ActPtr reduced = subact_as_act(closure.closure, act->name + "_preenv");
  std::vector<int> map(act->size);
  for (int a = 0; a < act->size; ++a) map[a] = closure.closure.position_of(tuple_index(a));
  ActHom phi = make_hom(act, reduced, std::move(map));
  return ProductReduction{std::move(reduced), std::move(phi), std::move(materialized),
                          std::move(closure.closure), closure.iterations};
}

std::optional<std::pair<ActHom, FactoringReport>>
find_min_preenvelope(const ActPtr& act, const ActClass& cls, int target_bound, int verify_bound) {
  if (target_bound < 1 || verify_bound < 1)
    throw Error(ErrorKind::Validation, "find_min_preenvelope: bounds must be at least 1");
  for (const ActPtr& target : class_representatives(cls, target_bound))
    for (const ActHom& phi : enumerate_homs(act, target)) {
      FactoringReport report = verify_preenvelope(phi, cls, verify_bound);
      if (report.verified) return std::make_pair(phi, std::move(report));
    }
  return std::nullopt;
}

EnvelopeReport verify_envelope(const ActHom& phi, const ActClass& cls, int verify_bound) {
  EnvelopeReport report{verify_preenvelope(phi, cls, verify_bound), false, std::nullopt};
  report.envelope = report.preenvelope.verified;

  PinnedMap pins;
  for (int a = 0; a < phi.source->size; ++a) pins[phi.map[a]] = phi.map[a];
  for_each_hom(phi.target, phi.target, pins, [&](const ActHom& endo) {
    if (is_bijective_hom(endo) && hom_inverse(endo)) return true;
    report.envelope = false;
    report.failing_endo = endo;
    return false;
  });
  return report;
}

std::optional<ActHom> extract_retraction(const ActHom& phi) {
  PinnedMap pins;
  for (int a = 0; a < phi.source->size; ++a) {
    auto [it, inserted] = pins.emplace(phi.map[a], a);
    if (!inserted && it->second != a) return std::nullopt; // phi not injective
  }
  return first_hom(phi.target, phi.source, pins);
}

} // namespace acts

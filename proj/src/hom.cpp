#include "acts/hom.hpp"

#include <algorithm>
#include <numeric>

#include "acts/error.hpp"

namespace acts {

std::vector<int> greedy_generators(const Act& a) {
  const int n = a.monoid->order;
  std::vector<char> covered(a.size, 0);
  std::vector<int> gens, stack;
  for (int start = 0; start < a.size; ++start) {
    if (covered[start]) continue;
    gens.push_back(start);
    covered[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s = 0; s < n; ++s) {
        int y = a.at(x, s);
        if (!covered[y]) {
          covered[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

// Assigns img[x] = v and propagates img[x*s] = img[x]*s to a fixpoint.
// Returns false on conflict.
bool assign_and_propagate(const Act& src, const Act& tgt, std::vector<int>& img, int x, int v) {
  if (img[x] != -1) return img[x] == v;
  const int n = src.monoid->order;
  std::vector<int> queue{x};
  img[x] = v;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int s = 0; s < n; ++s) {
      int b = src.at(a, s);
      int w = tgt.at(img[a], s);
      if (img[b] == -1) {
        img[b] = w;
        queue.push_back(b);
      } else if (img[b] != w) {
        return false;
      }
    }
  }
  return true;
}

struct HomSearch {
  const Act& src;
  const Act& tgt;
  const std::vector<int>& gens;
  const std::function<bool(const ActHom&)>& visit;
  ActPtr src_ptr, tgt_ptr;

  bool run(std::vector<int>& img, size_t k) {
    while (k < gens.size() && img[gens[k]] != -1) ++k;
    if (k == gens.size()) {
      ActHom h{src_ptr, tgt_ptr, img};
      return visit(h);
    }
    for (int v = 0; v < tgt.size; ++v) {
      std::vector<int> next = img;
      if (assign_and_propagate(src, tgt, next, gens[k], v))
        if (!run(next, k + 1)) return false;
    }
    return true;
  }
};

} // namespace

bool for_each_hom(ActPtr source, ActPtr target, const PinnedMap& pinned,
                  const std::function<bool(const ActHom&)>& visit) {
  if (!same_monoid(*source->monoid, *target->monoid))
    throw Error(ErrorKind::MixedMonoids, "hom search: acts live over different monoids");
  std::vector<int> img(source->size, -1);
  for (auto [a, v] : pinned) {
    if (a < 0 || a >= source->size || v < 0 || v >= target->size)
      throw Error(ErrorKind::Validation, "hom search: pinned entry out of range");
    if (!assign_and_propagate(*source, *target, img, a, v)) return true; // no homs
  }
  std::vector<int> gens = greedy_generators(*source);
  HomSearch search{*source, *target, gens, visit, source, target};
  return search.run(img, 0);
}

std::vector<ActHom> enumerate_homs(ActPtr source, ActPtr target, const PinnedMap& pinned) {
  std::vector<ActHom> out;
  for_each_hom(source, target, pinned, [&](const ActHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::optional<ActHom> first_hom(ActPtr source, ActPtr target, const PinnedMap& pinned) {
  std::optional<ActHom> found;
  for_each_hom(source, target, pinned, [&](const ActHom& h) {
    found = h;
    return false;
  });
  return found;
}

std::size_t count_homs(ActPtr source, ActPtr target, const PinnedMap& pinned) {
  std::size_t count = 0;
  for_each_hom(source, target, pinned, [&](const ActHom&) {
    ++count;
    return true;
  });
  return count;
}

ActHom compose(const ActHom& g, const ActHom& f) {
  if (f.target.get() != g.source.get() && !(f.target->size == g.source->size &&
                                            f.target->action == g.source->action &&
                                            same_monoid(*f.target->monoid, *g.source->monoid)))
    throw Error(ErrorKind::Validation, "compose: inner target does not match outer source");
  std::vector<int> map(f.source->size);
  for (int a = 0; a < f.source->size; ++a) map[a] = g.map[f.map[a]];
  return ActHom{f.source, g.target, std::move(map)};
}

std::vector<int> hom_image_members(const ActHom& h) {
  std::vector<int> image(h.map);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

bool is_bijective_hom(const ActHom& h) {
  if (h.source->size != h.target->size) return false;
  std::vector<char> hit(h.target->size, 0);
  for (int v : h.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::optional<ActHom> hom_inverse(const ActHom& h) {
  if (!is_bijective_hom(h)) return std::nullopt;
  std::vector<int> inv(h.target->size);
  for (int a = 0; a < h.source->size; ++a) inv[h.map[a]] = a;
  if (!is_hom_map(*h.target, *h.source, inv)) return std::nullopt; // cannot happen for finite acts
  return ActHom{h.target, h.source, std::move(inv)};
}

std::vector<int> canonical_act_form(const Act& a) {
  const int m = a.size;
  const int n = a.monoid->order;
  if (m > kCanonicalFormCap)
    throw Error(ErrorKind::CapExceeded,
                "canonical_act_form: act size " + std::to_string(m) + " exceeds cap " +
                    std::to_string(kCanonicalFormCap));
  std::vector<int> sigma(m); // old index -> new index
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best;
  std::vector<int> cand;
  cand.reserve(static_cast<size_t>(m) * (n - 1));
  do {
    cand.clear();
    // Row i of the relabeled table is row sigma^{-1}(i) of the original;
    // build directly by scattering, then compare.
    std::vector<int> inv(m);
    for (int i = 0; i < m; ++i) inv[sigma[i]] = i;
    for (int i = 0; i < m; ++i)
      for (int s = 0; s < n; ++s) {
        if (s == a.monoid->identity) continue;
        cand.push_back(sigma[a.at(inv[i], s)]);
      }
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

bool is_isomorphic(const Act& a, const Act& b) {
  if (!same_monoid(*a.monoid, *b.monoid))
    throw Error(ErrorKind::MixedMonoids, "is_isomorphic: acts live over different monoids");
  if (a.size != b.size) return false;
  return canonical_act_form(a) == canonical_act_form(b);
}

} // namespace acts

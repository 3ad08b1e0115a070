#include "rrb/hom.hpp"

#include <algorithm>

namespace rrb {

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> image) {
  const std::size_t n = source.order();
  if (image.size() != n) return false;
  for (Elem v : image) {
    if (v >= target.order()) return false;
  }
  if (image[0] != 0) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (image[source.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          target.mul(image[x], image[y])) {
        return false;
      }
    }
  }
  return true;
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> image) {
  if (!is_homomorphism(*source, *target, image)) {
    throw Error(ErrorCode::InvalidArgument, "map is not a group homomorphism");
  }
  return GroupHom{std::move(source), std::move(target), std::move(image)};
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> img(g->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Elem>(i);
  return GroupHom{g, g, std::move(img)};
}

GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target) {
  return GroupHom{source, target, std::vector<Elem>(source->order(), 0)};
}

Subgroup kernel(const GroupHom& f) {
  std::vector<Elem> k;
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    if (f.image[x] == 0) k.push_back(static_cast<Elem>(x));
  }
  return Subgroup(f.source, std::move(k));
}

Subgroup image_of(const GroupHom& f) { return Subgroup(f.target, f.image); }

bool is_bijective(std::span<const Elem> map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Elem v : map) {
    if (v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<Elem> compose(std::span<const Elem> outer, std::span<const Elem> inner) {
  std::vector<Elem> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

std::vector<Elem> invert_bijection(std::span<const Elem> map) {
  std::vector<Elem> out(map.size(), kNoElem);
  for (std::size_t i = 0; i < map.size(); ++i) out[map[i]] = static_cast<Elem>(i);
  return out;
}

namespace {

// Adds greedy generators to `gens` until they generate the whole group.
void complete_generating_set(const FiniteGroup& g, std::vector<Elem>& gens) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Elem> closure;
  auto reclose = [&] {
    std::fill(in.begin(), in.end(), false);
    closure.assign(1, 0);
    in[0] = true;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (Elem s : gens) {
        Elem y = g.mul(closure[i], s);
        if (!in[y]) {
          in[y] = true;
          closure.push_back(y);
        }
      }
    }
  };
  reclose();
  while (closure.size() < n) {
    Elem best = kNoElem;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      if (best == kNoElem || g.element_order(static_cast<Elem>(x)) > g.element_order(best)) {
        best = static_cast<Elem>(x);
      }
    }
    gens.push_back(best);
    reclose();
  }
}

class HomSearch {
 public:
  HomSearch(const FiniteGroup& src, const FiniteGroup& dst,
            std::span<const HomConstraint> fixed, bool injective, const HomVisitor& visit)
      : src_(src), dst_(dst), injective_(injective), visit_(visit),
        required_(src.order(), kNoElem) {
    for (const auto& c : fixed) {
      if (c.from >= src.order() || c.to >= dst.order()) {
        throw Error(ErrorCode::InvalidArgument, "constraint out of range");
      }
      if (required_[c.from] != kNoElem && required_[c.from] != c.to) {
        consistent_ = false;
      }
      required_[c.from] = c.to;
    }
    if (required_[0] != kNoElem && required_[0] != 0) consistent_ = false;
    if (injective_ && src.order() > dst.order()) consistent_ = false;

    // Constrained elements lead the generating set so that constraints prune
    // at the shallowest possible depth.
    std::vector<bool> in(src.order(), false);
    in[0] = true;
    std::vector<Elem> closure{0};
    for (const auto& c : fixed) {
      if (in[c.from]) continue;
      gens_.push_back(c.from);
      for (std::size_t i = 0; i < closure.size(); ++i) {
        for (Elem s : gens_) {
          Elem y = src.mul(closure[i], s);
          if (!in[y]) {
            in[y] = true;
            closure.push_back(y);
          }
        }
      }
    }
    complete_generating_set(src, gens_);
    images_.assign(gens_.size(), 0);
  }

  void run() {
    if (!consistent_) return;
    std::vector<Elem> map(src_.order(), kNoElem);
    map[0] = 0;
    if (gens_.empty()) {
      if (check_required(map)) visit_(map);
      return;
    }
    recurse(0);
  }

 private:
  bool check_required(std::span<const Elem> map) const {
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] != kNoElem && required_[x] != kNoElem && map[x] != required_[x]) {
        return false;
      }
    }
    return true;
  }

  // Extends generator images 0..depth over the subgroup they generate.
  bool extend(std::size_t depth, std::vector<Elem>& map) const {
    map.assign(src_.order(), kNoElem);
    std::vector<bool> used;
    if (injective_) {
      used.assign(dst_.order(), false);
      used[0] = true;
    }
    map[0] = 0;
    std::vector<Elem> list{0};
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Elem x = list[i];
      for (std::size_t j = 0; j <= depth; ++j) {
        const Elem y = src_.mul(x, gens_[j]);
        const Elem v = dst_.mul(map[x], images_[j]);
        if (map[y] == kNoElem) {
          if (injective_) {
            if (used[v]) return false;
            used[v] = true;
          }
          if (required_[y] != kNoElem && required_[y] != v) return false;
          map[y] = v;
          list.push_back(y);
        } else if (map[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool recurse(std::size_t depth) {
    const Elem s = gens_[depth];
    const std::size_t ord = src_.element_order(s);
    std::vector<Elem> map;
    auto try_image = [&](Elem t) -> bool {
      const std::size_t tord = dst_.element_order(t);
      if (injective_ ? tord != ord : ord % tord != 0) return true;
      images_[depth] = t;
      if (!extend(depth, map)) return true;
      if (depth + 1 == gens_.size()) return visit_(map);
      return recurse(depth + 1);
    };
    if (required_[s] != kNoElem) return try_image(required_[s]);
    for (std::size_t t = 0; t < dst_.order(); ++t) {
      if (!try_image(static_cast<Elem>(t))) return false;
    }
    return true;
  }

  const FiniteGroup& src_;
  const FiniteGroup& dst_;
  bool injective_;
  const HomVisitor& visit_;
  std::vector<Elem> required_;
  bool consistent_ = true;
  std::vector<Elem> gens_;
  std::vector<Elem> images_;
};

}  // namespace

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  complete_generating_set(g, gens);
  return gens;
}

void for_each_hom(const FiniteGroup& source, const FiniteGroup& target,
                  std::span<const HomConstraint> fixed, bool injective,
                  const HomVisitor& visit) {
  HomSearch search(source, target, fixed, injective, visit);
  search.run();
}

std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target) {
  std::vector<GroupHom> out;
  for_each_hom(*source, *target, {}, false, [&](std::span<const Elem> m) {
    out.push_back(GroupHom{source, target, {m.begin(), m.end()}});
    return true;
  });
  return out;
}

std::vector<GroupHom> automorphisms(const GroupPtr& g, const Limits& limits) {
  if (g->order() > limits.order_cap) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "automorphism search on order " + std::to_string(g->order()) +
                    " exceeds cap " + std::to_string(limits.order_cap));
  }
  std::vector<GroupHom> out;
  for_each_hom(*g, *g, {}, true, [&](std::span<const Elem> m) {
    if (!is_homomorphism(*g, *g, m)) {
      throw Error(ErrorCode::InvalidArgument, "automorphism search produced a non-homomorphism");
    }
    out.push_back(GroupHom{g, g, {m.begin(), m.end()}});
    return true;
  });
  return out;
}

bool isomorphism_invariants_match(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return false;
  std::vector<std::size_t> oa(a.order()), ob(b.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    oa[i] = a.element_order(static_cast<Elem>(i));
    ob[i] = b.element_order(static_cast<Elem>(i));
  }
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  auto center_size = [](const FiniteGroup& g) {
    std::size_t c = 0;
    for (std::size_t z = 0; z < g.order(); ++z) {
      bool central = true;
      for (std::size_t x = 0; x < g.order() && central; ++x) {
        central = g.mul(static_cast<Elem>(z), static_cast<Elem>(x)) ==
                  g.mul(static_cast<Elem>(x), static_cast<Elem>(z));
      }
      c += central;
    }
    return c;
  };
  return center_size(a) == center_size(b);
}

std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (!isomorphism_invariants_match(*a, *b)) return std::nullopt;
  std::optional<GroupHom> found;
  for_each_hom(*a, *b, {}, true, [&](std::span<const Elem> m) {
    found = GroupHom{a, b, {m.begin(), m.end()}};
    return false;
  });
  return found;
}

}  // namespace rrb

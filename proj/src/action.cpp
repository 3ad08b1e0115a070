#include "rrb/action.hpp"

#include <string>

namespace rrb {

namespace {

std::vector<Elem> flatten(const std::vector<Permutation>& perms, std::size_t ng,
                          std::size_t nh) {
  if (perms.size() != ng) {
    throw Error(ErrorCode::InvalidAction,
                "action has " + std::to_string(perms.size()) + " permutations, expected " +
                    std::to_string(ng));
  }
  std::vector<Elem> flat;
  flat.reserve(ng * nh);
  for (std::size_t g = 0; g < ng; ++g) {
    if (perms[g].size() != nh) {
      throw Error(ErrorCode::InvalidAction,
                  "permutation for g=" + std::to_string(g) + " has wrong length");
    }
    flat.insert(flat.end(), perms[g].begin(), perms[g].end());
  }
  return flat;
}

}  // namespace

ActionTable::ActionTable(Trusted, GroupPtr g, GroupPtr h, std::vector<Elem> flat)
    : g_(std::move(g)), h_(std::move(h)), nh_(h_->order()), flat_(std::move(flat)) {}

ActionTable::ActionTable(GroupPtr g, GroupPtr h, std::vector<Permutation> perms)
    : g_(std::move(g)), h_(std::move(h)), nh_(h_->order()) {
  const std::size_t ng = g_->order();
  flat_ = flatten(perms, ng, nh_);
  for (std::size_t gi = 0; gi < ng; ++gi) {
    auto p = perm(static_cast<Elem>(gi));
    if (!is_bijective(p, nh_)) {
      throw Error(ErrorCode::InvalidAction,
                  "φ(" + std::to_string(gi) + ") is not a bijection of H");
    }
    if (!is_homomorphism(*h_, *h_, p)) {
      throw Error(ErrorCode::InvalidAction,
                  "φ(" + std::to_string(gi) + ") is not an automorphism of H");
    }
  }
  for (std::size_t x = 0; x < nh_; ++x) {
    if (flat_[x] != x) throw Error(ErrorCode::InvalidAction, "φ(identity) is not the identity");
  }
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < ng; ++b) {
      const Elem ab = g_->mul(static_cast<Elem>(a), static_cast<Elem>(b));
      for (std::size_t x = 0; x < nh_; ++x) {
        if (apply(ab, static_cast<Elem>(x)) !=
            apply(static_cast<Elem>(a), apply(static_cast<Elem>(b), static_cast<Elem>(x)))) {
          throw Error(ErrorCode::InvalidAction,
                      "φ is not a homomorphism at g1=" + std::to_string(a) +
                          ", g2=" + std::to_string(b));
        }
      }
    }
  }
}

ActionTable ActionTable::trivial(GroupPtr g, GroupPtr h) {
  const std::size_t ng = g->order(), nh = h->order();
  std::vector<Elem> flat(ng * nh);
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t x = 0; x < nh; ++x) flat[a * nh + x] = static_cast<Elem>(x);
  }
  return ActionTable(Trusted{}, std::move(g), std::move(h), std::move(flat));
}

ActionTable ActionTable::adjoint(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      flat[a * n + x] = g->conj(static_cast<Elem>(a), static_cast<Elem>(x));
    }
  }
  return ActionTable(Trusted{}, g, g, std::move(flat));
}

ActionTable ActionTable::from_aut_hom(GroupPtr g, GroupPtr h, std::span<const Elem> hom,
                                      const std::vector<Permutation>& auts) {
  std::vector<Permutation> perms;
  perms.reserve(hom.size());
  for (Elem a : hom) perms.push_back(auts.at(a));
  return ActionTable(std::move(g), std::move(h), std::move(perms));
}

std::vector<Permutation> ActionTable::perms() const {
  std::vector<Permutation> out;
  out.reserve(g_->order());
  for (std::size_t a = 0; a < g_->order(); ++a) {
    auto p = perm(static_cast<Elem>(a));
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

bool ActionTable::acts_trivially(Elem g) const noexcept {
  auto p = perm(g);
  for (std::size_t x = 0; x < nh_; ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

bool ActionTable::is_trivial() const noexcept {
  for (std::size_t a = 0; a < g_->order(); ++a) {
    if (!acts_trivially(static_cast<Elem>(a))) return false;
  }
  return true;
}

Subgroup ActionTable::kernel() const {
  std::vector<Elem> k;
  for (std::size_t a = 0; a < g_->order(); ++a) {
    if (acts_trivially(static_cast<Elem>(a))) k.push_back(static_cast<Elem>(a));
  }
  return Subgroup(g_, std::move(k));
}

Subgroup ActionTable::fixed_points() const {
  std::vector<Elem> f;
  for (std::size_t x = 0; x < nh_; ++x) {
    bool fixed = true;
    for (std::size_t a = 0; a < g_->order() && fixed; ++a) {
      fixed = apply(static_cast<Elem>(a), static_cast<Elem>(x)) == x;
    }
    if (fixed) f.push_back(static_cast<Elem>(x));
  }
  return Subgroup(h_, std::move(f));
}

Elem ActionTable::apply_inverse(Elem g, Elem y) const noexcept {
  return apply(g_->inv(g), y);
}

SemidirectProduct semidirect_product(const ActionTable& phi, const Limits& limits) {
  const auto& g = phi.g_group();
  const auto& h = phi.h_group();
  const std::size_t ng = g->order(), nh = h->order(), n = ng * nh;
  if (n > limits.order_cap) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "semidirect product of order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.order_cap));
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem g1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem g2 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
      const Elem gg = g->mul(g1, g2);
      const Elem hh = h->mul(h1, phi.apply(g1, h2));
      table[x * n + y] = static_cast<Elem>(static_cast<std::size_t>(gg) * nh + hh);
    }
  }
  std::string label;
  if (!g->label().empty() && !h->label().empty()) label = g->label() + "⋉" + h->label();
  SemidirectProduct sdp;
  sdp.group = FiniteGroup::from_trusted_table(n, std::move(table), std::move(label));
  sdp.g = g;
  sdp.h = h;
  std::vector<Elem> eg(ng), eh(nh), pg(n);
  for (std::size_t a = 0; a < ng; ++a) eg[a] = static_cast<Elem>(a * nh);
  for (std::size_t x = 0; x < nh; ++x) eh[x] = static_cast<Elem>(x);
  for (std::size_t x = 0; x < n; ++x) pg[x] = static_cast<Elem>(x / nh);
  sdp.embed_g = GroupHom{g, sdp.group, std::move(eg)};
  sdp.embed_h = GroupHom{h, sdp.group, std::move(eh)};
  sdp.project_g = GroupHom{sdp.group, g, std::move(pg)};
  sdp.c_map.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem back = sdp.embed_g(g->inv(sdp.project_g(static_cast<Elem>(x))));
    sdp.c_map[x] = sdp.group->mul(static_cast<Elem>(x), back);
  }
  return sdp;
}

}  // namespace rrb

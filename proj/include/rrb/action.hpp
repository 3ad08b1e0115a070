#pragma once

#include <span>
#include <vector>

#include "rrb/group.hpp"
#include "rrb/hom.hpp"

namespace rrb {

/// A homomorphism G -> Aut(H), stored as one permutation of H per element
/// of G. Composition follows function composition: perm(g1 g2) = perm(g1) ∘
/// perm(g2).
class ActionTable {
 public:
  /// Validates every invariant; throws InvalidAction naming the first
  /// failure.
  ActionTable(GroupPtr g, GroupPtr h, std::vector<Permutation> perms);

  static ActionTable trivial(GroupPtr g, GroupPtr h);
  /// g acts on itself by x -> g x g^-1.
  static ActionTable adjoint(const GroupPtr& g);
  /// Builds φ from a homomorphism G -> Aut(H), where `auts[i]` is the
  /// automorphism with index i in the target group of `hom`.
  static ActionTable from_aut_hom(GroupPtr g, GroupPtr h, std::span<const Elem> hom,
                                  const std::vector<Permutation>& auts);

  const GroupPtr& g_group() const noexcept { return g_; }
  const GroupPtr& h_group() const noexcept { return h_; }

  Elem apply(Elem g, Elem x) const noexcept {
    return flat_[static_cast<std::size_t>(g) * nh_ + x];
  }
  std::span<const Elem> perm(Elem g) const noexcept {
    return {flat_.data() + static_cast<std::size_t>(g) * nh_, nh_};
  }
  std::vector<Permutation> perms() const;

  bool acts_trivially(Elem g) const noexcept;
  bool is_trivial() const noexcept;
  /// Ker φ as a subgroup of G.
  Subgroup kernel() const;
  /// Fix(φ) = {x : φ_g(x) = x for all g}, a subgroup of H.
  Subgroup fixed_points() const;
  /// x with φ_g(x) = y
  Elem apply_inverse(Elem g, Elem y) const noexcept;

 private:
  struct Trusted {};
  ActionTable(Trusted, GroupPtr g, GroupPtr h, std::vector<Elem> flat);

  GroupPtr g_;
  GroupPtr h_;
  std::size_t nh_ = 0;
  std::vector<Elem> flat_;
};

/// G ⋉_φ H on pairs (g, h) numbered g*|H| + h, with
/// (g1, h1)(g2, h2) = (g1 g2, h1 φ_{g1}(h2)).
struct SemidirectProduct {
  GroupPtr group;
  GroupPtr g;
  GroupPtr h;
  GroupHom embed_g;
  GroupHom embed_h;
  GroupHom project_g;
  /// x -> x · embed_g(project_g(x)^-1); lands in embed_h(H).
  std::vector<Elem> c_map;

  Elem pair(Elem gi, Elem hi) const noexcept {
    return static_cast<Elem>(static_cast<std::size_t>(gi) * h->order() + hi);
  }
  Elem g_part(Elem x) const noexcept { return static_cast<Elem>(x / h->order()); }
  Elem h_part(Elem x) const noexcept { return static_cast<Elem>(x % h->order()); }
};

SemidirectProduct semidirect_product(const ActionTable& phi, const Limits& limits = {});

}  // namespace rrb

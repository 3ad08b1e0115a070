#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rrb/action.hpp"
#include "rrb/group.hpp"
#include "rrb/hom.hpp"

namespace rrb {

/// Relative Rota-Baxter group (H, G, φ, R): R : H -> G with
///   R(h1) R(h2) = R(h1 φ_{R(h1)}(h2))   for all h1, h2.
class RelRB {
 public:
  /// Exhaustive O(|H|^2) check; throws NotRotaBaxter(h1, h2) on the first
  /// violating pair in row-major order.
  RelRB(ActionTable action, std::vector<Elem> r);

  const ActionTable& action() const noexcept { return action_; }
  const GroupPtr& h_group() const noexcept { return action_.h_group(); }
  const GroupPtr& g_group() const noexcept { return action_.g_group(); }
  const std::vector<Elem>& r() const noexcept { return r_; }
  Elem operator()(Elem h) const noexcept { return r_[h]; }

  /// h1 ∘_R h2 = h1 φ_{R(h1)}(h2)
  Elem circ(Elem h1, Elem h2) const noexcept {
    return h_group()->mul(h1, action_.apply(r_[h1], h2));
  }
  bool is_bijective() const noexcept;

 private:
  ActionTable action_;
  std::vector<Elem> r_;
};

/// First pair (h1, h2) where the operator identity fails, if any.
std::optional<std::pair<Elem, Elem>> find_rrb_violation(const ActionTable& action,
                                                        std::span<const Elem> r);
RelRB validate_rrb(ActionTable action, std::vector<Elem> r);

/// (H, ∘_R) together with R as a homomorphism into G.
struct DescendentGroup {
  GroupPtr group;
  GroupHom r_hom;
};
DescendentGroup descendent_group(const RelRB& rrb);

/// {(R(h), h)} inside G ⋉_φ H. Also checks that h -> (R(h), h) is an
/// isomorphism from the descendent group onto it.
Subgroup graph_subgroup(const RelRB& rrb, const SemidirectProduct& sdp);
Subgroup graph_subgroup(const RelRB& rrb);

/// I(H, G, φ, R) = (H, Im R, φ|, R|), with Im R packaged as its own group.
struct Restriction {
  RelRB rrb;
  SubgroupGroup image;
};
Restriction restrict_to_image(const RelRB& rrb);

/// (ψ, η) with η R = S ψ and ψ φ_g = ϕ_{η(g)} ψ for all g.
bool is_rrb_morphism(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                     std::span<const Elem> eta);

/// Relative Rota-Baxter subgroup (K, L, φ|, R|): φ_ℓ(K) ⊆ K for ℓ in L and
/// R(K) ⊆ L.
struct RRBSub {
  Subgroup k;
  Subgroup l;
};
bool is_rrb_sub(const RelRB& rrb, const Subgroup& k, const Subgroup& l);
RRBSub make_rrb_sub(const RelRB& rrb, Subgroup k, Subgroup l);

/// Throws NotAMorphism unless (ψ, η) is a morphism src -> dst.
RRBSub morphism_kernel(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                       std::span<const Elem> eta);
RRBSub morphism_image(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                      std::span<const Elem> eta);

/// Ideal conditions: (K, L) is a relative Rota-Baxter subgroup, K ⊴ H,
/// L ⊴ G, φ_g(K) ⊆ K for all g, and φ_ℓ(h) h^-1 ∈ K for all h, ℓ ∈ L.
bool is_ideal(const RelRB& rrb, const Subgroup& k, const Subgroup& l);

/// (H/K, G/L, φ̄, R̄); well-definedness is checked on every representative.
struct RRBQuotient {
  RelRB rrb;
  Quotient h;
  Quotient g;
};
RRBQuotient quotient_rrb(const RelRB& rrb, const RRBSub& ideal);

/// A relative Rota-Baxter subgroup repackaged with K and L as groups.
struct RRBSubStructure {
  RelRB rrb;
  SubgroupGroup k;
  SubgroupGroup l;
};
RRBSubStructure sub_structure(const RelRB& rrb, const RRBSub& sub);

/// Ker(φ∘R), read off the descendent group where φ∘R is a homomorphism.
std::vector<Elem> ker_phi_r(const RelRB& rrb);
/// Z^φ_R(H) = Z(H) ∩ Ker(φ∘R) ∩ Fix(φ).
Subgroup center_part(const RelRB& rrb);
/// (Z^φ_R(H), Ker φ); asserted to be an ideal.
RRBSub center_rrb(const RelRB& rrb);

/// H^(2) = <φ_g(h) h^-1>.
Subgroup h2_subgroup(const RelRB& rrb);
/// H^φ = <[H,H], H^(2)>.
Subgroup h_phi_subgroup(const RelRB& rrb);
/// (H^φ, G); asserted to be an ideal.
RRBSub commutator_rrb(const RelRB& rrb);
/// H^{R,φ} = <φ_{R(h1)}(h2) h2^-1>.
Subgroup h_r_phi_subgroup(const RelRB& rrb);

}  // namespace rrb

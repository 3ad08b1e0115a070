#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rrb/action.hpp"
#include "rrb/group.hpp"
#include "rrb/relrb.hpp"

namespace rrb {

using Triple = std::array<Elem, 3>;

/// Skew left brace (H, ·, ∘) on the index set 0..n-1 with shared identity 0:
///   a ∘ (b · c) = (a ∘ b) · a^-1 · (a ∘ c),  a^-1 taken in (H, ·).
struct SkewBrace {
  GroupPtr dot;
  GroupPtr circ;

  std::size_t order() const noexcept { return dot->order(); }
  /// λ_a(b) = a^-1 · (a ∘ b)
  Elem lambda(Elem a, Elem b) const noexcept { return dot->mul(dot->inv(a), circ->mul(a, b)); }
};

/// First triple (a, b, c) in row-major order at which the brace law fails.
std::optional<Triple> find_brace_violation(const FiniteGroup& dot, const FiniteGroup& circ);
/// Throws NotABrace(a, b, c) on the first violating triple, InvalidArgument
/// when the two groups do not share the carrier.
SkewBrace validate_brace(GroupPtr dot, GroupPtr circ);

/// λ : (H, ∘) -> Aut(H, ·), validated as an action.
ActionTable lambda_map(const SkewBrace& b);

/// (H, ·, ∘_R); λ of the result equals a -> φ_{R(a)}.
SkewBrace induced_brace(const RelRB& rrb);
/// (H^(·), H^(∘), λ, Id).
RelRB induced_rrb(const SkewBrace& b);

bool is_trivial_brace(const SkewBrace& b);
/// Im R ⊆ Ker φ
bool triviality_criterion(const RelRB& rrb);

/// Triple at which (H, ∘, ·) fails the brace law, if any.
std::optional<Triple> biskew_violation(const SkewBrace& b);
bool is_biskew(const SkewBrace& b);

/// A map on pairs stored as r(a, b) = (f_a(b), g_b(a)).
struct YBEMap {
  std::size_t n = 0;
  std::vector<Elem> first;
  std::vector<Elem> second;

  std::pair<Elem, Elem> operator()(Elem a, Elem b) const noexcept {
    const std::size_t i = static_cast<std::size_t>(a) * n + b;
    return {first[i], second[i]};
  }
};

/// r(a, b) = (λ_a(b), λ^-1_{λ_a(b)}((a∘b)^-1 a (a∘b))) with the inverse and
/// products of the second coordinate in (H, ·). Throws YBEViolation unless
/// the result is a non-degenerate solution.
YBEMap ybe_map(const SkewBrace& b);

/// Braid form r12 r23 r12 = r23 r12 r23 on every triple.
std::optional<Triple> find_ybe_violation(const YBEMap& m);
bool verify_ybe(const YBEMap& m);
/// R12 R13 R23 = R23 R13 R12 for R = τ r, with τ the flip.
bool verify_qybe(const YBEMap& m);
bool verify_nondegenerate(const YBEMap& m);
bool is_involutive(const YBEMap& m);

/// Ann = Ker λ ∩ Z(H, ·) ∩ Fix λ, asserted equal to the set of elements
/// commuting under both operations with everything, on which both agree.
Subgroup annihilator(const SkewBrace& b);

/// Normal in (H, ·), normal in (H, ∘) and λ-invariant.
bool is_brace_ideal(const SkewBrace& b, const Subgroup& i);
/// Smallest ideal containing `seed`.
Subgroup brace_ideal_closure(const SkewBrace& b, std::span<const Elem> seed);
/// Ideal generated by a^-1 · (a ∘ b) · b^-1.
Subgroup brace_h2(const SkewBrace& b);
/// H' = <[H, H]_·, H^(2)>, asserted to be an ideal.
Subgroup brace_commutator(const SkewBrace& b);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<Elem> projection;
  std::vector<Elem> representatives;
};
/// Throws NotAnIdeal unless `i` is an ideal.
BraceQuotient brace_quotient(const SkewBrace& b, const Subgroup& i);

struct SubBrace {
  SkewBrace brace;
  std::vector<Elem> to_parent;
  std::vector<Elem> from_parent;
};
/// Throws InvalidArgument unless `s` is closed under both operations.
SubBrace sub_brace(const SkewBrace& b, const Subgroup& s);

bool is_brace_hom(const SkewBrace& src, const SkewBrace& dst, std::span<const Elem> psi);
std::optional<std::vector<Elem>> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b);
/// Every brace isomorphism a -> b, in canonical search order.
std::vector<std::vector<Elem>> brace_isomorphisms(const SkewBrace& a, const SkewBrace& b);

/// ξ1 : H/Ann(H) -> K/Ann(K) and ξ2 : H' -> K' on the index sets of
/// brace_quotient(annihilator) and sub_brace(brace_commutator).
struct BraceIsoclinism {
  std::vector<Elem> xi1;
  std::vector<Elem> xi2;
};

/// Where a brace isoclinism check fails.
struct BraceIsoclinismFailure {
  std::string what;
  Elem a = kNoElem;
  Elem b = kNoElem;
};

/// θ(ā, b̄) = a b a^-1 b^-1 and θ*(ā, b̄) = a^-1 (a ∘ b) b^-1, both in H'.
std::optional<BraceIsoclinismFailure> check_brace_isoclinism(const SkewBrace& a,
                                                             const SkewBrace& b,
                                                             const BraceIsoclinism& w);
/// Throws SearchSpaceTooLarge when either carrier exceeds the isoclinism cap.
std::optional<BraceIsoclinism> braces_isoclinic(const SkewBrace& a, const SkewBrace& b,
                                                const Limits& limits = {});

}  // namespace rrb

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rrb/group.hpp"

namespace rrb {

/// A total map between two finite groups satisfying the homomorphism law.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> image;

  Elem operator()(Elem x) const noexcept { return image[x]; }
};

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> image);

/// Throws InvalidArgument unless `image` is a homomorphism.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> image);
GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target);

Subgroup kernel(const GroupHom& f);
Subgroup image_of(const GroupHom& f);
bool is_bijective(std::span<const Elem> map, std::size_t target_size);

/// outer ∘ inner, as index arrays.
std::vector<Elem> compose(std::span<const Elem> outer, std::span<const Elem> inner);
std::vector<Elem> invert_bijection(std::span<const Elem> map);

/// Greedy generating set: repeatedly adjoin the element of largest order
/// (smallest index on ties) not yet in the generated subgroup.
std::vector<Elem> generating_set(const FiniteGroup& g);

struct HomConstraint {
  Elem from;
  Elem to;
};

/// Receives each homomorphism as an image array; return false to stop.
using HomVisitor = std::function<bool(std::span<const Elem>)>;

/// Backtracking search over images of a generating set. Constrained domain
/// elements are placed first among the generators; each partial assignment
/// is extended over the generated subgroup and checked on the Cayley graph,
/// which certifies the homomorphism law. Visits maps in a fixed canonical
/// order. With `injective` the maps visited are embeddings.
void for_each_hom(const FiniteGroup& source, const FiniteGroup& target,
                  std::span<const HomConstraint> fixed, bool injective,
                  const HomVisitor& visit);

std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target);
std::vector<GroupHom> automorphisms(const GroupPtr& g, const Limits& limits = {});

/// Cheap invariants compared before any isomorphism search: order,
/// abelianness, element-order multiset, center size.
bool isomorphism_invariants_match(const FiniteGroup& a, const FiniteGroup& b);
std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b);

}  // namespace rrb

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrb/error.hpp"

namespace rrb {

/// Elements of a finite group are dense indices 0..n-1; index 0 is always
/// the identity.
using Elem = std::uint32_t;
inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

using Permutation = std::vector<Elem>;

/// Search and construction caps. Every search in the library takes these
/// explicitly so that runs are reproducible from the caps alone.
struct Limits {
  std::size_t order_cap = 20000;
  std::size_t subgroup_cap = 2048;
  std::uint64_t brute_force_cap = 10'000'000;
  std::size_t isoclinism_cap = 12;
  unsigned jobs = 1;
};

/// How a group was ingested from permutations; kept so that the group can be
/// written back in the form it was read.
struct PermutationPresentation {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as its full multiplication table. Immutable once
/// built; shared between structures through GroupPtr.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }

  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  Elem power(Elem a, std::size_t k) const noexcept;

  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::vector<std::vector<Elem>> table_rows() const;
  bool is_abelian() const noexcept { return abelian_; }

  const std::string& label() const noexcept { return label_; }
  const std::optional<PermutationPresentation>& presentation() const noexcept {
    return presentation_;
  }

  /// Wraps a table produced by a construction that is a group by
  /// construction (products, quotients, closures). Associativity is not
  /// rescanned; shape, identity at 0 and inverses are checked.
  static GroupPtr from_trusted_table(std::size_t n, std::vector<Elem> table,
                                     std::string label = {});

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  bool abelian_ = true;
  std::string label_;
  std::optional<PermutationPresentation> presentation_;

  friend GroupPtr group_from_table(const std::vector<std::vector<Elem>>&,
                                   std::string);
  friend GroupPtr group_from_permutations(std::size_t,
                                          const std::vector<Permutation>&,
                                          std::string, std::size_t);
};

/// Validates a Cayley table: Latin square, two-sided identity (relocated to
/// index 0 by swapping labels when needed) and exhaustive associativity.
GroupPtr group_from_table(const std::vector<std::vector<Elem>>& table,
                          std::string label = {});

/// Closes the generators under composition. Products follow the
/// left-to-right convention: (p*q)(x) = q(p(x)). Elements are numbered in
/// order of discovery by right multiplication, identity first.
GroupPtr group_from_permutations(std::size_t degree,
                                 const std::vector<Permutation>& generators,
                                 std::string label = {},
                                 std::size_t order_cap = Limits{}.order_cap);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        std::string label = {});

/// A subgroup as a sorted element set of its parent group.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == mask_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<bool> mask_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seed);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
bool is_subset(const Subgroup& a, const Subgroup& b);

/// Every subgroup exactly once, ordered by (size, sorted elements). Grows
/// the lattice from the cyclic subgroups by adjoining one element at a time
/// until no new subgroup appears.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits = {});

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
bool is_normal(const Subgroup& k);
bool is_normal_in(const Subgroup& k, const Subgroup& ambient);

/// G/N with cosets numbered by their minimal element (identity coset 0).
struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;       // element of G -> coset index
  std::vector<Elem> representatives;  // coset index -> minimal element
};
Quotient quotient(const GroupPtr& g, const Subgroup& n);

/// A subgroup repackaged as a group in its own right; new indices follow the
/// sorted element order so the identity stays at 0.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;
  std::vector<Elem> from_parent;  // kNoElem outside the subgroup
};
SubgroupGroup subgroup_as_group(const Subgroup& k, std::string label = {});

}  // namespace rrb

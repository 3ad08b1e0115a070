#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rrb/action.hpp"
#include "rrb/relrb.hpp"

namespace rrb {

using OperatorArray = std::vector<Elem>;

enum class SStrategy {
  /// Filter every subgroup of G ⋉_φ H; bounded by the subgroup cap.
  Subgroups,
  /// Grow graphs directly, one partner g_h at a time; never builds G ⋉_φ H.
  Backtrack,
};

/// Members of S(H, G, φ): subgroups of G ⋉_φ H of order |H| on which the
/// C-map is a bijection onto H. Sorted by element list.
struct SSet {
  SemidirectProduct sdp;
  std::vector<Subgroup> members;
};
SSet s_set(const ActionTable& phi, SStrategy strategy, const Limits& limits = {});

/// All operators H -> G for φ, found by the graph backtracking search,
/// sorted lexicographically. The first branching level is split across
/// `limits.jobs` workers.
std::vector<OperatorArray> rbo_backtrack(const ActionTable& phi, const Limits& limits = {});

/// The operator whose graph is M. Throws NotInS unless M has order |H| and
/// C restricted to M is a bijection onto H.
RelRB rbo_from_subgroup(const ActionTable& phi, const SemidirectProduct& sdp,
                        const Subgroup& m);

/// Every map H -> G checked directly against the operator identity.
/// Throws SearchSpaceTooLarge when |G|^|H| exceeds the brute-force cap.
std::vector<OperatorArray> brute_force_rbo(const ActionTable& phi, const Limits& limits = {});

/// Every homomorphism G -> Aut(H); the trivial action comes first.
std::vector<ActionTable> enumerate_actions(const GroupPtr& g, const GroupPtr& h,
                                           const Limits& limits = {});

enum class EquivalenceRule {
  /// ψ(A(h))^-1 B(ψ(h)) ∈ Z(G) for all h.
  ModCenter,
  /// ψ A = B ψ; coincides with ModCenter when Z(G) is trivial.
  Strict,
};

struct EquivalenceClasses {
  /// Indices into the operator list; each class sorted, classes ordered by
  /// their lexicographically least operator.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> representatives;
};

/// Partition of Rota-Baxter operators on G (adjoint action) under the
/// action of Aut(G).
EquivalenceClasses rb_equivalence_classes(const GroupPtr& g,
                                          const std::vector<OperatorArray>& operators,
                                          EquivalenceRule rule = EquivalenceRule::ModCenter,
                                          const Limits& limits = {});

struct EnumerationReport {
  std::string h_label;
  std::string g_label;
  std::size_t action_index = 0;
  /// Set when φ was given as the adjoint action rather than by index; the
  /// report then carries "action": "adjoint" instead of an index.
  bool adjoint = false;
  std::size_t operator_count = 0;
  std::optional<std::size_t> class_count;
  std::vector<OperatorArray> operators;
  double elapsed_seconds = 0.0;
  SStrategy strategy = SStrategy::Backtrack;
};

struct EnumerateOptions {
  SStrategy strategy = SStrategy::Backtrack;
  /// Requires H = G with the adjoint action.
  bool classes = false;
  EquivalenceRule rule = EquivalenceRule::ModCenter;
  std::size_t action_index = 0;
};

EnumerationReport enumerate_rbo(const ActionTable& phi, const EnumerateOptions& options = {},
                                const Limits& limits = {});

/// Ids of the centerless groups of order 96 with shipped generator files.
const std::vector<int>& census96_ids();
/// |RBO| expected for SmallGroup(96, id) under the adjoint action.
std::size_t census96_expected(int id);
std::filesystem::path census96_group_file(const std::filesystem::path& data_dir, int id);

/// Throws ExtendedModeRequired unless `extended` is set.
EnumerationReport census_order96(int id, bool extended, const std::filesystem::path& data_dir,
                                 const Limits& limits = {});

}  // namespace rrb

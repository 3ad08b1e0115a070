#pragma once

// Small structures shared by several test files.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rrb/action.hpp"
#include "rrb/catalog.hpp"
#include "rrb/enumerate.hpp"
#include "rrb/relrb.hpp"

namespace fixture {

using rrb::Elem;
using rrb::GroupPtr;

/// S3 with G = HL, H = <(0 1 2)>, L = <(0 1)>, adjoint action and
/// R(hl) = l^-1. Elements are identified through their table behaviour:
/// a and b below generate, a of order 3, b of order 2.
struct S3Factorization {
  GroupPtr s3;
  rrb::RelRB rrb;
  std::vector<Elem> h_part;  // the order-3 subgroup
  std::vector<Elem> l_part;  // {e, b}
};

inline S3Factorization s3_factorization() {
  GroupPtr s3 = rrb::catalog_group("S3");
  Elem a = rrb::kNoElem, b = rrb::kNoElem;
  for (std::size_t x = 1; x < s3->order(); ++x) {
    if (s3->element_order(Elem(x)) == 3 && a == rrb::kNoElem) a = Elem(x);
    if (s3->element_order(Elem(x)) == 2 && b == rrb::kNoElem) b = Elem(x);
  }
  const std::vector<Elem> h{0, a, s3->mul(a, a)};
  const std::vector<Elem> l{0, b};
  std::vector<Elem> r(s3->order(), rrb::kNoElem);
  for (Elem hx : h) {
    for (Elem lx : l) r[s3->mul(hx, lx)] = s3->inv(lx);
  }
  std::vector<Elem> hs = h, ls = l;
  std::sort(hs.begin(), hs.end());
  return {s3, rrb::RelRB(rrb::ActionTable::adjoint(s3), r), hs, ls};
}

inline rrb::RelRB trivial_operator(const GroupPtr& h, const GroupPtr& g) {
  return rrb::RelRB(rrb::ActionTable::trivial(g, h), std::vector<Elem>(h->order(), 0));
}

inline rrb::RelRB identity_operator(const GroupPtr& g) {
  std::vector<Elem> r(g->order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Elem(i);
  return rrb::RelRB(rrb::ActionTable::trivial(g, g), r);
}

/// Z2 acting on Z3 by inversion.
inline rrb::ActionTable inversion_z2_on_z3() {
  GroupPtr z2 = rrb::cyclic_group(2), z3 = rrb::cyclic_group(3);
  std::vector<rrb::Permutation> perms{{0, 1, 2}, {0, z3->inv(1), z3->inv(2)}};
  return rrb::ActionTable(z2, z3, perms);
}

/// Groups of the oracle family of the first acceptance criterion.
inline std::vector<std::string> small_family() {
  return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "V4"};
}

/// Seeded random valid operators on carriers of order at most 8: pick a
/// random pair of groups and a random action, enumerate, pick one.
inline std::vector<rrb::RelRB> random_operators(std::size_t count, std::uint32_t seed) {
  const auto& names = rrb::groups_up_to_order_8();
  std::mt19937 rng(seed);
  std::vector<rrb::RelRB> out;
  while (out.size() < count) {
    GroupPtr h = rrb::catalog_group(names[rng() % names.size()]);
    GroupPtr g = rrb::catalog_group(names[rng() % names.size()]);
    auto actions = rrb::enumerate_actions(g, h);
    const auto& phi = actions[rng() % actions.size()];
    auto ops = rrb::rbo_backtrack(phi);
    out.emplace_back(phi, ops[rng() % ops.size()]);
  }
  return out;
}

}  // namespace fixture

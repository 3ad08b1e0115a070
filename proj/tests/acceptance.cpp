// One line per acceptance criterion. Exit status is nonzero when any
// criterion that ran failed. Criterion 7 runs only with --extended.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rrb/brace.hpp"
#include "rrb/enumerate.hpp"
#include "rrb/io.hpp"
#include "rrb/isoclinism.hpp"

using namespace rrb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct FamilyOperator {
  ActionTable phi;
  OperatorArray r;
};

// Operators of criterion 1, shared by criteria 3 and 5.
std::vector<FamilyOperator> family_operators;
// Braces of criterion 2, shared by criterion 3.
std::vector<SkewBrace> small_braces;

std::set<OperatorArray> as_set(const std::vector<OperatorArray>& v) { return {v.begin(), v.end()}; }

Outcome oracle_equivalence() {
  std::size_t pairs = 0, actions = 0, mismatches = 0, operators = 0;
  for (const auto& hn : fixture::small_family()) {
    for (const auto& gn : fixture::small_family()) {
      const auto h = catalog_group(hn), g = catalog_group(gn);
      ++pairs;
      const auto acts = enumerate_actions(g, h);
      if (acts.size() != oracle::action_count(*g, *h)) ++mismatches;
      for (const auto& phi : acts) {
        ++actions;
        const auto ops = enumerate_rbo(phi).operators;
        const auto brute = as_set(brute_force_rbo(phi));
        if (as_set(ops) != brute || brute != as_set(oracle::rbo(phi))) ++mismatches;
        for (const auto& r : ops) family_operators.push_back({phi, r});
        operators += ops.size();
      }
    }
  }
  return {mismatches == 0, std::to_string(pairs) + " pairs, " + std::to_string(actions) +
                               " actions, " + std::to_string(operators) + " operators, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome brace_soundness() {
  const auto& names = groups_up_to_order_8();
  std::set<std::pair<std::vector<std::vector<Elem>>, std::vector<std::vector<Elem>>>> seen;
  std::size_t operators = 0, violations = 0;
  for (const auto& hn : names) {
    const auto h = catalog_group(hn);
    for (const auto& gn : names) {
      const auto g = catalog_group(gn);
      for (const auto& phi : enumerate_actions(g, h)) {
        for (const auto& r : rbo_backtrack(phi)) {
          ++operators;
          const auto b = induced_brace(RelRB(phi, r));
          if (!seen.insert({b.dot->table_rows(), b.circ->table_rows()}).second) continue;
          small_braces.push_back(b);
        }
      }
    }
  }
  for (const auto& b : small_braces) {
    if (find_brace_violation(*b.dot, *b.circ)) {
      ++violations;
      continue;
    }
    try {
      const auto m = ybe_map(b);
      if (!verify_ybe(m) || !verify_nondegenerate(m)) ++violations;
    } catch (const Error&) {
      ++violations;
    }
  }
  return {violations == 0, std::to_string(operators) + " operators, " +
                               std::to_string(small_braces.size()) + " distinct braces, " +
                               std::to_string(violations) + " violations"};
}

Outcome category_round_trip() {
  std::size_t bijective = 0, failures = 0;
  for (const auto& op : family_operators) {
    const RelRB rrb(op.phi, op.r);
    if (!rrb.is_bijective()) continue;
    ++bijective;
    const auto back = induced_rrb(induced_brace(rrb));
    std::vector<Elem> id(rrb.h_group()->order());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = Elem(i);
    if (!is_rrb_morphism(back, rrb, id, rrb.r()) || !is_bijective(rrb.r(), rrb.g_group()->order())) {
      ++failures;
    }
  }
  if (small_braces.empty()) brace_soundness();
  for (const auto& b : small_braces) {
    const auto again = induced_brace(induced_rrb(b));
    if (again.dot->table_rows() != b.dot->table_rows() ||
        again.circ->table_rows() != b.circ->table_rows()) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(bijective) + " bijective operators, " +
                             std::to_string(small_braces.size()) + " braces, " +
                             std::to_string(failures) + " failures"};
}

Outcome z5_example() {
  const auto z5 = cyclic_group(5);
  const auto phi = ActionTable::trivial(z5, z5);
  const auto s = s_set(phi, SStrategy::Subgroups);
  const Subgroup m = subgroup_generated(s.sdp.group, std::vector<Elem>{s.sdp.pair(1, 1)});
  std::vector<Elem> n_elems;
  for (Elem h = 0; h < 5; ++h) n_elems.push_back(s.sdp.pair(0, h));
  const Subgroup n(s.sdp.group, n_elems);
  const bool has_m = std::find(s.members.begin(), s.members.end(), m) != s.members.end();
  const bool has_n = std::find(s.members.begin(), s.members.end(), n) != s.members.end();
  if (!has_m || !has_n) return {false, "s_set misses M or N"};
  const auto rm = rbo_from_subgroup(phi, s.sdp, m);
  const auto rn = rbo_from_subgroup(phi, s.sdp, n);
  const bool r_ok = rm.r() == OperatorArray{0, 1, 2, 3, 4} && rn.r() == OperatorArray(5, 0);
  const bool iso = find_isomorphism(subgroup_as_group(m).group, subgroup_as_group(n).group).has_value();
  const std::size_t im = restrict_to_image(rm).image.group->order();
  const std::size_t in = restrict_to_image(rn).image.group->order();
  const bool ok = r_ok && iso && im == 5 && in == 1 && enumerate_rbo(phi).operator_count == 5;
  return {ok, "M and N in s_set, M ~ N, images of order " + std::to_string(im) + " and " +
                  std::to_string(in)};
}

Outcome triviality() {
  std::size_t mismatches = 0;
  for (const auto& op : family_operators) {
    const RelRB rrb(op.phi, op.r);
    if (is_trivial_brace(induced_brace(rrb)) != triviality_criterion(rrb)) ++mismatches;
  }
  return {mismatches == 0 && !family_operators.empty(),
          std::to_string(family_operators.size()) + " operators, " + std::to_string(mismatches) +
              " mismatches"};
}

Outcome isoclinism_bridge() {
  std::size_t witnesses = 0, bridge_failures = 0, oracle_mismatches = 0, pairs = 0;
  const auto check = [&](const RelRB& a, const RelRB& b) {
    const auto w = rrb_isoclinic(a, b);
    if (w) {
      ++witnesses;
      if (check_isoclinism(a, b, *w) || !check_bridge_theorem(a, b, *w).ok) ++bridge_failures;
    }
    return w.has_value();
  };
  // Trivial action over the trivial group: RRB isoclinism is group isoclinism.
  const auto& names = groups_up_to_order_8();
  const auto z1 = cyclic_group(1);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      ++pairs;
      const auto a = catalog_group(names[i]), b = catalog_group(names[j]);
      const bool found = check(fixture::trivial_operator(a, z1), fixture::trivial_operator(b, z1));
      if (found != oracle::group_isoclinic(*a, *b)) ++oracle_mismatches;
    }
  }
  // Trivial action with G = Z2: the operators are the homomorphisms H -> Z2.
  const auto z2 = cyclic_group(2);
  std::vector<RelRB> family;
  for (const auto& name : names) {
    const auto h = catalog_group(name);
    for (const auto& r : rbo_backtrack(ActionTable::trivial(z2, h))) {
      family.emplace_back(ActionTable::trivial(z2, h), r);
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      ++pairs;
      check(family[i], family[j]);
    }
  }
  const bool d4q8 = check(fixture::trivial_operator(catalog_group("D4"), z1),
                          fixture::trivial_operator(catalog_group("Q8"), z1));
  const bool ok = bridge_failures == 0 && oracle_mismatches == 0 && d4q8;
  return {ok, std::to_string(pairs) + " pairs, " + std::to_string(witnesses) + " witnesses, " +
                  std::to_string(bridge_failures) + " bridge failures, " +
                  std::to_string(oracle_mismatches) + " oracle mismatches"};
}

Outcome census() {
  std::string detail;
  bool ok = true;
  for (int id : census96_ids()) {
    const auto rep = census_order96(id, true, RRB_DATA_DIR);
    const bool match = rep.operator_count == census96_expected(id);
    ok = ok && match;
    detail += std::to_string(id) + ":" + std::to_string(rep.operator_count) + "/" +
              std::to_string(census96_expected(id)) + " ";
    std::fflush(stdout);
  }
  return {ok, detail};
}

Outcome omega_well_defined() {
  std::size_t violations = 0;
  const auto ops = fixture::random_operators(50, 20240607);
  for (const auto& r : ops) violations += omega_violations(r);
  return {violations == 0,
          std::to_string(ops.size()) + " operators, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--extended] [--only N]\n");
      return 64;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"brace and YBE soundness", brace_soundness},
      {"category round trip", category_round_trip},
      {"Z5 example", z5_example},
      {"triviality criterion", triviality},
      {"isoclinism bridge", isoclinism_bridge},
      {"order 96 census", census},
      {"omega well-defined", omega_well_defined},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = int(i) + 1;
    if (only != 0 && only != n) continue;
    const auto& [name, run] = criteria[i];
    if (n == 7 && !extended) {
      std::printf("criterion %d [%s]: SKIPPED (needs --extended)\n", n, name.c_str());
      continue;
    }
    // Criteria 3 and 5 reuse the operators of criterion 1.
    if ((n == 3 || n == 5) && family_operators.empty()) oracle_equivalence();
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d [%s]: %s (%s; %.1fs)\n", n, name.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

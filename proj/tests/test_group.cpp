#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "rrb/action.hpp"
#include "rrb/catalog.hpp"
#include "rrb/error.hpp"
#include "rrb/group.hpp"
#include "rrb/hom.hpp"

using namespace rrb;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t x = 0; x < g.order(); ++x) ++h[g.element_order(Elem(x))];
  return h;
}

std::vector<std::vector<Elem>> elements_of(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : subs) out.push_back(s.elements());
  return out;
}

}  // namespace

TEST_CASE("table ingestion") {
  auto trivial = group_from_table({{0}});
  CHECK(trivial->order() == 1);

  auto z2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->inv(1) == 1);

  // Identity at index 1 is moved to 0.
  auto moved = group_from_table({{1, 0}, {0, 1}});
  CHECK(moved->mul(0, 1) == 1);
  CHECK(moved->mul(1, 1) == 0);

  CHECK(code_of([] { group_from_table({{0, 1}, {1, 1}}); }) == ErrorCode::NotLatinSquare);
  CHECK(code_of([] { group_from_table({{1, 0}, {1, 0}}); }) == ErrorCode::NotLatinSquare);
  CHECK(group_from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}})->order() == 3);
  // Latin square with no identity element.
  CHECK(code_of([] { group_from_table({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}); }) ==
        ErrorCode::NoIdentity);
  // Loop of order 5 with every element an involution: not a group.
  const std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { group_from_table(loop); }) == ErrorCode::NotAssociative);
}

TEST_CASE("Latin-preserving mutations of the S3 table") {
  // Swapping the symbols of an intercalate away from row and column 0 keeps
  // a Latin square with identity; rejection must then come from the
  // associativity scan, and must agree with a direct triple scan.
  const auto rows0 = catalog_group("S3")->table_rows();
  const std::size_t n = rows0.size();
  int rejected = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t l = i + 1; l < n; ++l) {
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          if (rows0[i][j] != rows0[l][k] || rows0[i][k] != rows0[l][j]) continue;
          auto rows = rows0;
          std::swap(rows[i][j], rows[i][k]);
          std::swap(rows[l][j], rows[l][k]);
          bool assoc = true;
          for (std::size_t a = 0; a < n && assoc; ++a) {
            for (std::size_t b = 0; b < n && assoc; ++b) {
              for (std::size_t c = 0; c < n && assoc; ++c) {
                assoc = rows[rows[a][b]][c] == rows[a][rows[b][c]];
              }
            }
          }
          if (assoc) {
            CHECK(group_from_table(rows)->order() == n);
          } else {
            CHECK(code_of([&] { group_from_table(rows); }) == ErrorCode::NotAssociative);
            ++rejected;
          }
        }
      }
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("permutation ingestion") {
  auto s3 = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  auto z4 = group_from_permutations(4, {{1, 2, 3, 0}});
  CHECK(z4->order() == 4);
  CHECK(z4->is_abelian());
  CHECK(group_from_permutations(2, {})->order() == 1);
  CHECK(code_of([] { group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}}, "", 5); }) ==
        ErrorCode::OrderLimitExceeded);
  CHECK(code_of([] { group_from_permutations(3, {{1, 1, 0}}); }) == ErrorCode::MalformedInput);
}

TEST_CASE("catalog groups have the expected shape") {
  const std::map<std::string, std::map<std::size_t, std::size_t>> expected{
      {"Z4", {{1, 1}, {2, 1}, {4, 2}}},
      {"V4", {{1, 1}, {2, 3}}},
      {"S3", {{1, 1}, {2, 3}, {3, 2}}},
      {"D4", {{1, 1}, {2, 5}, {4, 2}}},
      {"Q8", {{1, 1}, {2, 1}, {4, 6}}},
      {"Z2xZ4", {{1, 1}, {2, 3}, {4, 4}}},
      {"Z2^3", {{1, 1}, {2, 7}}},
      {"A4", {{1, 1}, {2, 3}, {3, 8}}},
      {"D6", {{1, 1}, {2, 7}, {3, 2}, {6, 2}}},
  };
  for (const auto& [name, hist] : expected) {
    CAPTURE(name);
    CHECK(order_histogram(*catalog_group(name)) == hist);
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    auto z = cyclic_group(n);
    CHECK(z->order() == n);
    CHECK(z->is_abelian());
    CHECK(order_histogram(*z).rbegin()->first == n);
  }
  CHECK(catalog_group("Q8")->is_abelian() == false);
  CHECK(center(catalog_group("Q8")).size() == 2);
  CHECK(code_of([] { catalog_group("nope"); }) == ErrorCode::InvalidArgument);
  const auto& small = groups_up_to_order_8();
  CHECK(small.size() == 14);
  // Pairwise non-isomorphic, by the brute-force oracle.
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      CHECK_FALSE(oracle::isomorphic(*catalog_group(small[i]), *catalog_group(small[j])));
    }
  }
}

TEST_CASE("type invariants hold for every catalog group") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    const std::size_t n = g->order();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(g->mul(0, Elem(i)) == i);
      CHECK(g->mul(Elem(i), 0) == i);
      CHECK(g->mul(Elem(i), g->inv(Elem(i))) == 0);
      std::vector<bool> row(n), col(n);
      for (std::size_t j = 0; j < n; ++j) {
        row[g->mul(Elem(i), Elem(j))] = true;
        col[g->mul(Elem(j), Elem(i))] = true;
      }
      CHECK(std::count(row.begin(), row.end(), true) == long(n));
      CHECK(std::count(col.begin(), col.end(), true) == long(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (g->mul(g->mul(Elem(i), Elem(j)), Elem(k)) !=
              g->mul(Elem(i), g->mul(Elem(j), Elem(k)))) {
            FAIL("associativity");
          }
        }
      }
    }
  }
}

TEST_CASE("subgroup lattice agrees with closed-subset enumeration") {
  CHECK(all_subgroups(cyclic_group(4)).size() == 3);
  CHECK(all_subgroups(cyclic_group(1)).size() == 1);
  const auto s3 = all_subgroups(catalog_group("S3"));
  REQUIRE(s3.size() == 6);
  std::map<std::size_t, int> by_size;
  for (const auto& s : s3) ++by_size[s.size()];
  CHECK(by_size == std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});

  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 12) continue;
    CAPTURE(name);
    CHECK(elements_of(all_subgroups(g)) == oracle::subgroups(*g));
  }
  Limits tight;
  tight.subgroup_cap = 3;
  CHECK(code_of([&] { all_subgroups(catalog_group("S3"), tight); }) ==
        ErrorCode::OrderLimitExceeded);
}

TEST_CASE("generated subgroups") {
  const auto s3 = catalog_group("S3");
  CHECK(subgroup_generated(s3, {}).elements() == std::vector<Elem>{0});
  for (std::size_t x = 0; x < s3->order(); ++x) {
    const Elem e = Elem(x);
    CHECK(subgroup_generated(s3, std::vector<Elem>{e}).size() == s3->element_order(e));
  }
  std::vector<Elem> all(s3->order());
  std::iota(all.begin(), all.end(), Elem{0});
  CHECK(subgroup_generated(s3, all).is_whole());

  // Property: closure matches the oracle on seeded random seeds.
  std::mt19937 rng(7);
  for (const auto& name : {"D4", "Q8", "A4", "D6", "Z2xZ4"}) {
    const auto g = catalog_group(name);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> seed;
      for (int k = 0; k < 2; ++k) seed.push_back(Elem(rng() % g->order()));
      CHECK(subgroup_generated(g, seed).elements() == oracle::closure(*g, seed));
    }
  }
}

TEST_CASE("center, derived subgroup, normality, quotients") {
  const auto s3 = catalog_group("S3");
  CHECK(center(s3).is_trivial());
  CHECK(derived_subgroup(s3).size() == 3);
  const auto z6 = cyclic_group(6);
  CHECK(center(z6).is_whole());
  CHECK(derived_subgroup(z6).is_trivial());

  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    CAPTURE(name);
    CHECK(center(g).elements() == oracle::center(*g));
    CHECK(derived_subgroup(g).elements() == oracle::derived(*g));
    for (const auto& n : all_subgroups(g)) {
      bool normal = true;
      for (std::size_t x = 0; x < g->order() && normal; ++x) {
        for (Elem k : n.elements()) normal = normal && n.contains(g->conj(Elem(x), k));
      }
      CHECK(is_normal(n) == normal);
      if (!normal) {
        CHECK(code_of([&] { quotient(g, n); }) == ErrorCode::NotNormal);
        continue;
      }
      const auto q = quotient(g, n);
      CHECK(q.group->order() * n.size() == g->order());
      CHECK(oracle::is_hom(*g, *q.group, q.projection));
      const auto k = kernel(make_hom(g, q.group, q.projection));
      CHECK(k == n);
      CHECK(q.representatives[0] == 0);
      CHECK(std::is_sorted(q.representatives.begin(), q.representatives.end()));
    }
  }
  const auto z4 = cyclic_group(4);
  const auto half = all_subgroups(z4)[1];
  CHECK(oracle::isomorphic(*quotient(z4, half).group, *cyclic_group(2)));
}

TEST_CASE("semidirect products") {
  const auto z2 = cyclic_group(2);
  const auto z5 = cyclic_group(5);
  const auto triv = semidirect_product(ActionTable::trivial(z2, z2));
  CHECK(triv.group->order() == 4);
  CHECK(oracle::isomorphic(*triv.group, *catalog_group("V4")));
  CHECK(find_isomorphism(triv.group, direct_product(z2, z2)).has_value());

  ActionTable inv(z2, cyclic_group(3), {{0, 1, 2}, {0, 2, 1}});
  const auto s = semidirect_product(inv);
  CHECK(s.group->order() == 6);
  CHECK(center(s.group).is_trivial());

  const auto z5z5 = semidirect_product(ActionTable::trivial(z5, z5));
  for (Elem g = 0; g < 5; ++g) {
    for (Elem h = 0; h < 5; ++h) CHECK(z5z5.c_map[z5z5.pair(g, h)] == z5z5.pair(0, h));
  }

  // Invariants on a non-abelian example.
  const auto d4 = catalog_group("D4");
  const auto s3 = catalog_group("S3");
  for (const auto& sdp : {s, semidirect_product(ActionTable::adjoint(s3)),
                          semidirect_product(ActionTable::adjoint(d4))}) {
    const auto& G = *sdp.g;
    const auto& H = *sdp.h;
    for (std::size_t g = 0; g < G.order(); ++g) {
      CHECK(sdp.project_g(sdp.embed_g(Elem(g))) == g);
      CHECK(sdp.c_map[sdp.embed_g(Elem(g))] == 0);
    }
    for (std::size_t h = 0; h < H.order(); ++h) {
      CHECK(sdp.c_map[sdp.embed_h(Elem(h))] == sdp.embed_h(Elem(h)));
    }
    CHECK(is_normal(image_of(sdp.embed_h)));
  }
}

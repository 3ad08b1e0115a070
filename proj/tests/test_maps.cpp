#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rrb/catalog.hpp"
#include "rrb/hom.hpp"

using namespace rrb;

TEST_CASE("homomorphism predicate") {
  const auto z4 = cyclic_group(4);
  std::vector<Elem> id{0, 1, 2, 3};
  CHECK(is_homomorphism(*z4, *z4, id));
  CHECK(is_homomorphism(*z4, *z4, std::vector<Elem>{0, 0, 0, 0}));
  // Generator 1 has order 4; [0,1,3,2] sends 1 -> 1 but 1*1 = 2 -> 3.
  const std::vector<Elem> bad{0, 1, 3, 2};
  CHECK(z4->mul(1, 1) == 2);
  CHECK_FALSE(is_homomorphism(*z4, *z4, bad));
  CHECK(is_homomorphism(*z4, *z4, bad) == oracle::is_hom(*z4, *z4, bad));
  CHECK_THROWS_AS(make_hom(z4, z4, bad), Error);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic_group(2)).size() == 1);
  CHECK(automorphisms(catalog_group("S3")).size() == 6);

  // Aut(Z5) against every one of the 5^5 maps.
  const auto z5 = cyclic_group(5);
  std::size_t bijective_homs = 0;
  std::vector<Elem> f(5, 0);
  for (std::size_t code = 0; code < 3125; ++code) {
    std::size_t c = code;
    for (auto& v : f) {
      v = Elem(c % 5);
      c /= 5;
    }
    if (is_bijective(f, 5) && oracle::is_hom(*z5, *z5, f)) ++bijective_homs;
  }
  CHECK(bijective_homs == 4);
  CHECK(automorphisms(z5).size() == 4);

  for (const auto& name : groups_up_to_order_8()) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    CHECK(automorphisms(g).size() == oracle::automorphism_count(*g));
  }
}

TEST_CASE("automorphisms form a group under composition") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    CAPTURE(name);
    const auto auts = automorphisms(g);
    std::set<std::vector<Elem>> set;
    for (const auto& a : auts) {
      CHECK(is_homomorphism(*g, *g, a.image));
      CHECK(is_bijective(a.image, g->order()));
      set.insert(a.image);
    }
    CHECK(set.size() == auts.size());
    CHECK(auts.front().image == identity_hom(g).image);
    for (const auto& a : auts) {
      CHECK(set.count(invert_bijection(a.image)) == 1);
      for (const auto& b : auts) {
        if (!set.count(compose(a.image, b.image))) FAIL("not closed");
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(find_isomorphism(cyclic_group(4), catalog_group("V4")).has_value());
  const auto d4 = catalog_group("D4");
  auto self = find_isomorphism(d4, d4);
  REQUIRE(self.has_value());
  CHECK(self->image == identity_hom(d4).image);

  // S3 from permutations against S3 as Z3 ⋊ Z2 given by a table.
  const auto perm_s3 = catalog_group("S3");
  const auto table_s3 = group_from_table({{0, 1, 2, 3, 4, 5},
                                          {1, 2, 0, 4, 5, 3},
                                          {2, 0, 1, 5, 3, 4},
                                          {3, 5, 4, 0, 2, 1},
                                          {4, 3, 5, 1, 0, 2},
                                          {5, 4, 3, 2, 1, 0}});
  auto iso = find_isomorphism(perm_s3, table_s3);
  REQUIRE(iso.has_value());
  CHECK(is_homomorphism(*perm_s3, *table_s3, iso->image));
  CHECK(is_bijective(iso->image, 6));

  const auto& names = groups_up_to_order_8();
  std::vector<GroupPtr> groups;
  for (const auto& n : names) groups.push_back(catalog_group(n));
  groups.push_back(table_s3);
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(3)));
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      if (a->order() != b->order()) continue;
      const auto found = find_isomorphism(a, b);
      CHECK(found.has_value() == oracle::isomorphic(*a, *b));
      if (found) {
        CHECK(is_homomorphism(*a, *b, found->image));
        CHECK(is_bijective(found->image, b->order()));
      }
    }
  }
}

TEST_CASE("homomorphism enumeration matches exhaustive maps") {
  const std::vector<std::string> names{"Z1", "Z2", "Z3", "Z4", "V4", "S3", "Z6"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      CAPTURE(a);
      CAPTURE(b);
      const auto ga = catalog_group(a), gb = catalog_group(b);
      const auto homs = homomorphisms(ga, gb);
      CHECK(homs.size() == oracle::hom_count(*ga, *gb));
      std::set<std::vector<Elem>> distinct;
      for (const auto& h : homs) distinct.insert(h.image);
      CHECK(distinct.size() == homs.size());
    }
  }
}

TEST_CASE("constrained and injective hom search") {
  const auto z6 = cyclic_group(6);
  const auto s3 = catalog_group("S3");
  std::size_t injective = 0;
  for_each_hom(*s3, *s3, {}, true, [&](std::span<const Elem> f) {
    CHECK(is_bijective(f, 6));
    ++injective;
    return true;
  });
  CHECK(injective == 6);

  // Fix the image of a generator of Z6: exactly one hom.
  const Elem gen = generating_set(*z6).front();
  CHECK(z6->element_order(gen) == 6);
  std::size_t count = 0;
  const HomConstraint c{gen, gen};
  for_each_hom(*z6, *z6, std::span(&c, 1), false, [&](std::span<const Elem> f) {
    CHECK(f[gen] == gen);
    ++count;
    return true;
  });
  CHECK(count == 1);

  // Early stop.
  count = 0;
  for_each_hom(*z6, *z6, {}, false, [&](std::span<const Elem>) {
    ++count;
    return false;
  });
  CHECK(count == 1);
}

TEST_CASE("kernels, images and generating sets") {
  const auto z6 = cyclic_group(6), z3 = cyclic_group(3);
  for (const auto& h : homomorphisms(z6, z3)) {
    CHECK(kernel(h).size() * image_of(h).size() == 6);
  }
  CHECK(kernel(trivial_hom(z6, z3)).is_whole());
  CHECK(image_of(identity_hom(z6)).is_whole());
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    const auto gens = generating_set(*g);
    CHECK(subgroup_generated(g, gens).is_whole());
    for (std::size_t i = 1; i < gens.size(); ++i) {
      CHECK(g->element_order(gens[i - 1]) >= g->element_order(gens[i]));
    }
  }
  const std::vector<Elem> p{2, 0, 1};
  CHECK(compose(p, invert_bijection(p)) == std::vector<Elem>{0, 1, 2});
  CHECK_FALSE(isomorphism_invariants_match(*catalog_group("D4"), *catalog_group("Q8")));
  CHECK(isomorphism_invariants_match(*catalog_group("D4"), *catalog_group("D4")));
}

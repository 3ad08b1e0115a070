#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rrb/brace.hpp"
#include "rrb/relrb.hpp"

using namespace rrb;

namespace {

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Elem(i);
  return v;
}

}  // namespace

TEST_CASE("operator validation") {
  const auto z2 = cyclic_group(2);
  const auto s3 = catalog_group("S3");
  // Constant identity is an operator for any action.
  CHECK_NOTHROW(RelRB(ActionTable::adjoint(s3), std::vector<Elem>(6, 0)));
  CHECK_NOTHROW(RelRB(fixture::inversion_z2_on_z3(), std::vector<Elem>(3, 0)));
  // R(b) = a on Z2 = <b> into Z2 = <a>, trivial action.
  CHECK_NOTHROW(RelRB(ActionTable::trivial(z2, z2), {0, 1}));
  // The swap map sends the identity to a non-identity element.
  try {
    RelRB(ActionTable::trivial(z2, z2), {1, 0});
    FAIL("accepted a non-operator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRotaBaxter);
  }
  CHECK_FALSE(find_rrb_violation(ActionTable::trivial(z2, z2), std::vector<Elem>{0, 1}));
  const auto v = find_rrb_violation(ActionTable::trivial(z2, z2), std::vector<Elem>{1, 0});
  REQUIRE(v.has_value());
  CHECK(v->first == 0);
  CHECK(v->second == 0);
  CHECK_THROWS_AS(RelRB(ActionTable::trivial(z2, z2), {0}), Error);
  CHECK_THROWS_AS(RelRB(ActionTable::trivial(z2, z2), {0, 2}), Error);

  // Trivial action: operators are exactly the homomorphisms.
  for (const auto& [hn, gn] : {std::pair{"Z4", "Z2"}, {"V4", "Z2"}, {"S3", "Z2"}, {"Z3", "S3"}}) {
    const auto h = catalog_group(hn), g = catalog_group(gn);
    CHECK(oracle::rbo(ActionTable::trivial(g, h)).size() == oracle::hom_count(*h, *g));
  }
}

TEST_CASE("the S3 factorization example") {
  const auto ex = fixture::s3_factorization();
  const auto& r = ex.rrb;
  // Exhaustive pair check independent of the constructor.
  const auto& s3 = *ex.s3;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      CHECK(s3.mul(r(Elem(a)), r(Elem(b))) ==
            r(s3.mul(Elem(a), s3.conj(r(Elem(a)), Elem(b)))));
    }
  }
  const auto d = descendent_group(r);
  CHECK(d.group->order() == 6);
  CHECK(oracle::is_hom(*d.group, s3, d.r_hom.image));
  const auto img = restrict_to_image(r);
  CHECK(img.image.group->order() == 2);
  CHECK(img.image.to_parent == ex.l_part);

  const auto c = center_rrb(r);
  CHECK(c.k.is_trivial());
  CHECK(c.l.is_trivial());
  const auto q = quotient_rrb(r, c);
  CHECK(q.rrb.h_group()->order() == 6);
  CHECK(q.rrb.g_group()->order() == 6);

  // Adjoint action: H^(2) = [S3, S3] and H^φ is the order-3 subgroup.
  CHECK(h2_subgroup(r).elements() == ex.h_part);
  CHECK(h_phi_subgroup(r).elements() == ex.h_part);
  CHECK(commutator_rrb(r).l.is_whole());
}

TEST_CASE("descendent group, graph and restriction on the Z5 pair") {
  const auto z5 = cyclic_group(5);
  const auto id = fixture::identity_operator(z5);
  const auto zero = fixture::trivial_operator(z5, z5);

  const auto d = descendent_group(id);
  CHECK(d.group->table_rows() == z5->table_rows());
  CHECK(is_bijective(d.r_hom.image, 5));

  const auto sdp = semidirect_product(id.action());
  std::vector<Elem> diag, vertical;
  for (Elem h = 0; h < 5; ++h) {
    diag.push_back(sdp.pair(h, h));
    vertical.push_back(sdp.pair(0, h));
  }
  std::sort(diag.begin(), diag.end());
  CHECK(graph_subgroup(id, sdp).elements() == diag);
  CHECK(graph_subgroup(zero, sdp).elements() == vertical);
  CHECK(subgroup_generated(sdp.group, std::vector<Elem>{sdp.pair(1, 1)}).elements() == diag);

  CHECK(restrict_to_image(zero).image.group->order() == 1);
  const auto full = restrict_to_image(id);
  CHECK(full.image.group->order() == 5);
  CHECK(full.rrb.r() == id.r());

  const auto z2 = cyclic_group(2);
  CHECK(graph_subgroup(fixture::trivial_operator(z2, z2)).elements() == std::vector<Elem>{0, 1});
}

TEST_CASE("morphisms") {
  const auto z5 = cyclic_group(5);
  const auto id = fixture::identity_operator(z5);
  const auto zero = fixture::trivial_operator(z5, z5);
  const auto one = identity_map(5);
  const std::vector<Elem> zeros(5, 0);
  CHECK(is_rrb_morphism(id, id, one, one));
  CHECK(is_rrb_morphism(zero, zero, zeros, zeros));
  CHECK_FALSE(is_rrb_morphism(id, zero, one, one));
  CHECK_THROWS_AS(morphism_kernel(id, zero, one, one), Error);

  const auto k = morphism_kernel(id, id, one, one);
  CHECK(k.k.is_trivial());
  CHECK(k.l.is_trivial());
  const auto im = morphism_image(id, id, one, one);
  CHECK(im.k.is_whole());
  CHECK(im.l.is_whole());
  const auto k0 = morphism_kernel(zero, zero, zeros, zeros);
  CHECK(k0.k.is_whole());
  CHECK(morphism_image(zero, zero, zeros, zeros).k.is_trivial());

  const auto ex = fixture::s3_factorization();
  const auto six = identity_map(6);
  CHECK(is_rrb_morphism(ex.rrb, ex.rrb, six, six));
}

TEST_CASE("ideals and quotients") {
  const auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  // R : Z4 -> Z2 reduction mod 2, trivial action.
  std::vector<Elem> r(4);
  for (Elem h = 0; h < 4; ++h) r[h] = Elem(z4->element_order(h) == 4 ? 1 : 0);
  const RelRB rrb(ActionTable::trivial(z2, z4), r);
  const Subgroup k(z4, {0, 2});
  const Subgroup l = trivial_subgroup(z2);
  REQUIRE(is_ideal(rrb, k, l));
  const auto q = quotient_rrb(rrb, make_rrb_sub(rrb, k, l));
  CHECK(q.rrb.h_group()->order() == 2);
  CHECK(q.rrb.g_group()->order() == 2);
  // The projection pair is a morphism whose kernel is (K, L).
  CHECK(is_rrb_morphism(rrb, q.rrb, q.h.projection, q.g.projection));
  const auto ker = morphism_kernel(rrb, q.rrb, q.h.projection, q.g.projection);
  CHECK(ker.k == k);
  CHECK(ker.l == l);

  // Whole and trivial ideals.
  CHECK(is_ideal(rrb, whole_group(z4), whole_group(z2)));
  const auto all = quotient_rrb(rrb, make_rrb_sub(rrb, whole_group(z4), whole_group(z2)));
  CHECK(all.rrb.h_group()->order() == 1);
  const auto none = quotient_rrb(rrb, make_rrb_sub(rrb, trivial_subgroup(z4), l));
  CHECK(none.rrb.r() == rrb.r());

  // Not an ideal: R(K) ⊄ L fails the sub-structure test first.
  CHECK_FALSE(is_rrb_sub(rrb, whole_group(z4), l));
  CHECK_THROWS_AS(make_rrb_sub(rrb, whole_group(z4), l), Error);

  // A non-normal K in S3 with trivial operator and trivial action.
  const auto s3 = catalog_group("S3");
  const auto triv = fixture::trivial_operator(s3, z2);
  const auto order2 = all_subgroups(s3)[1];
  CHECK_FALSE(is_ideal(triv, order2, trivial_subgroup(z2)));
  try {
    quotient_rrb(triv, make_rrb_sub(triv, order2, trivial_subgroup(z2)));
    FAIL("quotient by a non-ideal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnIdeal);
  }
}

TEST_CASE("center and commutator parts") {
  const auto z6 = cyclic_group(6), s3 = catalog_group("S3"), z2 = cyclic_group(2);
  const auto abelian = fixture::trivial_operator(z6, z2);
  CHECK(center_rrb(abelian).k.is_whole());
  CHECK(center_rrb(abelian).l.is_whole());
  const auto nonab = fixture::trivial_operator(s3, z2);
  CHECK(center_rrb(nonab).k.is_trivial());
  CHECK(center_rrb(nonab).l.is_whole());

  // Trivial action: H^(2) = {e}, H^φ = [H, H], H^{R,φ} = {e}.
  CHECK(h2_subgroup(nonab).is_trivial());
  CHECK(h_phi_subgroup(nonab) == derived_subgroup(s3));
  CHECK(h_r_phi_subgroup(nonab).is_trivial());

  // Z2 inverting Z3, R trivial.
  const RelRB inv(fixture::inversion_z2_on_z3(), {0, 0, 0});
  CHECK(h2_subgroup(inv).is_whole());
  CHECK(h_r_phi_subgroup(inv).is_trivial());
}

TEST_CASE("properties over seeded random operators") {
  for (const auto& r : fixture::random_operators(40, 2024)) {
    const auto& H = r.h_group();
    const auto& G = r.g_group();
    CAPTURE(H->label());
    CAPTURE(G->label());
    CAPTURE(r.r());
    const auto d = descendent_group(r);
    CHECK(oracle::is_hom(*d.group, *G, r.r()));

    const auto sdp = semidirect_product(r.action());
    const auto gr = graph_subgroup(r, sdp);
    CHECK(gr.size() == H->order());
    for (std::size_t h = 0; h < H->order(); ++h) CHECK(gr.contains(sdp.pair(r(Elem(h)), Elem(h))));

    const auto c = center_rrb(r);
    CHECK(is_ideal(r, c.k, c.l));
    CHECK(is_trivial_brace(induced_brace(sub_structure(r, c).rrb)));

    // Z^φ_R is the intersection of its three defining sets.
    const auto kpr = ker_phi_r(r);
    const auto fix = r.action().fixed_points();
    const auto z = center(H);
    std::vector<Elem> expected;
    for (std::size_t h = 0; h < H->order(); ++h) {
      const Elem e = Elem(h);
      if (z.contains(e) && fix.contains(e) &&
          std::binary_search(kpr.begin(), kpr.end(), e)) {
        expected.push_back(e);
      }
    }
    CHECK(center_part(r).elements() == expected);

    // Dividing out (H^φ, G) leaves a trivial action.
    const auto comm = commutator_rrb(r);
    CHECK(is_ideal(r, comm.k, comm.l));
    CHECK(quotient_rrb(r, comm).rrb.action().is_trivial());
    CHECK(is_subset(h2_subgroup(r), comm.k));
    CHECK(is_subset(h_r_phi_subgroup(r), h2_subgroup(r)));
  }
}

#include "rrb/isoclinism.hpp"

#include <algorithm>
#include <numeric>

namespace rrb {

namespace {

// Tabulates ω and ω^φ on the cosets of `z` from representatives, then
// counts pairs of H whose values disagree with the table.
std::size_t tabulate_omega(const RelRB& rrb, const Quotient& q,
                           const std::vector<Elem>& hphi_from_parent, OmegaMaps& out) {
  const auto& h = *rrb.h_group();
  const auto& act = rrb.action();
  const std::size_t m = q.representatives.size();
  auto omega = [&](Elem x, Elem y) { return hphi_from_parent[h.commutator(x, y)]; };
  auto omega_phi = [&](Elem x, Elem y) {
    return hphi_from_parent[h.mul(act.apply(rrb(x), y), h.inv(y))];
  };
  out.cosets = m;
  out.omega.resize(m * m);
  out.omega_phi.resize(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      out.omega[x * m + y] = omega(q.representatives[x], q.representatives[y]);
      out.omega_phi[x * m + y] = omega_phi(q.representatives[x], q.representatives[y]);
    }
  }
  std::size_t bad = 0;
  for (std::size_t x = 0; x < h.order(); ++x) {
    for (std::size_t y = 0; y < h.order(); ++y) {
      const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      const std::size_t i = q.projection[x] * m + q.projection[y];
      if (omega(ex, ey) != out.omega[i] || omega_phi(ex, ey) != out.omega_phi[i]) ++bad;
    }
  }
  return bad;
}

std::vector<Elem> iota_array(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

bool identical(const RelRB& a, const RelRB& b) {
  auto same = [](const FiniteGroup& x, const FiniteGroup& y) {
    if (x.order() != y.order()) return false;
    for (std::size_t i = 0; i < x.order(); ++i) {
      auto rx = x.row(static_cast<Elem>(i));
      auto ry = y.row(static_cast<Elem>(i));
      if (!std::equal(rx.begin(), rx.end(), ry.begin())) return false;
    }
    return true;
  };
  return same(*a.h_group(), *b.h_group()) && same(*a.g_group(), *b.g_group()) &&
         a.action().perms() == b.action().perms() && a.r() == b.r();
}

std::vector<Elem> quotient_image_group(const RelRB& rrb, GroupPtr& out) {
  // Im R / (Im R ∩ Ker φ) as a group; returns nothing useful besides `out`.
  Subgroup im(rrb.g_group(), rrb.r());
  Subgroup ker = rrb.action().kernel();
  SubgroupGroup img = subgroup_as_group(im);
  std::vector<Elem> inter;
  const Subgroup meet = intersection(im, ker);
  for (Elem g : meet.elements()) inter.push_back(img.from_parent[g]);
  Quotient q = quotient(img.group, Subgroup(img.group, inter));
  out = q.group;
  return q.projection;
}

}  // namespace

std::size_t omega_violations(const RelRB& rrb) {
  Quotient q = quotient(rrb.h_group(), center_part(rrb));
  SubgroupGroup hphi = subgroup_as_group(h_phi_subgroup(rrb));
  OmegaMaps maps;
  return tabulate_omega(rrb, q, hphi.from_parent, maps);
}

OmegaMaps omega_maps(const RelRB& rrb) {
  Quotient q = quotient(rrb.h_group(), center_part(rrb));
  SubgroupGroup hphi = subgroup_as_group(h_phi_subgroup(rrb));
  OmegaMaps maps;
  if (tabulate_omega(rrb, q, hphi.from_parent, maps) != 0) {
    throw Error(ErrorCode::WellDefinednessViolation,
                "ω or ω^φ depends on coset representatives of Z^φ_R(H)");
  }
  return maps;
}

IsoclinismData isoclinism_data(const RelRB& rrb) {
  IsoclinismData d{quotient_rrb(rrb, center_rrb(rrb)), sub_structure(rrb, commutator_rrb(rrb)), {}};
  if (tabulate_omega(rrb, d.center_quotient.h, d.commutator.k.from_parent, d.omega) != 0) {
    throw Error(ErrorCode::WellDefinednessViolation,
                "ω or ω^φ depends on coset representatives of Z^φ_R(H)");
  }
  return d;
}

namespace {

std::optional<IsoclinismFailure> check_with_data(const IsoclinismData& da,
                                                 const IsoclinismData& db,
                                                 const IsoclinismWitness& w) {
  const auto& qa = da.center_quotient.rrb;
  const auto& qb = db.center_quotient.rrb;
  const auto& ca = da.commutator.rrb;
  const auto& cb = db.commutator.rrb;
  if (!is_bijective(w.psi1, qb.h_group()->order()) || w.psi1.size() != qa.h_group()->order() ||
      !is_bijective(w.eta1, qb.g_group()->order()) || w.eta1.size() != qa.g_group()->order() ||
      !is_rrb_morphism(qa, qb, w.psi1, w.eta1)) {
    return IsoclinismFailure{"(ψ1, η1) is not an isomorphism of the center quotients"};
  }
  if (!is_bijective(w.psi2, cb.h_group()->order()) || w.psi2.size() != ca.h_group()->order() ||
      !is_bijective(w.eta2, cb.g_group()->order()) || w.eta2.size() != ca.g_group()->order() ||
      !is_rrb_morphism(ca, cb, w.psi2, w.eta2)) {
    return IsoclinismFailure{"(ψ2, η2) is not an isomorphism of the commutators"};
  }
  const std::size_t m = da.omega.cosets, mb = db.omega.cosets;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t i = x * m + y;
      const std::size_t j = static_cast<std::size_t>(w.psi1[x]) * mb + w.psi1[y];
      if (w.psi2[da.omega.omega[i]] != db.omega.omega[j]) {
        return IsoclinismFailure{"ω square", static_cast<Elem>(x), static_cast<Elem>(y)};
      }
      if (w.psi2[da.omega.omega_phi[i]] != db.omega.omega_phi[j]) {
        return IsoclinismFailure{"ω^φ square", static_cast<Elem>(x), static_cast<Elem>(y)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IsoclinismFailure> check_isoclinism(const RelRB& a, const RelRB& b,
                                                  const IsoclinismWitness& w) {
  return check_with_data(isoclinism_data(a), isoclinism_data(b), w);
}

IsoclinismWitness identity_witness(const RelRB& rrb) {
  auto d = isoclinism_data(rrb);
  return IsoclinismWitness{iota_array(d.center_quotient.rrb.h_group()->order()),
                           iota_array(d.center_quotient.rrb.g_group()->order()),
                           iota_array(d.commutator.rrb.h_group()->order()),
                           iota_array(d.commutator.rrb.g_group()->order())};
}

std::optional<IsoclinismWitness> rrb_isoclinic(const RelRB& a, const RelRB& b,
                                               const Limits& limits) {
  for (std::size_t n : {a.h_group()->order(), b.h_group()->order(), a.g_group()->order(),
                        b.g_group()->order()}) {
    if (n > limits.isoclinism_cap) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "isoclinism search on a group of order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(limits.isoclinism_cap));
    }
  }
  const IsoclinismData da = isoclinism_data(a), db = isoclinism_data(b);
  if (identical(a, b)) {
    IsoclinismWitness w = identity_witness(a);
    if (!check_with_data(da, db, w)) return w;
  }
  const auto& qa = da.center_quotient.rrb;
  const auto& qb = db.center_quotient.rrb;
  const auto& ca = da.commutator.rrb;
  const auto& cb = db.commutator.rrb;

  auto same_shape = [](const GroupPtr& x, const GroupPtr& y) {
    return isomorphism_invariants_match(*x, *y);
  };
  if (!same_shape(qa.h_group(), qb.h_group()) || !same_shape(qa.g_group(), qb.g_group()) ||
      !same_shape(ca.h_group(), cb.h_group()) || !same_shape(ca.g_group(), cb.g_group())) {
    return std::nullopt;
  }
  if (h_r_phi_subgroup(a).size() != h_r_phi_subgroup(b).size()) return std::nullopt;
  {
    GroupPtr ia, ib;
    quotient_image_group(a, ia);
    quotient_image_group(b, ib);
    if (!same_shape(ia, ib)) return std::nullopt;
  }

  const std::size_t m = da.omega.cosets;
  std::optional<IsoclinismWitness> found;
  for_each_hom(*qa.h_group(), *qb.h_group(), {}, true, [&](std::span<const Elem> psi1) {
    std::vector<Elem> forced(ca.h_group()->order(), kNoElem);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        const std::size_t i = x * m + y;
        const std::size_t j = static_cast<std::size_t>(psi1[x]) * m + psi1[y];
        for (auto [src, dst] : {std::pair{da.omega.omega[i], db.omega.omega[j]},
                                std::pair{da.omega.omega_phi[i], db.omega.omega_phi[j]}}) {
          if (forced[src] == kNoElem) {
            forced[src] = dst;
          } else if (forced[src] != dst) {
            return true;
          }
        }
      }
    }
    std::vector<HomConstraint> c1;
    for (std::size_t x = 0; x < qa.h_group()->order(); ++x) {
      c1.push_back({qa(static_cast<Elem>(x)), qb(psi1[x])});
    }
    std::optional<std::vector<Elem>> eta1;
    for_each_hom(*qa.g_group(), *qb.g_group(), c1, true, [&](std::span<const Elem> e) {
      if (!is_rrb_morphism(qa, qb, psi1, e)) return true;
      eta1.emplace(e.begin(), e.end());
      return false;
    });
    if (!eta1) return true;

    std::vector<HomConstraint> fixed;
    for (std::size_t s = 0; s < forced.size(); ++s) {
      if (forced[s] != kNoElem) fixed.push_back({static_cast<Elem>(s), forced[s]});
    }
    for_each_hom(*ca.h_group(), *cb.h_group(), fixed, true, [&](std::span<const Elem> psi2) {
      std::vector<HomConstraint> c2;
      for (std::size_t x = 0; x < ca.h_group()->order(); ++x) {
        c2.push_back({ca(static_cast<Elem>(x)), cb(psi2[x])});
      }
      for_each_hom(*ca.g_group(), *cb.g_group(), c2, true, [&](std::span<const Elem> eta2) {
        if (!is_rrb_morphism(ca, cb, psi2, eta2)) return true;
        IsoclinismWitness w{{psi1.begin(), psi1.end()}, *eta1, {psi2.begin(), psi2.end()},
                            {eta2.begin(), eta2.end()}};
        if (check_with_data(da, db, w)) return true;
        found = std::move(w);
        return false;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

BridgeReport check_bridge_theorem(const RelRB& a, const RelRB& b, const IsoclinismWitness& w) {
  const IsoclinismData da = isoclinism_data(a), db = isoclinism_data(b);
  {
    const auto& qa = da.center_quotient.rrb;
    const auto& qb = db.center_quotient.rrb;
    const auto& ca = da.commutator.rrb;
    const auto& cb = db.commutator.rrb;
    auto fits = [](const std::vector<Elem>& v, std::size_t len, std::size_t range) {
      return v.size() == len &&
             std::all_of(v.begin(), v.end(), [&](Elem x) { return x < range; });
    };
    if (!fits(w.psi1, qa.h_group()->order(), qb.h_group()->order()) ||
        !fits(w.eta1, qa.g_group()->order(), qb.g_group()->order()) ||
        !fits(w.psi2, ca.h_group()->order(), cb.h_group()->order()) ||
        !fits(w.eta2, ca.g_group()->order(), cb.g_group()->order())) {
      throw Error(ErrorCode::InvalidWitness,
                  "witness arrays do not match the center quotients and commutators");
    }
  }
  BridgeReport rep;
  auto fail = [&](std::string stage, std::string detail, Elem x = kNoElem, Elem y = kNoElem) {
    rep.ok = false;
    rep.stage = std::move(stage);
    rep.detail = std::move(detail);
    rep.a = x;
    rep.b = y;
    return rep;
  };
  if (auto f = check_with_data(da, db, w)) return fail("witness", f->what, f->a, f->b);

  const GroupPtr& hg = a.h_group();
  const GroupPtr& kg = b.h_group();
  const auto& qha = da.center_quotient.h;
  const auto& qhb = db.center_quotient.h;
  // Representative in K of ψ1 applied to the coset of h.
  auto psi1_rep = [&](Elem h) { return qhb.representatives[w.psi1[qha.projection[h]]]; };
  // ψ2 on elements of H^φ, as elements of K^φ.
  auto psi2_elem = [&](Elem h) {
    return db.commutator.k.to_parent[w.psi2[da.commutator.k.from_parent[h]]];
  };

  Restriction ia = restrict_to_image(a), ib = restrict_to_image(b);
  SkewBrace ba = induced_brace(a), bb = induced_brace(b);
  {
    SkewBrace bia = induced_brace(ia.rrb), bib = induced_brace(ib.rrb);
    if (bia.circ->table_rows() != ba.circ->table_rows() ||
        bib.circ->table_rows() != bb.circ->table_rows()) {
      return fail("restriction", "I(H, G, φ, R) induces a different brace");
    }
  }
  Subgroup za = center_part(a), zia = center_part(ia.rrb);
  Subgroup zb = center_part(b), zib = center_part(ib.rrb);
  if (!is_subset(za, zia) || !is_subset(zb, zib)) {
    return fail("restriction", "Z^φ_R(H) is not contained in Z^{φ|}_{R|}(H)");
  }
  if (annihilator(ba).elements() != zia.elements() ||
      annihilator(bb).elements() != zib.elements()) {
    return fail("annihilator", "Ann(H_R) differs from Z^{φ|}_{R|}(H)");
  }

  // ξ1 : H/Z^{φ|}_{R|} -> K/Z^{φ|}_{S|}, induced by ψ1.
  Quotient qzia = quotient(hg, zia), qzib = quotient(kg, zib);
  std::vector<Elem> xi1(qzia.representatives.size(), kNoElem);
  for (std::size_t h = 0; h < hg->order(); ++h) {
    const Elem src = qzia.projection[h];
    const Elem tgt = qzib.projection[psi1_rep(static_cast<Elem>(h))];
    if (xi1[src] == kNoElem) {
      xi1[src] = tgt;
    } else if (xi1[src] != tgt) {
      return fail("xi1", "ψ1 does not induce a map H/Z^{φ|}_{R|} -> K/Z^{φ|}_{S|}",
                  static_cast<Elem>(h));
    }
  }
  if (!is_bijective(xi1, qzib.representatives.size())) {
    return fail("xi1", "H/Z^{φ|}_{R|}(H) and K/Z^{φ|}_{S|}(K) are not matched bijectively");
  }

  // ξ2 : H_R' -> K_S', the restriction of ψ2.
  Subgroup hpa = brace_commutator(ba), hpb = brace_commutator(bb);
  if (hpa.elements() != h_phi_subgroup(ia.rrb).elements() ||
      hpb.elements() != h_phi_subgroup(ib.rrb).elements()) {
    return fail("commutator", "H_R' differs from the commutator of I(H, G, φ, R)");
  }
  SubBrace sa = sub_brace(ba, hpa), sb = sub_brace(bb, hpb);
  std::vector<Elem> xi2(sa.to_parent.size());
  for (std::size_t i = 0; i < xi2.size(); ++i) {
    xi2[i] = sb.from_parent[psi2_elem(sa.to_parent[i])];
    if (xi2[i] == kNoElem) {
      return fail("xi2", "ψ2 does not map H_R' into K_S'", sa.to_parent[i]);
    }
  }
  if (!is_bijective(xi2, sb.to_parent.size())) {
    return fail("xi2", "ψ2 does not map H_R' onto K_S'");
  }
  BraceIsoclinism bw{xi1, xi2};
  if (auto f = check_brace_isoclinism(ba, bb, bw)) return fail("brace", f->what, f->a, f->b);
  rep.brace = bw;

  // Group isoclinism of H and K.
  Quotient qza = quotient(hg, center(hg)), qzb = quotient(kg, center(kg));
  std::vector<Elem> alpha(qza.representatives.size(), kNoElem);
  for (std::size_t h = 0; h < hg->order(); ++h) {
    const Elem src = qza.projection[h];
    const Elem tgt = qzb.projection[psi1_rep(static_cast<Elem>(h))];
    if (alpha[src] == kNoElem) {
      alpha[src] = tgt;
    } else if (alpha[src] != tgt) {
      return fail("group", "ψ1 does not induce H/Z(H) -> K/Z(K)", static_cast<Elem>(h));
    }
  }
  if (!is_bijective(alpha, qzb.representatives.size()) ||
      !is_homomorphism(*qza.group, *qzb.group, alpha)) {
    return fail("group", "induced H/Z(H) -> K/Z(K) is not an isomorphism");
  }
  Subgroup dh = derived_subgroup(hg), dk = derived_subgroup(kg);
  if (dh.size() != dk.size()) return fail("group", "[H, H] and [K, K] differ in order");
  for (Elem d : dh.elements()) {
    if (!dk.contains(psi2_elem(d))) return fail("group", "ψ2 does not map [H, H] into [K, K]", d);
  }
  for (std::size_t x = 0; x < hg->order(); ++x) {
    for (std::size_t y = 0; y < hg->order(); ++y) {
      const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      const Elem kx = qzb.representatives[alpha[qza.projection[x]]];
      const Elem ky = qzb.representatives[alpha[qza.projection[y]]];
      if (psi2_elem(hg->commutator(ex, ey)) != kg->commutator(kx, ky)) {
        return fail("group", "commutator square of the group isoclinism", ex, ey);
      }
    }
  }

  // Invariants carried by the witness.
  {
    GroupPtr ima, imb;
    quotient_image_group(a, ima);
    quotient_image_group(b, imb);
    if (!find_isomorphism(ima, imb)) {
      return fail("invariant", "Im R/(Im R ∩ Ker φ) and Im S/(Im S ∩ Ker φ) are not isomorphic");
    }
  }
  {
    Subgroup ra = h_r_phi_subgroup(a), rb = h_r_phi_subgroup(b);
    if (ra.size() != rb.size()) return fail("invariant", "|H^{R,φ}| differs from |K^{S,φ}|");
    for (Elem x : ra.elements()) {
      if (!rb.contains(psi2_elem(x))) {
        return fail("invariant", "ψ2 does not map H^{R,φ} onto K^{S,φ}", x);
      }
    }
  }
  if (!is_homomorphism(*qzia.group, *qzib.group, xi1)) {
    return fail("invariant", "ξ1 is not an isomorphism H/Z^{φ|}_{R|} -> K/Z^{φ|}_{S|}");
  }

  rep.ok = true;
  rep.stage.clear();

  // The witness induced on the image restrictions.
  IsoclinismWitness wr;
  auto restrict_witness = [&]() -> std::optional<std::string> {
    IsoclinismData dia = isoclinism_data(ia.rrb), dib = isoclinism_data(ib.rrb);
    if (dia.center_quotient.h.projection != qzia.projection ||
        dib.center_quotient.h.projection != qzib.projection) {
      return std::string("center quotient of I(H, G, φ, R) has an unexpected numbering");
    }
    wr.psi1 = xi1;
    {
      // Im S/(Im S ∩ Ker φ) coset for each coset of L/Ker φ met by Im S.
      const auto& qgb = db.center_quotient.g;
      const auto& qgib = dib.center_quotient.g;
      std::vector<Elem> lift(qgb.representatives.size(), kNoElem);
      for (std::size_t s = 0; s < ib.image.to_parent.size(); ++s) {
        const Elem c = qgb.projection[ib.image.to_parent[s]];
        const Elem t = qgib.projection[s];
        if (lift[c] == kNoElem) {
          lift[c] = t;
        } else if (lift[c] != t) {
          return std::string("Im S/(Im S ∩ Ker φ) does not embed in L/Ker φ");
        }
      }
      const auto& qga = da.center_quotient.g;
      const auto& qgia = dia.center_quotient.g;
      wr.eta1.assign(qgia.representatives.size(), kNoElem);
      for (std::size_t l = 0; l < ia.image.to_parent.size(); ++l) {
        const Elem t = lift[w.eta1[qga.projection[ia.image.to_parent[l]]]];
        if (t == kNoElem) return std::string("η1 does not map Im R onto Im S");
        Elem& slot = wr.eta1[qgia.projection[l]];
        if (slot == kNoElem) {
          slot = t;
        } else if (slot != t) {
          return std::string("η1 does not induce a map on Im R/(Im R ∩ Ker φ)");
        }
      }
    }
    {
      const auto& kia = dia.commutator.k;
      const auto& kib = dib.commutator.k;
      wr.psi2.resize(kia.to_parent.size());
      for (std::size_t i = 0; i < kia.to_parent.size(); ++i) {
        wr.psi2[i] = kib.from_parent[psi2_elem(kia.to_parent[i])];
        if (wr.psi2[i] == kNoElem) return std::string("ψ2 does not map H^{φ|} into K^{φ|}");
      }
      const auto& lia = dia.commutator.l;
      const auto& lib = dib.commutator.l;
      const auto& la = da.commutator.l;
      const auto& lb = db.commutator.l;
      wr.eta2.resize(lia.to_parent.size());
      for (std::size_t i = 0; i < lia.to_parent.size(); ++i) {
        const Elem g = ia.image.to_parent[lia.to_parent[i]];
        const Elem l = lb.to_parent[w.eta2[la.from_parent[g]]];
        const Elem s = ib.image.from_parent[l];
        wr.eta2[i] = s == kNoElem ? kNoElem : lib.from_parent[s];
        if (wr.eta2[i] == kNoElem) return std::string("η2 does not map Im R into Im S");
      }
    }
    if (auto f = check_with_data(dia, dib, wr)) return f->what;
    return std::nullopt;
  };
  if (auto why = restrict_witness()) {
    rep.restricted_detail = *why;
  } else {
    rep.restricted = std::move(wr);
  }
  return rep;
}

}  // namespace rrb

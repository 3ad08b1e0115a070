#include "rrb/relrb.hpp"

#include <algorithm>
#include <string>

namespace rrb {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

bool is_closed(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : elems) in[x] = true;
  if (!in[0]) return false;
  for (Elem x : elems) {
    if (!in[g.inv(x)]) return false;
    for (Elem y : elems) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::pair<Elem, Elem>> find_rrb_violation(const ActionTable& action,
                                                        std::span<const Elem> r) {
  const auto& h = *action.h_group();
  const auto& g = *action.g_group();
  const std::size_t nh = h.order();
  for (std::size_t a = 0; a < nh; ++a) {
    const Elem ra = r[a];
    for (std::size_t b = 0; b < nh; ++b) {
      const Elem lhs = g.mul(ra, r[b]);
      const Elem rhs = r[h.mul(static_cast<Elem>(a), action.apply(ra, static_cast<Elem>(b)))];
      if (lhs != rhs) return std::pair{static_cast<Elem>(a), static_cast<Elem>(b)};
    }
  }
  return std::nullopt;
}

RelRB::RelRB(ActionTable action, std::vector<Elem> r)
    : action_(std::move(action)), r_(std::move(r)) {
  if (r_.size() != h_group()->order()) {
    throw Error(ErrorCode::InvalidArgument,
                "operator has length " + std::to_string(r_.size()) + ", expected |H| = " +
                    std::to_string(h_group()->order()));
  }
  for (Elem v : r_) {
    if (v >= g_group()->order()) {
      throw Error(ErrorCode::InvalidArgument, "operator value " + std::to_string(v) +
                                                  " is not an element of G");
    }
  }
  if (auto bad = find_rrb_violation(action_, r_)) {
    throw Error(ErrorCode::NotRotaBaxter,
                "relative Rota-Baxter identity fails at (h1, h2) = " +
                    pair_str(bad->first, bad->second));
  }
}

bool RelRB::is_bijective() const noexcept {
  return rrb::is_bijective(r_, g_group()->order());
}

RelRB validate_rrb(ActionTable action, std::vector<Elem> r) {
  return RelRB(std::move(action), std::move(r));
}

DescendentGroup descendent_group(const RelRB& rrb) {
  const std::size_t n = rrb.h_group()->order();
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rows[a][b] = rrb.circ(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  std::string label;
  if (!rrb.h_group()->label().empty()) label = rrb.h_group()->label() + "∘R";
  GroupPtr dg = group_from_table(rows, std::move(label));
  // The identity of (H, ∘_R) is the identity of H since R(1) = 1.
  if (dg->row(0)[0] != 0 || rows[0] != dg->table_rows()[0]) {
    throw Error(ErrorCode::InvalidArgument, "descendent group identity moved");
  }
  if (!is_homomorphism(*dg, *rrb.g_group(), rrb.r())) {
    throw Error(ErrorCode::InvalidArgument, "R is not a homomorphism on the descendent group");
  }
  return DescendentGroup{dg, GroupHom{dg, rrb.g_group(), rrb.r()}};
}

Subgroup graph_subgroup(const RelRB& rrb, const SemidirectProduct& sdp) {
  const std::size_t n = rrb.h_group()->order();
  std::vector<Elem> embed(n);
  for (std::size_t h = 0; h < n; ++h) embed[h] = sdp.pair(rrb(static_cast<Elem>(h)), static_cast<Elem>(h));
  Subgroup gr(sdp.group, embed);
  if (!is_closed(*sdp.group, gr.elements())) {
    throw Error(ErrorCode::NotRotaBaxter, "graph is not a subgroup of the semidirect product");
  }
  auto dg = descendent_group(rrb);
  if (!is_homomorphism(*dg.group, *sdp.group, embed)) {
    throw Error(ErrorCode::InvalidArgument, "h -> (R(h), h) is not a homomorphism");
  }
  return gr;
}

Subgroup graph_subgroup(const RelRB& rrb) {
  return graph_subgroup(rrb, semidirect_product(rrb.action()));
}

Restriction restrict_to_image(const RelRB& rrb) {
  Subgroup im(rrb.g_group(), rrb.r());
  std::string label;
  if (!rrb.g_group()->label().empty()) label = "Im(R)<" + rrb.g_group()->label();
  SubgroupGroup img = subgroup_as_group(im, std::move(label));
  std::vector<Permutation> perms;
  perms.reserve(img.to_parent.size());
  for (Elem l : img.to_parent) {
    auto p = rrb.action().perm(l);
    perms.emplace_back(p.begin(), p.end());
  }
  std::vector<Elem> r(rrb.r().size());
  for (std::size_t h = 0; h < r.size(); ++h) r[h] = img.from_parent[rrb(static_cast<Elem>(h))];
  ActionTable act(img.group, rrb.h_group(), std::move(perms));
  return Restriction{RelRB(std::move(act), std::move(r)), std::move(img)};
}

bool is_rrb_morphism(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                     std::span<const Elem> eta) {
  const auto& h = *src.h_group();
  const auto& g = *src.g_group();
  if (psi.size() != h.order() || eta.size() != g.order()) return false;
  if (!is_homomorphism(h, *dst.h_group(), psi)) return false;
  if (!is_homomorphism(g, *dst.g_group(), eta)) return false;
  for (std::size_t x = 0; x < h.order(); ++x) {
    if (eta[src(static_cast<Elem>(x))] != dst(psi[x])) return false;
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t x = 0; x < h.order(); ++x) {
      if (psi[src.action().apply(static_cast<Elem>(a), static_cast<Elem>(x))] !=
          dst.action().apply(eta[a], psi[x])) {
        return false;
      }
    }
  }
  return true;
}

bool is_rrb_sub(const RelRB& rrb, const Subgroup& k, const Subgroup& l) {
  if (k.parent()->order() != rrb.h_group()->order() ||
      l.parent()->order() != rrb.g_group()->order()) {
    return false;
  }
  if (!is_closed(*rrb.h_group(), k.elements()) || !is_closed(*rrb.g_group(), l.elements())) {
    return false;
  }
  for (Elem ell : l.elements()) {
    for (Elem x : k.elements()) {
      if (!k.contains(rrb.action().apply(ell, x))) return false;
    }
  }
  for (Elem x : k.elements()) {
    if (!l.contains(rrb(x))) return false;
  }
  return true;
}

RRBSub make_rrb_sub(const RelRB& rrb, Subgroup k, Subgroup l) {
  if (!is_rrb_sub(rrb, k, l)) {
    throw Error(ErrorCode::InvalidArgument, "(K, L) is not a relative Rota-Baxter subgroup");
  }
  return RRBSub{std::move(k), std::move(l)};
}

RRBSub morphism_kernel(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                       std::span<const Elem> eta) {
  if (!is_rrb_morphism(src, dst, psi, eta)) {
    throw Error(ErrorCode::NotAMorphism, "(ψ, η) is not a relative Rota-Baxter morphism");
  }
  GroupHom p{src.h_group(), dst.h_group(), {psi.begin(), psi.end()}};
  GroupHom e{src.g_group(), dst.g_group(), {eta.begin(), eta.end()}};
  return make_rrb_sub(src, kernel(p), kernel(e));
}

RRBSub morphism_image(const RelRB& src, const RelRB& dst, std::span<const Elem> psi,
                      std::span<const Elem> eta) {
  if (!is_rrb_morphism(src, dst, psi, eta)) {
    throw Error(ErrorCode::NotAMorphism, "(ψ, η) is not a relative Rota-Baxter morphism");
  }
  return make_rrb_sub(dst, Subgroup(dst.h_group(), {psi.begin(), psi.end()}),
                      Subgroup(dst.g_group(), {eta.begin(), eta.end()}));
}

bool is_ideal(const RelRB& rrb, const Subgroup& k, const Subgroup& l) {
  if (!is_rrb_sub(rrb, k, l)) return false;
  if (!is_normal(k) || !is_normal(l)) return false;
  const auto& h = *rrb.h_group();
  const auto& act = rrb.action();
  for (std::size_t g = 0; g < rrb.g_group()->order(); ++g) {
    for (Elem x : k.elements()) {
      if (!k.contains(act.apply(static_cast<Elem>(g), x))) return false;
    }
  }
  for (Elem ell : l.elements()) {
    for (std::size_t x = 0; x < h.order(); ++x) {
      const Elem y = h.mul(act.apply(ell, static_cast<Elem>(x)), h.inv(static_cast<Elem>(x)));
      if (!k.contains(y)) return false;
    }
  }
  return true;
}

RRBQuotient quotient_rrb(const RelRB& rrb, const RRBSub& ideal) {
  if (!is_ideal(rrb, ideal.k, ideal.l)) {
    throw Error(ErrorCode::NotAnIdeal, "(K, L) is not an ideal");
  }
  Quotient qh = quotient(rrb.h_group(), ideal.k);
  Quotient qg = quotient(rrb.g_group(), ideal.l);
  const std::size_t mh = qh.representatives.size(), mg = qg.representatives.size();
  const auto& act = rrb.action();

  std::vector<Permutation> perms(mg, Permutation(mh));
  for (std::size_t cg = 0; cg < mg; ++cg) {
    for (std::size_t ch = 0; ch < mh; ++ch) {
      perms[cg][ch] = qh.projection[act.apply(qg.representatives[cg], qh.representatives[ch])];
    }
  }
  std::vector<Elem> r(mh);
  for (std::size_t ch = 0; ch < mh; ++ch) r[ch] = qg.projection[rrb(qh.representatives[ch])];

  for (std::size_t g = 0; g < rrb.g_group()->order(); ++g) {
    for (std::size_t x = 0; x < rrb.h_group()->order(); ++x) {
      if (qh.projection[act.apply(static_cast<Elem>(g), static_cast<Elem>(x))] !=
          perms[qg.projection[g]][qh.projection[x]]) {
        throw Error(ErrorCode::WellDefinednessViolation,
                    "induced action depends on representatives at " + pair_str(g, x));
      }
    }
  }
  for (std::size_t x = 0; x < rrb.h_group()->order(); ++x) {
    if (qg.projection[rrb(static_cast<Elem>(x))] != r[qh.projection[x]]) {
      throw Error(ErrorCode::WellDefinednessViolation,
                  "induced operator depends on representatives at h=" + std::to_string(x));
    }
  }
  ActionTable qact(qg.group, qh.group, std::move(perms));
  return RRBQuotient{RelRB(std::move(qact), std::move(r)), std::move(qh), std::move(qg)};
}

RRBSubStructure sub_structure(const RelRB& rrb, const RRBSub& sub) {
  if (!is_rrb_sub(rrb, sub.k, sub.l)) {
    throw Error(ErrorCode::InvalidArgument, "(K, L) is not a relative Rota-Baxter subgroup");
  }
  SubgroupGroup k = subgroup_as_group(sub.k);
  SubgroupGroup l = subgroup_as_group(sub.l);
  std::vector<Permutation> perms;
  perms.reserve(l.to_parent.size());
  for (Elem ell : l.to_parent) {
    Permutation p(k.to_parent.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = k.from_parent[rrb.action().apply(ell, k.to_parent[i])];
    }
    perms.push_back(std::move(p));
  }
  std::vector<Elem> r(k.to_parent.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = l.from_parent[rrb(k.to_parent[i])];
  ActionTable act(l.group, k.group, std::move(perms));
  return RRBSubStructure{RelRB(std::move(act), std::move(r)), std::move(k), std::move(l)};
}

std::vector<Elem> ker_phi_r(const RelRB& rrb) {
  auto dg = descendent_group(rrb);
  std::vector<Elem> out;
  for (std::size_t x = 0; x < rrb.h_group()->order(); ++x) {
    if (rrb.action().acts_trivially(dg.r_hom(static_cast<Elem>(x)))) {
      out.push_back(static_cast<Elem>(x));
    }
  }
  if (!is_closed(*dg.group, out)) {
    throw Error(ErrorCode::InvalidArgument, "Ker(φR) is not a subgroup of the descendent group");
  }
  return out;
}

Subgroup center_part(const RelRB& rrb) {
  const auto& h = rrb.h_group();
  Subgroup zh = center(h);
  Subgroup fix = rrb.action().fixed_points();
  auto kpr = ker_phi_r(rrb);
  std::vector<Elem> out;
  for (Elem x : kpr) {
    if (zh.contains(x) && fix.contains(x)) out.push_back(x);
  }
  if (!is_closed(*h, out)) {
    throw Error(ErrorCode::InvalidArgument, "Z^φ_R(H) is not a subgroup");
  }
  return Subgroup(h, std::move(out));
}

RRBSub center_rrb(const RelRB& rrb) {
  RRBSub z{center_part(rrb), rrb.action().kernel()};
  if (!is_ideal(rrb, z.k, z.l)) {
    throw Error(ErrorCode::NotAnIdeal, "center (Z^φ_R(H), Ker φ) fails the ideal conditions");
  }
  return z;
}

Subgroup h2_subgroup(const RelRB& rrb) {
  const auto& h = *rrb.h_group();
  std::vector<Elem> gens;
  for (std::size_t g = 0; g < rrb.g_group()->order(); ++g) {
    for (std::size_t x = 0; x < h.order(); ++x) {
      gens.push_back(h.mul(rrb.action().apply(static_cast<Elem>(g), static_cast<Elem>(x)),
                           h.inv(static_cast<Elem>(x))));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(rrb.h_group(), gens);
}

Subgroup h_phi_subgroup(const RelRB& rrb) {
  return join(derived_subgroup(rrb.h_group()), h2_subgroup(rrb));
}

RRBSub commutator_rrb(const RelRB& rrb) {
  RRBSub c{h_phi_subgroup(rrb), whole_group(rrb.g_group())};
  if (!is_ideal(rrb, c.k, c.l)) {
    throw Error(ErrorCode::NotAnIdeal, "commutator (H^φ, G) fails the ideal conditions");
  }
  return c;
}

Subgroup h_r_phi_subgroup(const RelRB& rrb) {
  const auto& h = *rrb.h_group();
  std::vector<Elem> gens;
  for (std::size_t a = 0; a < h.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) {
      gens.push_back(h.mul(rrb.action().apply(rrb(static_cast<Elem>(a)), static_cast<Elem>(b)),
                           h.inv(static_cast<Elem>(b))));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(rrb.h_group(), gens);
}

}  // namespace rrb

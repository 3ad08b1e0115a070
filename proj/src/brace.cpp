#include "rrb/brace.hpp"

#include <algorithm>
#include <string>

namespace rrb {

namespace {

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + ")";
}

bool closed_under(const FiniteGroup& g, const std::vector<Elem>& elems) {
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

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x) {
    auto ra = a.row(static_cast<Elem>(x));
    auto rb = b.row(static_cast<Elem>(x));
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

// θ and θ* on H/Ann(H) with values as indices of H'.
struct ThetaTables {
  BraceQuotient q;
  SubBrace c;
  std::vector<Elem> theta;
  std::vector<Elem> theta_star;
};

ThetaTables theta_tables(const SkewBrace& b) {
  ThetaTables t{brace_quotient(b, annihilator(b)), sub_brace(b, brace_commutator(b)), {}, {}};
  const auto& dot = *b.dot;
  const std::size_t m = t.q.representatives.size();
  t.theta.assign(m * m, kNoElem);
  t.theta_star.assign(m * m, kNoElem);
  // Every representative pair is visited, so a representative-dependent value
  // surfaces as a conflict.
  for (std::size_t x = 0; x < b.order(); ++x) {
    for (std::size_t y = 0; y < b.order(); ++y) {
      const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      const Elem th = dot.commutator(ex, ey);
      const Elem ts = dot.mul(b.lambda(ex, ey), dot.inv(ey));
      const Elem cth = t.c.from_parent[th], cts = t.c.from_parent[ts];
      if (cth == kNoElem || cts == kNoElem) {
        throw Error(ErrorCode::WellDefinednessViolation,
                    "θ or θ* leaves H' at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      const std::size_t i = t.q.projection[x] * m + t.q.projection[y];
      if (t.theta[i] == kNoElem) {
        t.theta[i] = cth;
        t.theta_star[i] = cts;
      } else if (t.theta[i] != cth || t.theta_star[i] != cts) {
        throw Error(ErrorCode::WellDefinednessViolation,
                    "θ depends on coset representatives at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
      }
    }
  }
  return t;
}

std::optional<BraceIsoclinismFailure> check_tables(const ThetaTables& ta, const ThetaTables& tb,
                                                   const BraceIsoclinism& w) {
  const std::size_t ma = ta.q.representatives.size();
  const std::size_t mb = tb.q.representatives.size();
  if (w.xi1.size() != ma || ma != mb || !is_bijective(w.xi1, mb) ||
      !is_brace_hom(ta.q.brace, tb.q.brace, w.xi1)) {
    return BraceIsoclinismFailure{"ξ1 is not a brace isomorphism H/Ann(H) -> K/Ann(K)"};
  }
  if (w.xi2.size() != ta.c.to_parent.size() || !is_bijective(w.xi2, tb.c.to_parent.size()) ||
      !is_brace_hom(ta.c.brace, tb.c.brace, w.xi2)) {
    return BraceIsoclinismFailure{"ξ2 is not a brace isomorphism H' -> K'"};
  }
  for (std::size_t x = 0; x < ma; ++x) {
    for (std::size_t y = 0; y < ma; ++y) {
      const std::size_t i = x * ma + y;
      const std::size_t j = static_cast<std::size_t>(w.xi1[x]) * mb + w.xi1[y];
      if (w.xi2[ta.theta[i]] != tb.theta[j]) {
        return BraceIsoclinismFailure{"θ square", static_cast<Elem>(x), static_cast<Elem>(y)};
      }
      if (w.xi2[ta.theta_star[i]] != tb.theta_star[j]) {
        return BraceIsoclinismFailure{"θ* square", static_cast<Elem>(x), static_cast<Elem>(y)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Triple> find_brace_violation(const FiniteGroup& dot, const FiniteGroup& circ) {
  const std::size_t n = dot.order();
  for (std::size_t a = 0; a < n; ++a) {
    const Elem ea = static_cast<Elem>(a);
    const Elem ainv = dot.inv(ea);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem left = dot.mul(circ.mul(ea, static_cast<Elem>(b)), ainv);
      for (std::size_t c = 0; c < n; ++c) {
        const Elem lhs = circ.mul(ea, dot.mul(static_cast<Elem>(b), static_cast<Elem>(c)));
        const Elem rhs = dot.mul(left, circ.mul(ea, static_cast<Elem>(c)));
        if (lhs != rhs) return Triple{ea, static_cast<Elem>(b), static_cast<Elem>(c)};
      }
    }
  }
  return std::nullopt;
}

SkewBrace validate_brace(GroupPtr dot, GroupPtr circ) {
  if (dot->order() != circ->order()) {
    throw Error(ErrorCode::InvalidArgument, "brace tables have different orders");
  }
  if (auto bad = find_brace_violation(*dot, *circ)) {
    throw Error(ErrorCode::NotABrace, "brace law fails at (a, b, c) = " + triple_str(*bad));
  }
  return SkewBrace{std::move(dot), std::move(circ)};
}

ActionTable lambda_map(const SkewBrace& b) {
  const std::size_t n = b.order();
  std::vector<Permutation> perms(n, Permutation(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      perms[a][x] = b.lambda(static_cast<Elem>(a), static_cast<Elem>(x));
    }
  }
  return ActionTable(b.circ, b.dot, std::move(perms));
}

SkewBrace induced_brace(const RelRB& rrb) {
  auto dg = descendent_group(rrb);
  SkewBrace b{rrb.h_group(), dg.group};
  if (auto bad = find_brace_violation(*b.dot, *b.circ)) {
    throw Error(ErrorCode::NotABrace,
                "induced brace fails the brace law at " + triple_str(*bad));
  }
  for (std::size_t a = 0; a < b.order(); ++a) {
    for (std::size_t x = 0; x < b.order(); ++x) {
      if (b.lambda(static_cast<Elem>(a), static_cast<Elem>(x)) !=
          rrb.action().apply(rrb(static_cast<Elem>(a)), static_cast<Elem>(x))) {
        throw Error(ErrorCode::InvalidArgument, "λ_a differs from φ_{R(a)} at a=" +
                                                    std::to_string(a));
      }
    }
  }
  return b;
}

RelRB induced_rrb(const SkewBrace& b) {
  std::vector<Elem> r(b.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Elem>(i);
  return RelRB(lambda_map(b), std::move(r));
}

bool is_trivial_brace(const SkewBrace& b) { return same_table(*b.dot, *b.circ); }

bool triviality_criterion(const RelRB& rrb) {
  for (Elem g : rrb.r()) {
    if (!rrb.action().acts_trivially(g)) return false;
  }
  return true;
}

std::optional<Triple> biskew_violation(const SkewBrace& b) {
  return find_brace_violation(*b.circ, *b.dot);
}

bool is_biskew(const SkewBrace& b) { return !biskew_violation(b); }

YBEMap ybe_map(const SkewBrace& b) {
  const std::size_t n = b.order();
  const auto& dot = *b.dot;
  const auto& circ = *b.circ;
  YBEMap m{n, std::vector<Elem>(n * n), std::vector<Elem>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      const Elem ea = static_cast<Elem>(a), ec = static_cast<Elem>(c);
      const Elem u = b.lambda(ea, ec);
      const Elem ac = circ.mul(ea, ec);
      const Elem conj = dot.mul(dot.mul(dot.inv(ac), ea), ac);
      // λ_u^-1 = λ_{ū} with ū the inverse of u in (H, ∘).
      m.first[a * n + c] = u;
      m.second[a * n + c] = b.lambda(circ.inv(u), conj);
    }
  }
  std::vector<Elem> packed(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    packed[i] = static_cast<Elem>(m.first[i] * n + m.second[i]);
  }
  if (!is_bijective(packed, n * n)) {
    throw Error(ErrorCode::YBEViolation, "r_H is not a bijection on pairs");
  }
  if (auto bad = find_ybe_violation(m)) {
    throw Error(ErrorCode::YBEViolation, "braid relation fails at " + triple_str(*bad));
  }
  if (!verify_nondegenerate(m)) {
    throw Error(ErrorCode::YBEViolation, "r_H is degenerate");
  }
  return m;
}

std::optional<Triple> find_ybe_violation(const YBEMap& m) {
  const std::size_t n = m.n;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y), ez = static_cast<Elem>(z);
        // r12 r23 r12
        auto [a1, b1] = m(ex, ey);
        auto [b2, c2] = m(b1, ez);
        auto [a3, b3] = m(a1, b2);
        // r23 r12 r23
        auto [q1, r1] = m(ey, ez);
        auto [p2, q2] = m(ex, q1);
        auto [q3, r3] = m(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) return Triple{ex, ey, ez};
      }
    }
  }
  return std::nullopt;
}

bool verify_ybe(const YBEMap& m) { return !find_ybe_violation(m); }

bool verify_qybe(const YBEMap& m) {
  const std::size_t n = m.n;
  // R(a, b) = τ r(a, b) = (g_b(a), f_a(b)).
  auto big_r = [&](Elem a, Elem b) {
    auto [f, g] = m(a, b);
    return std::pair<Elem, Elem>{g, f};
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Elem u[3] = {static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
        Elem v[3] = {u[0], u[1], u[2]};
        auto apply = [&](Elem* t, int i, int j) {
          auto [p, q] = big_r(t[i], t[j]);
          t[i] = p;
          t[j] = q;
        };
        // Operators act right to left: R12 R13 R23 applies R23 first.
        apply(u, 1, 2);
        apply(u, 0, 2);
        apply(u, 0, 1);
        apply(v, 0, 1);
        apply(v, 0, 2);
        apply(v, 1, 2);
        if (u[0] != v[0] || u[1] != v[1] || u[2] != v[2]) return false;
      }
    }
  }
  return true;
}

bool verify_nondegenerate(const YBEMap& m) {
  const std::size_t n = m.n;
  std::vector<Elem> slice(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) slice[b] = m.first[a * n + b];
    if (!is_bijective(slice, n)) return false;
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) slice[a] = m.second[a * n + b];
    if (!is_bijective(slice, n)) return false;
  }
  return true;
}

bool is_involutive(const YBEMap& m) {
  for (std::size_t a = 0; a < m.n; ++a) {
    for (std::size_t b = 0; b < m.n; ++b) {
      auto [p, q] = m(static_cast<Elem>(a), static_cast<Elem>(b));
      auto [s, t] = m(p, q);
      if (s != a || t != b) return false;
    }
  }
  return true;
}

Subgroup annihilator(const SkewBrace& b) {
  const std::size_t n = b.order();
  const auto& dot = *b.dot;
  const auto& circ = *b.circ;
  Subgroup zdot = center(b.dot);
  std::vector<Elem> by_intersection, by_commuting;
  for (std::size_t a = 0; a < n; ++a) {
    const Elem ea = static_cast<Elem>(a);
    bool in_ker = true, in_fix = true, commutes = true;
    for (std::size_t x = 0; x < n; ++x) {
      const Elem ex = static_cast<Elem>(x);
      in_ker = in_ker && b.lambda(ea, ex) == ex;
      in_fix = in_fix && b.lambda(ex, ea) == ea;
      const Elem v = dot.mul(ex, ea);
      commutes = commutes && circ.mul(ex, ea) == v && circ.mul(ea, ex) == v && dot.mul(ea, ex) == v;
    }
    if (in_ker && in_fix && zdot.contains(ea)) by_intersection.push_back(ea);
    if (commutes) by_commuting.push_back(ea);
  }
  if (by_intersection != by_commuting) {
    throw Error(ErrorCode::WellDefinednessViolation,
                "the two characterizations of Ann(H) disagree");
  }
  Subgroup ann(b.dot, std::move(by_intersection));
  if (!is_brace_ideal(b, ann)) {
    throw Error(ErrorCode::NotAnIdeal, "Ann(H) is not an ideal");
  }
  return ann;
}

bool is_brace_ideal(const SkewBrace& b, const Subgroup& i) {
  const auto& elems = i.elements();
  if (!closed_under(*b.dot, elems) || !closed_under(*b.circ, elems)) return false;
  if (!is_normal(Subgroup(b.dot, elems)) || !is_normal(Subgroup(b.circ, elems))) return false;
  for (std::size_t a = 0; a < b.order(); ++a) {
    for (Elem x : elems) {
      if (!i.contains(b.lambda(static_cast<Elem>(a), x))) return false;
    }
  }
  return true;
}

Subgroup brace_ideal_closure(const SkewBrace& b, std::span<const Elem> seed) {
  const auto& dot = *b.dot;
  const auto& circ = *b.circ;
  std::vector<Elem> gens(seed.begin(), seed.end());
  Subgroup s = subgroup_generated(b.dot, gens);
  while (true) {
    std::vector<Elem> extra;
    for (std::size_t x = 0; x < b.order(); ++x) {
      const Elem ex = static_cast<Elem>(x);
      for (Elem e : s.elements()) {
        for (Elem y : {dot.conj(ex, e), circ.conj(ex, e), b.lambda(ex, e)}) {
          if (!s.contains(y)) extra.push_back(y);
        }
      }
    }
    if (extra.empty()) break;
    gens = s.elements();
    gens.insert(gens.end(), extra.begin(), extra.end());
    s = subgroup_generated(b.dot, gens);
  }
  if (!is_brace_ideal(b, s)) {
    throw Error(ErrorCode::NotAnIdeal, "ideal closure is not an ideal");
  }
  return s;
}

Subgroup brace_h2(const SkewBrace& b) {
  const auto& dot = *b.dot;
  std::vector<Elem> gens;
  for (std::size_t a = 0; a < b.order(); ++a) {
    for (std::size_t c = 0; c < b.order(); ++c) {
      gens.push_back(dot.mul(b.lambda(static_cast<Elem>(a), static_cast<Elem>(c)),
                             dot.inv(static_cast<Elem>(c))));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return brace_ideal_closure(b, gens);
}

Subgroup brace_commutator(const SkewBrace& b) {
  Subgroup c = join(derived_subgroup(b.dot), brace_h2(b));
  if (!is_brace_ideal(b, c)) {
    throw Error(ErrorCode::NotAnIdeal, "H' is not an ideal");
  }
  return c;
}

BraceQuotient brace_quotient(const SkewBrace& b, const Subgroup& i) {
  if (!is_brace_ideal(b, i)) throw Error(ErrorCode::NotAnIdeal, "not an ideal of the brace");
  Quotient qd = quotient(b.dot, Subgroup(b.dot, i.elements()));
  Quotient qc = quotient(b.circ, Subgroup(b.circ, i.elements()));
  if (qd.projection != qc.projection) {
    throw Error(ErrorCode::WellDefinednessViolation,
                "cosets of the ideal differ between the two operations");
  }
  return BraceQuotient{validate_brace(qd.group, qc.group), std::move(qd.projection),
                       std::move(qd.representatives)};
}

SubBrace sub_brace(const SkewBrace& b, const Subgroup& s) {
  const auto& elems = s.elements();
  if (!closed_under(*b.dot, elems) || !closed_under(*b.circ, elems)) {
    throw Error(ErrorCode::InvalidArgument, "subset is not closed under both operations");
  }
  SubgroupGroup d = subgroup_as_group(Subgroup(b.dot, elems));
  SubgroupGroup c = subgroup_as_group(Subgroup(b.circ, elems));
  return SubBrace{validate_brace(d.group, c.group), std::move(d.to_parent),
                  std::move(d.from_parent)};
}

bool is_brace_hom(const SkewBrace& src, const SkewBrace& dst, std::span<const Elem> psi) {
  return is_homomorphism(*src.dot, *dst.dot, psi) && is_homomorphism(*src.circ, *dst.circ, psi);
}

std::vector<std::vector<Elem>> brace_isomorphisms(const SkewBrace& a, const SkewBrace& b) {
  std::vector<std::vector<Elem>> out;
  if (a.order() != b.order()) return out;
  for_each_hom(*a.dot, *b.dot, {}, true, [&](std::span<const Elem> m) {
    if (is_homomorphism(*a.circ, *b.circ, m)) out.emplace_back(m.begin(), m.end());
    return true;
  });
  return out;
}

std::optional<std::vector<Elem>> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order() || !isomorphism_invariants_match(*a.dot, *b.dot) ||
      !isomorphism_invariants_match(*a.circ, *b.circ)) {
    return std::nullopt;
  }
  std::optional<std::vector<Elem>> found;
  for_each_hom(*a.dot, *b.dot, {}, true, [&](std::span<const Elem> m) {
    if (!is_homomorphism(*a.circ, *b.circ, m)) return true;
    found.emplace(m.begin(), m.end());
    return false;
  });
  return found;
}

std::optional<BraceIsoclinismFailure> check_brace_isoclinism(const SkewBrace& a,
                                                             const SkewBrace& b,
                                                             const BraceIsoclinism& w) {
  return check_tables(theta_tables(a), theta_tables(b), w);
}

std::optional<BraceIsoclinism> braces_isoclinic(const SkewBrace& a, const SkewBrace& b,
                                                const Limits& limits) {
  if (a.order() > limits.isoclinism_cap || b.order() > limits.isoclinism_cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "brace isoclinism search on orders " + std::to_string(a.order()) + ", " +
                    std::to_string(b.order()) + " exceeds cap " +
                    std::to_string(limits.isoclinism_cap));
  }
  ThetaTables ta = theta_tables(a), tb = theta_tables(b);
  const auto& qa = ta.q.brace;
  const auto& qb = tb.q.brace;
  const auto& ca = ta.c.brace;
  const auto& cb = tb.c.brace;
  if (qa.order() != qb.order() || ca.order() != cb.order() ||
      !isomorphism_invariants_match(*qa.dot, *qb.dot) ||
      !isomorphism_invariants_match(*ca.dot, *cb.dot)) {
    return std::nullopt;
  }
  const std::size_t m = qa.order();
  for (const auto& xi1 : brace_isomorphisms(qa, qb)) {
    // The squares fix ξ2 on every θ and θ* value.
    std::vector<Elem> forced(ca.order(), kNoElem);
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) {
      for (std::size_t y = 0; y < m && ok; ++y) {
        const std::size_t i = x * m + y;
        const std::size_t j = static_cast<std::size_t>(xi1[x]) * m + xi1[y];
        for (auto [src, dst] : {std::pair{ta.theta[i], tb.theta[j]},
                                std::pair{ta.theta_star[i], tb.theta_star[j]}}) {
          if (forced[src] == kNoElem) {
            forced[src] = dst;
          } else if (forced[src] != dst) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    std::vector<HomConstraint> fixed;
    for (std::size_t s = 0; s < forced.size(); ++s) {
      if (forced[s] != kNoElem) fixed.push_back({static_cast<Elem>(s), forced[s]});
    }
    std::optional<BraceIsoclinism> found;
    for_each_hom(*ca.dot, *cb.dot, fixed, true, [&](std::span<const Elem> xi2) {
      BraceIsoclinism w{xi1, {xi2.begin(), xi2.end()}};
      if (check_tables(ta, tb, w)) return true;
      found = std::move(w);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace rrb

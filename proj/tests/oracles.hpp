#pragma once

// Brute-force reference implementations. They read group tables through
// FiniteGroup::mul/inv only and never call the library's searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rrb/action.hpp"
#include "rrb/group.hpp"

namespace oracle {

using rrb::Elem;
using rrb::FiniteGroup;
using Set = std::vector<Elem>;

inline bool is_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elem>& f) {
  for (std::size_t x = 0; x < a.order(); ++x) {
    for (std::size_t y = 0; y < a.order(); ++y) {
      if (f[a.mul(Elem(x), Elem(y))] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

/// Every subset containing 0 that is closed under multiplication.
inline std::vector<Set> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Set> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if ((mask >> b & 1) && !(mask >> g.mul(Elem(a), Elem(b)) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    Set s;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1) s.push_back(Elem(a));
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Set& x, const Set& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

inline Set closure(const FiniteGroup& g, Set seed) {
  std::set<Elem> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) grew |= s.insert(g.mul(a, b)).second;
    }
  }
  return {s.begin(), s.end()};
}

inline Set center(const FiniteGroup& g) {
  Set z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) {
      central = g.mul(Elem(a), Elem(b)) == g.mul(Elem(b), Elem(a));
    }
    if (central) z.push_back(Elem(a));
  }
  return z;
}

inline Set derived(const FiniteGroup& g) {
  Set c;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      c.push_back(g.mul(g.mul(Elem(a), Elem(b)), g.mul(g.inv(Elem(a)), g.inv(Elem(b)))));
    }
  }
  return closure(g, c);
}

/// Calls visit on every bijection a -> b that is a homomorphism.
inline void for_each_iso(const FiniteGroup& a, const FiniteGroup& b,
                         const std::function<void(const std::vector<Elem>&)>& visit) {
  if (a.order() != b.order()) return;
  std::vector<Elem> p(a.order());
  std::iota(p.begin(), p.end(), Elem{0});
  do {
    if (p[0] == 0 && is_hom(a, b, p)) visit(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::size_t automorphism_count(const FiniteGroup& g) {
  std::size_t n = 0;
  for_each_iso(g, g, [&](const std::vector<Elem>&) { ++n; });
  return n;
}

inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  bool found = false;
  if (a.order() != b.order()) return false;
  std::vector<Elem> p(a.order());
  std::iota(p.begin(), p.end(), Elem{0});
  do {
    if (p[0] == 0 && is_hom(a, b, p)) found = true;
  } while (!found && std::next_permutation(p.begin(), p.end()));
  return found;
}

/// Every map a -> b (|b|^|a| of them) that is a homomorphism.
inline std::size_t hom_count(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Elem> f(a.order(), 0);
  std::size_t count = 0;
  while (true) {
    count += is_hom(a, b, f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == b.order()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return count;
}

/// Every map r : H -> G checked against R(x)R(y) = R(x φ_{R(x)}(y)).
inline std::vector<std::vector<Elem>> rbo(const rrb::ActionTable& phi) {
  const auto& h = *phi.h_group();
  const auto& g = *phi.g_group();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> r(h.order(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < h.order() && ok; ++x) {
      for (std::size_t y = 0; y < h.order() && ok; ++y) {
        const Elem lhs = g.mul(r[x], r[y]);
        const Elem rhs = r[h.mul(Elem(x), phi.apply(r[x], Elem(y)))];
        ok = lhs == rhs;
      }
    }
    if (ok) out.push_back(r);
    std::size_t i = 0;
    while (i < r.size() && ++r[i] == g.order()) r[i++] = 0;
    if (i == r.size()) break;
  }
  return out;
}

/// Number of homomorphisms G -> Aut(H), counted as maps g -> automorphism
/// with perm(g1 g2) = perm(g1) ∘ perm(g2).
inline std::size_t action_count(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::vector<Elem>> auts;
  for_each_iso(h, h, [&](const std::vector<Elem>& p) { auts.push_back(p); });
  std::vector<std::size_t> choice(g.order(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < g.order() && ok; ++a) {
      for (std::size_t b = 0; b < g.order() && ok; ++b) {
        const auto& pa = auts[choice[a]];
        const auto& pb = auts[choice[b]];
        const auto& pab = auts[choice[g.mul(Elem(a), Elem(b))]];
        for (std::size_t x = 0; x < h.order() && ok; ++x) ok = pab[x] == pa[pb[x]];
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == auts.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return count;
}

/// Hall isoclinism by exhaustion: bijections α of G/Z(G) onto K/Z(K) and β
/// of [G,G] onto [K,K], both homomorphisms, with β([x, y]) = [x', y'] for
/// all x, y, where x' lies over α of the coset of x.
inline bool group_isoclinic(const FiniteGroup& a, const FiniteGroup& b) {
  struct Data {
    std::vector<std::size_t> coset;  // element -> coset index
    std::vector<Elem> rep;           // coset -> representative
    Set derived;
    std::vector<std::vector<std::size_t>> qmul;
  };
  auto data = [](const FiniteGroup& g) {
    Data d;
    const Set z = center(g);
    d.coset.assign(g.order(), SIZE_MAX);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (d.coset[x] != SIZE_MAX) continue;
      for (Elem c : z) d.coset[g.mul(Elem(x), c)] = d.rep.size();
      d.rep.push_back(Elem(x));
    }
    const std::size_t q = d.rep.size();
    d.qmul.assign(q, std::vector<std::size_t>(q));
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) d.qmul[i][j] = d.coset[g.mul(d.rep[i], d.rep[j])];
    }
    d.derived = derived(g);
    return d;
  };
  const Data da = data(a), db = data(b);
  if (da.rep.size() != db.rep.size() || da.derived.size() != db.derived.size()) return false;
  auto comm = [](const FiniteGroup& g, Elem x, Elem y) {
    return g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
  };
  const std::size_t q = da.rep.size();
  std::vector<std::size_t> alpha(q);
  std::iota(alpha.begin(), alpha.end(), std::size_t{0});
  do {
    bool hom = alpha[0] == 0;
    for (std::size_t i = 0; i < q && hom; ++i) {
      for (std::size_t j = 0; j < q && hom; ++j) hom = alpha[da.qmul[i][j]] == db.qmul[alpha[i]][alpha[j]];
    }
    if (!hom) continue;
    // β is forced on commutators; check it is a well-defined isomorphism.
    std::vector<Elem> beta(a.order(), rrb::kNoElem);
    bool ok = true;
    for (std::size_t i = 0; i < q && ok; ++i) {
      for (std::size_t j = 0; j < q && ok; ++j) {
        const Elem ca = comm(a, da.rep[i], da.rep[j]);
        const Elem cb = comm(b, db.rep[alpha[i]], db.rep[alpha[j]]);
        if (beta[ca] == rrb::kNoElem) {
          beta[ca] = cb;
        } else {
          ok = beta[ca] == cb;
        }
      }
    }
    if (!ok) continue;
    // Commutators generate [G,G]; extend β along products and test.
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (Elem x : da.derived) {
        for (Elem y : da.derived) {
          if (beta[x] == rrb::kNoElem || beta[y] == rrb::kNoElem) continue;
          const Elem xy = a.mul(x, y);
          const Elem img = b.mul(beta[x], beta[y]);
          if (beta[xy] == rrb::kNoElem) {
            beta[xy] = img;
            grew = true;
          } else if (beta[xy] != img) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    std::set<Elem> image;
    for (Elem x : da.derived) image.insert(beta[x]);
    if (image.size() == db.derived.size()) return true;
  } while (std::next_permutation(alpha.begin() + 1, alpha.end()));
  return false;
}

}  // namespace oracle

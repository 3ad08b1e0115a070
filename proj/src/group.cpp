#include "rrb/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hash.hpp"

namespace rrb {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

// BFS closure under right multiplication by `gens`, starting from `start`.
std::vector<Elem> close_right(const FiniteGroup& g, std::vector<Elem> start,
                              std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> out;
  out.reserve(start.size());
  for (Elem x : start) {
    if (!seen[x]) {
      seen[x] = true;
      out.push_back(x);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotInS: return "NotInS";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::ExtendedModeRequired: return "ExtendedModeRequired";
    case ErrorCode::NotABrace: return "NotABrace";
    case ErrorCode::YBEViolation: return "YBEViolation";
    case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// FiniteGroup

Elem FiniteGroup::power(Elem a, std::size_t k) const noexcept {
  Elem r = identity();
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<Elem>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Elem>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(static_cast<Elem>(i));
    rows[i].assign(r.begin(), r.end());
  }
  return rows;
}

void FiniteGroup::finish() {
  inverse_.assign(n_, kNoElem);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(static_cast<Elem>(i));
    for (std::size_t j = 0; j < n_; ++j) {
      if (r[j] == 0) {
        inverse_[i] = static_cast<Elem>(j);
        break;
      }
    }
  }
  orders_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Elem x = static_cast<Elem>(i);
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Elem>(i));
      ++k;
    }
    orders_[i] = k;
  }
  abelian_ = true;
  for (std::size_t i = 0; i < n_ && abelian_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (table_[i * n_ + j] != table_[j * n_ + i]) {
        abelian_ = false;
        break;
      }
    }
  }
}

GroupPtr FiniteGroup::from_trusted_table(std::size_t n, std::vector<Elem> table,
                                         std::string label) {
  if (n == 0 || table.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "group table has wrong shape");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i) {
      throw Error(ErrorCode::NoIdentity, "index 0 is not the identity");
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->label_ = std::move(label);
  g->finish();
  for (std::size_t i = 0; i < n; ++i) {
    if (g->inverse_[i] == kNoElem) {
      throw Error(ErrorCode::NotLatinSquare,
                  "row " + std::to_string(i) + " has no identity entry");
    }
  }
  return g;
}

GroupPtr group_from_table(const std::vector<std::vector<Elem>>& rows,
                          std::string label) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::MalformedInput, "empty group table");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::MalformedInput,
                  "table row " + std::to_string(i) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " +
                      std::to_string(n));
    }
    for (Elem v : rows[i]) {
      if (v >= n) {
        throw Error(ErrorCode::MalformedInput,
                    "table entry " + std::to_string(v) + " out of range in row " +
                        std::to_string(i));
      }
    }
  }
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem v : rows[i]) {
      if (seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "row " + std::to_string(i) + " repeats entry " + std::to_string(v));
      }
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      Elem v = rows[i][j];
      if (seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "column " + std::to_string(j) + " repeats entry " + std::to_string(v));
      }
      seen[v] = true;
    }
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = rows[c][i] == i && rows[i][c] == i;
    }
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorCode::NoIdentity, "table has no two-sided identity");

  // Swap labels 0 and e so that the identity sits at index 0.
  auto relabel = [e](std::size_t x) -> std::size_t {
    if (x == 0) return e;
    if (x == e) return 0;
    return x;
  };
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[relabel(i) * n + relabel(j)] = static_cast<Elem>(relabel(rows[i][j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (table[ij * n + k] != table[i * n + table[j * n + k]]) {
          throw Error(ErrorCode::NotAssociative,
                      "associativity fails at " +
                          triple_str(relabel(i), relabel(j), relabel(k)));
        }
      }
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->label_ = std::move(label);
  g->finish();
  return g;
}

GroupPtr group_from_permutations(std::size_t degree,
                                 const std::vector<Permutation>& generators,
                                 std::string label, std::size_t order_cap) {
  std::vector<bool> seen(degree);
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const auto& p = generators[s];
    if (p.size() != degree) {
      throw Error(ErrorCode::MalformedInput,
                  "generator " + std::to_string(s) + " has length " +
                      std::to_string(p.size()) + ", expected " + std::to_string(degree));
    }
    std::fill(seen.begin(), seen.end(), false);
    for (Elem v : p) {
      if (v >= degree || seen[v]) {
        throw Error(ErrorCode::MalformedInput,
                    "generator " + std::to_string(s) + " is not a bijection");
      }
      seen[v] = true;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Elem>(i);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Elem, detail::VectorHash> index{{id, 0}};
  // right[j * k + s] = index of elems[j] * generators[s]
  const std::size_t k = generators.size();
  std::vector<Elem> right;
  std::vector<Elem> parent{kNoElem};
  std::vector<Elem> via{kNoElem};
  Permutation prod(degree);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = generators[s][elems[j][x]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<Elem>(elems.size()));
      if (inserted) {
        if (elems.size() >= order_cap) {
          throw Error(ErrorCode::OrderLimitExceeded,
                      "permutation closure exceeds order cap " + std::to_string(order_cap));
        }
        elems.push_back(prod);
        parent.push_back(static_cast<Elem>(j));
        via.push_back(static_cast<Elem>(s));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j) {
      const Elem p = table[i * n + parent[j]];
      table[i * n + j] = right[static_cast<std::size_t>(p) * k + via[j]];
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->label_ = std::move(label);
  g->presentation_ = PermutationPresentation{degree, generators};
  g->finish();
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string label) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem p = a->mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      const Elem q = b->mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      table[x * n + y] = static_cast<Elem>(p * nb + q);
    }
  }
  if (label.empty() && !a->label().empty() && !b->label().empty()) {
    label = a->label() + "x" + b->label();
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(label));
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  mask_.assign(parent_->order(), false);
  for (Elem x : elements_) {
    if (x >= parent_->order()) {
      throw Error(ErrorCode::InvalidArgument, "subgroup element out of range");
    }
    mask_[x] = true;
  }
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seed) {
  return Subgroup(g, close_right(*g, {0}, seed));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seed = a.elements();
  seed.insert(seed.end(), b.elements().begin(), b.elements().end());
  return subgroup_generated(a.parent(), seed);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::all_of(a.elements().begin(), a.elements().end(),
                     [&](Elem x) { return b.contains(x); });
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits) {
  const std::size_t n = g->order();
  if (n > limits.subgroup_cap) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "subgroup enumeration of order " + std::to_string(n) +
                    " exceeds cap " + std::to_string(limits.subgroup_cap));
  }
  struct Node {
    std::vector<Elem> elems;
    std::vector<Elem> gens;
  };
  std::set<std::vector<Elem>> known;
  std::vector<Node> frontier;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Elem> gens;
    if (x != 0) gens.push_back(static_cast<Elem>(x));
    auto elems = close_right(*g, {0}, gens);
    if (known.insert(elems).second) frontier.push_back({std::move(elems), std::move(gens)});
  }
  std::vector<bool> covered(n);
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& k : frontier) {
      std::fill(covered.begin(), covered.end(), false);
      for (Elem e : k.elems) covered[e] = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        // x and x*k give the same extension, so skip the whole left coset.
        for (Elem e : k.elems) covered[g->mul(static_cast<Elem>(x), e)] = true;
        std::vector<Elem> gens = k.gens;
        gens.push_back(static_cast<Elem>(x));
        auto elems = close_right(*g, k.elems, gens);
        if (known.insert(elems).second) next.push_back({std::move(elems), std::move(gens)});
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& e : known) out.emplace_back(g, e);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> out;
  const std::size_t n = g->order();
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    for (std::size_t x = 0; x < n && central; ++x) {
      central = g->mul(static_cast<Elem>(z), static_cast<Elem>(x)) ==
                g->mul(static_cast<Elem>(x), static_cast<Elem>(z));
    }
    if (central) out.push_back(static_cast<Elem>(z));
  }
  return Subgroup(g, std::move(out));
}

Subgroup derived_subgroup(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<bool> seen(n);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem c = g->commutator(static_cast<Elem>(a), static_cast<Elem>(b));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return subgroup_generated(g, comms);
}

bool is_normal_in(const Subgroup& k, const Subgroup& ambient) {
  const auto& g = *k.parent();
  for (Elem x : ambient.elements()) {
    for (Elem y : k.elements()) {
      if (!k.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

bool is_normal(const Subgroup& k) { return is_normal_in(k, whole_group(k.parent())); }

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(n)) {
    throw Error(ErrorCode::NotNormal, "quotient by a subgroup that is not normal");
  }
  const std::size_t order = g->order();
  Quotient q;
  q.projection.assign(order, kNoElem);
  for (std::size_t x = 0; x < order; ++x) {
    if (q.projection[x] != kNoElem) continue;
    const Elem c = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(static_cast<Elem>(x));
    for (Elem y : n.elements()) q.projection[g->mul(static_cast<Elem>(x), y)] = c;
  }
  const std::size_t m = q.representatives.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a * m + b] = q.projection[g->mul(q.representatives[a], q.representatives[b])];
    }
  }
  std::string label;
  if (!g->label().empty()) label = g->label() + "/N";
  q.group = FiniteGroup::from_trusted_table(m, std::move(table), std::move(label));
  return q;
}

SubgroupGroup subgroup_as_group(const Subgroup& k, std::string label) {
  const auto& g = *k.parent();
  SubgroupGroup out;
  out.to_parent = k.elements();
  out.from_parent.assign(g.order(), kNoElem);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    out.from_parent[out.to_parent[i]] = static_cast<Elem>(i);
  }
  const std::size_t m = out.to_parent.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Elem p = out.from_parent[g.mul(out.to_parent[a], out.to_parent[b])];
      if (p == kNoElem) {
        throw Error(ErrorCode::InvalidArgument, "element set is not closed");
      }
      table[a * m + b] = p;
    }
  }
  out.group = FiniteGroup::from_trusted_table(m, std::move(table), std::move(label));
  return out;
}

}  // namespace rrb

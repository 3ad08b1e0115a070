#include "rrb/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hash.hpp"
#include "rrb/io.hpp"

namespace rrb {

namespace {

// Depth-first search for graphs {(R(h), h)}. A node holds the subgroup of
// G ⋉_φ H generated by the pairs chosen so far; since the h-coordinate must
// be injective on it, the subgroup is stored as the partial map h -> g.
class GraphSearch {
 public:
  explicit GraphSearch(const ActionTable& phi)
      : phi_(phi), g_(*phi.g_group()), h_(*phi.h_group()), nh_(h_.order()) {
    // H in BFS order from a greedy generating set; the next partner is always
    // chosen for the first uncovered element in this order.
    auto gens = generating_set(h_);
    std::vector<bool> seen(nh_, false);
    seen[0] = true;
    order_.push_back(0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Elem s : gens) {
        Elem y = h_.mul(order_[i], s);
        if (!seen[y]) {
          seen[y] = true;
          order_.push_back(y);
        }
      }
    }
  }

  struct Node {
    std::vector<Elem> r;  // kNoElem where h is not yet covered
    std::vector<std::pair<Elem, Elem>> gens;
    std::size_t covered = 0;
  };

  Node root() const {
    Node n;
    n.r.assign(nh_, kNoElem);
    n.r[0] = 0;
    n.covered = 1;
    return n;
  }

  Elem next_uncovered(const Node& n) const {
    for (Elem h : order_) {
      if (n.r[h] == kNoElem) return h;
    }
    return kNoElem;
  }

  // Adds (g, h) as a generator and recloses; false on a collision.
  bool extend(const Node& parent, Elem h, Elem g, Node& child) const {
    child.gens = parent.gens;
    child.gens.emplace_back(g, h);
    child.r.assign(nh_, kNoElem);
    child.r[0] = 0;
    std::vector<Elem> list{0};
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Elem xh = list[i];
      const Elem xg = child.r[xh];
      for (auto [sg, sh] : child.gens) {
        const Elem yg = g_.mul(xg, sg);
        const Elem yh = h_.mul(xh, phi_.apply(xg, sh));
        if (child.r[yh] == kNoElem) {
          child.r[yh] = yg;
          list.push_back(yh);
        } else if (child.r[yh] != yg) {
          return false;
        }
      }
    }
    child.covered = list.size();
    return true;
  }

  void descend(const Node& node, std::vector<OperatorArray>& out) const {
    if (node.covered == nh_) {
      out.push_back(node.r);
      return;
    }
    const Elem h = next_uncovered(node);
    Node child;
    for (std::size_t g = 0; g < g_.order(); ++g) {
      if (extend(node, h, static_cast<Elem>(g), child)) descend(child, out);
    }
  }

  std::size_t nh() const noexcept { return nh_; }
  std::size_t ng() const noexcept { return g_.order(); }

 private:
  const ActionTable& phi_;
  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::size_t nh_;
  std::vector<Elem> order_;
};

std::vector<Elem> members_of(const SemidirectProduct& sdp, const OperatorArray& r) {
  std::vector<Elem> e(r.size());
  for (std::size_t h = 0; h < r.size(); ++h) e[h] = sdp.pair(r[h], static_cast<Elem>(h));
  return e;
}

bool c_map_bijective(const SemidirectProduct& sdp, const Subgroup& m) {
  const std::size_t nh = sdp.h->order();
  if (m.size() != nh) return false;
  std::vector<bool> hit(nh, false);
  for (Elem x : m.elements()) {
    const Elem c = sdp.c_map[x];
    // C lands in embed_H(H), whose members are the pairs (1, h) = index h.
    if (c >= nh || hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

}  // namespace

std::vector<OperatorArray> rbo_backtrack(const ActionTable& phi, const Limits& limits) {
  GraphSearch search(phi);
  auto root = search.root();
  std::vector<OperatorArray> out;
  if (root.covered == search.nh()) {
    out.push_back(root.r);
    return out;
  }
  const Elem h = search.next_uncovered(root);
  const std::size_t ng = search.ng();
  const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(ng)));
  std::vector<std::vector<OperatorArray>> parts(jobs);
  auto work = [&](unsigned w) {
    GraphSearch::Node child;
    for (std::size_t g = w; g < ng; g += jobs) {
      if (search.extend(root, h, static_cast<Elem>(g), child)) search.descend(child, parts[w]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

SSet s_set(const ActionTable& phi, SStrategy strategy, const Limits& limits) {
  SSet out{semidirect_product(phi, limits), {}};
  if (strategy == SStrategy::Subgroups) {
    for (auto& m : all_subgroups(out.sdp.group, limits)) {
      if (c_map_bijective(out.sdp, m)) out.members.push_back(std::move(m));
    }
  } else {
    for (const auto& r : rbo_backtrack(phi, limits)) {
      out.members.emplace_back(out.sdp.group, members_of(out.sdp, r));
    }
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements() < b.elements(); });
  return out;
}

RelRB rbo_from_subgroup(const ActionTable& phi, const SemidirectProduct& sdp,
                        const Subgroup& m) {
  if (!c_map_bijective(sdp, m)) {
    throw Error(ErrorCode::NotInS, "C restricted to the subgroup is not a bijection onto H (|M| = " +
                                       std::to_string(m.size()) + ")");
  }
  std::vector<Elem> r(sdp.h->order());
  for (Elem x : m.elements()) r[sdp.c_map[x]] = sdp.g_part(x);
  return RelRB(phi, std::move(r));
}

std::vector<OperatorArray> brute_force_rbo(const ActionTable& phi, const Limits& limits) {
  const std::size_t nh = phi.h_group()->order(), ng = phi.g_group()->order();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < nh; ++i) {
    if (space > limits.brute_force_cap / ng + 1) {
      space = limits.brute_force_cap + 1;
      break;
    }
    space *= ng;
  }
  if (space > limits.brute_force_cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "brute force over |G|^|H| = " + std::to_string(ng) + "^" + std::to_string(nh) +
                    " maps exceeds cap " + std::to_string(limits.brute_force_cap));
  }
  std::vector<OperatorArray> out;
  OperatorArray r(nh, 0);
  while (true) {
    if (!find_rrb_violation(phi, r)) out.push_back(r);
    std::size_t i = nh;
    while (i > 0) {
      --i;
      if (++r[i] < ng) break;
      r[i] = 0;
      if (i == 0) return out;
    }
    if (nh == 0) return out;
  }
}

std::vector<ActionTable> enumerate_actions(const GroupPtr& g, const GroupPtr& h,
                                           const Limits& limits) {
  auto auts = automorphisms(h, limits);
  // Aut(H) as a group under composition, identity first.
  auto id = identity_hom(h);
  auto it = std::find_if(auts.begin(), auts.end(),
                         [&](const GroupHom& a) { return a.image == id.image; });
  std::rotate(auts.begin(), it, it + 1);
  const std::size_t m = auts.size();
  if (m > limits.order_cap) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "|Aut(H)| = " + std::to_string(m) + " exceeds cap " +
                    std::to_string(limits.order_cap));
  }
  std::unordered_map<std::vector<Elem>, Elem, detail::VectorHash> index;
  std::vector<Permutation> perms(m);
  for (std::size_t i = 0; i < m; ++i) {
    perms[i] = auts[i].image;
    index.emplace(perms[i], static_cast<Elem>(i));
  }
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = index.at(compose(perms[i], perms[j]));
  }
  GroupPtr aut = FiniteGroup::from_trusted_table(m, [&] {
    std::vector<Elem> flat;
    flat.reserve(m * m);
    for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  }(), "Aut(" + h->label() + ")");
  std::vector<ActionTable> out;
  for_each_hom(*g, *aut, {}, false, [&](std::span<const Elem> hom) {
    out.push_back(ActionTable::from_aut_hom(g, h, hom, perms));
    return true;
  });
  return out;
}

EquivalenceClasses rb_equivalence_classes(const GroupPtr& g,
                                          const std::vector<OperatorArray>& operators,
                                          EquivalenceRule rule, const Limits& limits) {
  const std::size_t n = g->order(), k = operators.size();
  std::vector<Elem> proj(n);
  if (rule == EquivalenceRule::ModCenter) {
    proj = quotient(g, center(g)).projection;
  } else {
    std::iota(proj.begin(), proj.end(), Elem{0});
  }
  // Aut(G) acts on operators by A -> ψ A ψ^-1; classes are the orbits of the
  // projected arrays.
  std::unordered_map<std::vector<Elem>, std::size_t, detail::VectorHash> by_key;
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> key(n);
    for (std::size_t x = 0; x < n; ++x) key[x] = proj[operators[i][x]];
    auto [it, fresh] = by_key.emplace(std::move(key), i);
    if (!fresh) unite(it->second, i);
  }
  auto auts = automorphisms(g, limits);
  std::vector<Elem> key(n);
  for (const auto& psi : auts) {
    auto psi_inv = invert_bijection(psi.image);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t x = 0; x < n; ++x) key[x] = proj[psi(operators[i][psi_inv[x]])];
      auto it = by_key.find(key);
      if (it != by_key.end()) unite(it->second, i);
    }
  }
  // Union by least index keeps the root at the least operator of the class
  // once operators are sorted; sort explicitly to stay independent of input order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return operators[a] < operators[b]; });
  EquivalenceClasses out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i : idx) {
    auto [it, fresh] = slot.emplace(find(i), out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.representatives.push_back(i);
    }
    out.classes[it->second].push_back(i);
  }
  for (auto& c : out.classes) std::sort(c.begin(), c.end());
  return out;
}

EnumerationReport enumerate_rbo(const ActionTable& phi, const EnumerateOptions& options,
                                const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport rep;
  rep.h_label = phi.h_group()->label();
  rep.g_label = phi.g_group()->label();
  rep.action_index = options.action_index;
  rep.strategy = options.strategy;
  if (options.strategy == SStrategy::Backtrack) {
    rep.operators = rbo_backtrack(phi, limits);
  } else {
    auto s = s_set(phi, SStrategy::Subgroups, limits);
    for (const auto& m : s.members) rep.operators.push_back(rbo_from_subgroup(phi, s.sdp, m).r());
    std::sort(rep.operators.begin(), rep.operators.end());
  }
  rep.operator_count = rep.operators.size();
  if (options.classes) {
    const auto& g = phi.g_group();
    if (g->table_rows() != phi.h_group()->table_rows()) {
      throw Error(ErrorCode::InvalidArgument,
                  "operator classes require H = G with the adjoint action");
    }
    auto adj = ActionTable::adjoint(g);
    for (std::size_t x = 0; x < g->order(); ++x) {
      for (std::size_t y = 0; y < g->order(); ++y) {
        if (adj.apply(static_cast<Elem>(x), static_cast<Elem>(y)) !=
            phi.apply(static_cast<Elem>(x), static_cast<Elem>(y))) {
          throw Error(ErrorCode::InvalidArgument,
                      "operator classes require the adjoint action");
        }
      }
    }
    rep.class_count = rb_equivalence_classes(g, rep.operators, options.rule, limits).classes.size();
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

const std::vector<int>& census96_ids() {
  static const std::vector<int> ids{64, 70, 71, 72, 227};
  return ids;
}

std::size_t census96_expected(int id) {
  switch (id) {
    case 64: return 352;
    case 70: return 1512;
    case 71: return 528;
    case 72: return 552;
    case 227: return 4504;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "SmallGroup(96, " + std::to_string(id) + ") is not one of the centerless groups");
  }
}

std::filesystem::path census96_group_file(const std::filesystem::path& data_dir, int id) {
  census96_expected(id);
  return data_dir / "groups" / "order96" / ("sg96_" + std::to_string(id) + ".json");
}

EnumerationReport census_order96(int id, bool extended, const std::filesystem::path& data_dir,
                                 const Limits& limits) {
  if (!extended) {
    throw Error(ErrorCode::ExtendedModeRequired,
                "the order-96 census runs only in extended mode");
  }
  GroupPtr g = read_group_file(census96_group_file(data_dir, id), limits);
  if (g->order() != 96 || !center(g).is_trivial()) {
    throw Error(ErrorCode::MalformedInput, "group file for id " + std::to_string(id) +
                                               " is not a centerless group of order 96");
  }
  EnumerateOptions opts;
  opts.strategy = SStrategy::Backtrack;
  auto rep = enumerate_rbo(ActionTable::adjoint(g), opts, limits);
  rep.adjoint = true;
  return rep;
}

}  // namespace rrb

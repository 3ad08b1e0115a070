#include "rrb/catalog.hpp"

#include <map>

namespace rrb {

namespace {

Permutation cycle(std::size_t degree, std::initializer_list<std::vector<Elem>> cycles) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<Elem>(i);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

struct Entry {
  std::size_t degree;
  std::vector<Permutation> generators;
};

const std::map<std::string, Entry, std::less<>>& entries() {
  static const std::map<std::string, Entry, std::less<>> table = [] {
    std::map<std::string, Entry, std::less<>> t;
    for (std::size_t n = 1; n <= 12; ++n) {
      std::vector<Elem> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Elem>(i);
      t["Z" + std::to_string(n)] =
          Entry{n, n == 1 ? std::vector<Permutation>{} : std::vector<Permutation>{cycle(n, {c})}};
    }
    t["V4"] = Entry{4, {cycle(4, {{0, 1}, {2, 3}}), cycle(4, {{0, 2}, {1, 3}})}};
    t["S3"] = Entry{3, {cycle(3, {{0, 1, 2}}), cycle(3, {{0, 1}})}};
    t["Z2xZ4"] = Entry{6, {cycle(6, {{0, 1}}), cycle(6, {{2, 3, 4, 5}})}};
    t["Z2^3"] = Entry{6, {cycle(6, {{0, 1}}), cycle(6, {{2, 3}}), cycle(6, {{4, 5}})}};
    t["D4"] = Entry{4, {cycle(4, {{0, 1, 2, 3}}), cycle(4, {{1, 3}})}};
    // Right regular representation of the quaternion group.
    t["Q8"] = Entry{8, {cycle(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                        cycle(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})}};
    t["A4"] = Entry{4, {cycle(4, {{0, 1, 2}}), cycle(4, {{0, 1}, {2, 3}})}};
    t["D6"] = Entry{6, {cycle(6, {{0, 1, 2, 3, 4, 5}}), cycle(6, {{1, 5}, {2, 4}})}};
    return t;
  }();
  return table;
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>((i + 1) % n);
    gens.push_back(std::move(p));
  }
  return group_from_permutations(n, gens, "Z" + std::to_string(n));
}

GroupPtr catalog_group(std::string_view name) {
  auto it = entries().find(name);
  if (it == entries().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown catalog group " + std::string(name));
  }
  return group_from_permutations(it->second.degree, it->second.generators, it->first);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : entries()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::vector<std::string>& groups_up_to_order_8() {
  static const std::vector<std::string> names{"Z1", "Z2",    "Z3",   "Z4", "V4", "Z5", "Z6",
                                              "S3", "Z7",    "Z8",   "Z2xZ4", "Z2^3", "D4", "Q8"};
  return names;
}

}  // namespace rrb

#include "rrb/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace rrb {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      out += Json(it.key()).dump();
      out += ": ";
      dump(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ", ";
        first = false;
        out += e.dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      dump(e, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

void check_format(const Json& j, std::string_view what) {
  if (!j.is_object()) malformed(std::string(what) + ": expected a JSON object");
  if (j.contains("format") && j["format"] != kFormatVersion) {
    malformed(std::string(what) + ": unsupported format version");
  }
}

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                std::string_view what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto k : allowed) ok = ok || it.key() == k;
    if (!ok) malformed(std::string(what) + ": unexpected key \"" + it.key() + "\"");
  }
}

std::vector<Elem> index_array(const Json& j, std::string_view what) {
  if (!j.is_array()) malformed(std::string(what) + ": expected an array of indices");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
      malformed(std::string(what) + ": expected non-negative integers");
    }
    const auto v = e.get<unsigned long long>();
    if (v >= kNoElem) malformed(std::string(what) + ": index out of range");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::vector<std::vector<Elem>> index_rows(const Json& j, std::string_view what) {
  if (!j.is_array()) malformed(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : j) rows.push_back(index_array(r, what));
  return rows;
}

Json rows_json(const FiniteGroup& g) {
  Json rows = Json::array();
  for (const auto& r : g.table_rows()) rows.push_back(r);
  return rows;
}

GroupPtr table_with_identity_zero(const Json& j, std::string_view what) {
  auto rows = index_rows(j, what);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[0].size() != n || rows[i].size() != n || rows[0][i] != i || rows[i][0] != i) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + ": brace tables must be square with identity at index 0");
    }
  }
  return group_from_table(rows);
}

}  // namespace

std::string canonical_json(const Json& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["format"] = kFormatVersion;
  if (!g.label().empty()) j["label"] = g.label();
  if (const auto& p = g.presentation()) {
    j["degree"] = p->degree;
    Json gens = Json::array();
    for (const auto& gen : p->generators) gens.push_back(gen);
    j["generators"] = std::move(gens);
  } else {
    j["table"] = rows_json(g);
  }
  return j;
}

GroupPtr group_from_json(const Json& j, const Limits& limits) {
  check_format(j, "group");
  check_keys(j, {"format", "label", "table", "degree", "generators"}, "group");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) malformed("group: label must be a string");
    label = j["label"].get<std::string>();
  }
  const bool has_table = j.contains("table");
  const bool has_perm = j.contains("degree") || j.contains("generators");
  if (has_table == has_perm) malformed("group: give either \"table\" or \"degree\" + \"generators\"");
  if (has_table) {
    auto rows = index_rows(j["table"], "group table");
    if (rows.size() > limits.order_cap) {
      throw Error(ErrorCode::OrderLimitExceeded, "group table of order " +
                                                     std::to_string(rows.size()) + " exceeds cap");
    }
    return group_from_table(rows, std::move(label));
  }
  if (!j.contains("degree") || !j.contains("generators") || !j["degree"].is_number_unsigned()) {
    malformed("group: \"degree\" and \"generators\" are both required");
  }
  const auto degree = j["degree"].get<std::size_t>();
  auto gens = index_rows(j["generators"], "group generators");
  return group_from_permutations(degree, gens, std::move(label), limits.order_cap);
}

GroupPtr read_group_file(const std::filesystem::path& path, const Limits& limits) {
  return group_from_json(read_json_file(path), limits);
}

Json action_to_json(const ActionTable& phi) {
  Json perms = Json::array();
  for (const auto& p : phi.perms()) perms.push_back(p);
  return Json{{"format", kFormatVersion}, {"phi", std::move(perms)}};
}

ActionTable action_from_json(const Json& j, const GroupPtr& g, const GroupPtr& h) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "trivial") return ActionTable::trivial(g, h);
    if (s == "adjoint") {
      if (g->table_rows() != h->table_rows()) {
        throw Error(ErrorCode::InvalidAction, "the adjoint action needs H = G");
      }
      return ActionTable(g, h, ActionTable::adjoint(h).perms());
    }
    malformed("action: unknown named action \"" + s + "\"");
  }
  return ActionTable(g, h, index_rows(j, "action"));
}

Json relrb_to_json(const RelRB& rrb) {
  Json j;
  j["format"] = kFormatVersion;
  j["h"] = group_to_json(*rrb.h_group());
  j["g"] = group_to_json(*rrb.g_group());
  j["h"].erase("format");
  j["g"].erase("format");
  j["phi"] = action_to_json(rrb.action())["phi"];
  j["r"] = rrb.r();
  return j;
}

RelRB relrb_from_json(const Json& j, const std::filesystem::path& base_dir,
                      const Limits& limits) {
  check_format(j, "operator");
  check_keys(j, {"format", "label", "h", "g", "phi", "r"}, "operator");
  for (auto k : {"h", "g", "r"}) {
    if (!j.contains(k)) malformed(std::string("operator: missing \"") + k + "\"");
  }
  std::map<std::string, GroupPtr> cache;
  auto load = [&](const Json& ref) -> GroupPtr {
    std::string key;
    Json obj;
    if (ref.is_string()) {
      const auto path = base_dir / ref.get<std::string>();
      key = "path:" + std::filesystem::weakly_canonical(path).string();
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      obj = read_json_file(path);
    } else {
      key = "inline:" + ref.dump();
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      obj = ref;
    }
    GroupPtr g = group_from_json(obj, limits);
    cache.emplace(key, g);
    return g;
  };
  GroupPtr h = load(j["h"]);
  GroupPtr g = load(j["g"]);
  ActionTable phi = j.contains("phi") ? action_from_json(j["phi"], g, h) : ActionTable::trivial(g, h);
  auto r = index_array(j["r"], "operator r");
  if (r.size() != h->order()) {
    malformed("operator: \"r\" has " + std::to_string(r.size()) + " entries, |H| = " +
              std::to_string(h->order()));
  }
  for (Elem v : r) {
    if (v >= g->order()) malformed("operator: value " + std::to_string(v) + " is not in G");
  }
  return RelRB(std::move(phi), std::move(r));
}

RelRB read_relrb_file(const std::filesystem::path& path, const Limits& limits) {
  return relrb_from_json(read_json_file(path), path.parent_path(), limits);
}

Json brace_to_json(const SkewBrace& b) {
  return Json{{"format", kFormatVersion}, {"dot", rows_json(*b.dot)}, {"circ", rows_json(*b.circ)}};
}

SkewBrace brace_from_json(const Json& j) {
  check_format(j, "brace");
  check_keys(j, {"format", "label", "dot", "circ"}, "brace");
  if (!j.contains("dot") || !j.contains("circ")) malformed("brace: \"dot\" and \"circ\" required");
  GroupPtr dot = table_with_identity_zero(j["dot"], "brace dot");
  GroupPtr circ = table_with_identity_zero(j["circ"], "brace circ");
  return validate_brace(std::move(dot), std::move(circ));
}

SkewBrace read_brace_file(const std::filesystem::path& path) {
  return brace_from_json(read_json_file(path));
}

Json ybe_to_json(const YBEMap& m) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < m.n; ++a) {
    for (std::size_t b = 0; b < m.n; ++b) {
      auto [f, g] = m(static_cast<Elem>(a), static_cast<Elem>(b));
      rows.push_back(Json::array({a, b, f, g}));
    }
  }
  return Json{{"format", kFormatVersion}, {"order", m.n}, {"rows", std::move(rows)}};
}

Json witness_to_json(const IsoclinismWitness& w) {
  return Json{{"format", kFormatVersion},
              {"psi1", w.psi1},
              {"eta1", w.eta1},
              {"psi2", w.psi2},
              {"eta2", w.eta2}};
}

IsoclinismWitness witness_from_json(const Json& j) {
  check_format(j, "witness");
  check_keys(j, {"format", "psi1", "eta1", "psi2", "eta2"}, "witness");
  IsoclinismWitness w;
  for (auto [key, slot] : {std::pair{"psi1", &w.psi1}, std::pair{"eta1", &w.eta1},
                           std::pair{"psi2", &w.psi2}, std::pair{"eta2", &w.eta2}}) {
    if (!j.contains(key)) malformed(std::string("witness: missing \"") + key + "\"");
    *slot = index_array(j[key], key);
  }
  return w;
}

Json report_to_json(const EnumerationReport& r, bool timing) {
  Json j;
  j["format"] = kFormatVersion;
  j["h_label"] = r.h_label;
  j["g_label"] = r.g_label;
  if (r.adjoint) {
    j["action"] = "adjoint";
  } else {
    j["action_index"] = r.action_index;
  }
  j["operator_count"] = r.operator_count;
  if (r.class_count) j["class_count"] = *r.class_count;
  Json ops = Json::array();
  for (const auto& o : r.operators) ops.push_back(o);
  j["operators"] = std::move(ops);
  j["strategy"] = r.strategy == SStrategy::Backtrack ? "backtrack" : "subgroups";
  if (timing) j["elapsed"] = r.elapsed_seconds;
  return j;
}

Json error_to_json(const Error& e) {
  return Json{{"format", kFormatVersion},
              {"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
}

}  // namespace rrb

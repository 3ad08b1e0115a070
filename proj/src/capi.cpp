#include "rrb/rrb.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <new>
#include <string>

#include "rrb/brace.hpp"
#include "rrb/catalog.hpp"
#include "rrb/enumerate.hpp"
#include "rrb/io.hpp"
#include "rrb/isoclinism.hpp"

struct rrb_group {
  rrb::GroupPtr g;
};
struct rrb_operator {
  rrb::RelRB rrb;
};
struct rrb_brace {
  rrb::SkewBrace b;
};

namespace {

using rrb::Elem;
using rrb::Error;
using rrb::ErrorCode;
using rrb::Json;

thread_local std::string g_last_error;

// ErrorCode values follow rrb_status shifted by one.
rrb_status to_status(ErrorCode c) { return static_cast<rrb_status>(static_cast<int>(c) + 1); }

template <class F>
rrb_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return RRB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RRB_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RRB_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const Json& j) {
  require(out, "output pointer");
  *out = dup_string(rrb::canonical_json(j));
}

rrb::Limits limits_of(const rrb_limits* l) {
  rrb::Limits out;
  if (l != nullptr) {
    out.order_cap = l->order_cap;
    out.subgroup_cap = l->subgroup_cap;
    out.brute_force_cap = l->brute_force_cap;
    out.isoclinism_cap = l->isoclinism_cap;
    out.jobs = std::max(1u, l->jobs);
  }
  return out;
}

bool same_group(const rrb::GroupPtr& a, const rrb::GroupPtr& b) {
  return a == b || (a->label() == b->label() && a->table_rows() == b->table_rows());
}

// H and G given as the same group share one pointer so that H = G holds by
// identity in everything downstream.
std::pair<rrb::GroupPtr, rrb::GroupPtr> carriers(const rrb_group* h, const rrb_group* g) {
  require(h, "H");
  require(g, "G");
  if (same_group(h->g, g->g)) return {h->g, h->g};
  return {h->g, g->g};
}

struct IndexedAction {
  rrb::ActionTable phi;
  std::size_t index;
  bool adjoint;
};

std::vector<IndexedAction> select_actions(const rrb::GroupPtr& h, const rrb::GroupPtr& g,
                                          long action, const rrb::Limits& limits) {
  if (action == RRB_ACTION_ADJOINT) {
    if (h != g) throw Error(ErrorCode::InvalidAction, "the adjoint action needs H = G");
    return {IndexedAction{rrb::ActionTable::adjoint(g), 0, true}};
  }
  if (action < RRB_ACTION_ADJOINT) throw Error(ErrorCode::InvalidArgument, "bad action selector");
  auto all = rrb::enumerate_actions(g, h, limits);
  std::vector<IndexedAction> out;
  if (action == RRB_ACTION_ALL) {
    for (std::size_t i = 0; i < all.size(); ++i) out.push_back({std::move(all[i]), i, false});
    return out;
  }
  const auto i = static_cast<std::size_t>(action);
  if (i >= all.size()) {
    throw Error(ErrorCode::InvalidArgument, "action index " + std::to_string(i) +
                                                " out of range; there are " +
                                                std::to_string(all.size()) + " actions");
  }
  out.push_back({std::move(all[i]), i, false});
  return out;
}

Json failure_json(const std::string& what, Elem a, Elem b) {
  Json j{{"what", what}};
  if (a != rrb::kNoElem) j["a"] = a;
  if (b != rrb::kNoElem) j["b"] = b;
  return j;
}

Json bridge_json(const rrb::BridgeReport& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) {
    j["stage"] = r.stage;
    j["detail"] = r.detail;
    if (r.a != rrb::kNoElem) j["a"] = r.a;
    if (r.b != rrb::kNoElem) j["b"] = r.b;
  }
  if (r.restricted) {
    Json w = rrb::witness_to_json(*r.restricted);
    w.erase("format");
    j["restricted_witness"] = std::move(w);
  } else if (r.ok) {
    j["restricted_witness"] = nullptr;
    j["restricted_detail"] = r.restricted_detail;
  }
  if (r.brace) j["brace_witness"] = Json{{"xi1", r.brace->xi1}, {"xi2", r.brace->xi2}};
  return j;
}

std::string operator_file_name(const IndexedAction& a, std::size_t k) {
  char buf[64];
  if (a.adjoint) {
    std::snprintf(buf, sizeof buf, "rbo_adjoint_%04zu.json", k);
  } else {
    std::snprintf(buf, sizeof buf, "rbo_a%zu_%04zu.json", a.index, k);
  }
  return buf;
}

}  // namespace

extern "C" {

rrb_limits rrb_limits_default(void) {
  const rrb::Limits d;
  return rrb_limits{d.order_cap, d.subgroup_cap, d.brute_force_cap, d.isoclinism_cap, d.jobs};
}

const char* rrb_status_name(rrb_status status) {
  if (status == RRB_OK) return "Ok";
  if (status == RRB_INTERNAL) return "Internal";
  if (status < RRB_OK || status > RRB_INTERNAL) return "Unknown";
  return rrb::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
}

int rrb_status_is_cap(rrb_status status) {
  return status == RRB_ORDER_LIMIT_EXCEEDED || status == RRB_SEARCH_SPACE_TOO_LARGE;
}

const char* rrb_last_error(void) { return g_last_error.c_str(); }

void rrb_string_free(char* s) { std::free(s); }

rrb_status rrb_group_load(const char* path, const rrb_limits* limits, rrb_group** out) {
  return guard([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new rrb_group{rrb::read_group_file(path, limits_of(limits))};
  });
}

rrb_status rrb_group_parse(const char* json, const rrb_limits* limits, rrb_group** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    *out = new rrb_group{rrb::group_from_json(rrb::parse_json(json, "group"), limits_of(limits))};
  });
}

rrb_status rrb_group_catalog(const char* name, rrb_group** out) {
  return guard([&] {
    require(name, "name");
    require(out, "output pointer");
    *out = new rrb_group{rrb::catalog_group(name)};
  });
}

void rrb_group_free(rrb_group* g) { delete g; }

size_t rrb_group_order(const rrb_group* g) { return g == nullptr ? 0 : g->g->order(); }

rrb_status rrb_group_emit(const rrb_group* g, char** out) {
  return guard([&] {
    require(g, "group");
    put(out, rrb::group_to_json(*g->g));
  });
}

rrb_status rrb_group_summary(const rrb_group* g, char** out) {
  return guard([&] {
    require(g, "group");
    const auto& G = g->g;
    std::map<std::size_t, std::size_t> orders;
    for (std::size_t x = 0; x < G->order(); ++x) ++orders[G->element_order(static_cast<Elem>(x))];
    Json hist = Json::array();
    for (auto [o, c] : orders) hist.push_back(Json::array({o, c}));
    Json j{{"format", rrb::kFormatVersion},
           {"label", G->label()},
           {"order", G->order()},
           {"abelian", G->is_abelian()},
           {"center_order", rrb::center(G).size()},
           {"derived_order", rrb::derived_subgroup(G).size()},
           {"element_orders", std::move(hist)}};
    put(out, j);
  });
}

rrb_status rrb_group_automorphisms(const rrb_group* g, const rrb_limits* limits, char** out) {
  return guard([&] {
    require(g, "group");
    const auto auts = rrb::automorphisms(g->g, limits_of(limits));
    put(out, Json{{"format", rrb::kFormatVersion},
                  {"label", g->g->label()},
                  {"order", g->g->order()},
                  {"automorphism_count", auts.size()}});
  });
}

rrb_status rrb_action_count(const rrb_group* g, const rrb_group* h, const rrb_limits* limits,
                            size_t* out) {
  return guard([&] {
    require(out, "output pointer");
    auto [H, G] = carriers(h, g);
    *out = rrb::enumerate_actions(G, H, limits_of(limits)).size();
  });
}

rrb_enumerate_options rrb_enumerate_options_default(void) {
  return rrb_enumerate_options{0, RRB_STRATEGY_BACKTRACK, 0, 0, RRB_RULE_MOD_CENTER, 0, nullptr};
}

rrb_status rrb_rbo_enumerate(const rrb_group* h, const rrb_group* g,
                             const rrb_enumerate_options* options, const rrb_limits* limits,
                             char** out) {
  return guard([&] {
    const rrb_enumerate_options o = options ? *options : rrb_enumerate_options_default();
    const rrb::Limits lim = limits_of(limits);
    auto [H, G] = carriers(h, g);
    rrb::EnumerateOptions eo;
    eo.strategy = o.strategy == RRB_STRATEGY_SUBGROUPS ? rrb::SStrategy::Subgroups
                                                       : rrb::SStrategy::Backtrack;
    eo.classes = o.classes != 0;
    eo.rule = o.rule == RRB_RULE_STRICT ? rrb::EquivalenceRule::Strict
                                        : rrb::EquivalenceRule::ModCenter;
    if (o.emit_dir != nullptr) std::filesystem::create_directories(o.emit_dir);

    auto actions = select_actions(H, G, o.action, lim);
    Json reports = Json::array();
    std::size_t total = 0;
    for (const auto& a : actions) {
      eo.action_index = a.index;
      auto rep = rrb::enumerate_rbo(a.phi, eo, lim);
      rep.adjoint = a.adjoint;
      Json j = rrb::report_to_json(rep, o.timing != 0);
      if (o.oracle) {
        auto brute = rrb::brute_force_rbo(a.phi, lim);
        std::sort(brute.begin(), brute.end());
        j["oracle_operator_count"] = brute.size();
        j["oracle_agrees"] = brute == rep.operators;
      }
      if (o.emit_dir != nullptr) {
        for (std::size_t k = 0; k < rep.operators.size(); ++k) {
          rrb::RelRB op(a.phi, rep.operators[k]);
          rrb::write_text_file(std::filesystem::path(o.emit_dir) / operator_file_name(a, k),
                               rrb::canonical_json(rrb::relrb_to_json(op)));
        }
      }
      total += rep.operator_count;
      reports.push_back(std::move(j));
    }
    if (o.action != RRB_ACTION_ALL) {
      put(out, reports.front());
      return;
    }
    bool agrees = true;
    for (const auto& r : reports) agrees = agrees && r.value("oracle_agrees", true);
    Json j{{"format", rrb::kFormatVersion},
           {"h_label", H->label()},
           {"g_label", G->label()},
           {"action_count", actions.size()},
           {"operator_count", total},
           {"reports", std::move(reports)}};
    if (o.oracle) j["oracle_agrees"] = agrees;
    put(out, j);
  });
}

rrb_status rrb_rbo_graph_experiment(const rrb_group* h, const rrb_group* g, long action,
                                    const rrb_limits* limits, char** out) {
  return guard([&] {
    constexpr std::size_t kMaxOperators = 64;
    const rrb::Limits lim = limits_of(limits);
    auto [H, G] = carriers(h, g);
    if (action == RRB_ACTION_ALL) {
      throw Error(ErrorCode::InvalidArgument, "the graph experiment takes a single action");
    }
    auto a = std::move(select_actions(H, G, action, lim).front());
    auto s = rrb::s_set(a.phi, rrb::SStrategy::Subgroups, lim);
    if (s.members.size() > kMaxOperators) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  std::to_string(s.members.size()) + " operators exceed the experiment cap of " +
                      std::to_string(kMaxOperators));
    }
    std::vector<rrb::RelRB> ops;
    std::vector<rrb::SkewBrace> braces;
    std::vector<rrb::GroupPtr> graphs;
    Json per_op = Json::array();
    for (const auto& m : s.members) {
      ops.push_back(rrb::rbo_from_subgroup(a.phi, s.sdp, m));
      braces.push_back(rrb::induced_brace(ops.back()));
      graphs.push_back(rrb::subgroup_as_group(m).group);
      const auto img = rrb::restrict_to_image(ops.back()).image.group->order();
      per_op.push_back(Json{{"r", ops.back().r()},
                            {"image_order", img},
                            {"graph_normal", rrb::is_normal(m)},
                            {"brace_trivial", rrb::is_trivial_brace(braces.back())}});
    }
    Json pairs = Json::array();
    std::size_t iso_graph_non_iso_brace = 0;
    std::size_t iso_graph_non_iso_image = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        const bool gi = rrb::find_isomorphism(graphs[i], graphs[j]).has_value();
        const bool bi = rrb::find_brace_isomorphism(braces[i], braces[j]).has_value();
        const bool ii = rrb::find_isomorphism(rrb::restrict_to_image(ops[i]).image.group,
                                              rrb::restrict_to_image(ops[j]).image.group)
                            .has_value();
        iso_graph_non_iso_brace += gi && !bi;
        iso_graph_non_iso_image += gi && !ii;
        pairs.push_back(Json{{"i", i},
                             {"j", j},
                             {"graphs_isomorphic", gi},
                             {"braces_isomorphic", bi},
                             {"images_isomorphic", ii}});
      }
    }
    Json j{{"format", rrb::kFormatVersion},
           {"h_label", H->label()},
           {"g_label", G->label()},
           {"operators", std::move(per_op)},
           {"pairs", std::move(pairs)},
           {"isomorphic_graphs_non_isomorphic_braces", iso_graph_non_iso_brace},
           {"isomorphic_graphs_non_isomorphic_images", iso_graph_non_iso_image}};
    if (a.adjoint) {
      j["action"] = "adjoint";
    } else {
      j["action_index"] = a.index;
    }
    put(out, j);
  });
}

rrb_status rrb_census96(int id, int extended, const char* data_dir, int timing,
                        const rrb_limits* limits, char** out) {
  return guard([&] {
    require(data_dir, "data_dir");
    auto rep = rrb::census_order96(id, extended != 0, data_dir, limits_of(limits));
    Json j = rrb::report_to_json(rep, timing != 0);
    j["id"] = id;
    j["expected_operator_count"] = rrb::census96_expected(id);
    j["matches_expected"] = rep.operator_count == rrb::census96_expected(id);
    put(out, j);
  });
}

rrb_status rrb_operator_load(const char* path, const rrb_limits* limits, rrb_operator** out) {
  return guard([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new rrb_operator{rrb::read_relrb_file(path, limits_of(limits))};
  });
}

rrb_status rrb_operator_parse(const char* json, const char* base_dir, const rrb_limits* limits,
                              rrb_operator** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    *out = new rrb_operator{rrb::relrb_from_json(rrb::parse_json(json, "operator"),
                                                 base_dir ? base_dir : ".", limits_of(limits))};
  });
}

void rrb_operator_free(rrb_operator* op) { delete op; }

rrb_status rrb_operator_emit(const rrb_operator* op, char** out) {
  return guard([&] {
    require(op, "operator");
    put(out, rrb::relrb_to_json(op->rrb));
  });
}

rrb_status rrb_operator_report(const rrb_operator* op, char** out) {
  return guard([&] {
    require(op, "operator");
    const auto& r = op->rrb;
    const auto brace = rrb::induced_brace(r);
    Json j{{"format", rrb::kFormatVersion},
           {"valid", true},
           {"h_label", r.h_group()->label()},
           {"g_label", r.g_group()->label()},
           {"h_order", r.h_group()->order()},
           {"g_order", r.g_group()->order()},
           {"bijective", r.is_bijective()},
           {"image_order", rrb::restrict_to_image(r).image.group->order()},
           {"image_in_action_kernel", rrb::triviality_criterion(r)},
           {"brace_trivial", rrb::is_trivial_brace(brace)},
           {"center_order", rrb::center_part(r).size()},
           {"commutator_order", rrb::h_phi_subgroup(r).size()},
           {"omega_violations", rrb::omega_violations(r)}};
    put(out, j);
  });
}

rrb_status rrb_operator_isoclinic(const rrb_operator* a, const rrb_operator* b,
                                  const rrb_limits* limits, char** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    auto w = rrb::rrb_isoclinic(a->rrb, b->rrb, limits_of(limits));
    Json j{{"format", rrb::kFormatVersion}, {"isoclinic", w.has_value()}};
    if (w) {
      Json wj = rrb::witness_to_json(*w);
      wj.erase("format");
      j["witness"] = std::move(wj);
      j["bridge"] = bridge_json(rrb::check_bridge_theorem(a->rrb, b->rrb, *w));
    }
    put(out, j);
  });
}

rrb_status rrb_operator_check_witness(const rrb_operator* a, const rrb_operator* b,
                                      const char* witness_json, char** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(witness_json, "witness");
    const auto w = rrb::witness_from_json(rrb::parse_json(witness_json, "witness"));
    const auto fail = rrb::check_isoclinism(a->rrb, b->rrb, w);
    Json j{{"format", rrb::kFormatVersion}, {"valid", !fail.has_value()}};
    if (fail) j["failure"] = failure_json(fail->what, fail->a, fail->b);
    j["bridge"] = bridge_json(rrb::check_bridge_theorem(a->rrb, b->rrb, w));
    put(out, j);
  });
}

rrb_status rrb_converse_counterexample(const rrb_limits* limits, char** out) {
  return guard([&] {
    const rrb::Limits lim = limits_of(limits);
    std::vector<std::string> names;
    for (const auto& n : rrb::groups_up_to_order_8()) {
      if (rrb::catalog_group(n)->is_abelian()) names.push_back(n);
    }
    Json pairs = Json::array();
    std::size_t found = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t k = i + 1; k < names.size(); ++k) {
        auto h = rrb::catalog_group(names[i]);
        auto l = rrb::catalog_group(names[k]);
        const auto bh = rrb::validate_brace(h, h);
        const auto bk = rrb::validate_brace(l, l);
        const bool braces = rrb::braces_isoclinic(bh, bk, lim).has_value();
        const bool rrbs =
            rrb::rrb_isoclinic(rrb::induced_rrb(bh), rrb::induced_rrb(bk), lim).has_value();
        const bool counter = braces && !rrbs;
        found += counter;
        pairs.push_back(Json{{"h", names[i]},
                             {"k", names[k]},
                             {"braces_isoclinic", braces},
                             {"rrbs_isoclinic", rrbs},
                             {"counterexample", counter}});
      }
    }
    put(out, Json{{"format", rrb::kFormatVersion},
                  {"family", "trivial braces on non-isomorphic abelian groups of order <= 8"},
                  {"pairs", std::move(pairs)},
                  {"counterexample_count", found}});
  });
}

rrb_status rrb_brace_load(const char* path, rrb_brace** out) {
  return guard([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new rrb_brace{rrb::read_brace_file(path)};
  });
}

rrb_status rrb_brace_parse(const char* json, rrb_brace** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    *out = new rrb_brace{rrb::brace_from_json(rrb::parse_json(json, "brace"))};
  });
}

void rrb_brace_free(rrb_brace* b) { delete b; }

rrb_status rrb_brace_verify(const rrb_brace* b, char** out) {
  return guard([&] {
    require(b, "brace");
    const auto& br = b->b;
    put(out, Json{{"format", rrb::kFormatVersion},
                  {"valid", true},
                  {"order", br.order()},
                  {"trivial", rrb::is_trivial_brace(br)},
                  {"biskew", rrb::is_biskew(br)},
                  {"annihilator_order", rrb::annihilator(br).size()},
                  {"commutator_order", rrb::brace_commutator(br).size()}});
  });
}

rrb_status rrb_brace_ybe(const rrb_brace* b, int emit_rows, char** out) {
  return guard([&] {
    require(b, "brace");
    const auto m = rrb::ybe_map(b->b);
    Json j = rrb::ybe_to_json(m);
    if (!emit_rows) j.erase("rows");
    j["braid"] = rrb::verify_ybe(m);
    j["qybe"] = rrb::verify_qybe(m);
    j["nondegenerate"] = rrb::verify_nondegenerate(m);
    j["involutive"] = rrb::is_involutive(m);
    put(out, j);
  });
}

rrb_status rrb_brace_isoclinic(const rrb_brace* a, const rrb_brace* b, const rrb_limits* limits,
                               char** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    auto w = rrb::braces_isoclinic(a->b, b->b, limits_of(limits));
    Json j{{"format", rrb::kFormatVersion}, {"isoclinic", w.has_value()}};
    if (w) j["witness"] = Json{{"xi1", w->xi1}, {"xi2", w->xi2}};
    put(out, j);
  });
}

}  // extern "C"

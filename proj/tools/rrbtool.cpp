// Command-line front end. Talks to the library only through rrb.h.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rrb/rrb.h"

#ifndef RRB_DATA_DIR
#define RRB_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 64;
constexpr int kExitMalformed = 65;
constexpr int kExitInternal = 70;

struct Failure {
  rrb_status status;
  std::string message;
};

int exit_code(rrb_status s) {
  if (s == RRB_OK) return kExitOk;
  if (rrb_status_is_cap(s)) return kExitCap;
  if (s == RRB_MALFORMED_INPUT) return kExitMalformed;
  if (s == RRB_INTERNAL) return kExitInternal;
  return kExitValidation;
}

void check(rrb_status s) {
  if (s != RRB_OK) throw Failure{s, rrb_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  rrb_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{RRB_MALFORMED_INPUT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GroupHandle = std::unique_ptr<rrb_group, Deleter<rrb_group, rrb_group_free>>;
using OperatorHandle = std::unique_ptr<rrb_operator, Deleter<rrb_operator, rrb_operator_free>>;
using BraceHandle = std::unique_ptr<rrb_brace, Deleter<rrb_brace, rrb_brace_free>>;

// Global state shared by the subcommand handlers.
struct Session {
  rrb_limits limits = rrb_limits_default();
  bool timing = false;
  std::string runs_dir;
  std::vector<std::string> inputs;

  GroupHandle group(const std::string& path) {
    inputs.push_back(path);
    rrb_group* g = nullptr;
    check(rrb_group_load(path.c_str(), &limits, &g));
    return GroupHandle(g);
  }
  OperatorHandle op(const std::string& path) {
    inputs.push_back(path);
    rrb_operator* o = nullptr;
    check(rrb_operator_load(path.c_str(), &limits, &o));
    return OperatorHandle(o);
  }
  BraceHandle brace(const std::string& path) {
    inputs.push_back(path);
    rrb_brace* b = nullptr;
    check(rrb_brace_load(path.c_str(), &b));
    return BraceHandle(b);
  }
};

void write_manifest(const Session& s, const std::vector<std::string>& argv,
                    const std::string& result, double wall) {
  const std::string digest = sha256_hex(result);
  const fs::path dir = fs::path(s.runs_dir) / digest;
  fs::create_directories(dir);
  Json inputs = Json::array();
  for (const auto& p : s.inputs) inputs.push_back(Json{{"path", p}, {"sha256", sha256_hex(read_file(p))}});
  Json m{{"format", 1},
         {"command_line", argv},
         {"inputs", std::move(inputs)},
         {"caps",
          {{"order_cap", s.limits.order_cap},
           {"subgroup_cap", s.limits.subgroup_cap},
           {"brute_force_cap", s.limits.brute_force_cap},
           {"isoclinism_cap", s.limits.isoclinism_cap},
           {"jobs", s.limits.jobs}}},
         {"wall_time_seconds", wall},
         {"result_sha256", digest}};
  std::ofstream(dir / "result.json", std::ios::binary) << result;
  std::ofstream(dir / "manifest.json", std::ios::binary) << m.dump(2) << "\n";
}

void emit_error(rrb_status status, const std::string& message) {
  Json j{{"format", 1}, {"error", {{"code", rrb_status_name(status)}, {"message", message}}}};
  std::cout << j.dump(2) << "\n";
}

long parse_phi(const std::string& phi) {
  if (phi == "trivial") return 0;
  if (phi == "adjoint") return RRB_ACTION_ADJOINT;
  try {
    std::size_t used = 0;
    const long v = std::stol(phi, &used);
    if (used == phi.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw Failure{RRB_INVALID_ARGUMENT, "--phi expects an index, \"trivial\" or \"adjoint\""};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Relative Rota-Baxter operators, skew braces and isoclinism on finite groups",
               "rrbtool"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with defaults for the global flags");

  Session s;
  app.add_option("--order-cap", s.limits.order_cap, "Largest group order built")
      ->capture_default_str();
  app.add_option("--subgroup-cap", s.limits.subgroup_cap, "Most subgroups enumerated")
      ->capture_default_str();
  app.add_option("--brute-force-cap", s.limits.brute_force_cap,
                 "Most maps tried by the brute-force oracle")
      ->capture_default_str();
  app.add_option("--isoclinism-cap", s.limits.isoclinism_cap,
                 "Largest carrier for isoclinism searches")
      ->capture_default_str();
  app.add_option("--jobs", s.limits.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timing", s.timing, "Include wall time in enumeration reports");
  app.add_option("--runs-dir", s.runs_dir, "Persist each result and its manifest here");

  std::string out;
  std::function<void()> action;

  // group
  auto* group = app.add_subcommand("group", "Inspect a group file")->require_subcommand(1);
  std::string group_file;
  bool group_emit = false;
  auto* gshow = group->add_subcommand("show", "Summary, or the canonical file with --emit");
  gshow->add_option("file", group_file)->required();
  gshow->add_flag("--emit", group_emit, "Write the group back in its ingestion form");
  gshow->callback([&] {
    action = [&] {
      auto g = s.group(group_file);
      char* r = nullptr;
      check(group_emit ? rrb_group_emit(g.get(), &r) : rrb_group_summary(g.get(), &r));
      out = take(r);
    };
  });
  auto* gauts = group->add_subcommand("auts", "Count automorphisms");
  gauts->add_option("file", group_file)->required();
  gauts->callback([&] {
    action = [&] {
      auto g = s.group(group_file);
      char* r = nullptr;
      check(rrb_group_automorphisms(g.get(), &s.limits, &r));
      out = take(r);
    };
  });

  // rbo
  auto* rbo = app.add_subcommand("rbo", "Enumerate operators")->require_subcommand(1);
  std::string h_file, g_file, phi = "0", strategy = "backtrack", rule = "mod-center", emit_dir;
  bool all_actions = false, oracle = false, classes = false, graph_experiment = false;
  auto* renum = rbo->add_subcommand("enumerate", "All operators H -> G for one or all actions");
  // "--h" names the group H, so help is reachable only as --help here.
  renum->set_help_flag("--help", "Print this help message and exit");
  renum->add_option("--h", h_file, "Group file for H")->required();
  renum->add_option("--g", g_file, "Group file for G")->required();
  auto* phi_opt = renum->add_option("--phi", phi, "Action index, \"trivial\" or \"adjoint\"");
  renum->add_flag("--all-actions", all_actions, "Every action G -> Aut(H)")->excludes(phi_opt);
  renum->add_flag("--oracle", oracle, "Cross-check against the brute-force search");
  renum->add_flag("--classes", classes, "Equivalence classes under Aut(G) (adjoint only)");
  renum->add_option("--rule", rule, "Equivalence rule")
      ->check(CLI::IsMember({"mod-center", "strict"}))
      ->capture_default_str();
  renum->add_option("--strategy", strategy, "How S(H, G, phi) is found")
      ->check(CLI::IsMember({"backtrack", "subgroups"}))
      ->capture_default_str();
  renum->add_option("--emit-operators", emit_dir, "Write each operator file into this directory");
  renum->add_flag("--graph-experiment", graph_experiment,
                  "Report graph, brace and image isomorphism data for each operator pair");
  renum->callback([&] {
    action = [&] {
      auto h = s.group(h_file);
      auto g = g_file == h_file ? GroupHandle() : s.group(g_file);
      const rrb_group* gp = g ? g.get() : h.get();
      const long a = all_actions ? RRB_ACTION_ALL : parse_phi(phi);
      char* r = nullptr;
      if (graph_experiment) {
        check(rrb_rbo_graph_experiment(h.get(), gp, a, &s.limits, &r));
      } else {
        rrb_enumerate_options o = rrb_enumerate_options_default();
        o.action = a;
        o.strategy = strategy == "subgroups" ? RRB_STRATEGY_SUBGROUPS : RRB_STRATEGY_BACKTRACK;
        o.oracle = oracle;
        o.classes = classes;
        o.rule = rule == "strict" ? RRB_RULE_STRICT : RRB_RULE_MOD_CENTER;
        o.timing = s.timing;
        o.emit_dir = emit_dir.empty() ? nullptr : emit_dir.c_str();
        check(rrb_rbo_enumerate(h.get(), gp, &o, &s.limits, &r));
      }
      out = take(r);
    };
  });

  int census_id = 0;
  bool extended = false;
  std::string data_dir = RRB_DATA_DIR;
  auto census = [&](CLI::App* cmd) {
    cmd->add_option("--id", census_id, "SmallGroup(96, id)")
        ->required()
        ->check(CLI::IsMember({64, 70, 71, 72, 227}));
    cmd->add_flag("--extended", extended, "Allow the long-running census");
    cmd->add_option("--data", data_dir, "Data directory holding groups/order96")
        ->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        const auto file = fs::path(data_dir) / "groups" / "order96" /
                          ("sg96_" + std::to_string(census_id) + ".json");
        if (fs::exists(file)) s.inputs.push_back(file.string());
        char* r = nullptr;
        check(rrb_census96(census_id, extended, data_dir.c_str(), s.timing, &s.limits, &r));
        out = take(r);
      };
    });
  };
  census(rbo->add_subcommand("census96", "Operators on a centerless group of order 96"));
  census(app.add_subcommand("census96", "Same as rbo census96"));

  // brace
  auto* brace = app.add_subcommand("brace", "Skew braces")->require_subcommand(1);
  std::string brace_file, a_file, b_file;
  bool ybe_emit = false;
  auto* bverify = brace->add_subcommand("verify", "Check the brace axiom and report invariants");
  bverify->add_option("file", brace_file)->required();
  bverify->callback([&] {
    action = [&] {
      auto b = s.brace(brace_file);
      char* r = nullptr;
      check(rrb_brace_verify(b.get(), &r));
      out = take(r);
    };
  });
  auto* bybe = brace->add_subcommand("ybe", "The associated Yang-Baxter solution");
  bybe->add_option("file", brace_file)->required();
  bybe->add_flag("--emit", ybe_emit, "Include the full table");
  bybe->callback([&] {
    action = [&] {
      auto b = s.brace(brace_file);
      char* r = nullptr;
      check(rrb_brace_ybe(b.get(), ybe_emit, &r));
      out = take(r);
    };
  });
  auto* biso = brace->add_subcommand("isoclinic", "Search for a brace isoclinism");
  biso->add_option("--a", a_file)->required();
  biso->add_option("--b", b_file)->required();
  biso->callback([&] {
    action = [&] {
      auto a = s.brace(a_file);
      auto b = s.brace(b_file);
      char* r = nullptr;
      check(rrb_brace_isoclinic(a.get(), b.get(), &s.limits, &r));
      out = take(r);
    };
  });

  // rrb
  auto* rrbcmd = app.add_subcommand("rrb", "Relative Rota-Baxter groups")->require_subcommand(0, 1);
  bool converse = false;
  rrbcmd->add_flag("--find-converse-counterexample", converse,
                   "Brace-isoclinic pairs whose operator structures are not isoclinic");
  std::string op_file, emit_witness, witness_file;
  bool op_emit = false;
  auto* rvalidate = rrbcmd->add_subcommand("validate", "Validate an operator file and report");
  rvalidate->add_option("file", op_file)->required();
  rvalidate->add_flag("--emit", op_emit, "Write the operator back with inline groups");
  rvalidate->callback([&] {
    action = [&] {
      auto o = s.op(op_file);
      char* r = nullptr;
      check(op_emit ? rrb_operator_emit(o.get(), &r) : rrb_operator_report(o.get(), &r));
      out = take(r);
    };
  });
  auto* riso = rrbcmd->add_subcommand("isoclinic", "Search for or check an isoclinism");
  riso->add_option("--a", a_file)->required();
  riso->add_option("--b", b_file)->required();
  riso->add_option("--emit-witness", emit_witness, "Write the witness found to this file");
  riso->add_option("--witness", witness_file, "Check this witness instead of searching");
  riso->callback([&] {
    action = [&] {
      auto a = s.op(a_file);
      auto b = s.op(b_file);
      char* r = nullptr;
      if (!witness_file.empty()) {
        s.inputs.push_back(witness_file);
        const std::string w = read_file(witness_file);
        check(rrb_operator_check_witness(a.get(), b.get(), w.c_str(), &r));
        out = take(r);
        return;
      }
      check(rrb_operator_isoclinic(a.get(), b.get(), &s.limits, &r));
      out = take(r);
      if (!emit_witness.empty()) {
        const Json j = Json::parse(out);
        if (j.contains("witness")) {
          Json w = j["witness"];
          w["format"] = 1;
          std::ofstream(emit_witness, std::ios::binary) << w.dump(2) << "\n";
        }
      }
    };
  });
  rrbcmd->callback([&] {
    if (rrbcmd->get_subcommands().empty()) {
      if (!converse) throw CLI::RequiredError("rrb needs a subcommand or --find-converse-counterexample");
      action = [&] {
        char* r = nullptr;
        check(rrb_converse_counterexample(&s.limits, &r));
        out = take(r);
      };
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) {
    std::cerr << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const Failure& f) {
    emit_error(f.status, f.message);
    return exit_code(f.status);
  } catch (const std::exception& e) {
    emit_error(RRB_INTERNAL, e.what());
    return kExitInternal;
  }
  std::cout << out;
  if (!s.runs_dir.empty()) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(s, args, out, wall);
  }
  return kExitOk;
}

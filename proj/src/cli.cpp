#include "tlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

#include "tlab/errors.hpp"
#include "tlab/invariants.hpp"
#include "tlab/resolution.hpp"
#include "tlab/scenarios.hpp"
#include "tlab/workspace.hpp"

#ifndef TLAB_DATA_DIR
#define TLAB_DATA_DIR "data"
#endif

namespace tlab {

namespace {

using json = nlohmann::ordered_json;

json verdict_json(std::size_t value, bool cap_reached) {
  if (cap_reached) return ">=" + std::to_string(value);
  return value;
}

json infinite_json(int v) {
  if (v == kInfinity) return "inf";
  return v;
}

json module_json(const PresentedModule& m) {
  json rels = json::array();
  for (const auto& col : m.relations()) {
    json entries = json::array();
    for (const auto& p : col.components()) entries.push_back(m.ring->to_string(p));
    rels.push_back(entries);
  }
  return {{"generators", m.generator_degrees()}, {"relations", rels}};
}

json betti_json(const BettiTable& b) {
  json graded = json::object();
  for (const auto& [key, count] : b.graded) {
    graded[std::to_string(key.first) + "," + std::to_string(key.second)] = count;
  }
  return {{"totals", b.totals}, {"graded", graded}};
}

json resolution_json(const Resolution& res) {
  json modules = json::array();
  for (const auto& f : res.modules) modules.push_back(f.twists);
  json maps = json::array();
  for (const auto& d : res.maps) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.target.rank(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d.source.rank(); ++j) row.push_back(res.ring->to_string(d.entry(i, j)));
      rows.push_back(row);
    }
    maps.push_back(rows);
  }
  return {{"twists", modules}, {"differentials", maps}, {"finite", res.finite}};
}

json profile_json(const RingProfile& p) {
  return {{"dim", p.dimension},
          {"depth", p.depth},
          {"type", p.type},
          {"edim", p.edim},
          {"multiplicity", p.multiplicity},
          {"cohen_macaulay", p.is_cohen_macaulay},
          {"gorenstein", p.is_gorenstein},
          {"minimal_multiplicity", p.has_minimal_multiplicity}};
}

json scenario_json(const ScenarioResult& r, bool timing) {
  json j = {{"scenario", r.scenario}, {"ring", r.ring}, {"status", to_string(r.status)},
            {"witnesses", r.witnesses}};
  if (r.status != ScenarioStatus::Pass) j["reason"] = r.reason;
  j["elapsed_ms"] = timing ? json(r.elapsed_ms) : json(nullptr);
  return j;
}

struct Options {
  std::string workspace;
  std::string module = "k";
  std::string of = "R";
  std::string scenario;
  std::string corpus = TLAB_DATA_DIR;
  std::size_t length = 8;
  std::size_t max = 6;
  std::size_t cap = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  bool all = false;
  bool timing = false;
};

std::vector<Workspace> load_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    const auto& path = entry.path();
    if (path.extension() == ".tlw" && path.filename().string().rfind("ring_", 0) == 0) files.push_back(path);
  }
  if (ec) throw InputError("cannot read corpus directory '" + dir + "'");
  if (files.empty()) throw InputError("no ring_*.tlw files in '" + dir + "'");
  std::sort(files.begin(), files.end());
  std::vector<Workspace> out;
  for (const auto& f : files) out.push_back(parse_workspace(f));
  return out;
}

struct Report {
  json ring = nullptr;
  json result = nullptr;
  json witnesses = json::object();
  int exit_code = 0;
};

Report run_verify(const Options& o, const CLI::App& cmd) {
  if (o.all == (cmd.count("--scenario") > 0)) throw InputError("verify needs exactly one of --scenario or --all");
  std::vector<std::string> ids = o.all ? scenario_ids() : std::vector<std::string>{o.scenario};
  if (!o.all && !is_scenario(o.scenario)) throw InputError("unknown scenario '" + o.scenario + "'");
  std::vector<Workspace> rings;
  Report rep;
  if (!o.workspace.empty()) {
    rings.push_back(parse_workspace(o.workspace));
    rep.ring = rings.front().ring->name();
  } else {
    rings = load_corpus(o.corpus);
  }
  auto results = run_scenarios(ids, rings);
  std::size_t passed = 0, failed = 0, skipped = 0;
  json list = json::array();
  for (const auto& r : results) {
    if (r.status == ScenarioStatus::Pass) ++passed;
    if (r.status == ScenarioStatus::Fail) ++failed;
    if (r.status == ScenarioStatus::Skip) ++skipped;
    list.push_back(scenario_json(r, o.timing));
  }
  rep.result = {{"status", failed ? "fail" : "pass"}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  rep.witnesses = {{"scenarios", list}};
  rep.exit_code = failed ? 1 : 0;
  return rep;
}

Report run_module_command(const std::string& name, const Options& o, const CLI::App& cmd) {
  if (o.workspace.empty()) throw InputError("--workspace is required for '" + name + "'");
  Workspace ws = parse_workspace(o.workspace);
  Report rep;
  rep.ring = ws.ring->name();
  const std::size_t t = static_cast<std::size_t>(depth(PresentedModule::free(ws.ring, {0})));

  if (name == "invariants") {
    RingProfile p = ring_profile(ws.ring);
    if (cmd.count("--module") == 0) {
      rep.result = profile_json(p);
      rep.witnesses = {{"localizations", "not computed"}};
      return rep;
    }
    PresentedModule m = evaluate_module(ws, o.module);
    HilbertSeries h = hilbert_series(m);
    json r = {{"module", o.module}, {"dim", h.dimension}, {"depth", infinite_json(depth(m))},
              {"mu", mu(m)}, {"free", is_free(m)}};
    r["multiplicity"] = h.is_zero() ? json(nullptr) : json(h.multiplicity());
    r["ulrich"] = h.is_zero() ? json(nullptr) : json(is_ulrich(m));
    rep.result = r;
    rep.witnesses = {{"hilbert_numerator", h.numerator}, {"offset", h.offset}, {"ring", profile_json(p)}};
    return rep;
  }

  PresentedModule m = evaluate_module(ws, o.module);
  if (name == "resolve" || name == "betti") {
    Resolution res = resolve(m, o.length);
    BettiTable b = betti_table(res);
    if (name == "resolve") {
      rep.result = resolution_json(res);
      rep.witnesses = {{"betti", betti_json(b)}};
    } else {
      rep.result = betti_json(b);
      rep.witnesses = {{"length", o.length}, {"finite", res.finite}};
    }
  } else if (name == "transpose") {
    rep.result = module_json(transpose(m));
    rep.witnesses = {{"module", module_json(minimalize(m))}};
  } else if (name == "ext") {
    PresentedModule n = evaluate_module(ws, o.of);
    ExtProfile e = ext(m, n, o.max);
    json mods = json::array();
    json zero = json::array();
    for (std::size_t i = 0; i <= e.max_index(); ++i) {
      mods.push_back(module_json(e.modules[i]));
      zero.push_back(e.is_zero(i));
    }
    rep.result = mods;
    rep.witnesses = {{"of", o.of}, {"vanishes", zero}};
  } else if (name == "tf-index") {
    std::size_t cap = cmd.count("--cap") ? o.cap : t + 3;
    TorsionfreeVerdict v = tf_index(m, cap);
    rep.result = verdict_json(v.index, v.cap_reached);
    rep.witnesses = {{"cap", cap}};
    rep.witnesses["first_nonzero_transpose_ext"] = v.witness ? json(*v.witness) : json(nullptr);
  } else if (name == "syzygy-order") {
    std::size_t cap = cmd.count("--cap") ? o.cap : t + 2;
    SyzygyOrderVerdict v = syzygy_order(m, cap);
    rep.result = verdict_json(v.order, v.cap_reached);
    json chain = json::array();
    for (const auto& c : v.chain) chain.push_back(c.generator_degrees());
    rep.witnesses = {{"cap", cap}, {"chain_generators", chain}};
  } else if (name == "gab") {
    ReflexivityWitness w = reflexivity_witness(m, o.a, o.b);
    rep.result = w.holds;
    rep.witnesses = {{"a", o.a}, {"b", o.b}};
    rep.witnesses["first_nonzero_ext"] = w.ext_index ? json(*w.ext_index) : json(nullptr);
    rep.witnesses["first_nonzero_transpose_ext"] = w.transpose_index ? json(*w.transpose_index) : json(nullptr);
  }
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graded homological algebra over quotients of polynomial rings", "torsion-lab"};
  app.require_subcommand(1);
  app.add_option("--workspace", o.workspace, "Workspace file");
  app.add_flag("--timing", o.timing, "Report elapsed milliseconds");

  auto with_module = [&o](CLI::App* c) {
    c->add_option("--module", o.module, "Module expression")->capture_default_str();
    return c;
  };
  std::vector<CLI::App*> commands;
  auto* resolve_cmd = with_module(app.add_subcommand("resolve", "Minimal free resolution"));
  resolve_cmd->add_option("--length", o.length)->capture_default_str();
  auto* betti_cmd = with_module(app.add_subcommand("betti", "Graded Betti table"));
  betti_cmd->add_option("--length", o.length)->capture_default_str();
  commands = {resolve_cmd, betti_cmd};
  commands.push_back(with_module(app.add_subcommand("transpose", "Auslander transpose")));
  auto* ext_cmd = with_module(app.add_subcommand("ext", "Ext^i(M, N)"));
  ext_cmd->add_option("--of", o.of, "Second argument N")->capture_default_str();
  ext_cmd->add_option("--max", o.max)->capture_default_str();
  commands.push_back(ext_cmd);
  auto* tf_cmd = with_module(app.add_subcommand("tf-index", "Largest n with M n-torsionfree"));
  tf_cmd->add_option("--cap", o.cap, "Default depth R + 3");
  commands.push_back(tf_cmd);
  auto* syz_cmd = with_module(app.add_subcommand("syzygy-order", "Largest n with M an n-syzygy"));
  syz_cmd->add_option("--cap", o.cap, "Default depth R + 2");
  commands.push_back(syz_cmd);
  auto* gab_cmd = with_module(app.add_subcommand("gab", "Membership in G_{a,b}"));
  gab_cmd->add_option("--a", o.a)->required();
  gab_cmd->add_option("--b", o.b)->required();
  commands.push_back(gab_cmd);
  auto* inv_cmd = app.add_subcommand("invariants", "Ring or module invariants");
  inv_cmd->add_option("--module", o.module, "Module expression");
  commands.push_back(inv_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Run scenarios");
  verify_cmd->add_option("--scenario", o.scenario);
  verify_cmd->add_flag("--all", o.all);
  verify_cmd->add_option("--corpus", o.corpus, "Directory of ring_*.tlw files")->capture_default_str();
  for (auto* c : app.get_subcommands({})) c->fallthrough();

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "torsion-lab: " << e.what() << "\n";
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = name == "verify" ? run_verify(o, *cmd) : run_module_command(name, o, *cmd);
  } catch (const InputError& e) {
    err << "torsion-lab: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json doc = {{"command", name}, {"ring", rep.ring}, {"result", rep.result}, {"witnesses", rep.witnesses}};
  doc["elapsed_ms"] = o.timing ? json(ms) : json(nullptr);
  out << doc.dump(2) << "\n";
  return rep.exit_code;
}

}  // namespace tlab

#include "tlab/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

using json = nlohmann::ordered_json;

json verdict(std::size_t value, bool cap_reached) {
  if (cap_reached) return ">=" + std::to_string(value);
  return value;
}

json depth_json(int d) {
  if (d == kInfinity) return "inf";
  return d;
}

PresentedModule ring_module(const Ring& ring) { return PresentedModule::free(ring, {0}); }

std::string omega_name(std::size_t n) { return n == 0 ? "k" : "omega^" + std::to_string(n) + " k"; }

Polynomial variable(std::size_t i) { return Polynomial::term(Monomial::variable(i)); }

struct Context {
  const Workspace& ws;
  RingProfile profile;
};

using ScenarioFn = std::function<void(const Context&, ScenarioResult&)>;

void finish(ScenarioResult& r, bool ok, const std::string& failure) {
  r.status = ok ? ScenarioStatus::Pass : ScenarioStatus::Fail;
  if (!ok) r.reason = failure;
}

void syzygy_k_torsionfree(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  Resolution res = resolve(PresentedModule::residue_field(c.ws.ring), t + 3);
  bool ok = true;
  json tf = json::object();
  for (std::size_t n = 0; n <= t + 2; ++n) {
    TorsionfreeVerdict v = tf_index(syzygy_from(res, n), t + 2);
    std::size_t need = std::min(n, t + 1);
    if (n == t) need = t + 1;
    tf[omega_name(n)] = {{"tf_index", verdict(v.index, v.cap_reached)},
                                               {"required", need}};
    if (v.index < need) ok = false;
  }
  r.witnesses["depth"] = t;
  r.witnesses["cap"] = t + 2;
  r.witnesses["modules"] = tf;
  finish(r, ok, "a syzygy of k is less torsionfree than required");
}

void gorenstein_dichotomy(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  Resolution res = resolve(PresentedModule::residue_field(c.ws.ring), t + 4);
  bool all = true;
  bool none = true;
  json tf = json::object();
  for (std::size_t n = t + 1; n <= t + 3; ++n) {
    TorsionfreeVerdict v = tf_index(syzygy_from(res, n), t + 2);
    bool reached = v.index >= t + 2;
    all = all && reached;
    none = none && !reached;
    tf[omega_name(n)] = verdict(v.index, v.cap_reached);
  }
  r.witnesses["gorenstein"] = c.profile.is_gorenstein;
  r.witnesses["cap"] = t + 2;
  r.witnesses["tf_index"] = tf;
  if (c.profile.is_gorenstein) {
    finish(r, all, "Gorenstein ring with a high syzygy of k that is not (t+2)-torsionfree");
  } else {
    finish(r, none, "non-Gorenstein ring with a (t+2)-torsionfree high syzygy of k");
  }
}

void type_one_syzygy(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  SyzygyOrderVerdict v = syzygy_order(syzygy(PresentedModule::residue_field(c.ws.ring), t), t + 2);
  bool deep = v.order >= t + 2;
  r.witnesses["type"] = c.profile.type;
  r.witnesses["syzygy_order(" + omega_name(t) + "," + std::to_string(t + 2) + ")"] =
      verdict(v.order, v.cap_reached);
  finish(r, deep == (c.profile.type == 1),
         deep ? "omega^t k is (t+2)-syzygy over a ring of type above one"
              : "omega^t k is not (t+2)-syzygy over a ring of type one");
}

std::vector<int> block_twists(const Ring& ring) {
  PresentedModule k = PresentedModule::residue_field(ring);
  PresentedModule r = ring_module(ring);
  std::size_t t = static_cast<std::size_t>(depth(r));
  std::vector<int> degrees = ExtComputer(k, r).module(t).generator_degrees();
  std::sort(degrees.begin(), degrees.end());
  const int lowest = degrees.front();
  for (int& d : degrees) d -= lowest;
  return degrees;
}

void socle_block_syzygy(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  PresentedModule block = socle_block(c.ws.ring);
  SyzygyOrderVerdict v = syzygy_order(block, t + 2);
  r.witnesses["type"] = c.profile.type;
  r.witnesses["twists"] = block_twists(c.ws.ring);
  r.witnesses["syzygy_order"] = verdict(v.order, v.cap_reached);
  finish(r, v.order >= t + 2, "the socle block is not (t+2)-syzygy");
}

void depth_of_deep_syzygies(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  auto modules = test_modules(c.ws);
  PresentedModule k = PresentedModule::residue_field(c.ws.ring);
  Resolution res = resolve(k, t + 4);
  for (std::size_t n = 2; n <= t + 3; ++n) {
    modules.emplace_back(omega_name(n), syzygy_from(res, n));
  }
  modules.emplace_back("socle block", socle_block(c.ws.ring));

  bool ok = true;
  std::size_t certified = 0;
  json entries = json::object();
  for (const auto& [name, m] : modules) {
    if (is_zero(m)) continue;
    SyzygyOrderVerdict v = syzygy_order(m, t + 2);
    json e = {{"syzygy_order", verdict(v.order, v.cap_reached)}};
    if (v.order >= t + 2) {
      ++certified;
      int d = depth(m);
      e["depth"] = depth_json(d);
      if (d != static_cast<int>(t)) ok = false;
    }
    entries[name] = e;
  }
  r.witnesses["depth_of_ring"] = t;
  r.witnesses["certified"] = certified;
  r.witnesses["modules"] = entries;
  finish(r, ok, "a (t+2)-syzygy module has depth different from t");
}

/// Generators of I cap J for ideals given by generators.
std::vector<Polynomial> intersection(const Ring& ring, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b) {
  HomogeneousMap f;
  f.target.twists = {0};
  for (const auto& p : a) {
    f.source.twists.push_back(p.degree());
    f.columns.push_back(ModuleElement::single(1, 0, p));
  }
  std::vector<ModuleElement> extra;
  for (const auto& p : b) extra.push_back(ModuleElement::single(1, 0, p));
  std::vector<Polynomial> out;
  for (const auto& v : preimage_kernel(ring, f, extra)) {
    Polynomial s;
    auto comps = v.components();
    for (std::size_t i = 0; i < comps.size(); ++i) s = add(s, mul(comps[i], a[i], ring->field()), ring->field());
    s = ring->reduce(s);
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

std::string ideal_name(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + ring->to_string(gens[i]);
  return s + ")";
}

void summand_escape(const Context& c, ScenarioResult& r) {
  const Ring& ring = c.ws.ring;
  const std::size_t n = ring->num_variables();
  // Split the variables into two nonempty sets whose ideals meet in zero.
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    std::vector<Polynomial> first;
    std::vector<Polynomial> second;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? first : second).push_back(variable(i));
    if (!intersection(ring, first, second).empty()) continue;
    // I = (first) with depth R/I = 0, J = (second) with depth R/J >= 1.
    int depth_quot_i = depth(PresentedModule::cyclic(ring, first));
    int depth_quot_j = depth(PresentedModule::cyclic(ring, second));
    if (depth_quot_i != 0 || depth_quot_j < 1) continue;
    std::vector<ModuleElement> gens;
    for (const auto& p : first) gens.push_back(ModuleElement::single(1, 0, p));
    PresentedModule ideal_i = subquotient(ring, {0}, gens, {});
    int depth_i = depth(ideal_i);
    SyzygyOrderVerdict v = syzygy_order(ideal_i, 2);
    std::string in = ideal_name(ring, first);
    std::string jn = ideal_name(ring, second);
    r.witnesses["decomposition"] = "m = " + in + " + " + jn;
    r.witnesses["intersection_zero"] = true;
    r.witnesses["depth(R/" + in + ")"] = depth_quot_i;
    r.witnesses["depth(R/" + jn + ")"] = depth_json(depth_quot_j);
    r.witnesses["depth(R)"] = c.profile.depth;
    r.witnesses["depth(" + in + ")"] = depth_json(depth_i);
    r.witnesses["syzygy_order(" + in + ",2)"] = verdict(v.order, v.cap_reached);
    bool ok = c.profile.depth == 0 && depth_i >= 1 && depth_i != kInfinity && v.order < 2;
    finish(r, ok, "the direct summand escapes the expected bounds");
    return;
  }
  r.status = ScenarioStatus::Skip;
  r.reason = "no splitting of the variables gives m = I + J with I, J meeting in zero, "
             "depth R/I = 0 and depth R/J >= 1";
}

void rigid_freeness(const Context& c, ScenarioResult& r) {
  const RingProfile& p = c.profile;
  if (!p.is_cohen_macaulay || p.is_gorenstein || !p.has_minimal_multiplicity) {
    r.status = ScenarioStatus::Skip;
    r.reason = "needs a Cohen-Macaulay non-Gorenstein ring with minimal multiplicity";
    return;
  }
  const std::size_t total = 2 * static_cast<std::size_t>(p.dimension) + 2;
  bool ok = true;
  json entries = json::object();
  for (const auto& [name, m] : test_modules(c.ws)) {
    bool free = is_free(m);
    json e = {{"free", free}};
    json windows = json::object();
    for (std::size_t a = 0; a <= total; ++a) {
      bool in = gab_membership(m, a, total - a);
      windows[std::to_string(a) + "," + std::to_string(total - a)] = in;
      if (in && !free) ok = false;
    }
    e["gab"] = windows;
    entries[name] = e;
  }
  r.witnesses["dimension"] = p.dimension;
  r.witnesses["modules"] = entries;
  finish(r, ok, "a non-free module lies in G_{a,b} with a+b = 2d+2");
}

void grade_ladder(const Context& c, ScenarioResult& r) {
  const std::size_t t = static_cast<std::size_t>(c.profile.depth);
  ExtComputer computer(PresentedModule::residue_field(c.ws.ring), ring_module(c.ws.ring));
  bool ok = true;
  json grades = json::object();
  for (std::size_t i = 1; i <= t + 1; ++i) {
    int g = grade(computer.module(i));
    grades["Ext^" + std::to_string(i) + "(k,R)"] = depth_json(g);
    if (g < static_cast<int>(i) - 1) ok = false;
  }
  r.witnesses["grades"] = grades;
  finish(r, ok, "some Ext^i(k,R) has grade below i-1");
}

/// Generators of ann(f) in R.
std::vector<Polynomial> annihilator(const Ring& ring, const Polynomial& f) {
  HomogeneousMap h;
  h.source.twists = {0};
  h.target.twists = {-f.degree()};
  h.columns.push_back(ModuleElement::single(1, 0, f));
  std::vector<Polynomial> out;
  for (const auto& v : preimage_kernel(ring, h)) out.push_back(v.component(0));
  return out;
}

bool same_ideal(const Ring& ring, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  auto as_elements = [](const std::vector<Polynomial>& ps) {
    std::vector<ModuleElement> out;
    for (const auto& p : ps) out.push_back(ModuleElement::single(1, 0, p));
    return out;
  };
  auto ea = as_elements(a);
  auto eb = as_elements(b);
  return contained_in(ring, {0}, ea, eb) && contained_in(ring, {0}, eb, ea);
}

void totally_reflexive_witness(const Context& c, ScenarioResult& r) {
  const Ring& ring = c.ws.ring;
  const std::size_t n = ring->num_variables();
  constexpr std::size_t kBound = 4;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Polynomial> ann_u = annihilator(ring, variable(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (!same_ideal(ring, ann_u, {variable(v)})) continue;
      if (!same_ideal(ring, annihilator(ring, variable(v)), {variable(u)})) continue;
      PresentedModule m = PresentedModule::cyclic(ring, {variable(u)});
      ReflexivityWitness w = reflexivity_witness(m, kBound, kBound);
      const auto& names = ring->variables();
      r.witnesses["exact_pair"] = {names[u], names[v]};
      r.witnesses["module"] = "R/(" + names[u] + ")";
      r.witnesses["bound"] = kBound;
      r.witnesses["free"] = is_free(m);
      r.witnesses["gab(" + std::to_string(kBound) + "," + std::to_string(kBound) + ")"] = w.holds;
      if (w.ext_index) r.witnesses["first_nonzero_ext"] = *w.ext_index;
      if (w.transpose_index) r.witnesses["first_nonzero_transpose_ext"] = *w.transpose_index;
      finish(r, w.holds, "R/(u) fails total reflexivity within the bound");
      return;
    }
  }
  r.status = ScenarioStatus::Skip;
  r.reason = "no pair of variables u, v with ann(u) = (v) and ann(v) = (u)";
}

void ring_profile_check(const Context& c, ScenarioResult& r) {
  const RingProfile& p = c.profile;
  r.witnesses["dim"] = p.dimension;
  r.witnesses["depth"] = p.depth;
  r.witnesses["type"] = p.type;
  r.witnesses["edim"] = p.edim;
  r.witnesses["multiplicity"] = p.multiplicity;
  r.witnesses["cohen_macaulay"] = p.is_cohen_macaulay;
  r.witnesses["gorenstein"] = p.is_gorenstein;
  r.witnesses["minimal_multiplicity"] = p.has_minimal_multiplicity;
  r.witnesses["localizations"] = "not checked: only invariants at the irrelevant ideal are computed";
  bool ok = p.depth <= p.dimension && p.type >= 1 && p.multiplicity >= 1 &&
            p.is_cohen_macaulay == (p.depth == p.dimension) &&
            p.is_gorenstein == (p.is_cohen_macaulay && p.type == 1) &&
            p.has_minimal_multiplicity ==
                (p.multiplicity == static_cast<std::int64_t>(p.edim) - p.dimension + 1);
  finish(r, ok, "ring invariants are inconsistent");
}

const std::map<std::string, ScenarioFn>& registry() {
  static const std::map<std::string, ScenarioFn> table = {
      {"depth-of-deep-syzygies", depth_of_deep_syzygies},
      {"gorenstein-dichotomy", gorenstein_dichotomy},
      {"grade-ladder", grade_ladder},
      {"rigid-freeness", rigid_freeness},
      {"ring-profile", ring_profile_check},
      {"socle-block-syzygy", socle_block_syzygy},
      {"summand-escape", summand_escape},
      {"syzygy-k-torsionfree", syzygy_k_torsionfree},
      {"totally-reflexive-witness", totally_reflexive_witness},
      {"type-one-syzygy", type_one_syzygy},
  };
  return table;
}

ScenarioResult run_with_profile(const std::string& id, const Workspace& ws, const RingProfile& profile) {
  auto it = registry().find(id);
  if (it == registry().end()) throw InputError("unknown scenario '" + id + "'");
  ScenarioResult r;
  r.scenario = id;
  r.ring = ws.ring->name();
  auto start = std::chrono::steady_clock::now();
  it->second(Context{ws, profile}, r);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const char* to_string(ScenarioStatus s) {
  switch (s) {
    case ScenarioStatus::Pass: return "pass";
    case ScenarioStatus::Fail: return "fail";
    case ScenarioStatus::Skip: return "skip";
  }
  return "skip";
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_scenario(const std::string& id) { return registry().count(id) != 0; }

PresentedModule socle_block(const Ring& ring) {
  PresentedModule k = PresentedModule::residue_field(ring);
  PresentedModule base = syzygy(k, static_cast<std::size_t>(depth(ring_module(ring))));
  std::vector<PresentedModule> copies;
  for (int d : block_twists(ring)) copies.push_back(shift(base, -d));
  return direct_sum(copies);
}

std::vector<std::pair<std::string, PresentedModule>> test_modules(const Workspace& ws) {
  const Ring& ring = ws.ring;
  PresentedModule k = PresentedModule::residue_field(ring);
  PresentedModule r = ring_module(ring);
  std::vector<std::pair<std::string, PresentedModule>> out;
  out.emplace_back("k", k);
  out.emplace_back("m", PresentedModule::maximal_ideal(ring));
  out.emplace_back("R", r);
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    out.emplace_back("R/(" + ring->variables()[i] + ")", PresentedModule::cyclic(ring, {variable(i)}));
  }
  out.emplace_back("k+k", direct_sum(k, k));
  out.emplace_back("omega^1 k", syzygy(k, 1));
  out.emplace_back("R+k", direct_sum(r, k));
  for (const auto& [name, m] : ws.modules) out.emplace_back(name, m);
  return out;
}

ScenarioResult run_scenario(const std::string& id, const Workspace& ws) {
  if (!is_scenario(id)) throw InputError("unknown scenario '" + id + "'");
  return run_with_profile(id, ws, ring_profile(ws.ring));
}

std::vector<ScenarioResult> run_scenarios(const std::vector<std::string>& ids,
                                          const std::vector<Workspace>& workspaces, bool parallel) {
  for (const auto& id : ids) {
    if (!is_scenario(id)) throw InputError("unknown scenario '" + id + "'");
  }
  auto run_ring = [&ids](const Workspace& ws) {
    RingProfile profile = ring_profile(ws.ring);
    std::vector<ScenarioResult> out;
    for (const auto& id : ids) out.push_back(run_with_profile(id, ws, profile));
    return out;
  };
  std::vector<ScenarioResult> all;
  if (parallel && workspaces.size() > 1) {
    std::vector<std::future<std::vector<ScenarioResult>>> jobs;
    for (const auto& ws : workspaces) jobs.push_back(std::async(std::launch::async, run_ring, std::cref(ws)));
    for (auto& j : jobs) {
      auto part = j.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    for (const auto& ws : workspaces) {
      auto part = run_ring(ws);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const ScenarioResult& a, const ScenarioResult& b) {
    return a.scenario != b.scenario ? a.scenario < b.scenario : a.ring < b.ring;
  });
  return all;
}

}  // namespace tlab

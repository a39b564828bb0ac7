// One line per acceptance criterion; exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle/agreement.hpp"
#include "../oracle/bridge.hpp"
#include "tlab/cli.hpp"
#include "tlab/errors.hpp"
#include "tlab/invariants.hpp"
#include "tlab/scenarios.hpp"

using namespace tlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

const std::vector<Workspace>& corpus() {
  static const std::vector<Workspace> rings = agreement::load_corpus();
  return rings;
}

const Workspace& ws(const std::string& name) {
  for (const auto& w : corpus()) {
    if (w.ring->name() == name) return w;
  }
  throw InputError("ring " + name + " is not in the corpus");
}

std::size_t ring_depth(const Ring& r) { return static_cast<std::size_t>(depth(PresentedModule::free(r, {0}))); }

void note(Outcome& o, bool cond, const std::string& failure) {
  if (cond) return;
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += failure;
}

Outcome ring_profiles() {
  Outcome o;
  RingProfile r1 = ring_profile(ws("R1").ring);
  note(o, r1.depth == 0 && r1.type == 1 && !r1.is_gorenstein, "R1 profile");
  RingProfile r2 = ring_profile(ws("R2").ring);
  note(o, r2.dimension == 1 && r2.depth == 1 && r2.is_gorenstein, "R2 profile");

  const Ring& r5 = ws("R5").ring;
  RingProfile p5 = ring_profile(r5);
  oracle::GradedRing orr(bridge::to_oracle(r5));
  std::size_t socle = 0;
  std::int64_t length = 0;
  int top = 0;
  for (int d = 0; d <= 12; ++d) {
    socle += oracle::socle_dimension(orr, d);
    length += static_cast<std::int64_t>(orr.dim(d));
    if (orr.dim(d) > 0) top = d;
  }
  // Artinian: e = length, dim = 0; the ideal has no linear forms so edim = dim R_1.
  bool artinian = top < 12;
  std::int64_t edim = static_cast<std::int64_t>(orr.dim(1));
  bool min_mult = artinian && length == edim + 1;
  note(o, p5.type == socle && socle == 2, "R5 type " + std::to_string(p5.type) + " vs socle " + std::to_string(socle));
  note(o, p5.has_minimal_multiplicity == min_mult && min_mult, "R5 minimal multiplicity");
  if (o.ok) o.detail = "R1 depth 0 type 1; R2 dim 1 depth 1 Gorenstein; R5 type 2 (oracle socle 2), e = 3 = edim + 1";
  return o;
}

Outcome syz_suite() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& w : corpus()) {
    const Ring& r = w.ring;
    std::size_t t = ring_depth(r);
    PresentedModule k = PresentedModule::residue_field(r);
    Resolution res = resolve(k, t + 4);
    for (std::size_t n = 0; n <= t + 2; ++n) {
      TorsionfreeVerdict v = tf_index(syzygy_from(res, n), t + 2);
      ++checks;
      note(o, v.index >= std::min(n, t + 1), r->name() + " tf(omega^" + std::to_string(n) + " k) too small");
    }
    if (ring_profile(r).is_gorenstein) continue;
    for (std::size_t n = t + 1; n <= t + 3; ++n) {
      TorsionfreeVerdict v = tf_index(syzygy_from(res, n), t + 2);
      ++checks;
      note(o, v.index <= t + 1, r->name() + " tf(omega^" + std::to_string(n) + " k) reaches t+2");
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " bounds hold";
  return o;
}

Outcome type_one() {
  Outcome o;
  std::string type1, other;
  for (const auto& w : corpus()) {
    const Ring& r = w.ring;
    std::size_t t = ring_depth(r);
    std::size_t type = ring_type(r);
    bool reached = syzygy_order(syzygy(PresentedModule::residue_field(r), t), t + 2).cap_reached;
    note(o, reached == (type == 1), r->name() + " type " + std::to_string(type) + " but syzygy order " +
                                        (reached ? "reaches" : "misses") + " t+2");
    bool block = syzygy_order(socle_block(r), t + 2).cap_reached;
    note(o, block, r->name() + " socle block is not a (t+2)-syzygy");
    (type == 1 ? type1 : other) += (type == 1 ? type1 : other).empty() ? r->name() : "," + r->name();
  }
  if (o.ok) o.detail = "reaches t+2 on {" + type1 + "}, misses on {" + other + "}; socle block reaches t+2 on all";
  return o;
}

Outcome depth_of_syzygies() {
  Outcome o;
  std::size_t certified = 0;
  for (const auto& w : corpus()) {
    const Ring& r = w.ring;
    std::size_t t = ring_depth(r);
    auto modules = test_modules(w);
    PresentedModule k = PresentedModule::residue_field(r);
    for (std::size_t n = 2; n <= t + 3; ++n) modules.emplace_back("omega^" + std::to_string(n) + " k", syzygy(k, n));
    modules.emplace_back("socle block", socle_block(r));
    for (const auto& [name, m] : modules) {
      if (is_zero(m) || !syzygy_order(m, t + 2).cap_reached) continue;
      ++certified;
      int d = depth(m);
      note(o, d == static_cast<int>(t), r->name() + " " + name + " has depth " + std::to_string(d));
    }
  }
  note(o, certified > 0, "no certified modules");
  if (o.ok) o.detail = std::to_string(certified) + " certified modules, all of depth t";
  return o;
}

Outcome rigid_freeness() {
  Outcome o;
  std::size_t qualifying = 0;
  const Workspace& w = ws("R5");
  for (const auto& [name, m] : test_modules(w)) {
    ExtComputer e(m, PresentedModule::free(w.ring, {0}));
    if (!e.vanishes(1) || !e.vanishes(2)) continue;
    ++qualifying;
    note(o, is_free(m), name + " has Ext^1 = Ext^2 = 0 but is not free");
  }
  note(o, qualifying > 0, "no qualifying modules");
  if (o.ok) o.detail = std::to_string(qualifying) + " qualifying modules, all free";
  return o;
}

Outcome non_closure_witness() {
  Outcome o;
  const Workspace& w = ws("R1");
  PresentedModule x = evaluate_module(w, "ideal(x)");
  PresentedModule y = evaluate_module(w, "ideal(y)");
  PresentedModule m = PresentedModule::maximal_ideal(w.ring);
  oracle::GradedRing orr(bridge::to_oracle(w.ring));
  auto ideal_dim = [&](const char* gen, int d) {
    oracle::ModuleData q{{0}, {{bridge::to_oracle(parse_polynomial(gen, w.ring->variables(), w.ring->field()),
                                                  w.ring->field(), w.ring->num_variables())}}};
    return static_cast<std::int64_t>(orr.dim(d)) - oracle::hilbert_function(orr, q, d);
  };
  for (int d = 0; d <= agreement::kMaxDegree; ++d) {
    std::int64_t mdim = d == 0 ? 0 : static_cast<std::int64_t>(orr.dim(d));
    // (x) + (y) = m, so equal dimensions mean (x) and (y) meet in zero.
    note(o, ideal_dim("x", d) + ideal_dim("y", d) == mdim, "(x) and (y) overlap in degree " + std::to_string(d));
    note(o, hilbert_function(x, d) + hilbert_function(y, d) == hilbert_function(m, d),
         "engine dimensions of (x) + (y) differ from m in degree " + std::to_string(d));
  }
  int dy = depth(y);
  note(o, dy == 1, "depth((y)) = " + std::to_string(dy));
  SyzygyOrderVerdict s = syzygy_order(y, 2);
  note(o, s.order == 1 && !s.cap_reached, "syzygy_order((y), 2) = " + std::to_string(s.order));
  if (o.ok) o.detail = "m = (x) + (y) with zero intersection, depth((y)) = 1, syzygy_order((y), 2) = 1";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t comparisons = 0;
  for (const auto& rep : {agreement::hilbert_functions(corpus()), agreement::betti_of_residue_field(corpus()),
                          agreement::ext_against_ring(corpus())}) {
    comparisons += rep.comparisons;
    for (const auto& m : rep.mismatches) note(o, false, m);
  }
  oracle::GradedRing orr(bridge::to_oracle(ws("R1").ring));
  auto ob = oracle::betti(
      oracle::resolve(orr, bridge::to_oracle(PresentedModule::residue_field(ws("R1").ring)), 4, agreement::kMaxDegree));
  std::vector<std::size_t> totals(5, 0);
  for (const auto& [key, n] : ob) {
    if (key.first <= 4) totals[static_cast<std::size_t>(key.first)] += n;
  }
  note(o, totals == std::vector<std::size_t>{1, 2, 3, 5, 8}, "oracle totals of k over R1");
  if (o.ok) o.detail = std::to_string(comparisons) + " comparisons agree; R1 totals 1 2 3 5 8";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::vector<std::string> args{"torsion-lab", "verify", "--all", "--corpus", TLAB_DATA_DIR};
  std::ostringstream out1, out2, err1, err2;
  double slowest = 0;
  auto timed = [&](std::ostringstream& out, std::ostringstream& err) {
    auto start = std::chrono::steady_clock::now();
    int code = run_cli(args, out, err);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return code;
  };
  int c1 = timed(out1, err1);
  int c2 = timed(out2, err2);
  note(o, slowest < 60, "a full run took " + std::to_string(slowest) + " s");
  note(o, out1.str() == out2.str(), "outputs differ");
  note(o, c1 == c2, "exit codes differ");
  note(o, !out1.str().empty(), "no output");
  char buf[160];
  std::snprintf(buf, sizeof buf, "byte-identical (%zu bytes, exit %d), slowest run %.2f s of 60 s", out1.str().size(), c1,
                slowest);
  if (o.ok) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ring profiles", 5, ring_profiles},
      {2, "syzygies of k are torsionfree to the expected order", 30, syz_suite},
      {3, "type one iff Omega^t k is a (t+2)-syzygy; socle block", 30, type_one},
      {4, "certified (t+2)-syzygies have depth t", 10, depth_of_syzygies},
      {5, "R5: Ext^1 = Ext^2 = 0 forces freeness", 10, rigid_freeness},
      {6, "R1 non-closure witness", 5, non_closure_witness},
      {7, "oracle equivalence", 120, oracle_equivalence},
      // Two full runs, each checked against 60 s inside.
      {8, "verify --all is deterministic", 120, determinism},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = s < c.limit_s;
    if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    bool pass = o.ok && in_time;
    all_ok = all_ok && pass;
    std::printf("criterion %d: %s  %s  [%.2f s / %.0f s]  %s\n", c.id, pass ? "PASS" : "FAIL", c.title, s,
                c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}

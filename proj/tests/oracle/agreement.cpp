#include "agreement.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "bridge.hpp"
#include "tlab/homology.hpp"
#include "tlab/invariants.hpp"
#include "tlab/scenarios.hpp"

namespace agreement {

using namespace tlab;

namespace {

std::string where(const Workspace& ws, const std::string& module) { return ws.ring->name() + " " + module; }

int top_twist(const Resolution& res, std::size_t n) {
  int top = 0;
  for (std::size_t i = 0; i <= n && i < res.modules.size(); ++i) {
    for (int t : res.modules[i].twists) top = std::max(top, t);
  }
  return top;
}

}  // namespace

std::vector<Workspace> load_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(TLAB_DATA_DIR)) {
    if (e.path().extension() == ".tlw") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Workspace> out;
  for (const auto& f : files) out.push_back(parse_workspace(f));
  return out;
}

Report hilbert_functions(const std::vector<Workspace>& corpus) {
  Report rep;
  for (const auto& ws : corpus) {
    oracle::GradedRing orr(bridge::to_oracle(ws.ring));
    auto modules = test_modules(ws);
    modules.emplace_back("R", PresentedModule::free(ws.ring, {0}));
    for (const auto& [name, m] : modules) {
      oracle::ModuleData om = bridge::to_oracle(m);
      for (int d = -2; d <= kMaxDegree; ++d) {
        std::int64_t a = hilbert_function(m, d);
        std::int64_t b = oracle::hilbert_function(orr, om, d);
        ++rep.comparisons;
        if (a != b) {
          std::ostringstream s;
          s << where(ws, name) << ": H(" << d << ") engine " << a << " oracle " << b;
          rep.mismatches.push_back(s.str());
        }
      }
    }
  }
  return rep;
}

Report betti_of_residue_field(const std::vector<Workspace>& corpus) {
  Report rep;
  for (const auto& ws : corpus) {
    PresentedModule k = PresentedModule::residue_field(ws.ring);
    oracle::GradedRing orr(bridge::to_oracle(ws.ring));
    auto ob = oracle::betti(oracle::resolve(orr, bridge::to_oracle(k), kMaxBettiIndex, kMaxDegree));
    BettiTable bt = betti_table(resolve(k, kMaxBettiIndex));
    for (int i = 0; i <= kMaxBettiIndex; ++i) {
      for (int j = 0; j <= kMaxDegree; ++j) {
        auto it = ob.find({i, j});
        std::size_t b = it == ob.end() ? 0 : it->second;
        std::size_t a = bt.at(static_cast<std::size_t>(i), j);
        ++rep.comparisons;
        if (a != b) {
          std::ostringstream s;
          s << where(ws, "k") << ": b(" << i << "," << j << ") engine " << a << " oracle " << b;
          rep.mismatches.push_back(s.str());
        }
      }
    }
  }
  return rep;
}

Report ext_against_ring(const std::vector<Workspace>& corpus) {
  Report rep;
  constexpr int lo = -10;
  constexpr int hi = kMaxDegree;
  for (const auto& ws : corpus) {
    oracle::GradedRing orr(bridge::to_oracle(ws.ring));
    for (const auto& [name, m] : test_modules(ws)) {
      PresentedModule min = minimalize(m);
      Resolution res = resolve(min, kMaxExtIndex + 1);
      // The oracle resolution must be complete through F_{i+1}.
      int needed = std::max(top_twist(res, kMaxExtIndex + 1), 1);
      auto ores = oracle::resolve(orr, bridge::to_oracle(min), kMaxExtIndex + 1, needed);
      ExtProfile e = ext(min, PresentedModule::free(ws.ring, {0}), kMaxExtIndex);
      for (int i = 0; i <= kMaxExtIndex; ++i) {
        auto b = oracle::ext_dimensions(orr, ores, i, lo, hi);
        auto a = e.graded_dimensions(static_cast<std::size_t>(i), lo, hi);
        for (int d = lo; d <= hi; ++d) {
          std::size_t k = static_cast<std::size_t>(d - lo);
          ++rep.comparisons;
          if (a[k] != b[k]) {
            std::ostringstream s;
            s << where(ws, name) << ": dim Ext^" << i << "_" << d << " engine " << a[k] << " oracle " << b[k];
            rep.mismatches.push_back(s.str());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace agreement

#pragma once

#include <map>
#include <mutex>
#include <string>

#include "tlab/invariants.hpp"
#include "tlab/resolution.hpp"
#include "tlab/workspace.hpp"

namespace testing {

inline const tlab::Workspace& corpus(const std::string& name) {
  static std::map<std::string, tlab::Workspace> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, tlab::parse_workspace(std::string(TLAB_DATA_DIR) + "/ring_" + name + ".tlw")).first;
  }
  return it->second;
}

inline const tlab::Ring& ring(const std::string& name) { return corpus(name).ring; }

inline tlab::Polynomial poly(const tlab::Ring& r, const std::string& text) {
  return tlab::parse_polynomial(text, r->variables(), r->field());
}

inline tlab::ModuleElement vec(const tlab::Ring& r, std::initializer_list<const char*> comps) {
  std::vector<tlab::Polynomial> ps;
  for (const char* c : comps) ps.push_back(poly(r, c));
  return tlab::ModuleElement::from_components(ps);
}

inline tlab::PresentedModule module(const std::string& ring_name, const std::string& expr) {
  return tlab::evaluate_module(corpus(ring_name), expr);
}

inline std::vector<std::size_t> totals(const tlab::PresentedModule& m, std::size_t length) {
  return tlab::betti_table(tlab::resolve(m, length)).totals;
}

inline const char* const kRings[] = {"S", "R1", "R2", "R3", "R4", "R5", "R6"};

}  // namespace testing

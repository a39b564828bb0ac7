#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlab/module.hpp"

namespace tlab {

/// A ring plus named modules, read from a plain-text workspace file.
struct Workspace {
  std::string source;
  Ring ring;
  std::vector<std::pair<std::string, PresentedModule>> modules;

  const PresentedModule* find(std::string_view name) const;
};

/// Infix polynomial over the given variables: integers, names, + - * ^ and
/// parentheses. Positions in errors are relative to `text` (column 1 = first char).
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            const PrimeField& field);

Workspace parse_workspace_text(std::string_view text, std::string source = "<input>");
Workspace parse_workspace(const std::filesystem::path& path);

/// Module expressions: k, m, R, workspace module names, omega(n, E), tr(E),
/// dual(E), sum(E, E, ...), quot(f, ...) for R/(f, ...), ideal(f, ...) for the
/// ideal (f, ...) as a module.
PresentedModule evaluate_module(const Workspace& ws, std::string_view expression);

}  // namespace tlab

#include "tlab/module.hpp"

#include <algorithm>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

std::vector<int> column_degrees(const std::vector<ModuleElement>& cols, const std::vector<int>& twists) {
  std::vector<int> degrees;
  degrees.reserve(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != twists.size()) {
      throw StructuralError("column " + std::to_string(j) + " has rank " +
                            std::to_string(cols[j].rank()) + ", expected " +
                            std::to_string(twists.size()));
    }
    if (!cols[j].is_homogeneous(twists)) {
      throw InputError("column " + std::to_string(j + 1) + " is not homogeneous");
    }
    degrees.push_back(*cols[j].degree(twists));
  }
  return degrees;
}

std::vector<ModuleElement> drop_zero(std::vector<ModuleElement> cols) {
  std::erase_if(cols, [](const ModuleElement& e) { return e.is_zero(); });
  return cols;
}

ModuleElement remove_component(const ModuleElement& e, std::size_t index) {
  std::vector<Polynomial> comps = e.components();
  comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(index));
  ModuleElement r = ModuleElement::from_components(comps);
  return r;
}

ModuleElement apply_images(const std::vector<ModuleElement>& images, std::size_t target_rank,
                           const ModuleElement& v, const Ring& ring) {
  ModuleElement out(target_rank);
  std::vector<Polynomial> comps = v.components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].is_zero()) continue;
    out = add(out, mul(comps[j], images[j], ring->field()), ring->field());
  }
  return ring->reduce(out);
}

}  // namespace

bool HomogeneousMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const ModuleElement& c) { return c.is_zero(); });
}

bool HomogeneousMap::is_minimal() const {
  return std::none_of(columns.begin(), columns.end(),
                      [](const ModuleElement& c) { return c.has_unit_entry(); });
}

void check_homogeneous(const HomogeneousMap& f) {
  if (f.columns.size() != f.source.rank()) {
    throw StructuralError("map has " + std::to_string(f.columns.size()) + " columns but source rank " +
                          std::to_string(f.source.rank()));
  }
  for (std::size_t j = 0; j < f.columns.size(); ++j) {
    const ModuleElement& c = f.columns[j];
    if (c.rank() != f.target.rank()) throw StructuralError("map column rank differs from target rank");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous(f.target.twists) || *c.degree(f.target.twists) != f.source.twists[j]) {
      throw StructuralError("map column " + std::to_string(j) + " is not homogeneous of degree " +
                            std::to_string(f.source.twists[j]));
    }
  }
}

HomogeneousMap compose(const HomogeneousMap& g, const HomogeneousMap& f, const Ring& ring) {
  if (f.target.twists != g.source.twists) throw StructuralError("compose: incompatible free modules");
  HomogeneousMap h{f.source, g.target, {}};
  h.columns.reserve(f.columns.size());
  for (const auto& c : f.columns) h.columns.push_back(apply_images(g.columns, g.target.rank(), c, ring));
  return h;
}

HomogeneousMap dual_map(const HomogeneousMap& f) {
  HomogeneousMap d;
  for (int t : f.target.twists) d.source.twists.push_back(-t);
  for (int t : f.source.twists) d.target.twists.push_back(-t);
  std::vector<TermVector> cols(f.target.rank());
  for (std::size_t j = 0; j < f.columns.size(); ++j) {
    for (const auto& t : f.columns[j].terms()) {
      cols[t.component].push_back({t.monomial, static_cast<std::uint32_t>(j), t.coeff});
    }
  }
  // Terms arrive grouped by source column; restore the module order.
  TermOrder order;
  for (auto& c : cols) {
    std::stable_sort(c.begin(), c.end(),
                     [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
    d.columns.emplace_back(f.source.rank(), std::move(c));
  }
  return d;
}

PresentedModule PresentedModule::free(const Ring& ring, std::vector<int> twists) {
  PresentedModule m{ring, {}, true};
  m.presentation.target.twists = std::move(twists);
  return m;
}

PresentedModule PresentedModule::zero(const Ring& ring) { return free(ring, {}); }

PresentedModule PresentedModule::cokernel(const Ring& ring, std::vector<int> twists,
                                          std::vector<ModuleElement> relations) {
  relations = drop_zero(std::move(relations));
  PresentedModule m{ring, {}, false};
  m.presentation.source.twists = column_degrees(relations, twists);
  m.presentation.target.twists = std::move(twists);
  m.presentation.columns = std::move(relations);
  return m;
}

PresentedModule PresentedModule::cyclic(const Ring& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleElement> rels;
  for (const auto& f : ideal) {
    if (!f.is_homogeneous()) throw InputError("ideal generator " + ring->to_string(f) + " is not homogeneous");
    rels.push_back(ModuleElement::single(1, 0, f));
  }
  return cokernel(ring, {0}, std::move(rels));
}

PresentedModule PresentedModule::residue_field(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) vars.push_back(Polynomial::term(Monomial::variable(i)));
  return minimalize(cyclic(ring, vars));
}

PresentedModule PresentedModule::maximal_ideal(const Ring& ring) {
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    gens.push_back(ModuleElement::single(1, 0, Polynomial::term(Monomial::variable(i))));
  }
  return subquotient(ring, {0}, gens, {});
}

std::vector<std::size_t> minimal_generators(const Ring& ring, const std::vector<int>& twists,
                                            const std::vector<ModuleElement>& background,
                                            const std::vector<ModuleElement>& candidates) {
  std::vector<ModuleElement> bg = ring->ideal_multiples(twists.size());
  std::size_t pure = bg.size();
  bg.insert(bg.end(), background.begin(), background.end());
  TermOrder order;
  return run_groebner(twists, order, bg, candidates, ring->field(), pure).minimal;
}

bool contained_in(const Ring& ring, const std::vector<int>& twists,
                  const std::vector<ModuleElement>& background,
                  const std::vector<ModuleElement>& candidates) {
  return minimal_generators(ring, twists, background, candidates).empty();
}

std::vector<ModuleElement> preimage_kernel(const Ring& ring, const HomogeneousMap& f,
                                           const std::vector<ModuleElement>& extra) {
  const std::size_t g = f.target.rank();
  const std::size_t n = f.source.rank();
  if (n == 0) return {};
  std::vector<int> twists = f.target.twists;
  twists.insert(twists.end(), f.source.twists.begin(), f.source.twists.end());

  std::vector<ModuleElement> bg = ring->ideal_multiples(g + n);
  std::size_t pure = bg.size();
  for (const auto& b : extra) bg.push_back(embed(b, g + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    bg.push_back(add(embed(f.columns[j], g + n, 0), ModuleElement::unit(g + n, g + j), ring->field()));
  }
  TermOrder order;
  order.split = static_cast<std::uint32_t>(g);
  GroebnerRun run = run_groebner(twists, order, bg, {}, ring->field(), pure);

  std::vector<ModuleElement> kernel;
  for (auto& terms : run.basis) {
    if (terms.front().component < g) continue;
    for (auto& t : terms) t.component -= static_cast<std::uint32_t>(g);
    kernel.emplace_back(n, std::move(terms));
  }
  std::vector<ModuleElement> out;
  for (std::size_t i : minimal_generators(ring, f.source.twists, {}, kernel)) {
    out.push_back(ring->reduce(kernel[i]));
  }
  return out;
}

PresentedModule subquotient(const Ring& ring, const std::vector<int>& twists,
                            const std::vector<ModuleElement>& gens,
                            const std::vector<ModuleElement>& rels) {
  std::vector<ModuleElement> relations = drop_zero(rels);
  std::vector<ModuleElement> kept;
  for (std::size_t i : minimal_generators(ring, twists, relations, gens)) {
    kept.push_back(ring->reduce(gens[i]));
  }
  PresentedModule out{ring, {}, true};
  out.presentation.target.twists = column_degrees(kept, twists);
  if (kept.empty()) return out;

  HomogeneousMap h;
  h.target.twists = twists;
  h.columns = kept;
  h.columns.insert(h.columns.end(), relations.begin(), relations.end());
  h.source.twists = column_degrees(h.columns, twists);
  std::vector<ModuleElement> syz = preimage_kernel(ring, h);

  const std::size_t r = kept.size();
  std::vector<ModuleElement> projected;
  for (const auto& s : syz) {
    ModuleElement p = restrict_components(s, 0, r);
    if (!p.is_zero()) projected.push_back(std::move(p));
  }
  const auto& gen_twists = out.presentation.target.twists;
  for (std::size_t i : minimal_generators(ring, gen_twists, {}, projected)) {
    out.presentation.columns.push_back(projected[i]);
  }
  out.presentation.source.twists = column_degrees(out.presentation.columns, gen_twists);
  return out;
}

PresentedModule minimalize(const PresentedModule& m) {
  if (m.minimal) return m;
  const Ring& ring = m.ring;
  const PrimeField& field = ring->field();
  std::vector<int> twists = m.generator_degrees();
  std::vector<ModuleElement> cols;
  for (const auto& c : m.relations()) {
    ModuleElement r = ring->reduce(c);
    if (!r.is_zero()) cols.push_back(std::move(r));
  }

  for (;;) {
    std::size_t j = 0;
    std::size_t row = 0;
    for (; j < cols.size(); ++j) {
      if (cols[j].has_unit_entry(&row)) break;
    }
    if (j == cols.size()) break;
    // Generator `row` is a combination of the others: eliminate it.
    const ModuleElement pivot = cols[j];
    Coeff inv = field.inv(pivot.component(row).lead().coeff);
    std::vector<ModuleElement> next;
    next.reserve(cols.size() - 1);
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == j) continue;
      ModuleElement c = cols[l];
      Polynomial e = c.component(row);
      if (!e.is_zero()) c = sub(c, mul(scale(e, inv, field), pivot, field), field);
      c = remove_component(c, row);
      if (!c.is_zero()) next.push_back(std::move(c));
    }
    cols = std::move(next);
    twists.erase(twists.begin() + static_cast<std::ptrdiff_t>(row));
  }

  PresentedModule out{ring, {}, true};
  for (auto& c : cols) c = ring->reduce(c);
  cols = drop_zero(std::move(cols));
  for (std::size_t i : minimal_generators(ring, twists, {}, cols)) {
    out.presentation.columns.push_back(cols[i]);
  }
  out.presentation.source.twists = column_degrees(out.presentation.columns, twists);
  out.presentation.target.twists = std::move(twists);
  return out;
}

void check_well_defined(const ModuleMap& f) {
  if (f.source.ring != f.target.ring) throw InputError("map between modules over different rings");
  const Ring& ring = f.source.ring;
  const auto& src = f.source.generator_degrees();
  const auto& tgt = f.target.generator_degrees();
  if (f.images.size() != src.size()) {
    throw InputError("map needs one image per source generator (" + std::to_string(src.size()) + ")");
  }
  for (std::size_t j = 0; j < f.images.size(); ++j) {
    const ModuleElement& v = f.images[j];
    if (v.rank() != tgt.size()) throw InputError("image " + std::to_string(j + 1) + " has the wrong rank");
    if (v.is_zero()) continue;
    if (!v.is_homogeneous(tgt) || *v.degree(tgt) != src[j]) {
      throw InputError("image " + std::to_string(j + 1) + " is not homogeneous of degree " +
                       std::to_string(src[j]));
    }
  }
  std::vector<ModuleElement> pushed;
  for (const auto& rel : f.source.relations()) {
    pushed.push_back(apply_images(f.images, tgt.size(), rel, ring));
  }
  if (!contained_in(ring, tgt, f.target.relations(), drop_zero(std::move(pushed)))) {
    throw InputError("map does not send relations of the source into relations of the target");
  }
}

PresentedModule kernel_of_map(const ModuleMap& f) {
  check_well_defined(f);
  const Ring& ring = f.source.ring;
  HomogeneousMap h;
  h.source.twists = f.source.generator_degrees();
  h.target.twists = f.target.generator_degrees();
  h.columns = f.images;
  std::vector<ModuleElement> k = preimage_kernel(ring, h, f.target.relations());
  return subquotient(ring, h.source.twists, k, f.source.relations());
}

bool is_injective(const ModuleMap& f) {
  check_well_defined(f);
  HomogeneousMap h;
  h.source.twists = f.source.generator_degrees();
  h.target.twists = f.target.generator_degrees();
  h.columns = f.images;
  std::vector<ModuleElement> k = preimage_kernel(f.source.ring, h, f.target.relations());
  return contained_in(f.source.ring, h.source.twists, f.source.relations(), k);
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  if (a.ring != b.ring) throw InputError("direct sum of modules over different rings");
  std::vector<int> twists = a.generator_degrees();
  twists.insert(twists.end(), b.generator_degrees().begin(), b.generator_degrees().end());
  const std::size_t rank = twists.size();
  PresentedModule out{a.ring, {}, a.minimal && b.minimal};
  for (const auto& c : a.relations()) out.presentation.columns.push_back(embed(c, rank, 0));
  for (const auto& c : b.relations()) {
    out.presentation.columns.push_back(embed(c, rank, a.num_generators()));
  }
  out.presentation.source.twists = a.presentation.source.twists;
  out.presentation.source.twists.insert(out.presentation.source.twists.end(),
                                        b.presentation.source.twists.begin(),
                                        b.presentation.source.twists.end());
  out.presentation.target.twists = std::move(twists);
  return out;
}

PresentedModule direct_sum(const std::vector<PresentedModule>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  PresentedModule out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

PresentedModule shift(const PresentedModule& m, int d) {
  PresentedModule out = m;
  for (int& t : out.presentation.target.twists) t -= d;
  for (int& t : out.presentation.source.twists) t -= d;
  return out;
}

std::vector<ModuleElement> dual_generators(const PresentedModule& m) {
  HomogeneousMap cover;
  cover.source = m.presentation.source;
  cover.target = m.presentation.target;
  cover.columns = m.relations();
  return preimage_kernel(m.ring, dual_map(cover));
}

FreeSplitting split_free_summands(const PresentedModule& m) {
  FreeSplitting out{{}, minimalize(m)};
  for (;;) {
    PresentedModule& cur = out.residual;
    std::optional<std::size_t> hit;
    for (const auto& u : dual_generators(cur)) {
      std::size_t j = 0;
      if (u.has_unit_entry(&j)) {
        hit = j;
        break;
      }
    }
    if (!hit) break;
    out.free_part.twists.push_back(cur.generator_degrees()[*hit]);
    std::vector<ModuleElement> rels = cur.relations();
    rels.push_back(ModuleElement::unit(cur.num_generators(), *hit));
    out.residual = minimalize(PresentedModule::cokernel(cur.ring, cur.generator_degrees(), std::move(rels)));
  }
  return out;
}

bool is_zero(const PresentedModule& m) { return minimalize(m).num_generators() == 0; }

bool is_free(const PresentedModule& m) { return minimalize(m).num_relations() == 0; }

}  // namespace tlab

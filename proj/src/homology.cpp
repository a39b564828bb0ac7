#include "tlab/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "tlab/errors.hpp"
#include "tlab/invariants.hpp"

namespace tlab {

namespace {

PresentedModule ring_as_module(const Ring& ring) { return PresentedModule::free(ring, {0}); }

}  // namespace

PresentedModule dual(const PresentedModule& m) {
  PresentedModule min = minimalize(m);
  std::vector<int> twists;
  for (int t : min.generator_degrees()) twists.push_back(-t);
  return subquotient(min.ring, twists, dual_generators(min), {});
}

PresentedModule transpose(const PresentedModule& m) {
  PresentedModule min = minimalize(m);
  HomogeneousMap d = dual_map(min.presentation);
  return minimalize(PresentedModule::cokernel(min.ring, d.target.twists, d.columns));
}

std::vector<long> ExtProfile::graded_dimensions(std::size_t i, int lo, int hi) const {
  std::vector<long> dims;
  HilbertSeries hs = hilbert_series(modules.at(i));
  for (int d = lo; d <= hi; ++d) dims.push_back(static_cast<long>(hs.coefficient(d)));
  return dims;
}

ExtComputer::ExtComputer(const PresentedModule& m, const PresentedModule& n)
    : ExtComputer(resolve(m, 0), n) {}

ExtComputer::ExtComputer(Resolution res, const PresentedModule& n) : res_(std::move(res)), n_(n) {
  if (res_.ring != n_.ring) throw InputError("Ext of modules over different rings");
}

std::vector<int> ExtComputer::hom_twists(std::size_t i) const {
  std::vector<int> twists;
  if (i >= res_.modules.size()) return twists;
  for (int a : res_.modules[i].twists) {
    for (int b : n_.generator_degrees()) twists.push_back(b - a);
  }
  return twists;
}

// Precomposition with d_{i+1}: Hom(F_i, N) -> Hom(F_{i+1}, N).
std::vector<ModuleElement> ExtComputer::hom_map(std::size_t i) const {
  const std::size_t ng = n_.num_generators();
  const std::size_t src = res_.modules[i].rank() * ng;
  std::vector<ModuleElement> cols(src);
  if (i >= res_.maps.size()) {
    for (auto& c : cols) c = ModuleElement(0);
    return cols;
  }
  const HomogeneousMap& d = res_.maps[i];
  const std::size_t tgt = d.source.rank() * ng;
  std::vector<TermVector> terms(src);
  for (std::size_t l = 0; l < d.columns.size(); ++l) {
    for (const auto& t : d.columns[l].terms()) {
      for (std::size_t g = 0; g < ng; ++g) {
        terms[t.component * ng + g].push_back(
            {t.monomial, static_cast<std::uint32_t>(l * ng + g), t.coeff});
      }
    }
  }
  TermOrder order;
  for (std::size_t c = 0; c < src; ++c) {
    normalize_terms(terms[c], order, res_.ring->field());
    cols[c] = ModuleElement(tgt, std::move(terms[c]));
  }
  return cols;
}

ExtComputer::Cocycles ExtComputer::cocycles(std::size_t i) {
  extend(res_, i + 1);
  Cocycles out;
  out.twists = hom_twists(i);
  if (out.twists.empty()) return out;
  const Ring& ring = res_.ring;
  const std::size_t ng = n_.num_generators();
  auto relation_blocks = [&](std::size_t blocks) {
    std::vector<ModuleElement> rels;
    for (std::size_t j = 0; j < blocks; ++j) {
      for (const auto& r : n_.relations()) rels.push_back(embed(r, blocks * ng, j * ng));
    }
    return rels;
  };
  HomogeneousMap phi;
  phi.source.twists = out.twists;
  phi.target.twists = hom_twists(i + 1);
  phi.columns = hom_map(i);
  if (phi.target.rank() == 0) {
    for (std::size_t c = 0; c < out.twists.size(); ++c) {
      out.cycles.push_back(ModuleElement::unit(out.twists.size(), c));
    }
  } else {
    out.cycles = preimage_kernel(ring, phi, relation_blocks(i + 1 < res_.modules.size() ? res_.modules[i + 1].rank() : 0));
  }
  out.boundaries = relation_blocks(res_.modules[i].rank());
  if (i > 0) {
    for (auto& c : hom_map(i - 1)) out.boundaries.push_back(std::move(c));
  }
  return out;
}

PresentedModule ExtComputer::module(std::size_t i) {
  Cocycles z = cocycles(i);
  return subquotient(res_.ring, z.twists, z.cycles, z.boundaries);
}

bool ExtComputer::vanishes(std::size_t i) {
  Cocycles z = cocycles(i);
  if (z.cycles.empty()) return true;
  return contained_in(res_.ring, z.twists, z.boundaries, z.cycles);
}

ExtProfile ext(const PresentedModule& m, const PresentedModule& n, std::size_t max_i) {
  ExtComputer computer(resolve(m, max_i + 1), n);
  ExtProfile profile;
  for (std::size_t i = 0; i <= max_i; ++i) profile.modules.push_back(computer.module(i));
  return profile;
}

namespace {

int first_nonvanishing(ExtComputer& computer, std::size_t limit, const char* what) {
  for (std::size_t i = 0; i <= limit; ++i) {
    if (!computer.vanishes(i)) return static_cast<int>(i);
  }
  throw std::logic_error(std::string(what) + " exceeds the number of variables");
}

}  // namespace

int grade(const PresentedModule& n) {
  if (is_zero(n)) return kInfinity;
  ExtComputer computer(n, ring_as_module(n.ring));
  return first_nonvanishing(computer, n.ring->num_variables(), "grade");
}

int depth(const PresentedModule& m) {
  if (is_zero(m)) return kInfinity;
  ExtComputer computer(PresentedModule::residue_field(m.ring), m);
  return first_nonvanishing(computer, m.ring->num_variables(), "depth");
}

TorsionfreeVerdict tf_index(const PresentedModule& m, std::size_t cap) {
  TorsionfreeVerdict v;
  v.cap = cap;
  PresentedModule tr = transpose(m);
  if (tr.num_generators() > 0) {
    ExtComputer computer(tr, ring_as_module(m.ring));
    for (std::size_t j = 1; j <= cap; ++j) {
      if (!computer.vanishes(j)) {
        v.index = j - 1;
        v.witness = j;
        return v;
      }
    }
  }
  v.index = cap;
  v.cap_reached = true;
  return v;
}

namespace {

constexpr std::size_t kMaxGeneric = 16;
constexpr std::size_t kMaxSubsetGenerators = 8;

struct Embedding {
  std::vector<int> target_twists;
  std::vector<ModuleElement> images;  // images of the generators of M
};

void monomials_of_degree(std::size_t nvars, int degree, std::vector<int>& exps, std::size_t i,
                         std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    exps[i] = degree;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int e = degree; e >= 0; --e) {
    exps[i] = e;
    monomials_of_degree(nvars, degree - e, exps, i + 1, out);
  }
}

/// Builds the embedding M -> R^b whose coordinates are the given elements of the dual cover.
Embedding embedding_from(const PresentedModule& m, const std::vector<ModuleElement>& coords,
                         const std::vector<int>& degrees) {
  Embedding e;
  std::vector<TermVector> images(m.num_generators());
  for (std::size_t l = 0; l < coords.size(); ++l) {
    e.target_twists.push_back(-degrees[l]);
    for (const auto& t : coords[l].terms()) {
      images[t.component].push_back({t.monomial, static_cast<std::uint32_t>(l), t.coeff});
    }
  }
  TermOrder order;
  for (auto& terms : images) {
    normalize_terms(terms, order, m.ring->field());
    e.images.emplace_back(coords.size(), std::move(terms));
  }
  return e;
}

/// The canonical evaluation embedding first, then generic maps into smaller
/// free modules: for each dual degree delta, s_delta random combinations of
/// the degree-delta part of M^*.
std::vector<Embedding> candidate_embeddings(const PresentedModule& m, const std::vector<ModuleElement>& duals,
                                            bool broad, std::mt19937_64& rng) {
  const Ring& ring = m.ring;
  const PrimeField& field = ring->field();
  std::vector<int> dual_twists;
  for (int t : m.generator_degrees()) dual_twists.push_back(-t);
  std::vector<int> deg;
  for (const auto& u : duals) deg.push_back(*u.degree(dual_twists));

  std::vector<Embedding> out;
  out.push_back(embedding_from(m, duals, deg));
  if (!broad) return out;

  // Proper subsets of the minimal dual generators, smallest first.
  if (duals.size() <= kMaxSubsetGenerators) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask + 1 < (1U << duals.size()); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t mask : masks) {
      std::vector<ModuleElement> coords;
      std::vector<int> degrees;
      for (std::size_t l = 0; l < duals.size(); ++l) {
        if ((mask >> l) & 1U) {
          coords.push_back(duals[l]);
          degrees.push_back(deg[l]);
        }
      }
      out.push_back(embedding_from(m, coords, degrees));
    }
  }

  std::map<int, std::size_t> counts;
  for (int d : deg) ++counts[d];
  std::vector<int> levels;
  std::vector<std::size_t> caps;
  for (const auto& [d, c] : counts) {
    levels.push_back(d);
    caps.push_back(c);
  }
  // Spanning set of (M^*)_delta: monomial multiples of dual generators.
  std::vector<std::vector<ModuleElement>> spans(levels.size());
  const std::size_t nvars = ring->num_variables();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (std::size_t l = 0; l < duals.size(); ++l) {
      if (deg[l] > levels[k]) continue;
      std::vector<int> exps(nvars, 0);
      std::vector<Monomial> monos;
      monomials_of_degree(nvars, levels[k] - deg[l], exps, 0, monos);
      for (const auto& mono : monos) {
        ModuleElement v = ring->reduce(mul_term(duals[l], mono, 1, field));
        if (!v.is_zero()) spans[k].push_back(std::move(v));
      }
    }
  }

  // Profiles (s_delta) with 0 <= s_delta <= count_delta, smallest total first,
  // excluding the empty and the full profile.
  std::vector<std::vector<std::size_t>> profiles;
  std::vector<std::size_t> s(levels.size(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < s.size() && s[k] == caps[k]) s[k++] = 0;
    if (k == s.size()) break;
    ++s[k];
    if (s != caps) profiles.push_back(s);
  }
  std::stable_sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
    std::size_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa < sb;
  });

  std::uniform_int_distribution<Coeff> coeff(1, static_cast<Coeff>(field.characteristic() - 1));
  std::size_t generic = 0;
  for (const auto& profile : profiles) {
    if (generic++ >= kMaxGeneric) break;
    std::vector<ModuleElement> coords;
    std::vector<int> degrees;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      for (std::size_t c = 0; c < profile[k]; ++c) {
        ModuleElement v(m.num_generators());
        for (const auto& w : spans[k]) v = add(v, scale(w, coeff(rng), field), field);
        if (v.is_zero()) continue;
        coords.push_back(std::move(v));
        degrees.push_back(levels[k]);
      }
    }
    if (!coords.empty()) out.push_back(embedding_from(m, coords, degrees));
  }
  return out;
}

/// Longest exact chain 0 -> M -> G_0 -> ... found within `remaining` steps.
std::size_t longest_chain(const PresentedModule& cur, std::size_t remaining, std::vector<PresentedModule>& chain,
                          std::mt19937_64& rng) {
  if (remaining == 0 || cur.num_relations() == 0) return remaining;  // free or zero: continues forever
  std::vector<ModuleElement> duals = dual_generators(cur);
  if (duals.empty()) return 0;
  std::size_t best = 0;
  // A cokernel is torsionless exactly when its canonical embedding is injective,
  // so the last step needs no search.
  for (auto& e : candidate_embeddings(cur, duals, remaining > 1, rng)) {
    ModuleMap phi{cur, PresentedModule::free(cur.ring, e.target_twists), e.images};
    if (!is_injective(phi)) continue;
    PresentedModule next = minimalize(PresentedModule::cokernel(cur.ring, e.target_twists, std::move(e.images)));
    std::vector<PresentedModule> tail;
    std::size_t got = 1 + longest_chain(next, remaining - 1, tail, rng);
    if (got > best) {
      best = got;
      chain.assign(1, next);
      chain.insert(chain.end(), tail.begin(), tail.end());
    }
    if (best == remaining) break;
  }
  return best;
}

}  // namespace

SyzygyOrderVerdict syzygy_order(const PresentedModule& m, std::size_t cap) {
  SyzygyOrderVerdict v;
  v.cap = cap;
  std::mt19937_64 rng(0x5eed);
  v.order = longest_chain(minimalize(m), cap, v.chain, rng);
  v.cap_reached = v.order == cap;
  return v;
}

ReflexivityWitness reflexivity_witness(const PresentedModule& m, std::size_t a, std::size_t b) {
  ReflexivityWitness w;
  if (a > 0) {
    ExtComputer computer(m, ring_as_module(m.ring));
    for (std::size_t i = 1; i <= a; ++i) {
      if (!computer.vanishes(i)) {
        w.holds = false;
        w.ext_index = i;
        break;
      }
    }
  }
  if (b > 0) {
    PresentedModule tr = transpose(m);
    if (tr.num_generators() > 0) {
      ExtComputer computer(tr, ring_as_module(m.ring));
      for (std::size_t j = 1; j <= b; ++j) {
        if (!computer.vanishes(j)) {
          w.holds = false;
          w.transpose_index = j;
          break;
        }
      }
    }
  }
  return w;
}

bool gab_membership(const PresentedModule& m, std::size_t a, std::size_t b) {
  return reflexivity_witness(m, a, b).holds;
}

bool totally_reflexive_up_to(const PresentedModule& m, std::size_t n) {
  if (n < 1) throw InputError("total reflexivity bound must be at least 1");
  return gab_membership(m, n, n);
}

}  // namespace tlab

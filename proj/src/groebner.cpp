#include "tlab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

/// Divisor lookup over a list of sorted term vectors, grouped by leading component.
class Reducer {
 public:
  Reducer(std::size_t rank, const TermOrder& order, const PrimeField& field)
      : by_component_(rank), order_(order), field_(field) {}

  void push(const TermVector* element) {
    const auto& lead = element->front();
    by_component_[lead.component].push_back(static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(element);
  }

  std::size_t size() const { return elements_.size(); }
  const TermVector& at(std::size_t i) const { return *elements_[i]; }

  /// Index of the first element whose leading term divides t, or -1.
  long find_divisor(const ModuleTerm& t, long skip = -1) const {
    if (t.component >= by_component_.size()) return -1;
    for (std::uint32_t idx : by_component_[t.component]) {
      if (static_cast<long>(idx) == skip) continue;
      if (divides(elements_[idx]->front().monomial, t.monomial)) return idx;
    }
    return -1;
  }

  /// Full reduction. When `quotients` is given, records (divisor, coeff, monomial)
  /// for every step.
  TermVector reduce(TermVector work, long skip = -1,
                    std::vector<std::tuple<std::size_t, Coeff, Monomial>>* quotients = nullptr) const {
    TermVector result;
    std::size_t pos = 0;
    while (pos < work.size()) {
      const ModuleTerm& t = work[pos];
      long d = find_divisor(t, skip);
      if (d < 0) {
        result.push_back(t);
        ++pos;
        continue;
      }
      const TermVector& g = *elements_[d];
      Coeff c = field_.div(t.coeff, g.front().coeff);
      Monomial m = quotient(t.monomial, g.front().monomial);
      if (quotients) quotients->emplace_back(static_cast<std::size_t>(d), c, m);
      work = sub_scaled(work, pos + 1, c, m, g, 1, order_, field_);
      pos = 0;
    }
    return result;
  }

 private:
  std::vector<const TermVector*> elements_;
  std::vector<std::vector<std::uint32_t>> by_component_;
  TermOrder order_;
  const PrimeField& field_;
};

void make_monic(TermVector& v, const PrimeField& field) {
  if (v.empty() || v.front().coeff == 1) return;
  Coeff inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
}

TermVector resort(const ModuleElement& e, const TermOrder& order, const PrimeField& field) {
  TermVector terms = e.terms();
  if (order.split != TermOrder::kNoSplit) normalize_terms(terms, order, field);
  return terms;
}

int element_degree(const ModuleElement& e, std::span<const int> twists, const char* what,
                   std::size_t index) {
  if (e.rank() != twists.size()) {
    throw StructuralError(std::string(what) + " " + std::to_string(index) +
                          " does not live in the ambient free module");
  }
  if (!e.is_homogeneous(twists)) {
    throw InputError(std::string(what) + " " + std::to_string(index) + " is not homogeneous");
  }
  return *e.degree(twists);
}

class Engine {
 public:
  Engine(std::span<const int> twists, const TermOrder& order, const PrimeField& field)
      : twists_(twists.begin(), twists.end()),
        order_(order),
        field_(field),
        reducer_(twists.size(), order, field) {}

  GroebnerRun run(std::span<const ModuleElement> background, std::span<const ModuleElement> counted,
                  std::size_t ideal_multiples) {
    struct Input {
      int degree;
      int kind;  // 0 background, 1 counted
      std::size_t index;
    };
    std::vector<Input> inputs;
    for (std::size_t i = 0; i < background.size(); ++i) {
      if (background[i].is_zero()) continue;
      inputs.push_back({element_degree(background[i], twists_, "background generator", i), 0, i});
    }
    for (std::size_t i = 0; i < counted.size(); ++i) {
      if (counted[i].is_zero()) continue;
      inputs.push_back({element_degree(counted[i], twists_, "generator", i), 1, i});
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.kind < b.kind;
    });

    GroebnerRun out;
    std::size_t next = 0;
    while (next < inputs.size() || !pairs_.empty()) {
      int d = next < inputs.size() ? inputs[next].degree : pairs_.begin()->first;
      if (!pairs_.empty()) d = std::min(d, pairs_.begin()->first);
      process_pairs(d);
      while (next < inputs.size() && inputs[next].degree == d) {
        const Input& in = inputs[next++];
        const ModuleElement& src = in.kind == 0 ? background[in.index] : counted[in.index];
        TermVector original = resort(src, order_, field_);
        TermVector r = reducer_.reduce(original);
        if (r.empty()) continue;
        bool pure = in.kind == 0 && in.index < ideal_multiples && r.size() == original.size() &&
                    std::equal(r.begin(), r.end(), original.begin(), [](const auto& a, const auto& b) {
                      return a.component == b.component && a.coeff == b.coeff && a.monomial == b.monomial;
                    });
        insert(std::move(r), d, pure);
        if (in.kind == 1) out.minimal.push_back(in.index);
      }
    }
    std::sort(out.minimal.begin(), out.minimal.end());
    out.basis.reserve(basis_.size());
    for (auto& e : basis_) out.basis.push_back(std::move(e.terms));
    return out;
  }

 private:
  struct Element {
    TermVector terms;
    int degree;
    bool ideal_multiple;
  };

  static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  void insert(TermVector terms, int degree, bool ideal_multiple) {
    make_monic(terms, field_);
    auto idx = static_cast<std::uint32_t>(basis_.size());
    basis_.push_back({std::move(terms), degree, ideal_multiple});
    reducer_.push(&basis_.back().terms);
    const ModuleTerm& lead = basis_[idx].terms.front();
    for (std::uint32_t i = 0; i < idx; ++i) {
      const ModuleTerm& other = basis_[i].terms.front();
      if (other.component != lead.component) continue;
      if (basis_[i].ideal_multiple && basis_[idx].ideal_multiple) continue;
      int pd = lcm(other.monomial, lead.monomial).degree() + twists_[lead.component];
      pairs_[pd].emplace_back(i, idx);
      pending_.insert(key(i, idx));
    }
  }

  bool pending(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    return pending_.count(key(a, b)) != 0;
  }

  /// Buchberger's chain criterion: some k with lm(k) | lcm(i, j) whose pairs
  /// with i and j are both already resolved.
  bool chain_criterion(std::uint32_t i, std::uint32_t j, const Monomial& l) const {
    const ModuleTerm& lead = basis_[i].terms.front();
    for (std::uint32_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j) continue;
      const ModuleTerm& lk = basis_[k].terms.front();
      if (lk.component != lead.component || !divides(lk.monomial, l)) continue;
      if (!pending(i, k) && !pending(j, k)) return true;
    }
    return false;
  }

  void process_pairs(int d) {
    auto it = pairs_.find(d);
    if (it == pairs_.end()) return;
    auto list = std::move(it->second);
    pairs_.erase(it);
    std::sort(list.begin(), list.end());
    for (auto [i, j] : list) {
      const TermVector& gi = basis_[i].terms;
      const TermVector& gj = basis_[j].terms;
      Monomial l = lcm(gi.front().monomial, gj.front().monomial);
      bool skip = chain_criterion(i, j, l);
      pending_.erase(key(i, j));
      if (skip) continue;
      Monomial ui = quotient(l, gi.front().monomial);
      Monomial uj = quotient(l, gj.front().monomial);
      TermVector si;
      si.reserve(gi.size());
      for (std::size_t t = 1; t < gi.size(); ++t) {
        si.push_back({gi[t].monomial * ui, gi[t].component, gi[t].coeff});
      }
      TermVector s = sub_scaled(si, 0, 1, uj, gj, 1, order_, field_);
      TermVector r = reducer_.reduce(std::move(s));
      if (!r.empty()) insert(std::move(r), d, false);
    }
  }

  std::vector<int> twists_;
  TermOrder order_;
  const PrimeField& field_;
  std::deque<Element> basis_;  // stable addresses for the reducer
  Reducer reducer_;
  std::map<int, std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs_;
  std::unordered_set<std::uint64_t> pending_;
};

}  // namespace

GroebnerRun run_groebner(std::span<const int> twists, const TermOrder& order,
                         std::span<const ModuleElement> background,
                         std::span<const ModuleElement> counted, const PrimeField& field,
                         std::size_t ideal_multiples) {
  Engine engine(twists, order, field);
  return engine.run(background, counted, ideal_multiples);
}

ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& basis, const PrimeField& field) {
  if (f.rank() != basis.rank()) {
    throw StructuralError("normal_form: element of rank " + std::to_string(f.rank()) +
                          " against basis of rank " + std::to_string(basis.rank()));
  }
  TermOrder order;
  Reducer reducer(basis.rank(), order, field);
  for (const auto& g : basis.generators) {
    if (g.rank() != basis.rank()) throw StructuralError("normal_form: basis generator rank mismatch");
    if (!g.is_zero()) reducer.push(&g.terms());
  }
  return ModuleElement(f.rank(), reducer.reduce(f.terms()));
}

GroebnerBasis buchberger(std::span<const ModuleElement> generators, std::span<const int> twists,
                         const PrimeField& field) {
  TermOrder order;
  GroebnerRun run = run_groebner(twists, order, {}, generators, field);
  // The degree-by-degree run never keeps an element whose leading term is
  // divisible by another one, so only tails need reducing.
  std::vector<TermVector>& gens = run.basis;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Reducer reducer(twists.size(), order, field);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) reducer.push(&gens[j]);
    }
    TermVector tail(gens[i].begin() + 1, gens[i].end());
    TermVector reduced = reducer.reduce(std::move(tail));
    reduced.insert(reduced.begin(), gens[i].front());
    gens[i] = std::move(reduced);
  }
  std::vector<ModuleElement> elements;
  elements.reserve(gens.size());
  for (auto& g : gens) elements.emplace_back(twists.size(), std::move(g));
  std::stable_sort(elements.begin(), elements.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    int da = *a.degree(twists);
    int db = *b.degree(twists);
    if (da != db) return da < db;
    return order.compare(a.lead(), b.lead()) > 0;
  });
  GroebnerBasis gb;
  gb.generators = std::move(elements);
  gb.twists.assign(twists.begin(), twists.end());
  gb.reduced = true;
  return gb;
}

std::vector<ModuleElement> syzygy_basis(const GroebnerBasis& basis, const PrimeField& field) {
  const auto& gens = basis.generators;
  const std::size_t m = gens.size();
  std::vector<int> syz_twists(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i].is_zero()) throw StructuralError("syzygy_basis: zero generator in basis");
    syz_twists[i] = *gens[i].degree(basis.twists);
  }
  TermOrder order;
  Reducer reducer(basis.rank(), order, field);
  for (const auto& g : gens) reducer.push(&g.terms());

  std::vector<ModuleElement> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const ModuleTerm& li = gens[i].lead();
      const ModuleTerm& lj = gens[j].lead();
      if (li.component != lj.component) continue;
      Monomial l = lcm(li.monomial, lj.monomial);
      Monomial ui = quotient(l, li.monomial);
      Monomial uj = quotient(l, lj.monomial);
      // S = lc_j * ui * g_i - lc_i * uj * g_j, leading terms cancel.
      TermVector si;
      for (std::size_t t = 1; t < gens[i].terms().size(); ++t) {
        const auto& term = gens[i].terms()[t];
        si.push_back({term.monomial * ui, term.component, field.mul(term.coeff, lj.coeff)});
      }
      TermVector s = sub_scaled(si, 0, li.coeff, uj, gens[j].terms(), 1, order, field);
      std::vector<std::tuple<std::size_t, Coeff, Monomial>> quotients;
      TermVector r = reducer.reduce(std::move(s), -1, &quotients);
      if (!r.empty()) throw StructuralError("syzygy_basis: input is not a Gröbner basis");
      TermVector syz;
      syz.push_back({ui, static_cast<std::uint32_t>(i), lj.coeff});
      syz.push_back({uj, static_cast<std::uint32_t>(j), field.neg(li.coeff)});
      for (auto& [k, c, mono] : quotients) {
        syz.push_back({mono, static_cast<std::uint32_t>(k), field.neg(c)});
      }
      normalize_terms(syz, order, field);
      if (!syz.empty()) out.emplace_back(m, std::move(syz));
    }
  }
  return out;
}

ModuleElement quotient_normal_form(const ModuleElement& f, const GroebnerBasis& basis,
                                   const GroebnerBasis& defining, const PrimeField& field) {
  if (f.rank() != basis.rank()) {
    throw StructuralError("quotient_normal_form: rank mismatch between element and basis");
  }
  std::vector<ModuleElement> gens = basis.generators;
  for (std::size_t c = 0; c < basis.rank(); ++c) {
    for (const auto& h : defining.generators) gens.push_back(ModuleElement::single(basis.rank(), c, h.component(0)));
  }
  GroebnerBasis full = buchberger(gens, basis.twists, field);
  return normal_form(f, full, field);
}

}  // namespace tlab

#include <doctest.h>

#include <random>

#include "../oracle/bridge.hpp"
#include "helpers.hpp"
#include "tlab/errors.hpp"
#include "tlab/groebner.hpp"

using namespace tlab;
using testing::poly;
using testing::ring;
using testing::vec;

namespace {

GroebnerBasis ideal_gb(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<ModuleElement> els;
  for (const char* g : gens) els.push_back(ModuleElement::single(1, 0, poly(r, g)));
  std::vector<int> twists{0};
  return buchberger(els, twists, r->field());
}

std::vector<std::string> as_strings(const Ring& r, const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators) out.push_back(r->to_string(g.component(0)));
  return out;
}

}  // namespace

TEST_SUITE("algebra_kernel") {

TEST_CASE("prime field arithmetic") {
  PrimeField f;
  CHECK(f.characteristic() == 32003);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Coeff a = 1 + rng() % 32002;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.sub(a, a) == 0);
  }
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_signed(32002) == -1);
  CHECK_THROWS_AS(PrimeField(32004), InputError);
  CHECK_THROWS_AS(f.inv(0), StructuralError);
}

TEST_CASE("degrevlex order") {
  const Ring& s = ring("R3");  // variables x, y, z
  auto lead = [&](const char* t) { return poly(s, t).lead().monomial; };
  CHECK(degrevlex_compare(lead("x^2"), lead("x*y")) > 0);
  CHECK(degrevlex_compare(lead("x*y"), lead("y^2")) > 0);
  CHECK(degrevlex_compare(lead("y^2"), lead("x*z")) > 0);
  CHECK(degrevlex_compare(lead("x*z"), lead("y*z")) > 0);
  CHECK(degrevlex_compare(lead("y*z"), lead("z^2")) > 0);
  CHECK(degrevlex_compare(lead("z^3"), lead("x^2")) > 0);
  Polynomial p = poly(s, "z^2 + x*y - y*z + 3*x^2");
  CHECK(s->to_string(p) == "3*x^2 + x*y - y*z + z^2");
  CHECK(p.is_homogeneous());
  CHECK_FALSE(poly(s, "x^2 + y").is_homogeneous());
}

TEST_CASE("module order is term over position") {
  const Ring& s = ring("S");
  ModuleElement v = vec(s, {"y", "x"});
  CHECK(v.lead().component == 1);  // x e_2 beats y e_1
  ModuleElement w = vec(s, {"x", "x"});
  CHECK(w.lead().component == 0);  // tie on the monomial: lower index first
}

TEST_CASE("normal_form examples") {
  const Ring& s = ring("S");
  const PrimeField& f = s->field();
  auto nf = [&](const char* p, const GroebnerBasis& gb) {
    return s->to_string(normal_form(ModuleElement::single(1, 0, poly(s, p)), gb, f).component(0));
  };
  CHECK(nf("x^2*y", ideal_gb(s, {"x^2"})) == "0");
  CHECK(nf("y^3", ideal_gb(s, {"x^2", "x*y"})) == "y^3");
  GroebnerBasis gb = ideal_gb(s, {"x^2", "x*y + y^2", "y^3"});
  CHECK(nf("x*(x*y + y^2)", gb) == "0");

  // Oracle: x*(xy+y^2) lies in the ideal by degree-3 linear algebra over S.
  oracle::GradedRing os(bridge::to_oracle(s));
  std::vector<std::vector<oracle::Poly>> gens;
  for (const char* g : {"x^2", "x*y + y^2", "y^3"}) gens.push_back({bridge::to_oracle(poly(s, g), f, 2)});
  CHECK(oracle::in_submodule(os, {{0}}, gens, {bridge::to_oracle(poly(s, "x*(x*y + y^2)"), f, 2)}));

  ModuleElement two = vec(s, {"x", "y"});
  CHECK_THROWS_AS(normal_form(two, gb, f), StructuralError);
}

TEST_CASE("normal_form is idempotent and homogeneous") {
  const Ring& r = ring("R4");
  const PrimeField& f = r->field();
  GroebnerBasis gb = ideal_gb(r, {"x^2", "x*y", "y^2*z", "x*z + y*z"});
  for (const char* p : {"x^3 + y^3 + z^3", "x*y*z + z^3", "y^2*z^2 - x^2*z^2 + y*z^3", "z^4"}) {
    ModuleElement e = ModuleElement::single(1, 0, poly(r, p));
    ModuleElement once = normal_form(e, gb, f);
    CHECK(normal_form(once, gb, f) == once);
    CHECK(once.is_homogeneous(std::vector<int>{0}));
  }
}

TEST_CASE("buchberger examples") {
  const Ring& s = ring("S");
  CHECK(as_strings(s, ideal_gb(s, {"x^2", "x*y"})) == std::vector<std::string>{"x^2", "x*y"});
  const Ring& t = ring("R3");
  CHECK(as_strings(t, ideal_gb(t, {"x*y", "x*z"})) == std::vector<std::string>{"x*y", "x*z"});
  GroebnerBasis gb = ideal_gb(s, {"x^2", "x*y + y^2"});
  CHECK(gb.reduced);
  CHECK(as_strings(s, gb) == std::vector<std::string>{"x^2", "x*y + y^2", "y^3"});

  // Oracle: y^3 is in (x^2, xy+y^2) and adding it changes no graded piece up to degree 4.
  const PrimeField& f = s->field();
  oracle::GradedRing os(bridge::to_oracle(s));
  std::vector<std::vector<oracle::Poly>> gens{{bridge::to_oracle(poly(s, "x^2"), f, 2)},
                                              {bridge::to_oracle(poly(s, "x*y + y^2"), f, 2)}};
  CHECK(oracle::in_submodule(os, {{0}}, gens, {bridge::to_oracle(poly(s, "y^3"), f, 2)}));
  oracle::ModuleData a{{0}, gens};
  oracle::ModuleData b = a;
  b.relations.push_back({bridge::to_oracle(poly(s, "y^3"), f, 2)});
  for (int d = 0; d <= 4; ++d) CHECK(oracle::hilbert_function(os, a, d) == oracle::hilbert_function(os, b, d));
}

TEST_CASE("buchberger is deterministic and rejects inhomogeneous input") {
  const Ring& r = ring("R6");
  auto run = [&] { return as_strings(r, ideal_gb(r, {"x^2 + y*w", "y^2 - z*w", "y*z + x*w", "z^2*w"})); };
  auto first = run();
  for (int i = 0; i < 3; ++i) CHECK(run() == first);
  std::vector<ModuleElement> bad{ModuleElement::single(1, 0, poly(r, "x^2")),
                                 ModuleElement::single(1, 0, poly(r, "x^2 + y"))};
  std::vector<int> twists{0};
  try {
    buchberger(bad, twists, r->field());
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
  }
}

TEST_CASE("syzygy_basis examples") {
  const Ring& s = ring("S");
  const PrimeField& f = s->field();
  GroebnerBasis xy = ideal_gb(s, {"x", "y"});
  auto syz = syzygy_basis(xy, f);
  REQUIRE(syz.size() == 1);
  auto c = syz[0].components();
  // Koszul relation up to scalar: c0*x + c1*y = 0 with both entries linear.
  CHECK(add(mul(c[0], poly(s, "x"), f), mul(c[1], poly(s, "y"), f), f).is_zero());
  CHECK(c[0].degree() == 1);
  CHECK(c[1].degree() == 1);
  CHECK(syzygy_basis(ideal_gb(s, {"x^2"}), f).empty());
}

TEST_CASE("kernel of (x, y) over R1 matches the oracle") {
  const Ring& r = ring("R1");
  const PrimeField& f = r->field();
  HomogeneousMap m;
  m.source.twists = {1, 1};
  m.target.twists = {0};
  m.columns = {ModuleElement::single(1, 0, poly(r, "x")), ModuleElement::single(1, 0, poly(r, "y"))};
  auto kernel = preimage_kernel(r, m);
  std::vector<ModuleElement> expected{vec(r, {"x", "0"}), vec(r, {"y", "0"}), vec(r, {"0", "x"})};
  CHECK(kernel.size() == 3);

  oracle::GradedRing orr(bridge::to_oracle(r));
  oracle::FreeData src{{1, 1}};
  std::vector<std::vector<oracle::Poly>> got, want;
  for (const auto& v : kernel) got.push_back(bridge::to_oracle(v, r));
  for (const auto& v : expected) want.push_back(bridge::to_oracle(v, r));
  for (const auto& v : want) CHECK(oracle::in_submodule(orr, src, got, v));
  for (const auto& v : got) CHECK(oracle::in_submodule(orr, src, want, v));
  // Every kernel vector is killed by the map (oracle arithmetic in R1).
  oracle::ModuleData image{{0}, {{bridge::to_oracle(poly(r, "x"), f, 2)}, {bridge::to_oracle(poly(r, "y"), f, 2)}}};
  for (int d = 2; d <= 3; ++d) {
    // dim ker_d = dim (R^2(-1))_d - dim (x,y)_d, computed by the oracle.
    std::int64_t source_dim = 2 * static_cast<std::int64_t>(orr.dim(d - 1));
    std::int64_t image_dim = static_cast<std::int64_t>(orr.dim(d)) - oracle::hilbert_function(orr, image, d);
    oracle::ModuleData span{{1, 1}, want};
    std::int64_t ker_dim = source_dim - oracle::hilbert_function(orr, span, d);
    CHECK(ker_dim == source_dim - image_dim);
  }
}

TEST_CASE("quotient_normal_form examples") {
  const Ring& r = ring("R1");
  const PrimeField& f = r->field();
  const GroebnerBasis& ideal = r->ideal_basis();
  GroebnerBasis none;
  none.twists = {0};
  CHECK(quotient_normal_form(ModuleElement::single(1, 0, poly(r, "x^2")), none, ideal, f).is_zero());
  CHECK(r->to_string(quotient_normal_form(ModuleElement::single(1, 0, poly(r, "y^2")), none, ideal, f).component(0)) ==
        "y^2");
  std::vector<ModuleElement> gens{vec(r, {"x", "0"}), vec(r, {"y", "0"}), vec(r, {"0", "x"})};
  std::vector<int> twists{0, 0};
  GroebnerBasis gb = buchberger(gens, twists, f);
  ModuleElement target = vec(r, {"y^3", "0"});
  CHECK(quotient_normal_form(target, gb, ideal, f).is_zero());
  oracle::GradedRing orr(bridge::to_oracle(r));
  std::vector<std::vector<oracle::Poly>> og;
  for (const auto& g : gens) og.push_back(bridge::to_oracle(g, r));
  CHECK(oracle::in_submodule(orr, {{0, 0}}, og, bridge::to_oracle(target, r)));
  CHECK_FALSE(quotient_normal_form(vec(r, {"0", "y^3"}), gb, ideal, f).is_zero());
  CHECK_FALSE(oracle::in_submodule(orr, {{0, 0}}, og, bridge::to_oracle(vec(r, {"0", "y^3"}), r)));
}

}  // TEST_SUITE

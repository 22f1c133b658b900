#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "flowzeta/zeta.hpp"
#include "oracles.hpp"

using namespace flowzeta;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kNames = {"v", "t"};
LaurentPoly P(const std::string& s) { return parse_laurent(s, kNames); }

const CellModel& ay_model() {
  static const CellModel m = build_model(parse_endomorphism(slurp(FLOWZETA_DATA_DIR "/ay_endomorphism.txt")).map);
  return m;
}

const ZetaFunction& ay_zeta() {
  static const ZetaFunction z = zeta(ay_model());
  return z;
}

// Monomial exponents (v, t) of det(Id - t F1) and det(Id - t F0), typed in
// from the displayed formulas rather than computed.
const std::vector<oracle::Pt> kNumeratorSupport = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}};
const std::vector<oracle::Pt> kDenominatorSupport = {{0, 1}};
const std::vector<oracle::Pt> kReducedSupport = {{1, 2}, {1, 3}, {1, 4}, {2, 6}};

// Brute-force section enumeration by degree over a generous box.
std::set<std::pair<long, long>> brute_sections(long degree, long box) {
  std::set<std::pair<long, long>> out;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b) {
      bool positive = true;
      for (const auto& e : kNumeratorSupport) positive = positive && a * e[0] + b * e[1] > 0;
      for (const auto& e : kDenominatorSupport) positive = positive && a * e[0] + b * e[1] > 0;
      if (!positive) continue;
      long deg = 0;
      for (const auto& e : kReducedSupport) deg = std::max(deg, a * e[0] + b * e[1]);
      if (deg == degree) out.insert({a, b});
    }
  return out;
}

std::set<std::pair<long, long>> classes(const std::vector<SectionClass>& s) {
  std::set<std::pair<long, long>> out;
  for (const auto& c : s) out.insert({c.u.a.at(0), c.u.b});
  return out;
}

std::vector<oracle::Z> coeffs(const UniPoly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("cell model of the collapsed map") {
  const CellModel& m = ay_model();
  CHECK(m.deck_rank() == 1);
  CHECK(m.cokernel.torsion_invariants == std::vector<Integer>{2});
  CHECK(m.psi == IntMatrix{{0, -1, 0, 0, 1, 0, 1}});
  CHECK(m.f0 == PolyMatrix::identity(1, 1));

  const std::vector<std::vector<std::string>> shown = {
      {"0", "0", "0", "0", "v", "0", "0"}, {"0", "0", "0", "0", "0", "v", "0"},
      {"1", "0", "0", "1", "v", "0", "v"}, {"0", "1", "0", "0", "0", "0", "0"},
      {"0", "0", "1", "0", "0", "0", "0"}, {"1", "1", "1", "2", "0", "0", "0"},
      {"0", "-v^-1", "-1", "0", "1", "1", "1"}};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(m.f1(i, j) == parse_laurent(shown[i][j], {"v"}));
}

TEST_CASE("degenerate and small models") {
  CHECK_THROWS_AS(build_model(FreeEndomorphism(1, {Word::generator(0).power(2)})), DegenerateQuotient);

  const CellModel id = build_model(FreeEndomorphism::identity(1));
  CHECK(id.psi == IntMatrix{{1}});
  CHECK(id.f1 == PolyMatrix::identity(1, 1));

  // a -> b a b^-1, b -> b: quotient of rank two
  const CellModel two = build_model(FreeEndomorphism(
      2, {Word::generator(1) * Word::generator(0) * Word::generator(1, -1), Word::generator(1)}));
  CHECK(two.deck_rank() == 2);
  const ZetaFunction z = zeta(two);
  const std::vector<std::string> names = zeta_variable_names(2);
  REQUIRE(z.reduced);
  CHECK(*z.reduced == parse_laurent("1 - v2*t", names));
}

TEST_CASE("zeta function") {
  const ZetaFunction& z = ay_zeta();
  CHECK(z.numerator == P("1 - t - v*t^2 - 3*v*t^3 + 3*v*t^4 + v*t^5 + v^2*t^6 - v^2*t^7"));
  CHECK(z.denominator == P("1 - t"));
  REQUIRE(z.reduced);
  CHECK(*z.reduced == P("1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6"));
  CHECK(z.num_deck_vars == 1);

  PolyMatrix f1(1, 1, 1);
  f1(0, 0) = LaurentPoly::variable(1, 0);
  const ZetaFunction nu = zeta(PolyMatrix::identity(1, 1), f1);
  CHECK(nu.numerator == P("1 - v*t"));
  CHECK(nu.denominator == P("1 - t"));
  CHECK_FALSE(nu.reduced);

  const ZetaFunction sq = zeta(PolyMatrix::identity(1, 1), PolyMatrix::identity(2, 1));
  REQUIRE(sq.reduced);
  CHECK(*sq.reduced == P("1 - t"));
}

TEST_CASE("section test and specializations") {
  const ZetaFunction& z = ay_zeta();
  CHECK(is_section(z, {{0}, 1}));
  CHECK_FALSE(is_section(z, {{0}, 0}));
  CHECK_FALSE(is_section(z, {{-2}, 1}));

  const SectionClass fiber = section(z, {{0}, 1});
  CHECK(fiber.poly == UniPoly{1, 0, -1, -4, -1, 0, 1});
  CHECK(fiber.degree == 6);
  const SectionClass small = section(z, {{-1}, 1});
  CHECK(small.poly == UniPoly{1, -1, -4, -1, 1});
  CHECK(small.degree == 4);
  const SectionClass big = section(z, {{1}, 1});
  CHECK(big.poly == UniPoly{1, 0, 0, -1, -4, -1, 0, 0, 1});
  CHECK(big.degree == 8);
  CHECK_THROWS_AS(section(z, {{-2}, 1}), std::invalid_argument);

  // the general formula t^{2a+6b} - t^{a+4b} - 4t^{a+3b} - t^{a+2b} + 1
  for (long b = 1; b <= 4; ++b)
    for (long a = 1 - 2 * b; a <= 5; ++a) {
      const SectionClass s = section(z, {{a}, b});
      UniPoly expected = UniPoly{1} + UniPoly::monomial(2 * a + 6 * b) - UniPoly::monomial(a + 4 * b) -
                         UniPoly::monomial(a + 3 * b, 4) - UniPoly::monomial(a + 2 * b);
      REQUIRE(s.poly == expected);
    }
}

TEST_CASE("section invariants") {
  const ZetaFunction& z = ay_zeta();
  for (long d = 1; d <= 20; ++d) {
    for (const auto& s : sections_with_degree(z, d)) {
      REQUIRE(is_section(z, s.u));
      const auto u = s.u.functional();
      REQUIRE(specialize(z.numerator, u) == specialize(z.denominator, u) * s.poly);
      REQUIRE(s.poly.coefficient(0) == 1);
      REQUIRE(s.poly.degree() == s.degree);
      // symmetry transfer from the witness v^2 t^6
      const UniPoly rev = s.poly.reversed();
      REQUIRE((rev == s.poly || rev == -s.poly));
    }
  }
}

TEST_CASE("sections by degree match brute force") {
  const ZetaFunction& z = ay_zeta();
  CHECK(classes(sections_with_degree(z, 6)) == std::set<std::pair<long, long>>{{-3, 2}, {0, 1}});
  CHECK(sections_with_degree(z, 2).empty());
  for (long d = 1; d <= 24; ++d) {
    const auto found = sections_with_degree(z, d);
    REQUIRE(classes(found) == brute_sections(d, 80));
    REQUIRE(std::is_sorted(found.begin(), found.end(),
                           [](const SectionClass& x, const SectionClass& y) { return x.u < y.u; }));
    // a doubled search box changes nothing
    const long wide = 2 * d * 3;
    REQUIRE(classes(sections_with_degree(z, d, wide)) == classes(found));
  }
  for (std::size_t g = 2; g <= 10; ++g) {
    std::set<std::pair<long, long>> expected;
    for (long b = 1; b <= static_cast<long>(g) - 1; ++b) expected.insert({static_cast<long>(g) - 3 * b, b});
    REQUIRE(classes(sections_with_degree(z, 2 * static_cast<long>(g))) == expected);
  }
}

TEST_CASE("minimal section degree") {
  const MinDegree md = min_section_degree(ay_zeta());
  CHECK(md.degree == 4);
  REQUIRE(md.witnesses.size() == 1);
  CHECK(md.witnesses[0].u == ClassWeights{{-1}, 1});
  for (long d = 1; d < 4; ++d) CHECK(brute_sections(d, 80).empty());

  ZetaFunction synth;
  synth.numerator = P("1 - v*t");
  synth.denominator = LaurentPoly::constant(2, 1);
  synth.reduced = synth.numerator;
  synth.num_deck_vars = 1;
  // u(v t) = a + b is the degree, so (0,1) already gives degree 1.
  const MinDegree s = min_section_degree(synth);
  CHECK(s.degree == 1);
  REQUIRE(s.witnesses.size() == 1);
  CHECK(s.witnesses[0].u == ClassWeights{{0}, 1});
}

TEST_CASE("divisibility") {
  const UniPoly p01{1, 0, -1, -4, -1, 0, 1};
  const UniPoly m3 = stretch_minimal_polynomial(3);
  CHECK(m3 == UniPoly{-1, -1, -1, 1});
  const auto q = exact_quotient(p01, m3);
  REQUIRE(q);
  CHECK(*q == UniPoly{-1, 1, 1, 1});
  CHECK(*q * m3 == p01);
  CHECK(oracle::remainder_monic(coeffs(p01), coeffs(m3)).empty());

  const UniPoly p11{1, 0, 0, -1, -4, -1, 0, 0, 1};
  CHECK_FALSE(divides(p11, stretch_minimal_polynomial(4)));
  CHECK(divides(p11, UniPoly{1}));
  CHECK(divides(UniPoly{4, 2}, UniPoly{2}));
  CHECK_FALSE(divides(UniPoly{3, 2}, UniPoly{2}));
  CHECK_THROWS(exact_quotient(p11, UniPoly{}));
}

TEST_CASE("genus search") {
  const ZetaFunction& z = ay_zeta();
  const auto rows = genus_search(z, 3, 10);
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    REQUIRE(row.minimal_polynomial == stretch_minimal_polynomial(row.genus));
    REQUIRE(row.entries.size() == row.genus - 1);
    for (const auto& e : row.entries) {
      const bool oracle_divides =
          oracle::remainder_monic(coeffs(e.section.poly), coeffs(row.minimal_polynomial)).empty();
      REQUIRE(e.divisible == oracle_divides);
      if (e.divisible) {
        REQUIRE(e.quotient);
        REQUIRE(*e.quotient * row.minimal_polynomial == e.section.poly);
      }
      const bool fiber = row.genus == 3 && e.section.u == ClassWeights{{0}, 1};
      REQUIRE(e.divisible == fiber);
    }
  }
}

TEST_CASE("largest real root") {
  const RootInterval two = largest_real_root(UniPoly{-2, 1});
  CHECK(two.lo <= 2);
  CHECK(two.hi >= 2);

  const Rational tol(1, 1000000000);
  const RootInterval lam = largest_real_root(stretch_minimal_polynomial(3), tol);
  CHECK(lam.hi - lam.lo <= tol);
  CHECK(lam.approx() == doctest::Approx(oracle::largest_root({-1, -1, -1, 1})).epsilon(1e-9));
  CHECK(lam.approx() == doctest::Approx(1.839286755).epsilon(1e-9));
  const RootInterval p01 = largest_real_root(UniPoly{1, 0, -1, -4, -1, 0, 1}, tol);
  CHECK(std::abs(p01.approx() - lam.approx()) <= 1e-9);

  CHECK_THROWS_AS(largest_real_root(UniPoly{1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(largest_real_root(UniPoly{5}), std::invalid_argument);
  CHECK_THROWS_AS(largest_real_root(UniPoly{-2, 1}, Rational(0)), std::invalid_argument);
  // exact rational roots and repeated roots
  const RootInterval rep = largest_real_root(UniPoly{-3, 1} * UniPoly{-3, 1} * UniPoly{1, 1});
  CHECK(rep.lo <= 3);
  CHECK(rep.hi >= 3);
}

TEST_CASE("largest root of a product is the largest factor root") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> co(-6, 6);
  const Rational tol(1, 1000000000);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 100; ++trial) {
    std::vector<UniPoly> factors;
    for (int k = 0; k < 2; ++k) {
      std::vector<Integer> c;
      const int deg = 1 + (trial + k) % 3;
      for (int i = 0; i < deg; ++i) c.push_back(co(rng));
      c.push_back(1 + std::abs(co(rng)));
      factors.emplace_back(c);
    }
    double best = -1e300;
    bool all_real = true;
    for (const auto& f : factors) {
      try {
        best = std::max(best, largest_real_root(f, tol).approx());
      } catch (const std::domain_error&) {
        all_real = false;
      }
    }
    if (!all_real) continue;
    const RootInterval r = largest_real_root(factors[0] * factors[1], tol);
    REQUIRE(std::abs(r.approx() - best) <= 2e-9);
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("sturm counts") {
  const UniPoly p = UniPoly{-1, 1} * UniPoly{-2, 1} * UniPoly{-3, 1};
  const auto chain = sturm_sequence(p);
  CHECK(count_real_roots(chain, Rational(0), Rational(10)) == 3);
  CHECK(count_real_roots(chain, Rational(3, 2), Rational(5, 2)) == 1);
  CHECK(count_real_roots(sturm_sequence(UniPoly{1, 0, 1}), Rational(-10), Rational(10)) == 0);
  const auto lam = sturm_sequence(stretch_minimal_polynomial(3));
  CHECK(count_real_roots(lam, Rational(-100), Rational(100)) == 1);
}

}  // TEST_SUITE

#include "flowzeta/zeta.hpp"

#include <algorithm>
#include <cstdlib>

namespace flowzeta {

CellModel build_model(const FreeEndomorphism& phi, std::optional<std::size_t> designated) {
  const std::size_t n = phi.rank();
  CellModel model;
  model.cokernel = cokernel(abelianization(phi) - IntMatrix::identity(n));
  if (model.cokernel.free_rank == 0)
    throw DegenerateQuotient("free quotient of coker(ab - Id) is trivial; no deck variables");

  if (model.cokernel.free_rank == 1) {
    if (!designated) {
      for (std::size_t j = n; j-- > 0;) {
        if (abs(model.cokernel.projection(0, j)) == 1) {
          designated = j;
          break;
        }
      }
    }
    if (designated) model.cokernel = normalize_projection(model.cokernel, *designated);
  }
  model.psi = model.cokernel.projection;
  const std::size_t r = model.psi.rows();
  model.f1 = fox_jacobian(phi, model.psi);
  model.f0 = PolyMatrix::identity(1, r);
  return model;
}

namespace {

// Id - t F over the ring with t appended as the last variable.
PolyMatrix id_minus_t(const PolyMatrix& f) {
  const std::size_t nv = f.num_vars() + 1;
  const LaurentPoly t = LaurentPoly::variable(nv, nv - 1);
  PolyMatrix out(f.rows(), f.cols(), nv);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      LaurentPoly e = -(t * f(i, j).with_extra_vars(1));
      if (i == j) e += LaurentPoly::constant(nv, 1);
      out(i, j) = std::move(e);
    }
  return out;
}

}  // namespace

ZetaFunction zeta(const PolyMatrix& f0, const PolyMatrix& f1) {
  if (f0.num_vars() != f1.num_vars())
    throw std::invalid_argument("zeta: F0 and F1 live over different rings");
  ZetaFunction z;
  z.num_deck_vars = f1.num_vars();
  z.numerator = det_ring(id_minus_t(f1));
  z.denominator = det_ring(id_minus_t(f0));
  try {
    z.reduced = exact_div(z.numerator, z.denominator);
  } catch (const InexactDivision&) {
    z.reduced.reset();
  }
  return z;
}

ExponentFunctional ClassWeights::functional() const {
  ExponentFunctional u{a};
  u.weights.push_back(b);
  return u;
}

bool is_section(const ZetaFunction& z, const ClassWeights& u) {
  if (u.a.size() != z.num_deck_vars)
    throw std::invalid_argument("is_section: class has the wrong number of deck weights");
  const ExponentFunctional f = u.functional();
  auto positive_on = [&f](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      if (std::all_of(e.begin(), e.end(), [](long x) { return x == 0; })) continue;
      if (f(e) <= 0) return false;
    }
    return true;
  };
  return positive_on(z.numerator) && positive_on(z.denominator);
}

SectionClass section(const ZetaFunction& z, const ClassWeights& u, const Rational& tol) {
  if (!z.reduced) throw std::invalid_argument("section: zeta function has no reduced form");
  if (!is_section(z, u)) throw std::invalid_argument("section: class is not positive on the zeta support");
  SectionClass s;
  s.u = u;
  s.poly = specialize(*z.reduced, u.functional());
  s.degree = s.poly.degree();
  if (s.degree >= 1) {
    try {
      s.leading_root = largest_real_root(s.poly, tol);
    } catch (const std::domain_error&) {
      s.leading_root.reset();
    }
  }
  return s;
}

namespace {

void require_single_deck_variable(const ZetaFunction& z, const char* who) {
  if (z.num_deck_vars != 1)
    throw std::invalid_argument(std::string(who) + ": section enumeration needs exactly one deck variable");
  if (!z.reduced) throw std::invalid_argument(std::string(who) + ": zeta function has no reduced form");
}

long max_deck_exponent(const ZetaFunction& z) {
  long m = 0;
  for (const LaurentPoly* p : {&z.numerator, &z.denominator, &*z.reduced})
    for (const auto& [e, c] : p->terms()) m = std::max(m, std::labs(e[0]));
  return m;
}

}  // namespace

std::vector<SectionClass> sections_with_degree(const ZetaFunction& z, long degree,
                                               std::optional<long> a_bound, const Rational& tol) {
  require_single_deck_variable(z, "sections_with_degree");
  std::vector<SectionClass> found;
  if (degree < 1) return found;
  const long bound = a_bound.value_or(degree * (max_deck_exponent(z) + 1));
  for (long a = -bound; a <= bound; ++a)
    for (long b = 1; b <= degree; ++b) {
      const ClassWeights u{{a}, b};
      if (!is_section(z, u)) continue;
      if (specialize(*z.reduced, u.functional()).degree() != degree) continue;
      found.push_back(section(z, u, tol));
    }
  std::sort(found.begin(), found.end(),
            [](const SectionClass& x, const SectionClass& y) { return x.u < y.u; });
  return found;
}

MinDegree min_section_degree(const ZetaFunction& z, long max_degree) {
  require_single_deck_variable(z, "min_section_degree");
  for (long d = 1; d <= max_degree; ++d) {
    auto found = sections_with_degree(z, d);
    if (!found.empty()) return {d, std::move(found)};
  }
  throw std::runtime_error("min_section_degree: no section class up to degree " +
                           std::to_string(max_degree));
}

std::vector<GenusRow> genus_search(const ZetaFunction& z, std::size_t lo, std::size_t hi,
                                   std::optional<long> a_bound) {
  require_single_deck_variable(z, "genus_search");
  std::vector<GenusRow> rows;
  for (std::size_t g = lo; g <= hi; ++g) {
    GenusRow row;
    row.genus = g;
    row.minimal_polynomial = stretch_minimal_polynomial(g);
    for (auto& s : sections_with_degree(z, static_cast<long>(2 * g), a_bound)) {
      GenusRow::Entry entry{std::move(s), false, std::nullopt};
      entry.quotient = exact_quotient(entry.section.poly, row.minimal_polynomial);
      entry.divisible = entry.quotient.has_value();
      row.entries.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace flowzeta

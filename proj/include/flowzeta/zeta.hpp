#pragma once

// Endomorphism -> deck quotient -> cell action -> multivariable Lefschetz
// zeta function -> cross-section classes and their specializations.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flowzeta/laurent.hpp"
#include "flowzeta/linalg.hpp"
#include "flowzeta/roots.hpp"
#include "flowzeta/unipoly.hpp"
#include "flowzeta/words.hpp"

namespace flowzeta {

/// The torsion-free part of coker(ab - Id) is trivial, so there are no deck
/// variables to carry.
class DegenerateQuotient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CellModel {
  CokernelStructure cokernel;
  /// r x n projection onto the deck group Q.
  IntMatrix psi;
  /// Action on the single 0-cell (1 x 1 identity) and on the 1-cells.
  PolyMatrix f0;
  PolyMatrix f1;

  std::size_t deck_rank() const { return psi.rows(); }
};

/// One-vertex cell model of the lifted action. When the free rank is one the
/// projection is normalized so that `designated` (default: the last basis
/// element with value +-1) maps to +1. Throws DegenerateQuotient.
CellModel build_model(const FreeEndomorphism& phi,
                      std::optional<std::size_t> designated = std::nullopt);

struct ZetaFunction {
  /// det(Id - t F1) and det(Id - t F0), variables (v1..vr, t).
  LaurentPoly numerator;
  LaurentPoly denominator;
  std::optional<LaurentPoly> reduced;
  std::size_t num_deck_vars = 0;
};

ZetaFunction zeta(const PolyMatrix& f0, const PolyMatrix& f1);

inline ZetaFunction zeta(const CellModel& m) { return zeta(m.f0, m.f1); }

/// A cohomology class: values on the deck generators and on t.
struct ClassWeights {
  std::vector<long> a;
  long b = 0;

  ExponentFunctional functional() const;
  friend auto operator<=>(const ClassWeights&, const ClassWeights&) = default;
};

/// Positive on every non-identity monomial of numerator and denominator.
bool is_section(const ZetaFunction& z, const ClassWeights& u);

struct SectionClass {
  ClassWeights u;
  UniPoly poly;
  /// -Euler characteristic of the section.
  long degree = 0;
  std::optional<RootInterval> leading_root;
};

inline constexpr long kDefaultTolDenominator = 1000000000;

/// Throws std::invalid_argument when u is not a section class or the
/// reduced zeta function is missing.
SectionClass section(const ZetaFunction& z, const ClassWeights& u,
                     const Rational& tol = Rational(1, kDefaultTolDenominator));

/// Every section class of the given degree, sorted by (a, b). The search
/// box is 1 <= b <= d, |a| <= d * (max |v-exponent| + 1) unless `a_bound`
/// overrides the |a| limit. Requires one deck variable and a reduced zeta.
std::vector<SectionClass> sections_with_degree(const ZetaFunction& z, long degree,
                                               std::optional<long> a_bound = std::nullopt,
                                               const Rational& tol = Rational(1, kDefaultTolDenominator));

struct MinDegree {
  long degree = 0;
  std::vector<SectionClass> witnesses;
};

/// Scans d = 1, 2, ... up to max_degree. Throws std::runtime_error if no
/// section turns up.
MinDegree min_section_degree(const ZetaFunction& z, long max_degree = 1000);

struct GenusRow {
  std::size_t genus = 0;
  UniPoly minimal_polynomial;
  struct Entry {
    SectionClass section;
    bool divisible = false;
    std::optional<UniPoly> quotient;
  };
  std::vector<Entry> entries;
};

/// For each g in [lo, hi]: sections of degree 2g and whether
/// x^g - x^{g-1} - ... - 1 divides their specialization.
std::vector<GenusRow> genus_search(const ZetaFunction& z, std::size_t lo, std::size_t hi,
                                   std::optional<long> a_bound = std::nullopt);

}  // namespace flowzeta

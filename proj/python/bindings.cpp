#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flowzeta/ay_surface.hpp"
#include "flowzeta/linalg.hpp"
#include "flowzeta/parse_error.hpp"
#include "flowzeta/roots.hpp"
#include "flowzeta/words.hpp"
#include "flowzeta/zeta.hpp"

namespace py = pybind11;
using namespace flowzeta;

namespace {

// GMP integers cross the boundary as decimal strings so size is unbounded.
py::int_ to_py(const Integer& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_py(q.get_num()), to_py(q.get_den()));
}

IntMatrix matrix_from(const std::vector<std::vector<py::object>>& rows) {
  if (rows.empty()) throw py::value_error("empty matrix");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = from_py(rows[i][j]);
  }
  return m;
}

py::list rows_of(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

py::list ints(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

UniPoly poly_from(const std::vector<py::object>& coeffs) {
  std::vector<Integer> c;
  for (const auto& x : coeffs) c.push_back(from_py(x));
  return UniPoly(c);
}

py::dict section_dict(const SectionClass& s) {
  py::dict d;
  d["a"] = s.u.a.size() == 1 ? py::cast(s.u.a[0]) : py::cast(s.u.a);
  d["b"] = s.u.b;
  d["degree"] = s.degree;
  d["polynomial"] = s.poly.to_string();
  d["coefficients"] = ints(s.poly.coefficients());
  d["leading_root"] = s.leading_root ? py::cast(s.leading_root->approx()) : py::none();
  return d;
}

ZetaFunction zeta_of(const std::string& text) { return zeta(build_model(parse_endomorphism(text).map)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zeta functions of mapping tori (C++ core)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateQuotient>(m, "DegenerateQuotient", PyExc_ValueError);

  m.def("smith_normal_form", [](const std::vector<std::vector<py::object>>& rows) {
    const SnfResult r = smith_normal_form(matrix_from(rows));
    py::dict d;
    d["U"] = rows_of(r.U);
    d["D"] = rows_of(r.D);
    d["V"] = rows_of(r.V);
    d["diagonal"] = ints(r.diagonal());
    return d;
  }, py::arg("matrix"));

  m.def("cokernel", [](const std::vector<std::vector<py::object>>& rows) {
    const CokernelStructure c = cokernel(matrix_from(rows));
    py::dict d;
    d["torsion"] = ints(c.torsion_invariants);
    d["free_rank"] = c.free_rank;
    d["projection"] = rows_of(c.projection);
    return d;
  }, py::arg("matrix"));

  m.def("determinant", [](const std::vector<std::vector<py::object>>& rows) {
    return to_py(determinant(matrix_from(rows)));
  }, py::arg("matrix"));

  m.def("zeta", [](const std::string& text) {
    const EndomorphismSpec spec = parse_endomorphism(text);
    const CellModel model = build_model(spec.map);
    const ZetaFunction z = zeta(model);
    const auto names = zeta_variable_names(model.deck_rank());
    const auto deck = deck_variable_names(model.deck_rank());
    py::dict d;
    d["generators"] = spec.alphabet.names();
    d["torsion"] = ints(model.cokernel.torsion_invariants);
    d["psi"] = rows_of(model.psi);
    std::vector<std::vector<std::string>> f1(model.f1.rows());
    for (std::size_t i = 0; i < model.f1.rows(); ++i)
      for (std::size_t j = 0; j < model.f1.cols(); ++j) f1[i].push_back(model.f1(i, j).to_string(deck));
    d["F1"] = f1;
    d["numerator"] = z.numerator.to_string(names);
    d["denominator"] = z.denominator.to_string(names);
    d["reduced"] = z.reduced ? py::cast(z.reduced->to_string(names)) : py::none();
    return d;
  }, py::arg("endomorphism"), "Zeta function of an endomorphism given in the text file format.");

  m.def("sections_with_degree", [](const std::string& text, long degree, std::optional<long> bound) {
    py::list out;
    for (const auto& s : sections_with_degree(zeta_of(text), degree, bound)) out.append(section_dict(s));
    return out;
  }, py::arg("endomorphism"), py::arg("degree"), py::arg("bound") = py::none());

  m.def("min_section_degree", [](const std::string& text) {
    const MinDegree md = min_section_degree(zeta_of(text));
    py::list w;
    for (const auto& s : md.witnesses) w.append(section_dict(s));
    return py::make_tuple(md.degree, w);
  }, py::arg("endomorphism"));

  m.def("genus_search", [](const std::string& text, std::size_t lo, std::size_t hi) {
    py::list out;
    for (const auto& row : genus_search(zeta_of(text), lo, hi)) {
      for (const auto& e : row.entries) {
        py::dict d = section_dict(e.section);
        d["genus"] = row.genus;
        d["divisible"] = e.divisible;
        out.append(d);
      }
    }
    return out;
  }, py::arg("endomorphism"), py::arg("lo"), py::arg("hi"));

  m.def("verify_words", [](const std::string& text) {
    py::list out;
    for (const auto& c : run_word_checks(text).checks) {
      py::dict d;
      d["label"] = c.label;
      d["line"] = c.line;
      d["lhs"] = c.lhs_text;
      d["rhs"] = c.rhs_text;
      d["holds"] = c.holds;
      out.append(d);
    }
    return out;
  }, py::arg("text"));

  m.def("largest_real_root", [](const std::vector<py::object>& coeffs, const std::string& tol) {
    Rational t(tol);
    t.canonicalize();
    const RootInterval r = largest_real_root(poly_from(coeffs), t);
    return py::make_tuple(fraction(r.lo), fraction(r.hi));
  }, py::arg("coefficients"), py::arg("tol") = "1/1000000000",
     "Isolating interval (lo, hi) of the largest real root; coefficients constant-first.");

  m.def("exact_quotient", [](const std::vector<py::object>& p, const std::vector<py::object>& q) -> py::object {
    const auto r = exact_quotient(poly_from(p), poly_from(q));
    if (!r) return py::none();
    return ints(r->coefficients());
  }, py::arg("p"), py::arg("m"));

  m.def("ay_verify_orbit", [] {
    const ay::Point x0 = ay::base_point();
    const ay::Point x1 = ay::apply_h(x0);
    py::dict d;
    d["x0"] = x0.to_string();
    d["h_x0"] = x1.to_string();
    d["x0_region"] = ay::to_string(ay::classify_region(x0));
    d["h_x0_region"] = ay::to_string(ay::classify_region(x1));
    d["h2_returns"] = ay::apply_h(x1) == x0;
    d["h_moves"] = !(x1 == x0);
    return d;
  });

  m.def("ay_stretch_certificate", [] {
    const auto c = ay::stretch_factor_certificate();
    py::dict d;
    d["polynomial"] = c.polynomial.to_string("x");
    d["vanishes_at_inverse_alpha"] = c.vanishes_at_inverse_alpha;
    return d;
  });
}

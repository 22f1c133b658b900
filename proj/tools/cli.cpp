#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "flowzeta/ay_surface.hpp"
#include "flowzeta/laurent.hpp"
#include "flowzeta/linalg.hpp"
#include "flowzeta/parse_error.hpp"
#include "flowzeta/roots.hpp"
#include "flowzeta/words.hpp"
#include "flowzeta/zeta.hpp"

namespace flowzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Structured };

struct RunConfig {
  std::string input;
  Format format = Format::Text;
  std::optional<long> euler;
  bool min_degree = false;
  std::string genus_range;
  std::string tol = "1/1000000000";
  std::optional<long> bound;
  bool verify_orbit = false;
  bool stretch = false;
  std::string point;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1/1000000000", "3", "0.001" or "1e-9".
Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.find_first_of(".eE") == std::string::npos) {
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw InputError("bad rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  std::string mantissa = text;
  long exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      std::size_t used = 0;
      exp10 = std::stol(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad rational '" + text + "'");
    }
  }
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  Integer num;
  if (mantissa.empty() || num.set_str(mantissa, 10) != 0) throw InputError("bad rational '" + text + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  q = exp10 < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return q;
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

template <typename T>
std::string bracketed(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ']';
  return os.str();
}

Json integers_json(const std::vector<Integer>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) {
    if (x.fits_slong_p()) {
      arr.push_back(x.get_si());
    } else {
      arr.push_back(x.get_str());
    }
  }
  return arr;
}

std::string class_label(const ClassWeights& u) {
  std::ostringstream os;
  os << "(a,b)=(";
  for (std::size_t i = 0; i < u.a.size(); ++i) os << (i ? "," : "") << u.a[i];
  os << ',' << u.b << ')';
  return os.str();
}

Json section_json(const SectionClass& s) {
  Json j;
  j["a"] = s.u.a.size() == 1 ? Json(s.u.a[0]) : Json(s.u.a);
  j["b"] = s.u.b;
  j["degree"] = s.degree;
  j["polynomial"] = s.poly.to_string();
  j["leading_root"] = s.leading_root ? Json(decimal(s.leading_root->approx())) : Json(nullptr);
  return j;
}

std::string section_line(const SectionClass& s) {
  std::ostringstream os;
  os << class_label(s.u) << "  degree " << s.degree << "  p = " << s.poly.to_string();
  if (s.leading_root) os << "  leading root ~ " << decimal(s.leading_root->approx());
  return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_snf(const RunConfig& cfg, std::ostream& out) {
  const IntMatrix m = parse_int_matrix(read_file(cfg.input));
  const SnfResult snf = smith_normal_form(m);
  const CokernelStructure c = cokernel(m);
  if (cfg.format == Format::Structured) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["diagonal"] = integers_json(snf.diagonal());
    j["torsion"] = integers_json(c.torsion_invariants);
    j["free_rank"] = c.free_rank;
    Json proj = Json::array();
    for (std::size_t k = 0; k < c.free_rank; ++k) proj.push_back(integers_json(c.projection.row(k)));
    j["projection"] = proj;
    emit(out, j);
    return kOk;
  }
  out << "diagonal: " << bracketed(snf.diagonal()) << '\n';
  out << "torsion: " << bracketed(c.torsion_invariants) << ", free rank: " << c.free_rank << '\n';
  for (std::size_t k = 0; k < c.free_rank; ++k) out << "projection: " << bracketed(c.projection.row(k)) << '\n';
  return kOk;
}

struct LoadedZeta {
  EndomorphismSpec spec;
  CellModel model;
  ZetaFunction z;
};

LoadedZeta load_zeta(const std::string& path) {
  LoadedZeta lz;
  lz.spec = parse_endomorphism(read_file(path));
  lz.model = build_model(lz.spec.map);
  lz.z = zeta(lz.model);
  return lz;
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  const LoadedZeta lz = load_zeta(cfg.input);
  const auto& model = lz.model;
  const auto& z = lz.z;
  const std::size_t r = model.deck_rank();
  const auto deck_names = deck_variable_names(r);
  const auto ring_names = zeta_variable_names(r);
  const auto& gens = lz.spec.alphabet;

  std::vector<std::vector<std::string>> f1(model.f1.rows());
  for (std::size_t i = 0; i < model.f1.rows(); ++i)
    for (std::size_t j = 0; j < model.f1.cols(); ++j) f1[i].push_back(model.f1(i, j).to_string(deck_names));

  if (cfg.format == Format::Structured) {
    Json j;
    j["generators"] = gens.names();
    j["torsion"] = integers_json(model.cokernel.torsion_invariants);
    j["free_rank"] = model.cokernel.free_rank;
    Json psi = Json::array();
    for (std::size_t k = 0; k < r; ++k) psi.push_back(integers_json(model.psi.row(k)));
    j["psi"] = psi;
    j["F1"] = f1;
    j["numerator"] = z.numerator.to_string(ring_names);
    j["denominator"] = z.denominator.to_string(ring_names);
    j["reduced"] = z.reduced ? Json(z.reduced->to_string(ring_names)) : Json(nullptr);
    emit(out, j);
    return kOk;
  }
  out << "generators: ";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? " " : "") << gens.name(i);
  out << '\n';
  out << "cokernel torsion: " << bracketed(model.cokernel.torsion_invariants)
      << ", free rank: " << model.cokernel.free_rank << '\n';
  for (std::size_t k = 0; k < r; ++k) out << "psi_Q: " << bracketed(model.psi.row(k)) << '\n';
  out << "F1:\n";
  for (std::size_t i = 0; i < f1.size(); ++i) out << "  " << gens.name(i) << ": " << bracketed(f1[i]) << '\n';
  out << "numerator: " << z.numerator.to_string(ring_names) << '\n';
  out << "denominator: " << z.denominator.to_string(ring_names) << '\n';
  if (z.reduced) {
    out << "zeta: " << z.reduced->to_string(ring_names) << '\n';
  } else {
    out << "zeta: not reducible\n";
  }
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_genus_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("genus range must look like lo..hi");
  long lo = 0, hi = 0;
  try {
    std::size_t u1 = 0, u2 = 0;
    lo = std::stol(text.substr(0, dots), &u1);
    hi = std::stol(text.substr(dots + 2), &u2);
    if (u1 != dots || u2 != text.size() - dots - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("genus range must look like lo..hi");
  }
  if (lo < 2 || hi < lo) throw InputError("genus range needs 2 <= lo <= hi");
  return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

int cmd_sections(const RunConfig& cfg, std::ostream& out) {
  const Rational tol = parse_rational(cfg.tol);
  if (tol <= 0) throw InputError("tolerance must be positive");
  const LoadedZeta lz = load_zeta(cfg.input);
  const ZetaFunction& z = lz.z;
  if (z.num_deck_vars != 1)
    throw InputError("section enumeration needs one deck variable, found " + std::to_string(z.num_deck_vars));
  if (!z.reduced) throw InputError("zeta function does not reduce to a polynomial");
  const bool structured = cfg.format == Format::Structured;

  if (cfg.euler) {
    const long degree = -*cfg.euler;
    const auto found = sections_with_degree(z, degree, cfg.bound, tol);
    if (structured) {
      Json j;
      j["euler"] = *cfg.euler;
      j["degree"] = degree;
      Json arr = Json::array();
      for (const auto& s : found) arr.push_back(section_json(s));
      j["sections"] = arr;
      j["exclusion_verified"] = found.empty();
      emit(out, j);
    } else {
      out << "euler characteristic " << *cfg.euler << " (degree " << degree << "): ";
      if (found.empty()) {
        out << "no sections; exclusion verified\n";
      } else {
        out << found.size() << " section class" << (found.size() == 1 ? "" : "es") << '\n';
        for (const auto& s : found) out << "  " << section_line(s) << '\n';
      }
    }
    return found.empty() ? kOk : kClaimFailed;
  }

  if (cfg.min_degree) {
    const MinDegree md = min_section_degree(z);
    if (structured) {
      Json j;
      j["min_degree"] = md.degree;
      Json arr = Json::array();
      for (const auto& s : md.witnesses) arr.push_back(section_json(s));
      j["witnesses"] = arr;
      emit(out, j);
    } else {
      out << "min degree: " << md.degree << " at ";
      for (std::size_t i = 0; i < md.witnesses.size(); ++i)
        out << (i ? ", " : "") << class_label(md.witnesses[i].u);
      out << '\n';
      for (const auto& s : md.witnesses) out << "  " << section_line(s) << '\n';
    }
    return kOk;
  }

  const auto [lo, hi] = parse_genus_range(cfg.genus_range);
  const auto rows = genus_search(z, lo, hi, cfg.bound);
  bool any_divisible = false;
  Json jrows = Json::array();
  std::ostringstream table;
  table << "g   (a,b)       divisible  p_{a,b}\n";
  for (const auto& row : rows) {
    Json jr;
    jr["genus"] = row.genus;
    jr["minimal_polynomial"] = row.minimal_polynomial.to_string();
    Json entries = Json::array();
    for (const auto& e : row.entries) {
      any_divisible = any_divisible || e.divisible;
      Json je = section_json(e.section);
      je["divisible"] = e.divisible;
      entries.push_back(je);
      std::ostringstream cls;
      cls << '(' << e.section.u.a[0] << ',' << e.section.u.b << ')';
      table << std::left << std::setw(4) << row.genus << std::setw(12) << cls.str() << std::setw(11)
            << (e.divisible ? "yes" : "no") << e.section.poly.to_string() << '\n';
    }
    jr["sections"] = entries;
    jrows.push_back(jr);
  }
  if (structured) {
    Json j;
    j["genus_lo"] = lo;
    j["genus_hi"] = hi;
    j["rows"] = jrows;
    j["exclusion_verified"] = !any_divisible;
    emit(out, j);
  } else {
    for (const auto& row : rows) out << "m_" << row.genus << " = " << row.minimal_polynomial.to_string() << '\n';
    out << table.str();
    if (any_divisible) {
      out << "divisibility found for some " << lo << " <= g <= " << hi << '\n';
    } else {
      out << "no divisibility for " << lo << " <= g <= " << hi << "; exclusion verified\n";
    }
  }
  return any_divisible ? kClaimFailed : kOk;
}

std::string approx_point(const ay::Point& p) {
  return "(" + decimal(p.x.to_double()) + ", " + decimal(p.y.to_double()) + ")";
}

int cmd_ay(const RunConfig& cfg, std::ostream& out) {
  const bool structured = cfg.format == Format::Structured;
  Json j;
  bool ok = true;

  if (cfg.verify_orbit && !cfg.point.empty()) {
    const ay::Point p = ay::parse_point(cfg.point);
    if (!ay::in_polygon(p)) throw InputError("point " + p.to_string() + " is outside the polygon");
    std::vector<ay::Point> orbit{p};
    std::vector<std::string> regions;
    std::optional<int> period;
    for (int step = 0; step < 2; ++step) {
      const ay::Region r = ay::classify_region(orbit.back());
      regions.push_back(ay::to_string(r));
      if (r == ay::Region::Boundary) break;
      orbit.push_back(ay::apply_h(orbit.back()));
      if (orbit.back() == p) {
        period = step + 1;
        break;
      }
    }
    if (structured) {
      Json jo = Json::array();
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        Json e;
        e["exact"] = orbit[i].to_string();
        e["approx"] = {orbit[i].x.to_double(), orbit[i].y.to_double()};
        e["region"] = i < regions.size() ? Json(regions[i]) : Json(nullptr);
        jo.push_back(e);
      }
      j["orbit"] = jo;
      j["period"] = period ? Json(*period) : Json(nullptr);
    } else {
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        out << "h^" << i << "(p) = " << orbit[i].to_string() << " ~ " << approx_point(orbit[i]);
        if (i < regions.size()) out << "  region " << regions[i];
        out << '\n';
      }
      if (regions.back() == "Boundary") {
        out << "iteration stopped: point on a slit\n";
      } else if (period) {
        out << "period " << *period << '\n';
      } else {
        out << "no period <= 2\n";
      }
    }
  } else if (cfg.verify_orbit) {
    const ay::Point x0 = ay::base_point();
    const ay::Point x1 = ay::apply_h(x0);
    const ay::Point x2 = ay::apply_h(x1);
    const bool returns = x2 == x0;
    const bool moves = !(x1 == x0);
    const auto shorts = ay::short_orbit_points();
    ok = returns && moves;
    if (structured) {
      j["x0"] = {{"exact", x0.to_string()}, {"region", ay::to_string(ay::classify_region(x0))}};
      j["h_x0"] = {{"exact", x1.to_string()}, {"region", ay::to_string(ay::classify_region(x1))}};
      j["h2_x0_equals_x0"] = returns;
      j["h_x0_differs"] = moves;
      Json pts = Json::array();
      for (const auto& p : shorts) pts.push_back(p.to_string());
      j["short_orbit_points"] = pts;
    } else {
      out << "x0 = " << x0.to_string() << " ~ " << approx_point(x0) << "  region "
          << ay::to_string(ay::classify_region(x0)) << '\n';
      out << "h(x0) = " << x1.to_string() << " ~ " << approx_point(x1) << "  region "
          << ay::to_string(ay::classify_region(x1)) << '\n';
      out << "h^2(x0) = x0 " << (returns ? "confirmed" : "FAILED") << "; h(x0) != x0 "
          << (moves ? "confirmed" : "FAILED") << '\n';
      out << "points of period <= 2 off the slits: " << shorts.size() << '\n';
      for (const auto& p : shorts) out << "  " << p.to_string() << " ~ " << approx_point(p) << '\n';
    }
  }

  if (cfg.stretch) {
    const Rational tol = parse_rational(cfg.tol);
    if (tol <= 0) throw InputError("tolerance must be positive");
    const auto cert = ay::stretch_factor_certificate();
    const RootInterval root = largest_real_root(cert.polynomial, tol);
    const double inv_alpha = CubicFieldElt::alpha().inverse().to_double();
    const bool agree = std::abs(root.approx() - inv_alpha) <= 1e-9;
    ok = ok && cert.vanishes_at_inverse_alpha && agree;
    if (structured) {
      j["stretch_polynomial"] = cert.polynomial.to_string("x");
      j["vanishes_at_inverse_alpha"] = cert.vanishes_at_inverse_alpha;
      j["lambda"] = decimal(root.approx());
      j["inverse_alpha"] = decimal(inv_alpha);
      j["alpha_minimal_polynomial"] = CubicFieldElt::minimal_polynomial().to_string("x");
    } else {
      out << "alpha: root of " << CubicFieldElt::minimal_polynomial().to_string("x") << '\n';
      out << "lambda root of " << cert.polynomial.to_string("x") << " ~ " << decimal(root.approx()) << '\n';
      out << cert.polynomial.to_string("x") << " at 1/alpha = 0 "
          << (cert.vanishes_at_inverse_alpha ? "confirmed" : "FAILED") << '\n';
      out << "1/alpha ~ " << decimal(inv_alpha) << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
  }

  if (structured) {
    j["verified"] = ok;
    emit(out, j);
  }
  return ok ? kOk : kClaimFailed;
}

int cmd_verify_words(const RunConfig& cfg, std::ostream& out) {
  const WordCheckReport report = run_word_checks(read_file(cfg.input));
  std::size_t holding = 0;
  for (const auto& c : report.checks) holding += c.holds ? 1 : 0;
  if (cfg.format == Format::Structured) {
    Json j;
    Json arr = Json::array();
    for (const auto& c : report.checks)
      arr.push_back({{"label", c.label}, {"line", c.line}, {"lhs", c.lhs_text}, {"rhs", c.rhs_text}, {"holds", c.holds}});
    j["checks"] = arr;
    j["all_hold"] = report.all_hold();
    emit(out, j);
  } else {
    for (const auto& c : report.checks) {
      out << (c.holds ? "holds " : "FAILS ");
      if (!c.label.empty()) out << c.label << ' ';
      out << "(line " << c.line << "): " << c.lhs_text << " = " << c.rhs_text << '\n';
    }
    out << holding << " of " << report.checks.size() << " identities hold\n";
  }
  return report.all_hold() ? kOk : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz zeta functions of mapping tori and their cross sections", "flowzeta"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"structured", Format::Structured}}));

  auto* snf = app.add_subcommand("snf", "Smith normal form and cokernel of an integer matrix");
  snf->add_option("matrix", cfg.input, "Matrix file (rows of integers)")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "Deck quotient, cell action and zeta function");
  zeta_cmd->add_option("endomorphism", cfg.input, "Endomorphism file")->required();

  auto* sections = app.add_subcommand("sections", "Cross-section classes of the suspension flow");
  sections->add_option("endomorphism", cfg.input, "Endomorphism file")->required();
  auto* euler = sections->add_option("--euler", cfg.euler, "Sections with this Euler characteristic");
  auto* min_deg = sections->add_flag("--min-degree", cfg.min_degree, "Smallest section degree");
  auto* genus = sections->add_option("--genus-search", cfg.genus_range, "Divisibility search over lo..hi");
  euler->excludes(min_deg)->excludes(genus);
  min_deg->excludes(genus);
  sections->add_option("--bound", cfg.bound, "Override the |a| search bound")->check(CLI::NonNegativeNumber);
  sections->add_option("--tol", cfg.tol, "Root refinement tolerance (rational)");

  auto* ay_cmd = app.add_subcommand("ay", "Exact checks on the Arnoux-Yoccoz surface");
  ay_cmd->add_flag("--verify-orbit", cfg.verify_orbit, "Check the period-two basepoint orbit");
  ay_cmd->add_flag("--stretch", cfg.stretch, "Certify the stretch factor");
  ay_cmd->add_option("--point", cfg.point, "Iterate h on (c0,c1,c2),(c0,c1,c2) instead of x0");
  ay_cmd->add_option("--tol", cfg.tol, "Root refinement tolerance (rational)");

  auto* words = app.add_subcommand("verify-words", "Check free-group word identities");
  words->add_option("file", cfg.input, "Word-identity file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (snf->parsed()) return cmd_snf(cfg, out);
    if (zeta_cmd->parsed()) return cmd_zeta(cfg, out);
    if (sections->parsed()) {
      if (!cfg.euler && !cfg.min_degree && cfg.genus_range.empty()) {
        err << "sections: one of --euler, --min-degree, --genus-search is required\n";
        return kInputError;
      }
      return cmd_sections(cfg, out);
    }
    if (ay_cmd->parsed()) {
      if (!cfg.verify_orbit && !cfg.stretch) {
        err << "ay: one of --verify-orbit, --stretch is required\n";
        return kInputError;
      }
      if (!cfg.point.empty() && !cfg.verify_orbit) {
        err << "ay: --point needs --verify-orbit\n";
        return kInputError;
      }
      return cmd_ay(cfg, out);
    }
    if (words->parsed()) return cmd_verify_words(cfg, out);
  } catch (const DegenerateQuotient& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace flowzeta::cli

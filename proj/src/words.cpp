#include "flowzeta/words.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "flowzeta/parse_error.hpp"

namespace flowzeta {

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push(l);
}

Word Word::generator(std::size_t gen, int sign) {
  Word w;
  w.letters_.push_back({gen, sign < 0 ? -1 : 1});
  return w;
}

void Word::push(const Letter& l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& o) {
  for (const auto& l : o.letters_) push(l);
  return *this;
}

bool verify_identity(const Word& lhs, const Word& rhs) { return lhs == rhs; }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || n.find_first_of("()^ \t") != std::string::npos)
      throw std::invalid_argument("Alphabet: invalid generator name '" + n + "'");
    if (!lookup_.emplace(n, i).second)
      throw std::invalid_argument("Alphabet: duplicate generator '" + n + "'");
  }
}

std::size_t Alphabet::index(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw std::out_of_range("unknown generator '" + name + "'");
  return it->second;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FreeEndomorphism::FreeEndomorphism(std::size_t rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (images_.size() != rank_)
    throw std::invalid_argument("FreeEndomorphism: expected " + std::to_string(rank_) + " images");
  for (const auto& w : images_)
    for (const auto& l : w.letters())
      if (l.gen >= rank_) throw std::invalid_argument("FreeEndomorphism: letter index out of range");
}

FreeEndomorphism FreeEndomorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  return FreeEndomorphism(rank, std::move(images));
}

Word FreeEndomorphism::apply(const Word& w) const {
  Word out;
  for (const auto& l : w.letters()) out *= l.sign > 0 ? images_.at(l.gen) : images_.at(l.gen).inverse();
  return out;
}

IntMatrix abelianization(const FreeEndomorphism& phi) {
  const std::size_t n = phi.rank();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& l : phi.image(j).letters()) m(l.gen, j) += l.sign;
  return m;
}

std::vector<LaurentPoly> fox_gradient(const Word& w, const IntMatrix& psi) {
  const std::size_t r = psi.rows();
  std::vector<LaurentPoly> grad(psi.cols(), LaurentPoly(r));
  Exponent prefix(r, 0);
  for (const auto& l : w.letters()) {
    if (l.gen >= psi.cols()) throw std::invalid_argument("fox_gradient: letter outside psi's domain");
    if (l.sign > 0) {
      // d(u x)/dx = du/dx + u
      grad[l.gen].add_term(prefix, 1);
      for (std::size_t k = 0; k < r; ++k) prefix[k] += psi(k, l.gen).get_si();
    } else {
      // d(u x^-1)/dx = du/dx - u x^-1
      for (std::size_t k = 0; k < r; ++k) prefix[k] -= psi(k, l.gen).get_si();
      grad[l.gen].add_term(prefix, -1);
    }
  }
  return grad;
}

PolyMatrix fox_jacobian(const FreeEndomorphism& phi, const IntMatrix& psi) {
  const std::size_t n = phi.rank();
  if (psi.cols() != n) throw std::invalid_argument("fox_jacobian: psi has the wrong number of columns");
  if (!(psi * (abelianization(phi) - IntMatrix::identity(n))).is_zero())
    throw std::invalid_argument(
        "fox_jacobian: endomorphism acts nontrivially on the quotient (psi * (ab - Id) != 0)");
  PolyMatrix f(n, n, psi.rows());
  for (std::size_t j = 0; j < n; ++j) {
    auto column = fox_gradient(phi.image(j), psi);
    for (std::size_t i = 0; i < n; ++i) f(i, j) = std::move(column[i]);
  }
  return f;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

class WordParser {
 public:
  WordParser(const std::string& text, const Alphabet& alphabet,
             const std::map<std::string, Word>& abbreviations)
      : text_(text), alphabet_(alphabet), abbreviations_(abbreviations) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      Word factor;
      if (text_[pos_] == '(') {
        ++pos_;
        factor = sequence();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else {
        factor = atom();
      }
      w *= factor.power(exponent());
    }
  }

  Word atom() {
    std::string name;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '^')
      name += text_[pos_++];
    if (name.empty()) fail("expected a generator");
    if (auto it = abbreviations_.find(name); it != abbreviations_.end()) return it->second;
    if (alphabet_.contains(name)) return Word::generator(alphabet_.index(name));
    if (name == "1") return {};
    throw ParseError(0, "unknown generator '" + name + "'");
  }

  long exponent() {
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("malformed exponent");
    }
    pos_ += used;
    return k;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "word '" + text_ + "': " + what);
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  const std::map<std::string, Word>& abbreviations_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Re-throws a line-less ParseError with the line attached.
template <typename F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(line, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet,
                const std::map<std::string, Word>& abbreviations) {
  return WordParser(text, alphabet, abbreviations).parse();
}

EndomorphismSpec parse_endomorphism(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  EndomorphismSpec spec;
  bool have_alphabet = false;
  std::vector<std::optional<Word>> images;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!have_alphabet) {
      std::string body = trim(line);
      if (body.rfind("generators:", 0) == 0) body = body.substr(11);
      auto names = split_ws(body);
      if (names.empty()) throw ParseError(line_no, "no generators listed");
      spec.alphabet = at_line(line_no, [&] { return Alphabet(names); });
      images.assign(names.size(), std::nullopt);
      have_alphabet = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(line_no, "expected 'g -> word'");
    const std::string source = trim(line.substr(0, arrow));
    if (!spec.alphabet.contains(source)) throw ParseError(line_no, "unknown generator '" + source + "'");
    const std::size_t gen = spec.alphabet.index(source);
    if (images[gen]) throw ParseError(line_no, "image of '" + source + "' given twice");
    images[gen] = at_line(line_no, [&] { return parse_word(line.substr(arrow + 2), spec.alphabet); });
  }
  if (!have_alphabet) throw ParseError(0, "missing generator line");
  std::vector<Word> resolved;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError(0, "no image given for '" + spec.alphabet.name(i) + "'");
    resolved.push_back(*images[i]);
  }
  spec.map = FreeEndomorphism(spec.alphabet.size(), std::move(resolved));
  return spec;
}

bool WordCheckReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

WordCheckReport run_word_checks(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  WordCheckReport report;
  bool have_alphabet = false;
  std::map<std::string, Word> lets;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const std::string body = trim(line);
    if (body.rfind("generators:", 0) == 0) {
      if (have_alphabet) throw ParseError(line_no, "generators declared twice");
      report.alphabet = at_line(line_no, [&] { return Alphabet(split_ws(body.substr(11))); });
      have_alphabet = true;
      continue;
    }
    if (!have_alphabet) throw ParseError(line_no, "expected 'generators:' first");
    const auto eq = body.find('=');
    if (body.rfind("let ", 0) == 0) {
      if (eq == std::string::npos) throw ParseError(line_no, "expected 'let name = word'");
      const std::string name = trim(body.substr(4, eq - 4));
      if (name.empty() || report.alphabet.contains(name) || lets.count(name))
        throw ParseError(line_no, "cannot define '" + name + "'");
      lets[name] = at_line(line_no, [&] { return parse_word(body.substr(eq + 1), report.alphabet, lets); });
    } else if (body.rfind("check ", 0) == 0) {
      if (eq == std::string::npos) throw ParseError(line_no, "expected 'check lhs = rhs'");
      WordCheck check;
      check.line = line_no;
      std::string lhs = body.substr(6, eq - 6);
      if (const auto colon = lhs.find(':'); colon != std::string::npos) {
        check.label = trim(lhs.substr(0, colon));
        lhs = lhs.substr(colon + 1);
      }
      check.lhs_text = trim(lhs);
      check.rhs_text = trim(body.substr(eq + 1));
      const Word l = at_line(line_no, [&] { return parse_word(check.lhs_text, report.alphabet, lets); });
      const Word r = at_line(line_no, [&] { return parse_word(check.rhs_text, report.alphabet, lets); });
      check.holds = verify_identity(l, r);
      report.checks.push_back(std::move(check));
    } else {
      throw ParseError(line_no, "unknown directive");
    }
  }
  return report;
}

}  // namespace flowzeta

#pragma once

// Free-group words and endomorphisms, abelianization, and Fox Jacobians
// pushed through a projection onto a free abelian quotient.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flowzeta/laurent.hpp"
#include "flowzeta/linalg.hpp"

namespace flowzeta {

struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every constructor and operation reduces.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(std::size_t gen, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word power(long k) const;

  /// Appends with cancellation at the seam.
  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Letter& l);
  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }
/// Free reduction of an arbitrary letter sequence.
inline Word reduce(const std::vector<Letter>& letters) { return Word(letters); }

/// True iff both sides have the same freely reduced form.
bool verify_identity(const Word& lhs, const Word& rhs);

/// Generator names, in basis order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws std::out_of_range for unknown names.
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup_.count(name) != 0; }

  /// "f d g^-1"; the empty word prints as "1".
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> lookup_;
};

class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  /// Throws std::invalid_argument when an image uses a letter >= rank or the
  /// image count differs from the rank.
  FreeEndomorphism(std::size_t rank, std::vector<Word> images);

  static FreeEndomorphism identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t gen) const { return images_.at(gen); }

  Word apply(const Word& w) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Word> images_;
};

/// Entry (i, j) = signed count of generator i in the image of generator j.
IntMatrix abelianization(const FreeEndomorphism& phi);

/// Column of psi-pushed Fox derivatives of w: entry i is psi(dw/dx_i), a
/// Laurent polynomial in psi.rows() variables. No precondition on psi.
std::vector<LaurentPoly> fox_gradient(const Word& w, const IntMatrix& psi);

/// Entry (i, j) = psi(d phi(x_j) / d x_i). Throws std::invalid_argument
/// unless psi * (abelianization(phi) - Id) == 0.
PolyMatrix fox_jacobian(const FreeEndomorphism& phi, const IntMatrix& psi);

/// Endomorphism file: a generator line, then "g -> w1 w2 ..." per generator.
struct EndomorphismSpec {
  Alphabet alphabet;
  FreeEndomorphism map;
};

/// Throws ParseError with the offending line number.
EndomorphismSpec parse_endomorphism(const std::string& text);

/// Parses whitespace-separated tokens "x", "x^-1", "x^k", and parenthesized
/// groups "(x y)^-1" over `alphabet`. Throws ParseError naming bad tokens.
Word parse_word(const std::string& text, const Alphabet& alphabet,
                const std::map<std::string, Word>& abbreviations = {});

/// Word-identity file: "generators: ...", "let name = word", and
/// "check [label:] lhs = rhs" lines; `let` names may be used in later words.
struct WordCheck {
  std::size_t line = 0;
  std::string label;
  std::string lhs_text;
  std::string rhs_text;
  bool holds = false;
};

struct WordCheckReport {
  Alphabet alphabet;
  std::vector<WordCheck> checks;

  bool all_hold() const;
};

WordCheckReport run_word_checks(const std::string& text);

}  // namespace flowzeta

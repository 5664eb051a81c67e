#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uaw/scalar.hpp"

namespace uaw {

struct AlphabetMismatch : std::runtime_error {
  AlphabetMismatch() : std::runtime_error("operands live over different alphabets") {}
};
struct MissingImage : std::runtime_error {
  explicit MissingImage(const std::string& name)
      : std::runtime_error("no image for generator " + name) {}
};

using GenId = uint8_t;

struct Generator {
  GenId id;
  std::string name;
};

/// Ordered generator list; the order is the basis order of the rewrite system.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return gens_.size(); }
  const Generator& gen(GenId id) const { return gens_[id]; }
  const std::string& name(GenId id) const { return gens_[id].name; }
  std::optional<GenId> find(const std::string& name) const;
  const std::vector<Generator>& generators() const { return gens_; }

  bool operator==(const Alphabet& other) const;

 private:
  std::vector<Generator> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A word in the free algebra: a finite sequence of generators.
/// The empty word is the multiplicative identity.
/// Words compare in graded order: by length first, then lexicographically
/// by generator position in the alphabet.
struct Word {
  std::vector<GenId> letters;

  Word() = default;
  explicit Word(std::vector<GenId> ls) : letters(std::move(ls)) {}
  static Word single(GenId g) { return Word({g}); }

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  GenId operator[](size_t i) const { return letters[i]; }

  Word concat(const Word& other) const;
  Word reversed() const;
  Word subword(size_t pos, size_t len) const;

  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
  friend bool operator==(const Word& a, const Word& b) = default;
};

/// Finitely supported linear combination of words over Q(q).
/// Canonical: no stored coefficient is zero.  Term iteration order is the
/// graded order on words, which fixes the display order.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static NCPoly zero(AlphabetPtr alphabet) { return NCPoly(std::move(alphabet)); }
  static NCPoly unit(AlphabetPtr alphabet, QScalar c = QScalar::one());
  static NCPoly single(AlphabetPtr alphabet, GenId g, QScalar c = QScalar::one());
  static NCPoly term(AlphabetPtr alphabet, Word w, QScalar c = QScalar::one());

  const AlphabetPtr& alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, QScalar>& terms() const { return terms_; }
  QScalar coeff(const Word& w) const;

  void add_term(const Word& w, const QScalar& c);

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& operator+=(const NCPoly& b);
  NCPoly& operator-=(const NCPoly& b);
  NCPoly operator*(const QScalar& c) const;
  friend NCPoly operator*(const QScalar& c, const NCPoly& p) { return p * c; }

  bool operator==(const NCPoly& other) const { return terms_ == other.terms_; }

  NCPoly pow(unsigned e) const;
  /// Word-by-word reversal; implements the antiautomorphism direction.
  NCPoly reversed() const;

  /// Maps each word g1...gn to images(g1)*...*images(gn); coefficients are
  /// optionally passed through q -> 1/q.  Missing image -> MissingImage.
  NCPoly substituted(const std::map<GenId, NCPoly>& images, bool twist_q = false,
                     bool reverse_words = false) const;

  std::string str() const;

 private:
  void check_same_alphabet(const NCPoly& other) const;
  AlphabetPtr alphabet_;
  std::map<Word, QScalar> terms_;
};

}  // namespace uaw

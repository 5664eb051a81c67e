#include "uaw/free_algebra.hpp"

#include <cassert>
#include <sstream>

namespace uaw {

Alphabet::Alphabet(std::vector<std::string> names) {
  gens_.reserve(names.size());
  for (size_t i = 0; i < names.size(); ++i) {
    for (size_t j = 0; j < i; ++j)
      if (names[j] == names[i])
        throw std::invalid_argument("duplicate generator name " + names[i]);
    gens_.push_back(Generator{static_cast<GenId>(i), std::move(names[i])});
  }
}

std::optional<GenId> Alphabet::find(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.id;
  return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != other.gens_[i].name) return false;
  return true;
}

Word Word::concat(const Word& other) const {
  Word r;
  r.letters.reserve(letters.size() + other.letters.size());
  r.letters.insert(r.letters.end(), letters.begin(), letters.end());
  r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
  return r;
}

Word Word::reversed() const {
  Word r = *this;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word Word::subword(size_t pos, size_t len) const {
  assert(pos + len <= letters.size());
  return Word(std::vector<GenId>(letters.begin() + pos, letters.begin() + pos + len));
}

NCPoly NCPoly::unit(AlphabetPtr alphabet, QScalar c) {
  NCPoly p(std::move(alphabet));
  p.add_term(Word(), c);
  return p;
}

NCPoly NCPoly::single(AlphabetPtr alphabet, GenId g, QScalar c) {
  NCPoly p(std::move(alphabet));
  p.add_term(Word::single(g), c);
  return p;
}

NCPoly NCPoly::term(AlphabetPtr alphabet, Word w, QScalar c) {
  NCPoly p(std::move(alphabet));
  p.add_term(w, c);
  return p;
}

QScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

void NCPoly::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::check_same_alphabet(const NCPoly& other) const {
  if (alphabet_ == other.alphabet_) return;
  if (alphabet_ && other.alphabet_ && *alphabet_ == *other.alphabet_) return;
  throw AlphabetMismatch();
}

NCPoly NCPoly::operator-() const {
  NCPoly r(alphabet_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  a.check_same_alphabet(b);
  NCPoly r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly& NCPoly::operator+=(const NCPoly& b) {
  check_same_alphabet(b);
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) { return *this += -b; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check_same_alphabet(b);
  NCPoly r(a.alphabet_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

NCPoly NCPoly::operator*(const QScalar& c) const {
  NCPoly r(alphabet_);
  if (c.is_zero()) return r;
  for (const auto& [w, tc] : terms_) r.terms_.emplace(w, tc * c);
  return r;
}

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly r = NCPoly::unit(alphabet_);
  for (unsigned i = 0; i < e; ++i) r = r * (*this);
  return r;
}

NCPoly NCPoly::reversed() const {
  NCPoly r(alphabet_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.reversed(), c);
  return r;
}

NCPoly NCPoly::substituted(const std::map<GenId, NCPoly>& images, bool twist_q,
                           bool reverse_words) const {
  const NCPoly* any_image = nullptr;
  for (const auto& [id, img] : images) {
    any_image = &img;
    break;
  }
  AlphabetPtr target = any_image ? any_image->alphabet() : alphabet_;
  NCPoly result(target);
  for (const auto& [w, c] : terms_) {
    NCPoly prod = NCPoly::unit(target);
    if (reverse_words) {
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto img = images.find(*it);
        if (img == images.end()) throw MissingImage(alphabet_->name(*it));
        prod = prod * img->second;
      }
    } else {
      for (GenId g : w.letters) {
        auto img = images.find(g);
        if (img == images.end()) throw MissingImage(alphabet_->name(g));
        prod = prod * img->second;
      }
    }
    result += prod * (twist_q ? c.inverted_q() : c);
  }
  return result;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool negative = cs.size() > 1 && cs[0] == '-';
    if (negative) cs = (-c).str();
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool needs_parens = QScalar::needs_parens(cs);
    std::string word_str;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) word_str += "*";
      word_str += alphabet_->name(w[i]);
    }
    if (w.empty()) {
      out << (needs_parens ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      out << word_str;
    } else {
      out << (needs_parens ? "(" + cs + ")" : cs) << "*" << word_str;
    }
  }
  return out.str();
}

}  // namespace uaw

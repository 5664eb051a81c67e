#include "uaw/rewrite.hpp"

namespace uaw {

std::string rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::First: return "first";
    case RuleKind::Second: return "second";
    case RuleKind::Third: return "third";
  }
  return "?";
}

std::optional<RuleKind> rule_kind_from_name(const std::string& s) {
  if (s == "first") return RuleKind::First;
  if (s == "second") return RuleKind::Second;
  if (s == "third") return RuleKind::Third;
  return std::nullopt;
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  index_.assign(alphabet_->size() * alphabet_->size(), -1);
}

void RewriteSystem::add_rule(Word lhs, NCPoly rhs, RuleKind kind) {
  if (lhs.size() != 2)
    throw std::invalid_argument("forbidden words have length exactly two");
  size_t slot = lhs[0] * alphabet_->size() + lhs[1];
  if (index_[slot] >= 0)
    throw std::invalid_argument("duplicate rule for forbidden word");
  index_[slot] = static_cast<int>(rules_.size());
  rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs), kind});
}

int RewriteSystem::rule_for(GenId a, GenId b) const {
  return index_[a * alphabet_->size() + b];
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (is_forbidden(w[i], w[i + 1])) return false;
  return true;
}

NCPoly RewriteSystem::normalize(const NCPoly& p, long fuel) const {
  if (p.alphabet() && !(*p.alphabet() == *alphabet_)) throw AlphabetMismatch();
  NCPoly result(p.alphabet());
  // Worklist in graded word order: the smallest pending term is taken first
  // and rewritten at its leftmost forbidden factor.  Irreducible terms move
  // to the result, where later contributions still merge and may cancel.
  std::map<Word, QScalar> work(p.terms());
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    QScalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    size_t pos = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (is_forbidden(w[i], w[i + 1])) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      result.add_term(w, c);
      continue;
    }
    if (--fuel < 0) throw NonTermination();
    const RewriteRule& rule = rules_[rule_for(w[pos], w[pos + 1])];
    Word prefix = w.subword(0, pos);
    Word suffix = w.subword(pos + 2, w.size() - pos - 2);
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw = prefix.concat(rw).concat(suffix);
      auto [slot, inserted] = work.emplace(nw, rc * c);
      if (!inserted) {
        slot->second += rc * c;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
  }
  return result;
}

std::vector<Word> RewriteSystem::overlaps() const {
  std::vector<Word> result;
  for (const auto& r1 : rules_)
    for (const auto& r2 : rules_)
      if (r1.lhs[1] == r2.lhs[0])
        result.push_back(Word({r1.lhs[0], r1.lhs[1], r2.lhs[1]}));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

RewriteSystem::Resolution RewriteSystem::resolve(const Word& overlap, long fuel) const {
  if (overlap.size() != 3)
    throw std::invalid_argument("overlap ambiguities have length three");
  int left_rule = rule_for(overlap[0], overlap[1]);
  int right_rule = rule_for(overlap[1], overlap[2]);
  if (left_rule < 0 || right_rule < 0)
    throw std::invalid_argument("word is not an overlap of two rules");

  NCPoly left(alphabet_);
  for (const auto& [rw, rc] : rules_[left_rule].rhs.terms())
    left.add_term(rw.concat(Word::single(overlap[2])), rc);
  NCPoly right(alphabet_);
  for (const auto& [rw, rc] : rules_[right_rule].rhs.terms())
    right.add_term(Word::single(overlap[0]).concat(rw), rc);

  Resolution res;
  res.ambiguity = overlap;
  res.left_first = normalize(left, fuel);
  res.right_first = normalize(right, fuel);
  res.resolved = (res.left_first == res.right_first);
  return res;
}

bool RewriteSystem::ConfluenceReport::all_resolved() const {
  for (const auto& e : entries)
    if (!e.resolved) return false;
  return true;
}

RewriteSystem::ConfluenceReport RewriteSystem::check_confluence(long fuel) const {
  ConfluenceReport report;
  for (const Word& o : overlaps()) report.entries.push_back(resolve(o, fuel));
  return report;
}

}  // namespace uaw

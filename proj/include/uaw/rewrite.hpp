#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uaw/free_algebra.hpp"

namespace uaw {

struct NonTermination : std::runtime_error {
  NonTermination() : std::runtime_error("rewrite fuel exhausted before normal form") {}
};

enum class RuleKind : uint8_t { First, Second, Third };

std::string rule_kind_name(RuleKind k);
std::optional<RuleKind> rule_kind_from_name(const std::string& s);

/// One reduction rule: a forbidden word of length two and its replacement.
struct RewriteRule {
  Word lhs;  // always length 2
  NCPoly rhs;
  RuleKind kind;
};

constexpr long kDefaultFuel = 1'000'000;

/// An ordered rule set over a fixed alphabet, indexed by forbidden word.
/// At most one rule per length-2 word.
class RewriteSystem {
 public:
  explicit RewriteSystem(AlphabetPtr alphabet);

  void add_rule(Word lhs, NCPoly rhs, RuleKind kind);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// Rule index for the forbidden pair (a, b), or -1.
  int rule_for(GenId a, GenId b) const;
  bool is_forbidden(GenId a, GenId b) const { return rule_for(a, b) >= 0; }

  bool is_irreducible(const Word& w) const;

  /// Reduces p to its unique normal form: leftmost forbidden factor first,
  /// terms processed in graded order.  Each rule application consumes one
  /// unit of fuel; NonTermination when fuel runs out.
  NCPoly normalize(const NCPoly& p, long fuel = kDefaultFuel) const;

  /// All length-3 words w1 w2 w3 with w1w2 and w2w3 both forbidden,
  /// in graded order.
  std::vector<Word> overlaps() const;

  struct Resolution {
    Word ambiguity;
    NCPoly left_first;   // normal form after rewriting the left pair first
    NCPoly right_first;  // normal form after rewriting the right pair first
    bool resolved;       // the two normal forms agree
  };

  Resolution resolve(const Word& overlap, long fuel = kDefaultFuel) const;

  struct ConfluenceReport {
    std::vector<Resolution> entries;
    bool all_resolved() const;
  };

  ConfluenceReport check_confluence(long fuel = kDefaultFuel) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<int> index_;  // size n*n, rule index by lhs pair, -1 if none
};

}  // namespace uaw

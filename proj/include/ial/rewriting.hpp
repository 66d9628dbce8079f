// String rewriting systems over symbol tokens.

#ifndef IAL_REWRITING_HPP_
#define IAL_REWRITING_HPP_

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ial {

using Word = std::vector<std::string>;

struct RewriteRule {
  Word lhs;
  Word rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RewritingSystem {
  std::vector<RewriteRule> rules;

  std::set<std::string> alphabet() const;
};

// "a b c" -> {"a","b","c"}; the empty word may be written as "" or "eps".
Word parse_word(std::string_view text);
std::string print_word(const Word& w);

std::string print_rule(const RewriteRule& r);
// One "lhs -> rhs" per line, '#' comments.
RewritingSystem parse_srs(std::string_view text);
std::string print_srs(const RewritingSystem& s);

// All words obtained from `w` by one rewriting step.
std::vector<Word> rewrite_once(const RewritingSystem& s, const Word& w);

bool has_suffix(const Word& w, const Word& suffix);

struct ReachResult {
  std::set<Word> matches;
  std::size_t explored = 0;
  // Set when a step or breadth bound cut off part of the search.
  bool truncated = false;
};

// Breadth-first search from `start`; words at distance <= step_bound are
// visited, at most breadth_bound words in total.
ReachResult srs_reach(const RewritingSystem& s, const Word& start,
                      const std::function<bool(const Word&)>& predicate,
                      std::size_t step_bound, std::size_t breadth_bound);

}  // namespace ial

#endif  // IAL_REWRITING_HPP_

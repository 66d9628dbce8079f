// Reference implementations used to cross-check the library. They are
// written independently of the library's search and coding code and favour
// directness over speed.

#ifndef IAL_TESTS_ORACLE_HPP_
#define IAL_TESTS_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ial/rewriting.hpp"
#include "ial/sequent.hpp"

namespace oracle {

// Least fixpoint of immediate derivability in the dyadic calculus restricted
// to star-free NE sequents. Goals are added first; solve() closes their
// backward-reachable space and iterates the rules to the fixpoint.
class NeFixpoint {
 public:
  void add_goal(const ial::DSequent& s);
  void solve();
  bool derivable(const ial::DSequent& s) const;
  std::size_t space_size() const { return nodes_.size(); }

  // Premise lists of every cut-free rule instance concluding `s`.
  static std::vector<std::vector<ial::DSequent>> instances(const ial::DSequent& s);

 private:
  struct Node {
    ial::DSequent seq;
    // Each alternative lists the premise node ids of one rule instance.
    std::vector<std::vector<std::size_t>> alternatives;
    bool derived = false;
  };
  std::size_t intern(const ial::DSequent& s);

  std::vector<Node> nodes_;
  std::unordered_map<ial::DSequent, std::size_t, ial::DSequentHash> index_;
  std::vector<std::size_t> pending_;
};

// Compares two Cantor normal forms rendered as "w^2*3 + w*1 + 4" by parsing
// them into (exponent, coefficient) terms. Returns -1, 0 or 1.
int compare_cantor_strings(const std::string& a, const std::string& b);

// Cantor pairing inverse by walking diagonals.
std::pair<std::uint64_t, std::uint64_t> unpair_slow(std::uint64_t n);

// Exponents of 2, 3, 5, ... by trial division; empty for 1.
std::vector<std::uint64_t> prime_exponents(std::uint64_t n);

// The check functions written directly from their case analysis.
std::optional<ial::Word> f0_reference(std::uint64_t x);
ial::Word f1_reference(const ial::Word& w);

}  // namespace oracle

#endif  // IAL_TESTS_ORACLE_HPP_

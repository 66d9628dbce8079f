// Sequents and dyadic sequents.

#ifndef IAL_SEQUENT_HPP_
#define IAL_SEQUENT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ial/formula.hpp"

namespace ial {

struct Sequent {
  std::vector<Formula> ant;
  Formula suc;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// A sorted, duplicate-free set of !-formulas.
using Zone = std::vector<Formula>;

Zone make_zone(std::vector<Formula> fs);
Zone zone_union(const Zone& a, const Zone& b);
Zone zone_with(const Zone& z, Formula f);
Zone zone_without(const Zone& z, Formula f);
bool zone_contains(const Zone& z, Formula f);
bool zone_subset(const Zone& small, const Zone& big);

struct DSequent {
  Zone zone;
  std::vector<Formula> ant;
  Formula suc;

  DSequent() = default;
  DSequent(Zone z, std::vector<Formula> a, Formula s)
      : zone(make_zone(std::move(z))), ant(std::move(a)), suc(s) {}
  // A flat sequent viewed with an empty zone.
  DSequent(const Sequent& s) : ant(s.ant), suc(s.suc) {}  // NOLINT

  Sequent flat() const { return Sequent{ant, suc}; }

  friend bool operator==(const DSequent&, const DSequent&) = default;
};

int compare(const DSequent& a, const DSequent& b);

struct DSequentLess {
  bool operator()(const DSequent& a, const DSequent& b) const { return compare(a, b) < 0; }
};

struct DSequentHash {
  std::size_t operator()(const DSequent& s) const;
};

std::string print_sequent(const Sequent& s);
// Prints the zone prefix "{...} ; " only when `with_zone` is set.
std::string print_dsequent(const DSequent& s, bool with_zone = true);

Sequent parse_sequent(std::string_view text);
// Accepts "{!F, ...} ; ant => suc"; without braces the zone is empty.
DSequent parse_dsequent(std::string_view text);

// Parses a file body: one sequent per line, '#' starts a comment.
std::vector<Sequent> parse_sequent_list(std::string_view text);

FragmentClass classify_sequent(const Sequent& s);
FragmentClass classify_dsequent(const DSequent& s);

bool sequent_has_star(const DSequent& s);

// |Gamma| + |C|; the zone does not count.
std::size_t c_parameter(const DSequent& s);

}  // namespace ial

#endif  // IAL_SEQUENT_HPP_

// The lower-bound construction: the hypothesis set built from two machines
// and the energy formulas and sequents over the variables
//   p1 p2 pE pA lt rt ok en fn ex go fl
// (pE and pA stand for the existential and universal markers).

#ifndef IAL_LOWER_BOUND_HPP_
#define IAL_LOWER_BOUND_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ial/embedding.hpp"
#include "ial/machine.hpp"

namespace ial {

// go \ ((q . rt . fn) \ ((p1 \ h_p1) & (p2 \ h_p2)))
Formula cmp_formula(const std::string& q, Formula h_p1, Formula h_p2);

struct LowerBoundFormulas {
  Formula ok;  // ok \ ok
  Formula en_exists;
  Formula en_forall;
  std::vector<Formula> en;  // En(0) ... En(k)
  Formula brk;
};

// `q0_init` and `q1_init` are the initial states of the two machines.
LowerBoundFormulas gen_formulas(std::size_t k, const std::string& q0_init, const std::string& q1_init);

// Rules of both compiled machines (borders lt, rt, end marker fn) plus
// ex -> p2 ex and ex -> go. Throws MachineError when the state sets meet.
RewritingSystem build_srs(const TuringMachine& m0, const TuringMachine& m1);
// One sequent b1, ..., bm => c1 . ... . cn per rule of build_srs.
HypothesisSet build_H(const TuringMachine& m0, const TuringMachine& m1);

// lt, p1^x, pQ, en, En(k_M), ..., En(k_1), Brk => lt . ok for the
// non-increasing list ks = k_1, ..., k_M, with Q = E for epsilon 0 and A
// for epsilon 1. Throws std::invalid_argument when ks increases somewhere.
Sequent main_sequent(std::uint64_t x, unsigned epsilon, const std::vector<std::size_t>& ks,
                     const LowerBoundFormulas& fs);

// main_sequent for the index coded by x, or p => q when x is not an index.
// With `with_hypotheses` the antecedent is prefixed by !upsilon(build_H).
Sequent gen_main_sequent(std::uint64_t x, const std::vector<std::size_t>& ks, const TuringMachine& m0,
                         const TuringMachine& m1, bool with_hypotheses = false);

// lt, fl, En(k_M), ..., En(k_1), Brk => lt . ok
Sequent fail_sequent(const std::vector<std::size_t>& ks, const LowerBoundFormulas& fs);

// Largest x accepted by the generators (p1^x is written out).
constexpr std::uint64_t kMaxUnaryLength = 1'000'000;

}  // namespace ial

#endif  // IAL_LOWER_BOUND_HPP_

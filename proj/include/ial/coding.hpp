// Number codings: Cantor pairing, the index codec <eps, #alpha, e>, a fixed
// machine numbering for the universal function U, and the check functions
// f0 and f1 over the letters p1 and p2.

#ifndef IAL_CODING_HPP_
#define IAL_CODING_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ial/machine.hpp"
#include "ial/ordinal.hpp"
#include "ial/rewriting.hpp"

namespace ial {

// c(a, b) = (a+b)(a+b+1)/2 + b. Throws std::overflow_error past 64 bits.
std::uint64_t pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n);

// <i, j, k> = c(i, c(j, k)).
std::uint64_t triple(std::uint64_t i, std::uint64_t j, std::uint64_t k);
struct Triple {
  std::uint64_t i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};
Triple untriple(std::uint64_t n);

// epsilon 0 tags a Sigma-index, 1 a Pi-index.
struct Index {
  unsigned epsilon = 0;
  OrdVec alpha;
  std::uint64_t e = 0;
  friend bool operator==(const Index&, const Index&) = default;
};

// nullopt when #alpha or the code does not fit in 64 bits.
std::optional<std::uint64_t> encode_index(const Index& x);
// nullopt for non-indices: epsilon > 1, or an ordinal code of 0.
std::optional<Index> decode_index(std::uint64_t code);

// Machine number e: e % 4 + 1 working states q0.. plus the halting state
// qa over {p1, lam}; the digits of e / 4 in base 6(s+1) give, for each
// (state, letter) pair in order, the written letter, the move and the next
// state (s meaning qa). Missing digits are 0.
TuringMachine machine_from_number(std::uint64_t e);

// Whether U(e, k), machine e run on p1^k, halts within t steps.
bool universal_converges(std::uint64_t e, std::uint64_t k, std::uint64_t t);

// Base-check function on p1^x; nullopt where undefined.
std::optional<Word> f0(std::uint64_t x);
// Step-check function on a word over {p1, p2}.
Word f1(const Word& w);

}  // namespace ial

#endif  // IAL_CODING_HPP_

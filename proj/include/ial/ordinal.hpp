// Ordinals below w^w as finitely supported coefficient vectors.

#ifndef IAL_ORDINAL_HPP_
#define IAL_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ial/sequent.hpp"

namespace ial {

// coeffs[i] is the coefficient of w^i. Trailing zeros are always stripped.
class OrdVec {
 public:
  OrdVec() = default;
  explicit OrdVec(std::vector<std::uint64_t> coeffs);
  static OrdVec finite(std::uint64_t n);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const OrdVec&, const OrdVec&) = default;
  friend std::strong_ordering operator<=>(const OrdVec& a, const OrdVec& b);

 private:
  std::vector<std::uint64_t> coeffs_;
};

std::strong_ordering ord_compare(const OrdVec& a, const OrdVec& b);

// Natural (coefficient-wise) sum.
OrdVec ord_add(const OrdVec& a, const OrdVec& b);

// (m0, m1, ...) -> (0, m0, m1, ...)
OrdVec ord_shift(const OrdVec& a);

class OrdinalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Prime-power code p0^m0 * p1^m1 * ...; nullopt when it exceeds 64 bits.
std::optional<std::uint64_t> rho(const OrdVec& a);
OrdVec rho_inv(std::uint64_t code);

struct BaseStep {
  OrdVec base;
  std::uint64_t step;
};
BaseStep base_step(const OrdVec& a);

// base(a) + step(a)*n + 1; requires n >= 1.
OrdVec lift(const OrdVec& a, std::uint64_t n);

// "(m0,m1,...)"; the zero ordinal prints as "()".
std::string to_string(const OrdVec& a);
OrdVec parse_ordvec(std::string_view text);

// Cantor normal form such as "w^2*3 + w*1 + 4"; zero prints as "0".
std::string nu_string(const OrdVec& a);

// Star-nesting measure. Throws OrdinalError on a star under a bang.
OrdVec mu(Formula f);
// Sum over antecedent and succedent; the zone is ignored.
OrdVec mu_sequent(const DSequent& s);

}  // namespace ial

#endif  // IAL_ORDINAL_HPP_

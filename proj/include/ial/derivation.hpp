// Derivation trees, the derivation checker and schema certificates for
// omega-nodes.

#ifndef IAL_DERIVATION_HPP_
#define IAL_DERIVATION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ial/rules.hpp"

namespace ial {

struct Derivation;
struct SchemaCertificate;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  DSequent conclusion;
  std::vector<DerivationPtr> children;
  // Only for StarL nodes closed by a certificate instead of explicit instances.
  std::shared_ptr<const SchemaCertificate> schema;
};

// A finite witness that every instance Gamma, A^n, Delta => C is derivable.
//
// `base` derives instance 0. `context` derives instance n+1 from instance n
// in one of two forms:
//   - an ordinary tree with exactly one Hole leaf concluding the parametric
//     instance Gamma, <A>^n, Delta => C, where <A>^n is an opaque block;
//   - a StarRSplice root whose children are extra StarR premises; the
//     instance-n derivation (which must end in StarR) contributes its own
//     premises after (or before) them.
struct SchemaCertificate {
  OmegaFamily family;
  DerivationPtr base;
  DerivationPtr context;
};

DerivationPtr make_node(Rule rule, DSequent conclusion, std::vector<DerivationPtr> children = {});
DerivationPtr make_schema_node(const DSequent& conclusion, std::shared_ptr<const SchemaCertificate> cert);
DerivationPtr make_hole(const OmegaFamily& family);

enum class CheckVerdict { Valid, ValidUpToBound, Invalid };

std::string to_string(CheckVerdict v);
// 0 valid, 1 valid up to the omega bound, 2 invalid.
int exit_code(CheckVerdict v);

struct CheckResult {
  CheckVerdict verdict = CheckVerdict::Valid;
  std::string reason;
  // Conclusion of the first failing node.
  std::optional<DSequent> where;
  std::size_t nodes = 0;

  bool ok() const { return verdict != CheckVerdict::Invalid; }
};

CheckResult check_derivation(const DerivationPtr& d, const CheckContext& ctx);

CheckResult check_schema(const SchemaCertificate& cert, const CheckContext& ctx);
inline bool verify_schema(const SchemaCertificate& cert, const CheckContext& ctx) {
  return check_schema(cert, ctx).ok();
}

// Derivations are written as s-expressions:
//   (Rule[:n] "sequent" child ...)
//   (StarL "sequent" :schema <position> <base> <context>)
std::string serialize(const DerivationPtr& d);
DerivationPtr parse_derivation(std::string_view text);

std::size_t derivation_size(const DerivationPtr& d);
std::size_t derivation_height(const DerivationPtr& d);

}  // namespace ial

#endif  // IAL_DERIVATION_HPP_

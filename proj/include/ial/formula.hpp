// Formulas of infinitary action logic with the exponential modality.
//
// Formulas are hash-consed: two structurally equal formulas share one node,
// so equality and hashing are pointer operations.

#ifndef IAL_FORMULA_HPP_
#define IAL_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ial {

enum class Op : std::uint8_t {
  Var,
  Zero,
  One,
  Under,  // A \ B
  Over,   // B / A
  Prod,
  Join,
  Meet,
  Star,
  Bang,
  Block,  // parametric block A^n, used only inside schema contexts
};

struct FormulaNode;

class Formula {
 public:
  Formula() = default;

  static Formula var(std::string_view name);
  static Formula zero();
  static Formula one();
  // left \ right
  static Formula under(Formula left, Formula right);
  // left / right
  static Formula over(Formula left, Formula right);
  static Formula prod(Formula left, Formula right);
  static Formula join(Formula left, Formula right);
  static Formula meet(Formula left, Formula right);
  static Formula star(Formula body);
  static Formula bang(Formula body);
  static Formula block(Formula body);

  // Left-nested product of the given formulas; `1` when empty.
  static Formula product(const std::vector<Formula>& factors);

  bool valid() const { return node_ != nullptr; }
  Op op() const;
  const std::string& name() const;
  Formula left() const;
  Formula right() const;
  Formula body() const { return left(); }

  bool is(Op o) const { return valid() && op() == o; }
  bool is_var() const { return is(Op::Var); }
  bool is_binary() const;

  std::size_t hash() const;
  std::uint32_t size() const;
  std::uint32_t depth() const;
  bool has_star() const;
  bool has_bang() const;
  bool has_block() const;

  const FormulaNode* node() const { return node_; }

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }
  friend bool operator!=(Formula a, Formula b) { return a.node_ != b.node_; }

 private:
  explicit Formula(const FormulaNode* n) : node_(n) {}
  static Formula make(Op op, std::string_view name, Formula a, Formula b);

  const FormulaNode* node_ = nullptr;
};

// Structural total order, independent of allocation order.
int compare(Formula a, Formula b);

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return compare(a, b) < 0; }
};

struct FormulaHash {
  std::size_t operator()(Formula f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        message_(msg),
        position_(pos) {}
  std::size_t position() const { return position_; }
  // The diagnostic without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

Formula parse_formula(std::string_view text);
std::string print_formula(Formula f);

// Number of variable, constant and connective occurrences.
std::size_t complexity(Formula f);

// All subformulas including f itself, in structural order.
std::vector<Formula> subformulas(Formula f);

enum class FragmentClass : std::uint8_t { NE, Monoidal, StarFree, Unrestricted };

std::string to_string(FragmentClass c);

// Variable names of a product chain; `1` is the empty chain.
std::optional<std::vector<std::string>> var_chain(Formula f);

struct MonoidalShape {
  std::vector<std::string> from;  // b1 ... bn
  std::vector<std::string> to;    // c1 ... cm
};

// Decomposes !((b1....bn) \ (c1....cm)); nullopt for other shapes.
std::optional<MonoidalShape> monoidal_shape(Formula bang_formula);

FragmentClass classify_bang(Formula bang_formula);

bool is_monoidal_bang(Formula f);

// Worst class among the !-subformulas; NE when there are none.
FragmentClass classify_formulas(const std::vector<Formula>& fs);

}  // namespace ial

template <>
struct std::hash<ial::Formula> {
  std::size_t operator()(ial::Formula f) const { return f.hash(); }
};

#endif  // IAL_FORMULA_HPP_

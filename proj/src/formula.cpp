#include "ial/formula.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_set>

namespace ial {

struct FormulaNode {
  Op op;
  std::string name;
  const FormulaNode* a;
  const FormulaNode* b;
  std::size_t hash;
  std::uint32_t size;
  std::uint32_t depth;
  bool star;
  bool bang;
  bool block;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct NodeKeyHash {
  std::size_t operator()(const FormulaNode* n) const { return n->hash; }
};

struct NodeKeyEq {
  bool operator()(const FormulaNode* x, const FormulaNode* y) const {
    return x->op == y->op && x->a == y->a && x->b == y->b && x->name == y->name;
  }
};

class InternTable {
 public:
  const FormulaNode* intern(Op op, std::string_view name, const FormulaNode* a,
                            const FormulaNode* b) {
    FormulaNode probe{op, std::string(name), a, b, 0, 0, 0, false, false, false};
    std::size_t h = mix(static_cast<std::size_t>(op) + 1, std::hash<std::string_view>{}(name));
    h = mix(h, a ? a->hash : 0x51);
    h = mix(h, b ? b->hash : 0x73);
    probe.hash = h;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(&probe);
    if (it != table_.end()) return *it;
    auto node = std::make_unique<FormulaNode>(std::move(probe));
    node->size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
    node->depth = (a || b) ? 1 + std::max(a ? a->depth : 0, b ? b->depth : 0) : 0;
    node->star = op == Op::Star || (a && a->star) || (b && b->star);
    node->bang = op == Op::Bang || (a && a->bang) || (b && b->bang);
    node->block = op == Op::Block || (a && a->block) || (b && b->block);
    const FormulaNode* raw = node.get();
    storage_.push_back(std::move(node));
    table_.insert(raw);
    return raw;
  }

 private:
  std::mutex mu_;
  std::unordered_set<const FormulaNode*, NodeKeyHash, NodeKeyEq> table_;
  std::vector<std::unique_ptr<FormulaNode>> storage_;
};

InternTable& table() {
  static InternTable* t = new InternTable();
  return *t;
}

}  // namespace

Formula Formula::make(Op op, std::string_view name, Formula a, Formula b) {
  return Formula(table().intern(op, name, a.node_, b.node_));
}

Formula Formula::var(std::string_view name) { return make(Op::Var, name, {}, {}); }
Formula Formula::zero() { return make(Op::Zero, "", {}, {}); }
Formula Formula::one() { return make(Op::One, "", {}, {}); }
Formula Formula::under(Formula l, Formula r) { return make(Op::Under, "", l, r); }
Formula Formula::over(Formula l, Formula r) { return make(Op::Over, "", l, r); }
Formula Formula::prod(Formula l, Formula r) { return make(Op::Prod, "", l, r); }
Formula Formula::join(Formula l, Formula r) { return make(Op::Join, "", l, r); }
Formula Formula::meet(Formula l, Formula r) { return make(Op::Meet, "", l, r); }
Formula Formula::star(Formula x) { return make(Op::Star, "", x, {}); }
Formula Formula::bang(Formula x) { return make(Op::Bang, "", x, {}); }
Formula Formula::block(Formula x) { return make(Op::Block, "", x, {}); }

Formula Formula::product(const std::vector<Formula>& factors) {
  if (factors.empty()) return one();
  Formula acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = prod(acc, factors[i]);
  return acc;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
std::uint32_t Formula::size() const { return node_->size; }
std::uint32_t Formula::depth() const { return node_->depth; }
bool Formula::has_star() const { return node_->star; }
bool Formula::has_bang() const { return node_->bang; }
bool Formula::has_block() const { return node_->block; }

bool Formula::is_binary() const {
  switch (op()) {
    case Op::Under:
    case Op::Over:
    case Op::Prod:
    case Op::Join:
    case Op::Meet:
      return true;
    default:
      return false;
  }
}

int compare(Formula a, Formula b) {
  if (a == b) return 0;
  if (!a.valid()) return -1;
  if (!b.valid()) return 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Var) return a.name() < b.name() ? -1 : 1;
  if (int c = compare(a.left(), b.left())) return c;
  return compare(a.right(), b.right());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Zero, One, LParen, RParen, LAngle, RAngle, Dot, Plus, Amp,
                 Backslash, Slash, StarPost, BlockPost, Bang, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    switch (c) {
      case '0': out.push_back({Tok::Zero, "0", start}); ++i; break;
      case '1': out.push_back({Tok::One, "1", start}); ++i; break;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case '<': out.push_back({Tok::LAngle, "<", start}); ++i; break;
      case '>': out.push_back({Tok::RAngle, ">", start}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; break;
      case '+': out.push_back({Tok::Plus, "+", start}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; break;
      case '\\': out.push_back({Tok::Backslash, "\\", start}); ++i; break;
      case '/': out.push_back({Tok::Slash, "/", start}); ++i; break;
      case '!': out.push_back({Tok::Bang, "!", start}); ++i; break;
      case '^':
        if (i + 1 < s.size() && s[i + 1] == '*') {
          out.push_back({Tok::StarPost, "^*", start});
        } else if (i + 1 < s.size() && s[i + 1] == 'n') {
          out.push_back({Tok::BlockPost, "^n", start});
        } else {
          throw ParseError("expected '^*'", start);
        }
        i += 2;
        break;
      default:
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = join();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) throw ParseError("unbalanced ')'", peek().pos);
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }

  Formula join() {
    Formula f = meet();
    while (accept(Tok::Plus)) f = Formula::join(f, meet());
    return f;
  }
  Formula meet() {
    Formula f = division();
    while (accept(Tok::Amp)) f = Formula::meet(f, division());
    return f;
  }
  // `\` is right-associative, `/` left-associative, both on one level.
  Formula division() {
    Formula f = over_chain();
    if (accept(Tok::Backslash)) return Formula::under(f, division());
    return f;
  }
  Formula over_chain() {
    Formula f = product();
    while (accept(Tok::Slash)) f = Formula::over(f, product());
    return f;
  }
  Formula product() {
    Formula f = unary();
    while (accept(Tok::Dot)) f = Formula::prod(f, unary());
    return f;
  }
  Formula unary() {
    if (accept(Tok::Bang)) return Formula::bang(unary());
    return postfix();
  }
  Formula postfix() {
    Formula f = atom();
    while (accept(Tok::StarPost)) f = Formula::star(f);
    return f;
  }
  Formula atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::Ident: return Formula::var(t.text);
      case Tok::Zero: return Formula::zero();
      case Tok::One: return Formula::one();
      case Tok::LParen: {
        Formula f = join();
        if (!accept(Tok::RParen)) throw ParseError("unbalanced '('", t.pos);
        return f;
      }
      case Tok::LAngle: {
        Formula f = join();
        if (!accept(Tok::RAngle)) throw ParseError("expected '>'", peek().pos);
        if (!accept(Tok::BlockPost)) throw ParseError("expected '^n'", peek().pos);
        return Formula::block(f);
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      case Tok::RParen: throw ParseError("unbalanced ')'", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int level(Formula f) {
  switch (f.op()) {
    case Op::Join: return 1;
    case Op::Meet: return 2;
    case Op::Under: return 3;
    case Op::Over: return 4;
    case Op::Prod: return 5;
    case Op::Bang: return 6;
    case Op::Star: return 7;
    default: return 8;
  }
}

void print_into(Formula f, int min_level, std::string& out) {
  bool parens = level(f) < min_level;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::Var: out += f.name(); break;
    case Op::Zero: out += '0'; break;
    case Op::One: out += '1'; break;
    case Op::Join:
      print_into(f.left(), 1, out);
      out += " + ";
      print_into(f.right(), 2, out);
      break;
    case Op::Meet:
      print_into(f.left(), 2, out);
      out += " & ";
      print_into(f.right(), 3, out);
      break;
    case Op::Under:
      print_into(f.left(), 4, out);
      out += " \\ ";
      print_into(f.right(), 3, out);
      break;
    case Op::Over:
      print_into(f.left(), 4, out);
      out += " / ";
      print_into(f.right(), 5, out);
      break;
    case Op::Prod:
      print_into(f.left(), 5, out);
      out += '.';
      print_into(f.right(), 6, out);
      break;
    case Op::Bang:
      out += '!';
      print_into(f.body(), 6, out);
      break;
    case Op::Star:
      print_into(f.body(), 7, out);
      out += "^*";
      break;
    case Op::Block:
      out += '<';
      print_into(f.body(), 1, out);
      out += ">^n";
      break;
  }
  if (parens) out += ')';
}

void collect(Formula f, std::set<Formula, FormulaLess>& acc) {
  if (!acc.insert(f).second) return;
  if (f.left().valid()) collect(f.left(), acc);
  if (f.right().valid()) collect(f.right(), acc);
}

bool chain_into(Formula f, std::vector<std::string>& out) {
  if (f.is_var()) {
    out.push_back(f.name());
    return true;
  }
  if (f.is(Op::Prod)) return chain_into(f.left(), out) && chain_into(f.right(), out);
  return false;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string print_formula(Formula f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

std::size_t complexity(Formula f) { return f.size(); }

std::vector<Formula> subformulas(Formula f) {
  std::set<Formula, FormulaLess> acc;
  collect(f, acc);
  return {acc.begin(), acc.end()};
}

std::string to_string(FragmentClass c) {
  switch (c) {
    case FragmentClass::NE: return "ne";
    case FragmentClass::Monoidal: return "monoidal";
    case FragmentClass::StarFree: return "star-free";
    case FragmentClass::Unrestricted: return "unrestricted";
  }
  return "?";
}

std::optional<std::vector<std::string>> var_chain(Formula f) {
  std::vector<std::string> out;
  if (f.is(Op::One)) return out;
  if (!chain_into(f, out)) return std::nullopt;
  return out;
}

std::optional<MonoidalShape> monoidal_shape(Formula f) {
  if (!f.is(Op::Bang) || !f.body().is(Op::Under)) return std::nullopt;
  auto from = var_chain(f.body().left());
  auto to = var_chain(f.body().right());
  if (!from || !to) return std::nullopt;
  return MonoidalShape{std::move(*from), std::move(*to)};
}

FragmentClass classify_bang(Formula f) {
  if (auto shape = monoidal_shape(f)) {
    return shape->to.size() <= shape->from.size() ? FragmentClass::NE : FragmentClass::Monoidal;
  }
  if (f.is(Op::Bang) && !f.body().has_star()) return FragmentClass::StarFree;
  return FragmentClass::Unrestricted;
}

bool is_monoidal_bang(Formula f) { return monoidal_shape(f).has_value(); }

FragmentClass classify_formulas(const std::vector<Formula>& fs) {
  FragmentClass worst = FragmentClass::NE;
  for (Formula f : fs) {
    if (!f.has_bang()) continue;
    for (Formula g : subformulas(f)) {
      if (!g.is(Op::Bang)) continue;
      worst = std::max(worst, classify_bang(g));
    }
  }
  return worst;
}

}  // namespace ial

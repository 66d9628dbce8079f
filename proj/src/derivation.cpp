#include "ial/derivation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ial {

DerivationPtr make_node(Rule rule, DSequent conclusion, std::vector<DerivationPtr> children) {
  auto d = std::make_shared<Derivation>();
  d->rule = rule;
  d->conclusion = std::move(conclusion);
  d->children = std::move(children);
  return d;
}

DerivationPtr make_schema_node(const DSequent& conclusion, std::shared_ptr<const SchemaCertificate> cert) {
  auto d = std::make_shared<Derivation>();
  d->rule = Rule{RuleKind::StarL, 0};
  d->conclusion = conclusion;
  d->schema = std::move(cert);
  return d;
}

DerivationPtr make_hole(const OmegaFamily& family) {
  return make_node(Rule{RuleKind::Hole, 0}, family.parametric());
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Valid: return "Valid";
    case CheckVerdict::ValidUpToBound: return "ValidUpToBound";
    case CheckVerdict::Invalid: return "Invalid";
  }
  return "?";
}

int exit_code(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Valid: return 0;
    case CheckVerdict::ValidUpToBound: return 1;
    case CheckVerdict::Invalid: return 2;
  }
  return 2;
}

namespace {

struct Checker {
  const CheckContext& ctx;
  CheckResult result;

  // `hole` is the parametric sequent a Hole leaf may conclude; `holes` counts
  // the leaves seen in the current context.
  bool visit(const DerivationPtr& d, const CheckContext& c, const DSequent* hole, std::size_t* holes) {
    if (!d) return fail("missing subderivation", std::nullopt);
    ++result.nodes;
    const Derivation& node = *d;
    switch (node.rule.kind) {
      case RuleKind::Hole:
        if (!hole) return fail("hole outside a schema context", node.conclusion);
        if (!(node.conclusion == *hole)) return fail("hole does not conclude the parametric instance", node.conclusion);
        if (!node.children.empty()) return fail("hole with children", node.conclusion);
        ++*holes;
        return true;
      case RuleKind::StarRSplice:
        return fail("splice node below the root of a schema context", node.conclusion);
      case RuleKind::StarL:
        if (node.schema) return visit_schema(node, c);
        return visit_bounded_omega(node, c, hole, holes);
      default:
        break;
    }
    RuleInstance ri{node.rule, node.conclusion, {}};
    for (const auto& ch : node.children) {
      if (!ch) return fail("missing subderivation", node.conclusion);
      ri.premises.push_back(ch->conclusion);
    }
    if (auto err = instance_error(ri, c)) return fail(rule_name(node.rule) + ": " + *err, node.conclusion);
    for (const auto& ch : node.children)
      if (!visit(ch, c, hole, holes)) return false;
    return true;
  }

  bool visit_bounded_omega(const Derivation& node, const CheckContext& c, const DSequent* hole,
                           std::size_t* holes) {
    const std::size_t need = c.omega_bound + 1;
    if (node.children.size() < need)
      return fail("omega-node has " + std::to_string(node.children.size()) + " instance(s), bound requires " +
                      std::to_string(need),
                  node.conclusion);
    RuleInstance ri{node.rule, node.conclusion, {}};
    for (std::size_t i = 0; i < need; ++i) {
      if (!node.children[i]) return fail("missing subderivation", node.conclusion);
      ri.premises.push_back(node.children[i]->conclusion);
    }
    if (auto err = instance_error(ri, c)) return fail("StarL: " + *err, node.conclusion);
    for (std::size_t i = 0; i < need; ++i)
      if (!visit(node.children[i], c, hole, holes)) return false;
    result.verdict = CheckVerdict::ValidUpToBound;
    return true;
  }

  bool visit_schema(const Derivation& node, const CheckContext& c) {
    if (!node.children.empty()) return fail("schema node with explicit children", node.conclusion);
    const SchemaCertificate& cert = *node.schema;
    if (!(cert.family.conclusion() == node.conclusion))
      return fail("schema family does not match the node", node.conclusion);
    RuleInstance ri{node.rule, node.conclusion, {cert.family.instance(0)}};
    if (auto err = instance_error(ri, c)) return fail("StarL: " + *err, node.conclusion);
    return visit_certificate(cert, c);
  }

  bool visit_certificate(const SchemaCertificate& cert, const CheckContext& c) {
    const OmegaFamily& fam = cert.family;
    if (!cert.base || !cert.context) return fail("incomplete schema certificate", fam.conclusion());
    if (!(cert.base->conclusion == fam.instance(0)))
      return fail("schema base does not prove instance 0", cert.base->conclusion);
    if (!visit(cert.base, c, nullptr, nullptr)) return false;

    CheckContext inner = c;
    inner.allow_block = true;
    const DSequent param = fam.parametric();
    const DSequent& top = cert.context->conclusion;
    if (!(top == fam.parametric_next(true)) && !(top == fam.parametric_next(false)))
      return fail("schema context does not conclude instance n+1", top);

    if (cert.context->rule.kind == RuleKind::StarRSplice) return visit_splice(cert, inner, param);

    std::size_t holes = 0;
    if (!visit(cert.context, inner, &param, &holes)) return false;
    if (holes != 1) return fail("schema context must contain exactly one hole", top);
    return true;
  }

  bool visit_splice(const SchemaCertificate& cert, const CheckContext& inner, const DSequent& param) {
    const Derivation& root = *cert.context;
    ++result.nodes;
    if (cert.base->rule.kind != RuleKind::StarR) return fail("splice needs a base ending in StarR", cert.base->conclusion);
    if (!cert.family.suc.is(Op::Star)) return fail("splice needs a star succedent", root.conclusion);
    if (root.rule.n != root.children.size()) return fail("splice arity differs from its parameter", root.conclusion);
    const Formula body = cert.family.suc.body();
    std::vector<Formula> own;
    for (const auto& ch : root.children) {
      if (!ch) return fail("missing subderivation", root.conclusion);
      if (ch->conclusion.suc != body || ch->conclusion.zone != cert.family.zone)
        return fail("splice premise does not prove the star body", ch->conclusion);
      own.insert(own.end(), ch->conclusion.ant.begin(), ch->conclusion.ant.end());
    }
    if (root.conclusion.ant != concat({own, param.ant}) && root.conclusion.ant != concat({param.ant, own}))
      return fail("splice antecedent is not own premises next to the instance-n antecedent", root.conclusion);
    for (const auto& ch : root.children)
      if (!visit(ch, inner, nullptr, nullptr)) return false;
    return true;
  }

  bool fail(std::string reason, std::optional<DSequent> where) {
    result.verdict = CheckVerdict::Invalid;
    result.reason = std::move(reason);
    result.where = std::move(where);
    return false;
  }
};

}  // namespace

CheckResult check_derivation(const DerivationPtr& d, const CheckContext& ctx) {
  Checker ch{ctx, {}};
  ch.visit(d, ctx, nullptr, nullptr);
  return ch.result;
}

CheckResult check_schema(const SchemaCertificate& cert, const CheckContext& ctx) {
  Checker ch{ctx, {}};
  ch.visit_certificate(cert, ctx);
  return ch.result;
}

std::size_t derivation_size(const DerivationPtr& d) {
  if (!d) return 0;
  std::size_t n = 1;
  for (const auto& c : d->children) n += derivation_size(c);
  if (d->schema) n += derivation_size(d->schema->base) + derivation_size(d->schema->context);
  return n;
}

std::size_t derivation_height(const DerivationPtr& d) {
  if (!d) return 0;
  std::size_t h = 0;
  for (const auto& c : d->children) h = std::max(h, derivation_height(c));
  if (d->schema) h = std::max({h, derivation_height(d->schema->base), derivation_height(d->schema->context)});
  return h + 1;
}

// ---------------------------------------------------------------------------
// s-expression text form

namespace {

void write(const DerivationPtr& d, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent), ' ');
  out += '(' + rule_name(d->rule) + " \"" + print_dsequent(d->conclusion) + '"';
  if (d->schema) {
    const auto& fam = d->schema->family;
    out += " :schema " + std::to_string(fam.left.size()) + "\n";
    write(d->schema->base, indent + 2, out);
    out += '\n';
    write(d->schema->context, indent + 2, out);
  }
  for (const auto& c : d->children) {
    out += '\n';
    write(c, indent + 2, out);
  }
  out += ')';
}

struct SexpParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& msg) const {
    throw std::invalid_argument("derivation text, offset " + std::to_string(pos) + ": " + msg);
  }

  void skip() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == ';' && pos + 1 < text.size() && text[pos + 1] == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::string atom() {
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
           text[pos] != ')' && text[pos] != '"')
      ++pos;
    if (start == pos) error("expected an atom");
    return std::string(text.substr(start, pos - start));
  }

  std::string quoted() {
    if (pos >= text.size() || text[pos] != '"') error("expected a quoted sequent");
    std::size_t end = text.find('"', pos + 1);
    if (end == std::string_view::npos) error("unterminated string");
    std::string s(text.substr(pos + 1, end - pos - 1));
    pos = end + 1;
    return s;
  }

  DerivationPtr node() {
    skip();
    if (pos >= text.size() || text[pos] != '(') error("expected '('");
    ++pos;
    skip();
    std::string name = atom();
    auto rule = parse_rule(name);
    if (!rule) error("unknown rule '" + name + "'");
    skip();
    DSequent concl;
    try {
      concl = parse_dsequent(quoted());
    } catch (const ParseError& e) {
      error(std::string("bad sequent: ") + e.what());
    }
    skip();
    auto d = std::make_shared<Derivation>();
    d->rule = *rule;
    d->conclusion = concl;
    if (pos < text.size() && text[pos] == ':') {
      if (atom() != ":schema") error("expected :schema");
      if (rule->kind != RuleKind::StarL) error(":schema on a non-StarL node");
      skip();
      std::string p = atom();
      std::size_t position = 0;
      auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), position);
      if (ec != std::errc() || ptr != p.data() + p.size()) error("bad schema position");
      auto fam = omega_family(concl, position);
      if (!fam) error("schema position does not hold a star");
      auto cert = std::make_shared<SchemaCertificate>();
      cert->family = *fam;
      cert->base = node();
      cert->context = node();
      d->schema = cert;
      skip();
    }
    while (pos < text.size() && text[pos] == '(') {
      d->children.push_back(node());
      skip();
    }
    if (pos >= text.size() || text[pos] != ')') error("expected ')'");
    ++pos;
    return d;
  }
};

}  // namespace

std::string serialize(const DerivationPtr& d) {
  std::string out;
  write(d, 0, out);
  out += '\n';
  return out;
}

DerivationPtr parse_derivation(std::string_view text) {
  SexpParser p{text};
  DerivationPtr d = p.node();
  p.skip();
  if (p.pos != text.size()) p.error("trailing input");
  return d;
}

}  // namespace ial

#include "ial/embedding.hpp"

#include <algorithm>
#include <stdexcept>

#include "ial/flat_search.hpp"

namespace ial {

namespace {

using Fs = std::vector<Formula>;

Fs slice(const Fs& a, std::size_t from, std::size_t to) {
  return Fs(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

DSequent flat_seq(Fs ant, Formula suc) { return DSequent(Zone{}, std::move(ant), suc); }

Formula upsilon_formula(const Sequent& h) {
  if (h.ant.empty()) return h.suc;
  return Formula::under(Formula::product(h.ant), h.suc);
}

// A1, ..., Ak => A1 . ... . Ak by product rules over identities.
DerivationPtr product_tree(const Fs& factors, std::size_t k) {
  const Fs ant = slice(factors, 0, k);
  if (k == 1) return make_node(Rule{RuleKind::Id, 0}, flat_seq(ant, factors[0]));
  return make_node(Rule{RuleKind::ProdR, 0}, flat_seq(ant, Formula::product(ant)),
                   {product_tree(factors, k - 1), make_node(Rule{RuleKind::Id, 0}, flat_seq({factors[k - 1]}, factors[k - 1]))});
}

std::size_t hypothesis_index(const HypothesisSet& hyps, const Sequent& s) {
  for (std::size_t i = 0; i < hyps.size(); ++i)
    if (hyps[i] == s) return i;
  throw std::invalid_argument("leaf is not a hypothesis: " + print_sequent(s));
}

[[noreturn]] void malformed(const Derivation& d) {
  throw std::invalid_argument("cannot translate " + rule_name(d.rule) + " node at " + print_dsequent(d.conclusion));
}

DerivationPtr lift(const HypothesisSet& hyps, const Fs& Y, const DerivationPtr& d) {
  if (d->schema) throw std::invalid_argument("schema certificates are not translated");
  const Fs& G = d->conclusion.ant;
  const Formula C = d->conclusion.suc;
  const Fs target = concat({Y, G});
  std::vector<DerivationPtr> kids;
  for (const auto& c : d->children) kids.push_back(lift(hyps, Y, c));
  auto premise = [&](std::size_t i) -> const DSequent& { return d->children.at(i)->conclusion; };
  auto via = [&](Fs pre) {
    DerivationPtr node = make_node(d->rule, flat_seq(pre, C), std::move(kids));
    return structural_path(target, pre, C, node);
  };

  switch (d->rule.kind) {
    case RuleKind::Hyp:
      return hypothesis_figure(hyps, hypothesis_index(hyps, d->conclusion.flat()));
    case RuleKind::Id:
    case RuleKind::OneR:
      return structural_path(target, G, C, d);
    case RuleKind::ProdR:
      return via(concat({Y, premise(0).ant, Y, premise(1).ant}));
    case RuleKind::StarR: {
      Fs pre;
      for (std::size_t i = 0; i < d->children.size(); ++i) pre = concat({pre, Y, premise(i).ant});
      return via(pre);
    }
    case RuleKind::Cut:
    case RuleKind::UnderL:
    case RuleKind::OverL: {
      const Fs& pi = premise(0).ant;
      const Fs& rest = premise(1).ant;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        const Fs gamma = slice(rest, 0, i);
        const Fs delta = slice(rest, i + 1, rest.size());
        if (d->rule.kind == RuleKind::Cut) {
          if (rest[i] == premise(0).suc && concat({gamma, pi, delta}) == G) return via(concat({Y, gamma, Y, pi, delta}));
        } else if (d->rule.kind == RuleKind::UnderL) {
          const std::size_t at = gamma.size() + pi.size();
          if (at < G.size() && G[at].is(Op::Under) && G[at].right() == rest[i] && G[at].left() == premise(0).suc &&
              concat({gamma, pi, {G[at]}, delta}) == G)
            return via(concat({Y, gamma, Y, pi, {G[at]}, delta}));
        } else {
          const std::size_t at = gamma.size();
          if (at < G.size() && G[at].is(Op::Over) && G[at].left() == rest[i] && G[at].right() == premise(0).suc &&
              concat({gamma, {G[at]}, pi, delta}) == G)
            return via(concat({Y, gamma, {G[at]}, Y, pi, delta}));
        }
      }
      malformed(*d);
    }
    case RuleKind::UnderR: {
      const Fs& pant = premise(0).ant;
      if (pant.empty()) malformed(*d);
      const Fs moved = concat({{pant[0]}, Y, G});
      DerivationPtr inner = structural_path(moved, concat({Y, pant}), premise(0).suc, kids[0]);
      return make_node(d->rule, flat_seq(target, C), {inner});
    }
    default:
      return make_node(d->rule, flat_seq(target, C), std::move(kids));
  }
}

Fs non_bangs(const Fs& a) {
  Fs out;
  for (Formula f : a)
    if (!f.is(Op::Bang)) out.push_back(f);
  return out;
}

// => upsilon(h) from the hypothesis h.
DerivationPtr hypothesis_as_formula(const Sequent& h) {
  DerivationPtr node = make_node(Rule{RuleKind::Hyp, 0}, DSequent(h));
  if (h.ant.empty()) return node;
  for (std::size_t k = h.ant.size(); k >= 2; --k) {
    Fs ant = concat({{Formula::product(slice(h.ant, 0, k))}, slice(h.ant, k, h.ant.size())});
    node = make_node(Rule{RuleKind::ProdL, 0}, flat_seq(ant, h.suc), {node});
  }
  return make_node(Rule{RuleKind::UnderR, 0}, flat_seq({}, upsilon_formula(h)), {node});
}

DerivationPtr erase(const HypothesisSet& hyps, const DerivationPtr& d) {
  if (d->schema) throw std::invalid_argument("schema certificates are not translated");
  const Fs& ant = d->conclusion.ant;
  const Formula C = d->conclusion.suc;
  switch (d->rule.kind) {
    case RuleKind::BangP1:
    case RuleKind::BangP2:
    case RuleKind::BangW:
    case RuleKind::BangC:
      return erase(hyps, d->children.at(0));
    case RuleKind::BangR:
      malformed(*d);
    case RuleKind::BangL: {
      const Fs& pant = d->children.at(0)->conclusion.ant;
      for (std::size_t i = 0; i < ant.size(); ++i) {
        if (!ant[i].is(Op::Bang) || splice(ant, i, i + 1, {ant[i].body()}) != pant) continue;
        const Formula f = ant[i].body();
        const auto it = std::find_if(hyps.begin(), hyps.end(), [&](const Sequent& h) { return upsilon_formula(h) == f; });
        if (it == hyps.end()) malformed(*d);
        const Fs gamma = non_bangs(slice(ant, 0, i));
        const Fs delta = non_bangs(slice(ant, i + 1, ant.size()));
        return make_node(Rule{RuleKind::Cut, 0}, flat_seq(concat({gamma, delta}), C),
                         {hypothesis_as_formula(*it), erase(hyps, d->children[0])});
      }
      malformed(*d);
    }
    default: {
      std::vector<DerivationPtr> kids;
      for (const auto& c : d->children) kids.push_back(erase(hyps, c));
      return make_node(d->rule, flat_seq(non_bangs(ant), C), std::move(kids));
    }
  }
}

}  // namespace

std::string to_string(HypothesisClass c) {
  switch (c) {
    case HypothesisClass::NE: return "ne";
    case HypothesisClass::MonoidalInequation: return "monoidal-inequation";
    case HypothesisClass::StarFree: return "star-free";
    case HypothesisClass::General: return "general";
  }
  return "?";
}

HypothesisClass classify_hypothesis(const Sequent& h) {
  const bool vars = std::all_of(h.ant.begin(), h.ant.end(), [](Formula f) { return f.is_var(); });
  if (auto chain = var_chain(h.suc); vars && chain) {
    if (!h.ant.empty() && chain->size() <= h.ant.size()) return HypothesisClass::NE;
    return HypothesisClass::MonoidalInequation;
  }
  const bool star = h.suc.has_star() || std::any_of(h.ant.begin(), h.ant.end(), [](Formula f) { return f.has_star(); });
  return star ? HypothesisClass::General : HypothesisClass::StarFree;
}

std::vector<Formula> upsilon(const HypothesisSet& hyps) {
  Fs out;
  for (const auto& h : hyps) out.push_back(upsilon_formula(h));
  return out;
}

Sequent embed(const HypothesisSet& hyps, const Sequent& goal) {
  Fs ant;
  for (Formula f : upsilon(hyps)) ant.push_back(Formula::bang(f));
  ant.insert(ant.end(), goal.ant.begin(), goal.ant.end());
  return Sequent{ant, goal.suc};
}

DerivationPtr hypothesis_figure(const HypothesisSet& hyps, std::size_t index) {
  const Sequent& h = hyps.at(index);
  Fs Y;
  for (Formula f : upsilon(hyps)) Y.push_back(Formula::bang(f));
  const Formula f = upsilon_formula(h);
  const Formula bf = Formula::bang(f);
  const Formula B = h.suc;
  const Fs target = concat({Y, h.ant});

  if (h.ant.empty()) {
    DerivationPtr id = make_node(Rule{RuleKind::Id, 0}, flat_seq({B}, B));
    DerivationPtr bang_l = make_node(Rule{RuleKind::BangL, 0}, flat_seq({bf}, B), {id});
    return structural_path(target, {bf}, B, bang_l);
  }
  DerivationPtr prod = product_tree(h.ant, h.ant.size());
  DerivationPtr id_b = make_node(Rule{RuleKind::Id, 0}, flat_seq({B}, B));
  DerivationPtr under_l = make_node(Rule{RuleKind::UnderL, 0}, flat_seq(concat({h.ant, {f}}), B), {prod, id_b});
  DerivationPtr bang_l = make_node(Rule{RuleKind::BangL, 0}, flat_seq(concat({h.ant, {bf}}), B), {under_l});
  const Fs used = concat({{bf}, h.ant});
  DerivationPtr p1 = make_node(Rule{RuleKind::BangP1, 0}, flat_seq(used, B), {bang_l});
  return structural_path(target, used, B, p1);
}

DerivationPtr embed_derivation(const HypothesisSet& hyps, const DerivationPtr& d) {
  Fs Y;
  for (Formula f : upsilon(hyps)) Y.push_back(Formula::bang(f));
  return lift(hyps, Y, d);
}

DerivationPtr erase_embedding(const HypothesisSet& hyps, const DerivationPtr& d) { return erase(hyps, d); }

}  // namespace ial

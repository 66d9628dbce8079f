#include "ial/flat_search.hpp"

#include "length_bound.hpp"
#include "macro_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ial {

using namespace detail;

namespace {

using Fs = std::vector<Formula>;

Fs slice(const Fs& a, std::size_t from, std::size_t to) {
  return Fs(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

std::size_t count_of(const Fs& a, Formula f) { return static_cast<std::size_t>(std::count(a.begin(), a.end(), f)); }

Fs non_bangs(const Fs& a) {
  Fs out;
  for (Formula f : a)
    if (!f.is(Op::Bang)) out.push_back(f);
  return out;
}

struct Step {
  RuleKind kind;
  Fs conclusion;
};

}  // namespace

CheckContext flat_context(const std::vector<Sequent>& hypotheses, bool allow_cut) {
  CheckContext ctx;
  ctx.system = System::Flat;
  ctx.hypotheses = hypotheses;
  ctx.allow_cut = allow_cut;
  return ctx;
}

std::vector<Formula> canonical_antecedent(const std::vector<Formula>& ant) {
  Fs bangs;
  Fs rest;
  for (Formula f : ant) (f.is(Op::Bang) ? bangs : rest).push_back(f);
  Fs out = make_zone(bangs);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

DerivationPtr structural_path(const std::vector<Formula>& from, const std::vector<Formula>& to, Formula suc,
                              DerivationPtr tail) {
  if (non_bangs(from) != non_bangs(to)) throw std::logic_error("structural path changes non-! formulas");
  std::vector<Step> steps;
  Fs cur = from;
  auto record = [&](RuleKind k, Fs next) {
    steps.push_back(Step{k, cur});
    cur = std::move(next);
  };

  Fs needed = make_zone(to);
  for (Formula f : make_zone(cur)) needed = zone_with(needed, f);
  for (Formula f : needed) {
    if (!f.is(Op::Bang)) continue;
    const std::size_t want = count_of(to, f);
    while (count_of(cur, f) > want) {
      auto it = std::find(cur.begin(), cur.end(), f);
      Fs next = cur;
      next.erase(next.begin() + (it - cur.begin()));
      record(RuleKind::BangW, std::move(next));
    }
    if (count_of(cur, f) == 0 && want > 0) throw std::logic_error("structural path needs an absent !-formula");
    while (count_of(cur, f) < want) {
      auto pos = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), f) - cur.begin());
      record(RuleKind::BangC, splice(cur, pos, pos + 1, {f, f}));
    }
  }

  if (cur != to) {
    // Park every !-formula at the right end, then bring each into place.
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (!cur[i].is(Op::Bang)) continue;
      std::size_t last_plain = cur.size();
      for (std::size_t j = cur.size(); j-- > i + 1;)
        if (!cur[j].is(Op::Bang)) {
          last_plain = j;
          break;
        }
      if (last_plain == cur.size()) continue;
      Fs next = splice(cur, i, i + 1, {});
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(last_plain), cur[i]);
      record(RuleKind::BangP1, std::move(next));
    }
    for (std::size_t i = 0; i < to.size(); ++i) {
      if (cur[i] == to[i]) continue;
      std::size_t j = i + 1;
      while (j < cur.size() && cur[j] != to[i]) ++j;
      if (j == cur.size() || !to[i].is(Op::Bang)) throw std::logic_error("structural path cannot reorder");
      Fs next = splice(cur, j, j + 1, {});
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), to[i]);
      record(RuleKind::BangP2, std::move(next));
    }
  }

  DerivationPtr node = std::move(tail);
  for (std::size_t k = steps.size(); k-- > 0;)
    node = make_node(Rule{steps[k].kind, 0}, DSequent(Zone{}, steps[k].conclusion, suc), {node});
  return node;
}

namespace {

// Every way to cut `a` into consecutive nonempty blocks.
void compositions(const Fs& a, std::size_t from, std::vector<Fs>& acc, std::vector<std::vector<Fs>>& out) {
  if (from == a.size()) {
    out.push_back(acc);
    return;
  }
  for (std::size_t to = from + 1; to <= a.size(); ++to) {
    acc.push_back(slice(a, from, to));
    compositions(a, to, acc, out);
    acc.pop_back();
  }
}

// Macro for one logical rule applied to `pre` (reached from the canonical
// conclusion by structural steps); raw premises are brought back into
// canonical form by further structural steps.
Macro logical_macro(const Sequent& s, Fs pre, Rule rule, std::vector<Sequent> raw) {
  Macro m;
  for (const auto& r : raw) m.premises.push_back(Sequent{canonical_antecedent(r.ant), r.suc});
  m.build = [s, pre = std::move(pre), rule, raw, canon = m.premises](const std::vector<DerivationPtr>& kids) {
    std::vector<DerivationPtr> ps;
    for (std::size_t j = 0; j < raw.size(); ++j)
      ps.push_back(structural_path(raw[j].ant, canon[j].ant, raw[j].suc, kids[j]));
    DerivationPtr mid = make_node(rule, DSequent(Zone{}, pre, s.suc), std::move(ps));
    return structural_path(s.ant, pre, s.suc, mid);
  };
  return m;
}

std::vector<Macro> flat_macros(const Sequent& s, bool& incomplete) {
  std::vector<Macro> out;
  std::size_t k = 0;
  while (k < s.ant.size() && s.ant[k].is(Op::Bang)) ++k;
  const Fs X = slice(s.ant, 0, k);
  const Fs G = slice(s.ant, k, s.ant.size());
  const Formula C = s.suc;
  auto seq = [](Fs a, Formula c) { return Sequent{std::move(a), c}; };
  auto add = [&](Fs pre, RuleKind kind, std::vector<Sequent> raw, unsigned n = 0) {
    out.push_back(logical_macro(s, std::move(pre), Rule{kind, n}, std::move(raw)));
  };

  if ((G.size() == 1 && G[0] == C) || (G.empty() && C.is(Op::Bang) && count_of(X, C) > 0)) add({C}, RuleKind::Id, {});
  if (G.empty() && C.is(Op::One)) add({}, RuleKind::OneR, {});
  if (std::any_of(G.begin(), G.end(), [](Formula f) { return f.is(Op::Zero); })) add(s.ant, RuleKind::ZeroL, {});

  switch (C.op()) {
    case Op::Under:
      add(s.ant, RuleKind::UnderR, {seq(concat({{C.left()}, s.ant}), C.right())});
      break;
    case Op::Over:
      add(s.ant, RuleKind::OverR, {seq(concat({s.ant, {C.right()}}), C.left())});
      break;
    case Op::Join:
      add(s.ant, RuleKind::JoinR1, {seq(s.ant, C.left())});
      add(s.ant, RuleKind::JoinR2, {seq(s.ant, C.right())});
      break;
    case Op::Meet:
      add(s.ant, RuleKind::MeetR, {seq(s.ant, C.left()), seq(s.ant, C.right())});
      break;
    case Op::Bang:
      if (G.empty()) add(s.ant, RuleKind::BangR, {seq(s.ant, C.body())});
      break;
    case Op::Prod:
      for (std::size_t j = 0; j <= G.size(); ++j) {
        Fs g1 = slice(G, 0, j);
        Fs g2 = slice(G, j, G.size());
        add(concat({X, g1, X, g2}), RuleKind::ProdR, {seq(concat({X, g1}), C.left()), seq(concat({X, g2}), C.right())});
      }
      break;
    case Op::Star: {
      if (G.empty()) {
        add({}, RuleKind::StarR, {}, 0);
        break;
      }
      std::vector<Fs> acc;
      std::vector<std::vector<Fs>> parts;
      compositions(G, 0, acc, parts);
      for (const auto& blocks : parts) {
        Fs pre;
        std::vector<Sequent> raw;
        for (const auto& b : blocks) {
          pre = concat({pre, X, b});
          raw.push_back(seq(concat({X, b}), C.body()));
        }
        add(std::move(pre), RuleKind::StarR, std::move(raw), static_cast<unsigned>(blocks.size()));
      }
      break;
    }
    default:
      break;
  }

  for (std::size_t i = 0; i < G.size(); ++i) {
    const Formula f = G[i];
    const Fs before = slice(G, 0, i);
    const Fs after = slice(G, i + 1, G.size());
    switch (f.op()) {
      case Op::Prod:
        add(s.ant, RuleKind::ProdL, {seq(concat({X, before, {f.left(), f.right()}, after}), C)});
        break;
      case Op::One:
        add(s.ant, RuleKind::OneL, {seq(concat({X, before, after}), C)});
        break;
      case Op::Join:
        add(s.ant, RuleKind::JoinL, {seq(concat({X, before, {f.left()}, after}), C), seq(concat({X, before, {f.right()}, after}), C)});
        break;
      case Op::Meet:
        add(s.ant, RuleKind::MeetL1, {seq(concat({X, before, {f.left()}, after}), C)});
        add(s.ant, RuleKind::MeetL2, {seq(concat({X, before, {f.right()}, after}), C)});
        break;
      case Op::Under:
        for (std::size_t from = 0; from <= i; ++from) {
          Fs pi = slice(G, from, i);
          Fs head = slice(G, 0, from);
          add(concat({X, head, X, pi, {f}, after}), RuleKind::UnderL,
              {seq(concat({X, pi}), f.left()), seq(concat({X, head, {f.right()}, after}), C)});
        }
        break;
      case Op::Over:
        for (std::size_t to = i + 1; to <= G.size(); ++to) {
          Fs pi = slice(G, i + 1, to);
          Fs tail = slice(G, to, G.size());
          add(concat({X, before, {f}, X, pi, tail}), RuleKind::OverL,
              {seq(concat({X, pi}), f.right()), seq(concat({X, before, {f.left()}, tail}), C)});
        }
        break;
      case Op::Star:
        incomplete = true;
        break;
      default:
        break;
    }
  }

  // Uses of a !-formula: copy it, move the copy, derelict it and, for a
  // division, apply the left rule to the body at once.
  for (Formula xi : X) {
    const Formula body = xi.body();
    for (std::size_t p = 0; p <= G.size(); ++p) {
      const Fs tail = slice(G, p, G.size());
      if (!body.is(Op::Under)) {
        Fs ant1 = concat({X, slice(G, 0, p), {xi}, tail});
        Fs ant2 = concat({X, slice(G, 0, p), {body}, tail});
        Sequent raw = seq(ant2, C);
        Macro m;
        m.premises.push_back(Sequent{canonical_antecedent(ant2), C});
        m.build = [s, ant1, raw, canon = m.premises[0]](const std::vector<DerivationPtr>& kids) {
          DerivationPtr below = structural_path(raw.ant, canon.ant, raw.suc, kids[0]);
          DerivationPtr bang_l = make_node(Rule{RuleKind::BangL, 0}, DSequent(Zone{}, ant1, s.suc), {below});
          return structural_path(s.ant, ant1, s.suc, bang_l);
        };
        out.push_back(std::move(m));
        continue;
      }
      for (std::size_t from = 0; from <= p; ++from) {
        const Fs head = slice(G, 0, from);
        const Fs pi = slice(G, from, p);
        Fs ant1 = concat({X, head, X, pi, {xi}, tail});
        Fs ant2 = concat({X, head, X, pi, {body}, tail});
        std::vector<Sequent> raw = {seq(concat({X, pi}), body.left()), seq(concat({X, head, {body.right()}, tail}), C)};
        Macro m;
        for (const auto& r : raw) m.premises.push_back(Sequent{canonical_antecedent(r.ant), r.suc});
        m.build = [s, ant1, ant2, raw, canon = m.premises](const std::vector<DerivationPtr>& kids) {
          std::vector<DerivationPtr> ps;
          for (std::size_t j = 0; j < raw.size(); ++j)
            ps.push_back(structural_path(raw[j].ant, canon[j].ant, raw[j].suc, kids[j]));
          DerivationPtr under_l = make_node(Rule{RuleKind::UnderL, 0}, DSequent(Zone{}, ant2, s.suc), std::move(ps));
          DerivationPtr bang_l = make_node(Rule{RuleKind::BangL, 0}, DSequent(Zone{}, ant1, s.suc), {under_l});
          return structural_path(s.ant, ant1, s.suc, bang_l);
        };
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

// Product and unit steps taking apart the formula at `at` when it is a
// product of variables or 1. Returns the steps' conclusions and the result.
std::pair<std::vector<std::pair<RuleKind, Fs>>, Fs> decompose(Fs ant, std::size_t at) {
  std::vector<std::pair<RuleKind, Fs>> steps;
  std::size_t end = at + 1;
  for (;;) {
    std::size_t j = at;
    while (j < end && !ant[j].is(Op::Prod) && !ant[j].is(Op::One)) ++j;
    if (j == end) break;
    if (ant[j].is(Op::Prod)) {
      Fs next = splice(ant, j, j + 1, {ant[j].left(), ant[j].right()});
      steps.emplace_back(RuleKind::ProdL, ant);
      ant = std::move(next);
      ++end;
    } else {
      Fs next = splice(ant, j, j + 1, {});
      steps.emplace_back(RuleKind::OneL, ant);
      ant = std::move(next);
      --end;
    }
  }
  return {steps, ant};
}

bool is_ne_inequation(const Sequent& h) {
  if (h.ant.empty()) return false;
  for (Formula f : h.ant)
    if (!f.is_var()) return false;
  auto chain = var_chain(h.suc);
  return chain && chain->size() <= h.ant.size();
}

}  // namespace

Verdict prove_flat(const Sequent& s, const SearchOptions& opts) {
  const Sequent start{canonical_antecedent(s.ant), s.suc};
  Generator gen = [](const Sequent& goal, bool& incomplete) {
    if (detail::length_refutes({}, goal.ant, goal.suc)) return std::vector<Macro>{};
    return flat_macros(goal, incomplete);
  };
  MacroEngine engine(gen, opts.node_limit);
  Verdict v = run(engine, start, opts.depth, opts);
  if (v.proof && start.ant != s.ant) v.proof = structural_path(s.ant, start.ant, s.suc, v.proof);
  return v;
}

Verdict prove_from_hypotheses(const Sequent& goal, const std::vector<Sequent>& hypotheses,
                              const SearchOptions& opts) {
  bool finite = std::all_of(hypotheses.begin(), hypotheses.end(), is_ne_inequation);
  finite = finite && !sequent_has_star(DSequent(goal));
  for (const auto& h : hypotheses) finite = finite && !sequent_has_star(DSequent(h));

  Generator gen = [&hypotheses](const Sequent& s, bool& incomplete) {
    std::vector<Macro> out;
    const DSequent ds(s);
    for (const auto& step : backward_logical(ds)) {
      Macro m;
      for (const auto& p : step.premises) m.premises.push_back(p.flat());
      m.build = [ds, rule = step.rule](const std::vector<DerivationPtr>& kids) { return make_node(rule, ds, kids); };
      out.push_back(std::move(m));
    }
    for (Formula f : s.ant)
      if (f.is(Op::Star)) incomplete = true;
    for (const auto& h : hypotheses) {
      if (h == s) {
        Macro m;
        m.build = [ds](const std::vector<DerivationPtr>&) { return make_node(Rule{RuleKind::Hyp, 0}, ds); };
        out.push_back(std::move(m));
      }
      const std::size_t n = h.ant.size();
      for (std::size_t i = 0; i + n <= s.ant.size(); ++i) {
        if (!std::equal(h.ant.begin(), h.ant.end(), s.ant.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        Fs raw = splice(s.ant, i, i + n, {h.suc});
        auto [steps, final_ant] = decompose(raw, i);
        Macro m;
        m.premises.push_back(Sequent{final_ant, s.suc});
        m.build = [ds, h, raw, steps = steps](const std::vector<DerivationPtr>& kids) {
          DerivationPtr node = kids[0];
          for (std::size_t k = steps.size(); k-- > 0;)
            node = make_node(Rule{steps[k].first, 0}, DSequent(Zone{}, steps[k].second, ds.suc), {node});
          DerivationPtr hyp = make_node(Rule{RuleKind::Hyp, 0}, DSequent(h));
          return make_node(Rule{RuleKind::Cut, 0}, ds, {hyp, node});
        };
        out.push_back(std::move(m));
      }
    }
    return out;
  };

  SearchOptions used = opts;
  MacroEngine engine(gen, finite ? std::max<std::size_t>(opts.node_limit, 50'000'000) : opts.node_limit);
  Verdict v = run(engine, goal, finite ? kInf : opts.depth, used);
  return v;
}

}  // namespace ial

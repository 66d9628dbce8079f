#include "ial/rules.hpp"

namespace ial {

namespace {

using Fs = std::vector<Formula>;

Fs slice(const Fs& a, std::size_t from, std::size_t to) {
  return Fs(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

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

}  // namespace

std::vector<BackwardStep> backward_logical(const DSequent& s) {
  std::vector<BackwardStep> out;
  const Fs& ant = s.ant;
  const Formula c = s.suc;
  auto seq = [&](Fs a, Formula suc) { return DSequent(s.zone, std::move(a), suc); };
  auto add = [&](RuleKind k, std::vector<DSequent> ps, unsigned n = 0) {
    out.push_back(BackwardStep{Rule{k, n}, std::move(ps)});
  };

  if (ant.size() == 1 && ant[0] == c && !c.is(Op::Block)) add(RuleKind::Id, {});
  if (ant.empty() && c.is(Op::One)) add(RuleKind::OneR, {});
  for (Formula f : ant)
    if (f.is(Op::Zero)) {
      add(RuleKind::ZeroL, {});
      break;
    }

  switch (c.op()) {
    case Op::Under:
      add(RuleKind::UnderR, {seq(concat({{c.left()}, ant}), c.right())});
      break;
    case Op::Over:
      add(RuleKind::OverR, {seq(concat({ant, {c.right()}}), c.left())});
      break;
    case Op::Join:
      add(RuleKind::JoinR1, {seq(ant, c.left())});
      add(RuleKind::JoinR2, {seq(ant, c.right())});
      break;
    case Op::Meet:
      add(RuleKind::MeetR, {seq(ant, c.left()), seq(ant, c.right())});
      break;
    case Op::Prod:
      for (std::size_t k = 0; k <= ant.size(); ++k)
        add(RuleKind::ProdR, {seq(slice(ant, 0, k), c.left()), seq(slice(ant, k, ant.size()), c.right())});
      break;
    case Op::Star: {
      if (ant.empty()) {
        add(RuleKind::StarR, {}, 0);
        break;
      }
      std::vector<Fs> acc;
      std::vector<std::vector<Fs>> parts;
      compositions(ant, 0, acc, parts);
      for (const auto& blocks : parts) {
        std::vector<DSequent> ps;
        for (const auto& b : blocks) ps.push_back(seq(b, c.body()));
        add(RuleKind::StarR, std::move(ps), static_cast<unsigned>(blocks.size()));
      }
      break;
    }
    default:
      break;
  }

  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Formula f = ant[i];
    switch (f.op()) {
      case Op::Prod:
        add(RuleKind::ProdL, {seq(splice(ant, i, i + 1, {f.left(), f.right()}), c)});
        break;
      case Op::One:
        add(RuleKind::OneL, {seq(splice(ant, i, i + 1, {}), c)});
        break;
      case Op::Join:
        add(RuleKind::JoinL, {seq(splice(ant, i, i + 1, {f.left()}), c), seq(splice(ant, i, i + 1, {f.right()}), c)});
        break;
      case Op::Meet:
        add(RuleKind::MeetL1, {seq(splice(ant, i, i + 1, {f.left()}), c)});
        add(RuleKind::MeetL2, {seq(splice(ant, i, i + 1, {f.right()}), c)});
        break;
      case Op::Under:
        // Gamma, Pi, A\B, Delta with Pi = ant[from, i).
        for (std::size_t from = 0; from <= i; ++from)
          add(RuleKind::UnderL, {seq(slice(ant, from, i), f.left()),
                                 seq(concat({slice(ant, 0, from), {f.right()}, slice(ant, i + 1, ant.size())}), c)});
        break;
      case Op::Over:
        // Gamma, B/A, Pi, Delta with Pi = ant(i, to).
        for (std::size_t to = i + 1; to <= ant.size(); ++to)
          add(RuleKind::OverL, {seq(slice(ant, i + 1, to), f.right()),
                                seq(concat({slice(ant, 0, i), {f.left()}, slice(ant, to, ant.size())}), c)});
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<BackwardStep> backward_finitary(const Sequent& flat, const std::vector<Sequent>& hypotheses) {
  const DSequent s(flat);
  std::vector<BackwardStep> out = backward_logical(s);
  const Fs& ant = s.ant;
  auto add = [&](RuleKind k, Fs a, Formula suc) {
    out.push_back(BackwardStep{Rule{k, 0}, {DSequent(Zone{}, std::move(a), suc)}});
  };

  for (const auto& h : hypotheses)
    if (h == flat) {
      out.push_back(BackwardStep{Rule{RuleKind::Hyp, 0}, {}});
      break;
    }

  if (s.suc.is(Op::Bang)) {
    bool all_bang = true;
    for (Formula f : ant) all_bang = all_bang && f.is(Op::Bang);
    if (all_bang) add(RuleKind::BangR, ant, s.suc.body());
  }

  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Formula f = ant[i];
    if (!f.is(Op::Bang)) continue;
    add(RuleKind::BangL, splice(ant, i, i + 1, {f.body()}), s.suc);
    add(RuleKind::BangW, splice(ant, i, i + 1, {}), s.suc);
    add(RuleKind::BangC, splice(ant, i, i + 1, {f, f}), s.suc);
    Fs rest = splice(ant, i, i + 1, {});
    for (std::size_t j = 0; j <= rest.size(); ++j) {
      if (j == i) continue;
      Fs moved = rest;
      moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(j), f);
      add(j > i ? RuleKind::BangP1 : RuleKind::BangP2, std::move(moved), s.suc);
    }
  }
  return out;
}

}  // namespace ial

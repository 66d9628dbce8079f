#include "ial/basic.hpp"

#include "macro_engine.hpp"

namespace ial {

using namespace detail;

namespace {

using Fs = std::vector<Formula>;

Fs vars_of(const Word& w) {
  Fs out;
  for (const auto& n : w) out.push_back(Formula::var(n));
  return out;
}

bool vars_at(const Fs& ant, const Word& w, std::size_t at) {
  if (at + w.size() > ant.size()) return false;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!ant[at + k].is_var() || ant[at + k].name() != w[k]) return false;
  return true;
}

}  // namespace

bool is_bsc_sequent(const Sequent& s) { return is_basic_rhs(s.suc); }

CheckContext bsc_context(const RewritingSystem& srs) {
  CheckContext ctx;
  ctx.system = System::Bsc;
  ctx.srs = &srs;
  return ctx;
}

std::vector<BackwardStep> backward_bsc(const Sequent& s, const RewritingSystem& srs) {
  std::vector<BackwardStep> out;
  if (!is_bsc_sequent(s)) return out;
  const DSequent ds(s);
  const Fs& ant = s.ant;
  const Formula C = s.suc;
  auto premise = [&](Fs a) { return DSequent(Zone{}, std::move(a), C); };

  if (C.is_var() && ant == Fs{C}) out.push_back({Rule{RuleKind::IdB, 0}, {}});
  if (C.is(Op::Prod) && ant == Fs{C.left(), C.right()}) out.push_back({Rule{RuleKind::ProdRB, 0}, {}});
  if (C.is(Op::Star) && std::all_of(ant.begin(), ant.end(), [&](Formula f) { return f == C.body(); }))
    out.push_back({Rule{RuleKind::StarRB, static_cast<unsigned>(ant.size())}, {}});

  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Formula f = ant[i];
    if (f.is(Op::Prod)) out.push_back({Rule{RuleKind::ProdL, 0}, {premise(splice(ant, i, i + 1, {f.left(), f.right()}))}});
    if (f.is(Op::Under) && f.left().is_var() && i >= 1 && ant[i - 1] == f.left())
      out.push_back({Rule{RuleKind::UnderLB, 0}, {premise(splice(ant, i - 1, i + 1, {f.right()}))}});
    if (f.is(Op::Under) && f.left().is(Op::Star) && f.left().body().is_var()) {
      const Formula r = f.left().body();
      for (std::size_t n = 0; n <= i; ++n) {
        if (n > 0 && ant[i - n] != r) break;
        out.push_back({Rule{RuleKind::UnderStarLB, static_cast<unsigned>(n)}, {premise(splice(ant, i - n, i + 1, {f.right()}))}});
      }
    }
    if (f.is(Op::Meet) && i >= 1 && f.left().is(Op::Under) && f.right().is(Op::Under) && f.left().left().is_var() &&
        f.right().left().is_var()) {
      if (ant[i - 1] == f.left().left())
        out.push_back({Rule{RuleKind::MeetL1B, 0}, {premise(splice(ant, i - 1, i + 1, {f.left().right()}))}});
      if (ant[i - 1] == f.right().left())
        out.push_back({Rule{RuleKind::MeetL2B, 0}, {premise(splice(ant, i - 1, i + 1, {f.right().right()}))}});
    }
  }

  for (const auto& r : srs.rules)
    for (std::size_t i = 0; i + r.lhs.size() <= ant.size(); ++i)
      if (vars_at(ant, r.lhs, i))
        out.push_back({Rule{RuleKind::RewriteB, 0}, {premise(splice(ant, i, i + r.lhs.size(), vars_of(r.rhs)))}});
  return out;
}

Verdict prove_bsc(const Sequent& s, const RewritingSystem& srs, const SearchOptions& opts) {
  const std::size_t star_bound = opts.star_bound;
  Generator gen = [&srs, star_bound](const Sequent& g, bool& incomplete) {
    std::vector<Macro> out;
    const DSequent dg(g);
    for (const auto& step : backward_bsc(g, srs)) {
      Macro m;
      for (const auto& p : step.premises) m.premises.push_back(p.flat());
      m.build = [dg, rule = step.rule](const std::vector<DerivationPtr>& kids) { return make_node(rule, dg, kids); };
      out.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < g.ant.size(); ++i) {
      if (!g.ant[i].is(Op::Star)) continue;
      incomplete = true;
      const OmegaFamily fam = *omega_family(dg, i);
      for (std::size_t n = 0; n <= star_bound; ++n) out.push_back(Macro{{fam.instance(n).flat()}, nullptr});
    }
    return out;
  };
  MacroEngine engine(gen, opts.node_limit);
  return run(engine, s, opts.depth, opts);
}

}  // namespace ial

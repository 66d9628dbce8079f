#include "ial/dyadic.hpp"

namespace ial {

namespace {

std::vector<Formula> vars_of(const std::vector<std::string>& names) {
  std::vector<Formula> out;
  for (const auto& n : names) out.push_back(Formula::var(n));
  return out;
}

bool chain_at(const std::vector<Formula>& ant, const std::vector<Formula>& chain, std::size_t at) {
  if (at + chain.size() > ant.size()) return false;
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (ant[at + k] != chain[k]) return false;
  return true;
}

}  // namespace

DSequent to_dyadic(const Sequent& s) {
  const FragmentClass c = classify_sequent(s);
  if (c != FragmentClass::NE && c != FragmentClass::Monoidal)
    throw FragmentError("sequent is not in the monoidal fragment (" + to_string(c) + "): " + print_sequent(s));
  return DSequent(s);
}

std::vector<BackwardStep> backward_dyadic(const DSequent& ds) {
  std::vector<BackwardStep> out = backward_logical(ds);
  const auto& ant = ds.ant;

  for (std::size_t i = 0; i < ant.size(); ++i) {
    if (!is_monoidal_bang(ant[i])) continue;
    out.push_back(BackwardStep{Rule{RuleKind::BangLd, 0},
                               {DSequent(zone_with(ds.zone, ant[i]), splice(ant, i, i + 1, {}), ds.suc)}});
  }

  if (ant.empty() && ds.suc.is(Op::Bang))
    out.push_back(BackwardStep{Rule{RuleKind::BangRd, 0}, {DSequent(ds.zone, {}, ds.suc.body())}});

  for (Formula f : ds.zone) {
    auto shape = monoidal_shape(f);
    if (!shape) continue;
    const auto from = vars_of(shape->from);
    const auto to = vars_of(shape->to);
    for (std::size_t i = 0; i + from.size() <= ant.size(); ++i) {
      if (!chain_at(ant, from, i)) continue;
      out.push_back(BackwardStep{Rule{RuleKind::Ad, 0},
                                 {DSequent(ds.zone, splice(ant, i, i + from.size(), to), ds.suc)}});
    }
  }
  return out;
}

DSequent weaken_zone(const DSequent& ds, const std::vector<Formula>& extra) {
  for (Formula f : extra)
    if (!is_monoidal_bang(f)) throw FragmentError("zone formula must be a monoidal !-formula: " + print_formula(f));
  return DSequent(zone_union(ds.zone, make_zone(extra)), ds.ant, ds.suc);
}

DSequent absorb(const DSequent& ds, std::size_t position) {
  if (position >= ds.ant.size()) throw std::invalid_argument("position out of range");
  Formula f = ds.ant[position];
  if (!is_monoidal_bang(f)) throw FragmentError("not a monoidal !-formula: " + print_formula(f));
  return DSequent(zone_with(ds.zone, f), splice(ds.ant, position, position + 1, {}), ds.suc);
}

DSequent absorb_all(const DSequent& ds) {
  DSequent out = ds;
  for (std::size_t i = out.ant.size(); i-- > 0;)
    if (is_monoidal_bang(out.ant[i])) out = absorb(out, i);
  return out;
}

}  // namespace ial

#include "ial/rules.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace ial {

namespace {

using Fs = std::vector<Formula>;
using Error = std::optional<std::string>;

struct NameEntry {
  RuleKind kind;
  const char* name;
};

constexpr std::array<NameEntry, 44> kNames{{
    {RuleKind::Id, "Id"},
    {RuleKind::UnderL, "UnderL"},
    {RuleKind::UnderR, "UnderR"},
    {RuleKind::OverL, "OverL"},
    {RuleKind::OverR, "OverR"},
    {RuleKind::ProdL, "ProdL"},
    {RuleKind::ProdR, "ProdR"},
    {RuleKind::OneL, "OneL"},
    {RuleKind::OneR, "OneR"},
    {RuleKind::ZeroL, "ZeroL"},
    {RuleKind::JoinL, "JoinL"},
    {RuleKind::JoinR1, "JoinR1"},
    {RuleKind::JoinR2, "JoinR2"},
    {RuleKind::MeetL1, "MeetL1"},
    {RuleKind::MeetL2, "MeetL2"},
    {RuleKind::MeetR, "MeetR"},
    {RuleKind::StarL, "StarL"},
    {RuleKind::StarR, "StarR"},
    {RuleKind::Cut, "Cut"},
    {RuleKind::BangL, "BangL"},
    {RuleKind::BangR, "BangR"},
    {RuleKind::BangP1, "BangP1"},
    {RuleKind::BangP2, "BangP2"},
    {RuleKind::BangW, "BangW"},
    {RuleKind::BangC, "BangC"},
    {RuleKind::Hyp, "Hyp"},
    {RuleKind::BangLd, "BangLd"},
    {RuleKind::BangRd, "BangRd"},
    {RuleKind::Ad, "Ad"},
    {RuleKind::Wd, "Wd"},
    {RuleKind::BangLdInv, "BangLdInv"},
    {RuleKind::CutD1, "CutD1"},
    {RuleKind::CutD2, "CutD2"},
    {RuleKind::IdB, "IdB"},
    {RuleKind::ProdRB, "ProdRB"},
    {RuleKind::StarRB, "StarRB"},
    {RuleKind::UnderLB, "UnderLB"},
    {RuleKind::UnderStarLB, "UnderStarLB"},
    {RuleKind::MeetL1B, "MeetL1B"},
    {RuleKind::MeetL2B, "MeetL2B"},
    {RuleKind::RewriteB, "RewriteB"},
    {RuleKind::Hole, "Hole"},
    {RuleKind::StarRSplice, "StarRSplice"},
    {RuleKind::Id, nullptr},
}};

Error fail(std::string msg) { return msg; }

Fs remove_at(const Fs& a, std::size_t i) { return splice(a, i, i + 1, {}); }

bool all_vars(const Fs& fs, const std::vector<std::string>& names, std::size_t at) {
  if (at + names.size() > fs.size()) return false;
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!fs[at + k].is_var() || fs[at + k].name() != names[k]) return false;
  return true;
}

Fs vars_of(const std::vector<std::string>& names) {
  Fs out;
  for (const auto& n : names) out.push_back(Formula::var(n));
  return out;
}

// True when some antecedent position i of `c` satisfies `pred(i)`.
template <class Pred>
bool any_position(const DSequent& c, Pred pred) {
  for (std::size_t i = 0; i < c.ant.size(); ++i)
    if (pred(i)) return true;
  return false;
}

bool same_zone(const DSequent& a, const DSequent& b) { return a.zone == b.zone; }

bool has_block(const DSequent& s) {
  if (s.suc.has_block()) return true;
  for (Formula f : s.ant)
    if (f.has_block()) return true;
  for (Formula f : s.zone)
    if (f.has_block()) return true;
  return false;
}

// Blocks may only stand as whole antecedent members.
bool block_placement_ok(const DSequent& s) {
  if (s.suc.has_block()) return false;
  for (Formula f : s.zone)
    if (f.has_block()) return false;
  for (Formula f : s.ant)
    if (f.has_block() && !(f.is(Op::Block) && !f.body().has_block())) return false;
  return true;
}

bool allowed_in(System sys, RuleKind k) {
  auto in = [k](std::initializer_list<RuleKind> ks) {
    return std::find(ks.begin(), ks.end(), k) != ks.end();
  };
  static const std::initializer_list<RuleKind> logical = {
      RuleKind::Id,     RuleKind::UnderL, RuleKind::UnderR, RuleKind::OverL,  RuleKind::OverR,
      RuleKind::ProdL,  RuleKind::ProdR,  RuleKind::OneL,   RuleKind::OneR,   RuleKind::ZeroL,
      RuleKind::JoinL,  RuleKind::JoinR1, RuleKind::JoinR2, RuleKind::MeetL1, RuleKind::MeetL2,
      RuleKind::MeetR,  RuleKind::StarL,  RuleKind::StarR};
  switch (sys) {
    case System::Flat:
      return in(logical) || in({RuleKind::Cut, RuleKind::BangL, RuleKind::BangR, RuleKind::BangP1,
                                RuleKind::BangP2, RuleKind::BangW, RuleKind::BangC, RuleKind::Hyp});
    case System::Dyadic:
      return in(logical) || in({RuleKind::BangLd, RuleKind::BangRd, RuleKind::Ad, RuleKind::Wd,
                                RuleKind::BangLdInv, RuleKind::CutD1, RuleKind::CutD2});
    case System::Bsc:
      return in({RuleKind::IdB, RuleKind::ProdRB, RuleKind::StarRB, RuleKind::UnderLB,
                 RuleKind::UnderStarLB, RuleKind::MeetL1B, RuleKind::MeetL2B, RuleKind::RewriteB,
                 RuleKind::ProdL, RuleKind::StarL});
  }
  return false;
}

std::size_t expected_premises(RuleKind k) {
  switch (k) {
    case RuleKind::Id:
    case RuleKind::OneR:
    case RuleKind::ZeroL:
    case RuleKind::Hyp:
    case RuleKind::IdB:
    case RuleKind::ProdRB:
    case RuleKind::StarRB:
      return 0;
    case RuleKind::UnderL:
    case RuleKind::OverL:
    case RuleKind::ProdR:
    case RuleKind::JoinL:
    case RuleKind::MeetR:
    case RuleKind::Cut:
    case RuleKind::CutD1:
    case RuleKind::CutD2:
      return 2;
    default:
      return 1;
  }
}

Error check_flat_logical(const RuleInstance& ri) {
  const DSequent& c = ri.conclusion;
  const auto& P = ri.premises;
  const RuleKind k = ri.rule.kind;
  for (const auto& p : P)
    if (!same_zone(p, c)) return fail("premise zone differs from conclusion zone");

  switch (k) {
    case RuleKind::Id:
      if (c.ant.size() == 1 && c.ant[0] == c.suc && !c.suc.is(Op::Block)) return std::nullopt;
      return fail("Id needs A => A");
    case RuleKind::OneR:
      if (c.ant.empty() && c.suc.is(Op::One)) return std::nullopt;
      return fail("OneR needs => 1");
    case RuleKind::ZeroL:
      if (any_position(c, [&](std::size_t i) { return c.ant[i].is(Op::Zero); })) return std::nullopt;
      return fail("ZeroL needs 0 in the antecedent");
    case RuleKind::UnderR: {
      const auto& p = P[0];
      if (c.suc.is(Op::Under) && p.suc == c.suc.right() && p.ant == concat({{c.suc.left()}, c.ant}))
        return std::nullopt;
      return fail("UnderR shape mismatch");
    }
    case RuleKind::OverR: {
      const auto& p = P[0];
      if (c.suc.is(Op::Over) && p.suc == c.suc.left() && p.ant == concat({c.ant, {c.suc.right()}}))
        return std::nullopt;
      return fail("OverR shape mismatch");
    }
    case RuleKind::ProdL: {
      const auto& p = P[0];
      if (p.suc == c.suc && any_position(c, [&](std::size_t i) {
            return c.ant[i].is(Op::Prod) &&
                   p.ant == splice(c.ant, i, i + 1, {c.ant[i].left(), c.ant[i].right()});
          }))
        return std::nullopt;
      return fail("ProdL shape mismatch");
    }
    case RuleKind::OneL: {
      const auto& p = P[0];
      if (p.suc == c.suc &&
          any_position(c, [&](std::size_t i) { return c.ant[i].is(Op::One) && p.ant == remove_at(c.ant, i); }))
        return std::nullopt;
      return fail("OneL shape mismatch");
    }
    case RuleKind::JoinL: {
      if (P[0].suc == c.suc && P[1].suc == c.suc && any_position(c, [&](std::size_t i) {
            return c.ant[i].is(Op::Join) && P[0].ant == splice(c.ant, i, i + 1, {c.ant[i].left()}) &&
                   P[1].ant == splice(c.ant, i, i + 1, {c.ant[i].right()});
          }))
        return std::nullopt;
      return fail("JoinL shape mismatch");
    }
    case RuleKind::MeetL1:
    case RuleKind::MeetL2: {
      const auto& p = P[0];
      const bool first = k == RuleKind::MeetL1;
      if (p.suc == c.suc && any_position(c, [&](std::size_t i) {
            return c.ant[i].is(Op::Meet) &&
                   p.ant == splice(c.ant, i, i + 1, {first ? c.ant[i].left() : c.ant[i].right()});
          }))
        return std::nullopt;
      return fail("MeetL shape mismatch");
    }
    case RuleKind::JoinR1:
    case RuleKind::JoinR2: {
      const auto& p = P[0];
      const bool first = k == RuleKind::JoinR1;
      if (c.suc.is(Op::Join) && p.ant == c.ant && p.suc == (first ? c.suc.left() : c.suc.right()))
        return std::nullopt;
      return fail("JoinR shape mismatch");
    }
    case RuleKind::MeetR:
      if (c.suc.is(Op::Meet) && P[0].ant == c.ant && P[1].ant == c.ant && P[0].suc == c.suc.left() &&
          P[1].suc == c.suc.right())
        return std::nullopt;
      return fail("MeetR shape mismatch");
    case RuleKind::ProdR:
      if (c.suc.is(Op::Prod) && P[0].suc == c.suc.left() && P[1].suc == c.suc.right() &&
          c.ant == concat({P[0].ant, P[1].ant}))
        return std::nullopt;
      return fail("ProdR shape mismatch");
    case RuleKind::UnderL:
    case RuleKind::OverL: {
      const DSequent& minor = P[0];  // Pi => A
      const DSequent& major = P[1];  // Gamma, B, Delta => C
      if (major.suc != c.suc) return fail("succedent mismatch");
      for (std::size_t i = 0; i < major.ant.size(); ++i) {
        Formula b = major.ant[i];
        Fs gamma(major.ant.begin(), major.ant.begin() + static_cast<std::ptrdiff_t>(i));
        Fs delta(major.ant.begin() + static_cast<std::ptrdiff_t>(i + 1), major.ant.end());
        Fs expect = k == RuleKind::UnderL
                        ? concat({gamma, minor.ant, {Formula::under(minor.suc, b)}, delta})
                        : concat({gamma, {Formula::over(b, minor.suc)}, minor.ant, delta});
        if (expect == c.ant) return std::nullopt;
      }
      return fail(k == RuleKind::UnderL ? "UnderL shape mismatch" : "OverL shape mismatch");
    }
    case RuleKind::StarR: {
      if (!c.suc.is(Op::Star)) return fail("StarR needs a star succedent");
      if (ri.rule.n != P.size()) return fail("StarR arity differs from its parameter");
      Fs all;
      for (const auto& p : P) {
        if (p.suc != c.suc.body()) return fail("StarR premise succedent mismatch");
        all.insert(all.end(), p.ant.begin(), p.ant.end());
      }
      if (all == c.ant) return std::nullopt;
      return fail("StarR antecedent is not the concatenation of the premises");
    }
    case RuleKind::StarL: {
      if (P.empty()) return fail("StarL needs at least one instance");
      for (std::size_t pos = 0; pos < c.ant.size(); ++pos) {
        auto fam = omega_family(c, pos);
        if (!fam) continue;
        bool ok = true;
        for (std::size_t n = 0; n < P.size() && ok; ++n) ok = P[n] == fam->instance(n);
        if (ok) return std::nullopt;
      }
      return fail("StarL instances do not match any star of the antecedent");
    }
    default:
      return fail("not a logical rule");
  }
}

Error check_cut(const RuleInstance& ri) {
  const DSequent& c = ri.conclusion;
  const DSequent& left = ri.premises[0];   // Pi => A
  const DSequent& right = ri.premises[1];  // Gamma, A, Delta => C
  if (!same_zone(left, c) || !same_zone(right, c)) return fail("cut zones differ");
  if (right.suc != c.suc) return fail("cut succedent mismatch");
  for (std::size_t i = 0; i < right.ant.size(); ++i) {
    if (right.ant[i] != left.suc) continue;
    if (splice(right.ant, i, i + 1, left.ant) == c.ant) return std::nullopt;
  }
  return fail("cut shape mismatch");
}

Error check_flat_bang(const RuleInstance& ri, const CheckContext& ctx) {
  const DSequent& c = ri.conclusion;
  const RuleKind k = ri.rule.kind;
  if (k == RuleKind::Hyp) {
    for (const auto& h : ctx.hypotheses)
      if (c.ant == h.ant && c.suc == h.suc) return std::nullopt;
    return fail("not a hypothesis");
  }
  const DSequent& p = ri.premises[0];
  if (p.suc != c.suc && k != RuleKind::BangR) return fail("succedent mismatch");
  switch (k) {
    case RuleKind::BangL:
      if (any_position(c, [&](std::size_t i) {
            return c.ant[i].is(Op::Bang) && p.ant == splice(c.ant, i, i + 1, {c.ant[i].body()});
          }))
        return std::nullopt;
      return fail("BangL shape mismatch");
    case RuleKind::BangR: {
      if (!c.suc.is(Op::Bang) || p.suc != c.suc.body() || p.ant != c.ant) return fail("BangR shape mismatch");
      for (Formula f : c.ant)
        if (!f.is(Op::Bang)) return fail("BangR needs an all-! antecedent");
      return std::nullopt;
    }
    case RuleKind::BangP1:
    case RuleKind::BangP2: {
      if (p.ant.size() != c.ant.size()) return fail("permutation changes length");
      // BangP1 moves a conclusion !-formula right in the premise, BangP2 left.
      for (std::size_t i = 0; i < c.ant.size(); ++i) {
        if (!c.ant[i].is(Op::Bang)) continue;
        Fs rest = remove_at(c.ant, i);
        for (std::size_t j = 0; j <= rest.size(); ++j) {
          if (k == RuleKind::BangP1 ? j < i : j > i) continue;
          Fs moved = rest;
          moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(j), c.ant[i]);
          if (moved == p.ant) return std::nullopt;
        }
      }
      return fail("permutation shape mismatch");
    }
    case RuleKind::BangW:
      if (any_position(c, [&](std::size_t i) { return c.ant[i].is(Op::Bang) && p.ant == remove_at(c.ant, i); }))
        return std::nullopt;
      return fail("BangW shape mismatch");
    case RuleKind::BangC:
      if (any_position(c, [&](std::size_t i) {
            return c.ant[i].is(Op::Bang) && p.ant == splice(c.ant, i, i + 1, {c.ant[i], c.ant[i]});
          }))
        return std::nullopt;
      return fail("BangC shape mismatch");
    default:
      return fail("not a !-rule");
  }
}

Error check_dyadic(const RuleInstance& ri) {
  const DSequent& c = ri.conclusion;
  const auto& P = ri.premises;
  switch (ri.rule.kind) {
    case RuleKind::BangLd: {
      const auto& p = P[0];
      if (p.suc == c.suc && any_position(c, [&](std::size_t i) {
            return is_monoidal_bang(c.ant[i]) && p.zone == zone_with(c.zone, c.ant[i]) &&
                   p.ant == remove_at(c.ant, i);
          }))
        return std::nullopt;
      return fail("BangLd shape mismatch");
    }
    case RuleKind::BangRd: {
      const auto& p = P[0];
      if (c.ant.empty() && p.ant.empty() && c.suc.is(Op::Bang) && p.suc == c.suc.body() && same_zone(p, c))
        return std::nullopt;
      return fail("BangRd shape mismatch");
    }
    case RuleKind::Ad: {
      const auto& p = P[0];
      if (p.suc != c.suc) return fail("succedent mismatch");
      for (Formula f : c.zone) {
        auto shape = monoidal_shape(f);
        if (!shape || zone_with(p.zone, f) != c.zone) continue;
        const Fs cs = vars_of(shape->to);
        for (std::size_t i = 0; i + shape->from.size() <= c.ant.size(); ++i) {
          if (!all_vars(c.ant, shape->from, i)) continue;
          if (splice(c.ant, i, i + shape->from.size(), cs) == p.ant) return std::nullopt;
        }
      }
      return fail("Ad shape mismatch");
    }
    case RuleKind::Wd: {
      const auto& p = P[0];
      if (p.ant == c.ant && p.suc == c.suc && zone_subset(p.zone, c.zone)) return std::nullopt;
      return fail("Wd shape mismatch");
    }
    case RuleKind::BangLdInv: {
      const auto& p = P[0];
      if (p.suc != c.suc) return fail("succedent mismatch");
      for (std::size_t i = 0; i < p.ant.size(); ++i) {
        if (!is_monoidal_bang(p.ant[i])) continue;
        if (c.ant == remove_at(p.ant, i) && c.zone == zone_with(p.zone, p.ant[i])) return std::nullopt;
      }
      return fail("BangLdInv shape mismatch");
    }
    case RuleKind::CutD1:
      return check_cut(ri);
    case RuleKind::CutD2: {
      const DSequent& left = P[0];
      const DSequent& right = P[1];
      Formula banged = Formula::bang(left.suc);
      if (left.ant.empty() && same_zone(left, c) && is_monoidal_bang(banged) &&
          right.zone == zone_with(c.zone, banged) && right.ant == c.ant && right.suc == c.suc)
        return std::nullopt;
      return fail("CutD2 shape mismatch");
    }
    default:
      return check_flat_logical(ri);
  }
}

Error check_bsc(const RuleInstance& ri, const CheckContext& ctx) {
  const DSequent& c = ri.conclusion;
  const auto& P = ri.premises;
  if (!is_basic_rhs(c.suc)) return fail("succedent is not a basic right-hand side");
  for (const auto& p : P)
    if (p.suc != c.suc) return fail("basic rules keep the succedent");
  switch (ri.rule.kind) {
    case RuleKind::IdB:
      if (c.suc.is_var() && c.ant == Fs{c.suc}) return std::nullopt;
      return fail("IdB needs r => r");
    case RuleKind::ProdRB:
      if (c.suc.is(Op::Prod) && c.suc.left().is_var() && c.suc.right().is_var() &&
          c.ant == Fs{c.suc.left(), c.suc.right()})
        return std::nullopt;
      return fail("ProdRB needs r1, r2 => r1.r2");
    case RuleKind::StarRB:
      if (c.suc.is(Op::Star) && c.suc.body().is_var() && c.ant == Fs(ri.rule.n, c.suc.body()))
        return std::nullopt;
      return fail("StarRB needs r^n => r^*");
    case RuleKind::UnderLB: {
      const auto& p = P[0];
      if (any_position(c, [&](std::size_t i) {
            Formula f = c.ant[i];
            return i >= 1 && f.is(Op::Under) && f.left().is_var() && c.ant[i - 1] == f.left() &&
                   p.ant == splice(c.ant, i - 1, i + 1, {f.right()});
          }))
        return std::nullopt;
      return fail("UnderLB shape mismatch");
    }
    case RuleKind::UnderStarLB: {
      const auto& p = P[0];
      const std::size_t n = ri.rule.n;
      if (any_position(c, [&](std::size_t i) {
            Formula f = c.ant[i];
            if (i < n || !f.is(Op::Under) || !f.left().is(Op::Star) || !f.left().body().is_var()) return false;
            for (std::size_t j = i - n; j < i; ++j)
              if (c.ant[j] != f.left().body()) return false;
            return p.ant == splice(c.ant, i - n, i + 1, {f.right()});
          }))
        return std::nullopt;
      return fail("UnderStarLB shape mismatch");
    }
    case RuleKind::MeetL1B:
    case RuleKind::MeetL2B: {
      const auto& p = P[0];
      const bool first = ri.rule.kind == RuleKind::MeetL1B;
      if (any_position(c, [&](std::size_t i) {
            Formula f = c.ant[i];
            if (i < 1 || !f.is(Op::Meet)) return false;
            Formula side = first ? f.left() : f.right();
            if (!f.left().is(Op::Under) || !f.right().is(Op::Under)) return false;
            if (!f.left().left().is_var() || !f.right().left().is_var()) return false;
            return c.ant[i - 1] == side.left() && p.ant == splice(c.ant, i - 1, i + 1, {side.right()});
          }))
        return std::nullopt;
      return fail("MeetLB shape mismatch");
    }
    case RuleKind::RewriteB: {
      if (!ctx.srs) return fail("RewriteB without a rewriting system");
      const auto& p = P[0];
      for (const auto& r : ctx.srs->rules) {
        for (std::size_t i = 0; i + r.lhs.size() <= c.ant.size(); ++i) {
          if (!all_vars(c.ant, r.lhs, i)) continue;
          if (splice(c.ant, i, i + r.lhs.size(), vars_of(r.rhs)) == p.ant) return std::nullopt;
        }
      }
      return fail("RewriteB matches no rewriting rule");
    }
    case RuleKind::ProdL:
    case RuleKind::StarL:
      return check_flat_logical(ri);
    default:
      return fail("not a basic rule");
  }
}

}  // namespace

std::string rule_name(Rule r) {
  for (const auto& e : kNames) {
    if (e.name && e.kind == r.kind) {
      std::string out = e.name;
      if (rule_has_param(r.kind)) out += ":" + std::to_string(r.n);
      return out;
    }
  }
  return "?";
}

bool rule_has_param(RuleKind k) {
  return k == RuleKind::StarR || k == RuleKind::StarRB || k == RuleKind::UnderStarLB ||
         k == RuleKind::StarRSplice;
}

std::optional<Rule> parse_rule(std::string_view name) {
  std::string_view base = name;
  std::optional<unsigned> param;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    unsigned v = 0;
    auto tail = name.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (ec != std::errc() || ptr != tail.data() + tail.size()) return std::nullopt;
    param = v;
  }
  for (const auto& e : kNames) {
    if (!e.name || base != e.name) continue;
    if (rule_has_param(e.kind) != param.has_value()) return std::nullopt;
    return Rule{e.kind, param.value_or(0)};
  }
  return std::nullopt;
}

std::string to_string(System s) {
  switch (s) {
    case System::Flat: return "flat";
    case System::Dyadic: return "dyadic";
    case System::Bsc: return "bsc";
  }
  return "?";
}

bool is_basic_rhs(Formula f) {
  if (f.is_var()) return true;
  if (f.is(Op::Prod)) return f.left().is_var() && f.right().is_var();
  if (f.is(Op::Star)) return f.body().is_var();
  return false;
}

std::optional<std::string> instance_error(const RuleInstance& ri, const CheckContext& ctx) {
  const RuleKind k = ri.rule.kind;
  if (!allowed_in(ctx.system, k)) return "rule " + rule_name(ri.rule) + " is not part of the " + to_string(ctx.system) + " system";
  if (k == RuleKind::StarL) {
    if (ri.premises.empty()) return std::string("StarL needs at least one instance");
  } else if (k == RuleKind::StarR) {
    if (ri.premises.size() != ri.rule.n) return std::string("StarR arity differs from its parameter");
  } else if (ri.premises.size() != expected_premises(k)) {
    return rule_name(ri.rule) + " expects " + std::to_string(expected_premises(k)) + " premise(s)";
  }
  if (!ctx.allow_block) {
    if (has_block(ri.conclusion)) return std::string("block marker outside a schema context");
    for (const auto& p : ri.premises)
      if (has_block(p)) return std::string("block marker outside a schema context");
  } else {
    if (!block_placement_ok(ri.conclusion)) return std::string("misplaced block marker");
    for (const auto& p : ri.premises)
      if (!block_placement_ok(p)) return std::string("misplaced block marker");
  }
  if (ctx.system != System::Dyadic) {
    if (!ri.conclusion.zone.empty()) return std::string("nonempty zone outside the dyadic system");
    for (const auto& p : ri.premises)
      if (!p.zone.empty()) return std::string("nonempty zone outside the dyadic system");
  } else {
    for (Formula f : ri.conclusion.zone)
      if (!is_monoidal_bang(f)) return "zone formula of the wrong shape: " + print_formula(f);
  }
  if ((k == RuleKind::Cut || k == RuleKind::CutD1 || k == RuleKind::CutD2) && !ctx.allow_cut)
    return std::string("cut is not allowed");

  switch (ctx.system) {
    case System::Flat:
      if (k == RuleKind::Cut) return check_cut(ri);
      if (k >= RuleKind::BangL && k <= RuleKind::Hyp) return check_flat_bang(ri, ctx);
      return check_flat_logical(ri);
    case System::Dyadic:
      return check_dyadic(ri);
    case System::Bsc:
      return check_bsc(ri, ctx);
  }
  return std::string("unknown system");
}

DSequent OmegaFamily::conclusion() const {
  return DSequent(zone, concat({left, {Formula::star(body)}, right}), suc);
}

DSequent OmegaFamily::instance(std::size_t n) const {
  return DSequent(zone, concat({left, Fs(n, body), right}), suc);
}

DSequent OmegaFamily::parametric() const {
  return DSequent(zone, concat({left, {Formula::block(body)}, right}), suc);
}

DSequent OmegaFamily::parametric_next(bool peel_left) const {
  Fs mid = peel_left ? Fs{body, Formula::block(body)} : Fs{Formula::block(body), body};
  return DSequent(zone, concat({left, mid, right}), suc);
}

std::optional<OmegaFamily> omega_family(const DSequent& s, std::size_t position) {
  if (position >= s.ant.size() || !s.ant[position].is(Op::Star)) return std::nullopt;
  OmegaFamily f;
  f.zone = s.zone;
  f.left.assign(s.ant.begin(), s.ant.begin() + static_cast<std::ptrdiff_t>(position));
  f.body = s.ant[position].body();
  f.right.assign(s.ant.begin() + static_cast<std::ptrdiff_t>(position + 1), s.ant.end());
  f.suc = s.suc;
  return f;
}

std::function<DSequent(std::size_t)> omega_premises(const DSequent& s, std::size_t position) {
  auto fam = omega_family(s, position);
  if (!fam) throw std::invalid_argument("position " + std::to_string(position) + " does not hold a star formula");
  return [f = *fam](std::size_t n) { return f.instance(n); };
}

std::vector<DSequent> invert(const DSequent& s, std::size_t position, std::size_t star_instances) {
  if (position >= s.ant.size()) throw std::invalid_argument("position out of range");
  Formula f = s.ant[position];
  auto with = [&](Fs middle) { return DSequent(s.zone, splice(s.ant, position, position + 1, middle), s.suc); };
  switch (f.op()) {
    case Op::Join:
      return {with({f.left()}), with({f.right()})};
    case Op::Prod:
      return {with({f.left(), f.right()})};
    case Op::Star: {
      std::vector<DSequent> out;
      for (std::size_t n = 0; n <= star_instances; ++n) out.push_back(with(Fs(n, f.body())));
      return out;
    }
    default:
      throw std::invalid_argument("formula at position " + std::to_string(position) + " is not invertible: " +
                                  print_formula(f));
  }
}

std::vector<Formula> splice(const std::vector<Formula>& a, std::size_t from, std::size_t to,
                            const std::vector<Formula>& middle) {
  Fs out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(to), a.end());
  return out;
}

std::vector<Formula> concat(std::initializer_list<std::vector<Formula>> parts) {
  Fs out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace ial

#include "length_bound.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace ial::detail {

namespace {

using Weights = std::map<std::string, std::size_t>;

// Least and largest weight over the ways of taking joins apart.
struct Span {
  std::size_t least, most;
};

std::optional<Span> span(Formula f, const Weights& w) {
  switch (f.op()) {
    case Op::Var: {
      const std::size_t x = w.at(f.name());
      return Span{x, x};
    }
    case Op::One: return Span{0, 0};
    case Op::Prod:
    case Op::Join: {
      const auto l = span(f.left(), w), r = span(f.right(), w);
      if (!l || !r) return std::nullopt;
      if (f.is(Op::Prod)) return Span{l->least + r->least, l->most + r->most};
      return Span{std::min(l->least, r->least), std::max(l->most, r->most)};
    }
    default: return std::nullopt;
  }
}

void collect(Formula f, Weights& w) {
  if (f.is_var()) w.emplace(f.name(), 0);
  else if (f.is(Op::Prod) || f.is(Op::Join)) {
    collect(f.left(), w);
    collect(f.right(), w);
  }
}

std::size_t weigh(const std::vector<std::string>& chain, const Weights& w) {
  std::size_t total = 0;
  for (const auto& x : chain) total += w.at(x);
  return total;
}

constexpr std::size_t kMaxWeight = 3;
constexpr std::size_t kMaxWeightings = 4096;

}  // namespace

bool length_refutes(const std::vector<Formula>& bangs, const std::vector<Formula>& ant, Formula suc) {
  std::vector<MonoidalShape> rewrites;
  Weights w;
  auto add_bang = [&](Formula f) {
    auto shape = monoidal_shape(f);
    if (!shape) return false;
    for (const auto& x : shape->from) w.emplace(x, 0);
    for (const auto& x : shape->to) w.emplace(x, 0);
    rewrites.push_back(std::move(*shape));
    return true;
  };
  for (Formula f : bangs)
    if (!add_bang(f)) return false;
  std::vector<Formula> plain;
  for (Formula f : ant) {
    if (f.is(Op::Bang)) {
      if (!add_bang(f)) return false;
    } else {
      plain.push_back(f);
    }
  }
  for (Formula f : plain) collect(f, w);
  collect(suc, w);
  if (!span(suc, w)) return false;
  for (Formula f : plain)
    if (!span(f, w)) return false;

  // Every weighting in {0..kMaxWeight}^vars, skipped when too many.
  std::size_t count = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    count *= kMaxWeight + 1;
    if (count > kMaxWeightings) return false;
  }
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t rest = code;
    for (auto& [name, weight] : w) {
      weight = rest % (kMaxWeight + 1);
      rest /= kMaxWeight + 1;
    }
    const bool admissible = std::all_of(rewrites.begin(), rewrites.end(),
                                        [&](const MonoidalShape& r) { return weigh(r.to, w) >= weigh(r.from, w); });
    if (!admissible) continue;
    std::size_t least = 0;
    for (Formula f : plain) least += span(f, w)->least;
    if (least > span(suc, w)->most) return true;
  }
  return false;
}

}  // namespace ial::detail

#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

#include "ial/coding.hpp"

namespace oracle {

using ial::DSequent;
using ial::Formula;
using ial::Op;
using Fs = std::vector<Formula>;

namespace {

Fs cut_out(const Fs& a, std::size_t from, std::size_t to, const Fs& middle) {
  Fs out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(to), a.end());
  return out;
}

Fs slice(const Fs& a, std::size_t from, std::size_t to) {
  return Fs(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

void flatten_product(Formula f, Fs& out) {
  if (f.is(Op::One)) return;
  if (f.is(Op::Prod)) {
    flatten_product(f.left(), out);
    flatten_product(f.right(), out);
    return;
  }
  out.push_back(f);
}

}  // namespace

std::vector<std::vector<DSequent>> NeFixpoint::instances(const DSequent& s) {
  std::vector<std::vector<DSequent>> out;
  const auto& z = s.zone;
  const Fs& g = s.ant;
  const Formula c = s.suc;
  auto seq = [&](Fs ant, Formula suc) { return DSequent(z, std::move(ant), suc); };

  if (g.size() == 1 && g[0] == c) out.push_back({});
  if (g.empty() && c.is(Op::One)) out.push_back({});
  for (Formula f : g)
    if (f.is(Op::Zero)) {
      out.push_back({});
      break;
    }

  switch (c.op()) {
    case Op::Under: {
      Fs ant{c.left()};
      ant.insert(ant.end(), g.begin(), g.end());
      out.push_back({seq(ant, c.right())});
      break;
    }
    case Op::Over: {
      Fs ant = g;
      ant.push_back(c.right());
      out.push_back({seq(ant, c.left())});
      break;
    }
    case Op::Prod:
      for (std::size_t k = 0; k <= g.size(); ++k)
        out.push_back({seq(slice(g, 0, k), c.left()), seq(slice(g, k, g.size()), c.right())});
      break;
    case Op::Join:
      out.push_back({seq(g, c.left())});
      out.push_back({seq(g, c.right())});
      break;
    case Op::Meet:
      out.push_back({seq(g, c.left()), seq(g, c.right())});
      break;
    case Op::Bang:
      if (g.empty()) out.push_back({seq({}, c.body())});
      break;
    default:
      break;
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    const Formula f = g[i];
    switch (f.op()) {
      case Op::Under:
        for (std::size_t j = 0; j <= i; ++j)
          out.push_back({seq(slice(g, j, i), f.left()), seq(cut_out(g, j, i + 1, {f.right()}), c)});
        break;
      case Op::Over:
        for (std::size_t j = i + 1; j <= g.size(); ++j)
          out.push_back({seq(slice(g, i + 1, j), f.right()), seq(cut_out(g, i, j, {f.left()}), c)});
        break;
      case Op::Prod:
        out.push_back({seq(cut_out(g, i, i + 1, {f.left(), f.right()}), c)});
        break;
      case Op::One:
        out.push_back({seq(cut_out(g, i, i + 1, {}), c)});
        break;
      case Op::Join:
        out.push_back({seq(cut_out(g, i, i + 1, {f.left()}), c), seq(cut_out(g, i, i + 1, {f.right()}), c)});
        break;
      case Op::Meet:
        out.push_back({seq(cut_out(g, i, i + 1, {f.left()}), c)});
        out.push_back({seq(cut_out(g, i, i + 1, {f.right()}), c)});
        break;
      case Op::Bang: {
        ial::Zone wider = z;
        wider.push_back(f);
        out.push_back({DSequent(wider, cut_out(g, i, i + 1, {}), c)});
        break;
      }
      default:
        break;
    }
  }

  for (Formula h : z) {
    Fs from, to;
    flatten_product(h.body().left(), from);
    flatten_product(h.body().right(), to);
    if (from.empty()) continue;
    for (std::size_t i = 0; i + from.size() <= g.size(); ++i)
      if (std::equal(from.begin(), from.end(), g.begin() + static_cast<std::ptrdiff_t>(i)))
        out.push_back({seq(cut_out(g, i, i + from.size(), to), c)});
  }
  return out;
}

std::size_t NeFixpoint::intern(const DSequent& s) {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{s, {}, false});
  index_.emplace(s, id);
  pending_.push_back(id);
  return id;
}

void NeFixpoint::add_goal(const DSequent& s) { intern(s); }

void NeFixpoint::solve() {
  while (!pending_.empty()) {
    const std::size_t id = pending_.back();
    pending_.pop_back();
    std::vector<std::vector<std::size_t>> alts;
    for (const auto& inst : instances(nodes_[id].seq)) {
      std::vector<std::size_t> ids;
      for (const auto& p : inst) ids.push_back(intern(p));
      alts.push_back(std::move(ids));
    }
    nodes_[id].alternatives = std::move(alts);
  }

  // Counter-based least fixpoint: an alternative fires when all of its
  // premises are derived.
  struct Watch {
    std::size_t node, alt;
  };
  std::vector<std::vector<Watch>> watchers(nodes_.size());
  std::vector<std::vector<std::size_t>> missing(nodes_.size());
  std::deque<std::size_t> queue;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    nodes_[n].derived = false;
    const auto& alts = nodes_[n].alternatives;
    missing[n].resize(alts.size());
    for (std::size_t a = 0; a < alts.size(); ++a) {
      std::vector<std::size_t> uniq = alts[a];
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      missing[n][a] = uniq.size();
      for (std::size_t p : uniq) watchers[p].push_back({n, a});
      if (uniq.empty() && !nodes_[n].derived) {
        nodes_[n].derived = true;
        queue.push_back(n);
      }
    }
  }
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& w : watchers[p]) {
      if (--missing[w.node][w.alt] == 0 && !nodes_[w.node].derived) {
        nodes_[w.node].derived = true;
        queue.push_back(w.node);
      }
    }
  }
}

bool NeFixpoint::derivable(const DSequent& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw std::logic_error("sequent outside the oracle space");
  return nodes_[it->second].derived;
}

namespace {

// "w^2*3 + w*1 + 4" -> {2: 3, 1: 1, 0: 4}
std::map<std::uint64_t, std::uint64_t> cantor_terms(const std::string& text) {
  std::map<std::uint64_t, std::uint64_t> terms;
  if (text == "0") return terms;
  std::size_t pos = 0;
  auto number = [&]() {
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return v;
  };
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '+')) ++pos;
    if (pos >= text.size()) break;
    std::uint64_t exponent = 0, coeff = 1;
    if (text[pos] == 'w') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exponent = number();
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        coeff = number();
      }
    } else {
      coeff = number();
    }
    terms[exponent] += coeff;
  }
  return terms;
}

}  // namespace

int compare_cantor_strings(const std::string& a, const std::string& b) {
  auto ta = cantor_terms(a), tb = cantor_terms(b);
  auto ia = ta.rbegin(), ib = tb.rbegin();
  for (; ia != ta.rend() && ib != tb.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
  }
  if (ia != ta.rend()) return 1;
  if (ib != tb.rend()) return -1;
  return 0;
}

std::pair<std::uint64_t, std::uint64_t> unpair_slow(std::uint64_t n) {
  std::uint64_t start = 0, d = 0;
  while (start + d + 1 <= n) {
    start += d + 1;
    ++d;
  }
  const std::uint64_t b = n - start;
  return {d - b, b};
}

std::vector<std::uint64_t> prime_exponents(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("zero has no factorization");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; n > 1; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back(e);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

namespace {

struct RawIndex {
  std::uint64_t eps, alpha_code, e;
};

RawIndex split(std::uint64_t x) {
  auto [i, rest] = unpair_slow(x);
  auto [j, k] = unpair_slow(rest);
  return {i, j, k};
}

bool is_index(const RawIndex& r) { return r.eps <= 1 && r.alpha_code >= 1; }

// Ordinal comparison on prime codes: compare exponent vectors from the top.
int compare_codes(std::uint64_t a, std::uint64_t b) {
  auto ea = prime_exponents(a), eb = prime_exponents(b);
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  for (std::size_t i = ea.size(); i-- > 0;)
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
  return 0;
}

ial::Word repeat(const std::string& sym, std::uint64_t n) { return ial::Word(n, sym); }

}  // namespace

std::optional<ial::Word> f0_reference(std::uint64_t x) {
  const RawIndex r = split(x);
  if (!is_index(r)) return std::nullopt;
  if (r.alpha_code == 1) {
    if (r.e == 0) return std::nullopt;
    return ial::Word{"p1"};
  }
  ial::Word w = repeat("p1", x);
  w.push_back("p2");
  return w;
}

ial::Word f1_reference(const ial::Word& w) {
  const ial::Word fallback{"p1"};
  std::uint64_t x1 = 0, x2 = 0;
  std::size_t i = 0;
  while (i < w.size() && w[i] == "p1") ++x1, ++i;
  while (i < w.size() && w[i] == "p2") ++x2, ++i;
  if (i != w.size()) return fallback;
  const RawIndex outer = split(x1);
  if (!is_index(outer) || outer.alpha_code == 1) return fallback;
  auto [k, t] = unpair_slow(x2);
  const RawIndex inner = split(k);
  if (!is_index(inner) || inner.eps != 1 - outer.eps) return fallback;
  if (compare_codes(inner.alpha_code, outer.alpha_code) >= 0) return fallback;
  if (!ial::universal_converges(outer.e, k, t)) return fallback;
  ial::Word out = repeat("p1", k);
  out.push_back("p2");
  return out;
}

}  // namespace oracle

#include "ial/coding.hpp"

#include <cmath>
#include <string>

namespace ial {

namespace {

using u128 = unsigned __int128;
constexpr u128 kMax64 = static_cast<u128>(~std::uint64_t{0});

std::uint64_t checked(u128 v) {
  if (v > kMax64) throw std::overflow_error("pairing result exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

Word unary(std::uint64_t n, const char* letter) { return Word(static_cast<std::size_t>(n), letter); }

}  // namespace

std::uint64_t pair(std::uint64_t a, std::uint64_t b) {
  const u128 s = static_cast<u128>(a) + b;
  // Past 2^33 the triangle number alone exceeds 64 bits.
  if (s >> 33) throw std::overflow_error("pairing overflows 64 bits");
  return checked(s * (s + 1) / 2 + b);
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n) {
  // Largest w with w(w+1)/2 <= n.
  u128 w = static_cast<u128>(std::sqrt(2.0 * static_cast<double>(n)));
  while (w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  const auto b = static_cast<std::uint64_t>(n - w * (w + 1) / 2);
  return {static_cast<std::uint64_t>(w) - b, b};
}

std::uint64_t triple(std::uint64_t i, std::uint64_t j, std::uint64_t k) { return pair(i, pair(j, k)); }

Triple untriple(std::uint64_t n) {
  auto [i, rest] = unpair(n);
  auto [j, k] = unpair(rest);
  return {i, j, k};
}

std::optional<std::uint64_t> encode_index(const Index& x) {
  if (x.epsilon > 1) return std::nullopt;
  auto code = rho(x.alpha);
  if (!code) return std::nullopt;
  try {
    return triple(x.epsilon, *code, x.e);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

std::optional<Index> decode_index(std::uint64_t code) {
  const Triple t = untriple(code);
  if (t.i > 1 || t.j == 0) return std::nullopt;
  return Index{static_cast<unsigned>(t.i), rho_inv(t.j), t.k};
}

TuringMachine machine_from_number(std::uint64_t e) {
  const std::uint64_t s = e % 4 + 1;
  const std::uint64_t base = 6 * (s + 1);
  std::uint64_t digits = e / 4;
  TuringMachine m;
  for (std::uint64_t q = 0; q < s; ++q) m.states.push_back("q" + std::to_string(q));
  m.states.push_back("qa");
  m.alphabet = {"p1", "lam"};
  m.blank = "lam";
  m.initial = "q0";
  m.accepting = "qa";
  for (std::uint64_t q = 0; q < s; ++q) {
    for (const char* read : {"p1", "lam"}) {
      std::uint64_t d = digits % base;
      digits /= base;
      const char* write = d % 2 == 0 ? "p1" : "lam";
      d /= 2;
      const Move move = d % 3 == 0 ? Move::L : d % 3 == 1 ? Move::R : Move::N;
      d /= 3;
      const std::string next = d == s ? "qa" : "q" + std::to_string(d);
      m.transitions.push_back(Transition{"q" + std::to_string(q), read, next, write, move});
    }
  }
  return m;
}

bool universal_converges(std::uint64_t e, std::uint64_t k, std::uint64_t t) {
  const RunResult r = tm_run(machine_from_number(e), unary(k, "p1"), static_cast<std::size_t>(t));
  return r.status == RunStatus::Output || r.status == RunStatus::HaltedUnreadable;
}

std::optional<Word> f0(std::uint64_t x) {
  const auto idx = decode_index(x);
  if (!idx) return std::nullopt;
  if (idx->alpha.is_zero()) {
    if (idx->e > 0) return Word{"p1"};
    return std::nullopt;
  }
  Word w = unary(x, "p1");
  w.push_back("p2");
  return w;
}

Word f1(const Word& w) {
  const Word fallback{"p1"};
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::size_t i = 0;
  while (i < w.size() && w[i] == "p1") ++x1, ++i;
  while (i < w.size() && w[i] == "p2") ++x2, ++i;
  if (i != w.size()) return fallback;
  const auto outer = decode_index(x1);
  if (!outer || outer->alpha.is_zero()) return fallback;
  const auto [k, t] = unpair(x2);
  const auto inner = decode_index(k);
  if (!inner || inner->epsilon != 1 - outer->epsilon || !(inner->alpha < outer->alpha)) return fallback;
  if (!universal_converges(outer->e, k, t)) return fallback;
  Word out = unary(k, "p1");
  out.push_back("p2");
  return out;
}

}  // namespace ial

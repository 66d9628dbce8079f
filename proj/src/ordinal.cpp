#include "ial/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ial {

namespace {

void strip(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t nth_prime(std::size_t k) {
  static std::vector<std::uint64_t> primes{2};
  while (primes.size() <= k) {
    std::uint64_t n = primes.back() + 1;
    while (true) {
      bool prime = true;
      for (std::uint64_t p : primes) {
        if (p * p > n) break;
        if (n % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
      ++n;
    }
    primes.push_back(n);
  }
  return primes[k];
}

}  // namespace

OrdVec::OrdVec(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

OrdVec OrdVec::finite(std::uint64_t n) { return OrdVec(std::vector<std::uint64_t>{n}); }

std::strong_ordering operator<=>(const OrdVec& a, const OrdVec& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] <=> b.coeffs_[i];
  return std::strong_ordering::equal;
}

std::strong_ordering ord_compare(const OrdVec& a, const OrdVec& b) { return a <=> b; }

OrdVec ord_add(const OrdVec& a, const OrdVec& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return OrdVec(std::move(c));
}

OrdVec ord_shift(const OrdVec& a) {
  if (a.is_zero()) return a;
  std::vector<std::uint64_t> c{0};
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return OrdVec(std::move(c));
}

std::optional<std::uint64_t> rho(const OrdVec& a) {
  std::uint64_t code = 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    std::uint64_t p = nth_prime(i);
    for (std::uint64_t k = 0; k < a.coeffs()[i]; ++k)
      if (__builtin_mul_overflow(code, p, &code)) return std::nullopt;
  }
  return code;
}

OrdVec rho_inv(std::uint64_t code) {
  if (code == 0) throw OrdinalError("0 is not a notation");
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; code > 1; ++i) {
    std::uint64_t p = nth_prime(i);
    if (p * p > code) {
      // The remaining factor is a single prime; locate its index.
      std::size_t j = i;
      while (nth_prime(j) != code) ++j;
      c.resize(j + 1, 0);
      c[j] += 1;
      break;
    }
    c.push_back(0);
    while (code % p == 0) {
      code /= p;
      ++c.back();
    }
  }
  return OrdVec(std::move(c));
}

BaseStep base_step(const OrdVec& a) {
  std::vector<std::uint64_t> c = a.coeffs();
  std::uint64_t step = c.empty() ? 0 : c[0];
  if (!c.empty()) c[0] = 0;
  return {OrdVec(std::move(c)), step};
}

OrdVec lift(const OrdVec& a, std::uint64_t n) {
  if (n == 0) throw OrdinalError("lift requires n >= 1");
  std::vector<std::uint64_t> c = a.coeffs();
  if (c.empty()) c.push_back(0);
  c[0] = c[0] * n + 1;
  return OrdVec(std::move(c));
}

std::string to_string(const OrdVec& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coeffs()[i]);
  }
  return out + ")";
}

OrdVec parse_ordvec(std::string_view text) {
  auto bad = [&] { return OrdinalError("malformed ordinal vector: " + std::string(text)); };
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') throw bad();
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::vector<std::uint64_t> c;
  while (!body.empty()) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr == body.data()) throw bad();
    c.push_back(v);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (!body.empty()) {
      if (body.front() != ',' || body.size() == 1) throw bad();
      body.remove_prefix(1);
    }
  }
  return OrdVec(std::move(c));
}

std::string nu_string(const OrdVec& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    std::uint64_t m = a.coeffs()[i];
    if (m == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += std::to_string(m);
    else if (i == 1)
      out += "w*" + std::to_string(m);
    else
      out += "w^" + std::to_string(i) + "*" + std::to_string(m);
  }
  return out;
}

OrdVec mu(Formula f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Zero:
    case Op::One:
      return {};
    case Op::Bang:
      if (f.body().has_star()) throw OrdinalError("star under a bang: " + print_formula(f));
      return {};
    case Op::Star:
      return ord_add(ord_shift(mu(f.body())), OrdVec::finite(3));
    case Op::Block:
      return mu(f.body());
    default:
      return ord_add(mu(f.left()), mu(f.right()));
  }
}

OrdVec mu_sequent(const DSequent& s) {
  OrdVec total = mu(s.suc);
  for (Formula f : s.ant) total = ord_add(total, mu(f));
  return total;
}

}  // namespace ial

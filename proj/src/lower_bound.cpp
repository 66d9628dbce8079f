#include "ial/lower_bound.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ial/coding.hpp"

namespace ial {

namespace {

Formula v(const char* name) { return Formula::var(name); }

Formula prod(std::initializer_list<Formula> fs) { return Formula::product(std::vector<Formula>(fs)); }

std::size_t max_k(const std::vector<std::size_t>& ks) {
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i] > ks[i - 1]) throw std::invalid_argument("energy levels must be non-increasing");
  return ks.empty() ? 0 : ks.front();
}

// En(k_M), ..., En(k_1), Brk
std::vector<Formula> energy_tail(const std::vector<std::size_t>& ks, const LowerBoundFormulas& fs) {
  std::vector<Formula> out;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    if (*it >= fs.en.size()) throw std::invalid_argument("energy formula table too short");
    out.push_back(fs.en[*it]);
  }
  out.push_back(fs.brk);
  return out;
}

}  // namespace

Formula cmp_formula(const std::string& q, Formula h_p1, Formula h_p2) {
  const Formula branch = Formula::meet(Formula::under(v("p1"), h_p1), Formula::under(v("p2"), h_p2));
  return Formula::under(v("go"), Formula::under(prod({Formula::var(q), v("rt"), v("fn")}), branch));
}

LowerBoundFormulas gen_formulas(std::size_t k, const std::string& q0_init, const std::string& q1_init) {
  LowerBoundFormulas fs;
  fs.ok = Formula::under(v("ok"), v("ok"));
  const Formula cmp0 = cmp_formula(q0_init, v("ok"), v("go"));
  auto guarded = [&](Formula f) { return Formula::meet(fs.ok, f); };
  fs.en_exists = prod({v("go"), cmp0, guarded(Formula::under(v("go"), v("ex"))),
                       guarded(cmp_formula(q1_init, v("fl"), prod({v("pA"), v("en")})))});
  fs.en_forall = prod({v("go"), cmp0,
                       guarded(Formula::under(v("go"), prod({Formula::star(v("p2")), v("go")}))),
                       guarded(cmp_formula(q1_init, v("ok"), prod({v("pE"), v("en")})))});
  fs.en.push_back(guarded(Formula::under(
      v("en"), Formula::meet(Formula::under(v("pE"), fs.en_exists), Formula::under(v("pA"), fs.en_forall)))));
  for (std::size_t i = 1; i <= k; ++i)
    fs.en.push_back(guarded(Formula::under(v("en"), prod({v("en"), Formula::star(fs.en.back())}))));
  const Formula drain = Formula::under(Formula::star(v("p1")), v("ok"));
  fs.brk = guarded(
      Formula::under(v("en"), Formula::meet(Formula::under(v("pE"), drain), Formula::under(v("pA"), drain))));
  return fs;
}

RewritingSystem build_srs(const TuringMachine& m0, const TuringMachine& m1) {
  std::set<std::string> s0(m0.states.begin(), m0.states.end());
  for (const auto& q : m1.states)
    if (s0.count(q)) throw MachineError("machines share the state " + q);
  RewritingSystem s = compile_tm(m0, "lt", "rt", "fn");
  for (auto& r : compile_tm(m1, "lt", "rt", "fn").rules) s.rules.push_back(std::move(r));
  s.rules.push_back(RewriteRule{{"ex"}, {"p2", "ex"}});
  s.rules.push_back(RewriteRule{{"ex"}, {"go"}});
  return s;
}

HypothesisSet build_H(const TuringMachine& m0, const TuringMachine& m1) {
  HypothesisSet out;
  for (const auto& r : build_srs(m0, m1).rules) {
    Sequent h;
    std::vector<Formula> rhs;
    for (const auto& b : r.lhs) h.ant.push_back(Formula::var(b));
    for (const auto& c : r.rhs) rhs.push_back(Formula::var(c));
    h.suc = Formula::product(rhs);
    out.push_back(std::move(h));
  }
  return out;
}

Sequent main_sequent(std::uint64_t x, unsigned epsilon, const std::vector<std::size_t>& ks,
                     const LowerBoundFormulas& fs) {
  max_k(ks);
  if (x > kMaxUnaryLength) throw std::invalid_argument("x is too large to write in unary");
  Sequent s;
  s.ant.push_back(v("lt"));
  s.ant.insert(s.ant.end(), static_cast<std::size_t>(x), v("p1"));
  s.ant.push_back(epsilon == 0 ? v("pE") : v("pA"));
  s.ant.push_back(v("en"));
  for (Formula f : energy_tail(ks, fs)) s.ant.push_back(f);
  s.suc = prod({v("lt"), v("ok")});
  return s;
}

Sequent gen_main_sequent(std::uint64_t x, const std::vector<std::size_t>& ks, const TuringMachine& m0,
                         const TuringMachine& m1, bool with_hypotheses) {
  const std::size_t k = max_k(ks);
  const auto idx = decode_index(x);
  if (!idx) return Sequent{{v("p")}, v("q")};
  Sequent s = main_sequent(x, idx->epsilon, ks, gen_formulas(k, m0.initial, m1.initial));
  if (with_hypotheses) s = embed(build_H(m0, m1), s);
  return s;
}

Sequent fail_sequent(const std::vector<std::size_t>& ks, const LowerBoundFormulas& fs) {
  max_k(ks);
  Sequent s;
  s.ant = {v("lt"), v("fl")};
  for (Formula f : energy_tail(ks, fs)) s.ant.push_back(f);
  s.suc = prod({v("lt"), v("ok")});
  return s;
}

}  // namespace ial

#include "ial/sequent.hpp"

#include <algorithm>
#include <cctype>

namespace ial {

Zone make_zone(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end(), FormulaLess{});
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

Zone zone_union(const Zone& a, const Zone& b) {
  Zone out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), FormulaLess{});
  return out;
}

Zone zone_with(const Zone& z, Formula f) { return zone_union(z, Zone{f}); }

Zone zone_without(const Zone& z, Formula f) {
  Zone out;
  for (Formula g : z)
    if (g != f) out.push_back(g);
  return out;
}

bool zone_contains(const Zone& z, Formula f) {
  return std::binary_search(z.begin(), z.end(), f, FormulaLess{});
}

bool zone_subset(const Zone& small, const Zone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(), FormulaLess{});
}

namespace {

int compare_lists(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = compare(a[i], b[i])) return c;
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Formula> parse_list(std::string_view text, std::size_t offset) {
  std::vector<Formula> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (trim(piece).empty()) throw ParseError("empty list element", offset + start);
    try {
      out.push_back(parse_formula(piece));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), offset + start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void append_list(const std::vector<Formula>& fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(fs[i]);
  }
}

}  // namespace

int compare(const DSequent& a, const DSequent& b) {
  if (int c = compare_lists(a.zone, b.zone)) return c;
  if (int c = compare_lists(a.ant, b.ant)) return c;
  return compare(a.suc, b.suc);
}

std::size_t DSequentHash::operator()(const DSequent& s) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto step = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (Formula f : s.zone) step(f.hash());
  step(0x7f);
  for (Formula f : s.ant) step(f.hash());
  step(0x3d);
  step(s.suc.hash());
  return h;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  append_list(s.ant, out);
  out += s.ant.empty() ? "=> " : " => ";
  out += print_formula(s.suc);
  return out;
}

std::string print_dsequent(const DSequent& s, bool with_zone) {
  std::string out;
  if (with_zone) {
    out += '{';
    append_list(s.zone, out);
    out += "} ; ";
  }
  out += print_sequent(s.flat());
  return out;
}

Sequent parse_sequent(std::string_view text) {
  std::size_t arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw ParseError("missing '=>'", text.size());
  if (text.find("=>", arrow + 2) != std::string_view::npos)
    throw ParseError("more than one '=>'", text.find("=>", arrow + 2));
  Sequent s;
  s.ant = parse_list(text.substr(0, arrow), 0);
  std::string_view rhs = text.substr(arrow + 2);
  if (trim(rhs).empty()) throw ParseError("missing succedent", arrow + 2);
  try {
    s.suc = parse_formula(rhs);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), arrow + 2 + e.position());
  }
  return s;
}

DSequent parse_dsequent(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  if (lead >= text.size() || text[lead] != '{') return DSequent(parse_sequent(text));
  std::size_t close = text.find('}', lead);
  if (close == std::string_view::npos) throw ParseError("unbalanced '{'", lead);
  std::size_t semi = text.find(';', close);
  if (semi == std::string_view::npos || !trim(text.substr(close + 1, semi - close - 1)).empty())
    throw ParseError("expected ';' after zone", close + 1);
  std::vector<Formula> zone = parse_list(text.substr(lead + 1, close - lead - 1), lead + 1);
  for (Formula f : zone)
    if (!is_monoidal_bang(f))
      throw ParseError("zone formula is not of the form !((b...)\\(c...)): " + print_formula(f), lead);
  Sequent rest;
  try {
    rest = parse_sequent(text.substr(semi + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), semi + 1 + e.position());
  }
  return DSequent(std::move(zone), std::move(rest.ant), rest.suc);
}

std::vector<Sequent> parse_sequent_list(std::string_view text) {
  std::vector<Sequent> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) out.push_back(parse_sequent(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

FragmentClass classify_sequent(const Sequent& s) {
  std::vector<Formula> all = s.ant;
  all.push_back(s.suc);
  return classify_formulas(all);
}

FragmentClass classify_dsequent(const DSequent& s) {
  std::vector<Formula> all = s.ant;
  all.push_back(s.suc);
  all.insert(all.end(), s.zone.begin(), s.zone.end());
  return classify_formulas(all);
}

bool sequent_has_star(const DSequent& s) {
  if (s.suc.has_star()) return true;
  for (Formula f : s.ant)
    if (f.has_star()) return true;
  for (Formula f : s.zone)
    if (f.has_star()) return true;
  return false;
}

std::size_t c_parameter(const DSequent& s) {
  std::size_t c = complexity(s.suc);
  for (Formula f : s.ant) c += complexity(f);
  return c;
}

}  // namespace ial

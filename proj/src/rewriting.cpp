#include "ial/rewriting.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ial {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& s : w) h = (h ^ std::hash<std::string>{}(s)) * 1099511628211ULL;
    return h;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::set<std::string> RewritingSystem::alphabet() const {
  std::set<std::string> out;
  for (const auto& r : rules) {
    out.insert(r.lhs.begin(), r.lhs.end());
    out.insert(r.rhs.begin(), r.rhs.end());
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(tok);
  if (w.size() == 1 && w[0] == "eps") w.clear();
  return w;
}

std::string print_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

std::string print_rule(const RewriteRule& r) {
  std::string lhs = r.lhs.empty() ? "eps" : print_word(r.lhs);
  std::string rhs = r.rhs.empty() ? "eps" : print_word(r.rhs);
  return lhs + " -> " + rhs;
}

RewritingSystem parse_srs(std::string_view text) {
  RewritingSystem s;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    auto arrow = body.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": missing '->'");
    RewriteRule r{parse_word(body.substr(0, arrow)), parse_word(body.substr(arrow + 2))};
    if (r.lhs.empty())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": empty left-hand side");
    s.rules.push_back(std::move(r));
  }
  return s;
}

std::string print_srs(const RewritingSystem& s) {
  std::string out;
  for (const auto& r : s.rules) out += print_rule(r) + "\n";
  return out;
}

std::vector<Word> rewrite_once(const RewritingSystem& s, const Word& w) {
  std::vector<Word> out;
  for (const auto& r : s.rules) {
    if (r.lhs.size() > w.size()) continue;
    for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i) {
      if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), r.rhs.begin(), r.rhs.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + r.lhs.size()), w.end());
      out.push_back(std::move(next));
    }
  }
  return out;
}

bool has_suffix(const Word& w, const Word& suffix) {
  return suffix.size() <= w.size() && std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

ReachResult srs_reach(const RewritingSystem& s, const Word& start,
                      const std::function<bool(const Word&)>& predicate,
                      std::size_t step_bound, std::size_t breadth_bound) {
  ReachResult res;
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<std::pair<Word, std::size_t>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [w, dist] = std::move(queue.front());
    queue.pop_front();
    ++res.explored;
    if (predicate(w)) res.matches.insert(w);
    for (Word& next : rewrite_once(s, w)) {
      if (seen.count(next)) continue;
      if (dist >= step_bound || seen.size() >= breadth_bound) {
        res.truncated = true;
        continue;
      }
      seen.insert(next);
      queue.emplace_back(std::move(next), dist + 1);
    }
  }
  return res;
}

}  // namespace ial

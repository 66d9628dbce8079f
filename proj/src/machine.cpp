#include "ial/machine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ial {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Move parse_move(const std::string& s) {
  if (s == "L") return Move::L;
  if (s == "R") return Move::R;
  if (s == "N") return Move::N;
  throw MachineError("bad move '" + s + "'");
}

const char* move_name(Move m) {
  switch (m) {
    case Move::L: return "L";
    case Move::R: return "R";
    case Move::N: return "N";
  }
  return "?";
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

TuringMachine sample(const std::string& prefix, std::vector<std::string> states,
                     std::vector<std::tuple<std::string, std::string, std::string, std::string, Move>> rows) {
  TuringMachine m;
  for (auto& s : states) m.states.push_back(prefix + s);
  m.alphabet = {"p1", "lam"};
  m.blank = "lam";
  m.initial = prefix + "q0";
  m.accepting = prefix + "qa";
  for (auto& [q, a, q2, b, mv] : rows) m.transitions.push_back(Transition{prefix + q, a, prefix + q2, b, mv});
  return m;
}

}  // namespace

void validate_machine(const TuringMachine& m) {
  std::set<std::string> seen;
  for (const auto& s : m.states)
    if (!seen.insert(s).second) throw MachineError("duplicate state " + s);
  for (const auto& a : m.alphabet)
    if (!seen.insert(a).second) throw MachineError("symbol " + a + " is both a state and a letter or repeated");
  if (!contains(m.alphabet, m.blank)) throw MachineError("blank " + m.blank + " is not in the alphabet");
  if (!contains(m.states, m.initial)) throw MachineError("unknown initial state " + m.initial);
  if (!contains(m.states, m.accepting)) throw MachineError("unknown accepting state " + m.accepting);
  for (const auto& t : m.transitions) {
    if (!contains(m.states, t.state) || !contains(m.states, t.next)) throw MachineError("transition with unknown state");
    if (!contains(m.alphabet, t.read) || !contains(m.alphabet, t.write))
      throw MachineError("transition with unknown letter");
    if (t.state == m.accepting) throw MachineError("transition leaves the accepting state");
  }
}

TuringMachine parse_machine(std::string_view text) {
  TuringMachine m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw MachineError("line " + std::to_string(lineno) + ": expected 'field: value'");
    const std::string key{trim(body.substr(0, colon))};
    const auto vals = tokens(body.substr(colon + 1));
    auto single = [&]() {
      if (vals.size() != 1) throw MachineError("line " + std::to_string(lineno) + ": " + key + " takes one value");
      return vals[0];
    };
    if (key == "states") {
      m.states = vals;
    } else if (key == "alphabet") {
      m.alphabet = vals;
    } else if (key == "blank") {
      m.blank = single();
    } else if (key == "initial") {
      m.initial = single();
    } else if (key == "accepting") {
      m.accepting = single();
    } else if (key == "transition") {
      if (vals.size() != 6 || vals[2] != "->")
        throw MachineError("line " + std::to_string(lineno) + ": expected 'q a -> q2 b M'");
      m.transitions.push_back(Transition{vals[0], vals[1], vals[3], vals[4], parse_move(vals[5])});
    } else {
      throw MachineError("line " + std::to_string(lineno) + ": unknown field " + key);
    }
  }
  validate_machine(m);
  return m;
}

std::string print_machine(const TuringMachine& m) {
  std::string out;
  out += "states: " + join(m.states) + "\n";
  out += "alphabet: " + join(m.alphabet) + "\n";
  out += "blank: " + m.blank + "\n";
  out += "initial: " + m.initial + "\n";
  out += "accepting: " + m.accepting + "\n";
  for (const auto& t : m.transitions)
    out += "transition: " + t.state + " " + t.read + " -> " + t.next + " " + t.write + " " + move_name(t.move) + "\n";
  return out;
}

RewritingSystem compile_tm(const TuringMachine& m, const std::string& l, const std::string& r, const std::string& e) {
  validate_machine(m);
  const std::string lp = l + "'";
  for (const auto& s : {l, lp, r, e}) {
    if (contains(m.states, s) || contains(m.alphabet, s)) throw MachineError("border symbol " + s + " clashes with the machine");
  }
  if (std::set<std::string>{l, lp, r, e}.size() != 4) throw MachineError("border symbols must be distinct");
  const std::string& lam = m.blank;
  const std::string& qa = m.accepting;
  std::vector<std::string> nonblank;
  for (const auto& c : m.alphabet)
    if (c != lam) nonblank.push_back(c);

  RewritingSystem s;
  auto add = [&](Word lhs, Word rhs) { s.rules.push_back(RewriteRule{std::move(lhs), std::move(rhs)}); };
  for (const auto& t : m.transitions) {
    const auto& [q, a, q2, b, mv] = t;
    switch (mv) {
      case Move::N:
        add({a, q}, {b, q2});
        if (a == lam) add({l, q}, {l, b, q2});
        break;
      case Move::L:
        add({a, q}, {q2, b});
        if (a == lam) add({l, q}, {l, q2, b});
        break;
      case Move::R:
        for (const auto& c : m.alphabet) add({a, q, c}, {b, c, q2});
        add({a, q, r}, {b, lam, q2, r});
        if (a == lam) add({l, q, r}, {l, b, lam, q2, r});
        break;
    }
  }
  add({lam, qa}, {qa});
  add({l, qa}, {l, lp, qa});
  for (const auto& c : nonblank) add({lp, qa, c}, {c, lp, qa});
  add({lp, qa, lam}, {lp, qa});
  add({lp, qa, r}, {e});
  return s;
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Output: return "Output";
    case RunStatus::HaltedUnreadable: return "HaltedUnreadable";
    case RunStatus::Timeout: return "Timeout";
    case RunStatus::Stuck: return "Stuck";
    case RunStatus::Nondeterministic: return "Nondeterministic";
  }
  return "?";
}

RunResult tm_run(const TuringMachine& m, const Word& input, std::size_t step_bound) {
  Word tape = input;
  // Index of the scanned cell; -1 is the cell at the left border.
  std::ptrdiff_t h = static_cast<std::ptrdiff_t>(tape.size()) - 1;
  std::string state = m.initial;
  RunResult res;
  for (;;) {
    if (state == m.accepting) {
      for (std::ptrdiff_t i = 0; i <= h; ++i)
        if (tape[static_cast<std::size_t>(i)] != m.blank) {
          res.status = RunStatus::HaltedUnreadable;
          return res;
        }
      for (std::size_t i = static_cast<std::size_t>(h + 1); i < tape.size(); ++i)
        if (tape[i] != m.blank) res.output.push_back(tape[i]);
      res.status = RunStatus::Output;
      return res;
    }
    if (res.steps >= step_bound) {
      res.status = RunStatus::Timeout;
      return res;
    }
    const std::string& read = h >= 0 ? tape[static_cast<std::size_t>(h)] : m.blank;
    const Transition* chosen = nullptr;
    for (const auto& t : m.transitions) {
      if (t.state != state || t.read != read) continue;
      if (chosen) {
        res.status = RunStatus::Nondeterministic;
        return res;
      }
      chosen = &t;
    }
    if (!chosen) {
      res.status = RunStatus::Stuck;
      return res;
    }
    if (h < 0) {
      switch (chosen->move) {
        case Move::N:
          tape.insert(tape.begin(), chosen->write);
          h = 0;
          break;
        case Move::L:
          tape.insert(tape.begin(), chosen->write);
          break;
        case Move::R:
          if (!tape.empty()) {
            res.status = RunStatus::Stuck;
            return res;
          }
          tape = {chosen->write, m.blank};
          h = 1;
          break;
      }
    } else {
      tape[static_cast<std::size_t>(h)] = chosen->write;
      if (chosen->move == Move::L) --h;
      if (chosen->move == Move::R) {
        ++h;
        if (static_cast<std::size_t>(h) == tape.size()) tape.push_back(m.blank);
      }
    }
    state = chosen->next;
    ++res.steps;
  }
}

TuringMachine identity_machine(const std::string& prefix) {
  return sample(prefix, {"q0", "qa"}, {{"q0", "p1", "q0", "p1", Move::L}, {"q0", "lam", "qa", "lam", Move::N}});
}

TuringMachine successor_machine(const std::string& prefix) {
  return sample(prefix, {"q0", "q1", "q2", "qa"},
                {{"q0", "p1", "q1", "p1", Move::R},
                 {"q1", "lam", "q2", "p1", Move::L},
                 {"q0", "lam", "q2", "p1", Move::L},
                 {"q2", "p1", "q2", "p1", Move::L},
                 {"q2", "lam", "qa", "lam", Move::N}});
}

TuringMachine eraser_machine(const std::string& prefix) {
  return sample(prefix, {"q0", "qa"}, {{"q0", "p1", "q0", "lam", Move::L}, {"q0", "lam", "qa", "lam", Move::N}});
}

}  // namespace ial

// Turing machines, their direct interpreter, and their compilation into
// string rewriting systems.

#ifndef IAL_MACHINE_HPP_
#define IAL_MACHINE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ial/rewriting.hpp"

namespace ial {

enum class Move { L, R, N };

struct Transition {
  std::string state;
  std::string read;
  std::string next;
  std::string write;
  Move move = Move::N;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct TuringMachine {
  std::vector<std::string> states;
  // Tape alphabet, blank included.
  std::vector<std::string> alphabet;
  std::string blank;
  std::string initial;
  std::string accepting;
  std::vector<Transition> transitions;
};

class MachineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MachineError on unknown symbols or states, a missing blank, or a
// transition leaving the accepting state.
void validate_machine(const TuringMachine& m);

// Text form, one field per line:
//   states: q0 qa
//   alphabet: p1 lam
//   blank: lam
//   initial: q0
//   accepting: qa
//   transition: q0 p1 -> q0 p1 L
// '#' starts a comment.
TuringMachine parse_machine(std::string_view text);
std::string print_machine(const TuringMachine& m);

// The rewriting system simulating `m` between the borders `l` and `r`, with
// `e` marking a finished computation. The auxiliary border is l + "'".
// Throws MachineError when a border symbol clashes with a state or letter.
RewritingSystem compile_tm(const TuringMachine& m, const std::string& l, const std::string& r, const std::string& e);

enum class RunStatus {
  Output,
  // Accepted with non-blank symbols left of the head: no output is readable.
  HaltedUnreadable,
  Timeout,
  // No transition applies, including a right move from the left border
  // over a nonempty tape.
  Stuck,
  Nondeterministic,
};

std::string to_string(RunStatus s);

struct RunResult {
  RunStatus status = RunStatus::Timeout;
  Word output;
  std::size_t steps = 0;
};

// Starts on `input` with the head on its last letter (on the left border
// when the input is empty), like the rewriting start word l input q0 r.
RunResult tm_run(const TuringMachine& m, const Word& input, std::size_t step_bound);

// Sample machines over {p1, lam}; state names carry `prefix`.
TuringMachine identity_machine(const std::string& prefix = "");
TuringMachine successor_machine(const std::string& prefix = "");
TuringMachine eraser_machine(const std::string& prefix = "");

}  // namespace ial

#endif  // IAL_MACHINE_HPP_

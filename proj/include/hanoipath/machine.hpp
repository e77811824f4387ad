#pragma once

#include "hanoipath/core.hpp"
#include "hanoipath/transducer.hpp"

#include <optional>

namespace hanoipath {

// States of the core decision machine. StartP evaluates the P function,
// MiddleR the R function, RightQ the Q function; the Stop states are
// terminal. On input exhaustion StartP resolves to Once (alternative 1),
// MiddleR to Draw and RightQ to Twice (alternative 2).
enum class CoreState : std::uint8_t {
  StartP,
  MiddleR,
  RightQ,
  StopAlt1,
  StopAlt2
};

constexpr bool is_terminal(CoreState s) {
  return s == CoreState::StopAlt1 || s == CoreState::StopAlt2;
}

std::string to_string(CoreState s);

class TerminalStateStepped : public std::logic_error {
 public:
  TerminalStateStepped();
};

// One core transition on a canonical-alphabet pair at remaining length m
// (m counts the pair being consumed). Non-terminal transitions carry a
// weight of 2^m or 2^{m-1}; terminal transitions carry none — the caller
// evaluates the terminal sum (f_R(u)+f_T(v) for StopAlt1, f_L(u)+f_L(v) for
// StopAlt2) over the full current words.
struct CoreStep {
  CoreState next;
  std::optional<Distance> weight;

  bool terminal() const { return !weight.has_value(); }
};

CoreStep core_step(CoreState state, GasketSymbol a, GasketSymbol b,
                   std::size_t m);

struct TraceEntry {
  GasketSymbol a;
  GasketSymbol b;
  CoreState entered;
  Distance weight;
};

// Full run of the general machine: prefix discard, permutation fixing
// (d = 1), core iteration, terminal-sum evaluation. distance =
// 1 + sum of trace weights + terminal_sum whenever a differing pair exists.
// symbols_read counts every input symbol consumed from either word.
struct MachineRun {
  Decision decision;
  Distance distance;
  Distance terminal_sum;
  std::size_t symbols_read = 0;
  std::vector<TraceEntry> trace;
};

MachineRun run_machine(const GasketWord& x, const GasketWord& y,
                       bool keep_trace = false);

// Verdict and read counts only; stops consuming input at the terminal
// transition and never evaluates terminal sums.
Decision decide(const GasketWord& x, const GasketWord& y);

Distance distance(const GasketWord& x, const GasketWord& y);

// Hanoi-coordinate variants: the relabeling transducer and the machine run
// in lockstep, one disc at a time, so decide_hanoi stops reading discs as
// soon as the verdict is known.
MachineRun run_machine_hanoi(const HanoiWord& x, const HanoiWord& y,
                             bool keep_trace = false);
Decision decide_hanoi(const HanoiWord& x, const HanoiWord& y);
Distance distance_hanoi(const HanoiWord& x, const HanoiWord& y);

// The bare core machine on pre-canonicalized suffix pairs: no prefix
// discard, no permutation selection. Used by the absorption-time analysis
// and the stopping-time simulation.
struct CoreRun {
  Verdict verdict;
  std::size_t pairs_read;
  CoreState final_state;
};

CoreRun run_core(const GasketWord& u, const GasketWord& v);

}  // namespace hanoipath

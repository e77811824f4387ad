#pragma once

#include "hanoipath/core.hpp"
#include "hanoipath/machine.hpp"

#include <array>
#include <map>

namespace hanoipath {

// Row-stochastic matrix of exact rationals with named states.
struct TransitionMatrix {
  std::vector<std::vector<Rational>> entries;
  std::vector<std::string> labels;
};

struct LinearSystem {
  std::vector<std::vector<Rational>> coefficients;
  std::vector<Rational> rhs;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError();
};

// Exact Gaussian elimination; back-substitution reproduces rhs exactly.
std::vector<Rational> solve_exact(const LinearSystem& sys);

// The decision machine viewed as a Markov chain on uniform input pairs:
// transient states start_p, middle_r, right_q, absorbing stop states.
TransitionMatrix decision_chain();  // 5x5
TransitionMatrix reduced_chain();   // 4x4, the two stop states merged

// The same matrices re-derived by tallying core_step over the nine input
// pairs per transient state. Must equal the hard-coded forms entry for
// entry.
TransitionMatrix decision_chain_from_machine();
TransitionMatrix reduced_chain_from_machine();

// Expected pair reads to absorption from each transient state:
// (63/38, 99/38, 63/38).
std::array<Rational, 3> absorption_times();

// Exact expected core pair reads when only n pairs are available (the
// machine stops on exhaustion). Strictly increasing in n, bounded by 63/38.
Rational expected_reads_finite(int n);

// mass[k] = exact probability that the core machine is still undecided
// after k pair reads; mass[0] = 1.
std::vector<Rational> transient_mass(int max_steps);

// Distribution facts about the terminal transitions out of one transient
// state: how many of the nine pairs absorb, and how many of those mismatch
// the f indices of the terminal sum on each side.
struct TerminalTally {
  int terminal_pairs = 0;
  int x_mismatches = 0;
  int y_mismatches = 0;
};
TerminalTally terminal_tally(CoreState state);

// Expected tail contribution of one word to a terminal sum on the infinite
// gasket: symbols below the absorbing pair mismatch with probability 2/3 at
// geometrically shrinking weights. Exactly 1/3.
Rational terminal_tail_per_word();

// Expected terminal sum at absorption from the start state, weights scaled
// so the absorbing pair sits at 1/2: exactly 1/2 + 2/3 = 7/6.
Rational terminal_sum_expectation();

// Expected scaled distance accumulated from each of the four non-terminal
// states of the general machine on random infinite words:
// (466/885, 233/177, 188/177, 233/177). The first entry is the average
// distance between two random points on the unit gasket.
std::array<Rational, 4> expected_distance_constants();

struct StoppingTimeStats {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double stddev = 0;
  double standard_error = 0;
  std::map<std::size_t, std::uint64_t> histogram;
};

// Feeds i.i.d. uniform symbol pairs straight into the core machine (the
// discard phase is bypassed) and reports pair-read statistics.
// Deterministic for a fixed seed.
StoppingTimeStats simulate_stopping_time(int n, std::uint64_t samples,
                                         std::uint64_t seed);

constexpr int kMaxExactAverageDiscs = 7;

// Exact average distance over all 9^n ordered word pairs, via per-source
// BFS. n <= 7.
Rational average_pair_distance_exact(int n);

struct SampledAverageDistance {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double ratio_to_pow2n = 0;  // approaches 466/885
  double standard_error = 0;
};

// Machine distance averaged over random word pairs (identical words
// allowed). Deterministic for a fixed seed.
SampledAverageDistance average_pair_distance_sampled(int n,
                                                     std::uint64_t samples,
                                                     std::uint64_t seed);

// Exact mean corner distance over all 3^n words, via the f_alpha formula:
// (2/3)(2^n - 1).
Rational mean_distance_to_perfect(int n);

}  // namespace hanoipath

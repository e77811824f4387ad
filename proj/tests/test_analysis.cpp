#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hanoipath/analysis.hpp"
#include "hanoipath/machine.hpp"
#include "hanoipath/oracle.hpp"

#include <cmath>

using namespace hanoipath;

namespace {

Rational r(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("exact solver on simple systems") {
  LinearSystem identity;
  identity.coefficients = {{r(1), r(0)}, {r(0), r(1)}};
  identity.rhs = {r(63, 38), r(99, 38)};
  const auto x = solve_exact(identity);
  CHECK(x[0] == r(63, 38));
  CHECK(x[1] == r(99, 38));

  LinearSystem singular;
  singular.coefficients = {{r(1), r(2)}, {r(2), r(4)}};
  singular.rhs = {r(1), r(2)};
  CHECK_THROWS_AS(solve_exact(singular), SingularMatrixError);
}

TEST_CASE("exact solver reproduces the rhs by back-substitution") {
  LinearSystem sys;
  sys.coefficients = {{r(2), r(-1), r(3)},
                      {r(1, 3), r(5), r(-2, 7)},
                      {r(0), r(4), r(9, 2)}};
  sys.rhs = {r(7, 5), r(-3), r(11, 4)};
  const auto x = solve_exact(sys);
  for (int i = 0; i < 3; ++i) {
    Rational acc(0);
    for (int j = 0; j < 3; ++j) acc += sys.coefficients[i][j] * x[j];
    CHECK(acc == sys.rhs[i]);
  }
}

TEST_CASE("exact solver on the absorption-time system") {
  // t_i = 1 + sum_j Q_ij t_j, written as (I - Q) t = 1.
  LinearSystem sys;
  sys.coefficients = {{r(1) - r(2, 9), r(-1, 9), r(0)},
                      {r(-2, 9), r(1) - r(1, 3), r(-2, 9)},
                      {r(0), r(-1, 9), r(1) - r(2, 9)}};
  sys.rhs = {r(1), r(1), r(1)};
  const auto t = solve_exact(sys);
  CHECK(t[0] == r(63, 38));
  CHECK(t[1] == r(99, 38));
  CHECK(t[2] == r(63, 38));
}

TEST_CASE("the decision chain matrices") {
  const TransitionMatrix five = decision_chain();
  REQUIRE(five.entries.size() == 5);
  CHECK(five.entries[0] ==
        std::vector<Rational>{r(2, 9), r(1, 9), r(0), r(2, 3), r(0)});
  CHECK(five.entries[1] ==
        std::vector<Rational>{r(2, 9), r(1, 3), r(2, 9), r(1, 9), r(1, 9)});
  CHECK(five.entries[2] ==
        std::vector<Rational>{r(0), r(1, 9), r(2, 9), r(0), r(2, 3)});
  for (const auto& row : five.entries) {
    Rational sum(0);
    for (const Rational& p : row) sum += p;
    CHECK(sum == 1);
  }

  const TransitionMatrix four = reduced_chain();
  REQUIRE(four.entries.size() == 4);
  CHECK(four.entries[0] ==
        std::vector<Rational>{r(2, 9), r(1, 9), r(0), r(2, 3)});
  for (const auto& row : four.entries) {
    Rational sum(0);
    for (const Rational& p : row) sum += p;
    CHECK(sum == 1);
  }
}

TEST_CASE("chain probabilities re-derive from the machine table") {
  const TransitionMatrix paper = decision_chain();
  const TransitionMatrix derived = decision_chain_from_machine();
  REQUIRE(paper.entries.size() == derived.entries.size());
  for (std::size_t i = 0; i < paper.entries.size(); ++i) {
    CHECK(paper.entries[i] == derived.entries[i]);
  }
  CHECK(reduced_chain().entries == reduced_chain_from_machine().entries);

  // start_p tally: 2 stays, 1 to middle_r, 6 absorbing
  CHECK(derived.entries[0][0] == r(2, 9));
  CHECK(derived.entries[0][1] == r(1, 9));
  CHECK(derived.entries[0][3] + derived.entries[0][4] == r(2, 3));
}

TEST_CASE("absorption times are the exact fractions") {
  const auto t = absorption_times();
  CHECK(t[0] == r(63, 38));
  CHECK(t[1] == r(99, 38));
  CHECK(t[2] == r(63, 38));
}

TEST_CASE("finite-input expected reads") {
  CHECK(expected_reads_finite(1) == r(1));
  CHECK(expected_reads_finite(2) == r(4, 3));
  CHECK_THROWS_AS(expected_reads_finite(0), std::invalid_argument);

  const Rational limit(63, 38);
  Rational previous(0);
  for (int n = 1; n <= 200; ++n) {
    const Rational value = expected_reads_finite(n);
    CHECK(value > previous);
    CHECK(value < limit);
    previous = value;
  }
  // within a hair of the limit by n = 200
  CHECK(limit - previous < Rational(1, BigInt(1) << 60));
}

TEST_CASE("transient mass is the exact tail distribution") {
  const auto mass = transient_mass(10);
  CHECK(mass[0] == r(1));
  CHECK(mass[1] == r(1, 3));  // 3 of 9 pairs keep start_p undecided
  Rational bound(1);
  for (int k = 1; k <= 10; ++k) {
    CHECK(mass[static_cast<std::size_t>(k)] <= bound);
    bound *= r(7, 9);
  }
}

TEST_CASE("terminal-sum expectation pieces") {
  const TerminalTally start = terminal_tally(CoreState::StartP);
  CHECK(start.terminal_pairs == 6);
  CHECK(start.x_mismatches == 3);
  CHECK(start.y_mismatches == 3);

  const TerminalTally right = terminal_tally(CoreState::RightQ);
  CHECK(right.terminal_pairs == 6);
  CHECK(right.x_mismatches == 3);
  CHECK(right.y_mismatches == 3);

  const TerminalTally middle = terminal_tally(CoreState::MiddleR);
  CHECK(middle.terminal_pairs == 2);
  CHECK(middle.x_mismatches == 0);  // RT and LL match their f indices
  CHECK(middle.y_mismatches == 0);

  CHECK(terminal_tail_per_word() == r(1, 3));
  CHECK(terminal_sum_expectation() == r(7, 6));
  CHECK(terminal_sum_expectation() == r(1, 2) + r(2, 3));
}

TEST_CASE("expected-distance constants are the exact fractions") {
  const auto d = expected_distance_constants();
  CHECK(d[0] == r(466, 885));
  CHECK(d[1] == r(233, 177));
  CHECK(d[2] == r(188, 177));
  CHECK(d[3] == r(233, 177));
}

TEST_CASE("stopping-time simulation") {
  const StoppingTimeStats one = simulate_stopping_time(8, 1, 42);
  CHECK(one.histogram.size() == 1);
  CHECK(one.stddev == 0);

  const StoppingTimeStats a = simulate_stopping_time(12, 20000, 7);
  const StoppingTimeStats b = simulate_stopping_time(12, 20000, 7);
  CHECK(a.mean == b.mean);
  CHECK(a.histogram == b.histogram);
  const StoppingTimeStats c = simulate_stopping_time(12, 20000, 8);
  CHECK(a.histogram != c.histogram);

  CHECK_THROWS_AS(simulate_stopping_time(5, 0, 1), std::invalid_argument);
}

TEST_CASE("simulated stopping time approaches 63/38 from below") {
  const double limit = 63.0 / 38.0;
  const StoppingTimeStats stats = simulate_stopping_time(30, 300000, 2718);
  CHECK(std::abs(stats.mean - limit) <= 3 * stats.standard_error);
  CHECK(stats.mean <= limit + 3 * stats.standard_error);

  // empirical tail against the geometric bound, three sigma per bucket
  std::uint64_t total = 0;
  for (const auto& [reads, count] : stats.histogram) total += count;
  double bound = 1.0;
  for (int k = 1; k <= 8; ++k) {
    std::uint64_t over = 0;
    for (const auto& [reads, count] : stats.histogram) {
      if (reads > static_cast<std::size_t>(k)) over += count;
    }
    const double fraction = static_cast<double>(over) / total;
    const double sigma =
        std::sqrt(fraction * (1 - fraction) / total) + 1e-12;
    CHECK(fraction <= bound + 3 * sigma);
    bound *= 7.0 / 9.0;
  }
}

TEST_CASE("exact average pair distance") {
  CHECK(average_pair_distance_exact(1) == r(2, 3));
  CHECK_THROWS_AS(average_pair_distance_exact(8), TooLargeError);

  // cross-route: direct machine enumeration over all ordered pairs
  for (int n = 1; n <= 3; ++n) {
    std::size_t vertices = 1;
    for (int i = 0; i < n; ++i) vertices *= 3;
    BigInt total = 0;
    for (std::size_t a = 0; a < vertices; ++a) {
      for (std::size_t b = 0; b < vertices; ++b) {
        total += distance(gasket_word_at(n, a), gasket_word_at(n, b));
      }
    }
    CHECK(average_pair_distance_exact(n) ==
          Rational(total, BigInt(vertices) * vertices));
  }
}

TEST_CASE("sampled average pair distance") {
  const SampledAverageDistance a = average_pair_distance_sampled(12, 20000, 5);
  const SampledAverageDistance b = average_pair_distance_sampled(12, 20000, 5);
  CHECK(a.mean == b.mean);
  CHECK(a.ratio_to_pow2n == b.ratio_to_pow2n);
  // loose: the n = 12 exact ratio is ~0.5245, sampling noise ~1e-3
  CHECK(std::abs(a.ratio_to_pow2n - 466.0 / 885.0) < 0.02);
}

TEST_CASE("mean distance to a perfect state") {
  for (int n = 0; n <= 10; ++n) {
    const Rational expected =
        Rational(2, 3) * Rational((BigInt(1) << n) - 1);
    CHECK(mean_distance_to_perfect(n) == expected);
  }
}

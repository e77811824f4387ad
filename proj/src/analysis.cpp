#include "hanoipath/analysis.hpp"

#include "hanoipath/gasket.hpp"
#include "hanoipath/oracle.hpp"

#include <cmath>
#include <random>

namespace hanoipath {

namespace {

constexpr std::array<GasketSymbol, 3> kSymbols{
    GasketSymbol::T, GasketSymbol::L, GasketSymbol::R};

constexpr std::array<CoreState, 3> kTransient{
    CoreState::StartP, CoreState::MiddleR, CoreState::RightQ};

int state_column(CoreState s) { return static_cast<int>(s); }

std::vector<std::string> five_labels() {
  return {"start_p", "middle_r", "right_q", "stop_alt1", "stop_alt2"};
}

// Transient 3x3 block shared by the DP helpers.
std::vector<std::vector<Rational>> transient_block() {
  const TransitionMatrix m = decision_chain();
  std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) q[i][j] = m.entries[i][j];
  }
  return q;
}

std::vector<Rational> step_mass(const std::vector<std::vector<Rational>>& q,
                                const std::vector<Rational>& v) {
  std::vector<Rational> next(3, Rational(0));
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) next[j] += v[i] * q[i][j];
  }
  return next;
}

GasketSymbol random_symbol(std::mt19937_64& rng) {
  return static_cast<GasketSymbol>(rng() % 3);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

SingularMatrixError::SingularMatrixError()
    : std::runtime_error("coefficient matrix is singular") {}

std::vector<Rational> solve_exact(const LinearSystem& sys) {
  const std::size_t n = sys.coefficients.size();
  if (sys.rhs.size() != n) {
    throw std::invalid_argument("rhs size does not match matrix");
  }
  auto a = sys.coefficients;
  auto b = sys.rhs;
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  // Substituting back must reproduce the rhs exactly.
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) acc += sys.coefficients[i][j] * x[j];
    if (acc != sys.rhs[i]) {
      throw std::logic_error("exact solve failed back-substitution");
    }
  }
  return x;
}

TransitionMatrix decision_chain() {
  TransitionMatrix m;
  m.labels = five_labels();
  const Rational z(0);
  m.entries = {
      {Rational(2, 9), Rational(1, 9), z, Rational(2, 3), z},
      {Rational(2, 9), Rational(1, 3), Rational(2, 9), Rational(1, 9),
       Rational(1, 9)},
      {z, Rational(1, 9), Rational(2, 9), z, Rational(2, 3)},
      {z, z, z, Rational(1), z},
      {z, z, z, z, Rational(1)},
  };
  return m;
}

TransitionMatrix reduced_chain() {
  const TransitionMatrix five = decision_chain();
  TransitionMatrix m;
  m.labels = {"start_p", "middle_r", "right_q", "stop"};
  m.entries.assign(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.entries[i][j] = five.entries[i][j];
    m.entries[i][3] = five.entries[i][3] + five.entries[i][4];
  }
  m.entries[3][3] = Rational(1);
  return m;
}

TransitionMatrix decision_chain_from_machine() {
  TransitionMatrix m;
  m.labels = five_labels();
  m.entries.assign(5, std::vector<Rational>(5, Rational(0)));
  for (int i = 0; i < 3; ++i) {
    for (GasketSymbol a : kSymbols) {
      for (GasketSymbol b : kSymbols) {
        const CoreStep step = core_step(kTransient[i], a, b, 2);
        m.entries[i][state_column(step.next)] += Rational(1, 9);
      }
    }
  }
  m.entries[3][3] = Rational(1);
  m.entries[4][4] = Rational(1);
  return m;
}

TransitionMatrix reduced_chain_from_machine() {
  const TransitionMatrix five = decision_chain_from_machine();
  TransitionMatrix m;
  m.labels = {"start_p", "middle_r", "right_q", "stop"};
  m.entries.assign(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.entries[i][j] = five.entries[i][j];
    m.entries[i][3] = five.entries[i][3] + five.entries[i][4];
  }
  m.entries[3][3] = Rational(1);
  return m;
}

std::array<Rational, 3> absorption_times() {
  const auto q = transient_block();
  LinearSystem sys;
  sys.coefficients.assign(3, std::vector<Rational>(3));
  sys.rhs.assign(3, Rational(1));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      sys.coefficients[i][j] = (i == j ? Rational(1) : Rational(0)) - q[i][j];
    }
  }
  const auto t = solve_exact(sys);
  return {t[0], t[1], t[2]};
}

Rational expected_reads_finite(int n) {
  if (n < 1) throw std::invalid_argument("need at least one pair");
  const auto q = transient_block();
  std::vector<Rational> v{Rational(1), Rational(0), Rational(0)};
  Rational expected(0);
  for (int j = 0; j < n; ++j) {
    expected += v[0] + v[1] + v[2];
    v = step_mass(q, v);
  }
  return expected;
}

std::vector<Rational> transient_mass(int max_steps) {
  const auto q = transient_block();
  std::vector<Rational> mass;
  mass.reserve(static_cast<std::size_t>(max_steps) + 1);
  std::vector<Rational> v{Rational(1), Rational(0), Rational(0)};
  mass.push_back(Rational(1));
  for (int k = 1; k <= max_steps; ++k) {
    v = step_mass(q, v);
    mass.push_back(v[0] + v[1] + v[2]);
  }
  return mass;
}

TerminalTally terminal_tally(CoreState state) {
  TerminalTally tally;
  for (GasketSymbol a : kSymbols) {
    for (GasketSymbol b : kSymbols) {
      const CoreStep step = core_step(state, a, b, 2);
      if (!step.terminal()) continue;
      ++tally.terminal_pairs;
      const bool alt1 = step.next == CoreState::StopAlt1;
      const GasketSymbol fa = alt1 ? GasketSymbol::R : GasketSymbol::L;
      const GasketSymbol fb = alt1 ? GasketSymbol::T : GasketSymbol::L;
      if (a != fa) ++tally.x_mismatches;
      if (b != fb) ++tally.y_mismatches;
    }
  }
  return tally;
}

Rational terminal_tail_per_word() {
  // Closed form of sum_{j>=2} 2^{-j}: first term 1/4, ratio 1/2.
  const Rational geometric = Rational(1, 4) / (Rational(1) - Rational(1, 2));
  return Rational(2, 3) * geometric;
}

Rational terminal_sum_expectation() {
  const TerminalTally tally = terminal_tally(CoreState::StartP);
  const Rational current =
      Rational(tally.x_mismatches, tally.terminal_pairs) * Rational(1, 2) +
      Rational(tally.y_mismatches, tally.terminal_pairs) * Rational(1, 2);
  return current + 2 * terminal_tail_per_word();
}

std::array<Rational, 4> expected_distance_constants() {
  const Rational half(1, 2);
  const Rational full_sum = terminal_sum_expectation();     // 1/2 + 2/3
  const Rational tails_only = 2 * terminal_tail_per_word(); // 2/3

  // d = A d + c over the four non-terminal states (discard, start_p,
  // middle_r, right_q); each consumed pair halves every later weight.
  LinearSystem sys;
  sys.coefficients.assign(4, std::vector<Rational>(4, Rational(0)));
  sys.rhs.assign(4, Rational(0));
  auto term = [&](int row, Rational prob, Rational base, int var) {
    sys.rhs[row] += prob * base;
    sys.coefficients[row][var] += prob * half;
  };

  term(0, Rational(1, 3), Rational(0), 0);
  term(0, Rational(2, 3), Rational(0), 1);

  term(1, Rational(2, 9), Rational(1), 1);
  term(1, Rational(1, 9), Rational(1), 2);
  sys.rhs[1] += Rational(2, 3) * full_sum;

  term(2, Rational(2, 9), half, 1);
  term(2, Rational(2, 9), half, 2);
  term(2, Rational(1, 9), Rational(1), 2);
  term(2, Rational(2, 9), half, 3);
  sys.rhs[2] += Rational(2, 9) * tails_only;

  term(3, Rational(1, 9), Rational(1), 2);
  term(3, Rational(2, 9), Rational(1), 3);
  sys.rhs[3] += Rational(2, 3) * full_sum;

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      sys.coefficients[i][j] = -sys.coefficients[i][j];
    }
    sys.coefficients[i][i] += 1;
  }
  const auto d = solve_exact(sys);
  return {d[0], d[1], d[2], d[3]};
}

StoppingTimeStats simulate_stopping_time(int n, std::uint64_t samples,
                                         std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  StoppingTimeStats stats;
  stats.n = n;
  stats.samples = samples;
  stats.seed = seed;

  std::mt19937_64 rng(seed);
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    CoreState state = CoreState::StartP;
    std::size_t reads = 0;
    for (int j = 0; j < n; ++j) {
      const GasketSymbol a = random_symbol(rng);
      const GasketSymbol b = random_symbol(rng);
      ++reads;
      state = core_step(state, a, b, 1).next;
      if (is_terminal(state)) break;
    }
    sum += reads;
    sum_squares += static_cast<std::uint64_t>(reads) * reads;
    ++stats.histogram[reads];
  }
  const double count = static_cast<double>(samples);
  stats.mean = static_cast<double>(sum) / count;
  if (samples > 1) {
    const double variance =
        (static_cast<double>(sum_squares) - count * stats.mean * stats.mean) /
        (count - 1.0);
    stats.stddev = std::sqrt(variance > 0 ? variance : 0);
  }
  stats.standard_error = stats.stddev / std::sqrt(count);
  return stats;
}

Rational average_pair_distance_exact(int n) {
  if (n > kMaxExactAverageDiscs) {
    throw TooLargeError("exact average capped at n = " +
                        std::to_string(kMaxExactAverageDiscs));
  }
  const ExplicitGraph g = build_graph(n, GraphKind::Gasket);
  const std::size_t vertices = g.vertex_count();
  BigInt total = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    std::uint64_t row = 0;
    for (std::int32_t d : bfs_distances(g, v)) {
      row += static_cast<std::uint64_t>(d);
    }
    total += row;
  }
  return Rational(total, BigInt(vertices) * vertices);
}

SampledAverageDistance average_pair_distance_sampled(int n,
                                                     std::uint64_t samples,
                                                     std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  SampledAverageDistance out;
  out.n = n;
  out.samples = samples;
  out.seed = seed;

  std::mt19937_64 rng(seed);
  GasketWord x(static_cast<std::size_t>(n));
  GasketWord y(static_cast<std::size_t>(n));
  BigInt sum = 0;
  BigInt sum_squares = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = random_symbol(rng);
      y[static_cast<std::size_t>(i)] = random_symbol(rng);
    }
    const Distance d = distance(x, y);
    sum += d;
    sum_squares += d * d;
  }

  BigInt pow2n = 1;
  pow2n <<= n;
  const BigInt count(samples);
  out.mean = to_double(Rational(sum, count));
  out.ratio_to_pow2n = to_double(Rational(sum, count * pow2n));
  if (samples > 1) {
    const Rational variance =
        (Rational(sum_squares, count) - Rational(sum * sum, count * count)) /
        Rational(samples - 1);
    out.standard_error = std::sqrt(to_double(variance) /
                                   static_cast<double>(samples));
  }
  return out;
}

Rational mean_distance_to_perfect(int n) {
  const std::size_t vertices = [&] {
    std::size_t v = 1;
    for (int i = 0; i < n; ++i) v *= 3;
    return v;
  }();
  BigInt total = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    total += f_alpha(gasket_word_at(n, v), GasketSymbol::T);
  }
  return Rational(total, BigInt(vertices));
}

}  // namespace hanoipath

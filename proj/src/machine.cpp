#include "hanoipath/machine.hpp"

#include <array>

namespace hanoipath {

namespace {

enum class WeightKind : std::uint8_t { None, Full, Half };

struct RawStep {
  CoreState next;
  WeightKind kind;
};

constexpr RawStep kStop1{CoreState::StopAlt1, WeightKind::None};
constexpr RawStep kStop2{CoreState::StopAlt2, WeightKind::None};
constexpr RawStep kStartFull{CoreState::StartP, WeightKind::Full};
constexpr RawStep kStartHalf{CoreState::StartP, WeightKind::Half};
constexpr RawStep kMiddleFull{CoreState::MiddleR, WeightKind::Full};
constexpr RawStep kMiddleHalf{CoreState::MiddleR, WeightKind::Half};
constexpr RawStep kRightFull{CoreState::RightQ, WeightKind::Full};
constexpr RawStep kRightHalf{CoreState::RightQ, WeightKind::Half};

// Transition table of the core machine, indexed [state][a][b] with the
// canonical symbol order T, L, R. Each row realizes one case table of the
// P/Q/R recursion.
constexpr RawStep kCoreTable[3][3][3] = {
    // StartP (the P function)
    {
        {kStop1, kStartFull, kStop1},        // (T,T) (T,L) (T,R)
        {kStop1, kMiddleFull, kStartFull},   // (L,T) (L,L) (L,R)
        {kStop1, kStop1, kStop1},            // (R,T) (R,L) (R,R)
    },
    // MiddleR (the R function)
    {
        {kStartHalf, kRightHalf, kMiddleFull},   // (T,T) (T,L) (T,R)
        {kMiddleHalf, kStop2, kRightHalf},       // (L,T) (L,L) (L,R)
        {kStop1, kMiddleHalf, kStartHalf},       // (R,T) (R,L) (R,R)
    },
    // RightQ (the Q function)
    {
        {kRightFull, kStop2, kStop2},    // (T,T) (T,L) (T,R)
        {kStop2, kStop2, kStop2},        // (L,T) (L,L) (L,R)
        {kMiddleFull, kStop2, kRightFull},  // (R,T) (R,L) (R,R)
    },
};

RawStep raw_step(CoreState state, GasketSymbol a, GasketSymbol b) {
  return kCoreTable[static_cast<int>(state)][static_cast<int>(a)]
                   [static_cast<int>(b)];
}

Distance pow2(std::size_t exponent) {
  Distance d;
  bit_set(d, static_cast<unsigned>(exponent));
  return d;
}

Verdict verdict_for_state(CoreState s) {
  switch (s) {
    case CoreState::StartP: return Verdict::Once;
    case CoreState::MiddleR: return Verdict::Draw;
    case CoreState::RightQ: return Verdict::Twice;
    case CoreState::StopAlt1: return Verdict::Once;
    case CoreState::StopAlt2: return Verdict::Twice;
  }
  return Verdict::Draw;
}

// Reads one word's symbols left to right, straight from a gasket word.
struct GasketSource {
  const GasketSymbol* p;

  GasketSymbol next() { return *p++; }
};

// Reads one word's discs left to right through the relabeling transducer.
struct HanoiSource {
  const PegId* p;
  PegPermutation state;

  GasketSymbol next() {
    auto [out, nx] = transducer_step(state, *p++);
    state = nx;
    return out;
  }
};

template <class Source>
MachineRun run_impl(Source sa, Source sb, std::size_t n, bool want_distance,
                    bool keep_trace) {
  MachineRun run;
  run.distance = 0;
  run.terminal_sum = 0;

  // Phase 1: discard equal most-significant pairs.
  std::size_t pos = 0;
  GasketSymbol a{}, b{};
  bool differs = false;
  while (pos < n) {
    a = sa.next();
    b = sb.next();
    ++pos;
    if (a != b) {
      differs = true;
      break;
    }
    ++run.decision.prefix_discarded;
  }
  run.symbols_read = 2 * pos;
  if (!differs) {
    run.decision.verdict = Verdict::Identical;
    return run;
  }

  // Phase 2: the differing pair fixes the permutation a->T, b->R, third->L
  // and the deterministic d=1 transition enters the core machine.
  run.decision.permutation_pair_read = true;
  std::array<GasketSymbol, 3> perm{};
  perm[static_cast<int>(a)] = GasketSymbol::T;
  perm[static_cast<int>(b)] = GasketSymbol::R;
  perm[static_cast<int>(third_symbol(a, b))] = GasketSymbol::L;

  Distance dist = 1;
  CoreState state = CoreState::StartP;
  std::size_t m = n - pos;  // pairs left, = length including the next pair

  // Phase 3: core iteration until absorption or exhaustion.
  while (m >= 1) {
    const GasketSymbol ca = perm[static_cast<int>(sa.next())];
    const GasketSymbol cb = perm[static_cast<int>(sb.next())];
    run.symbols_read += 2;
    ++run.decision.core_pairs_read;
    const RawStep step = raw_step(state, ca, cb);
    state = step.next;
    if (step.kind == WeightKind::None) {
      if (keep_trace) run.trace.push_back({ca, cb, state, Distance(0)});
      if (want_distance) {
        // Terminal sum over the full current words, this pair included.
        const bool alt1 = state == CoreState::StopAlt1;
        const GasketSymbol fa = alt1 ? GasketSymbol::R : GasketSymbol::L;
        const GasketSymbol fb = alt1 ? GasketSymbol::T : GasketSymbol::L;
        Distance fu = 0, fv = 0;
        if (ca != fa) bit_set(fu, static_cast<unsigned>(m - 1));
        if (cb != fb) bit_set(fv, static_cast<unsigned>(m - 1));
        for (std::size_t k = m - 1; k-- > 0;) {
          const GasketSymbol ta = perm[static_cast<int>(sa.next())];
          const GasketSymbol tb = perm[static_cast<int>(sb.next())];
          run.symbols_read += 2;
          if (ta != fa) bit_set(fu, static_cast<unsigned>(k));
          if (tb != fb) bit_set(fv, static_cast<unsigned>(k));
        }
        run.terminal_sum = fu + fv;
        dist += run.terminal_sum;
      }
      break;
    }
    const std::size_t exponent = step.kind == WeightKind::Full ? m : m - 1;
    const Distance w = pow2(exponent);
    dist += w;
    if (keep_trace) run.trace.push_back({ca, cb, state, w});
    --m;
  }

  run.decision.verdict = verdict_for_state(state);
  run.distance = want_distance ? std::move(dist) : Distance(0);
  return run;
}

}  // namespace

std::string to_string(CoreState s) {
  switch (s) {
    case CoreState::StartP: return "start_p";
    case CoreState::MiddleR: return "middle_r";
    case CoreState::RightQ: return "right_q";
    case CoreState::StopAlt1: return "stop_alt1";
    case CoreState::StopAlt2: return "stop_alt2";
  }
  return "?";
}

TerminalStateStepped::TerminalStateStepped()
    : std::logic_error("core_step on a terminal state") {}

CoreStep core_step(CoreState state, GasketSymbol a, GasketSymbol b,
                   std::size_t m) {
  if (is_terminal(state)) throw TerminalStateStepped();
  const RawStep step = raw_step(state, a, b);
  if (step.kind == WeightKind::None) return {step.next, std::nullopt};
  return {step.next, pow2(step.kind == WeightKind::Full ? m : m - 1)};
}

MachineRun run_machine(const GasketWord& x, const GasketWord& y,
                       bool keep_trace) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  return run_impl(GasketSource{x.data()}, GasketSource{y.data()}, x.size(),
                  /*want_distance=*/true, keep_trace);
}

Decision decide(const GasketWord& x, const GasketWord& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  return run_impl(GasketSource{x.data()}, GasketSource{y.data()}, x.size(),
                  /*want_distance=*/false, /*keep_trace=*/false)
      .decision;
}

Distance distance(const GasketWord& x, const GasketWord& y) {
  return run_machine(x, y).distance;
}

MachineRun run_machine_hanoi(const HanoiWord& x, const HanoiWord& y,
                             bool keep_trace) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  return run_impl(HanoiSource{x.data(), {}}, HanoiSource{y.data(), {}},
                  x.size(), /*want_distance=*/true, keep_trace);
}

Decision decide_hanoi(const HanoiWord& x, const HanoiWord& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  return run_impl(HanoiSource{x.data(), {}}, HanoiSource{y.data(), {}},
                  x.size(), /*want_distance=*/false, /*keep_trace=*/false)
      .decision;
}

Distance distance_hanoi(const HanoiWord& x, const HanoiWord& y) {
  return run_machine_hanoi(x, y).distance;
}

CoreRun run_core(const GasketWord& u, const GasketWord& v) {
  if (u.size() != v.size()) throw LengthMismatchError(u.size(), v.size());
  CoreState state = CoreState::StartP;
  std::size_t reads = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++reads;
    state = raw_step(state, u[i], v[i]).next;
    if (is_terminal(state)) break;
  }
  return {verdict_for_state(state), reads, state};
}

}  // namespace hanoipath

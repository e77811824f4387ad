#include "hanoipath/pathfinder.hpp"

#include "hanoipath/machine.hpp"
#include "hanoipath/transducer.hpp"

#include <algorithm>

namespace hanoipath {

namespace {

// Corner symbol a perfect state on `peg` maps to: the transducer's start
// identification, which re-arises after every repeated input.
GasketSymbol corner_symbol(PegId peg) {
  return PegPermutation().image(peg);
}

// f_alpha over the transduced word, reading each disc once. `reads` counts
// consumed symbols.
Distance transduced_corner_distance(const PegId* discs, std::size_t count,
                                    PegId target, std::size_t& reads) {
  const GasketSymbol alpha = corner_symbol(target);
  PegPermutation state;
  Distance d = 0;
  for (std::size_t i = 0; i < count; ++i) {
    auto [symbol, next] = transducer_step(state, discs[i]);
    state = next;
    ++reads;
    if (symbol != alpha) bit_set(d, static_cast<unsigned>(count - 1 - i));
  }
  return d;
}

// Canonical perfect-to-perfect transfer of discs m..1, 2^m - 1 moves.
void perfect_transfer(int m, PegId from, PegId to, std::vector<Move>& out) {
  if (m == 0) return;
  const PegId spare = third_peg(from, to);
  perfect_transfer(m - 1, from, spare, out);
  out.push_back({m, from, to});
  perfect_transfer(m - 1, spare, to, out);
}

// Route discs k..1 (word positions x.size()-k ..) to the perfect state on
// `target`. Positions of discs not yet moved are read from x: the recursion
// only consults a disc before any move touches it.
void p1_build(const HanoiWord& x, int k, PegId target,
              std::vector<Move>& out) {
  while (k > 0) {
    const PegId s = x[x.size() - static_cast<std::size_t>(k)];
    if (s == target) {
      --k;
      continue;
    }
    const PegId spare = third_peg(s, target);
    p1_build(x, k - 1, spare, out);
    out.push_back({k, s, target});
    perfect_transfer(k - 1, spare, target, out);
    return;
  }
}

// Moves that undo `moves`, in reverse order.
std::vector<Move> reversed(std::vector<Move> moves) {
  std::reverse(moves.begin(), moves.end());
  for (Move& m : moves) std::swap(m.from, m.to);
  return moves;
}

// Index of the first (largest) differing disc, or size() when equal.
std::size_t first_difference(const HanoiWord& x, const HanoiWord& y) {
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  return i;
}

MovePath assemble_p2(const HanoiWord& x, const HanoiWord& y, std::size_t diff,
                     Verdict alternative) {
  const std::size_t n = x.size();
  const int m = static_cast<int>(n - diff);  // largest differing disc
  const PegId s = x[diff];
  const PegId t = y[diff];
  const PegId o = third_peg(s, t);

  const HanoiWord x_low(x.begin() + static_cast<std::ptrdiff_t>(diff) + 1,
                        x.end());
  const HanoiWord y_low(y.begin() + static_cast<std::ptrdiff_t>(diff) + 1,
                        y.end());

  MovePath path;
  path.start = x;
  if (alternative == Verdict::Twice) {
    p1_build(x_low, m - 1, t, path.moves);
    path.moves.push_back({m, s, o});
    perfect_transfer(m - 1, t, s, path.moves);
    path.moves.push_back({m, o, t});
    std::vector<Move> back;
    p1_build(y_low, m - 1, s, back);
    back = reversed(std::move(back));
    path.moves.insert(path.moves.end(), back.begin(), back.end());
  } else {
    p1_build(x_low, m - 1, o, path.moves);
    path.moves.push_back({m, s, t});
    std::vector<Move> back;
    p1_build(y_low, m - 1, o, back);
    back = reversed(std::move(back));
    path.moves.insert(path.moves.end(), back.begin(), back.end());
  }
  return path;
}

}  // namespace

Distance p1_distance(const HanoiWord& x, PegId target) {
  std::size_t reads = 0;
  return transduced_corner_distance(x.data(), x.size(), target, reads);
}

MovePath p1_path(const HanoiWord& x, PegId target) {
  MovePath path;
  path.start = x;
  p1_build(x, static_cast<int>(x.size()), target, path.moves);
  return path;
}

MovePath p2_path(const HanoiWord& x, const HanoiWord& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  const std::size_t diff = first_difference(x, y);
  if (diff == x.size()) return {x, {}};
  const Verdict v = decide_hanoi(x, y).verdict;
  return assemble_p2(x, y, diff, v == Verdict::Twice ? Verdict::Twice
                                                     : Verdict::Once);
}

MovePath p2_path_with(const HanoiWord& x, const HanoiWord& y,
                      Verdict alternative) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  if (alternative != Verdict::Once && alternative != Verdict::Twice) {
    throw std::invalid_argument("alternative must be Once or Twice");
  }
  const std::size_t diff = first_difference(x, y);
  if (diff == x.size()) throw IdenticalStatesError();
  return assemble_p2(x, y, diff, alternative);
}

AlternativeCosts both_alternative_costs(const HanoiWord& x,
                                        const HanoiWord& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  const std::size_t diff = first_difference(x, y);
  if (diff == x.size()) throw IdenticalStatesError();

  AlternativeCosts costs;
  costs.symbols_read = 2 * (diff + 1);  // the shared scan, mismatch included

  const std::size_t low = x.size() - diff - 1;  // discs below the differing one
  const PegId s = x[diff];
  const PegId t = y[diff];
  const PegId o = third_peg(s, t);
  const PegId* xl = x.data() + diff + 1;
  const PegId* yl = y.data() + diff + 1;

  costs.alt1 = 1 + transduced_corner_distance(xl, low, o, costs.symbols_read) +
               transduced_corner_distance(yl, low, o, costs.symbols_read);

  Distance twice_base;
  bit_set(twice_base, static_cast<unsigned>(low));  // 2^{m-1}
  costs.alt2 = twice_base + 1 +
               transduced_corner_distance(xl, low, t, costs.symbols_read) +
               transduced_corner_distance(yl, low, s, costs.symbols_read);

  costs.minimum = costs.alt1 < costs.alt2 ? costs.alt1 : costs.alt2;
  return costs;
}

AlternativeCosts both_alternative_costs_sg(const GasketWord& x,
                                           const GasketWord& y) {
  return both_alternative_costs(sg_to_hanoi(x), sg_to_hanoi(y));
}

}  // namespace hanoipath

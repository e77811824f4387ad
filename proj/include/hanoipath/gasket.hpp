#pragma once

#include "hanoipath/core.hpp"

namespace hanoipath {

// The two-argument min functions behind the distance recursion:
//   P = min(alt1_sum, 2^n + alt2_sum)
//   Q = min(2^n + alt1_sum, alt2_sum)
//   R = min(alt1_sum, alt2_sum)
// with alt1_sum = f_R(u) + f_T(v), alt2_sum = f_L(u) + f_L(v) and n the
// current word length.
enum class PqrKind : std::uint8_t { P, Q, R };

// Sum of 2^k over positions k (k = 0 rightmost) where u differs from alpha.
// This is the distance from u to the all-alpha corner.
Distance f_alpha(const GasketWord& u, GasketSymbol alpha);

// Neighbors of u in SG_n: the two sibling words (last symbol replaced) plus,
// when the maximal constant suffix is shorter than the whole word, the
// partner across the sub-triangle boundary (suffix b a..a <-> a b..b).
// Corners (constant words) have degree 2, everything else degree 3.
// Results are sorted in base-3 word order.
std::vector<GasketWord> sg_neighbors(const GasketWord& u);

// Closed-form evaluation of P/Q/R (the definition).
Distance pqr_eval(PqrKind kind, const GasketWord& u, const GasketWord& v);

// Case-table evaluation of P/Q/R: consume the leading pair, add 2^m or
// 2^{m-1} (m = length including the consumed pair) and recurse, or stop on a
// terminal pair and return the designated sum over the full current words.
// Agrees with pqr_eval on all inputs.
Distance pqr_recurse(PqrKind kind, const GasketWord& u, const GasketWord& v);

// Reference distance on SG_n: strip the common most-significant prefix,
// canonicalize the first differing pair (a,b) by a->T, b->R, third->L, and
// return 1 + P on the canonicalized tails.
Distance sg_distance_reference(const GasketWord& x, const GasketWord& y);

}  // namespace hanoipath

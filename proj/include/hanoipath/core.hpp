#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hanoipath {

// Arbitrary-precision integer: distances reach 2^n - 1 and n is not capped
// by a machine word anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Distance = BigInt;
using Rational = boost::multiprecision::cpp_rational;

// Vertex alphabet of the discrete Sierpinski gasket. The numeric values
// double as base-3 digits (T=0, L=1, R=2) for dense vertex indexing.
enum class GasketSymbol : std::uint8_t { T = 0, L = 1, R = 2 };

// Peg labels 0,1,2. The start identification of the transducer maps
// peg 0 to T, 1 to L, 2 to R.
using PegId = std::uint8_t;

// Words are most-significant-first: symbols[0] is the macro-triangle of a
// gasket vertex, pegs[0] is the peg of the largest disc.
using GasketWord = std::vector<GasketSymbol>;
using HanoiWord = std::vector<PegId>;

char to_char(GasketSymbol s);
GasketSymbol third_symbol(GasketSymbol a, GasketSymbol b);
PegId third_peg(PegId a, PegId b);

// One disc move. Disc n is the largest, disc 1 the smallest, so a word's
// index 0 holds disc n.
struct Move {
  int disc = 0;
  PegId from = 0;
  PegId to = 0;

  bool operator==(const Move&) const = default;
};

struct MovePath {
  HanoiWord start;
  std::vector<Move> moves;
};

enum class Verdict : std::uint8_t { Once, Twice, Draw, Identical };

// Outcome of the once-vs-twice decision plus read accounting. The counters
// split the three reading phases: equal most-significant pairs discarded,
// the single differing pair that selects the symbol permutation, and the
// pairs consumed by the core machine afterwards.
struct Decision {
  Verdict verdict = Verdict::Identical;
  std::size_t core_pairs_read = 0;
  std::size_t prefix_discarded = 0;
  bool permutation_pair_read = false;

  bool operator==(const Decision&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, char offending);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LengthMismatchError : public std::invalid_argument {
 public:
  LengthMismatchError(std::size_t lhs, std::size_t rhs);
};

class EmptyWordError : public std::invalid_argument {
 public:
  EmptyWordError();
};

class TooLargeError : public std::invalid_argument {
 public:
  explicit TooLargeError(const std::string& what);
};

class IdenticalStatesError : public std::invalid_argument {
 public:
  IdenticalStatesError();
};

enum class MoveFault : std::uint8_t { DiscNotTop, SmallerDiscAtDestination };

class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(std::size_t index, MoveFault reason);
  std::size_t index() const { return index_; }
  MoveFault reason() const { return reason_; }

 private:
  std::size_t index_;
  MoveFault reason_;
};

// Parsing accepts exactly the canonical textual forms: uppercase TLR for
// gasket words, digits 012 for Hanoi words. Empty strings are the n = 0
// words.
GasketWord parse_gasket_word(std::string_view text);
HanoiWord parse_hanoi_word(std::string_view text);

std::string to_string(const GasketWord& w);
std::string to_string(const HanoiWord& w);
std::string to_string(Verdict v);
std::string to_string(const Move& m);  // "disc:from->to"

// Renders exact rationals as "p/q" ("p" when q = 1).
std::string to_fraction_string(const Rational& r);

// Applies the moves to path.start, validating legality of every move, and
// returns the end state. Throws IllegalMoveError at the first bad move.
HanoiWord replay(const MovePath& path);

}  // namespace hanoipath

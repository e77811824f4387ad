#include "hanoipath/core.hpp"

#include <array>
#include <sstream>

namespace hanoipath {

char to_char(GasketSymbol s) {
  switch (s) {
    case GasketSymbol::T: return 'T';
    case GasketSymbol::L: return 'L';
    case GasketSymbol::R: return 'R';
  }
  return '?';
}

GasketSymbol third_symbol(GasketSymbol a, GasketSymbol b) {
  return static_cast<GasketSymbol>(3 - static_cast<int>(a) - static_cast<int>(b));
}

PegId third_peg(PegId a, PegId b) {
  return static_cast<PegId>(3 - a - b);
}

ParseError::ParseError(std::size_t position, char offending)
    : std::invalid_argument("invalid symbol '" + std::string(1, offending) +
                            "' at position " + std::to_string(position)),
      position_(position) {}

LengthMismatchError::LengthMismatchError(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("word lengths differ: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

EmptyWordError::EmptyWordError()
    : std::invalid_argument("operation undefined on the empty word") {}

TooLargeError::TooLargeError(const std::string& what)
    : std::invalid_argument(what) {}

IdenticalStatesError::IdenticalStatesError()
    : std::invalid_argument("states are identical; no differing disc") {}

namespace {

const char* fault_name(MoveFault f) {
  return f == MoveFault::DiscNotTop ? "disc is not the top of its peg"
                                    : "a smaller disc sits at the destination";
}

}  // namespace

IllegalMoveError::IllegalMoveError(std::size_t index, MoveFault reason)
    : std::runtime_error("illegal move at index " + std::to_string(index) +
                         ": " + fault_name(reason)),
      index_(index),
      reason_(reason) {}

GasketWord parse_gasket_word(std::string_view text) {
  GasketWord w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'T': w.push_back(GasketSymbol::T); break;
      case 'L': w.push_back(GasketSymbol::L); break;
      case 'R': w.push_back(GasketSymbol::R); break;
      default: throw ParseError(i, text[i]);
    }
  }
  return w;
}

HanoiWord parse_hanoi_word(std::string_view text) {
  HanoiWord w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '2') throw ParseError(i, text[i]);
    w.push_back(static_cast<PegId>(text[i] - '0'));
  }
  return w;
}

std::string to_string(const GasketWord& w) {
  std::string s;
  s.reserve(w.size());
  for (GasketSymbol c : w) s.push_back(to_char(c));
  return s;
}

std::string to_string(const HanoiWord& w) {
  std::string s;
  s.reserve(w.size());
  for (PegId p : w) s.push_back(static_cast<char>('0' + p));
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Once: return "once";
    case Verdict::Twice: return "twice";
    case Verdict::Draw: return "draw";
    case Verdict::Identical: return "identical";
  }
  return "?";
}

std::string to_string(const Move& m) {
  return std::to_string(m.disc) + ":" + std::to_string(m.from) + "->" +
         std::to_string(m.to);
}

std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

HanoiWord replay(const MovePath& path) {
  const std::size_t n = path.start.size();
  HanoiWord state = path.start;
  // Discs on each peg, largest at the bottom; words list discs largest
  // first, so pushing in order keeps each stack sorted.
  std::array<std::vector<int>, 3> pegs;
  for (std::size_t i = 0; i < n; ++i) {
    pegs[path.start[i]].push_back(static_cast<int>(n - i));
  }
  for (std::size_t idx = 0; idx < path.moves.size(); ++idx) {
    const Move& m = path.moves[idx];
    if (m.disc < 1 || static_cast<std::size_t>(m.disc) > n || m.from > 2 ||
        m.to > 2 || m.from == m.to) {
      throw std::invalid_argument("malformed move at index " +
                                  std::to_string(idx));
    }
    auto& src = pegs[m.from];
    if (src.empty() || src.back() != m.disc) {
      throw IllegalMoveError(idx, MoveFault::DiscNotTop);
    }
    auto& dst = pegs[m.to];
    if (!dst.empty() && dst.back() < m.disc) {
      throw IllegalMoveError(idx, MoveFault::SmallerDiscAtDestination);
    }
    src.pop_back();
    dst.push_back(m.disc);
    state[n - static_cast<std::size_t>(m.disc)] = m.to;
  }
  return state;
}

}  // namespace hanoipath

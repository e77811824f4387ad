#pragma once

#include "hanoipath/core.hpp"

#include <array>

namespace hanoipath {

// Internal state of the peg-relabeling transducer: a bijection from pegs
// {0,1,2} to symbols {T,L,R}. The start state is 0=T, 1=L, 2=R; there are
// six states in total.
class PegPermutation {
 public:
  constexpr PegPermutation()
      : image_{GasketSymbol::T, GasketSymbol::L, GasketSymbol::R} {}
  constexpr explicit PegPermutation(std::array<GasketSymbol, 3> image)
      : image_(image) {}

  constexpr GasketSymbol image(PegId peg) const { return image_[peg]; }

  // The peg currently identified with the given symbol.
  PegId preimage(GasketSymbol s) const;

  bool operator==(const PegPermutation&) const = default;

 private:
  std::array<GasketSymbol, 3> image_;
};

struct TransducerStep {
  GasketSymbol output;
  PegPermutation next;
};

// One transition: emit the symbol currently identified with the input peg,
// then swap the identifications of the other two pegs. Every transition is
// an involution.
TransducerStep transducer_step(const PegPermutation& state, PegId input);

// The graph isomorphism H_n -> SG_n: run the transducer from the start
// state over the discs, largest first.
GasketWord hanoi_to_sg(const HanoiWord& h);

// Inverse map: emit the peg currently identified with each symbol.
HanoiWord sg_to_hanoi(const GasketWord& g);

}  // namespace hanoipath

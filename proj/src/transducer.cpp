#include "hanoipath/transducer.hpp"

namespace hanoipath {

PegId PegPermutation::preimage(GasketSymbol s) const {
  for (PegId p = 0; p < 3; ++p) {
    if (image_[p] == s) return p;
  }
  return 0;  // unreachable: image_ is a bijection
}

TransducerStep transducer_step(const PegPermutation& state, PegId input) {
  const PegId a = (input + 1) % 3;
  const PegId b = (input + 2) % 3;
  std::array<GasketSymbol, 3> next{state.image(0), state.image(1),
                                   state.image(2)};
  std::swap(next[a], next[b]);
  return {state.image(input), PegPermutation(next)};
}

GasketWord hanoi_to_sg(const HanoiWord& h) {
  GasketWord out;
  out.reserve(h.size());
  PegPermutation state;
  for (PegId p : h) {
    auto [symbol, next] = transducer_step(state, p);
    out.push_back(symbol);
    state = next;
  }
  return out;
}

HanoiWord sg_to_hanoi(const GasketWord& g) {
  HanoiWord out;
  out.reserve(g.size());
  PegPermutation state;
  for (GasketSymbol s : g) {
    const PegId p = state.preimage(s);
    out.push_back(p);
    state = transducer_step(state, p).next;
  }
  return out;
}

}  // namespace hanoipath

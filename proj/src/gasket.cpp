#include "hanoipath/gasket.hpp"

#include <algorithm>
#include <array>

namespace hanoipath {

namespace {

void add_pow2(Distance& d, std::size_t exponent) {
  Distance bit;
  bit_set(bit, static_cast<unsigned>(exponent));
  d += bit;
}

Distance pow2(std::size_t exponent) {
  Distance bit;
  bit_set(bit, static_cast<unsigned>(exponent));
  return bit;
}

// f_R(u) + f_T(v) over whole words.
Distance alt1_sum(const GasketWord& u, const GasketWord& v) {
  return f_alpha(u, GasketSymbol::R) + f_alpha(v, GasketSymbol::T);
}

// f_L(u) + f_L(v) over whole words.
Distance alt2_sum(const GasketWord& u, const GasketWord& v) {
  return f_alpha(u, GasketSymbol::L) + f_alpha(v, GasketSymbol::L);
}

Distance pqr_recurse_impl(PqrKind kind, const GasketWord& u,
                          const GasketWord& v, std::size_t offset) {
  const std::size_t m = u.size() - offset;
  if (m == 0) return 0;

  auto tail_sum = [&](GasketSymbol au, GasketSymbol av) {
    Distance d = 0;
    for (std::size_t i = offset; i < u.size(); ++i) {
      const std::size_t k = u.size() - 1 - i;
      if (u[i] != au) add_pow2(d, k);
      if (v[i] != av) add_pow2(d, k);
    }
    return d;
  };
  auto alt1 = [&] { return tail_sum(GasketSymbol::R, GasketSymbol::T); };
  auto alt2 = [&] { return tail_sum(GasketSymbol::L, GasketSymbol::L); };
  auto next = [&](PqrKind k2, std::size_t exponent) {
    return pow2(exponent) + pqr_recurse_impl(k2, u, v, offset + 1);
  };

  const GasketSymbol c = u[offset];
  const GasketSymbol d = v[offset];
  const bool ct = c == GasketSymbol::T, cl = c == GasketSymbol::L;
  const bool dt = d == GasketSymbol::T, dl = d == GasketSymbol::L;
  const bool dr = d == GasketSymbol::R;

  switch (kind) {
    case PqrKind::P:
      if (ct && dl) return next(PqrKind::P, m);
      if (cl && dr) return next(PqrKind::P, m);
      if (cl && dl) return next(PqrKind::R, m);
      return alt1();
    case PqrKind::Q:
      if (ct && dt) return next(PqrKind::Q, m);
      if (!ct && !cl && dr) return next(PqrKind::Q, m);  // RR
      if (!ct && !cl && dt) return next(PqrKind::R, m);  // RT
      return alt2();
    case PqrKind::R:
      if (!ct && !cl && dt) return alt1();  // RT
      if (cl && dl) return alt2();          // LL
      if (cl && dt) return next(PqrKind::R, m - 1);
      if (!ct && !cl && dl) return next(PqrKind::R, m - 1);  // RL
      if (ct && dr) return next(PqrKind::R, m);
      if (ct && dt) return next(PqrKind::P, m - 1);
      if (!ct && !cl && dr) return next(PqrKind::P, m - 1);  // RR
      return next(PqrKind::Q, m - 1);  // TL, LR
  }
  return 0;
}

}  // namespace

Distance f_alpha(const GasketWord& u, GasketSymbol alpha) {
  Distance d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != alpha) bit_set(d, static_cast<unsigned>(u.size() - 1 - i));
  }
  return d;
}

std::vector<GasketWord> sg_neighbors(const GasketWord& u) {
  const std::size_t n = u.size();
  if (n == 0) throw EmptyWordError();

  std::vector<GasketWord> out;
  out.reserve(3);
  const GasketSymbol last = u.back();
  for (int s = 0; s < 3; ++s) {
    const auto beta = static_cast<GasketSymbol>(s);
    if (beta == last) continue;
    GasketWord w = u;
    w.back() = beta;
    out.push_back(std::move(w));
  }

  // Tail = maximal constant suffix. A word w beta alpha..alpha is adjacent
  // to w alpha beta..beta across the boundary of their common sub-triangle.
  std::size_t tail = 1;
  while (tail < n && u[n - 1 - tail] == last) ++tail;
  if (tail < n) {
    GasketWord w = u;
    const GasketSymbol beta = u[n - 1 - tail];
    w[n - 1 - tail] = last;
    for (std::size_t i = n - tail; i < n; ++i) w[i] = beta;
    out.push_back(std::move(w));
  }

  std::sort(out.begin(), out.end());
  return out;
}

Distance pqr_eval(PqrKind kind, const GasketWord& u, const GasketWord& v) {
  if (u.size() != v.size()) throw LengthMismatchError(u.size(), v.size());
  const std::size_t n = u.size();
  if (n == 0) return 0;
  Distance first = alt1_sum(u, v);
  Distance second = alt2_sum(u, v);
  if (kind == PqrKind::P) second += pow2(n);
  if (kind == PqrKind::Q) first += pow2(n);
  return first < second ? first : second;
}

Distance pqr_recurse(PqrKind kind, const GasketWord& u, const GasketWord& v) {
  if (u.size() != v.size()) throw LengthMismatchError(u.size(), v.size());
  return pqr_recurse_impl(kind, u, v, 0);
}

Distance sg_distance_reference(const GasketWord& x, const GasketWord& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return 0;

  // Uniform symbol permutations are graph automorphisms, so mapping the
  // differing pair (a,b) to (T,R) reduces to the analyzed corner case.
  std::array<GasketSymbol, 3> perm{};
  const GasketSymbol a = x[i], b = y[i];
  perm[static_cast<int>(a)] = GasketSymbol::T;
  perm[static_cast<int>(b)] = GasketSymbol::R;
  perm[static_cast<int>(third_symbol(a, b))] = GasketSymbol::L;

  GasketWord xt, yt;
  xt.reserve(x.size() - i - 1);
  yt.reserve(x.size() - i - 1);
  for (std::size_t j = i + 1; j < x.size(); ++j) {
    xt.push_back(perm[static_cast<int>(x[j])]);
    yt.push_back(perm[static_cast<int>(y[j])]);
  }
  return 1 + pqr_eval(PqrKind::P, xt, yt);
}

}  // namespace hanoipath

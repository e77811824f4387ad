#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hanoipath/gasket.hpp"
#include "hanoipath/oracle.hpp"

#include <algorithm>
#include <random>

using namespace hanoipath;

namespace {

GasketWord g(const char* s) { return parse_gasket_word(s); }

GasketWord random_word(std::mt19937_64& rng, int n) {
  GasketWord w(static_cast<std::size_t>(n));
  for (auto& c : w) c = static_cast<GasketSymbol>(rng() % 3);
  return w;
}

std::size_t pow3(int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

}  // namespace

TEST_CASE("corner distance formula") {
  CHECK(f_alpha(g("TRL"), GasketSymbol::L) == 6);  // 4 + 2
  CHECK(f_alpha(g("TTT"), GasketSymbol::T) == 0);
  CHECK(f_alpha(g("LL"), GasketSymbol::R) == 3);   // 2 + 1
  CHECK(f_alpha(g(""), GasketSymbol::T) == 0);
}

TEST_CASE("the three corner sums cover each position twice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    const GasketWord w = random_word(rng, n);
    const Distance total = f_alpha(w, GasketSymbol::T) +
                           f_alpha(w, GasketSymbol::L) +
                           f_alpha(w, GasketSymbol::R);
    CHECK(total == 2 * ((Distance(1) << n) - 1));
    CHECK(f_alpha(w, GasketSymbol::T) <= (Distance(1) << n) - 1);
  }
}

TEST_CASE("neighbor rule") {
  auto names = [](const GasketWord& w) {
    std::vector<std::string> out;
    for (const GasketWord& v : sg_neighbors(w)) out.push_back(to_string(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(names(g("TL")) == std::vector<std::string>{"LT", "TR", "TT"});
  CHECK(names(g("LL")) == std::vector<std::string>{"LR", "LT"});
  CHECK(names(g("T")) == std::vector<std::string>{"L", "R"});
  CHECK_THROWS_AS(sg_neighbors(g("")), EmptyWordError);
}

TEST_CASE("neighbor sets are symmetric with the right degrees") {
  for (int n = 1; n <= 5; ++n) {
    const std::size_t vertices = pow3(n);
    std::size_t corners = 0;
    for (std::size_t i = 0; i < vertices; ++i) {
      const GasketWord w = gasket_word_at(n, i);
      const auto nbrs = sg_neighbors(w);
      CHECK((nbrs.size() == 2 || nbrs.size() == 3));
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      if (nbrs.size() == 2) ++corners;
      for (const GasketWord& v : nbrs) {
        const auto back = sg_neighbors(v);
        CHECK(std::find(back.begin(), back.end(), w) != back.end());
      }
    }
    CHECK(corners == 3);
  }
}

TEST_CASE("closed-form P, Q, R") {
  CHECK(pqr_eval(PqrKind::P, g("L"), g("L")) == 2);  // min(1+1, 2+0+0)
  CHECK(pqr_eval(PqrKind::R, g(""), g("")) == 0);
  CHECK(pqr_eval(PqrKind::Q, g("T"), g("T")) == 2);  // min(2+1+0, 1+1)
  CHECK_THROWS_AS(pqr_eval(PqrKind::P, g("T"), g("TT")),
                  LengthMismatchError);
}

TEST_CASE("case-table P, Q, R single steps") {
  CHECK(pqr_recurse(PqrKind::P, g("L"), g("L")) == 2);  // 2^1 + r(e,e)
  CHECK(pqr_recurse(PqrKind::R, g("T"), g("R")) == 2);  // 2^1 + r(e,e)
  CHECK(pqr_recurse(PqrKind::P, g("T"), g("L")) == 2);  // 2^1 + p(e,e)
  CHECK_THROWS_AS(pqr_recurse(PqrKind::R, g("TL"), g("L")),
                  LengthMismatchError);
}

TEST_CASE("case table agrees with the closed form on every pair, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    const std::size_t vertices = pow3(n);
    std::vector<GasketWord> words(vertices);
    for (std::size_t i = 0; i < vertices; ++i) words[i] = gasket_word_at(n, i);
    std::size_t mismatches = 0;
    for (std::size_t a = 0; a < vertices; ++a) {
      for (std::size_t b = 0; b < vertices; ++b) {
        for (PqrKind kind : {PqrKind::P, PqrKind::Q, PqrKind::R}) {
          if (pqr_eval(kind, words[a], words[b]) !=
              pqr_recurse(kind, words[a], words[b])) {
            ++mismatches;
          }
        }
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("reference distance examples") {
  // Both frozen values confirmed by the BFS cross-check below.
  CHECK(sg_distance_reference(g("TL"), g("RL")) == 3);
  CHECK(sg_distance_reference(g("TTTT"), g("LLLL")) == 15);
  CHECK(sg_distance_reference(g(""), g("")) == 0);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const GasketWord w = random_word(rng, 9);
    CHECK(sg_distance_reference(w, w) == 0);
  }
}

TEST_CASE("reference distance equals BFS, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const ExplicitGraph graph = build_graph(n, GraphKind::Gasket);
    for (std::size_t s = 0; s < graph.vertex_count(); ++s) {
      const auto dist = bfs_distances(graph, s);
      const GasketWord x = gasket_word_at(n, s);
      for (std::size_t t = 0; t < graph.vertex_count(); ++t) {
        CHECK(sg_distance_reference(x, gasket_word_at(n, t)) ==
              Distance(dist[t]));
      }
    }
  }
}

TEST_CASE("reference distance is symmetric") {
  for (int n = 0; n <= 5; ++n) {
    const std::size_t vertices = pow3(n);
    for (std::size_t a = 0; a < vertices; ++a) {
      for (std::size_t b = a + 1; b < vertices; ++b) {
        const GasketWord x = gasket_word_at(n, a);
        const GasketWord y = gasket_word_at(n, b);
        CHECK(sg_distance_reference(x, y) == sg_distance_reference(y, x));
      }
    }
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = static_cast<int>(rng() % 21);
    const GasketWord x = random_word(rng, n);
    const GasketWord y = random_word(rng, n);
    CHECK(sg_distance_reference(x, y) == sg_distance_reference(y, x));
  }
}

TEST_CASE("triangle inequality on random triples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = static_cast<int>(rng() % 11);
    const GasketWord x = random_word(rng, n);
    const GasketWord y = random_word(rng, n);
    const GasketWord z = random_word(rng, n);
    CHECK(sg_distance_reference(x, z) <=
          sg_distance_reference(x, y) + sg_distance_reference(y, z));
  }
}

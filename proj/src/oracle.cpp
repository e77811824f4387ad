#include "hanoipath/oracle.hpp"

#include "hanoipath/gasket.hpp"
#include "hanoipath/machine.hpp"
#include "hanoipath/pathfinder.hpp"
#include "hanoipath/transducer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hanoipath {

namespace {

std::size_t pow3(int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

template <class Word>
std::size_t index_of(const Word& w) {
  std::size_t idx = 0;
  for (auto c : w) idx = idx * 3 + static_cast<std::size_t>(c);
  return idx;
}

std::vector<std::int32_t> bfs_from(const ExplicitGraph& g, std::size_t source) {
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::vector<std::int32_t> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(static_cast<std::int32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t u = queue[head];
    for (int j = 0; j < g.degree[static_cast<std::size_t>(u)]; ++j) {
      const std::int32_t v = g.neighbors[static_cast<std::size_t>(u)]
                                        [static_cast<std::size_t>(j)];
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] =
            dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::string pair_text(int n, std::size_t xi, std::size_t yi, GraphKind kind) {
  if (kind == GraphKind::Gasket) {
    return "x=" + to_string(gasket_word_at(n, xi)) +
           " y=" + to_string(gasket_word_at(n, yi));
  }
  return "x=" + to_string(hanoi_word_at(n, xi)) +
         " y=" + to_string(hanoi_word_at(n, yi));
}

CheckResult check_graph_shape(int n, GraphKind kind) {
  CheckResult res;
  res.name = std::string("graph_shape_") +
             (kind == GraphKind::Gasket ? "sg" : "hanoi") + "_n" +
             std::to_string(n);
  const ExplicitGraph g = build_graph(n, kind);
  const std::size_t vertices = pow3(n);
  const std::size_t edges = n == 0 ? 0 : (pow3(n + 1) - 3) / 2;
  if (g.vertex_count() != vertices) {
    res.detail = "vertex count " + std::to_string(g.vertex_count());
    return res;
  }
  if (g.edge_count() != edges) {
    res.detail = "edge count " + std::to_string(g.edge_count()) +
                 " expected " + std::to_string(edges);
    return res;
  }
  std::size_t degree2 = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (n >= 1 && g.degree[v] != 2 && g.degree[v] != 3) {
      res.detail = "vertex " + std::to_string(v) + " has degree " +
                   std::to_string(g.degree[v]);
      return res;
    }
    if (g.degree[v] == 2) ++degree2;
  }
  if (n >= 1 && degree2 != 3) {
    res.detail = std::to_string(degree2) + " degree-2 vertices";
    return res;
  }
  res.pass = true;
  res.detail = std::to_string(vertices) + " vertices, " +
               std::to_string(edges) + " edges";
  return res;
}

CheckResult check_isomorphism(int n) {
  CheckResult res;
  res.name = "isomorphism_n" + std::to_string(n);
  const ExplicitGraph hanoi = build_graph(n, GraphKind::Hanoi);
  const ExplicitGraph gasket = build_graph(n, GraphKind::Gasket);
  const std::size_t vertices = hanoi.vertex_count();

  std::vector<std::int32_t> image(vertices, -1);
  std::vector<char> hit(vertices, 0);
  for (std::size_t v = 0; v < vertices; ++v) {
    const std::size_t gi = index_of(hanoi_to_sg(hanoi_word_at(n, v)));
    image[v] = static_cast<std::int32_t>(gi);
    if (hit[gi]) {
      res.detail = "image collision at " + to_string(hanoi_word_at(n, v));
      return res;
    }
    hit[gi] = 1;
  }
  std::size_t mapped_edges = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    for (int j = 0; j < hanoi.degree[v]; ++j) {
      const auto w = static_cast<std::size_t>(hanoi.neighbors[v][j]);
      const auto gv = static_cast<std::size_t>(image[v]);
      const auto gw = image[w];
      const auto& nb = gasket.neighbors[gv];
      if (std::find(nb.begin(), nb.begin() + gasket.degree[gv], gw) ==
          nb.begin() + gasket.degree[gv]) {
        res.detail = "edge " + to_string(hanoi_word_at(n, v)) + " -- " +
                     to_string(hanoi_word_at(n, w)) + " has no image";
        return res;
      }
      ++mapped_edges;
    }
  }
  if (mapped_edges / 2 != gasket.edge_count()) {
    res.detail = "edge counts differ";
    return res;
  }
  for (PegId peg = 0; peg < 3; ++peg) {
    const GasketWord corner = hanoi_to_sg(HanoiWord(n, peg));
    if (std::adjacent_find(corner.begin(), corner.end(),
                           std::not_equal_to<>()) != corner.end()) {
      res.detail = "perfect state on peg " + std::to_string(peg) +
                   " does not map to a corner";
      return res;
    }
  }
  res.pass = true;
  res.detail = std::to_string(hanoi.edge_count()) + " edges mapped";
  return res;
}

CheckResult check_paths(int n, bool exhaustive, std::mt19937_64& rng) {
  CheckResult res;
  res.name = std::string("paths_n") + std::to_string(n) +
             (exhaustive ? "_exhaustive" : "_sampled");
  const ExplicitGraph hanoi = build_graph(n, GraphKind::Hanoi);
  const std::size_t vertices = hanoi.vertex_count();

  // p1 optimality against BFS from each perfect state.
  for (PegId t = 0; t < 3; ++t) {
    const HanoiWord perfect(n, t);
    const auto dist = bfs_from(hanoi, index_of(perfect));
    for (std::size_t v = 0; v < vertices; ++v) {
      const HanoiWord x = hanoi_word_at(n, v);
      const MovePath path = p1_path(x, t);
      if (path.moves.size() != static_cast<std::size_t>(dist[v]) ||
          replay(path) != perfect ||
          Distance(dist[v]) != p1_distance(x, t)) {
        res.detail = "p1 failure at x=" + to_string(x) + " target " +
                     std::to_string(t);
        return res;
      }
    }
  }

  auto check_pair = [&](std::size_t xi, std::size_t yi) -> bool {
    const HanoiWord x = hanoi_word_at(n, xi);
    const HanoiWord y = hanoi_word_at(n, yi);
    const Decision decision = decide_hanoi(x, y);
    const Distance d = distance_hanoi(x, y);
    const MovePath path = p2_path(x, y);
    if (replay(path) != y) return false;
    if (Distance(path.moves.size()) != d) return false;
    if (decision.verdict == Verdict::Identical) return path.moves.size() == 0;
    const int m = static_cast<int>(n) -
                  static_cast<int>(decision.prefix_discarded);
    std::size_t big_moves = 0;
    for (const Move& mv : path.moves) {
      if (mv.disc > m) return false;
      if (mv.disc == m) ++big_moves;
    }
    const std::size_t expected =
        decision.verdict == Verdict::Twice ? 2u : 1u;
    if (big_moves != expected) return false;
    if (decision.verdict == Verdict::Draw) {
      const MovePath other = p2_path_with(x, y, Verdict::Twice);
      if (replay(other) != y) return false;
      if (other.moves.size() != path.moves.size()) return false;
    }
    return true;
  };

  if (exhaustive) {
    for (std::size_t xi = 0; xi < vertices; ++xi) {
      for (std::size_t yi = 0; yi < vertices; ++yi) {
        if (!check_pair(xi, yi)) {
          res.detail = "p2 failure at " +
                       pair_text(n, xi, yi, GraphKind::Hanoi);
          return res;
        }
      }
    }
  } else {
    for (int i = 0; i < 5000; ++i) {
      const std::size_t xi = rng() % vertices;
      const std::size_t yi = rng() % vertices;
      if (!check_pair(xi, yi)) {
        res.detail = "p2 failure at " + pair_text(n, xi, yi, GraphKind::Hanoi);
        return res;
      }
    }
  }
  res.pass = true;
  res.detail = exhaustive ? "exhaustive" : "sampled";
  return res;
}

}  // namespace

std::size_t ExplicitGraph::edge_count() const {
  std::size_t total = 0;
  for (std::uint8_t d : degree) total += d;
  return total / 2;
}

UnknownVertexError::UnknownVertexError()
    : std::invalid_argument("source word does not belong to the graph") {}

std::size_t word_index(const GasketWord& w) { return index_of(w); }
std::size_t word_index(const HanoiWord& w) { return index_of(w); }

GasketWord gasket_word_at(int n, std::size_t index) {
  GasketWord w(static_cast<std::size_t>(n), GasketSymbol::T);
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<GasketSymbol>(index % 3);
    index /= 3;
  }
  return w;
}

HanoiWord hanoi_word_at(int n, std::size_t index) {
  HanoiWord w(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<PegId>(index % 3);
    index /= 3;
  }
  return w;
}

std::vector<HanoiWord> hanoi_neighbors(const HanoiWord& w) {
  const std::size_t n = w.size();
  // Top (smallest) disc per peg as a word position; larger position means
  // smaller disc.
  std::array<std::ptrdiff_t, 3> top{-1, -1, -1};
  for (std::size_t i = 0; i < n; ++i) top[w[i]] = static_cast<std::ptrdiff_t>(i);

  std::vector<HanoiWord> out;
  out.reserve(3);
  for (PegId p = 0; p < 3; ++p) {
    if (top[p] < 0) continue;
    for (PegId q = 0; q < 3; ++q) {
      if (q == p) continue;
      if (top[q] >= 0 && top[q] > top[p]) continue;  // smaller disc at q
      HanoiWord next = w;
      next[static_cast<std::size_t>(top[p])] = q;
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExplicitGraph build_graph(int n, GraphKind kind) {
  if (n < 0 || n > kMaxGraphDiscs) {
    throw TooLargeError("graph construction capped at n = " +
                        std::to_string(kMaxGraphDiscs));
  }
  ExplicitGraph g;
  g.n = n;
  g.kind = kind;
  const std::size_t vertices = pow3(n);
  g.neighbors.assign(vertices, {-1, -1, -1});
  g.degree.assign(vertices, 0);
  for (std::size_t v = 0; v < vertices; ++v) {
    std::vector<std::size_t> nbr;
    if (kind == GraphKind::Gasket) {
      if (n == 0) break;
      for (const GasketWord& w : sg_neighbors(gasket_word_at(n, v))) {
        nbr.push_back(index_of(w));
      }
    } else {
      for (const HanoiWord& w : hanoi_neighbors(hanoi_word_at(n, v))) {
        nbr.push_back(index_of(w));
      }
    }
    for (std::size_t u : nbr) {
      g.neighbors[v][g.degree[v]++] = static_cast<std::int32_t>(u);
    }
  }
  return g;
}

std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        std::size_t source) {
  if (source >= g.vertex_count()) throw UnknownVertexError();
  return bfs_from(g, source);
}

std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        const GasketWord& source) {
  if (static_cast<int>(source.size()) != g.n ||
      g.kind != GraphKind::Gasket) {
    throw UnknownVertexError();
  }
  return bfs_from(g, index_of(source));
}

std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        const HanoiWord& source) {
  if (static_cast<int>(source.size()) != g.n || g.kind != GraphKind::Hanoi) {
    throw UnknownVertexError();
  }
  return bfs_from(g, index_of(source));
}

std::vector<std::int32_t> bfs_implicit(int n, GraphKind kind,
                                       std::size_t source) {
  if (n < 0 || n > kMaxImplicitDiscs) {
    throw TooLargeError("implicit BFS capped at n = " +
                        std::to_string(kMaxImplicitDiscs));
  }
  const std::size_t vertices = pow3(n);
  if (source >= vertices) throw UnknownVertexError();
  std::vector<std::int32_t> dist(vertices, -1);
  std::vector<std::int32_t> queue;
  queue.reserve(vertices);
  dist[source] = 0;
  queue.push_back(static_cast<std::int32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = static_cast<std::size_t>(queue[head]);
    std::vector<std::size_t> nbr;
    if (kind == GraphKind::Gasket) {
      if (n == 0) break;
      for (const GasketWord& w : sg_neighbors(gasket_word_at(n, u))) {
        nbr.push_back(index_of(w));
      }
    } else {
      for (const HanoiWord& w : hanoi_neighbors(hanoi_word_at(n, u))) {
        nbr.push_back(index_of(w));
      }
    }
    for (std::size_t v : nbr) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(static_cast<std::int32_t>(v));
      }
    }
  }
  return dist;
}

std::string export_dot(const ExplicitGraph& g) {
  if (g.n > kMaxDotDiscs) {
    throw TooLargeError("DOT export capped at n = " +
                        std::to_string(kMaxDotDiscs));
  }
  const bool gasket = g.kind == GraphKind::Gasket;
  std::ostringstream os;
  os << "graph " << (gasket ? "SG_" : "H_") << g.n << " {\n";
  auto label = [&](std::size_t v) {
    return gasket ? to_string(gasket_word_at(g.n, v))
                  : to_string(hanoi_word_at(g.n, v));
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << label(v) << "\";\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int j = 0; j < g.degree[v]; ++j) {
      const auto u = static_cast<std::size_t>(g.neighbors[v][j]);
      if (v < u) os << "  \"" << label(v) << "\" -- \"" << label(u) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

CheckResult check_distance_vs_bfs(int n, const DistanceFn& dist) {
  CheckResult res;
  const bool exhaustive = n <= 6;
  res.name = std::string("distance_vs_bfs_n") + std::to_string(n) +
             (exhaustive ? "_exhaustive" : "_sampled");
  const ExplicitGraph g = build_graph(n, GraphKind::Gasket);
  const std::size_t vertices = g.vertex_count();

  auto mismatch = [&](std::size_t xi, std::size_t yi,
                      std::int32_t bfs) -> bool {
    const GasketWord x = gasket_word_at(n, xi);
    const GasketWord y = gasket_word_at(n, yi);
    const Distance got = dist(x, y);
    return got != Distance(bfs) ||
           sg_distance_reference(x, y) != Distance(bfs);
  };

  if (exhaustive) {
    for (std::size_t xi = 0; xi < vertices; ++xi) {
      const auto bfs = bfs_from(g, xi);
      for (std::size_t yi = 0; yi < vertices; ++yi) {
        if (mismatch(xi, yi, bfs[yi])) {
          res.detail = pair_text(n, xi, yi, GraphKind::Gasket);
          return res;
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5EED0000ULL + static_cast<std::uint64_t>(n));
    for (int s = 0; s < 40; ++s) {
      const std::size_t xi = rng() % vertices;
      const auto bfs = bfs_from(g, xi);
      for (int t = 0; t < 500; ++t) {
        const std::size_t yi = rng() % vertices;
        if (mismatch(xi, yi, bfs[yi])) {
          res.detail = pair_text(n, xi, yi, GraphKind::Gasket);
          return res;
        }
      }
    }
  }
  res.pass = true;
  res.detail = exhaustive ? "all ordered pairs" : "sampled pairs";
  return res;
}

VerifyReport verify_suite(int max_n) {
  return verify_suite(max_n, [](const GasketWord& x, const GasketWord& y) {
    return distance(x, y);
  });
}

VerifyReport verify_suite(int max_n, const DistanceFn& dist) {
  if (max_n > kMaxVerifyDiscs) {
    throw TooLargeError("verify suite capped at max_n = " +
                        std::to_string(kMaxVerifyDiscs));
  }
  VerifyReport report;
  std::mt19937_64 rng(0xFEEDBEEFULL);
  for (int n = 1; n <= max_n; ++n) {
    report.checks.push_back(check_graph_shape(n, GraphKind::Gasket));
    report.checks.push_back(check_graph_shape(n, GraphKind::Hanoi));
    report.checks.push_back(check_isomorphism(n));
    report.checks.push_back(check_distance_vs_bfs(n, dist));
    report.checks.push_back(check_paths(n, n <= 4, rng));
  }
  return report;
}

}  // namespace hanoipath

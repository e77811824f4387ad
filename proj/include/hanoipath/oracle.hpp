#pragma once

#include "hanoipath/core.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace hanoipath {

enum class GraphKind : std::uint8_t { Hanoi, Gasket };

// Fully materialized state graph. Vertices are words interpreted as base-3
// integers, most significant symbol first (T/peg0 -> 0, L/peg1 -> 1,
// R/peg2 -> 2), so lookups are plain array indexing.
struct ExplicitGraph {
  int n = 0;
  GraphKind kind = GraphKind::Gasket;
  std::vector<std::array<std::int32_t, 3>> neighbors;  // -1 padded
  std::vector<std::uint8_t> degree;

  std::size_t vertex_count() const { return neighbors.size(); }
  std::size_t edge_count() const;
};

constexpr int kMaxGraphDiscs = 12;     // 3^12 = 531441 vertices
constexpr int kMaxDotDiscs = 6;
constexpr int kMaxImplicitDiscs = 15;
constexpr int kMaxVerifyDiscs = 8;

std::size_t word_index(const GasketWord& w);
std::size_t word_index(const HanoiWord& w);
GasketWord gasket_word_at(int n, std::size_t index);
HanoiWord hanoi_word_at(int n, std::size_t index);

// States one legal move away. Shares the index convention above.
std::vector<HanoiWord> hanoi_neighbors(const HanoiWord& w);

class UnknownVertexError : public std::invalid_argument {
 public:
  UnknownVertexError();
};

ExplicitGraph build_graph(int n, GraphKind kind);  // n <= 12

std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        std::size_t source);
std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        const GasketWord& source);
std::vector<std::int32_t> bfs_distances(const ExplicitGraph& g,
                                        const HanoiWord& source);

// BFS over the implicit neighbor rule, for spot checks past the
// materialization cap. n <= 15.
std::vector<std::int32_t> bfs_implicit(int n, GraphKind kind,
                                       std::size_t source);

// Undirected DOT rendering with canonical word labels. n <= 6.
std::string export_dot(const ExplicitGraph& g);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample on failure, summary otherwise
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

using DistanceFn =
    std::function<Distance(const GasketWord&, const GasketWord&)>;

// Cross-checks the machine distance (or an injected replacement) against
// per-source BFS: exhaustive pairs up to n = 6, fixed-seed samples above.
CheckResult check_distance_vs_bfs(int n, const DistanceFn& dist);

// Runs the cross-module checks up to max_n (<= 8): graph shape, transducer
// isomorphism, machine-vs-BFS distances, path legality and optimality.
// Failures are report content, never exceptions.
VerifyReport verify_suite(int max_n);
VerifyReport verify_suite(int max_n, const DistanceFn& dist);

}  // namespace hanoipath

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"
#include "c4lab/report.hpp"
#include "c4lab/rng.hpp"

namespace c4lab::supersat {

using graph::Edge;
using graph::Graph;
using graph::Vertex;
using polarity::PolarityGraph;

/// Adds uv to a polarity graph and inspects the 4-cycles it creates.
/// Throws std::invalid_argument if uv is already an edge or u == v.
ExperimentReport add_edge_experiment(const PolarityGraph& g, Vertex u, Vertex v);

/// Runs add_edge_experiment over every non-edge (samples == 0) or over
/// `samples` seeded uniform non-edges, in parallel, and tallies violations.
ExperimentReport add_edge_census(const PolarityGraph& g, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads = 0);

/// t edges between 2t distinct degree-q vertices of ER_q, paired in selection
/// order. seed 0 keeps index order, any other seed shuffles first.
/// Throws std::invalid_argument for odd q or t > (q+1)/2.
ExperimentReport matching_experiment(const PolarityGraph& er, std::uint32_t t, std::uint64_t seed);
ExperimentReport matching_experiment(std::uint32_t q, std::uint32_t t, std::uint64_t seed);

/// The edges matching_experiment would add.
std::vector<Edge> degree_q_matching(const PolarityGraph& er, std::uint32_t t, std::uint64_t seed);

/// ER_q plus each non-adjacent pair with probability 4t / (q^3 (q+1)), one
/// draw per pair in (u < v) lexicographic order, stream (seed, trial).
/// Throws std::invalid_argument when 4t > q^3 (q+1) or trials == 0.
ExperimentReport random_supersat(std::uint32_t q, std::uint64_t t, std::uint32_t trials, std::uint64_t seed,
                                 unsigned threads = 0);

/// One trial of random_supersat, exposed for tests.
Graph random_supersat_trial(const PolarityGraph& er, std::uint64_t t, std::uint64_t seed, std::uint32_t trial);

/// #C4 >= (tq - 2.5q - t) / 2 for a graph on q^2+q+1 vertices with
/// q(q+1)^2/2 + t edges, t >= 1. Throws std::invalid_argument on odd q, the
/// wrong vertex count or too few edges.
ExperimentReport halfway_bound_check(const Graph& g, std::uint32_t q, unsigned threads = 1);

/// G = H + add - remove with |add| = |remove| + 1 = s; checks
/// sq - s^2 <= #C4(G) <= sq + s^2. Only s = 1 is a required verdict.
ExperimentReport classify_perturbation(const PolarityGraph& h, std::span<const Edge> add,
                                       std::span<const Edge> remove);

struct AuditResult {
  std::uint64_t s = 0;
  std::uint64_t c0 = 0;  // cycles through exactly one added edge
  std::uint64_t c1 = 0;  // cycles through two or more
  std::uint64_t c0_bound = 0;  // s(q+1)
  std::uint64_t c1_bound = 0;  // 2 C(s,2)
  std::uint64_t delta = 0;     // count_c4(H + add) - count_c4(H)
  bool bound_ok = false;
  bool partition_ok = false;   // c0 + c1 == delta

  ExperimentReport to_report(std::uint32_t q) const;
};

inline constexpr std::size_t kMaxAuditEdges = 64;

/// Throws std::invalid_argument for s > 64, an edge already in H, or a
/// repeated edge.
AuditResult upper_count_audit(const PolarityGraph& h, std::span<const Edge> add);

/// Uniform sample of `count` distinct non-edges of g.
std::vector<Edge> random_non_edges(const Graph& g, std::size_t count, CounterRng& rng);

/// Uniform graph on n vertices with exactly m edges.
Graph random_graph(std::uint32_t n, std::uint64_t m, CounterRng& rng);

}  // namespace c4lab::supersat

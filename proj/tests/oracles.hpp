#ifndef MERITRANK_TESTS_ORACLES_HPP
#define MERITRANK_TESTS_ORACLES_HPP

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's computation paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "meritrank/citeflow.hpp"
#include "meritrank/textproc.hpp"

namespace oracles {

/// Minimum s-t cut by exhaustive enumeration of vertex bipartitions;
/// usable for n <= ~12.
inline std::int64_t brute_force_min_cut(
    const std::vector<std::vector<std::int64_t>>& cap, std::size_t s, std::size_t t) {
  std::size_t n = cap.size();
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v)
    if (v != s && v != t) others.push_back(v);

  std::int64_t best = -1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
    std::vector<bool> in_source(n, false);
    in_source[s] = true;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (std::size_t{1} << i)) in_source[others[i]] = true;
    std::int64_t cut = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (in_source[u] && !in_source[v]) cut += cap[u][v];
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

/// Clamped capacity matrix of a citation graph (mirrors the documented
/// default convention, built directly from the edge list).
inline std::vector<std::vector<std::int64_t>> clamped_capacities(
    const meritrank::CitationGraph& g) {
  std::size_t n = g.vertices.size();
  std::vector<std::vector<std::int64_t>> cap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [pair, weight] : g.edges)
    if (weight > 0) cap[pair.first][pair.second] = weight;
  return cap;
}

/// Term-by-term tf-idf, recomputed from raw token sequences.
inline double tf_idf(const std::string& term, const meritrank::Document& doc,
                     const meritrank::Corpus& corpus) {
  if (doc.tokens.empty()) return 0.0;
  std::size_t count = 0;
  for (const auto& token : doc.tokens) count += token == term;
  std::size_t df = 0;
  for (const auto& other : corpus.documents) {
    for (const auto& token : other.tokens)
      if (token == term) {
        ++df;
        break;
      }
  }
  double tf = static_cast<double>(count) / static_cast<double>(doc.tokens.size());
  return tf * std::log((1.0 + static_cast<double>(corpus.documents.size())) /
                       (1.0 + static_cast<double>(df)));
}

inline std::set<std::string> keywords_above(const meritrank::Document& doc,
                                            const meritrank::Corpus& corpus,
                                            double threshold) {
  std::set<std::string> out;
  for (const auto& token : doc.tokens)
    if (oracles::tf_idf(token, doc, corpus) > threshold) out.insert(token);
  return out;
}

/// Majority-vote probability by exhaustive enumeration of all 2^(2n) vote
/// vectors; usable for n <= 10.
inline double brute_force_vote_probability(unsigned n) {
  std::uint64_t good = 0;
  std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (static_cast<unsigned>(__builtin_popcountll(mask)) >= n + 1) ++good;
  return static_cast<double>(good) / static_cast<double>(total);
}

/// Random digraph as a citation graph: n vertices, integer weights in
/// [-max_weight, max_weight] (zero = no edge).
inline meritrank::CitationGraph random_citation_graph(std::mt19937& rng, std::size_t n,
                                                      std::int64_t max_weight,
                                                      double edge_probability = 0.5) {
  meritrank::CitationGraph graph;
  for (std::size_t i = 0; i < n; ++i)
    graph.vertices.push_back("v" + std::to_string(i));
  graph.timestamps.assign(n, std::nullopt);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> weight(-max_weight, max_weight);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || coin(rng) > edge_probability) continue;
      std::int64_t w = weight(rng);
      if (w != 0) graph.edges[{u, v}] = w;
    }
  return graph;
}

}  // namespace oracles

#endif

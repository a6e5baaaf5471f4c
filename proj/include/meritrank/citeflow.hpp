#ifndef MERITRANK_CITEFLOW_HPP
#define MERITRANK_CITEFLOW_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "meritrank/defgraph.hpp"
#include "meritrank/lexicon.hpp"
#include "meritrank/polarity.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

/// How negative edge weights enter flow computations. They never carry
/// positive concept flow; `clamp` (default) zeroes them, `abs_value` uses
/// the magnitude, `drop` removes both directions of the offending pair.
enum class NegativeEdgePolicy { clamp, abs_value, drop };
enum class AvgDivisor { targets, vertices };

std::optional<NegativeEdgePolicy> parse_negative_edge_policy(std::string_view text);
std::optional<AvgDivisor> parse_avg_divisor(std::string_view text);

struct CitationLink {
  std::string citing;
  std::string cited;
  std::string context;
};

/// Chronology-respecting digraph with signed integer weights. Edge (u,v)
/// means concept flows from cited u to citing v.
struct CitationGraph {
  std::vector<std::string> vertices;  // doc ids, insertion order
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> edges;
  std::vector<std::optional<std::int64_t>> timestamps;
  std::size_t dropped_chronology = 0;

  std::size_t index_of(std::string_view doc_id) const;  // throws on unknown
  bool contains(std::string_view doc_id) const;
};

/// Weight(u,v) = number of (v cites u) records, negated when the chosen
/// polarity method classifies the concatenated citation contexts negative.
/// Edges violating chronology (both timestamps known, citing not strictly
/// later) are dropped and counted.
CitationGraph build_citation_graph(const Corpus& corpus,
                                   std::span<const CitationLink> links,
                                   const Lexicon& lex, PolarityMethod method,
                                   std::size_t depth = 3);

/// citing_id<TAB>cited_id<TAB>context per line.
std::vector<CitationLink> load_links(const std::filesystem::path& path);

/// First line: vertex names; then a square matrix of signed integer
/// weights, row = source. Throws FormatError when not square.
CitationGraph citation_graph_from_matrix(const std::filesystem::path& path);

/// Edmonds-Karp (shortest augmenting paths). Integer capacities per the
/// edge policy guarantee termination; flow conservation is checked after
/// every augmentation.
std::int64_t max_flow(const CitationGraph& g, std::string_view s, std::string_view t,
                      NegativeEdgePolicy policy = NegativeEdgePolicy::clamp);

struct FlowDetail {
  std::int64_t value = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> flow;
  std::size_t augmentations = 0;
};

FlowDetail max_flow_detail(const CitationGraph& g, std::string_view s,
                           std::string_view t,
                           NegativeEdgePolicy policy = NegativeEdgePolicy::clamp);

double average_maxflow(const CitationGraph& g, std::string_view s,
                       AvgDivisor divisor = AvgDivisor::targets,
                       NegativeEdgePolicy policy = NegativeEdgePolicy::clamp);

/// Vertices reachable from s via positive-weight edges within r hops,
/// excluding s itself.
std::size_t radius_count(const CitationGraph& g, std::string_view s, std::size_t r);

struct FlowRanking {
  std::map<std::string, double> per_source;
  std::vector<std::string> order;  // descending average, ties by doc_id
};

/// Per-pair maxflows are independent; the parallel path fans them out
/// across threads and reduces deterministically.
FlowRanking rank_by_maxflow(const CitationGraph& g,
                            AvgDivisor divisor = AvgDivisor::targets,
                            NegativeEdgePolicy policy = NegativeEdgePolicy::clamp,
                            Execution exec = Execution::serial);

}  // namespace meritrank

#endif

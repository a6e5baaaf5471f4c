#include "meritrank/citeflow.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "meritrank/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace meritrank {

namespace {

std::vector<std::vector<std::int64_t>> capacity_matrix(const CitationGraph& g,
                                                       NegativeEdgePolicy policy) {
  std::size_t n = g.vertices.size();
  std::vector<std::vector<std::int64_t>> cap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [pair, weight] : g.edges) {
    auto [u, v] = pair;
    switch (policy) {
      case NegativeEdgePolicy::clamp:
        cap[u][v] += std::max<std::int64_t>(0, weight);
        break;
      case NegativeEdgePolicy::abs_value:
        cap[u][v] += weight < 0 ? -weight : weight;
        break;
      case NegativeEdgePolicy::drop:
        if (weight > 0) cap[u][v] += weight;
        break;
    }
  }
  if (policy == NegativeEdgePolicy::drop) {
    // a negative citation invalidates the pair in both directions
    for (const auto& [pair, weight] : g.edges)
      if (weight < 0) {
        cap[pair.first][pair.second] = 0;
        cap[pair.second][pair.first] = 0;
      }
  }
  return cap;
}

void check_flow_invariants(const std::vector<std::vector<std::int64_t>>& cap,
                           const std::vector<std::vector<std::int64_t>>& residual,
                           std::size_t s, std::size_t t) {
  std::size_t n = cap.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t net = 0;
    for (std::size_t u = 0; u < n; ++u) {
      std::int64_t fin = cap[u][v] - residual[u][v];   // flow on edge u->v
      std::int64_t fout = cap[v][u] - residual[v][u];  // flow on edge v->u
      if (fin > cap[u][v]) throw std::logic_error("flow exceeds capacity");
      if (fin > 0) net += fin;
      if (fout > 0) net -= fout;
    }
    if (v != s && v != t && net != 0)
      throw std::logic_error("flow conservation violated");
  }
}

FlowDetail edmonds_karp(const CitationGraph& g, std::size_t s, std::size_t t,
                        NegativeEdgePolicy policy) {
  auto cap = capacity_matrix(g, policy);
  auto residual = cap;
  std::size_t n = cap.size();
  FlowDetail detail;

  while (true) {
    std::vector<std::size_t> parent(n, n);
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && parent[t] == n) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == n && residual[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] == n) break;

    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = t; v != s; v = parent[v])
      bottleneck = std::min(bottleneck, residual[parent[v]][v]);
    for (std::size_t v = t; v != s; v = parent[v]) {
      residual[parent[v]][v] -= bottleneck;
      residual[v][parent[v]] += bottleneck;
    }
    detail.value += bottleneck;
    ++detail.augmentations;
    check_flow_invariants(cap, residual, s, t);
  }

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::int64_t f = cap[u][v] - residual[u][v];
      if (f > 0) detail.flow[{u, v}] = std::min(f, cap[u][v]);
    }
  return detail;
}

}  // namespace

std::optional<NegativeEdgePolicy> parse_negative_edge_policy(std::string_view text) {
  if (text == "clamp") return NegativeEdgePolicy::clamp;
  if (text == "abs") return NegativeEdgePolicy::abs_value;
  if (text == "drop") return NegativeEdgePolicy::drop;
  return std::nullopt;
}

std::optional<AvgDivisor> parse_avg_divisor(std::string_view text) {
  if (text == "targets") return AvgDivisor::targets;
  if (text == "vertices") return AvgDivisor::vertices;
  return std::nullopt;
}

std::size_t CitationGraph::index_of(std::string_view doc_id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == doc_id) return i;
  throw std::invalid_argument("unknown vertex: " + std::string(doc_id));
}

bool CitationGraph::contains(std::string_view doc_id) const {
  return std::find(vertices.begin(), vertices.end(), doc_id) != vertices.end();
}

CitationGraph build_citation_graph(const Corpus& corpus,
                                   std::span<const CitationLink> links,
                                   const Lexicon& lex, PolarityMethod method,
                                   std::size_t depth) {
  CitationGraph graph;
  for (const auto& doc : corpus.documents) {
    graph.vertices.push_back(doc.doc_id);
    graph.timestamps.push_back(doc.timestamp);
  }

  // group link records per (cited, citing) pair
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::int64_t, std::string>>
      grouped;
  for (const auto& link : links) {
    if (!graph.contains(link.citing))
      throw std::invalid_argument("unknown citing doc: " + link.citing);
    if (!graph.contains(link.cited))
      throw std::invalid_argument("unknown cited doc: " + link.cited);
    std::size_t u = graph.index_of(link.cited);
    std::size_t v = graph.index_of(link.citing);
    if (u == v) continue;  // no self-loops
    auto tu = graph.timestamps[u], tv = graph.timestamps[v];
    if (tu && tv && *tv <= *tu) {  // citing must be chronologically later
      ++graph.dropped_chronology;
      continue;
    }
    auto& [count, context] = grouped[{u, v}];
    ++count;
    if (!context.empty()) context += ' ';
    context += link.context;
  }

  for (const auto& [pair, payload] : grouped) {
    const auto& [count, context_text] = payload;
    Document context = make_document("", context_text, lex.stopwords());
    auto verdict = classify_polarity(method, context, corpus, lex, depth);
    std::int64_t weight = count;
    if (verdict.sign == PolaritySign::negative) weight = -weight;
    graph.edges[pair] = weight;
  }
  return graph;
}

std::vector<CitationLink> load_links(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open link file: " + path.string());
  std::vector<CitationLink> links;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    CitationLink link;
    if (!std::getline(ss, link.citing, '\t') || !std::getline(ss, link.cited, '\t'))
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected citing<TAB>cited<TAB>context");
    std::getline(ss, link.context);
    links.push_back(std::move(link));
  }
  return links;
}

CitationGraph citation_graph_from_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix: " + path.string());

  std::string line;
  if (!std::getline(in, line))
    throw FormatError(path.string() + ": missing header line");
  CitationGraph graph;
  {
    std::istringstream header(line);
    std::string name;
    while (header >> name) graph.vertices.push_back(name);
  }
  std::size_t n = graph.vertices.size();
  if (n == 0) throw FormatError(path.string() + ": empty header");
  graph.timestamps.assign(n, std::nullopt);

  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    if (row >= n)
      throw FormatError(path.string() + ": more rows than header names");
    std::istringstream ss(line);
    std::int64_t weight;
    std::size_t col = 0;
    while (ss >> weight) {
      if (col >= n) throw FormatError(path.string() + ": row wider than matrix");
      if (weight != 0 && row != col) graph.edges[{row, col}] = weight;
      ++col;
    }
    if (col != n)
      throw FormatError(path.string() + ": matrix is not square at row " +
                        std::to_string(row + 1));
    ++row;
  }
  if (row != n)
    throw FormatError(path.string() + ": matrix is not square (" +
                      std::to_string(row) + " rows, " + std::to_string(n) +
                      " names)");
  return graph;
}

std::int64_t max_flow(const CitationGraph& g, std::string_view s, std::string_view t,
                      NegativeEdgePolicy policy) {
  return max_flow_detail(g, s, t, policy).value;
}

FlowDetail max_flow_detail(const CitationGraph& g, std::string_view s,
                           std::string_view t, NegativeEdgePolicy policy) {
  std::size_t si = g.index_of(s);
  std::size_t ti = g.index_of(t);
  if (si == ti) throw std::invalid_argument("source equals sink");
  return edmonds_karp(g, si, ti, policy);
}

double average_maxflow(const CitationGraph& g, std::string_view s,
                       AvgDivisor divisor, NegativeEdgePolicy policy) {
  std::size_t si = g.index_of(s);
  std::size_t n = g.vertices.size();
  if (n < 2) throw std::invalid_argument("graph needs at least two vertices");
  std::int64_t total = 0;
  for (std::size_t ti = 0; ti < n; ++ti)
    if (ti != si) total += edmonds_karp(g, si, ti, policy).value;
  double div = divisor == AvgDivisor::targets ? static_cast<double>(n - 1)
                                              : static_cast<double>(n);
  return static_cast<double>(total) / div;
}

std::size_t radius_count(const CitationGraph& g, std::string_view s, std::size_t r) {
  std::size_t si = g.index_of(s);
  std::size_t n = g.vertices.size();
  std::vector<bool> seen(n, false);
  seen[si] = true;
  std::deque<std::pair<std::size_t, std::size_t>> queue{{si, 0}};
  std::size_t count = 0;
  while (!queue.empty()) {
    auto [u, dist] = queue.front();
    queue.pop_front();
    if (dist == r) continue;
    for (const auto& [pair, weight] : g.edges) {
      if (pair.first != u || weight <= 0) continue;
      std::size_t v = pair.second;
      if (!seen[v]) {
        seen[v] = true;
        ++count;  // s itself is excluded
        queue.emplace_back(v, dist + 1);
      }
    }
  }
  return count;
}

FlowRanking rank_by_maxflow(const CitationGraph& g, AvgDivisor divisor,
                            NegativeEdgePolicy policy, Execution exec) {
  FlowRanking ranking;
  std::size_t n = g.vertices.size();
  if (n == 0) return ranking;

  std::vector<double> averages(n, 0.0);
  if (n >= 2) {
    double div = divisor == AvgDivisor::targets ? static_cast<double>(n - 1)
                                                : static_cast<double>(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (s != t) pairs.emplace_back(s, t);

    std::vector<std::int64_t> flows(pairs.size(), 0);
    if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::size_t i = 0; i < pairs.size(); ++i)
        flows[i] = edmonds_karp(g, pairs[i].first, pairs[i].second, policy).value;
    } else {
      for (std::size_t i = 0; i < pairs.size(); ++i)
        flows[i] = edmonds_karp(g, pairs[i].first, pairs[i].second, policy).value;
    }
    std::vector<std::int64_t> totals(n, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) totals[pairs[i].first] += flows[i];
    for (std::size_t s = 0; s < n; ++s)
      averages[s] = static_cast<double>(totals[s]) / div;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (averages[a] != averages[b]) return averages[a] > averages[b];
    return g.vertices[a] < g.vertices[b];
  });
  for (std::size_t i : order) {
    ranking.per_source.emplace(g.vertices[i], averages[i]);
    ranking.order.push_back(g.vertices[i]);
  }
  return ranking;
}

}  // namespace meritrank

#include "meritrank/defgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "meritrank/wsd.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace meritrank {

namespace {

// distinct gloss tokens of the Lesk-chosen sense, first occurrence order
struct KeywordExpansion {
  std::vector<std::string> children;
};

KeywordExpansion expand_keyword(const std::string& keyword,
                                const std::set<std::string>& context,
                                const Lexicon& lex) {
  auto choice = lesk_disambiguate(keyword, context, lex);
  if (!choice && keyword.size() > 1 && keyword.back() == 's')
    choice = lesk_disambiguate(keyword.substr(0, keyword.size() - 1), context, lex);
  KeywordExpansion out;
  if (!choice) return out;  // out-of-vocabulary keywords stay leaves
  std::set<std::string> seen;
  for (const auto& token : choice->chosen.gloss_tokens)
    if (seen.insert(token).second) out.children.push_back(token);
  return out;
}

}  // namespace

std::size_t DefinitionGraph::first_convergence_level() const {
  std::size_t first = 0;
  for (const auto& event : overlap_events)
    if (first == 0 || event.level < first) first = event.level;
  return first;
}

std::map<std::string, std::size_t> DefinitionGraph::indegrees() const {
  std::map<std::string, std::size_t> degrees;
  for (const auto& [parent, child] : edges) ++degrees[child];
  return degrees;
}

DefinitionGraph build_definition_graph(const Document& doc, const Corpus& corpus,
                                       const Lexicon& lex, std::size_t depth,
                                       double threshold, Execution exec) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");

  DefinitionGraph graph;
  std::set<std::string> keywords = extract_keywords(doc, corpus, threshold);
  graph.levels.push_back(keywords);
  for (const auto& keyword : keywords) graph.vertices.emplace(keyword, 0);

  // parents of each current-level keyword, for the Lesk context
  std::map<std::string, std::set<std::string>> parent_of;

  for (std::size_t step = 1; step <= depth; ++step) {
    const std::set<std::string>& level = graph.levels.back();
    if (level.empty()) break;

    std::vector<std::string> ordered(level.begin(), level.end());
    std::vector<KeywordExpansion> expansions(ordered.size());

    auto context_for = [&](const std::string& keyword) {
      std::set<std::string> context = level;
      if (auto it = parent_of.find(keyword); it != parent_of.end())
        context.insert(it->second.begin(), it->second.end());
      return context;
    };

    if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::size_t i = 0; i < ordered.size(); ++i)
        expansions[i] = expand_keyword(ordered[i], context_for(ordered[i]), lex);
    } else {
      for (std::size_t i = 0; i < ordered.size(); ++i)
        expansions[i] = expand_keyword(ordered[i], context_for(ordered[i]), lex);
    }

    // merge: an order-independent union over per-keyword results
    std::size_t productions = 0;
    std::map<std::string, std::set<std::string>> producers;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (const auto& child : expansions[i].children) {
        ++productions;
        graph.edges.emplace(ordered[i], child);
        producers[child].insert(ordered[i]);
      }
    }

    std::set<std::string> next_level;
    std::map<std::string, std::set<std::string>> next_parents;
    for (const auto& [token, parents] : producers) {
      if (parents.size() >= 2)
        graph.overlap_events.push_back({step, parents.size(), 1, token});
      // drop tokens grasped at previous levels; their edges stay counted
      if (graph.vertices.emplace(token, step).second) {
        next_level.insert(token);
        next_parents.emplace(token, parents);
      }
    }

    graph.shrink_per_level.push_back(productions - next_level.size());
    graph.levels.push_back(next_level);
    graph.depth = step;
    parent_of = std::move(next_parents);
    if (next_level.empty()) break;
  }
  return graph;
}

std::uint64_t relatedness_linear(std::span<const OverlapEvent> events) {
  std::uint64_t total = 0;
  for (const auto& event : events) total += event.overlap_length;
  return total;
}

std::uint64_t relatedness_quadratic(std::span<const OverlapEvent> events) {
  std::uint64_t total = 0;
  for (const auto& event : events)
    total += static_cast<std::uint64_t>(event.parents) * event.overlap_length *
             event.overlap_length;
  return total;
}

double convergence_factor(double x, std::size_t d, std::size_t vertices) {
  return std::pow(x, static_cast<double>(d)) - static_cast<double>(vertices);
}

double intrinsic_merit(std::size_t vertices, std::size_t edges, std::uint64_t rel,
                       std::size_t f) {
  if (f < 1) throw std::domain_error("no convergence: firstconvergencelevel < 1");
  return static_cast<double>(vertices) * static_cast<double>(edges) *
         static_cast<double>(rel) / static_cast<double>(f);
}

double intrinsic_merit_closed_form(std::size_t edges, std::size_t vertices,
                                   std::size_t d, std::size_t f) {
  if (vertices == 0) throw std::domain_error("V must be >= 1");
  if (f < 1) throw std::domain_error("f must be >= 1");
  double E = static_cast<double>(edges);
  double V = static_cast<double>(vertices);
  double vd = std::pow(V, static_cast<double>(d));
  return E * V * (std::pow(E, static_cast<double>(d)) - vd) /
         (vd * static_cast<double>(f));
}

MeritReport make_merit_report(const Document& doc, const DefinitionGraph& graph,
                              RelatednessMode mode) {
  MeritReport report;
  report.doc_id = doc.doc_id;
  report.topic_label = doc.topic_label;
  report.vertices = graph.vertex_count();
  report.edges = graph.edge_count();
  report.depth = graph.depth;
  report.keyword_count = graph.levels.empty() ? 0 : graph.levels.front().size();
  report.relatedness = mode == RelatednessMode::linear
                           ? relatedness_linear(graph.overlap_events)
                           : relatedness_quadratic(graph.overlap_events);
  report.firstconvergencelevel = graph.first_convergence_level();
  if (report.vertices > 0) {
    report.avg_branching =
        static_cast<double>(report.edges) / static_cast<double>(report.vertices);
    report.convergence =
        convergence_factor(report.avg_branching, report.depth, report.vertices);
  }
  if (report.firstconvergencelevel >= 1 && report.relatedness > 0) {
    report.score = intrinsic_merit(report.vertices, report.edges, report.relatedness,
                                   report.firstconvergencelevel);
  } else {
    report.score = 0.0;
    report.no_convergence = true;
  }
  return report;
}

std::string format_merit_report(const MeritReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << report.doc_id << '\t' << report.relatedness << '\t' << report.vertices
      << '\t' << report.edges << '\t' << report.firstconvergencelevel << '\t'
      << report.score;
  return out.str();
}

NormalizedScores normalize_scores(std::vector<MeritReport> reports) {
  NormalizedScores out;
  if (reports.empty()) return out;
  for (const auto& report : reports)
    if (report.topic_label != reports.front().topic_label)
      throw std::invalid_argument("normalize_scores: mixed topic labels");
  double max_score = 0.0;
  for (const auto& report : reports) max_score = std::max(max_score, report.score);
  if (max_score <= 0.0) {
    out.reports = std::move(reports);
    out.all_zero = true;
    return out;
  }
  for (auto& report : reports) report.score /= max_score;
  out.reports = std::move(reports);
  return out;
}

RelativeMerit relative_merit(const MeritReport& a, const MeritReport& b) {
  auto effective_f = [](const MeritReport& r) {
    return r.firstconvergencelevel == 0 ? std::numeric_limits<std::size_t>::max()
                                        : r.firstconvergencelevel;
  };
  auto dominates = [&](const MeritReport& x, const MeritReport& y) {
    return x.keyword_count > y.keyword_count && x.relatedness > y.relatedness &&
           x.avg_branching > y.avg_branching && effective_f(x) < effective_f(y) &&
           x.depth > y.depth;
  };
  if (dominates(a, b)) return RelativeMerit::a_greater;
  if (dominates(b, a)) return RelativeMerit::b_greater;
  return RelativeMerit::incomparable;
}

std::vector<std::pair<std::string, std::size_t>> top_indegree_labels(
    const DefinitionGraph& graph, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto degrees = graph.indegrees();
  std::vector<std::pair<std::string, std::size_t>> ranked(degrees.begin(),
                                                          degrees.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace meritrank

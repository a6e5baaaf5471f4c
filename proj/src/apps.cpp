#include "meritrank/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace meritrank {

namespace {

struct PairwiseInterview {
  InterviewResult interview;
  ValueAddition addition;
  MeritReport candidate_report;
  MeritReport reference_report;
};

PairwiseInterview interview_against_reference(const Document& reference,
                                              const Document& candidate,
                                              const Corpus& corpus, const Lexicon& lex,
                                              const Config& config) {
  PairwiseInterview out;
  auto questions = generate_questions(reference, corpus, config.questions_k,
                                      config.window_n);
  out.interview = run_interview(candidate, questions, config.reference_threshold,
                                config.shingle_n, config.window_n);
  auto ref_graph = build_definition_graph(reference, corpus, lex, config.depth,
                                          config.tfidf_threshold);
  auto cand_graph = build_definition_graph(candidate, corpus, lex, config.depth,
                                           config.tfidf_threshold);
  out.addition = value_addition(cand_graph, ref_graph);
  out.candidate_report = make_merit_report(candidate, cand_graph,
                                           config.relatedness_mode);
  out.reference_report = make_merit_report(reference, ref_graph,
                                           config.relatedness_mode);
  return out;
}

}  // namespace

Summary update_summarize(const Document& summary, const Document& candidate,
                         const Corpus& corpus, const Lexicon& lex, double ratio,
                         const Config& config) {
  if (summary.topic_label != candidate.topic_label)
    throw std::invalid_argument("update_summarize: topic labels differ");
  if (ratio <= 0.0 || ratio > 1.0)
    throw std::invalid_argument("update_summarize: ratio out of (0,1]");

  Summary out;
  out.ratio = ratio;

  auto keep_existing = [&] {
    auto scored = score_sentences(summary, corpus);
    for (std::size_t i = 0; i < scored.size(); ++i)
      out.sentences.push_back(
          {summary.doc_id, summary.sentence_text[i], scored[i].second});
    return out;
  };

  if (candidate.tokens.empty()) return keep_existing();

  auto pairwise = interview_against_reference(summary, candidate, corpus, lex, config);
  if (pairwise.addition.edit_distance == 0) return keep_existing();  // nothing new

  // normalized merit per the score/max rule, against the reference's own score
  double max_score =
      std::max(pairwise.candidate_report.score, pairwise.reference_report.score);
  double merit_norm = max_score > 0 ? pairwise.candidate_report.score / max_score : 0.0;
  double admission = config.weight_merit * merit_norm +
                     config.weight_interview * pairwise.interview.percentage / 100.0 +
                     config.weight_value * pairwise.addition.percentage / 100.0;
  if (admission <= config.admit_threshold) return keep_existing();

  struct Candidate {
    const Document* doc;
    std::size_t index;
    double score;
  };
  std::vector<Candidate> pool;
  for (const Document* doc : {&summary, &candidate}) {
    auto scored = score_sentences(*doc, corpus);
    for (std::size_t i = 0; i < scored.size(); ++i)
      pool.push_back({doc, i, scored[i].second});
  }
  std::size_t want = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(ratio * static_cast<double>(pool.size()))));

  std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    return a.score > b.score;
  });
  pool.resize(std::min(want, pool.size()));
  // emit in document order, summary first
  std::stable_sort(pool.begin(), pool.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.doc != b.doc) return a.doc == &summary;
    return a.index < b.index;
  });
  for (const auto& chosen : pool)
    out.sentences.push_back({chosen.doc->doc_id,
                             chosen.doc->sentence_text[chosen.index], chosen.score});
  out.updated = true;
  return out;
}

TopicDecision topic_link_detect(const Document& a, const Document& b,
                                const Corpus& corpus, const Lexicon& lex,
                                const Config& config) {
  auto pairwise = interview_against_reference(a, b, corpus, lex, config);
  TopicDecision decision;
  decision.interview_percentage = pairwise.interview.percentage;
  decision.edit_distance_percentage = pairwise.addition.percentage;
  decision.interview_threshold = config.interview_threshold;
  decision.edit_threshold = config.edit_threshold;
  decision.same_topic =
      decision.interview_percentage >= decision.interview_threshold &&
      decision.edit_distance_percentage <= decision.edit_threshold;
  return decision;
}

std::pair<std::string, std::size_t> topic_outlier(std::span<const Document> stories,
                                                  const Corpus& corpus,
                                                  const Lexicon& lex,
                                                  const Config& config,
                                                  Execution exec) {
  if (stories.size() < 2)
    throw std::invalid_argument("topic_outlier: need at least two stories");

  std::size_t n = stories.size();
  std::vector<DefinitionGraph> graphs(n);
  for (std::size_t i = 0; i < n; ++i)
    graphs[i] = build_definition_graph(stories[i], corpus, lex, config.depth,
                                       config.tfidf_threshold);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::size_t> distance(pairs.size(), 0);
  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t p = 0; p < pairs.size(); ++p)
      distance[p] = graph_edit_distance(graphs[pairs[p].first], graphs[pairs[p].second]);
  } else {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      distance[p] = graph_edit_distance(graphs[pairs[p].first], graphs[pairs[p].second]);
  }

  std::vector<std::size_t> totals(n, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    totals[pairs[p].first] += distance[p];
    totals[pairs[p].second] += distance[p];
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (totals[i] > totals[best] ||
        (totals[i] == totals[best] && stories[i].doc_id < stories[best].doc_id))
      best = i;
  }
  return {stories[best].doc_id, totals[best]};
}

std::vector<std::string> topic_track(const Document& story, const Corpus& corpus,
                                     const Lexicon& lex, std::size_t depth,
                                     std::size_t k, double threshold) {
  auto graph = build_definition_graph(story, corpus, lex, depth, threshold);
  std::vector<std::string> labels;
  for (const auto& [token, indegree] : top_indegree_labels(graph, k))
    labels.push_back(token);
  return labels;
}

double spearman(std::span<const int> rank_a, std::span<const int> rank_b) {
  if (rank_a.size() != rank_b.size())
    throw std::invalid_argument("spearman: length mismatch");
  std::size_t n = rank_a.size();
  if (n < 2) throw std::invalid_argument("spearman: need n >= 2");
  for (auto ranks : {rank_a, rank_b}) {
    std::vector<int> sorted(ranks.begin(), ranks.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("spearman: not a permutation of 1..n");
  }
  double sum_d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = static_cast<double>(rank_a[i]) - static_cast<double>(rank_b[i]);
    sum_d2 += d * d;
  }
  double nn = static_cast<double>(n);
  return 1.0 - 6.0 * sum_d2 / (nn * (nn * nn - 1.0));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("pearson: need n >= 2");
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("pearson: zero variance");
  return sxy / std::sqrt(sxx * syy);
}

double majority_vote_probability(unsigned n) {
  if (n < 1 || n > 30) throw std::domain_error("n must be in [1, 30]");
  // Pascal row for 2n choose k; C(60,30) < 2^63
  std::vector<std::uint64_t> row{1};
  for (unsigned i = 0; i < 2 * n; ++i) {
    std::vector<std::uint64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  std::uint64_t tail = 0;
  for (std::size_t k = n + 1; k < row.size(); ++k) tail += row[k];
  return static_cast<double>(tail) / std::ldexp(1.0, 2 * static_cast<int>(n));
}

}  // namespace meritrank

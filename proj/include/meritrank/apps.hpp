#ifndef MERITRANK_APPS_HPP
#define MERITRANK_APPS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meritrank/config.hpp"
#include "meritrank/defgraph.hpp"
#include "meritrank/interview.hpp"
#include "meritrank/lexicon.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

struct SummarySentence {
  std::string source_doc;
  std::string text;
  double score = 0.0;
};

struct Summary {
  std::vector<SummarySentence> sentences;
  double ratio = 0.125;
  bool updated = false;  // candidate admitted and sentences reselected
};

/// Interview-gated update summarization: candidate merit, interview by the
/// summary, and value addition combine into a weighted admission score; on
/// admission the top sentences of summary+candidate are reselected to the
/// ratio (floor, minimum one). A candidate adding nothing (empty, or zero
/// edit distance) leaves the summary unchanged. Throws
/// std::invalid_argument on topic mismatch.
Summary update_summarize(const Document& summary, const Document& candidate,
                         const Corpus& corpus, const Lexicon& lex, double ratio,
                         const Config& config);

struct TopicDecision {
  bool same_topic = false;
  double interview_percentage = 0.0;
  double edit_distance_percentage = 0.0;
  double interview_threshold = 0.0;
  double edit_threshold = 0.0;
};

/// same_topic iff interview percentage >= interview_threshold and edit
/// distance percentage <= edit_threshold (a is the reference).
TopicDecision topic_link_detect(const Document& a, const Document& b,
                                const Corpus& corpus, const Lexicon& lex,
                                const Config& config);

/// The story maximizing total pairwise graph edit distance; ties broken by
/// doc_id. Pairwise distances may be computed in parallel.
std::pair<std::string, std::size_t> topic_outlier(std::span<const Document> stories,
                                                  const Corpus& corpus,
                                                  const Lexicon& lex,
                                                  const Config& config,
                                                  Execution exec = Execution::serial);

/// High-indegree definition-graph labels as topic markers.
std::vector<std::string> topic_track(const Document& story, const Corpus& corpus,
                                     const Lexicon& lex, std::size_t depth,
                                     std::size_t k, double threshold);

/// 1 - 6*sum(d^2)/(n(n^2-1)); inputs must be equal-length permutations of
/// 1..n, n >= 2 (std::invalid_argument otherwise).
double spearman(std::span<const int> rank_a, std::span<const int> rank_b);

/// Product-moment correlation; throws std::invalid_argument on length
/// mismatch, n < 2 or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Probability that at least n+1 of 2n fair voters vote "good": exact
/// binomial tail, n in [1, 30] (std::domain_error outside).
double majority_vote_probability(unsigned n);

}  // namespace meritrank

#endif

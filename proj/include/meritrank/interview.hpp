#ifndef MERITRANK_INTERVIEW_HPP
#define MERITRANK_INTERVIEW_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "meritrank/defgraph.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

struct InterviewTuple {
  std::vector<std::string> question;
  std::string answer;
  std::string expectedanswer;
  double score = 0.0;  // jaccard of shingles, in [0,1]
};

struct InterviewResult {
  std::vector<InterviewTuple> tuples;
  double total = 0.0;       // sum of tuple scores
  double percentage = 0.0;  // 100 * total / |tuples|
  bool inducted = false;    // total > threshold
  double threshold = 0.0;
};

struct Question {
  std::vector<std::string> tokens;
  std::string expected;
};

/// Context windows [x-n, x+n] around every occurrence of a query keyword,
/// clipped to the document, overlapping windows merged, tokens rejoined
/// with single spaces.
std::vector<std::string> answer_query(const Document& doc,
                                      std::span<const std::string> query,
                                      std::size_t n);

/// Jaccard of the two strings' shingle sets after plain tokenization
/// (no stopword removal: both sides are already token text).
double score_answer(const std::string& answer, const std::string& expected,
                    std::size_t shingle_n);

/// Unsupervised question generation: top-k reference tokens by tf-idf
/// (1-grams), each with its own context as the expected answer.
std::vector<Question> generate_questions(const Document& reference, const Corpus& corpus,
                                         std::size_t k, std::size_t n);

/// question tokens<TAB>expected answer text, one per line (supervised mode).
std::vector<Question> load_questions(const std::filesystem::path& path);

InterviewResult run_interview(const Document& candidate, std::span<const Question> questions,
                              double threshold, std::size_t shingle_n, std::size_t window_n);

/// Vertices are uniquely labeled, so exact edit distance is the symmetric
/// difference of vertex and edge sets (unit costs).
std::size_t graph_edit_distance(const DefinitionGraph& a, const DefinitionGraph& b);

struct ValueAddition {
  std::size_t edit_distance = 0;
  double percentage = 0.0;  // 100 * distance / (|V union| + |E union|)
};

ValueAddition value_addition(const DefinitionGraph& candidate,
                             const DefinitionGraph& reference);

/// Hierarchy of interviews: weighted scores summed bottom-up.
struct InterviewNode {
  InterviewResult result;
  double weight = 1.0;
  std::vector<InterviewNode> children;
};

double interview_tree_score(const InterviewNode& root);

}  // namespace meritrank

#endif

#include "meritrank/interview.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "meritrank/errors.hpp"

namespace meritrank {

std::vector<std::string> answer_query(const Document& doc,
                                      std::span<const std::string> query,
                                      std::size_t n) {
  std::unordered_set<std::string> keywords(query.begin(), query.end());
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (std::size_t x = 0; x < doc.tokens.size(); ++x) {
    if (!keywords.contains(doc.tokens[x])) continue;
    std::size_t lo = x >= n ? x - n : 0;
    std::size_t hi = std::min(doc.tokens.size() - 1, x + n);
    if (!windows.empty() && lo <= windows.back().second)
      windows.back().second = hi;  // merge overlapping windows
    else
      windows.emplace_back(lo, hi);
  }
  std::vector<std::string> contexts;
  contexts.reserve(windows.size());
  for (const auto& [lo, hi] : windows) {
    std::string text;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i > lo) text += ' ';
      text += doc.tokens[i];
    }
    contexts.push_back(std::move(text));
  }
  return contexts;
}

double score_answer(const std::string& answer, const std::string& expected,
                    std::size_t shingle_n) {
  static const std::unordered_set<std::string> kNoStopwords;
  auto a = tokenize(answer, kNoStopwords);
  auto b = tokenize(expected, kNoStopwords);
  return jaccard(shingles(a, shingle_n), shingles(b, shingle_n));
}

std::vector<Question> generate_questions(const Document& reference, const Corpus& corpus,
                                         std::size_t k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<Question> questions;
  if (reference.tokens.empty()) return questions;

  std::set<std::string> distinct(reference.tokens.begin(), reference.tokens.end());
  std::vector<std::pair<double, std::string>> ranked;
  ranked.reserve(distinct.size());
  for (const auto& token : distinct)
    ranked.emplace_back(tf_idf(token, reference, corpus), token);
  std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  if (ranked.size() > k) ranked.resize(k);

  for (const auto& [score, token] : ranked) {
    Question q;
    q.tokens = {token};
    auto contexts = answer_query(reference, q.tokens, n);
    std::string expected;
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      if (i) expected += ' ';
      expected += contexts[i];
    }
    q.expected = std::move(expected);
    questions.push_back(std::move(q));
  }
  return questions;
}

std::vector<Question> load_questions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open question file: " + path.string());
  static const std::unordered_set<std::string> kNoStopwords;
  std::vector<Question> questions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected question<TAB>expected answer");
    Question q;
    q.tokens = tokenize(line.substr(0, tab), kNoStopwords);
    q.expected = line.substr(tab + 1);
    questions.push_back(std::move(q));
  }
  return questions;
}

InterviewResult run_interview(const Document& candidate, std::span<const Question> questions,
                              double threshold, std::size_t shingle_n,
                              std::size_t window_n) {
  InterviewResult result;
  result.threshold = threshold;
  for (const auto& question : questions) {
    InterviewTuple tuple;
    tuple.question = question.tokens;
    tuple.expectedanswer = question.expected;
    auto contexts = answer_query(candidate, question.tokens, window_n);
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      if (i) tuple.answer += ' ';
      tuple.answer += contexts[i];
    }
    tuple.score = score_answer(tuple.answer, tuple.expectedanswer, shingle_n);
    result.total += tuple.score;
    result.tuples.push_back(std::move(tuple));
  }
  if (!result.tuples.empty())
    result.percentage = 100.0 * result.total / static_cast<double>(result.tuples.size());
  result.inducted = result.total > threshold;
  return result;
}

std::size_t graph_edit_distance(const DefinitionGraph& a, const DefinitionGraph& b) {
  std::size_t distance = 0;
  for (const auto& [label, level] : a.vertices) distance += !b.vertices.contains(label);
  for (const auto& [label, level] : b.vertices) distance += !a.vertices.contains(label);
  for (const auto& edge : a.edges) distance += !b.edges.contains(edge);
  for (const auto& edge : b.edges) distance += !a.edges.contains(edge);
  return distance;
}

ValueAddition value_addition(const DefinitionGraph& candidate,
                             const DefinitionGraph& reference) {
  ValueAddition va;
  va.edit_distance = graph_edit_distance(candidate, reference);

  std::size_t vertex_union = reference.vertices.size();
  for (const auto& [label, level] : candidate.vertices)
    vertex_union += !reference.vertices.contains(label);
  std::size_t edge_union = reference.edges.size();
  for (const auto& edge : candidate.edges) edge_union += !reference.edges.contains(edge);

  std::size_t base = vertex_union + edge_union;
  va.percentage = base == 0 ? 0.0
                            : 100.0 * static_cast<double>(va.edit_distance) /
                                  static_cast<double>(base);
  return va;
}

double interview_tree_score(const InterviewNode& root) {
  double total = root.weight * root.result.total;
  for (const auto& child : root.children) total += interview_tree_score(child);
  return total;
}

}  // namespace meritrank

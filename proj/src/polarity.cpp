#include "meritrank/polarity.hpp"

#include <cmath>

namespace meritrank {

namespace {

PolaritySign majority(std::size_t positive, std::size_t negative) {
  if (positive > negative) return PolaritySign::positive;
  if (negative > positive) return PolaritySign::negative;
  return PolaritySign::neutral;
}

void count_tokens(std::span<const std::string> tokens, const Lexicon& lex,
                  std::size_t& positive, std::size_t& negative) {
  for (const auto& token : tokens) {
    auto senti = lex.sentiment_of(token);
    if (senti.positivity > senti.negativity)
      ++positive;
    else if (senti.negativity > senti.positivity)
      ++negative;
    // equal scores (including 0,0) carry no signal
  }
}

}  // namespace

const char* to_string(PolaritySign sign) {
  switch (sign) {
    case PolaritySign::positive: return "positive";
    case PolaritySign::negative: return "negative";
    case PolaritySign::neutral: return "neutral";
  }
  return "neutral";
}

std::optional<PolarityMethod> parse_polarity_method(std::string_view text) {
  if (text == "lexicon") return PolarityMethod::lexicon;
  if (text == "entropy") return PolarityMethod::entropy;
  if (text == "gloss" || text == "gloss_overlap") return PolarityMethod::gloss_overlap;
  return std::nullopt;
}

PolarityVerdict lexicon_polarity(std::span<const std::string> tokens,
                                 const Lexicon& lex) {
  PolarityVerdict verdict;
  verdict.method = PolarityMethod::lexicon;
  count_tokens(tokens, lex, verdict.positive_count, verdict.negative_count);
  verdict.sign = majority(verdict.positive_count, verdict.negative_count);
  return verdict;
}

PolarityVerdict entropy_polarity(std::span<const std::string> tokens,
                                 const Lexicon& lex) {
  PolarityVerdict verdict;
  verdict.method = PolarityMethod::entropy;
  count_tokens(tokens, lex, verdict.positive_count, verdict.negative_count);
  verdict.sign = majority(verdict.positive_count, verdict.negative_count);

  double bearing =
      static_cast<double>(verdict.positive_count + verdict.negative_count);
  double entropy = 0.0;
  if (bearing > 0) {
    for (std::size_t count : {verdict.positive_count, verdict.negative_count}) {
      if (count == 0) continue;  // 0*log(0) := 0
      double p = static_cast<double>(count) / bearing;
      entropy -= p * std::log2(p);
    }
  }
  verdict.entropy_bits = entropy;
  return verdict;
}

PolarityVerdict gloss_overlap_polarity(const Document& context, const Corpus& corpus,
                                       const Lexicon& lex, std::size_t depth,
                                       double threshold) {
  PolarityVerdict verdict;
  verdict.method = PolarityMethod::gloss_overlap;
  auto graph = build_definition_graph(context, corpus, lex, depth, threshold);
  std::vector<std::string> shared;
  for (const auto& [token, indegree] : graph.indegrees())
    if (indegree >= 2) shared.push_back(token);
  count_tokens(shared, lex, verdict.positive_count, verdict.negative_count);
  verdict.sign = majority(verdict.positive_count, verdict.negative_count);
  return verdict;
}

PolarityVerdict classify_polarity(PolarityMethod method, const Document& context,
                                  const Corpus& corpus, const Lexicon& lex,
                                  std::size_t depth, double threshold) {
  switch (method) {
    case PolarityMethod::lexicon: return lexicon_polarity(context.tokens, lex);
    case PolarityMethod::entropy: return entropy_polarity(context.tokens, lex);
    case PolarityMethod::gloss_overlap:
      return gloss_overlap_polarity(context, corpus, lex, depth, threshold);
  }
  return {};
}

PolaritySign combined_polarity(const Document& context, const Corpus& corpus,
                               const Lexicon& lex, std::size_t depth,
                               double threshold) {
  std::size_t positive = 0, negative = 0;
  for (auto method : {PolarityMethod::lexicon, PolarityMethod::entropy,
                      PolarityMethod::gloss_overlap}) {
    auto sign = classify_polarity(method, context, corpus, lex, depth, threshold).sign;
    if (sign == PolaritySign::positive) ++positive;
    if (sign == PolaritySign::negative) ++negative;
  }
  return majority(positive, negative);
}

}  // namespace meritrank

#ifndef MERITRANK_POLARITY_HPP
#define MERITRANK_POLARITY_HPP

#include <optional>
#include <span>
#include <string>

#include "meritrank/defgraph.hpp"
#include "meritrank/lexicon.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

enum class PolaritySign { positive, negative, neutral };
enum class PolarityMethod { lexicon, entropy, gloss_overlap };

const char* to_string(PolaritySign sign);
std::optional<PolarityMethod> parse_polarity_method(std::string_view text);

struct PolarityVerdict {
  PolaritySign sign = PolaritySign::neutral;
  PolarityMethod method = PolarityMethod::lexicon;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  std::optional<double> entropy_bits;  // present iff method == entropy
};

/// Majority vote of per-token sentiment (positivity vs negativity);
/// neutral on tie or empty input.
PolarityVerdict lexicon_polarity(std::span<const std::string> tokens, const Lexicon& lex);

/// Same vote plus the entropy -p0*log2(p0) - p1*log2(p1) over
/// sentiment-bearing tokens (positivity != negativity). Entropy near zero
/// means a clear-cut viewpoint.
PolarityVerdict entropy_polarity(std::span<const std::string> tokens, const Lexicon& lex);

/// Builds the context's definition graph and votes over the sentiment of
/// vertices with indegree >= 2.
PolarityVerdict gloss_overlap_polarity(const Document& context, const Corpus& corpus,
                                       const Lexicon& lex, std::size_t depth,
                                       double threshold = 0.0);

PolarityVerdict classify_polarity(PolarityMethod method, const Document& context,
                                  const Corpus& corpus, const Lexicon& lex,
                                  std::size_t depth, double threshold = 0.0);

/// Majority sign across the three methods; neutral on a three-way split.
PolaritySign combined_polarity(const Document& context, const Corpus& corpus,
                               const Lexicon& lex, std::size_t depth,
                               double threshold = 0.0);

}  // namespace meritrank

#endif

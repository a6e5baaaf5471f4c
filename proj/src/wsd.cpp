#include "meritrank/wsd.hpp"

namespace meritrank {

std::optional<SenseChoice> lesk_disambiguate(const std::string& lemma,
                                             const std::set<std::string>& context,
                                             const Lexicon& lex) {
  const auto& senses = lex.lookup(lemma);
  if (senses.empty()) return std::nullopt;

  const SenseEntry* best = nullptr;
  std::size_t best_overlap = 0;
  for (const auto& sense : senses) {
    std::set<std::string> gloss(sense.gloss_tokens.begin(), sense.gloss_tokens.end());
    std::size_t overlap = 0;
    for (const auto& token : gloss) overlap += context.count(token);
    if (!best || overlap > best_overlap) {  // first sense wins ties
      best = &sense;
      best_overlap = overlap;
    }
  }
  return SenseChoice{lemma, *best, best_overlap};
}

}  // namespace meritrank

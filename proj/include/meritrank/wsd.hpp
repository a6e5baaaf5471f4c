#ifndef MERITRANK_WSD_HPP
#define MERITRANK_WSD_HPP

#include <optional>
#include <set>
#include <string>

#include "meritrank/lexicon.hpp"

namespace meritrank {

struct SenseChoice {
  std::string lemma;
  SenseEntry chosen;
  std::size_t overlap_count = 0;
};

/// Lesk: among the lemma's senses, pick the one whose gloss shares the most
/// tokens with the context; ties go to the earliest sense in file order.
/// Absent lemma -> nullopt.
std::optional<SenseChoice> lesk_disambiguate(const std::string& lemma,
                                             const std::set<std::string>& context,
                                             const Lexicon& lex);

}  // namespace meritrank

#endif

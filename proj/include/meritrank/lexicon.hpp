#ifndef MERITRANK_LEXICON_HPP
#define MERITRANK_LEXICON_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace meritrank {

enum class Pos { noun, verb, adj, adv };

const char* to_string(Pos pos);
std::optional<Pos> parse_pos(std::string_view text);

/// One sense of a lemma: its gloss (stopword-filtered content tokens) and
/// the sentiment scores attached to it.
struct SenseEntry {
  std::string lemma;
  Pos pos_tag = Pos::noun;
  std::string sense_id;
  std::vector<std::string> gloss_tokens;
  double positivity = 0.0;
  double negativity = 0.0;
};

struct Sentiment {
  double positivity = 0.0;
  double negativity = 0.0;
};

/// Immutable after load; every other module reads senses and sentiment
/// through this. Lookups are case-insensitive and never fail: an absent
/// lemma yields the empty sense sequence.
class Lexicon {
 public:
  const std::vector<SenseEntry>& lookup(std::string_view lemma) const;

  /// Unweighted mean of (positivity, negativity) over all senses of the
  /// lemma; (0,0) when absent.
  Sentiment sentiment_of(std::string_view lemma) const;

  std::size_t entry_count() const { return file_order_.size(); }

  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }
  void set_stopwords(std::unordered_set<std::string> words) { stopwords_ = std::move(words); }

  /// Appends an entry, preserving file order within and across lemmas.
  /// Returns false if the (lemma, sense_id) pair is already present.
  bool add(SenseEntry entry);

  /// Entries in original file order (for serialization).
  std::vector<const SenseEntry*> entries_in_order() const;

 private:
  std::unordered_map<std::string, std::vector<SenseEntry>> entries_;
  // (lemma, index into that lemma's sense vector), in insertion order
  std::vector<std::pair<std::string, std::size_t>> file_order_;
  std::unordered_set<std::string> stopwords_;
};

/// Reads the tab-separated interchange format (header "#meritrank-lexicon v1").
/// Throws IoError / FormatError; format errors carry line and column.
Lexicon load_lexicon(const std::filesystem::path& path);

void write_lexicon(const Lexicon& lex, const std::filesystem::path& path);

/// One word per line; '#' starts a comment.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

struct IngestReport {
  std::size_t entries_written = 0;
  std::size_t entries_skipped = 0;
};

/// Bridges Princeton-style data.{noun,verb,adj,adv} files plus a sentiment
/// TSV (pos, offset, pos_score, neg_score, ...) into the interchange format.
/// Glosses are tokenized and stopword-filtered here, once. Multi-word lemmas
/// (underscore-joined) are additionally indexed under each non-stopword
/// constituent. Entries without a sentiment row get (0,0).
IngestReport ingest_wordnet(const std::filesystem::path& wordnet_dir,
                            const std::filesystem::path& sentiment_file,
                            const std::filesystem::path& out,
                            const std::unordered_set<std::string>& stopwords);

}  // namespace meritrank

#endif

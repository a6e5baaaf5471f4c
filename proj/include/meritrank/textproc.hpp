#ifndef MERITRANK_TEXTPROC_HPP
#define MERITRANK_TEXTPROC_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace meritrank {

/// Half-open range [begin, end) of token indices.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Document {
  std::string doc_id;
  std::string raw_text;
  std::vector<std::string> tokens;          // lowercased, stopword-filtered
  std::vector<SentenceSpan> sentences;      // spans over tokens
  std::vector<std::string> sentence_text;   // raw text per sentence
  std::optional<std::int64_t> timestamp;
  std::optional<std::string> topic_label;
};

struct Corpus {
  std::vector<Document> documents;
  std::unordered_map<std::string, std::size_t> df_table;

  const Document* find(std::string_view doc_id) const;
  void rebuild_df();
};

/// Lowercases, splits on non-alphanumeric (ASCII), drops stopwords and
/// empty pieces; order preserved.
std::vector<std::string> tokenize(std::string_view text,
                                  const std::unordered_set<std::string>& stopwords);

/// Tokenizes and segments into sentences. Boundaries: '.', '?' or '!'
/// followed by whitespace, or a blank line (newswire headlines rarely end
/// with punctuation).
Document make_document(std::string doc_id, std::string raw_text,
                       const std::unordered_set<std::string>& stopwords);

/// Directory of UTF-8 .txt files plus optional meta.tsv
/// (doc_id<TAB>timestamp<TAB>topic_label). Documents sorted by filename.
Corpus load_corpus(const std::filesystem::path& dir,
                   const std::unordered_set<std::string>& stopwords);

/// tf = count/len(doc), idf = ln((1+N)/(1+df)); 0 for an empty document.
double tf_idf(const std::string& term, const Document& doc, const Corpus& corpus);

/// Distinct tokens with tf_idf strictly above the threshold.
std::set<std::string> extract_keywords(const Document& doc, const Corpus& corpus,
                                       double threshold);

struct ShingleSet {
  std::size_t n = 1;
  std::set<std::vector<std::string>> shingles;
};

/// All contiguous n-grams as a set; empty when the sequence is shorter than n.
ShingleSet shingles(std::span<const std::string> tokens, std::size_t n);

/// |a∩b| / |a∪b|; 0 when both empty. Throws std::invalid_argument on
/// mismatched n.
double jaccard(const ShingleSet& a, const ShingleSet& b);

/// Sum of tf_idf over each sentence's tokens, in sentence order.
std::vector<std::pair<SentenceSpan, double>> score_sentences(const Document& doc,
                                                             const Corpus& corpus);

}  // namespace meritrank

#endif

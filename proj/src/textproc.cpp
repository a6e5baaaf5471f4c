#include "meritrank/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "meritrank/errors.hpp"

namespace meritrank {

namespace {

bool is_token_char(unsigned char c) { return std::isalnum(c) != 0; }

std::string trimmed(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && !stopwords.contains(current)) tokens.push_back(current);
    current.clear();
  };
  for (unsigned char c : text) {
    if (is_token_char(c))
      current += static_cast<char>(std::tolower(c));
    else
      flush();
  }
  flush();
  return tokens;
}

Document make_document(std::string doc_id, std::string raw_text,
                       const std::unordered_set<std::string>& stopwords) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.raw_text = std::move(raw_text);

  const std::string& text = doc.raw_text;
  std::string current;
  std::size_t sentence_start_tok = 0;
  std::size_t sentence_start_chr = 0;
  std::size_t newline_run = 0;

  auto flush_token = [&] {
    if (!current.empty() && !stopwords.contains(current)) doc.tokens.push_back(current);
    current.clear();
  };
  auto close_sentence = [&](std::size_t end_chr) {
    std::string raw = trimmed(
        std::string_view(text).substr(sentence_start_chr, end_chr - sentence_start_chr));
    if (!raw.empty()) {
      doc.sentences.push_back({sentence_start_tok, doc.tokens.size()});
      doc.sentence_text.push_back(std::move(raw));
    }
    sentence_start_tok = doc.tokens.size();
    sentence_start_chr = end_chr;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (is_token_char(c)) {
      current += static_cast<char>(std::tolower(c));
      newline_run = 0;
      continue;
    }
    flush_token();
    bool terminal = (c == '.' || c == '?' || c == '!');
    bool at_boundary =
        terminal && (i + 1 >= text.size() ||
                     std::isspace(static_cast<unsigned char>(text[i + 1])));
    if (at_boundary) {
      close_sentence(i + 1);
      newline_run = 0;
      continue;
    }
    if (c == '\n') {
      if (++newline_run == 2) close_sentence(i + 1);  // paragraph break
    } else if (!std::isspace(c)) {
      newline_run = 0;
    }
  }
  flush_token();
  close_sentence(text.size());
  return doc;
}

const Document* Corpus::find(std::string_view doc_id) const {
  for (const auto& doc : documents)
    if (doc.doc_id == doc_id) return &doc;
  return nullptr;
}

void Corpus::rebuild_df() {
  df_table.clear();
  for (const auto& doc : documents) {
    std::set<std::string> seen(doc.tokens.begin(), doc.tokens.end());
    for (const auto& token : seen) ++df_table[token];
  }
}

Corpus load_corpus(const std::filesystem::path& dir,
                   const std::unordered_set<std::string>& stopwords) {
  if (!std::filesystem::is_directory(dir))
    throw IoError("not a directory: " + dir.string());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read: " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    corpus.documents.push_back(
        make_document(file.filename().string(), text.str(), stopwords));
  }

  auto meta = dir / "meta.tsv";
  if (std::filesystem::exists(meta)) {
    std::ifstream in(meta);
    if (!in) throw IoError("cannot read: " + meta.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::istringstream ss(line);
      std::string id, ts, label;
      if (!std::getline(ss, id, '\t'))
        throw FormatError(meta.string() + ":" + std::to_string(lineno) + ": bad line");
      std::getline(ss, ts, '\t');
      std::getline(ss, label, '\t');
      for (auto& doc : corpus.documents) {
        if (doc.doc_id != id) continue;
        if (!ts.empty()) doc.timestamp = std::stoll(ts);
        if (!label.empty()) doc.topic_label = label;
      }
    }
  }
  corpus.rebuild_df();
  return corpus;
}

double tf_idf(const std::string& term, const Document& doc, const Corpus& corpus) {
  if (doc.tokens.empty()) return 0.0;
  auto count = static_cast<double>(
      std::count(doc.tokens.begin(), doc.tokens.end(), term));
  double tf = count / static_cast<double>(doc.tokens.size());
  std::size_t df = 0;
  if (auto it = corpus.df_table.find(term); it != corpus.df_table.end()) df = it->second;
  double idf = std::log((1.0 + static_cast<double>(corpus.documents.size())) /
                        (1.0 + static_cast<double>(df)));
  return tf * idf;
}

std::set<std::string> extract_keywords(const Document& doc, const Corpus& corpus,
                                       double threshold) {
  std::set<std::string> keywords;
  std::set<std::string> distinct(doc.tokens.begin(), doc.tokens.end());
  for (const auto& token : distinct)
    if (tf_idf(token, doc, corpus) > threshold) keywords.insert(token);
  return keywords;
}

ShingleSet shingles(std::span<const std::string> tokens, std::size_t n) {
  if (n < 1) throw std::invalid_argument("shingle size must be >= 1");
  ShingleSet out;
  out.n = n;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    out.shingles.emplace(tokens.begin() + i, tokens.begin() + i + n);
  return out;
}

double jaccard(const ShingleSet& a, const ShingleSet& b) {
  if (a.n != b.n) throw std::invalid_argument("shingle size mismatch");
  if (a.shingles.empty() && b.shingles.empty()) return 0.0;
  std::size_t intersection = 0;
  for (const auto& s : a.shingles) intersection += b.shingles.count(s);
  std::size_t unionsize = a.shingles.size() + b.shingles.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unionsize);
}

std::vector<std::pair<SentenceSpan, double>> score_sentences(const Document& doc,
                                                             const Corpus& corpus) {
  std::vector<std::pair<SentenceSpan, double>> scores;
  scores.reserve(doc.sentences.size());
  for (const auto& span : doc.sentences) {
    double total = 0.0;
    for (std::size_t i = span.begin; i < span.end; ++i)
      total += tf_idf(doc.tokens[i], doc, corpus);
    scores.emplace_back(span, total);
  }
  return scores;
}

}  // namespace meritrank

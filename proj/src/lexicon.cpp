#include "meritrank/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "meritrank/errors.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

namespace {

const std::vector<SenseEntry> kNoSenses;
constexpr std::string_view kHeader = "#meritrank-lexicon v1";

std::string lowercased(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void malformed(const std::filesystem::path& path, std::size_t line,
                            std::size_t column, const std::string& what) {
  std::ostringstream msg;
  msg << path.string() << ":" << line << ":" << column << ": " << what;
  throw FormatError(msg.str());
}

/// At most six decimal places, trailing zeros trimmed.
std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

const char* to_string(Pos pos) {
  switch (pos) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adj: return "adj";
    case Pos::adv: return "adv";
  }
  return "noun";
}

std::optional<Pos> parse_pos(std::string_view text) {
  if (text == "noun") return Pos::noun;
  if (text == "verb") return Pos::verb;
  if (text == "adj") return Pos::adj;
  if (text == "adv") return Pos::adv;
  return std::nullopt;
}

const std::vector<SenseEntry>& Lexicon::lookup(std::string_view lemma) const {
  auto it = entries_.find(lowercased(lemma));
  return it == entries_.end() ? kNoSenses : it->second;
}

Sentiment Lexicon::sentiment_of(std::string_view lemma) const {
  const auto& senses = lookup(lemma);
  if (senses.empty()) return {};
  Sentiment total;
  for (const auto& sense : senses) {
    total.positivity += sense.positivity;
    total.negativity += sense.negativity;
  }
  total.positivity /= static_cast<double>(senses.size());
  total.negativity /= static_cast<double>(senses.size());
  return total;
}

bool Lexicon::add(SenseEntry entry) {
  entry.lemma = lowercased(entry.lemma);
  auto& senses = entries_[entry.lemma];
  for (const auto& existing : senses)
    if (existing.sense_id == entry.sense_id) return false;
  file_order_.emplace_back(entry.lemma, senses.size());
  senses.push_back(std::move(entry));
  return true;
}

std::vector<const SenseEntry*> Lexicon::entries_in_order() const {
  std::vector<const SenseEntry*> out;
  out.reserve(file_order_.size());
  for (const auto& [lemma, idx] : file_order_)
    out.push_back(&entries_.at(lemma)[idx]);
  return out;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path.string());

  std::string line;
  if (!std::getline(in, line)) malformed(path, 1, 1, "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    malformed(path, 1, 1, "bad header, expected '" + std::string(kHeader) + "'");

  Lexicon lex;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    // five tab-separated fields, then space-joined gloss tokens
    std::vector<std::string> fields;
    std::vector<std::size_t> starts;
    std::size_t pos = 0;
    while (fields.size() < 5) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos)
        malformed(path, lineno, pos + 1, "expected 6 tab-separated fields");
      starts.push_back(pos);
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    starts.push_back(pos);
    fields.push_back(line.substr(pos));

    SenseEntry entry;
    entry.lemma = fields[0];
    if (entry.lemma.empty())
      malformed(path, lineno, starts[0] + 1, "empty lemma");
    if (entry.lemma.find_first_of(" \t") != std::string::npos)
      malformed(path, lineno, starts[0] + 1, "lemma contains whitespace");

    auto pos_tag = parse_pos(fields[1]);
    if (!pos_tag)
      malformed(path, lineno, starts[1] + 1, "unknown pos tag '" + fields[1] + "'");
    entry.pos_tag = *pos_tag;

    entry.sense_id = fields[2];
    if (entry.sense_id.empty())
      malformed(path, lineno, starts[2] + 1, "empty sense id");

    for (int i : {3, 4}) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(fields[i], &used);
      } catch (const std::exception&) {
        malformed(path, lineno, starts[i] + 1, "bad real '" + fields[i] + "'");
      }
      if (used != fields[i].size() || value < 0.0 || value > 1.0)
        malformed(path, lineno, starts[i] + 1,
                  "sentiment score out of [0,1]: '" + fields[i] + "'");
      (i == 3 ? entry.positivity : entry.negativity) = value;
    }
    if (entry.positivity + entry.negativity > 1.0 + 1e-9)
      malformed(path, lineno, starts[3] + 1, "positivity + negativity > 1");

    std::istringstream gloss(fields[5]);
    std::string token;
    while (gloss >> token) entry.gloss_tokens.push_back(token);
    if (entry.gloss_tokens.empty())
      malformed(path, lineno, starts[5] + 1, "empty gloss");

    std::string lemma = entry.lemma;
    std::string sense = entry.sense_id;
    if (!lex.add(std::move(entry)))
      malformed(path, lineno, starts[0] + 1,
                "duplicate (lemma, sense_id): " + lemma + ", " + sense);
  }
  return lex;
}

void write_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write lexicon: " + path.string());
  out << kHeader << '\n';
  for (const SenseEntry* entry : lex.entries_in_order()) {
    out << entry->lemma << '\t' << to_string(entry->pos_tag) << '\t'
        << entry->sense_id << '\t' << format_real(entry->positivity) << '\t'
        << format_real(entry->negativity) << '\t';
    for (std::size_t i = 0; i < entry->gloss_tokens.size(); ++i) {
      if (i) out << ' ';
      out << entry->gloss_tokens[i];
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword list: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string word;
    while (ss >> word) words.insert(lowercased(word));
  }
  return words;
}

namespace {

struct RawSynset {
  std::string offset;
  char ss_type = 'n';
  std::vector<std::string> words;
  std::string gloss;
};

// data.pos line: offset lex_filenum ss_type w_cnt word lex_id [...] ... | gloss
std::optional<RawSynset> parse_data_line(const std::string& line) {
  std::istringstream ss(line);
  RawSynset syn;
  std::string lex_filenum, wcnt_hex;
  if (!(ss >> syn.offset >> lex_filenum >> syn.ss_type >> wcnt_hex)) return std::nullopt;
  std::size_t wcnt = 0;
  try {
    wcnt = std::stoul(wcnt_hex, nullptr, 16);  // word count is hexadecimal
  } catch (const std::exception&) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < wcnt; ++i) {
    std::string word, lex_id;
    if (!(ss >> word >> lex_id)) return std::nullopt;
    // strip adjective syntax markers like "(p)"
    auto paren = word.find('(');
    if (paren != std::string::npos) word.erase(paren);
    if (!word.empty()) syn.words.push_back(lowercased(word));
  }
  auto bar = line.find('|');
  if (bar == std::string::npos) return std::nullopt;
  syn.gloss = line.substr(bar + 1);
  return syn;
}

char sentiment_pos_letter(char ss_type) {
  return ss_type == 's' ? 'a' : ss_type;  // satellites share adjective offsets
}

std::optional<Pos> pos_from_ss_type(char ss_type) {
  switch (ss_type) {
    case 'n': return Pos::noun;
    case 'v': return Pos::verb;
    case 'a':
    case 's': return Pos::adj;
    case 'r': return Pos::adv;
    default: return std::nullopt;
  }
}

}  // namespace

IngestReport ingest_wordnet(const std::filesystem::path& wordnet_dir,
                            const std::filesystem::path& sentiment_file,
                            const std::filesystem::path& out,
                            const std::unordered_set<std::string>& stopwords) {
  if (!std::filesystem::is_directory(wordnet_dir))
    throw IoError("not a directory: " + wordnet_dir.string());

  // sentiment rows keyed by pos letter + offset
  std::map<std::string, Sentiment> sentiment;
  std::size_t skipped = 0;
  {
    std::ifstream in(sentiment_file);
    if (!in) throw IoError("cannot open sentiment file: " + sentiment_file.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      std::string pos, offset;
      double positive = 0.0, negative = 0.0;
      if (!(ss >> pos >> offset >> positive >> negative)) continue;
      if (positive < 0 || negative < 0 || positive + negative > 1.0 + 1e-9) {
        ++skipped;
        continue;
      }
      sentiment[pos + offset] = {positive, negative};
    }
  }

  std::ofstream dest(out);
  if (!dest) throw IoError("cannot write lexicon: " + out.string());
  dest << kHeader << '\n';

  std::size_t written = 0;
  std::set<std::pair<std::string, std::string>> seen;  // (lemma, sense_id)

  auto emit = [&](const std::string& lemma, Pos pos, const std::string& sense_id,
                  const Sentiment& senti, const std::vector<std::string>& gloss) {
    if (!seen.emplace(lemma, sense_id).second) {
      ++skipped;
      return;
    }
    dest << lemma << '\t' << to_string(pos) << '\t' << sense_id << '\t'
         << format_real(senti.positivity) << '\t' << format_real(senti.negativity)
         << '\t';
    for (std::size_t i = 0; i < gloss.size(); ++i) {
      if (i) dest << ' ';
      dest << gloss[i];
    }
    dest << '\n';
    ++written;
  };

  for (const char* name : {"data.noun", "data.verb", "data.adj", "data.adv"}) {
    auto file = wordnet_dir / name;
    std::ifstream in(file);
    if (!in) continue;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == ' ') continue;  // license banner
      auto syn = parse_data_line(line);
      if (!syn) {
        ++skipped;
        continue;
      }
      auto pos = pos_from_ss_type(syn->ss_type);
      if (!pos) {
        ++skipped;
        continue;
      }
      auto gloss = tokenize(syn->gloss, stopwords);
      if (gloss.empty()) {
        ++skipped;
        continue;
      }
      std::string sense_id = std::string(1, sentiment_pos_letter(syn->ss_type)) + syn->offset;
      Sentiment senti;
      if (auto it = sentiment.find(sense_id); it != sentiment.end()) senti = it->second;
      for (const auto& word : syn->words) {
        emit(word, *pos, sense_id, senti, gloss);
        if (word.find('_') == std::string::npos) continue;
        // index multi-word lemmas under each constituent too
        for (const auto& part : tokenize(word, stopwords))
          emit(part, *pos, sense_id, senti, gloss);
      }
    }
  }
  if (!dest) throw IoError("write failed: " + out.string());
  return {written, skipped};
}

}  // namespace meritrank

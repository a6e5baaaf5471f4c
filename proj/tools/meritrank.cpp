#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meritrank/apps.hpp"
#include "meritrank/citeflow.hpp"
#include "meritrank/config.hpp"
#include "meritrank/errors.hpp"
#include "meritrank/interview.hpp"
#include "meritrank/lexicon.hpp"

namespace {

using namespace meritrank;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;
constexpr int kExitConfig = 4;

struct Cli {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  bool serial = false;
  Config config;
  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }
};

void add_common(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--config", cli.config_path, "config file (key=value lines)");
  cmd->add_option("--set", cli.overrides, "override a config key (key=value)");
  cmd->add_flag("--serial", cli.serial, "disable the parallel kernels");
}

void finalize_config(Cli& cli) {
  if (cli.config_path.empty()) {
    if (const char* env = std::getenv("MERITRANK_CONFIG")) cli.config_path = env;
  }
  if (!cli.config_path.empty()) cli.config = load_config(cli.config_path);
  for (const auto& entry : cli.overrides) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value");
    apply_setting(cli.config, entry.substr(0, eq), entry.substr(eq + 1));
  }
  cli.config.validate();
}

Lexicon load_configured_lexicon(const Cli& cli) {
  if (cli.config.lexicon_path.empty())
    throw ConfigError("lexicon_path is not configured");
  if (cli.config.stopword_path.empty())
    throw ConfigError("stopword_path is not configured");
  Lexicon lex = load_lexicon(cli.config.lexicon_path);
  lex.set_stopwords(load_stopwords(cli.config.stopword_path));
  return lex;
}

const Document& doc_or_throw(const Corpus& corpus, const std::string& id) {
  const Document* doc = corpus.find(id);
  if (!doc) throw FormatError("no such document in corpus: " + id);
  return *doc;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void print_interview_block(const InterviewResult& interview, const ValueAddition& va) {
  std::cout << "Interview score:" << format_double(interview.total) << "\n";
  std::cout << "Interview score(in percentage correctness): "
            << format_double(interview.percentage) << "\n";
  std::cout << "Edit Distance (as percentage value addition from reference):"
            << format_double(va.percentage) << "\n";
}

int cmd_ingest(Cli& cli, const std::string& wordnet_dir, const std::string& sentiment,
               const std::string& out) {
  auto stopwords = cli.config.stopword_path.empty()
                       ? std::unordered_set<std::string>{}
                       : load_stopwords(cli.config.stopword_path);
  auto report = ingest_wordnet(wordnet_dir, sentiment, out, stopwords);
  std::cout << "entries written: " << report.entries_written << "\n";
  std::cout << "entries skipped: " << report.entries_skipped << "\n";
  return kExitOk;
}

int cmd_rank_intrinsic(Cli& cli, const std::string& corpus_dir) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());

  std::vector<MeritReport> reports(corpus.documents.size());
  // per-document scoring is independent; ordering below is deterministic
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    auto graph = build_definition_graph(corpus.documents[i], corpus, lex,
                                        cli.config.depth, cli.config.tfidf_threshold,
                                        cli.exec());
    reports[i] = make_merit_report(corpus.documents[i], graph,
                                   cli.config.relatedness_mode);
  }
  std::sort(reports.begin(), reports.end(),
            [](const MeritReport& a, const MeritReport& b) {
              if (a.score != b.score) return a.score < b.score;  // ascending
              return a.doc_id < b.doc_id;
            });
  for (const auto& report : reports)
    std::cout << format_merit_report(report) << "\n";
  return kExitOk;
}

int cmd_rank_citations(Cli& cli, const std::string& matrix, const std::string& links,
                       const std::string& corpus_dir, std::size_t radius) {
  CitationGraph graph;
  if (!matrix.empty()) {
    graph = citation_graph_from_matrix(matrix);
  } else {
    if (links.empty() || corpus_dir.empty())
      throw ConfigError("need --matrix, or --links with --corpus");
    Lexicon lex = load_configured_lexicon(cli);
    Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
    auto records = load_links(links);
    graph = build_citation_graph(corpus, records, lex, cli.config.polarity_method,
                                 cli.config.depth);
    if (graph.dropped_chronology > 0)
      std::cerr << "warning: dropped " << graph.dropped_chronology
                << " chronology-violating links\n";
  }
  auto ranking = rank_by_maxflow(graph, cli.config.avg_divisor, cli.config.neg_edges,
                                 cli.exec());
  std::cout << "Average concept maxflow out of each page:\n";
  for (const auto& doc : ranking.order)
    std::cout << doc << "\t" << format_double(ranking.per_source.at(doc)) << "\n";
  for (const auto& doc : graph.vertices)
    std::cout << "Number of nodes within radius " << radius << " of the source "
              << doc << " = " << radius_count(graph, doc, radius) << "\n";
  return kExitOk;
}

int cmd_interview(Cli& cli, const std::string& corpus_dir, const std::string& reference,
                  const std::string& candidate, const std::string& questions_file) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
  const Document& ref = doc_or_throw(corpus, reference);
  const Document& cand = doc_or_throw(corpus, candidate);

  std::vector<Question> questions =
      questions_file.empty()
          ? generate_questions(ref, corpus, cli.config.questions_k, cli.config.window_n)
          : load_questions(questions_file);
  auto result = run_interview(cand, questions, cli.config.reference_threshold,
                              cli.config.shingle_n, cli.config.window_n);
  auto ref_graph = build_definition_graph(ref, corpus, lex, cli.config.depth,
                                          cli.config.tfidf_threshold, cli.exec());
  auto cand_graph = build_definition_graph(cand, corpus, lex, cli.config.depth,
                                           cli.config.tfidf_threshold, cli.exec());
  auto va = value_addition(cand_graph, ref_graph);
  print_interview_block(result, va);
  std::cout << (result.inducted ? "inducted" : "not inducted") << "\n";
  return kExitOk;
}

int cmd_summarize(Cli& cli, const std::string& corpus_dir, const std::string& summary_id,
                  const std::string& candidate_id, const std::string& audit) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
  const Document& summary = doc_or_throw(corpus, summary_id);
  const Document& candidate = doc_or_throw(corpus, candidate_id);

  Summary result = update_summarize(summary, candidate, corpus, lex,
                                    cli.config.summary_ratio, cli.config);
  for (const auto& sentence : result.sentences) std::cout << sentence.text << "\n";
  if (!audit.empty()) {
    std::ofstream out(audit);
    if (!out) throw IoError("cannot write audit file: " + audit);
    for (const auto& sentence : result.sentences) {
      std::string flat = sentence.text;  // TSV rows are line-oriented
      std::replace(flat.begin(), flat.end(), '\n', ' ');
      out << flat << "\t" << sentence.source_doc << "\t"
          << format_double(sentence.score) << "\n";
    }
  }
  return kExitOk;
}

int cmd_topic_link(Cli& cli, const std::string& corpus_dir, const std::string& a,
                   const std::string& b) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
  const Document& da = doc_or_throw(corpus, a);
  const Document& db = doc_or_throw(corpus, b);
  auto decision = topic_link_detect(da, db, corpus, lex, cli.config);
  std::cout << "Interview score(in percentage correctness): "
            << format_double(decision.interview_percentage) << "\n";
  std::cout << "Edit Distance (as percentage value addition from reference):"
            << format_double(decision.edit_distance_percentage) << "\n";
  std::cout << "Topic Link Detection - " << a << " and " << b
            << (decision.same_topic ? " discuss same topic"
                                    : " do not discuss same topic")
            << "\n";
  return kExitOk;
}

int cmd_topic_detect(Cli& cli, const std::string& corpus_dir,
                     std::vector<std::string> ids) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
  std::vector<Document> stories;
  if (ids.empty())
    stories = corpus.documents;
  else
    for (const auto& id : ids) stories.push_back(doc_or_throw(corpus, id));

  // per-story farthest partner, then the overall outlier
  std::vector<DefinitionGraph> graphs(stories.size());
  for (std::size_t i = 0; i < stories.size(); ++i)
    graphs[i] = build_definition_graph(stories[i], corpus, lex, cli.config.depth,
                                       cli.config.tfidf_threshold, cli.exec());
  for (std::size_t i = 0; i < stories.size(); ++i) {
    std::size_t farthest = i;
    std::size_t best = 0;
    for (std::size_t j = 0; j < stories.size(); ++j) {
      if (i == j) continue;
      std::size_t d = graph_edit_distance(graphs[i], graphs[j]);
      if (d > best || (d == best && stories[j].doc_id < stories[farthest].doc_id)) {
        best = d;
        farthest = j;
      }
    }
    if (farthest != i)
      std::cout << "Topic Detection - News story " << stories[farthest].doc_id
                << " has largest pairwise editdistance from " << stories[i].doc_id
                << " and least likely to be in this topic\n";
  }
  auto [outlier, total] = topic_outlier(stories, corpus, lex, cli.config, cli.exec());
  std::cout << "Outlier - " << outlier << " (total pairwise edit distance " << total
            << ")\n";
  return kExitOk;
}

int cmd_topic_track(Cli& cli, const std::string& corpus_dir, const std::string& id,
                    std::size_t k) {
  Lexicon lex = load_configured_lexicon(cli);
  Corpus corpus = load_corpus(corpus_dir, lex.stopwords());
  const Document& doc = doc_or_throw(corpus, id);
  for (const auto& label :
       topic_track(doc, corpus, lex, cli.config.depth, k, cli.config.tfidf_threshold))
    std::cout << label << "\n";
  return kExitOk;
}

int cmd_eval_corr(const std::string& file, const std::string& method) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open rank file: " + file);
  std::vector<double> col_a, col_b;
  double a = 0.0, b = 0.0;
  while (in >> a >> b) {
    col_a.push_back(a);
    col_b.push_back(b);
  }
  if (!in.eof()) throw FormatError(file + ": expected two numeric columns");

  if (method == "spearman" || method == "both") {
    std::vector<int> ra(col_a.size()), rb(col_b.size());
    for (std::size_t i = 0; i < col_a.size(); ++i) {
      ra[i] = static_cast<int>(col_a[i]);
      rb[i] = static_cast<int>(col_b[i]);
    }
    std::cout << "spearman: " << format_double(spearman(ra, rb)) << "\n";
  }
  if (method == "pearson" || method == "both")
    std::cout << "pearson: " << format_double(pearson(col_a, col_b)) << "\n";
  return kExitOk;
}

int cmd_vote_prob(unsigned n) {
  for (unsigned i = 1; i <= n; ++i)
    std::cout << i << "\t" << format_double(majority_vote_probability(i)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"document merit analysis toolkit"};
  app.require_subcommand(1);
  Cli cli;

  std::string wordnet_dir, sentiment, out;
  auto* ingest = app.add_subcommand("ingest", "build a lexicon from WordNet-style dumps");
  ingest->add_option("--wordnet-dir", wordnet_dir)->required();
  ingest->add_option("--sentiment", sentiment)->required();
  ingest->add_option("--out", out)->required();
  add_common(ingest, cli);

  std::string corpus_dir;
  auto* rank = app.add_subcommand("rank-intrinsic",
                                  "rank a corpus by intrinsic merit (ascending)");
  rank->add_option("--corpus", corpus_dir)->required();
  add_common(rank, cli);

  std::string matrix, links, cite_corpus;
  std::size_t radius = 2;
  auto* cite = app.add_subcommand("rank-citations",
                                  "rank documents by average citation maxflow");
  cite->add_option("--matrix", matrix);
  cite->add_option("--links", links);
  cite->add_option("--corpus", cite_corpus);
  cite->add_option("--radius", radius);
  add_common(cite, cli);

  std::string iv_corpus, iv_ref, iv_cand, iv_questions;
  auto* interview = app.add_subcommand("interview",
                                       "interview a candidate against a reference");
  interview->add_option("--corpus", iv_corpus)->required();
  interview->add_option("--reference", iv_ref)->required();
  interview->add_option("--candidate", iv_cand)->required();
  interview->add_option("--questions", iv_questions);
  add_common(interview, cli);

  std::string sm_corpus, sm_summary, sm_cand, sm_audit;
  auto* summarize = app.add_subcommand("summarize", "update a summary with a candidate");
  summarize->add_option("--corpus", sm_corpus)->required();
  summarize->add_option("--summary", sm_summary)->required();
  summarize->add_option("--candidate", sm_cand)->required();
  summarize->add_option("--audit", sm_audit);
  add_common(summarize, cli);

  std::string tl_corpus, tl_a, tl_b;
  auto* topic_link = app.add_subcommand("topic-link",
                                        "decide whether two stories share a topic");
  topic_link->add_option("--corpus", tl_corpus)->required();
  topic_link->add_option("--a", tl_a)->required();
  topic_link->add_option("--b", tl_b)->required();
  add_common(topic_link, cli);

  std::string td_corpus;
  std::vector<std::string> td_ids;
  auto* topic_detect = app.add_subcommand("topic-detect",
                                          "find the outlier story in a set");
  topic_detect->add_option("--corpus", td_corpus)->required();
  topic_detect->add_option("--docs", td_ids);
  add_common(topic_detect, cli);

  std::string tt_corpus, tt_doc;
  std::size_t tt_k = 5;
  auto* topic_track_cmd = app.add_subcommand("topic-track",
                                             "label a story by high-indegree vertices");
  topic_track_cmd->add_option("--corpus", tt_corpus)->required();
  topic_track_cmd->add_option("--doc", tt_doc)->required();
  topic_track_cmd->add_option("--k", tt_k);
  add_common(topic_track_cmd, cli);

  std::string ec_file, ec_method = "both";
  auto* eval_corr = app.add_subcommand("eval-corr",
                                       "rank correlation from a two-column file");
  eval_corr->add_option("--file", ec_file)->required();
  eval_corr->add_option("--method", ec_method)
      ->check(CLI::IsMember({"spearman", "pearson", "both"}));

  unsigned vp_n = 30;
  auto* vote_prob = app.add_subcommand("vote-prob",
                                       "majority-vote probability series");
  vote_prob->add_option("--n", vp_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    finalize_config(cli);
    if (ingest->parsed()) return cmd_ingest(cli, wordnet_dir, sentiment, out);
    if (rank->parsed()) return cmd_rank_intrinsic(cli, corpus_dir);
    if (cite->parsed()) return cmd_rank_citations(cli, matrix, links, cite_corpus, radius);
    if (interview->parsed()) return cmd_interview(cli, iv_corpus, iv_ref, iv_cand, iv_questions);
    if (summarize->parsed()) return cmd_summarize(cli, sm_corpus, sm_summary, sm_cand, sm_audit);
    if (topic_link->parsed()) return cmd_topic_link(cli, tl_corpus, tl_a, tl_b);
    if (topic_detect->parsed()) return cmd_topic_detect(cli, td_corpus, td_ids);
    if (topic_track_cmd->parsed()) return cmd_topic_track(cli, tt_corpus, tt_doc, tt_k);
    if (eval_corr->parsed()) return cmd_eval_corr(ec_file, ec_method);
    if (vote_prob->parsed()) return cmd_vote_prob(vp_n);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitOk;
}

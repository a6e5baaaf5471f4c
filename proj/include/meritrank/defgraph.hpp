#ifndef MERITRANK_DEFGRAPH_HPP
#define MERITRANK_DEFGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "meritrank/lexicon.hpp"
#include "meritrank/textproc.hpp"

namespace meritrank {

/// A token produced by two or more parents at one expansion step. The
/// builder emits one event per shared token (overlap_length 1, parents =
/// distinct producers); the relatedness functions accept arbitrary lengths.
struct OverlapEvent {
  std::size_t level = 0;           // expansion step, >= 1
  std::size_t parents = 0;         // >= 2
  std::size_t overlap_length = 1;  // >= 1
  std::string token;
};

enum class Execution { serial, parallel };

/// Leveled token graph from generalized recursive gloss expansion.
/// Vertices are unique token labels; edges record every parent->gloss-token
/// production, including productions merged into vertices of earlier levels.
struct DefinitionGraph {
  std::map<std::string, std::size_t> vertices;  // label -> first level
  std::set<std::pair<std::string, std::string>> edges;
  std::vector<std::set<std::string>> levels;    // levels[0] = keywords
  std::size_t depth = 0;                        // expansion steps performed
  std::vector<OverlapEvent> overlap_events;
  std::vector<std::size_t> shrink_per_level;    // one entry per step

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  /// Earliest step with an overlap event; 0 when none occurred.
  std::size_t first_convergence_level() const;

  std::map<std::string, std::size_t> indegrees() const;
};

/// Expands the document's keyword set through Lesk-chosen glosses for
/// `depth` steps (or until a level comes up empty), merging tokens already
/// seen at previous levels. Keywords missing from the lexicon stay as leaf
/// vertices; a missing plural falls back to the trailing-'s'-stripped form.
/// Parallel execution partitions each level's keywords across threads and
/// merges order-independently; results are identical to serial.
DefinitionGraph build_definition_graph(const Document& doc, const Corpus& corpus,
                                       const Lexicon& lex, std::size_t depth,
                                       double threshold,
                                       Execution exec = Execution::serial);

std::uint64_t relatedness_linear(std::span<const OverlapEvent> events);
std::uint64_t relatedness_quadratic(std::span<const OverlapEvent> events);

/// x^d - V.
double convergence_factor(double x, std::size_t d, std::size_t vertices);

/// V * E * rel / f. Throws std::domain_error when f < 1; callers that hit
/// the no-convergence sentinel report a zero score instead (see
/// make_merit_report).
double intrinsic_merit(std::size_t vertices, std::size_t edges, std::uint64_t rel,
                       std::size_t f);

/// E*V*(E^d - V^d) / (V^d * f). Throws std::domain_error when V == 0.
double intrinsic_merit_closed_form(std::size_t edges, std::size_t vertices,
                                   std::size_t d, std::size_t f);

enum class RelatednessMode { linear, quadratic };

struct MeritReport {
  std::string doc_id;
  std::uint64_t relatedness = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t firstconvergencelevel = 0;  // 0 sentinel = no convergence
  std::size_t depth = 0;
  std::size_t keyword_count = 0;
  double avg_branching = 0.0;  // x = E/V
  double convergence = 0.0;    // x^d - V
  double score = 0.0;
  bool no_convergence = false;
  std::optional<std::string> topic_label;
};

MeritReport make_merit_report(const Document& doc, const DefinitionGraph& graph,
                              RelatednessMode mode);

/// doc_id<TAB>relatedness<TAB>V<TAB>E<TAB>f<TAB>score
std::string format_merit_report(const MeritReport& report);

struct NormalizedScores {
  std::vector<MeritReport> reports;
  bool all_zero = false;
};

/// Divides every score by the maximum. Reports must share one topic label
/// (std::invalid_argument otherwise); all-zero inputs are returned unchanged
/// with the flag set.
NormalizedScores normalize_scores(std::vector<MeritReport> reports);

enum class RelativeMerit { a_greater, b_greater, incomparable };

/// Strict domination on keywords, relatedness, branching factor, (lower)
/// first convergence level and depth; anything else is incomparable.
RelativeMerit relative_merit(const MeritReport& a, const MeritReport& b);

/// Top-k vertices by indegree (>= 1), ties broken lexicographically.
std::vector<std::pair<std::string, std::size_t>> top_indegree_labels(
    const DefinitionGraph& graph, std::size_t k);

}  // namespace meritrank

#endif

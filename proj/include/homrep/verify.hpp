#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homrep/automorphism.hpp"
#include "homrep/graph.hpp"
#include "homrep/representation.hpp"

namespace homrep {

/// Exhaustive cross-checks of the structural classification against the
/// brute-force kernel, over every labelled connected graph up to n_max
/// vertices plus seeded random families.
struct VerifyConfig {
  int n_max = 6;
  /// Random automorphism pairs per graph at the largest order.
  std::size_t pair_samples = 200;
  std::vector<std::uint64_t> basis_seeds{1, 2, 3, 4, 5};
  std::uint64_t sample_seed = 20210601;
  std::size_t family_instances = 50;
  std::uint64_t family_seed = 7;
  std::size_t cap = kDefaultAutomorphismCap;
  /// Largest order checked with every automorphism pair / full conjugacy.
  int exhaustive_n_max = 5;
  int rooted_tree_max = 7;
};

struct CriterionResult {
  CriterionResult(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  int id = 0;
  std::string title;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Informational lines (reported findings that are not assertions).
  std::vector<std::string> notes;
  /// Edge list of the first offending graph.
  std::optional<std::string> reproducer;
  std::string detail;

  void fail(const Graph& g, std::string why);
};

struct CorpusEntry {
  Graph graph;
  RepresentationReport rep;  // under the deterministic basis
};

class Corpus {
 public:
  /// Every labelled connected graph with 2 <= n <= n_max, in enumeration
  /// order, with its full group and representation.
  Corpus(int n_max, std::size_t cap);

  std::span<const CorpusEntry> entries() const noexcept { return entries_; }
  std::size_t count(int n) const;
  int n_max() const noexcept { return n_max_; }

 private:
  int n_max_;
  std::vector<CorpusEntry> entries_;
};

using Progress = std::function<void(const std::string&)>;

CriterionResult check_classification(const Corpus& corpus);
CriterionResult check_homomorphism(const Corpus& corpus, const VerifyConfig& cfg);
CriterionResult check_basis_independence(const Corpus& corpus, const VerifyConfig& cfg);
CriterionResult check_kernel_structure(const Corpus& corpus);
CriterionResult check_no_leaf_graphs(const Corpus& corpus);
CriterionResult check_periodic_family(const VerifyConfig& cfg);
CriterionResult check_mod_p(const Corpus& corpus);
CriterionResult check_numerals();
CriterionResult check_canonical_forms(const Corpus& corpus, const VerifyConfig& cfg);

/// All criteria in order. Requires 2 <= cfg.n_max <= 6.
std::vector<CriterionResult> run_verification(const VerifyConfig& cfg, const Progress& progress = {});

namespace brute {

/// All n! permutations filtered by is_automorphism.
std::size_t automorphism_count(const Graph& g);

/// Canonical key of a rooted tree by minimising over every root-fixing
/// relabelling. Two trees are isomorphic as rooted trees iff keys match.
std::vector<Edge> rooted_tree_key(int n, std::span<const Edge> edges, Vertex root);

/// Searches all permutations for an automorphism that maps the unique cycle
/// onto itself as a non-zero rotation preserving orientation.
bool has_cycle_rotation(const Graph& g);

}  // namespace brute

}  // namespace homrep

#pragma once

// Breadth-first successive difference substitution (KSDS).
//
// Each round replaces every frontier form g by its n! images g(B_sigma X),
// drops trivially positive images, and stops at the first trivially
// negative one. An empty frontier proves f >= 0 on the nonnegative orthant;
// a trivially negative image along path (s1..sm) gives the exact witness
// f(B_s1 ... B_sm (1,...,1)^T) < 0. Running out of depth is inconclusive.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sds/form.hpp"
#include "sds/majorder.hpp"
#include "sds/subst.hpp"

namespace sds {

struct SearchNode {
  Form form;                     ///< content-normalized image of the input
  std::vector<Permutation> path;  ///< sigma_1, ..., sigma_m in application order

  std::size_t depth() const { return path.size(); }
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t trivially_positive_pruned = 0;
  std::uint64_t dedup_hits = 0;
  std::uint64_t max_frontier_size = 0;
  bool budget_exhausted = false;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class VerdictKind { PSD, NotPSD, Inconclusive };

const char* to_string(VerdictKind kind);  // "psd", "not_psd", "inconclusive"

struct Witness {
  std::vector<Permutation> path;
  Point point;
  Rational value;  ///< f(point), always < 0
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t depth_reached = 0;
  std::optional<Witness> witness;
  std::optional<MajorizationReport> necessary;
  SearchStats stats;
};

struct KsdsOptions {
  bool check_necessary = false;
  bool dedup = true;
  std::uint64_t node_budget = 1'000'000;
  std::size_t max_variables = kDefaultMaxVariables;
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mutable state shared by the rounds of one run.
struct SearchState {
  std::set<Form> seen;  ///< content-normalized forms met so far
  SearchStats stats;
};

struct FrontierExpansion {
  std::vector<SearchNode> next;
  std::uint64_t pruned = 0;
  std::uint64_t dedup_hits = 0;
  /// First trivially negative child in (parent, sigma) order. When set,
  /// `next` holds only the children produced before it.
  std::optional<SearchNode> negative;
};

/// One round of the search. Children are produced parent by parent with
/// sigma in lexicographic order. Throws NodeBudgetExceeded if expanding the
/// whole frontier would push state.stats.nodes_expanded past `node_budget`.
FrontierExpansion expand_frontier(const std::vector<SearchNode>& frontier,
                                  const SubstitutionTemplate& t, bool dedup, SearchState& state,
                                  std::uint64_t node_budget = UINT64_MAX);
/// Same, with a fresh state.
FrontierExpansion expand_frontier(const std::vector<SearchNode>& frontier,
                                  const SubstitutionTemplate& t, bool dedup);

/// B_s1 B_s2 ... B_sm (1,...,1)^T.
Point witness_point(const std::vector<Permutation>& path, const SubstitutionTemplate& t);

Verdict ksds_run(const Form& f, const SubstitutionTemplate& t, std::size_t max_depth,
                 const KsdsOptions& opts = {});

}  // namespace sds

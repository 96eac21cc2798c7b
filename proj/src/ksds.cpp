#include "sds/ksds.hpp"

#include <algorithm>

namespace sds {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::PSD:
      return "psd";
    case VerdictKind::NotPSD:
      return "not_psd";
    case VerdictKind::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// B_sigma for every sigma, lexicographic; built once per round.
std::vector<std::pair<Permutation, Matrix>> substitution_matrices(const SubstitutionTemplate& t) {
  std::vector<std::pair<Permutation, Matrix>> out;
  for (auto& sigma : all_permutations(t.size())) {
    Matrix b = build_B(sigma, t);
    out.emplace_back(std::move(sigma), std::move(b));
  }
  return out;
}

}  // namespace

FrontierExpansion expand_frontier(const std::vector<SearchNode>& frontier,
                                  const SubstitutionTemplate& t, bool dedup, SearchState& state,
                                  std::uint64_t node_budget) {
  FrontierExpansion out;
  if (frontier.empty()) return out;
  if (frontier.size() > node_budget || state.stats.nodes_expanded > node_budget - frontier.size()) {
    state.stats.budget_exhausted = true;
    throw NodeBudgetExceeded("node budget of " + std::to_string(node_budget) + " exceeded");
  }
  const auto matrices = substitution_matrices(t);
  for (const SearchNode& parent : frontier) {
    ++state.stats.nodes_expanded;
    for (const auto& [sigma, b] : matrices) {
      Form image = apply_substitution(parent.form, b);
      if (is_trivially_positive(image)) {
        ++out.pruned;
        continue;
      }
      std::vector<Permutation> path = parent.path;
      path.push_back(sigma);
      SearchNode child{content_normalize(image), std::move(path)};
      if (is_trivially_negative(child.form)) {
        out.negative = std::move(child);
        state.stats.trivially_positive_pruned += out.pruned;
        state.stats.dedup_hits += out.dedup_hits;
        return out;
      }
      if (dedup && !state.seen.insert(child.form).second) {
        ++out.dedup_hits;
        continue;
      }
      out.next.push_back(std::move(child));
    }
  }
  state.stats.trivially_positive_pruned += out.pruned;
  state.stats.dedup_hits += out.dedup_hits;
  state.stats.max_frontier_size =
      std::max<std::uint64_t>(state.stats.max_frontier_size, out.next.size());
  return out;
}

FrontierExpansion expand_frontier(const std::vector<SearchNode>& frontier,
                                  const SubstitutionTemplate& t, bool dedup) {
  SearchState state;
  return expand_frontier(frontier, t, dedup, state);
}

Point witness_point(const std::vector<Permutation>& path, const SubstitutionTemplate& t) {
  std::vector<Rational> v(t.size(), Rational(1));
  // B_s1 (B_s2 (... (B_sm 1))): apply the last factor first.
  for (auto it = path.rbegin(); it != path.rend(); ++it) v = build_B(*it, t) * std::span(v);
  return Point(std::move(v));
}

Verdict ksds_run(const Form& f, const SubstitutionTemplate& t, std::size_t max_depth,
                 const KsdsOptions& opts) {
  check_factorial_guard(f.variables(), opts.max_variables);
  if (t.size() != f.variables()) {
    throw DimensionError("template has " + std::to_string(t.size()) + " entries but the form has " +
                         std::to_string(f.variables()) + " variables");
  }
  Verdict verdict;
  if (opts.check_necessary) verdict.necessary = necessary_condition(f, opts.max_variables);

  SearchState state;
  auto finish = [&](VerdictKind kind, std::size_t depth) {
    verdict.kind = kind;
    verdict.depth_reached = depth;
    verdict.stats = state.stats;
    return verdict;
  };
  auto witness_from = [&](std::vector<Permutation> path) {
    Point p = witness_point(path, t);
    Rational value = evaluate(f, p);
    verdict.witness = Witness{std::move(path), std::move(p), std::move(value)};
  };

  if (is_trivially_positive(f)) return finish(VerdictKind::PSD, 0);

  // A trivially negative input is already refuted by the all-ones point;
  // that witness is kept as a fallback for when round 1 finds none.
  const bool input_negative = is_trivially_negative(f);
  auto input_refutation = [&] {
    witness_from({});
    return finish(VerdictKind::NotPSD, 0);
  };

  SearchNode root{content_normalize(f), {}};
  if (opts.dedup) state.seen.insert(root.form);
  std::vector<SearchNode> frontier{std::move(root)};
  state.stats.max_frontier_size = 1;

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    FrontierExpansion round;
    try {
      round = expand_frontier(frontier, t, opts.dedup, state, opts.node_budget);
    } catch (const NodeBudgetExceeded&) {
      if (input_negative) return input_refutation();
      return finish(VerdictKind::Inconclusive, depth - 1);
    }
    if (round.negative) {
      witness_from(std::move(round.negative->path));
      return finish(VerdictKind::NotPSD, depth);
    }
    if (input_negative) return input_refutation();
    if (round.next.empty()) {
      if (verdict.necessary && !verdict.necessary->holds) {
        throw std::logic_error("positive termination on an input violating the necessary condition");
      }
      return finish(VerdictKind::PSD, depth);
    }
    frontier = std::move(round.next);
  }
  if (input_negative) return input_refutation();
  return finish(VerdictKind::Inconclusive, max_depth);
}

}  // namespace sds

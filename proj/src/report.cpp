#include "sds/report.hpp"

namespace sds {

using nlohmann::json;

namespace {

json exponents(const ExponentVector& alpha) {
  return json(std::vector<unsigned>(alpha.entries().begin(), alpha.entries().end()));
}

json images(const Permutation& sigma) {
  return json(std::vector<unsigned>(sigma.images().begin(), sigma.images().end()));
}

std::string render_path(const std::vector<Permutation>& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i != 0) out += ' ';
    out += '(' + render(path[i]) + ')';
  }
  return out + "]";
}

}  // namespace

json to_json(const MajorizationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"term", exponents(v.term)}, {"ordering", images(v.ordering)}});
  }
  return {{"holds", report.holds},
          {"violations", std::move(violations)},
          {"checked_orderings", report.checked_orderings}};
}

json to_json(const SearchStats& stats) {
  return {{"nodes_expanded", stats.nodes_expanded},
          {"trivially_positive_pruned", stats.trivially_positive_pruned},
          {"dedup_hits", stats.dedup_hits},
          {"max_frontier_size", stats.max_frontier_size},
          {"budget_exhausted", stats.budget_exhausted}};
}

json to_json(const Witness& witness) {
  json path = json::array();
  for (const auto& sigma : witness.path) path.push_back(images(sigma));
  json point = json::array();
  for (const auto& c : witness.point.coords()) point.push_back(to_fraction_string(c));
  return {{"path", std::move(path)},
          {"point", std::move(point)},
          {"value", to_fraction_string(witness.value)}};
}

json to_json(const Verdict& verdict) {
  json j = {{"version", kSchemaVersion},
            {"verdict", to_string(verdict.kind)},
            {"depth", verdict.depth_reached}};
  if (verdict.witness) j["witness"] = to_json(*verdict.witness);
  if (verdict.necessary) j["necessary"] = to_json(*verdict.necessary);
  j["stats"] = to_json(verdict.stats);
  return j;
}

Witness witness_from_json(const json& j) {
  std::vector<Permutation> path;
  for (const auto& sigma : j.at("path")) path.emplace_back(sigma.get<std::vector<unsigned>>());
  std::vector<Rational> coords;
  for (const auto& c : j.at("point")) coords.push_back(parse_rational(c.get<std::string>()));
  return Witness{std::move(path), Point(std::move(coords)),
                 parse_rational(j.at("value").get<std::string>())};
}

std::string render_ordering(const Permutation& sigma) {
  std::string out;
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    if (i != 1) out += " >= ";
    out += 'x' + std::to_string(sigma(i));
  }
  return out;
}

std::string render_text(const MajorizationReport& report) {
  std::string out = "necessary condition: ";
  if (report.holds) {
    out += "holds (" + std::to_string(report.checked_orderings) + " orderings checked)\n";
    return out;
  }
  out += "violated (" + std::to_string(report.violations.size()) + " violations over " +
         std::to_string(report.checked_orderings) + " orderings)\n";
  for (const auto& v : report.violations) {
    out += "  " + render_monomial(v.term) + " is not majorized by any positive term in ordering " +
           render_ordering(v.ordering) + " (" + render(v.ordering) + ")\n";
  }
  return out;
}

std::string render_text(const Verdict& verdict) {
  std::string out = std::string("verdict: ") + to_string(verdict.kind) + "\n";
  out += "depth: " + std::to_string(verdict.depth_reached) + "\n";
  if (verdict.witness) {
    out += "witness path: " + render_path(verdict.witness->path) + "\n";
    out += "witness point: " + render(verdict.witness->point) + "\n";
    out += "witness value: " + to_string(verdict.witness->value) + "\n";
  }
  const auto& s = verdict.stats;
  out += "stats: nodes_expanded=" + std::to_string(s.nodes_expanded) +
         " trivially_positive_pruned=" + std::to_string(s.trivially_positive_pruned) +
         " dedup_hits=" + std::to_string(s.dedup_hits) +
         " max_frontier_size=" + std::to_string(s.max_frontier_size) +
         (s.budget_exhausted ? " budget_exhausted" : "") + "\n";
  if (verdict.necessary) out += render_text(*verdict.necessary);
  return out;
}

}  // namespace sds

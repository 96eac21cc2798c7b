#include "sds/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sds/ksds.hpp"
#include "sds/majorder.hpp"
#include "sds/report.hpp"

namespace sds::cli {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MatrixChoice parse_matrix_choice(std::string_view text) {
  text = trim(text);
  if (text == "an") return {MatrixChoice::Kind::An, {}};
  if (text == "gn") return {MatrixChoice::Kind::Gn, {}};
  if (text.starts_with("q=")) {
    MatrixChoice choice{MatrixChoice::Kind::Custom, {}};
    for (auto part : split_commas(text.substr(2))) {
      Rational v = parse_rational(trim(part));
      if (v <= 0) throw std::invalid_argument("template entry " + to_string(v) + " is not positive");
      choice.q.push_back(std::move(v));
    }
    return choice;
  }
  throw std::invalid_argument("unknown matrix '" + std::string(text) + "' (expected an, gn or q=...)");
}

SubstitutionTemplate make_template(const MatrixChoice& choice, std::size_t n) {
  switch (choice.kind) {
    case MatrixChoice::Kind::An:
      return SubstitutionTemplate::an(n);
    case MatrixChoice::Kind::Gn:
      return SubstitutionTemplate::gn(n);
    case MatrixChoice::Kind::Custom:
      if (choice.q.size() != n) {
        throw std::invalid_argument("q-list has " + std::to_string(choice.q.size()) +
                                    " entries but the form has " + std::to_string(n) + " variables");
      }
      return SubstitutionTemplate(choice.q);
  }
  throw std::logic_error("unreachable");
}

ExponentVector parse_exponents(std::string_view text) {
  std::vector<unsigned> entries;
  for (auto part : split_commas(text)) {
    part = trim(part);
    if (part.empty() || !std::ranges::all_of(part, [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed exponent vector '" + std::string(text) + "'");
    }
    entries.push_back(static_cast<unsigned>(std::stoul(std::string(part))));
  }
  return ExponentVector(std::move(entries));
}

int cmd_check(std::string_view form_text, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  try {
    const Form f = parse_form(form_text);
    const SubstitutionTemplate t = make_template(config.matrix, f.variables());
    KsdsOptions opts;
    opts.check_necessary = config.check_necessary;
    opts.dedup = config.dedup;
    opts.node_budget = config.node_budget;
    const Verdict v = ksds_run(f, t, config.max_depth, opts);
    if (config.output == OutputFormat::Json) {
      out << to_json(v).dump(2) << '\n';
    } else {
      out << render_text(v);
    }
    switch (v.kind) {
      case VerdictKind::PSD:
        return kPsd;
      case VerdictKind::NotPSD:
        return kNotPsd;
      case VerdictKind::Inconclusive:
        return kInconclusive;
    }
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_necessary(std::string_view form_text, OutputFormat output, std::ostream& out,
                  std::ostream& err) {
  try {
    const MajorizationReport report = necessary_condition(parse_form(form_text));
    if (output == OutputFormat::Json) {
      nlohmann::json j = to_json(report);
      j["version"] = kSchemaVersion;
      out << j.dump(2) << '\n';
    } else {
      out << render_text(report);
    }
    return report.holds ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_majorize(std::string_view alpha_text, std::string_view beta_text,
                 std::optional<std::string_view> sigma_text, OutputFormat output,
                 std::ostream& out, std::ostream& err) {
  try {
    const ExponentVector alpha = parse_exponents(alpha_text);
    const ExponentVector beta = parse_exponents(beta_text);
    const Permutation sigma =
        sigma_text ? parse_permutation(*sigma_text) : Permutation::identity(alpha.size());
    const bool holds = majorizes_under(alpha, beta, sigma);
    std::optional<Point> separating;
    if (!holds) separating = separating_point(alpha, beta, sigma);
    if (output == OutputFormat::Json) {
      nlohmann::json j = {{"version", kSchemaVersion}, {"majorizes", holds}};
      if (separating) {
        nlohmann::json point = nlohmann::json::array();
        for (const auto& c : separating->coords()) point.push_back(to_fraction_string(c));
        j["separating_point"] = std::move(point);
      }
      out << j.dump(2) << '\n';
    } else {
      out << (holds ? "true" : "false") << '\n';
      if (separating) out << "separating point: " << render(*separating) << '\n';
    }
    return holds ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Successive difference substitution prover for forms on the nonnegative orthant"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("SDS_NODE_BUDGET")) {
    try {
      config.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: SDS_NODE_BUDGET is not a number: '" << env << "'\n";
      return kInputError;
    }
  }
  std::string form_text, file_path, matrix_text = "an";
  bool no_dedup = false, json = false;

  auto add_form_input = [&](CLI::App* sub) {
    sub->add_option("form", form_text, "form, e.g. \"x1^2 - 2*x1*x2 + x2^2\"");
    sub->add_option("--file", file_path, "read the form from a file");
  };

  CLI::App* check = app.add_subcommand("check", "decide nonnegativity with KSDS");
  add_form_input(check);
  check->add_option("--matrix", matrix_text, "an | gn | q=r1,r2,...");
  check->add_option("--max-depth", config.max_depth, "substitution rounds (default 6)");
  check->add_option("--node-budget", config.node_budget, "maximum expanded nodes");
  check->add_flag("--check-necessary", config.check_necessary, "also run the majorization test");
  check->add_flag("--no-dedup", no_dedup, "expand duplicate images separately");
  check->add_flag("--json", json, "JSON output");

  CLI::App* necessary = app.add_subcommand("necessary", "majorization necessary condition");
  add_form_input(necessary);
  necessary->add_flag("--json", json, "JSON output");

  std::string alpha_text, beta_text, sigma_text;
  CLI::App* majorize = app.add_subcommand("majorize", "compare two monomials");
  majorize->add_option("alpha", alpha_text, "exponents, e.g. 3,1,1")->required();
  majorize->add_option("beta", beta_text, "exponents, e.g. 2,1,2")->required();
  majorize->add_option("--sigma", sigma_text, "ordering in one-line notation, e.g. 1,3,2");
  majorize->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? 0 : kInputError;
  }

  const OutputFormat output = json ? OutputFormat::Json : OutputFormat::Text;
  config.output = output;
  config.dedup = !no_dedup;

  auto read_form = [&]() -> std::optional<std::string> {
    if (!file_path.empty()) {
      std::ifstream in(file_path);
      if (!in) {
        err << "error: cannot read " << file_path << '\n';
        return std::nullopt;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
    if (form_text.empty()) {
      err << "error: no form given (argument or --file)\n";
      return std::nullopt;
    }
    return form_text;
  };

  if (majorize->parsed()) {
    return cmd_majorize(alpha_text, beta_text,
                        sigma_text.empty() ? std::nullopt : std::optional<std::string_view>(sigma_text),
                        output, out, err);
  }
  const auto text = read_form();
  if (!text) return kInputError;
  if (necessary->parsed()) return cmd_necessary(*text, output, out, err);
  try {
    config.matrix = parse_matrix_choice(matrix_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return cmd_check(*text, config, out, err);
}

}  // namespace sds::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sds/subst.hpp"

namespace sds::cli {

enum ExitCode : int { kPsd = 0, kNotPsd = 1, kInconclusive = 2, kInputError = 3 };

// cmd_necessary and cmd_majorize report 0 for "holds"/"true", 1 otherwise.
enum class OutputFormat { Text, Json };

/// --matrix: "an", "gn" or "q=r1,r2,...".
struct MatrixChoice {
  enum class Kind { An, Gn, Custom } kind = Kind::An;
  std::vector<Rational> q;  ///< only for Custom
};

MatrixChoice parse_matrix_choice(std::string_view text);
SubstitutionTemplate make_template(const MatrixChoice& choice, std::size_t n);

struct RunConfig {
  MatrixChoice matrix;
  std::size_t max_depth = 6;
  bool check_necessary = false;
  bool dedup = true;
  OutputFormat output = OutputFormat::Text;
  std::uint64_t node_budget = 1'000'000;
};

/// "3,1,2" -> (3,1,2)
ExponentVector parse_exponents(std::string_view text);

int cmd_check(std::string_view form_text, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_necessary(std::string_view form_text, OutputFormat output, std::ostream& out,
                  std::ostream& err);
int cmd_majorize(std::string_view alpha_text, std::string_view beta_text,
                 std::optional<std::string_view> sigma_text, OutputFormat output,
                 std::ostream& out, std::ostream& err);

/// Full command line: subcommand dispatch, flags, --file, SDS_NODE_BUDGET.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sds::cli

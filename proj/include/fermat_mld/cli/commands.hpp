#ifndef FERMAT_MLD_CLI_COMMANDS_HPP
#define FERMAT_MLD_CLI_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fermat_mld/counting.hpp"
#include "fermat_mld/mldegree.hpp"

namespace fermat_mld::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnsupported = 2,
  kBudgetExceeded = 3,
  kVerificationFailed = 4,
};

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

struct Environment {
  /// Replaces the default beta resolver everywhere, verify included.
  std::optional<BetaSource> beta;
};

/// Entry point of the fermat-mld executable. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

/// Renders a beta or alpha count. method_label overrides the method name
/// derived from the record (alpha uses direct / from_beta / prime_power).
std::string render_beta(const BetaRecord& record, OutputFormat format,
                        std::string_view method_label = {});
std::string render_report(const MLDegreeReport& report, OutputFormat format);

/// One table cell; value is nullopt when the computation exceeded the budget.
struct TableCell {
  unsigned n;
  unsigned d;
  std::optional<BigInt> value;
};

std::string render_table(const std::vector<TableCell>& cells, unsigned n_max,
                         unsigned d_max, OutputFormat format);

}  // namespace fermat_mld::cli

#endif  // FERMAT_MLD_CLI_COMMANDS_HPP

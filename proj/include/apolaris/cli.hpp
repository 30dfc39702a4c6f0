#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apolaris/bargmann.hpp"
#include "apolaris/inequalities.hpp"

namespace apolaris::cli {

enum class Format { text, json };

/// Stable report rendering. Text puts one field per line and ends with
/// "HOLDS (ratio r)" or "FAILS (ratio r)"; an undefined ratio renders as
/// "n/a". JSON follows the documented schemas.
std::string report_render(const Verdict& v, Format format);
std::string report_render(const OracleEstimate& e, Format format);
std::string report_render(const SearchReport& r, Format format);

/// Dispatches one command line (program name excluded). Reports go to `out`,
/// diagnostics to `err`. Exit status: 0 success (or check holds), 1 check
/// does not hold, 2 usage error, 3 polynomial parse error, 4 internal
/// invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolaris::cli

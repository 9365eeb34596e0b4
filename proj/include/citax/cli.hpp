#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citax {

/// Runs the command-line tool on already-split arguments (argv[1..]).
/// Exit codes: 0 = clean, 1 = violations or counterexamples found,
/// 2 = usage or input error. No other codes are produced.
/// `out_is_terminal` selects the default output format (table on a
/// terminal, line-delimited records otherwise); --format overrides it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_terminal = false);

}  // namespace citax

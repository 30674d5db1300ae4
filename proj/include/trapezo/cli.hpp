#ifndef TRAPEZO_CLI_HPP
#define TRAPEZO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end, exposed as a library so the whole surface is
// testable without spawning processes.
//
// Subcommands: classify | solve | geom | trace | sample | glue
// Flags: --angles a1 a2 a3 a4 | --cos c1 c2 c3 c4 | --params q1 q2 q3 q4 t,
//        --to x1 x2 x3 x4 (trace endpoint, same units as the input mode),
//        --tol X, --band X, --holed, --deg, --format json|csv|svg,
//        --out PATH, --grid N, --fix i=v (twice, for sample).
// Env: TRAPEZO_TOL overrides the default solver tolerance.
// Exit codes: 0 Interior/success, 1 usage error, 2 Boundary, 3 Exterior.

namespace trapezo::cli {

/// Run one invocation. args excludes the program name. Output goes to out,
/// diagnostics to err; --out redirects the payload to a file instead.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapezo::cli

#endif  // TRAPEZO_CLI_HPP

#ifndef IRR_TOOLS_CLI_HPP
#define IRR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace irr::cli
{
    /// Exit codes of `ir`.
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_failed = 1;
    inline constexpr int exit_usage = 2;

    /**
     * Runs one `ir` invocation. `args` excludes the program name. Results go
     * to `out`, diagnostics (one line) to `err`; `in` backs "-" inputs and
     * `scan`.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif

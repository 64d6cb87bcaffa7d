#ifndef RAINBOW_AW_CLI_HH
#define RAINBOW_AW_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow_aw::cli
{
    enum ExitCode
    {
        ok = 0,
        domain_error = 1,
        usage_error = 2,
        inconclusive = 3
    };

    /// Runs one command.  args excludes the program name.  JSON results go to
    /// out; traces, diagnostics and help go to err (help goes to out).
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif

#pragma once

// Command-line front end. run_cli receives the argument vector (without the
// program name) and writes all output to the supplied streams, returning the
// process exit code: 0 success, 1 analysis answered "no" (not copositive, not
// in cone, bound violated), 2 usage or input errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace copos {

struct RunConfig {
    std::string format = "text";  // "text" or "json"
    double eps = 1e-6;            // tolerance for the floating-point witness search
    std::uint64_t seed = 0;       // RNG seed for the witness search
    int jobs = 1;                 // worker threads for the case sweep
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copos

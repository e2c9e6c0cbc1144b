#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace slzt::cli {

// Each stage appends its checks; PrecisionError is retried once at twice the
// floor depth and otherwise recorded as an inconclusive check.
void verify_root(const RunConfig& c, Report& r);
void verify_torus(const RunConfig& c, Report& r);
void verify_building(const RunConfig& c, Report& r);
void verify_cycle(const RunConfig& c, Report& r);

// Runs c.command; "all" stops after the first stage with a failure.
Report run_verify(const RunConfig& c);

// Whole command line without the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slzt::cli

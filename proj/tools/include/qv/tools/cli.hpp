#pragma once

#include <iosfwd>

namespace qv::tools {

// Entry point of the qverify command line; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qv::tools

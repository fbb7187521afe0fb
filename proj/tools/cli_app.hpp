#pragma once

#include <ostream>

namespace zmoments::cli {

enum Exit { ok = 0, input_error = 1, nonconvergence = 2, io_error = 3 };

// Whole command line, with output streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zmoments::cli

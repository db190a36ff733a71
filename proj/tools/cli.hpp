#pragma once

#include <ostream>

namespace nivatk::cli {

// Exit codes: 0 success, 1 a requested check failed (or the library threw),
// 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// The worked examples, one PASS/FAIL line each. Returns the number of failures.
int run_examples(std::ostream& out);

}  // namespace nivatk::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "numbase/base_sequence.hpp"

namespace numbase::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kCapacity = 3;
inline constexpr int kArithmetic = 4;
inline constexpr int kVerifyFailed = 5;

/// `prime | square | mpower:<m> | factorial | power:<p> | fibonacci | lucas | file:<path>`
BaseSequence parse_base_spec(std::string_view spec);

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and traces to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numbase::cli

#pragma once

#include <filesystem>
#include <string_view>

#include "numbase/base_sequence.hpp"

namespace numbase {

/// Custom base file, line oriented:
///
///     format=terms | format=bounds | format=bounds cyclic
///     # comment
///     <decimal natural>
///     ...
///
/// `terms` lists the weights themselves (explicit base); `bounds` lists
/// t_0, t_1, ... for a mixed-radix base. Blank and '#' lines are skipped.
/// Malformed input raises Errc::SyntaxError with the 1-based line number.
BaseSequence parse_base_file(std::string_view text);

BaseSequence load_base_file(const std::filesystem::path& path);

}  // namespace numbase

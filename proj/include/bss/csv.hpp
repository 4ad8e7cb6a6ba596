#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace bss {

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// Writes each line of `text` prefixed with "# ".
void write_comment(std::ostream& out, std::string_view text);

}  // namespace bss

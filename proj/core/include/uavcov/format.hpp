// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace uavcov {

// Shortest decimal text that parses back to the same double; independent of
// the global locale.
std::string format_double(double v);

// Parses the whole of `text` as a double (C locale). Returns false on any
// trailing characters or a malformed number.
bool parse_double(const std::string& text, double& out);

}  // namespace uavcov

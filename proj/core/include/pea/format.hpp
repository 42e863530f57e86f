#pragma once

#include <cstdio>
#include <string>

namespace pea {

// Shortest-faithful decimal form used for every serialized double: %.17g
// round-trips IEEE-754 binary64 exactly, so emitted files are byte-stable.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace pea

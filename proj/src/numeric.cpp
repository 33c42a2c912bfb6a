#include "pdnrel/numeric.hpp"

#include <cstdio>
#include <cstdlib>

namespace pdnrel {

std::string fmt_g9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return std::string(buf);
}

double round9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace pdnrel

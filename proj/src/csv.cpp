#include "tanhvol/csv.hpp"

#include <cstdio>
#include <cstdlib>

namespace tanhvol {

std::string format_sig(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double csv_round(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

}  // namespace tanhvol

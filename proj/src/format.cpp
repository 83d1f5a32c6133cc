#include "tqft/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace tqft {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

std::string format_complex(std::complex<double> z) {
    std::string re = format_real(z.real());
    std::string im = format_real(z.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return re + im + "i";
}

double round_significant(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

} // namespace tqft

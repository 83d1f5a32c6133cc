#pragma once

#include <complex>
#include <string>

namespace tqft {

// 12 significant digits, shortest form ("%.12g"); negative zero prints as 0.
std::string format_real(double x);
// "re+imi" / "re-imi", each part as format_real.
std::string format_complex(std::complex<double> z);
// x rounded to 12 significant digits.
double round_significant(double x);

} // namespace tqft

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bpart {

// Series coefficients grow without bound in the truncation order, so all
// counting is done over arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

} // namespace bpart

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace glie {

// Exact arbitrary-precision integer used for all coefficient arithmetic.
using Int = boost::multiprecision::cpp_int;

}  // namespace glie

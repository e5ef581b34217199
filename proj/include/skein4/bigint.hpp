#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skein4 {

// Arbitrary-precision integers. Burau entries of Delta^{-30} and 3-braid
// expansions overflow 64-bit words, so every coefficient in the system is
// a cpp_int.
using Int = boost::multiprecision::cpp_int;

}  // namespace skein4

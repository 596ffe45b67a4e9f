#pragma once

#include <boost/multiprecision/float128.hpp>

namespace orthocorr {

/// 113-bit binary float, used where double cancels too much (the Jacobi
/// coefficient expansion) and for the quadrature oracle.
using quad = boost::multiprecision::float128;

}  // namespace orthocorr

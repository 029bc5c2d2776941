#ifndef PATHHOM_TYPES_HPP
#define PATHHOM_TYPES_HPP

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pathhom {

// All linear algebra is exact: arbitrary-precision integers and rationals.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatZ = Mat<Integer>;
using VecQ = Vec<Rational>;
using VecZ = Vec<Integer>;

using Index = Eigen::Index;

enum class Ring { rational, integer };

MatQ to_rational(const MatZ& m);

// Throws std::invalid_argument if any entry has a nontrivial denominator.
MatZ to_integer(const MatQ& m);

} // namespace pathhom

#endif

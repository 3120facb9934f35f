#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace lamina {

namespace mp = boost::multiprecision;

/// Exact arbitrary-precision integer scalar used for all counting coordinates.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact rational scalar used for the real (lamination-space) coordinates.
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown when an input violates a structural precondition (bad gluing data,
/// inadmissible coordinate, dimension mismatch, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Derived>
typename Derived::Scalar l1_norm(const Eigen::MatrixBase<Derived>& v) {
  return v.cwiseAbs().sum();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar l1_distance(const Eigen::MatrixBase<DerivedA>& a,
                                      const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) throw invalid_argument("l1_distance: size mismatch");
  return (a - b).cwiseAbs().sum();
}

inline bool is_even(const Int& v) { return v % 2 == 0; }

template <typename Derived>
bool all_even(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_even(v(i))) return false;
  return true;
}

/// Checked narrowing for realization code, which works with machine sizes.
inline long to_index(const Int& v, const char* what) {
  if (v < 0 || v > Int(1000000))
    throw invalid_argument(std::string(what) + ": value out of realizable range");
  return static_cast<long>(v);
}

}  // namespace lamina

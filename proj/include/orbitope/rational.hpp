#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitope {

/// Exact rational scalar. Expression templates are off so the type behaves
/// like a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vector<Rational>;
using QMatrix = Matrix<Rational>;

/// Thrown for malformed user input (bad root data, negative coordinates, caps).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check that a theorem guarantees fails.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "-p", "p/q". Rejects empty strings, zero denominators and junk.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

double to_double(const Rational& value);

std::vector<std::string> to_strings(const QVector& v);

QVector parse_rational_list(std::string_view csv);

/// Lexicographic order on rational vectors of equal length.
struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
  }
};

inline QVector unit_vector(Eigen::Index n, Eigen::Index i) {
  QVector e = QVector::Zero(n);
  e(i) = 1;
  return e;
}

template <typename Derived>
Vector<double> to_double(const Eigen::MatrixBase<Derived>& v) {
  Vector<double> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

}  // namespace orbitope

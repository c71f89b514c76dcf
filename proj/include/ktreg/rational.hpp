#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iostream>
#include <string>

#include "ktreg/errors.hpp"

namespace ktreg {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Wraps GMP's mpq_class so that every operation returns a fully
// evaluated, canonical value (no expression templates leak out), which is what
// Eigen expects from a custom scalar.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q" and "-p/q".
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("cannot parse rational: " + s);
    if (q.get_den() == 0) throw InputError("rational with zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
  }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw InputError("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero_or_one() const { return is_zero() || is_one(); }
  int sign() const { return sgn(v_); }

  // Requires is_integer() and the value to fit in a signed long.
  long to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw InputError("rational does not fit an integer: " + str());
    return v_.get_num().get_si();
  }

  double to_double() const { return v_.get_d(); }

  // Largest integer <= value / smallest integer >= value.
  Rational floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(q));
  }
  Rational ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(q));
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.v_))); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

private:
  mpq_class v_;
};

}  // namespace ktreg

namespace Eigen {

template <>
struct NumTraits<ktreg::Rational> : GenericNumTraits<ktreg::Rational> {
  typedef ktreg::Rational Real;
  typedef ktreg::Rational NonInteger;
  typedef ktreg::Rational Nested;
  typedef ktreg::Rational Literal;

  static inline Real epsilon() { return ktreg::Rational(0); }
  static inline Real dummy_precision() { return ktreg::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace ktreg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

inline RationalVector rational_ones(Eigen::Index n) {
  return RationalVector::Constant(n, Rational(1));
}

}  // namespace ktreg

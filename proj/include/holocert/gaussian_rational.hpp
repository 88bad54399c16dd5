#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace holocert {

/// Exact element re + im*i of Q(i).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator), so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Rational num/den, den != 0.
  static GaussianRational ratio(long num, long den);
  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True iff the value lies in Z.
  bool is_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GaussianRational inv() const;
  GaussianRational pow(unsigned e) const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Lexicographic (re, im) order; only used to give containers a total order.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical literal "a+bi" / "a-bi" with both parts always present,
  /// e.g. "2-1i", "3/2-1/3i", "0+2i", "1+0i".
  std::string to_string() const;
  /// Short form used inside polynomial printing: "2", "-1/3i", "(2-1i)".
  std::string to_compact_string() const;

  /// Parses the literal grammar:  [sign] q [ (+|-) q i ]  |  [sign] q i
  /// where q is an integer or a/b.  A bare "i" stands for 1i.
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using GR = GaussianRational;

}  // namespace holocert

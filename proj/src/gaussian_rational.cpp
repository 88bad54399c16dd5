#include "holocert/gaussian_rational.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "holocert/errors.hpp"

namespace holocert {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

bool GaussianRational::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  const mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GaussianRational::to_string() const {
  std::string out = rational_string(re_);
  if (sgn(im_) < 0) {
    out += "-" + rational_string(-im_) + "i";
  } else {
    out += "+" + rational_string(im_) + "i";
  }
  return out;
}

std::string GaussianRational::to_compact_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  if (sgn(re_) == 0) return rational_string(im_) + "i";
  return "(" + to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

namespace {

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view s) : s_(s) {}

  bool at_end() const { return pos_ == s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::optional<int> sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return std::nullopt;
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<mpq_class> rational() {
    std::string num = digits();
    if (num.empty()) return std::nullopt;
    std::string den = "1";
    if (consume('/')) {
      den = digits();
      if (den.empty()) fail("missing denominator");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in literal '" + std::string(s_) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed Gaussian rational literal '" + std::string(s_) + "': " + what);
  }

 private:
  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += s_[pos_++];
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  text = trim(text);
  LiteralScanner sc(text);
  if (sc.at_end()) sc.fail("empty");

  const int s1 = sc.sign().value_or(1);
  std::optional<mpq_class> first = sc.rational();
  if (sc.consume('i')) {
    if (!sc.at_end()) sc.fail("trailing characters after imaginary part");
    return {0, s1 * first.value_or(mpq_class(1))};
  }
  if (!first) sc.fail("expected a number");
  mpq_class re = s1 * *first;
  if (sc.at_end()) return {re, 0};

  const std::optional<int> s2 = sc.sign();
  if (!s2) sc.fail("expected '+' or '-' before imaginary part");
  std::optional<mpq_class> second = sc.rational();
  if (!sc.consume('i')) sc.fail("imaginary part must end with 'i'");
  if (!sc.at_end()) sc.fail("trailing characters");
  return {re, *s2 * second.value_or(mpq_class(1))};
}

}  // namespace holocert

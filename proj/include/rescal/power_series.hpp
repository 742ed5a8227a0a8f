#pragma once

#include <string>
#include <vector>

#include "rescal/rational.hpp"

namespace rescal {

// Truncated univariate formal power series with exact rational
// coefficients. A series of order N stores coefficients for t^0..t^N;
// binary operations carry the minimum of the operand orders.
class PowerSeries {
public:
  PowerSeries() : coeff_(1) {}
  explicit PowerSeries(int order) : coeff_(order + 1) {
    if (order < 0) throw InvalidArgument("negative truncation order");
  }

  static PowerSeries one(int order);
  // order = coeffs.size() - 1
  static PowerSeries from_coeffs(std::vector<Rational> coeffs);
  // c * t^d
  static PowerSeries monomial(const Rational& c, int d, int order);
  // (1 - t^n)^e with arbitrary-precision exponent (negative allowed)
  static PowerSeries binomial_power(int n, const Int& exponent, int order);

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const Rational& coeff(int d) const { return coeff_.at(d); }
  void set_coeff(int d, Rational v) { coeff_.at(d) = std::move(v); }
  const std::vector<Rational>& coeffs() const { return coeff_; }

  bool is_zero() const;
  PowerSeries truncated(int new_order) const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const Rational& c) const;
  PowerSeries operator-() const;

  // Two-sided inverse up to truncation; requires nonzero constant term.
  PowerSeries reciprocal() const;

  // a(sign * t^m); sign must be +1 or -1, m >= 1.
  PowerSeries substitute(int sign, int m) const;

  // log(a) for a with constant term 1 (used by the Mobius rank oracle).
  PowerSeries log() const;

  bool operator==(const PowerSeries& o) const { return coeff_ == o.coeff_; }
  // Compare coefficients of t^0..t^through.
  bool agrees_with(const PowerSeries& o, int through) const;
  // Least d <= min(order, o.order) where the coefficients differ, or -1.
  int first_difference(const PowerSeries& o) const;

  std::string str(const std::string& var = "t") const;

private:
  std::vector<Rational> coeff_;
};

}  // namespace rescal

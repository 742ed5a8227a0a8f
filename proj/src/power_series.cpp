#include "rescal/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace rescal {

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeff_[0] = 1;
  return s;
}

PowerSeries PowerSeries::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("empty coefficient list");
  PowerSeries s;
  s.coeff_ = std::move(coeffs);
  return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int d, int order) {
  PowerSeries s(order);
  if (d <= order) s.coeff_[d] = c;
  return s;
}

PowerSeries PowerSeries::binomial_power(int n, const Int& exponent, int order) {
  if (n < 1) throw InvalidArgument("binomial_power needs n >= 1");
  PowerSeries s(order);
  for (int j = 0; n * j <= order; ++j) {
    Int c = binomial(exponent, static_cast<unsigned long>(j));
    if (j % 2 != 0) c = -c;
    s.coeff_[n * j] = Rational(c);
  }
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(int new_order) const {
  PowerSeries s(new_order);
  for (int d = 0; d <= std::min(new_order, order()); ++d) s.coeff_[d] = coeff_[d];
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries s(std::min(order(), o.order()));
  for (int d = 0; d <= s.order(); ++d) s.coeff_[d] = coeff_[d] + o.coeff_[d];
  return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries s(std::min(order(), o.order()));
  for (int d = 0; d <= s.order(); ++d) s.coeff_[d] = coeff_[d] - o.coeff_[d];
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries s(std::min(order(), o.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (coeff_[i] == 0) continue;
    for (int j = 0; i + j <= s.order(); ++j) {
      if (o.coeff_[j] == 0) continue;
      s.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    }
  }
  return s;
}

PowerSeries PowerSeries::operator*(const Rational& c) const {
  PowerSeries s(order());
  for (int d = 0; d <= order(); ++d) s.coeff_[d] = coeff_[d] * c;
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s(order());
  for (int d = 0; d <= order(); ++d) s.coeff_[d] = -coeff_[d];
  return s;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeff_[0] == 0)
    throw ZeroConstantTerm("series has no reciprocal at this truncation");
  PowerSeries s(order());
  Rational inv0 = rat(Int(1), Int(1)) / coeff_[0];
  s.coeff_[0] = inv0;
  for (int d = 1; d <= order(); ++d) {
    Rational acc;
    for (int j = 1; j <= d; ++j) acc += coeff_[j] * s.coeff_[d - j];
    s.coeff_[d] = -acc * inv0;
  }
  return s;
}

PowerSeries PowerSeries::substitute(int sign, int m) const {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +-1");
  if (m < 1) throw InvalidArgument("substitution exponent must be >= 1");
  PowerSeries s(order());
  for (int d = 0; m * d <= order(); ++d) {
    Rational c = coeff_[d];
    if (sign == -1 && d % 2 != 0) c = -c;
    s.coeff_[m * d] = c;
  }
  return s;
}

PowerSeries PowerSeries::log() const {
  if (coeff_[0] != 1) throw InvalidArgument("log needs constant term 1");
  // log(1+u) = sum (-1)^{j+1} u^j / j
  PowerSeries u = *this - one(order());
  PowerSeries acc(order());
  PowerSeries p = one(order());
  for (int j = 1; j <= order(); ++j) {
    p = p * u;
    if (p.is_zero()) break;
    Rational c = rat(j % 2 == 1 ? 1 : -1, j);
    acc = acc + p * c;
  }
  return acc;
}

bool PowerSeries::agrees_with(const PowerSeries& o, int through) const {
  if (through > order() || through > o.order())
    throw InvalidArgument("comparison beyond truncation order");
  for (int d = 0; d <= through; ++d)
    if (coeff_[d] != o.coeff_[d]) return false;
  return true;
}

int PowerSeries::first_difference(const PowerSeries& o) const {
  int through = std::min(order(), o.order());
  for (int d = 0; d <= through; ++d)
    if (coeff_[d] != o.coeff_[d]) return d;
  return -1;
}

std::string PowerSeries::str(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= order(); ++d) {
    if (coeff_[d] == 0) continue;
    Rational c = coeff_[d];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (d == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
    first = false;
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << order() + 1 << ")";
  return out.str();
}

}  // namespace rescal

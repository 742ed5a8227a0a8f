#include "rescal/series_identities.hpp"

namespace rescal {

GradedLieDims RankTable::as_dims() const {
  GradedLieDims d;
  for (const auto& [n, v] : ranks) d.set(n, v);
  return d;
}

RankTable extract_ranks(const PowerSeries& P, int N) {
  if (P.order() < N) throw InvalidArgument("series order below requested depth");
  if (P.coeff(0) != 1) throw InvalidArgument("rank extraction needs P(0) = 1");
  PowerSeries Q = P.truncated(N).substitute(-1, 1);
  PowerSeries R = PowerSeries::one(N);
  RankTable table;
  table.source = P;
  table.truncation = N;
  for (int n = 1; n <= N; ++n) {
    Rational v = R.coeff(n) - Q.coeff(n);
    if (!is_integer(v))
      throw NonIntegralRank("extracted exponent at degree " + std::to_string(n) +
                            " is " + to_string(v));
    Int phi = v.get_num();
    if (phi < 0)
      throw NegativeRank("extracted exponent at degree " + std::to_string(n) + " is " +
                         to_string(phi));
    if (phi != 0) {
      R = R * PowerSeries::binomial_power(n, phi, N);
      table.ranks.emplace(n, std::move(phi));
    }
  }
  return table;
}

ExtractionResult try_extract_ranks(const PowerSeries& P, int N) {
  ExtractionResult res;
  try {
    res.table = extract_ranks(P, N);
    res.ok = true;
  } catch (const MathError& e) {
    res.ok = false;
    res.error_name = e.name();
    // failure degree: first n where the recursion broke
    res.fail_degree = -1;
    std::string msg = e.what();
    auto pos = msg.find("degree ");
    if (pos != std::string::npos) res.fail_degree = std::atoi(msg.c_str() + pos + 7);
  }
  return res;
}

PowerSeries rank_product(const std::map<int, Int>& exps, int spacing, int N) {
  PowerSeries out = PowerSeries::one(N);
  for (const auto& [r, e] : exps) {
    if (e == 0) continue;
    long deg = static_cast<long>(spacing) * r;
    if (deg > N) continue;
    out = out * PowerSeries::binomial_power(static_cast<int>(deg), e, N);
  }
  return out;
}

RankTable homotopy_ranks(const PowerSeries& P_X, int k, int N) {
  if (k < 1) throw InvalidArgument("homotopy ranks need k >= 1");
  RankTable phi = extract_ranks(P_X, N / (2 * k));
  RankTable out;
  out.source = P_X;
  out.truncation = N;
  for (const auto& [r, v] : phi.ranks) {
    long deg = 2L * k * r;
    if (deg <= N) out.ranks.emplace(static_cast<int>(deg), v);
  }
  return out;
}

PowerSeries loop_poincare(const PowerSeries& P_X, int k, int N) {
  if (k < 1) throw InvalidArgument("loop series needs k >= 1");
  return P_X.truncated(N).substitute(-1, 2 * k).reciprocal();
}

PowerSeries pbw_series(const GradedLieDims& dims, int N) {
  if (!dims.all_even_degrees())
    throw OddDegreeUnsupported("PBW product implemented for evenly graded input");
  PowerSeries out = PowerSeries::one(N);
  for (const auto& [d, v] : dims.table()) {
    if (d > N) continue;
    out = out * PowerSeries::binomial_power(d, -v, N);
  }
  return out;
}

Rebracketed rebracket_dims(const GradedLieDims& E, int m) {
  if (m < 2) throw InvalidArgument("rebracketing needs m >= 2");
  Rebracketed out;
  for (const auto& [d, v] : E.table()) {
    if (d % (m - 1) == 0)
      out.dims.set(d / (m - 1), v);
    else
      out.dropped_degrees.push_back(d);
  }
  return out;
}

}  // namespace rescal

#pragma once

#include <map>
#include <string>

#include "rescal/lie.hpp"
#include "rescal/power_series.hpp"

namespace rescal {

// Ranks extracted from (or feeding) an infinite-product identity
// prod (1-t^n)^{phi_n} = P(-t).
struct RankTable {
  std::map<int, Int> ranks;  // zero entries not stored
  PowerSeries source{0};
  int truncation = 0;

  Int at(int n) const {
    auto it = ranks.find(n);
    return it == ranks.end() ? Int(0) : it->second;
  }
  GradedLieDims as_dims() const;
};

// The unique exponents phi_n with prod_{n<=N} (1-t^n)^{phi_n} = P(-t)
// mod t^{N+1}, by forward coefficient recursion. Non-integral or negative
// exponents are errors, not rounded: that is how non-Koszul input is
// detected at series level.
RankTable extract_ranks(const PowerSeries& P, int N);

struct ExtractionResult {
  bool ok = false;
  int fail_degree = -1;
  std::string error_name;
  RankTable table;
};
ExtractionResult try_extract_ranks(const PowerSeries& P, int N);

// prod_r (1 - t^{spacing*r})^{exps[r]}, truncated at N.
PowerSeries rank_product(const std::map<int, Int>& exps, int spacing, int N);

// Ranks of the loop-space homotopy of the k-rescaling: Phi_{2kr} = phi_r
// with phi extracted from P_X, zero away from multiples of 2k.
RankTable homotopy_ranks(const PowerSeries& P_X, int k, int N);

// P_X(-t^{2k})^{-1}.
PowerSeries loop_poincare(const PowerSeries& P_X, int k, int N);

// prod_d (1-t^d)^{-dims[d]} for an evenly graded dimension table
// (universal-envelope dimensions via Poincare-Birkhoff-Witt).
PowerSeries pbw_series(const GradedLieDims& dims, int N);

// Regrading along degree r(m-1) -> r; entries of the source away from
// that arithmetic progression are dropped and reported.
struct Rebracketed {
  GradedLieDims dims;
  std::vector<int> dropped_degrees;
};
Rebracketed rebracket_dims(const GradedLieDims& E, int m);

}  // namespace rescal

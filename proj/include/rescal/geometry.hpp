#pragma once

#include <optional>

#include "rescal/algebra.hpp"
#include "rescal/series_identities.hpp"

namespace rescal {

// Components of a link with pairwise linking numbers.
struct WeightedLinkingGraph {
  int n = 1;
  std::vector<std::vector<Int>> weights;  // symmetric, zero diagonal

  static WeightedLinkingGraph complete(int n, const Int& w = Int(1));
  static WeightedLinkingGraph from_weights(int n, std::vector<std::vector<Int>> w);
  void validate() const;
};

// Vertices joined by edges with nonzero weight; connectivity decides the
// Rescaling Formula (and is a theorem-backed Koszulness verdict).
bool graph_connected(const WeightedLinkingGraph& G);

// Cohomology ring of the complement: generators a_i in degree p, classes
// b_ij in degree 2p spanning an (n-1)-dimensional space with
// b_ij + b_ji = 0 and b_ij + b_jk + b_ki = 0, and products
// a_i a_j = (-1)^{p+1} l_ij b_ij.
struct LinkCohomology {
  int n = 1;
  int p = 1;
  PowerSeries hilbert{0};
  // a_i * a_j in the b-basis beta_t - beta_{t+1}, t = 0..n-2
  std::vector<std::vector<std::vector<Rational>>> products;
  // p = 1 only: degree-1-generated presentation with the b-classes
  // eliminated through the product relations
  std::optional<AlgebraPresentation> presentation;
};

LinkCohomology link_cohomology(const WeightedLinkingGraph& G, int p, int N);

// k-rescaling: iterated join with Hopf links; all Hopf weights are 1, so
// the weights are unchanged and the classes move to degree 2k+1.
struct RescaledLink {
  WeightedLinkingGraph graph;
  int p;
};
RescaledLink rescale_link(const WeightedLinkingGraph& G, int k);
// Linking numbers multiply under joins.
WeightedLinkingGraph join_links(const WeightedLinkingGraph& a, const WeightedLinkingGraph& b);

struct LinkReport {
  int n = 0, k = 1, N = 0;
  bool connected = false;
  std::string verdict;
  PowerSeries hilbert{0};
  std::string extraction_error;  // nonempty when rank extraction broke
  RankTable lcs;                 // ranks extracted from the complement series
  GradedLieDims holonomy;        // holonomy of the presented ring
  int holonomy_depth = 0;
  std::optional<int> mismatch_degree;  // extraction vs holonomy
  RankTable homotopy;
  PowerSeries homotopy_product{0};
  PowerSeries loop_series{0};
  bool closed_form_checked = false;  // complete graph, nonzero weights
  bool closed_form_ok = false;
};

LinkReport link_report(const WeightedLinkingGraph& G, int k, int N);

struct ArrangementSpec {
  enum class Kind { kSupersolvable, kGeneric, kBoolean };
  Kind kind = Kind::kBoolean;
  std::vector<int> exponents;  // supersolvable
  int n = 0, ell = 0;          // generic; boolean uses n

  void validate() const;
  std::string name() const;
};

struct ArrangementReport {
  ArrangementSpec spec;
  int k = 1, N = 0;
  PowerSeries poincare{0};
  std::string koszul_verdict;
  std::string extraction_error;
  RankTable homotopy;
  PowerSeries homotopy_product{0};
  PowerSeries loop_series{0};
  // generic with ell = n-1: the two loop-series candidates and where
  // they first disagree
  std::optional<PowerSeries> loop_whitehead;
  std::optional<PowerSeries> loop_lcs_predicted;
  std::optional<int> first_difference;
};

ArrangementReport arrangement_series(const ArrangementSpec& spec, int k, int N);

}  // namespace rescal

#pragma once

#include <map>
#include <utility>

#include "rescal/algebra.hpp"

namespace rescal {

// Free graded Lie algebra on the shifted duals of the positive-degree
// part of a rescaled algebra, with the quadratic differential dual to
// the multiplication. One generator per chosen basis element of B^q,
// placed in homotopy degree (2k+1)q - 1.
struct QuillenModel {
  GeneratorSetPtr gens;
  std::vector<std::pair<int, int>> source;  // generator -> (q, basis index in A^q)
  std::vector<TensorElement> differential;  // image of each generator, or zero
  int trunc = 0;                            // homotopy-degree cutoff carried
  int k = 0;

  std::vector<const TensorElement*> images() const;
};

// Builds generators of homotopy degree <= N+1 and verifies that the
// differential squares to zero on every generator.
QuillenModel build_quillen_model(const RescaledAlgebra& B, int N);

// H_d = dim ker(d in degree d) - dim im(d from degree d+1), d = 1..N,
// computed from independently generated bracket-word bases.
GradedLieDims quillen_homology_dims(const QuillenModel& M, int N);

// Compares the homology of the quadratic model of A[k] against the
// k-rescaled holonomy Lie algebra of A, degree by degree up to N.
// A truncated FAIL is conclusive; a truncated PASS is only consistency.
struct QuillenTestResult {
  Verdict verdict;
  GradedLieDims homology;
  GradedLieDims expected;  // rescaled holonomy dims
};
QuillenTestResult koszul_quillen_test(const AlgebraPresentation& A, int k, int N);

// Cohomology of the exterior complex on the dual of the holonomy Lie
// algebra, per bigraded component (exterior degree p, weight w). The
// presentation passes when the cohomology is concentrated on the
// diagonal w = p where it must match A.
struct CETestResult {
  Verdict verdict;
  std::map<std::pair<int, int>, long> cohomology;  // (p, w) -> dim
  GradedLieDims holonomy_dims;
};
CETestResult koszul_ce_test(const AlgebraPresentation& A, int p_max, int weight_max);

}  // namespace rescal

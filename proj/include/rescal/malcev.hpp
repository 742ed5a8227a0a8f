#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rescal/lie.hpp"

namespace rescal {

// Word in the free group on n letters, as (generator, +-1) pairs.
struct GroupWord {
  std::vector<std::pair<int, int>> letters;

  // Syntax: whitespace-separated factors "x3" or "x3^-1"; generators are
  // 1-based in the text.
  static GroupWord parse(const std::string& text, int n);
  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;
  static GroupWord commutator(const GroupWord& a, const GroupWord& b);
  std::vector<Int> exponent_sums(int n) const;
  std::string str() const;
};

// exp/log in the tensor algebra truncated above bracket length r (the
// generators sit in degree 1, unsigned convention).
TensorElement tensor_exp(const TensorElement& x);
TensorElement tensor_log(const TensorElement& x);

// Least degree with a nonzero component; trunc+1 for the zero element.
int filtration_order(const TensorElement& x);

// log(exp(x) exp(y)), verified primitive (Friedrichs criterion), which
// certifies membership in the Lie span degree by degree.
TensorElement bch(const TensorElement& x, const TensorElement& y, int r);

// Campbell-Hausdorff representation of the free group: rho(x_i) = x_i,
// extended by left-to-right folding with the group law above.
TensorElement ch_representation(const GroupWord& w, const GeneratorSetPtr& gens, int r);

// A derivation datum on the universal moduli space: one image per
// component, each of filtration order >= 2, truncated above length r.
struct LinkDerivation {
  GeneratorSetPtr gens;
  int order = 0;
  std::vector<TensorElement> images;
  std::vector<std::vector<Int>> linking;  // degree-1 part, n x n

  std::string orbit_note() const {
    return "raw representative only: orbit reduction under the moduli group action is "
           "unsupported, comparisons are valid up to choice of longitudes";
  }
};

// d(v_i) = [x_i, rho(l_i)] mod terms of length > r; the degree-1 part is
// the linking matrix.
LinkDerivation link_derivation(const std::vector<GroupWord>& longitudes, int r);

// Exponential group of the free nilpotent Lie algebra of class r:
// underlying set = truncated Lie elements, product = Campbell-Hausdorff.
struct ExpGroup {
  GeneratorSetPtr gens;
  int r;
  // the degree filtration satisfies [F_a, F_b] in F_{a+b}
  bool malcev_grading = true;

  ExpGroup(int n, int class_r);
  TensorElement identity() const;
  TensorElement generator(int i) const;
  TensorElement mul(const TensorElement& a, const TensorElement& b) const;
  TensorElement inverse(const TensorElement& a) const;
  TensorElement commutator(const TensorElement& a, const TensorElement& b) const;
};

// Homology coalgebra of the based loop space of the m-sphere: one basis
// element v^j per degree j(m-1), with binomial diagonal.
struct LoopCoalgebra {
  int m = 2;       // sphere parameter, >= 2
  int cutoff = 1;  // powers v^1..v^cutoff stored

  LoopCoalgebra(int m_, int cutoff_);
  // reduced diagonal of v^j: (a, b, coeff) with a + b = j, a,b >= 1
  std::vector<std::tuple<int, int, Rational>> reduced_diagonal(int j) const;
};

// Degree-0 linear map from the positive part of the coalgebra to a
// graded Lie algebra realized in a tensor algebra: j -> value of v^j.
struct HomMap {
  std::map<int, TensorElement> values;

  const TensorElement* at(int j) const {
    auto it = values.find(j);
    return it == values.end() ? nullptr : &it->second;
  }
};

// [f,g] = bracket o (f x g) o reduced diagonal.
HomMap hom_lie_bracket(const LoopCoalgebra& C, const HomMap& f, const HomMap& g,
                       int m_sphere_degree_check = 0);

// Checks that f -> sum_k c_k f(v^k) carries the Hom-Lie bracket to the
// bracket of the regraded target, on the given sample pairs up to total
// power r. Holds with c_k = 1/k! (odd m) and fails for generic constants.
bool verify_lemma_exp3(const LoopCoalgebra& C,
                       const std::vector<std::pair<HomMap, HomMap>>& samples,
                       const std::vector<Rational>& c, int r);

// c_k = 1/k! for odd m; c_{2k} = c_{2k+1} = 1/k! for even m.
std::vector<Rational> lemma_exp3_constants(int m, int r);

}  // namespace rescal

#pragma once

#include <map>
#include <vector>

#include "rescal/tensor.hpp"

namespace rescal {

// Dimension table of a graded Lie algebra, degree -> dimension.
// Entries are arbitrary-precision: lower-central-series ranks outgrow
// fixed-width integers quickly.
class GradedLieDims {
public:
  GradedLieDims() = default;
  explicit GradedLieDims(std::map<int, Int> dims);

  Int at(int d) const;
  void set(int d, Int v);
  const std::map<int, Int>& table() const { return dims_; }
  bool operator==(const GradedLieDims& o) const { return dims_ == o.dims_; }
  int max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }
  bool all_even_degrees() const;
  std::string str() const;

private:
  std::map<int, Int> dims_;  // zero entries not stored
};

// [g_{s_0}, [g_{s_1}, [ ... [g_{s_{m-2}}, g_{s_{m-1}}] ... ]]]
TensorElement left_normed_bracket(const GeneratorSetPtr& gens, const Word& seq, int trunc);
// Same shape with an arbitrary Lie element in the innermost slot.
TensorElement left_normed_bracket_on(const GeneratorSetPtr& gens, const Word& seq,
                                     const TensorElement& inner, int trunc);

// Lyndon words over {0..n-1} of each length in [1, max_len].
std::vector<std::vector<int>> lyndon_words(int n, int max_len);
// Standard (right) bracketing of a Lyndon word.
TensorElement lyndon_bracketing(const GeneratorSetPtr& gens, const std::vector<int>& word,
                                int trunc);

// Basis of the degree-d component of the free Lie algebra inside the
// tensor algebra: an independent subset of bracket words, found by rank.
std::vector<TensorElement> lie_degree_basis(const GeneratorSetPtr& gens, int degree);

// dim of the degree-d component of L(gens)/ideal(relations) for d = 1..N.
// Each relation must be homogeneous. The ideal span in degree d is
// generated by iterated brackets of the relations with generators.
GradedLieDims lie_span_dims(const GeneratorSetPtr& gens,
                            const std::vector<TensorElement>& relations, int N,
                            EliminationMode mode = EliminationMode::kAuto);

// Witt-style oracle: free Lie dimensions by enumerating Lyndon words,
// independent of any linear algebra. Requires the unsigned situation
// (all generators in degree 1, or all in one common even degree).
GradedLieDims free_lie_dims_lyndon(const GeneratorSet& gens, int N);

// Degree-dilated dimension table: result[2kq] = L[q].
GradedLieDims rescale_lie_dims(const GradedLieDims& dims, int k);

// The unique degree -1 derivation with the given generator images,
// applied to a homogeneous element. images[g] == nullptr means zero.
// Each nonzero image must be homogeneous of degree deg(g) - 1.
TensorElement extend_derivation(const GeneratorSetPtr& gens,
                                const std::vector<const TensorElement*>& images,
                                const TensorElement& e);

// A finitely presented graded Lie algebra held degreewise up to a weight
// cutoff: quotient bases with coordinates, and structure constants.
// Used by the Chevalley-Eilenberg side, where elements (not only
// dimensions) of the holonomy Lie algebra are needed.
class PresentedLie {
public:
  PresentedLie(GeneratorSetPtr gens, std::vector<TensorElement> relations, int weight_max);

  int weight_max() const { return weight_max_; }
  const GeneratorSetPtr& gens() const { return gens_; }
  int dim(int w) const;
  GradedLieDims dims() const;
  const TensorElement& basis_element(int w, int i) const;

  // Coordinates of a degree-w Lie element in the weight-w quotient basis.
  std::vector<Rational> coordinates(const TensorElement& e, int w) const;
  // Structure constants: [basis(w1,i), basis(w2,j)] in the (w1+w2) basis.
  std::vector<Rational> bracket_coords(int w1, int i, int w2, int j) const;

private:
  struct Layer {
    RowEchelon ideal;
    SpanSolver solver;
    std::vector<TensorElement> basis;
    std::shared_ptr<WordTable> words;
  };
  GeneratorSetPtr gens_;
  int weight_max_;
  std::vector<Layer> layers_;  // index = weight, 0 unused
};

}  // namespace rescal

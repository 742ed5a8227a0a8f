#include "rescal/lie.hpp"

#include <algorithm>
#include <sstream>

namespace rescal {

GradedLieDims::GradedLieDims(std::map<int, Int> dims) {
  for (auto& [d, v] : dims)
    if (v != 0) dims_.emplace(d, v);
}

Int GradedLieDims::at(int d) const {
  auto it = dims_.find(d);
  return it == dims_.end() ? Int(0) : it->second;
}

void GradedLieDims::set(int d, Int v) {
  if (v == 0)
    dims_.erase(d);
  else
    dims_[d] = std::move(v);
}

bool GradedLieDims::all_even_degrees() const {
  for (const auto& [d, v] : dims_)
    if (d % 2 != 0) return false;
  return true;
}

std::string GradedLieDims::str() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [d, v] : dims_) {
    if (!first) out << ", ";
    out << d << ": " << to_string(v);
    first = false;
  }
  out << "}";
  return out.str();
}

TensorElement left_normed_bracket(const GeneratorSetPtr& gens, const Word& seq, int trunc) {
  if (seq.len == 0) throw InvalidArgument("empty bracket word");
  TensorElement acc = TensorElement::generator(gens, seq.g[seq.len - 1], trunc);
  for (int i = seq.len - 2; i >= 0; --i)
    acc = bracket(TensorElement::generator(gens, seq.g[i], trunc), acc);
  return acc;
}

TensorElement left_normed_bracket_on(const GeneratorSetPtr& gens, const Word& seq,
                                     const TensorElement& inner, int trunc) {
  TensorElement acc = inner;
  for (int i = seq.len - 1; i >= 0; --i)
    acc = bracket(TensorElement::generator(gens, seq.g[i], trunc), acc);
  return acc;
}

std::vector<std::vector<int>> lyndon_words(int n, int max_len) {
  // Duval's generation in lexicographic order.
  std::vector<std::vector<int>> out;
  if (n < 1 || max_len < 1) return out;
  std::vector<int> w{0};
  while (true) {
    if (static_cast<int>(w.size()) <= max_len) out.push_back(w);
    // extend periodically to max_len, then increment
    std::vector<int> t = w;
    while (static_cast<int>(t.size()) < max_len)
      t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == n - 1) t.pop_back();
    if (t.empty()) break;
    t.back()++;
    w = t;
  }
  return out;
}

TensorElement lyndon_bracketing(const GeneratorSetPtr& gens, const std::vector<int>& word,
                                int trunc) {
  if (word.size() == 1) return TensorElement::generator(gens, word[0], trunc);
  // standard factorization: v = longest proper Lyndon suffix
  auto is_lyndon = [](const std::vector<int>& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
        return false;
    }
    return true;
  };
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::vector<int> suffix(word.begin() + i, word.end());
    if (is_lyndon(suffix)) {
      std::vector<int> prefix(word.begin(), word.begin() + i);
      return bracket(lyndon_bracketing(gens, prefix, trunc),
                     lyndon_bracketing(gens, suffix, trunc));
    }
  }
  throw InvalidArgument("not a Lyndon word");
}

namespace {

bool lyndon_candidates_apply(const GeneratorSet& gens) {
  if (!gens.all_degrees_equal()) return false;
  int d = gens.degree(0);
  if (gens.convention() == SignConvention::kUnsigned) return true;
  return d % 2 == 0;  // even degrees carry no Koszul signs
}

// Candidate spanning vectors for the degree-d component of the free Lie
// algebra. Left-normed words by default; for unsigned alphabets in one
// common degree, Lyndon standard bracketings (far fewer rows) once the
// left-normed count gets large.
std::vector<TensorElement> span_candidates(const GeneratorSetPtr& gens, int degree,
                                           const WordTable& table) {
  std::vector<TensorElement> out;
  const std::size_t kLyndonThreshold = 3000;
  if (table.size() > kLyndonThreshold && lyndon_candidates_apply(*gens)) {
    int e = gens->degree(0);
    if (degree % e != 0) return out;
    int m = degree / e;
    for (const auto& lw : lyndon_words(gens->size(), m))
      if (static_cast<int>(lw.size()) == m)
        out.push_back(lyndon_bracketing(gens, lw, degree));
    return out;
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    out.push_back(left_normed_bracket(gens, table.word(i), degree));
  return out;
}

}  // namespace

std::vector<TensorElement> lie_degree_basis(const GeneratorSetPtr& gens, int degree) {
  WordTable table(*gens, degree);
  std::vector<TensorElement> candidates = span_candidates(gens, degree, table);
  RowEchelon ech;
  std::vector<TensorElement> basis;
  for (auto& c : candidates) {
    if (c.is_zero()) continue;
    if (ech.insert(coordinates(c, table))) basis.push_back(std::move(c));
  }
  return basis;
}

namespace {

// Rows spanning the degree-d part of the ideal generated by the
// relations: left-normed iterated brackets of relations with generators
// ([g_{i_1},[...,[g_{i_m}, r]...]]), plus relations of degree d itself.
std::vector<SparseVector> ideal_rows(const GeneratorSetPtr& gens,
                                     const std::vector<TensorElement>& relations, int degree,
                                     const WordTable& table) {
  std::vector<SparseVector> rows;
  for (const TensorElement& r : relations) {
    auto hd = r.homogeneous_degree();
    if (!hd) throw InvalidArgument("relations must be homogeneous and nonzero");
    if (*hd == degree) {
      rows.push_back(coordinates(r.truncated(degree), table));
    } else if (*hd < degree) {
      WordTable seqs(*gens, degree - *hd);
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        TensorElement v =
            left_normed_bracket_on(gens, seqs.word(i), r.truncated(degree), degree);
        if (!v.is_zero()) rows.push_back(coordinates(v, table));
      }
    }
  }
  return rows;
}

}  // namespace

GradedLieDims lie_span_dims(const GeneratorSetPtr& gens,
                            const std::vector<TensorElement>& relations, int N,
                            EliminationMode mode) {
  GradedLieDims dims;
  for (int d = 1; d <= N; ++d) {
    WordTable table(*gens, d);
    if (table.size() == 0) continue;
    std::vector<SparseVector> span_rows;
    for (auto& c : span_candidates(gens, d, table))
      if (!c.is_zero()) span_rows.push_back(coordinates(c, table));
    std::size_t span_rank = rank_of_rows(std::move(span_rows), mode);
    std::size_t ideal_rank = 0;
    if (!relations.empty())
      ideal_rank = rank_of_rows(ideal_rows(gens, relations, d, table), mode);
    dims.set(d, Int(static_cast<long>(span_rank) - static_cast<long>(ideal_rank)));
  }
  return dims;
}

GradedLieDims free_lie_dims_lyndon(const GeneratorSet& gens, int N) {
  if (!gens.all_degrees_equal())
    throw UnsupportedSignedCase("Lyndon counting needs one common generator degree");
  int e = gens.degree(0);
  bool unsigned_case =
      (e % 2 == 0) ||
      (e == 1 && gens.convention() == SignConvention::kUnsigned);
  if (!unsigned_case)
    throw UnsupportedSignedCase(
        "Lyndon counting needs degree 1 (unsigned) or one even degree");
  int max_len = N / e;
  GradedLieDims dims;
  if (max_len < 1) return dims;
  std::map<int, Int> count;
  for (const auto& w : lyndon_words(gens.size(), max_len))
    count[static_cast<int>(w.size())] += 1;
  for (const auto& [m, c] : count)
    if (m * e <= N) dims.set(m * e, c);
  return dims;
}

GradedLieDims rescale_lie_dims(const GradedLieDims& dims, int k) {
  if (k < 1) throw InvalidArgument("rescaling needs k >= 1");
  GradedLieDims out;
  for (const auto& [q, v] : dims.table()) out.set(2 * k * q, v);
  return out;
}

TensorElement extend_derivation(const GeneratorSetPtr& gens,
                                const std::vector<const TensorElement*>& images,
                                const TensorElement& e) {
  if (static_cast<int>(images.size()) != gens->size())
    throw InvalidArgument("one image per generator required");
  for (int g = 0; g < gens->size(); ++g) {
    const TensorElement* img = images[g];
    if (!img || img->is_zero()) continue;
    auto hd = img->homogeneous_degree();
    if (!hd || *hd != gens->degree(g) - 1)
      throw DegreeMismatch("derivation image of " + gens->name(g) +
                           " must be homogeneous of degree " +
                           std::to_string(gens->degree(g) - 1));
  }
  if (!e.is_zero() && !e.homogeneous_degree())
    throw InvalidArgument("derivation argument must be homogeneous");
  return apply_derivation(images, e);
}

PresentedLie::PresentedLie(GeneratorSetPtr gens, std::vector<TensorElement> relations,
                           int weight_max)
    : gens_(std::move(gens)), weight_max_(weight_max) {
  layers_.resize(weight_max_ + 1);
  for (int w = 1; w <= weight_max_; ++w) {
    Layer& layer = layers_[w];
    layer.words = std::make_shared<WordTable>(*gens_, w);
    if (!relations.empty())
      for (auto& row : ideal_rows(gens_, relations, w, *layer.words))
        layer.ideal.insert(std::move(row));
    for (auto& c : span_candidates(gens_, w, *layer.words)) {
      if (c.is_zero()) continue;
      SparseVector v = rescal::coordinates(c, *layer.words);
      layer.ideal.reduce(v);
      if (v.empty()) continue;
      // basis reps carry the full cutoff so brackets of them stay legal
      if (layer.solver.add(std::move(v))) layer.basis.push_back(c.truncated(weight_max_));
    }
  }
}

int PresentedLie::dim(int w) const {
  if (w < 1 || w > weight_max_) return 0;
  return static_cast<int>(layers_[w].basis.size());
}

GradedLieDims PresentedLie::dims() const {
  GradedLieDims d;
  for (int w = 1; w <= weight_max_; ++w) d.set(w, Int(dim(w)));
  return d;
}

const TensorElement& PresentedLie::basis_element(int w, int i) const {
  return layers_.at(w).basis.at(i);
}

std::vector<Rational> PresentedLie::coordinates(const TensorElement& e, int w) const {
  const Layer& layer = layers_.at(w);
  SparseVector v = rescal::coordinates(e, *layer.words);
  layer.ideal.reduce(v);
  auto coords = layer.solver.solve(v);
  if (!coords) throw InvalidArgument("element not in the Lie span");
  return *coords;
}

std::vector<Rational> PresentedLie::bracket_coords(int w1, int i, int w2, int j) const {
  int w = w1 + w2;
  if (w > weight_max_) throw TruncationOverflow("bracket beyond weight cutoff");
  TensorElement b = bracket(basis_element(w1, i), basis_element(w2, j));
  if (b.is_zero()) return std::vector<Rational>(dim(w));
  return coordinates(b, w);
}

}  // namespace rescal

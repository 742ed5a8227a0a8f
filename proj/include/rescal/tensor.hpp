#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rescal/sparse.hpp"

namespace rescal {

// Two bracket/sign regimes live side by side:
//   kSignedByDegree  - graded Lie algebras (glie): Koszul signs from the
//                      generator degrees.
//   kUnsigned        - Lie algebras with grading (grlie): ordinary Lie
//                      identities; the grading (bracket length) carries
//                      no signs.
enum class SignConvention { kSignedByDegree, kUnsigned };

class GeneratorSet {
public:
  GeneratorSet(std::vector<std::string> names, std::vector<int> degrees,
               SignConvention convention);

  // n unsigned generators x1..xn in degree 1 (free-group / holonomy side).
  static std::shared_ptr<const GeneratorSet> letters(int n);
  // graded generators with Koszul signs (Quillen model side).
  static std::shared_ptr<const GeneratorSet> graded(std::vector<std::string> names,
                                                    std::vector<int> degrees);

  int size() const { return static_cast<int>(degrees_.size()); }
  int degree(int g) const { return degrees_.at(g); }
  const std::string& name(int g) const { return names_.at(g); }
  SignConvention convention() const { return convention_; }
  // 0 or 1; Koszul signs are (-1)^{parity * parity}
  int parity(int g) const {
    return convention_ == SignConvention::kSignedByDegree ? degrees_[g] & 1 : 0;
  }
  bool all_degrees_equal() const;

private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  SignConvention convention_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// A word in the tensor algebra: a sequence of generator indices.
struct Word {
  static constexpr int kMaxLen = 23;
  std::uint8_t len = 0;
  std::array<std::uint8_t, kMaxLen> g{};

  void push(int gen);
  Word prefix(int k) const;
  bool operator==(const Word& o) const;
  bool operator<(const Word& o) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

int word_degree(const GeneratorSet& gens, const Word& w);
int word_parity(const GeneratorSet& gens, const Word& w);
std::string word_str(const GeneratorSet& gens, const Word& w);

// Element of the tensor algebra truncated above total degree `trunc`:
// the quotient T(V)/T(V)^{> trunc}. Multiplication drops overflowing
// words, which is exact arithmetic in the quotient.
class TensorElement {
public:
  TensorElement(GeneratorSetPtr gens, int trunc);

  static TensorElement zero(GeneratorSetPtr gens, int trunc);
  static TensorElement unit(GeneratorSetPtr gens, int trunc);  // empty word
  static TensorElement generator(GeneratorSetPtr gens, int g, int trunc);

  const GeneratorSetPtr& gens() const { return gens_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Word, Rational, WordHash>& terms() const { return terms_; }

  void add_term(const Word& w, const Rational& c);
  Rational coeff(const Word& w) const;

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;  // concatenation product
  TensorElement operator*(const Rational& c) const;
  TensorElement operator-() const;
  bool operator==(const TensorElement& o) const;

  // Degree-homogeneous part / decomposition.
  TensorElement homogeneous_part(int degree) const;
  std::vector<int> support_degrees() const;  // sorted
  std::optional<int> homogeneous_degree() const;  // nullopt if mixed or zero
  // Least degree with a nonzero term (0 for the unit); -1 when zero.
  int min_degree() const;

  TensorElement truncated(int new_trunc) const;

  std::string str() const;

private:
  GeneratorSetPtr gens_;
  int trunc_;
  std::unordered_map<Word, Rational, WordHash> terms_;
};

enum class OverflowPolicy {
  kError,    // Lie element arithmetic: degrees past the truncation are a bug
  kTruncate  // quotient-algebra arithmetic (Malcev side)
};

// [a,b] = ab - (-1)^{|a||b|} ba on homogeneous pieces, extended bilinearly.
// Unsigned generator sets always use ab - ba.
TensorElement bracket(const TensorElement& a, const TensorElement& b,
                      OverflowPolicy policy = OverflowPolicy::kError);

// Unique extension of generator images to a degree -1 derivation:
// d(uv) = d(u)v + (-1)^{|u|} u d(v) in the signed regime.
// images[g] may be a null pointer meaning zero.
TensorElement apply_derivation(const std::vector<const TensorElement*>& images,
                               const TensorElement& e);

// Friedrichs primitivity criterion in the unsigned tensor Hopf algebra:
// x is a Lie element iff its reduced coproduct vanishes.
bool is_primitive(const TensorElement& x);

// Basis of words of the exact given degree, in enumeration order.
class WordTable {
public:
  WordTable(const GeneratorSet& gens, int degree, std::size_t limit = 1u << 22);
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  ColIndex index(const Word& w) const;

private:
  std::vector<Word> words_;
  std::unordered_map<Word, ColIndex, WordHash> index_;
};

// Coordinates of the degree-homogeneous element e in the word table.
SparseVector coordinates(const TensorElement& e, const WordTable& table);

}  // namespace rescal

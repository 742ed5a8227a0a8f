#include "rescal/tensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rescal {

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<int> degrees,
                           SignConvention convention)
    : names_(std::move(names)), degrees_(std::move(degrees)), convention_(convention) {
  if (names_.size() != degrees_.size())
    throw InvalidArgument("generator names/degrees size mismatch");
  if (names_.size() > 200) throw InvalidArgument("too many generators");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InvalidArgument("generator names must be distinct");
  for (int d : degrees_)
    if (d < 1) throw InvalidArgument("generator degrees must be >= 1");
}

std::shared_ptr<const GeneratorSet> GeneratorSet::letters(int n) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    degs.push_back(1);
  }
  return std::make_shared<GeneratorSet>(std::move(names), std::move(degs),
                                        SignConvention::kUnsigned);
}

std::shared_ptr<const GeneratorSet> GeneratorSet::graded(std::vector<std::string> names,
                                                         std::vector<int> degrees) {
  return std::make_shared<GeneratorSet>(std::move(names), std::move(degrees),
                                        SignConvention::kSignedByDegree);
}

bool GeneratorSet::all_degrees_equal() const {
  for (int d : degrees_)
    if (d != degrees_[0]) return false;
  return true;
}

void Word::push(int gen) {
  if (len >= kMaxLen) throw InvalidArgument("word too long");
  g[len++] = static_cast<std::uint8_t>(gen);
}

Word Word::prefix(int k) const {
  Word w;
  for (int i = 0; i < k; ++i) w.push(g[i]);
  return w;
}

bool Word::operator==(const Word& o) const {
  if (len != o.len) return false;
  return std::equal(g.begin(), g.begin() + len, o.g.begin());
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(g.begin(), g.begin() + len, o.g.begin(),
                                      o.g.begin() + o.len);
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  h = (h ^ w.len) * 1099511628211ull;
  for (int i = 0; i < w.len; ++i) h = (h ^ w.g[i]) * 1099511628211ull;
  return h;
}

int word_degree(const GeneratorSet& gens, const Word& w) {
  int d = 0;
  for (int i = 0; i < w.len; ++i) d += gens.degree(w.g[i]);
  return d;
}

int word_parity(const GeneratorSet& gens, const Word& w) {
  int p = 0;
  for (int i = 0; i < w.len; ++i) p ^= gens.parity(w.g[i]);
  return p;
}

std::string word_str(const GeneratorSet& gens, const Word& w) {
  if (w.len == 0) return "1";
  std::string s;
  for (int i = 0; i < w.len; ++i) {
    if (i) s += ".";
    s += gens.name(w.g[i]);
  }
  return s;
}

TensorElement::TensorElement(GeneratorSetPtr gens, int trunc)
    : gens_(std::move(gens)), trunc_(trunc) {
  if (!gens_) throw InvalidArgument("null generator set");
  if (trunc_ < 0) throw InvalidArgument("negative truncation");
}

TensorElement TensorElement::zero(GeneratorSetPtr gens, int trunc) {
  return TensorElement(std::move(gens), trunc);
}

TensorElement TensorElement::unit(GeneratorSetPtr gens, int trunc) {
  TensorElement e(std::move(gens), trunc);
  e.add_term(Word{}, rat(1));
  return e;
}

TensorElement TensorElement::generator(GeneratorSetPtr gens, int g, int trunc) {
  TensorElement e(gens, trunc);
  if (gens->degree(g) > trunc)
    throw TruncationOverflow("generator degree exceeds truncation");
  Word w;
  w.push(g);
  e.add_term(w, rat(1));
  return e;
}

void TensorElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (word_degree(*gens_, w) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r(gens_, std::min(trunc_, o.trunc_));
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r(gens_, std::min(trunc_, o.trunc_));
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r(gens_, std::min(trunc_, o.trunc_));
  for (const auto& [wa, ca] : terms_) {
    int da = word_degree(*gens_, wa);
    for (const auto& [wb, cb] : o.terms_) {
      if (da + word_degree(*gens_, wb) > r.trunc_) continue;
      Word w = wa;
      for (int i = 0; i < wb.len; ++i) w.push(wb.g[i]);
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

TensorElement TensorElement::operator*(const Rational& c) const {
  TensorElement r(gens_, trunc_);
  if (c == 0) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

TensorElement TensorElement::operator-() const { return *this * rat(-1); }

bool TensorElement::operator==(const TensorElement& o) const {
  return terms_ == o.terms_;
}

TensorElement TensorElement::homogeneous_part(int degree) const {
  TensorElement r(gens_, trunc_);
  for (const auto& [w, c] : terms_)
    if (word_degree(*gens_, w) == degree) r.terms_.emplace(w, c);
  return r;
}

std::vector<int> TensorElement::support_degrees() const {
  std::set<int> degs;
  for (const auto& [w, c] : terms_) degs.insert(word_degree(*gens_, w));
  return {degs.begin(), degs.end()};
}

std::optional<int> TensorElement::homogeneous_degree() const {
  auto degs = support_degrees();
  if (degs.size() != 1) return std::nullopt;
  return degs[0];
}

int TensorElement::min_degree() const {
  auto degs = support_degrees();
  return degs.empty() ? -1 : degs.front();
}

TensorElement TensorElement::truncated(int new_trunc) const {
  TensorElement r(gens_, new_trunc);
  for (const auto& [w, c] : terms_)
    if (word_degree(*gens_, w) <= new_trunc) r.terms_.emplace(w, c);
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Word, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    int da = word_degree(*gens_, a.first), db = word_degree(*gens_, b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : sorted) {
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1 || w.len == 0) out << to_string(a) << (w.len ? "*" : "");
    out << (w.len ? word_str(*gens_, w) : "");
  }
  return out.str();
}

TensorElement bracket(const TensorElement& a, const TensorElement& b, OverflowPolicy policy) {
  if (a.gens() != b.gens()) throw InvalidArgument("bracket across generator sets");
  int trunc = std::min(a.trunc(), b.trunc());
  const GeneratorSet& gens = *a.gens();
  TensorElement r(a.gens(), trunc);
  for (int da : a.support_degrees()) {
    TensorElement ha = a.homogeneous_part(da);
    int pa = da & 1;
    for (int db : b.support_degrees()) {
      if (da + db > trunc) {
        if (policy == OverflowPolicy::kError)
          throw TruncationOverflow("bracket degree " + std::to_string(da + db) +
                                   " exceeds truncation " + std::to_string(trunc));
        continue;
      }
      TensorElement hb = b.homogeneous_part(db);
      int sign = 1;
      if (gens.convention() == SignConvention::kSignedByDegree && (pa & (db & 1))) sign = -1;
      TensorElement term = ha * hb - (hb * ha) * rat(sign);
      r = r + term;
    }
  }
  return r;
}

TensorElement apply_derivation(const std::vector<const TensorElement*>& images,
                               const TensorElement& e) {
  const GeneratorSet& gens = *e.gens();
  TensorElement r(e.gens(), e.trunc());
  for (const auto& [w, c] : e.terms()) {
    int prefix_parity = 0;
    for (int i = 0; i < w.len; ++i) {
      int g = w.g[i];
      const TensorElement* img = images.at(g);
      if (img && !img->is_zero()) {
        Rational sign = rat(prefix_parity ? -1 : 1);
        for (const auto& [wi, ci] : img->terms()) {
          Word nw = w.prefix(i);
          for (int t = 0; t < wi.len; ++t) nw.push(wi.g[t]);
          for (int t = i + 1; t < w.len; ++t) nw.push(w.g[t]);
          r.add_term(nw, c * ci * sign);
        }
      }
      prefix_parity ^= gens.parity(g);
    }
  }
  return r;
}

bool is_primitive(const TensorElement& x) {
  if (x.gens()->convention() != SignConvention::kUnsigned)
    throw UnsupportedSignedCase("primitivity check is for unsigned tensor algebras");
  if (x.coeff(Word{}) != 0) return false;
  // reduced coproduct: sum over proper order-preserving splits of each word
  std::unordered_map<Word, std::unordered_map<Word, Rational, WordHash>, WordHash> split;
  for (const auto& [w, c] : x.terms()) {
    int m = w.len;
    if (m < 2) continue;
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      Word left, right;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i))
          left.push(w.g[i]);
        else
          right.push(w.g[i]);
      }
      auto& cell = split[left][right];
      cell += c;
    }
  }
  for (const auto& [l, row] : split)
    for (const auto& [r, v] : row)
      if (v != 0) return false;
  return true;
}

namespace {
void enumerate_words(const GeneratorSet& gens, int remaining, Word& cur,
                     std::vector<Word>& out, std::size_t limit) {
  if (remaining == 0) {
    if (out.size() >= limit) throw WorkLimitExceeded("word enumeration too large");
    out.push_back(cur);
    return;
  }
  for (int g = 0; g < gens.size(); ++g) {
    if (gens.degree(g) > remaining) continue;
    cur.push(g);
    enumerate_words(gens, remaining - gens.degree(g), cur, out, limit);
    cur.len--;
  }
}
}  // namespace

WordTable::WordTable(const GeneratorSet& gens, int degree, std::size_t limit) {
  Word cur;
  enumerate_words(gens, degree, cur, words_, limit);
  index_.reserve(words_.size() * 2);
  for (std::size_t i = 0; i < words_.size(); ++i)
    index_.emplace(words_[i], static_cast<ColIndex>(i));
}

ColIndex WordTable::index(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw InvalidArgument("word not in table");
  return it->second;
}

SparseVector coordinates(const TensorElement& e, const WordTable& table) {
  SparseVector v;
  v.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) v.push_back({table.index(w), c});
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  return v;
}

}  // namespace rescal

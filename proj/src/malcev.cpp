#include "rescal/malcev.hpp"

#include <sstream>

namespace rescal {

GroupWord GroupWord::parse(const std::string& text, int n) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'x') throw InvalidArgument("bad word token '" + tok + "'");
    std::size_t caret = tok.find('^');
    int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                 : caret - 1));
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    if (idx < 1 || idx > n) throw InvalidArgument("generator index out of range in '" + tok + "'");
    if (exp == 0) continue;
    int sign = exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(exp); ++i) w.letters.emplace_back(idx - 1, sign);
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.emplace_back(it->first, -it->second);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
  return a * b * a.inverse() * b.inverse();
}

std::vector<Int> GroupWord::exponent_sums(int n) const {
  std::vector<Int> sums(n);
  for (auto [g, e] : letters) sums.at(g) += e;
  return sums;
}

std::string GroupWord::str() const {
  std::string s;
  for (auto [g, e] : letters) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(g + 1);
    if (e < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

TensorElement tensor_exp(const TensorElement& x) {
  if (x.coeff(Word{}) != 0) throw InvalidArgument("exp needs zero constant term");
  TensorElement acc = TensorElement::unit(x.gens(), x.trunc());
  TensorElement power = acc;
  for (int i = 1; i <= x.trunc(); ++i) {
    power = power * x;
    if (power.is_zero()) break;
    acc = acc + power * rat(Int(1), factorial(i));
  }
  return acc;
}

TensorElement tensor_log(const TensorElement& x) {
  if (x.coeff(Word{}) != 1) throw InvalidArgument("log needs constant term 1");
  TensorElement u = x - TensorElement::unit(x.gens(), x.trunc());
  TensorElement acc = TensorElement::zero(x.gens(), x.trunc());
  TensorElement power = TensorElement::unit(x.gens(), x.trunc());
  for (int i = 1; i <= x.trunc(); ++i) {
    power = power * u;
    if (power.is_zero()) break;
    acc = acc + power * rat(i % 2 == 1 ? 1 : -1, i);
  }
  return acc;
}

int filtration_order(const TensorElement& x) {
  int d = x.min_degree();
  return d < 0 ? x.trunc() + 1 : d;
}

TensorElement bch(const TensorElement& x, const TensorElement& y, int r) {
  TensorElement a = x.truncated(r), b = y.truncated(r);
  TensorElement z = tensor_log(tensor_exp(a) * tensor_exp(b));
  if (!is_primitive(z))
    throw NotPrimitive("Campbell-Hausdorff product left the Lie span");
  return z;
}

TensorElement ch_representation(const GroupWord& w, const GeneratorSetPtr& gens, int r) {
  TensorElement acc = TensorElement::zero(gens, r);
  for (auto [g, e] : w.letters) {
    TensorElement x = TensorElement::generator(gens, g, r) * rat(e);
    acc = bch(acc, x, r);
  }
  return acc;
}

LinkDerivation link_derivation(const std::vector<GroupWord>& longitudes, int r) {
  if (r < 1) throw InvalidArgument("derivation order must be >= 1");
  int n = static_cast<int>(longitudes.size());
  LinkDerivation d;
  d.gens = GeneratorSet::letters(n);
  d.order = r;
  d.linking.assign(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    TensorElement rho = ch_representation(longitudes[i], d.gens, r);
    TensorElement xi = TensorElement::generator(d.gens, i, r);
    TensorElement img = bracket(xi, rho, OverflowPolicy::kTruncate);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Word w;
      w.push(i);
      w.push(j);
      Rational c = img.coeff(w);
      if (!is_integer(c)) throw NonIntegralRank("linking coefficient not an integer");
      d.linking[i][j] = c.get_num();
    }
    d.images.push_back(std::move(img));
  }
  return d;
}

ExpGroup::ExpGroup(int n, int class_r) : gens(GeneratorSet::letters(n)), r(class_r) {
  if (r < 1) throw NotNilpotent("nilpotency class must be >= 1");
}

TensorElement ExpGroup::identity() const { return TensorElement::zero(gens, r); }

TensorElement ExpGroup::generator(int i) const {
  return TensorElement::generator(gens, i, r);
}

TensorElement ExpGroup::mul(const TensorElement& a, const TensorElement& b) const {
  return bch(a, b, r);
}

TensorElement ExpGroup::inverse(const TensorElement& a) const { return -a; }

TensorElement ExpGroup::commutator(const TensorElement& a, const TensorElement& b) const {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

LoopCoalgebra::LoopCoalgebra(int m_, int cutoff_) : m(m_), cutoff(cutoff_) {
  if (m < 2) throw InvalidArgument("sphere parameter must be >= 2");
  if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
}

std::vector<std::tuple<int, int, Rational>> LoopCoalgebra::reduced_diagonal(int j) const {
  if (j < 1 || j > cutoff) throw InvalidArgument("power outside stored range");
  std::vector<std::tuple<int, int, Rational>> out;
  if (m % 2 == 1) {
    for (int a = 1; a <= j - 1; ++a)
      out.emplace_back(a, j - a, Rational(binomial(Int(j), a)));
    return out;
  }
  // even m: the generator is odd, its square generates a polynomial part
  if (j % 2 == 0) {
    int k = j / 2;
    for (int a = 1; a <= k - 1; ++a)
      out.emplace_back(2 * a, 2 * (k - a), Rational(binomial(Int(k), a)));
  } else {
    int k = (j - 1) / 2;
    for (int a = 0; a <= k - 1; ++a)
      out.emplace_back(2 * a + 1, 2 * (k - a), Rational(binomial(Int(k), a)));
    for (int a = 1; a <= k; ++a)
      out.emplace_back(2 * a, 2 * (k - a) + 1, Rational(binomial(Int(k), a)));
  }
  return out;
}

HomMap hom_lie_bracket(const LoopCoalgebra& C, const HomMap& f, const HomMap& g,
                       int m_sphere_degree_check) {
  if (m_sphere_degree_check > 0) {
    for (const auto& [j, v] : f.values) {
      auto d = v.homogeneous_degree();
      if (!v.is_zero() && (!d || *d != j * (m_sphere_degree_check - 1)))
        throw DegreeMismatch("map value at power " + std::to_string(j) +
                             " has the wrong degree");
    }
  }
  HomMap out;
  for (int j = 1; j <= C.cutoff; ++j) {
    std::optional<TensorElement> acc;
    for (auto& [a, b, coeff] : C.reduced_diagonal(j)) {
      const TensorElement* fa = f.at(a);
      const TensorElement* gb = g.at(b);
      if (!fa || !gb || fa->is_zero() || gb->is_zero()) continue;
      TensorElement term = bracket(*fa, *gb, OverflowPolicy::kTruncate) * coeff;
      acc = acc ? *acc + term : term;
    }
    if (acc && !acc->is_zero()) out.values.emplace(j, std::move(*acc));
  }
  return out;
}

std::vector<Rational> lemma_exp3_constants(int m, int r) {
  std::vector<Rational> c(r + 1);
  for (int k = 1; k <= r; ++k) {
    unsigned long idx = m % 2 == 1 ? k : k / 2;
    c[k] = rat(Int(1), factorial(idx));
  }
  return c;
}

bool verify_lemma_exp3(const LoopCoalgebra& C,
                       const std::vector<std::pair<HomMap, HomMap>>& samples,
                       const std::vector<Rational>& c, int r) {
  for (const auto& [f, g] : samples) {
    HomMap fg = hom_lie_bracket(C, f, g);
    for (int j = 2; j <= std::min(r, C.cutoff); ++j) {
      // theta([f,g]) in the slice fed by v^j
      std::optional<TensorElement> lhs;
      if (const TensorElement* val = fg.at(j)) lhs = *val * c.at(j);
      // [theta f, theta g] in the same slice
      std::optional<TensorElement> rhs;
      for (int a = 1; a < j; ++a) {
        int b = j - a;
        const TensorElement* fa = f.at(a);
        const TensorElement* gb = g.at(b);
        if (!fa || !gb) continue;
        TensorElement term = bracket(*fa, *gb, OverflowPolicy::kTruncate) * (c.at(a) * c.at(b));
        rhs = rhs ? *rhs + term : term;
      }
      if (!lhs && !rhs) continue;
      if (!lhs || !rhs) {
        const TensorElement& present = lhs ? *lhs : *rhs;
        if (!present.is_zero()) return false;
        continue;
      }
      if (!(*lhs == *rhs)) return false;
    }
  }
  return true;
}

}  // namespace rescal

#include "glie/freelie.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

namespace glie::freelie {

void AssocPolynomial::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool operator==(const AssocPolynomial& a, const AssocPolynomial& b) {
  if (a.terms.empty() && b.terms.empty()) return true;
  return a.degree == b.degree && a.terms == b.terms;
}

AssocPolynomial mul(const AssocPolynomial& a, const AssocPolynomial& b) {
  AssocPolynomial out;
  out.degree = a.degree + b.degree;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

AssocPolynomial commutator(const AssocPolynomial& a, const AssocPolynomial& b) {
  AssocPolynomial out = mul(a, b);
  for (const auto& [w, c] : mul(b, a).terms) out.add_term(w, -c);
  out.degree = a.degree + b.degree;
  return out;
}

AssocPolynomial expand_tree(const lyndon::BracketTree& t) {
  if (t.is_leaf()) {
    AssocPolynomial p;
    p.degree = 1;
    p.add_term(Word{static_cast<lyndon::Letter>(t.leaf)}, 1);
    return p;
  }
  return commutator(expand_tree(*t.left), expand_tree(*t.right));
}

const AssocPolynomial& lyndon_expansion(const Word& w) {
  static std::shared_mutex mutex;
  static std::map<Word, std::unique_ptr<const AssocPolynomial>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return *it->second;
  }
  auto expansion =
      std::make_unique<const AssocPolynomial>(expand_tree(lyndon::standard_bracketing(w)));
  std::unique_lock lock(mutex);
  auto& slot = cache[w];
  if (!slot) slot = std::move(expansion);
  return *slot;
}

bool operator==(const LieElement& a, const LieElement& b) {
  if (a.alphabet != b.alphabet) return false;
  if (a.coords.empty() && b.coords.empty()) return true;
  return a.degree == b.degree && a.coords == b.coords;
}

LieElement lie_zero(int alphabet, int degree) {
  LieElement x;
  x.alphabet = alphabet;
  x.degree = degree;
  return x;
}

LieElement lie_generator(int alphabet, int index) {
  if (index < 0 || index >= alphabet)
    throw std::invalid_argument("lie_generator: index out of range");
  return lie_term(alphabet, Word{static_cast<lyndon::Letter>(index)}, 1);
}

LieElement lie_term(int alphabet, const Word& w, const Int& c) {
  if (!lyndon::is_lyndon(w)) throw std::invalid_argument("lie_term: word is not Lyndon");
  for (auto letter : w)
    if (letter >= alphabet) throw std::invalid_argument("lie_term: letter out of alphabet");
  LieElement x;
  x.alphabet = alphabet;
  x.degree = static_cast<int>(w.size());
  if (c != 0) x.coords.emplace(w, c);
  return x;
}

LieElement add(const LieElement& a, const LieElement& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("add: alphabet mismatch");
  if (a.degree != b.degree) throw std::invalid_argument("add: degree mismatch");
  LieElement out = a;
  for (const auto& [w, c] : b.coords) {
    auto [it, inserted] = out.coords.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coords.erase(it);
    }
  }
  return out;
}

LieElement scale(const LieElement& a, const Int& c) {
  LieElement out = lie_zero(a.alphabet, a.degree);
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.coords) out.coords.emplace(w, coeff * c);
  return out;
}

AssocPolynomial expand(const LieElement& x) {
  AssocPolynomial p;
  p.degree = x.degree;
  for (const auto& [w, c] : x.coords)
    for (const auto& [word, coeff] : lyndon_expansion(w).terms) p.add_term(word, c * coeff);
  return p;
}

LieElement to_lyndon_coordinates(const AssocPolynomial& p, int alphabet) {
  for (const auto& [w, c] : p.terms)
    for (auto letter : w)
      if (letter >= alphabet)
        throw std::invalid_argument("to_lyndon_coordinates: letter out of alphabet");

  LieElement out = lie_zero(alphabet, p.degree);
  AssocPolynomial rest = p;
  while (!rest.terms.empty()) {
    Word w = rest.terms.begin()->first;
    Int coeff = rest.terms.begin()->second;  // leading coefficient of the expansion of w is 1
    if (!lyndon::is_lyndon(w))
      throw NotALieElement("to_lyndon_coordinates: leading word is not Lyndon");
    out.coords.emplace(w, coeff);
    for (const auto& [word, ec] : lyndon_expansion(w).terms) rest.add_term(word, -coeff * ec);
  }
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.alphabet != y.alphabet) throw std::invalid_argument("bracket: alphabet mismatch");
  int degree = x.degree + y.degree;
  if (x.is_zero() || y.is_zero()) return lie_zero(x.alphabet, degree);
  LieElement out = to_lyndon_coordinates(commutator(expand(x), expand(y)), x.alphabet);
  out.degree = degree;
  return out;
}

std::vector<Int> coordinate_vector(const LieElement& x, int degree) {
  if (x.degree != degree) throw std::invalid_argument("coordinate_vector: degree mismatch");
  const auto& basis = lyndon::lyndon_basis(x.alphabet, degree);
  std::vector<Int> v(basis.size());
  for (const auto& [w, c] : x.coords) v[basis.index_of(w)] = c;
  return v;
}

}  // namespace glie::freelie

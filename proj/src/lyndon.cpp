#include "glie/lyndon.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "glie/bigint.hpp"

namespace glie::lyndon {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0;; ++i) {
      if (i == n) return false;  // equal to a proper rotation -> periodic
      Letter a = w[i];
      Letter b = w[(i + r) % n];
      if (a != b) {
        if (a > b) return false;
        break;
      }
    }
  }
  return true;
}

std::vector<Word> enumerate_lyndon_words(int k, int d) {
  if (k < 1) throw std::invalid_argument("enumerate_lyndon_words: alphabet size must be >= 1");
  if (d < 1) throw std::invalid_argument("enumerate_lyndon_words: degree must be >= 1");

  std::vector<Word> out;
  Word w{0};
  while (true) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    Word t;
    t.reserve(d);
    for (int i = 0; i < d; ++i) t.push_back(w[i % w.size()]);
    w = std::move(t);
    while (!w.empty() && w.back() == static_cast<Letter>(k - 1)) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

long long witt_rank(int k, int d) {
  if (k < 1) throw std::invalid_argument("witt_rank: alphabet size must be >= 1");
  if (d < 1) throw std::invalid_argument("witt_rank: degree must be >= 1");

  Int total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = moebius(e);
    if (mu == 0) continue;
    Int term = boost::multiprecision::pow(Int(k), d / e);
    total += mu * term;
  }
  total /= d;
  if (total > std::numeric_limits<long long>::max())
    throw std::overflow_error("witt_rank: result exceeds 64-bit range");
  return total.convert_to<long long>();
}

int BracketTree::degree() const {
  if (is_leaf()) return 1;
  return left->degree() + right->degree();
}

Word BracketTree::leaves() const {
  if (is_leaf()) return Word{static_cast<Letter>(leaf)};
  Word w = left->leaves();
  Word r = right->leaves();
  w.insert(w.end(), r.begin(), r.end());
  return w;
}

BracketTree make_leaf(int letter) {
  BracketTree t;
  t.leaf = letter;
  return t;
}

BracketTree make_node(BracketTree l, BracketTree r) {
  BracketTree t;
  t.left = std::make_unique<BracketTree>(std::move(l));
  t.right = std::make_unique<BracketTree>(std::move(r));
  return t;
}

BracketTree standard_bracketing(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("standard_bracketing: word is not Lyndon");
  if (w.size() == 1) return make_leaf(w[0]);

  // Lexicographically least proper suffix marks the right factor.
  std::size_t best = 1;
  for (std::size_t s = 2; s < w.size(); ++s) {
    if (std::lexicographical_compare(w.begin() + s, w.end(), w.begin() + best, w.end()))
      best = s;
  }
  Word u(w.begin(), w.begin() + best);
  Word v(w.begin() + best, w.end());
  return make_node(standard_bracketing(u), standard_bracketing(v));
}

LyndonBasis::LyndonBasis(int k, int d) : k_(k), d_(d), words_(enumerate_lyndon_words(k, d)) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    index_.emplace(words_[i], static_cast<std::uint32_t>(i));
}

std::uint32_t LyndonBasis::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument("LyndonBasis: word is not a basis element");
  return it->second;
}

const LyndonBasis& lyndon_basis(int k, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const LyndonBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{k, d}];
  if (!slot) slot = std::make_unique<const LyndonBasis>(k, d);
  return *slot;
}

}  // namespace glie::lyndon

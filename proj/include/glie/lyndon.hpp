#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace glie::lyndon {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// True iff w is nonempty and strictly smaller than every proper rotation.
bool is_lyndon(const Word& w);

// All Lyndon words of length d over {0, ..., k-1}, in lexicographic order.
// Generated sequentially (Duval), not by filtering all k^d words.
std::vector<Word> enumerate_lyndon_words(int k, int d);

// Rank of the degree-d component of the free Lie ring on k generators:
// (1/d) sum_{e | d} mu(e) k^(d/e).
long long witt_rank(int k, int d);

// Binary bracketing tree; leaves are generator indices.
struct BracketTree {
  int leaf = -1;
  std::unique_ptr<BracketTree> left, right;

  bool is_leaf() const { return leaf >= 0; }
  int degree() const;
  Word leaves() const;
};

BracketTree make_leaf(int letter);
BracketTree make_node(BracketTree l, BracketTree r);

// Standard factorization bracketing of a Lyndon word: w = uv with v the
// lexicographically least proper suffix (equivalently the longest proper
// Lyndon suffix), both factors bracketed recursively.
BracketTree standard_bracketing(const Word& w);

// Indexed Lyndon basis of one homogeneous component, shared and immutable.
class LyndonBasis {
 public:
  LyndonBasis(int k, int d);

  int alphabet() const { return k_; }
  int degree() const { return d_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(std::size_t i) const { return words_[i]; }
  std::uint32_t index_of(const Word& w) const;

 private:
  int k_, d_;
  std::vector<Word> words_;
  std::map<Word, std::uint32_t> index_;
};

// Process-wide cache; returned references stay valid for the process lifetime.
const LyndonBasis& lyndon_basis(int k, int d);

}  // namespace glie::lyndon

#include "glie/braidcheck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glie::braid {

namespace {

void check_letters(const BraidWord& b) {
  for (int l : b.letters) {
    int i = l > 0 ? l : -l;
    if (i < 1 || i > b.strands - 1) throw std::invalid_argument("braid letter out of range");
  }
}

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("concat: strand mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord out;
  out.strands = a.strands;
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord power(const BraidWord& a, int e) {
  BraidWord base = e >= 0 ? a : inverse(a);
  BraidWord out;
  out.strands = a.strands;
  for (int t = 0; t < (e >= 0 ? e : -e); ++t) out = concat(out, base);
  return out;
}

bool operator==(const FreeGroupWord& a, const FreeGroupWord& b) { return a.letters == b.letters; }

FreeGroupWord reduce(const FreeGroupWord& w) {
  FreeGroupWord out;
  for (int l : w.letters) push_reduced(out.letters, l);
  return out;
}

FreeGroupWord inverse(const FreeGroupWord& w) {
  FreeGroupWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

bool operator==(const FreeGroupEndomorphism& a, const FreeGroupEndomorphism& b) {
  return a.images == b.images;
}

FreeGroupEndomorphism identity_endomorphism(int n) {
  FreeGroupEndomorphism e;
  e.images.resize(n);
  for (int g = 1; g <= n; ++g) e.images[g - 1].letters = {g};
  return e;
}

FreeGroupWord apply(const FreeGroupEndomorphism& e, const FreeGroupWord& w) {
  FreeGroupWord out;
  for (int l : w.letters) {
    int g = l > 0 ? l : -l;
    const FreeGroupWord& image = e.images.at(g - 1);
    if (l > 0)
      for (int il : image.letters) push_reduced(out.letters, il);
    else
      for (auto it = image.letters.rbegin(); it != image.letters.rend(); ++it)
        push_reduced(out.letters, -*it);
  }
  return out;
}

FreeGroupEndomorphism compose(const FreeGroupEndomorphism& f, const FreeGroupEndomorphism& g) {
  FreeGroupEndomorphism out;
  out.images.reserve(f.images.size());
  for (const auto& image : f.images) out.images.push_back(apply(g, image));
  return out;
}

namespace {

FreeGroupEndomorphism artin_generator(int n, int letter) {
  FreeGroupEndomorphism e = identity_endomorphism(n);
  int i = letter > 0 ? letter : -letter;
  if (letter > 0) {
    e.images[i - 1].letters = {i, i + 1, -i};
    e.images[i].letters = {i};
  } else {
    e.images[i - 1].letters = {i + 1};
    e.images[i].letters = {-(i + 1), i, i + 1};
  }
  return e;
}

}  // namespace

FreeGroupEndomorphism artin_action(const BraidWord& b) {
  check_letters(b);
  FreeGroupEndomorphism e = identity_endomorphism(b.strands);
  for (int letter : b.letters) e = compose(e, artin_generator(b.strands, letter));
  return e;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("braids_equal: strand mismatch");
  return artin_action(a) == artin_action(b);
}

BraidWord pure_generator_word(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_generator_word: bad indices");
  BraidWord w;
  w.strands = n;
  for (int t = j - 1; t >= i + 1; --t) w.letters.push_back(t);
  w.letters.push_back(i);
  w.letters.push_back(i);
  for (int t = i + 1; t <= j - 1; ++t) w.letters.push_back(-t);
  return w;
}

BraidWord delta_word(int n) {
  if (n < 2) throw std::invalid_argument("delta_word: n must be >= 2");
  BraidWord w;
  w.strands = n;
  for (int t = n - 1; t >= 1; --t)
    for (int s = 1; s <= t; ++s) w.letters.push_back(s);
  return w;
}

BraidWord delta_squared_product(int n) {
  if (n < 2) throw std::invalid_argument("delta_squared_product: n must be >= 2");
  BraidWord w;
  w.strands = n;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) w = concat(w, pure_generator_word(i, j, n));
  return w;
}

std::vector<int> permutation_of(const BraidWord& b) {
  check_letters(b);
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 1);
  for (int l : b.letters) {
    int i = l > 0 ? l : -l;
    std::swap(perm[i - 1], perm[i]);
  }
  return perm;
}

long long exponent_sum(const BraidWord& b) {
  long long sum = 0;
  for (int l : b.letters) sum += l > 0 ? 1 : -1;
  return sum;
}

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

namespace {

std::string pure_name(int i, int j) {
  return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void check_equal(CheckReport& report, std::string label, const BraidWord& lhs,
                 const BraidWord& rhs) {
  report.items.push_back({std::move(label), braids_equal(lhs, rhs)});
}

}  // namespace

CheckReport verify_burau_relations(int n) {
  if (n < 2) throw std::invalid_argument("verify_burau_relations: n must be >= 2");
  CheckReport report;
  auto a = [n](int i, int j) { return pure_generator_word(i, j, n); };

  // commuting pairs, both admissible orderings
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          check_equal(report, pure_name(i, j) + " " + pure_name(k, l) + " commute (i<j<k<l)",
                      concat(a(i, j), a(k, l)), concat(a(k, l), a(i, j)));
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        for (int j = l + 1; j <= n; ++j)
          check_equal(report, pure_name(i, j) + " " + pure_name(k, l) + " commute (i<k<l<j)",
                      concat(a(i, j), a(k, l)), concat(a(k, l), a(i, j)));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        check_equal(report,
                    pure_name(i, j) + " " + pure_name(i, k) + " " + pure_name(j, k) + " cycle",
                    concat(concat(a(i, j), a(i, k)), a(j, k)),
                    concat(concat(a(i, k), a(j, k)), a(i, j)));
        check_equal(report,
                    pure_name(i, k) + " " + pure_name(j, k) + " " + pure_name(i, j) + " cycle",
                    concat(concat(a(i, k), a(j, k)), a(i, j)),
                    concat(concat(a(j, k), a(i, j)), a(i, k)));
      }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          auto lhs = concat(concat(concat(a(i, k), a(j, k)), a(j, l)), inverse(a(j, k)));
          auto rhs = concat(concat(concat(a(j, k), a(j, l)), inverse(a(j, k))), a(i, k));
          check_equal(report,
                      pure_name(i, k) + " conjugation by " + pure_name(j, k) + " " +
                          pure_name(j, l) + " (i<j<k<l)",
                      lhs, rhs);
        }
  return report;
}

bool verify_magnus_equivalence(int n) {
  if (n < 2) throw std::invalid_argument("verify_magnus_equivalence: n must be >= 2");
  BraidWord full_twist;
  full_twist.strands = n;
  for (int t = 1; t <= n - 1; ++t) full_twist.letters.push_back(t);
  return braids_equal(power(full_twist, n), power(delta_word(n), 2));
}

bool centrality_check(int n) {
  if (n < 2) throw std::invalid_argument("centrality_check: n must be >= 2");
  BraidWord delta2 = power(delta_word(n), 2);
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord s;
    s.strands = n;
    s.letters = {i};
    if (!braids_equal(concat(delta2, s), concat(s, delta2))) return false;
  }
  return true;
}

SphereSanity sphere_relator_sanity(int n) {
  if (n < 3) throw std::invalid_argument("sphere_relator_sanity: n must be >= 3");
  BraidWord w;
  w.strands = n;
  for (int t = 1; t <= n - 2; ++t) w.letters.push_back(t);
  w.letters.push_back(n - 1);
  w.letters.push_back(n - 1);
  for (int t = n - 2; t >= 1; --t) w.letters.push_back(t);

  SphereSanity out;
  out.permutation = permutation_of(w);
  out.exponent_sum = exponent_sum(w);
  out.permutation_is_identity = true;
  for (int s = 1; s <= n; ++s)
    if (out.permutation[s - 1] != s) out.permutation_is_identity = false;
  return out;
}

}  // namespace glie::braid

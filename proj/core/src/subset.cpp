#include "kleitman/subset.hpp"

#include <algorithm>
#include <bit>

#include "kleitman/errors.hpp"

namespace kleitman {

namespace {
constexpr int kMaxGround = 1'000'000;

int word_count(int n) { return (n + 63) / 64; }
}  // namespace

Subset::Subset(int n) : n_(n) {
  if (n < 1 || n > kMaxGround) throw InvalidInput("ground size out of range: " + std::to_string(n));
  words_.assign(word_count(n), 0);
}

Subset Subset::of(int n, std::initializer_list<int> elems) {
  Subset s(n);
  for (int e : elems) {
    if (e < 1 || e > n) throw InvalidInput("element out of range: " + std::to_string(e));
    s.words_[(e - 1) >> 6] |= std::uint64_t{1} << ((e - 1) & 63);
  }
  return s;
}

Subset Subset::from_elements(int n, const std::vector<int>& elems) {
  Subset s(n);
  for (int e : elems) {
    if (e < 1 || e > n) throw InvalidInput("element out of range: " + std::to_string(e));
    s.words_[(e - 1) >> 6] |= std::uint64_t{1} << ((e - 1) & 63);
  }
  return s;
}

Subset Subset::from_word(int n, std::uint64_t bits) {
  if (n > 64) throw InvalidInput("from_word needs n <= 64");
  Subset s(n);
  if (n < 64 && (bits >> n) != 0) throw InvalidInput("bits outside ground set");
  s.words_[0] = bits;
  return s;
}

Subset Subset::full(int n) {
  Subset s(n);
  for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~std::uint64_t{0};
  int spare = static_cast<int>(s.words_.size()) * 64 - n;
  if (spare > 0) s.words_.back() >>= spare;
  return s;
}

int Subset::cardinality() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Subset::contains(int e) const {
  if (e < 1 || e > n_) return false;
  return (words_[(e - 1) >> 6] >> ((e - 1) & 63)) & 1;
}

Subset Subset::with(int e) const {
  if (e < 1 || e > n_) throw InvalidInput("element out of range: " + std::to_string(e));
  Subset s = *this;
  s.words_[(e - 1) >> 6] |= std::uint64_t{1} << ((e - 1) & 63);
  return s;
}

Subset Subset::without(int e) const {
  if (e < 1 || e > n_) throw InvalidInput("element out of range: " + std::to_string(e));
  Subset s = *this;
  s.words_[(e - 1) >> 6] &= ~(std::uint64_t{1} << ((e - 1) & 63));
  return s;
}

void Subset::check_same_ground(const Subset& o) const {
  if (n_ != o.n_) throw InvalidInput("ground set mismatch");
}

Subset Subset::sym_diff(const Subset& o) const {
  check_same_ground(o);
  Subset s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] ^= o.words_[i];
  return s;
}

Subset Subset::union_with(const Subset& o) const {
  check_same_ground(o);
  Subset s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] |= o.words_[i];
  return s;
}

Subset Subset::intersect(const Subset& o) const {
  check_same_ground(o);
  Subset s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] &= o.words_[i];
  return s;
}

int Subset::intersection_size(const Subset& o) const {
  check_same_ground(o);
  int c = 0;
  for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w) * 64 + b + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

bool Subset::canonical_less(const Subset& o) const {
  check_same_ground(o);
  int ca = cardinality(), cb = o.cardinality();
  if (ca != cb) return ca < cb;
  for (size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ o.words_[i];
    if (diff) {
      // smallest differing element belongs to the earlier set
      return (words_[i] >> std::countr_zero(diff)) & 1;
    }
  }
  return false;
}

int distance(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) throw InvalidInput("ground set mismatch");
  int c = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (size_t i = 0; i < wa.size(); ++i) c += std::popcount(wa[i] ^ wb[i]);
  return c;
}

}  // namespace kleitman

#ifndef NILPOTENTIA_BITSET_HPP_
#define NILPOTENTIA_BITSET_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nilpotentia {

// Fixed-capacity bitset sized at construction.  Element subsets and the
// pair-set fixpoint both live on this; subset/equality tests are
// word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  int capacity() const { return bits_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear() { for (auto& w : words_) w = 0; }

  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const Bitset& other) const { return words_ == other.words_; }
  bool operator!=(const Bitset& other) const { return words_ != other.words_; }

  bool is_subset_of(const Bitset& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  int next_set(int from) const {
    if (from >= bits_) return -1;
    size_t k = static_cast<size_t>(from) >> 6;
    uint64_t w = words_[k] >> (from & 63);
    if (w) return from + __builtin_ctzll(w);
    for (++k; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k << 6) + __builtin_ctzll(words_[k]);
    return -1;
  }
  int first_set() const { return next_set(0); }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = first_set(); i != -1; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

  // Lexicographic order on the sorted index sequence (shorter prefix wins).
  bool indices_less(const Bitset& other) const {
    int a = first_set(), b = other.first_set();
    while (a != -1 && b != -1) {
      if (a != b) return a < b;
      a = next_set(a + 1);
      b = other.next_set(b + 1);
    }
    return a == -1 && b != -1;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace nilpotentia

#endif  // NILPOTENTIA_BITSET_HPP_

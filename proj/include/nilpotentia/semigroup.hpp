#ifndef NILPOTENTIA_SEMIGROUP_HPP_
#define NILPOTENTIA_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilpotentia {

// A finite semigroup presented by its Cayley table.  Values are immutable
// after construction; indices are the working currency everywhere and labels
// only matter at the I/O boundary.
//
// table(i, j) is the product of element i by element j.  A zero (absorbing)
// element and an identity are detected at validation time when present.
class Semigroup {
 public:
  Semigroup() = default;

  int size() const { return n_; }
  int product(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& flat_table() const { return table_; }

  std::optional<int> zero() const { return zero_; }
  std::optional<int> identity() const { return identity_; }

  // -1 when the label is absent.
  int index_of(std::string_view label) const;

  // The S^1 view.  When S has no identity, index size() denotes the adjoined
  // one; products by it are resolved without materialising a bigger table.
  bool identity_adjoined() const { return !identity_.has_value(); }
  int monoid_size() const { return n_ + (identity_ ? 0 : 1); }
  int monoid_identity() const { return identity_ ? *identity_ : n_; }
  int monoid_product(int a, int b) const {
    if (a == n_) return b;
    if (b == n_) return a;
    return product(a, b);
  }

  bool operator==(const Semigroup& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
  }

  friend Semigroup validate_semigroup(std::vector<std::string> labels,
                                      const std::vector<std::vector<int>>& table);

 private:
  int n_ = 0;
  std::vector<int> table_;  // n*n row-major
  std::vector<std::string> labels_;
  std::optional<int> zero_;
  std::optional<int> identity_;
};

// Checks shape, entry range, label distinctness and associativity, then
// detects zero/identity.  Throws BadShape / NonAssociative.
Semigroup validate_semigroup(std::vector<std::string> labels,
                             const std::vector<std::vector<int>>& table);

// S^1 as a concrete semigroup: S itself when it already has an identity,
// otherwise S with one fresh identity element appended (labelled "1" or the
// first unused variant of it).
Semigroup adjoin_identity(const Semigroup& s);

struct SubsetClosure {
  std::vector<int> generators;  // sorted, deduplicated
  std::vector<int> members;     // ascending
};

// <X>: smallest product-closed superset of X, by breadth-first saturation.
SubsetClosure closure(const Semigroup& s, std::vector<int> generators);

// Table-preserving bijection a -> b if one exists.  Backtracking over label
// permutations with invariant pruning; fine for the orders handled here.
std::optional<std::vector<int>> is_isomorphic(const Semigroup& a, const Semigroup& b);

std::vector<int> idempotents(const Semigroup& s);

// True iff S has an identity and every element a two-sided inverse.
bool is_group(const Semigroup& s);

// Induced subsemigroup on a product-closed member set, keeping labels.
Semigroup subsemigroup(const Semigroup& s, const std::vector<int>& members);

// Relabeled copy: old element i becomes element perm[i].
Semigroup permute(const Semigroup& s, const std::vector<int>& perm);

// Transposed table (anti-isomorphic copy).
Semigroup opposite(const Semigroup& s);

// "a", "b", ... for small n, "x0", "x1", ... beyond 26.
std::vector<std::string> default_labels(int n);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_SEMIGROUP_HPP_

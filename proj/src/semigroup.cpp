#include "nilpotentia/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"

namespace nilpotentia {

int Semigroup::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Semigroup validate_semigroup(std::vector<std::string> labels,
                             const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) fail(ErrorKind::BadShape, "a semigroup needs at least one element");
  if (static_cast<int>(table.size()) != n)
    fail(ErrorKind::BadShape, "table has " + std::to_string(table.size()) +
                                  " rows, expected " + std::to_string(n));
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) fail(ErrorKind::BadShape, "empty element label");
      if (!seen.insert(l).second)
        fail(ErrorKind::BadShape, "duplicate element label '" + l + "'");
    }
  }

  Semigroup s;
  s.n_ = n;
  s.labels_ = std::move(labels);
  s.table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorKind::BadShape, "row " + std::to_string(i) + " has " +
                                    std::to_string(table[i].size()) + " entries");
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        fail(ErrorKind::BadShape, "table entry " + std::to_string(v) +
                                      " out of range at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
      s.table_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = s.product(i, j);
      for (int k = 0; k < n; ++k)
        if (s.product(ij, k) != s.product(i, s.product(j, k)))
          fail(ErrorKind::NonAssociative,
               "(" + s.labels_[i] + "*" + s.labels_[j] + ")*" + s.labels_[k] +
                   " != " + s.labels_[i] + "*(" + s.labels_[j] + "*" +
                   s.labels_[k] + ")");
    }

  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = s.product(z, i) == z && s.product(i, z) == z;
    if (ok) {
      s.zero_ = z;
      break;
    }
  }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = s.product(e, i) == i && s.product(i, e) == i;
    if (ok) {
      s.identity_ = e;
      break;
    }
  }
  return s;
}

Semigroup adjoin_identity(const Semigroup& s) {
  if (s.identity()) return s;
  const int n = s.size();
  std::string id_label = "1";
  while (s.index_of(id_label) != -1) id_label += "'";

  std::vector<std::string> labels = s.labels();
  labels.push_back(id_label);
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = s.product(i, j);
  for (int i = 0; i <= n; ++i) {
    table[n][i] = i;
    table[i][n] = i;
  }
  return validate_semigroup(std::move(labels), table);
}

SubsetClosure closure(const Semigroup& s, std::vector<int> generators) {
  if (generators.empty())
    fail(ErrorKind::EmptyGeneratorSet, "closure of the empty set");
  for (int g : generators)
    if (g < 0 || g >= s.size())
      fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(g));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Bitset in(s.size());
  std::vector<int> queue;
  for (int g : generators)
    if (!in.test(g)) {
      in.set(g);
      queue.push_back(g);
    }
  std::vector<int> members = queue;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    // Products of x against everything found so far, both ways.
    for (size_t m = 0; m < members.size(); ++m) {
      for (int p : {s.product(x, members[m]), s.product(members[m], x)}) {
        if (!in.test(p)) {
          in.set(p);
          queue.push_back(p);
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubsetClosure{std::move(generators), std::move(members)};
}

namespace {

// Cheap relabeling-invariant fingerprint per element; candidate images must
// match it exactly.
struct ElementInvariant {
  bool idempotent;
  bool is_zero;
  bool is_identity;
  int cyclic_order;      // |<x>|
  int row_distinct;
  int col_distinct;
  int occurrences;
  int left_fixers;       // #{y : y*x == x}
  int right_fixers;      // #{y : x*y == x}

  bool operator==(const ElementInvariant&) const = default;
};

ElementInvariant element_invariant(const Semigroup& s, int x) {
  ElementInvariant inv{};
  const int n = s.size();
  inv.idempotent = s.product(x, x) == x;
  inv.is_zero = s.zero() && *s.zero() == x;
  inv.is_identity = s.identity() && *s.identity() == x;
  inv.cyclic_order = static_cast<int>(closure(s, {x}).members.size());
  std::set<int> row, col;
  for (int j = 0; j < n; ++j) {
    row.insert(s.product(x, j));
    col.insert(s.product(j, x));
  }
  inv.row_distinct = static_cast<int>(row.size());
  inv.col_distinct = static_cast<int>(col.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.occurrences += s.product(i, j) == x;
  for (int y = 0; y < n; ++y) {
    inv.left_fixers += s.product(y, x) == x;
    inv.right_fixers += s.product(x, y) == x;
  }
  return inv;
}

struct IsoSearch {
  const Semigroup& a;
  const Semigroup& b;
  std::vector<int> map;      // a index -> b index, -1 unset
  std::vector<int> used;     // b index -> a index, -1 unset
  std::vector<std::vector<int>> candidates;

  bool assign(int x, int y, std::vector<int>& trail) {
    map[x] = y;
    used[y] = x;
    trail.push_back(x);
    // Propagate products with every currently assigned element.
    for (int z = 0; z < a.size(); ++z) {
      if (map[z] == -1) continue;
      const struct { int pa, pb; } pairs[2] = {
          {a.product(x, z), b.product(y, map[z])},
          {a.product(z, x), b.product(map[z], y)},
      };
      for (const auto& [pa, pb] : pairs) {
        if (map[pa] == -1) {
          if (used[pb] != -1) return false;
          if (!assign(pa, pb, trail)) return false;
        } else if (map[pa] != pb) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t from) {
    while (trail.size() > from) {
      const int x = trail.back();
      trail.pop_back();
      used[map[x]] = -1;
      map[x] = -1;
    }
  }

  bool search(int x, std::vector<int>& trail) {
    while (x < a.size() && map[x] != -1) ++x;
    if (x == a.size()) return true;
    for (int y : candidates[x]) {
      if (used[y] != -1) continue;
      const size_t mark = trail.size();
      if (assign(x, y, trail) && search(x + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Semigroup& a, const Semigroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<ElementInvariant> ia(n), ib(n);
  for (int i = 0; i < n; ++i) {
    ia[i] = element_invariant(a, i);
    ib[i] = element_invariant(b, i);
  }
  IsoSearch search{a, b, std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  search.candidates.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (ia[i] == ib[j]) search.candidates[i].push_back(j);
    if (search.candidates[i].empty()) return std::nullopt;
  }
  std::vector<int> trail;
  if (!search.search(0, trail)) return std::nullopt;
  return search.map;
}

std::vector<int> idempotents(const Semigroup& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (s.product(i, i) == i) out.push_back(i);
  return out;
}

bool is_group(const Semigroup& s) {
  if (!s.identity()) return false;
  const int e = *s.identity();
  for (int x = 0; x < s.size(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < s.size() && !has_inverse; ++y)
      has_inverse = s.product(x, y) == e && s.product(y, x) == e;
    if (!has_inverse) return false;
  }
  return true;
}

Semigroup subsemigroup(const Semigroup& s, const std::vector<int>& members) {
  if (members.empty()) fail(ErrorKind::BadParameter, "empty member set");
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos(s.size(), -1);
  for (size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] >= s.size())
      fail(ErrorKind::IndexOutOfRange, "member index " + std::to_string(sorted[k]));
    pos[sorted[k]] = static_cast<int>(k);
  }
  const int m = static_cast<int>(sorted.size());
  std::vector<std::string> labels(m);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) labels[i] = s.label(sorted[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = s.product(sorted[i], sorted[j]);
      if (pos[p] == -1)
        fail(ErrorKind::BadParameter,
             "member set not product-closed: " + s.label(sorted[i]) + "*" +
                 s.label(sorted[j]) + " escapes");
      table[i][j] = pos[p];
    }
  return validate_semigroup(std::move(labels), table);
}

Semigroup permute(const Semigroup& s, const std::vector<int>& perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorKind::BadParameter, "permutation size mismatch");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++)
      fail(ErrorKind::BadParameter, "not a permutation");
  }
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) labels[perm[i]] = s.label(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[perm[i]][perm[j]] = perm[s.product(i, j)];
  return validate_semigroup(std::move(labels), table);
}

Semigroup opposite(const Semigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = s.product(j, i);
  return validate_semigroup(s.labels(), table);
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  if (n <= 26) {
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  } else {
    for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  }
  return out;
}

}  // namespace nilpotentia

#ifndef NILPOTENTIA_TESTS_SUPPORT_HPP_
#define NILPOTENTIA_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "nilpotentia/semigroup.hpp"

namespace nilpotentia::testing {

// Cyclic group of order n: 1, g, g^2, ...
inline Semigroup cyclic(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return validate_semigroup(std::move(labels), table);
}

inline Semigroup direct_product(const Semigroup& a, const Semigroup& b) {
  const int n = a.size() * b.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto idx = [&](int x, int y) { return x * b.size() + y; };
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2)
          table[idx(x1, y1)][idx(x2, y2)] =
              idx(a.product(x1, x2), b.product(y1, y2));
  return validate_semigroup(std::move(labels), table);
}

// Group of all permutations of {0..k-1} under composition (p*q)(x) = p(q(x)).
inline Semigroup symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == q) return i;
    return -1;
  };
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string l = "[";
    for (int v : q) l += std::to_string(v);
    labels.push_back(l + "]");
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(k);
      for (int x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index_of(comp);
    }
  return validate_semigroup(std::move(labels), table);
}

inline bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

inline Semigroup alternating4() {
  const Semigroup s4 = symmetric_group(4);
  std::vector<int> members;
  for (int i = 0; i < s4.size(); ++i) {
    std::vector<int> p;
    for (char c : s4.label(i))
      if (c >= '0' && c <= '9') p.push_back(c - '0');
    if (perm_is_even(p)) members.push_back(i);
  }
  return subsemigroup(s4, members);
}

// Dihedral group of order 2n: r^i s^f with s r = r^{-1} s.
inline Semigroup dihedral(int n) {
  const int order = 2 * n;
  auto idx = [&](int i, int f) { return f * n + i; };
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 2; ++f)
      labels[idx(i, f)] = "r" + std::to_string(i) + (f ? "s" : "");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < n; ++j)
        for (int g = 0; g < 2; ++g) {
          const int exponent = ((f ? i - j : i + j) % n + n) % n;
          table[idx(i, f)][idx(j, g)] = idx(exponent, f ^ g);
        }
  return validate_semigroup(std::move(labels), table);
}

// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
inline Semigroup quaternion8() {
  // units 0=1, 1=i, 2=j, 3=k; sign in {0,1} for +/-.
  auto unit_mul = [](int a, int b, int& sign) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign ^= 1;  // i^2 = j^2 = k^2 = -1
      return 0;
    }
    // i j = k, j k = i, k i = j; reversed order flips the sign.
    static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    const bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    if (!forward) sign ^= 1;
    return prod[a][b];
  };
  auto idx = [](int unit, int sign) { return unit * 2 + sign; };
  std::vector<std::string> labels;
  for (const char* u : {"1", "i", "j", "k"}) {
    labels.push_back(u);
    labels.push_back(std::string("-") + u);
  }
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int sign = sa ^ sb;
          const int unit = unit_mul(a, b, sign);
          table[idx(a, sa)][idx(b, sb)] = idx(unit, sign);
        }
  return validate_semigroup(std::move(labels), table);
}

inline Semigroup klein4() { return direct_product(cyclic(2), cyclic(2)); }

inline Semigroup null_semigroup2() {
  return validate_semigroup({"a", "0"}, {{1, 1}, {1, 1}});
}

inline Semigroup semilattice2() {
  return validate_semigroup({"0", "1"}, {{0, 0}, {0, 1}});
}

}  // namespace nilpotentia::testing

#endif  // NILPOTENTIA_TESTS_SUPPORT_HPP_

#include "nilpotentia/groups.hpp"

#include <algorithm>
#include <map>

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/structure.hpp"

namespace nilpotentia {

namespace {

std::vector<int> inverse_table(const Semigroup& g) {
  const int e = *g.identity();
  std::vector<int> inv(g.size(), -1);
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (g.product(x, y) == e && g.product(y, x) == e) {
        inv[x] = y;
        break;
      }
  return inv;
}

void require_group(const Semigroup& g) {
  if (!is_group(g)) fail(ErrorKind::NotAGroup, "not a group table");
}

std::vector<int> subgroup_generated(const Semigroup& g, const std::vector<int>& gens) {
  return closure(g, gens).members;  // products suffice in a finite group
}

std::map<int, int> factorize(int n) {
  std::map<int, int> f;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

std::optional<int> group_nilpotency_class(const Semigroup& g) {
  require_group(g);
  const int n = g.size();
  const int e = *g.identity();
  const std::vector<int> inv = inverse_table(g);

  std::vector<int> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = i;
  int cls = 0;
  while (static_cast<int>(gamma.size()) > 1) {
    // gamma_{k+1} = <[gamma_k, G]>
    std::vector<int> commutators{e};
    for (int a : gamma)
      for (int b = 0; b < n; ++b)
        commutators.push_back(
            g.product(g.product(inv[a], inv[b]), g.product(a, b)));
    std::vector<int> next = subgroup_generated(g, commutators);
    if (next == gamma) return std::nullopt;  // stabilised above {e}
    gamma = std::move(next);
    ++cls;
  }
  return cls;
}

SchmidtReport schmidt_report(const Semigroup& g) {
  require_group(g);
  if (g.size() > 24)
    fail(ErrorKind::CapExceeded, "group order above the subgroup-sweep cap 24");

  SchmidtReport rep;
  rep.is_group = true;
  const int n = g.size();
  const int e = *g.identity();
  const std::vector<int> inv = inverse_table(g);

  rep.nonnilpotent = !group_nilpotency_class(g).has_value();

  const std::vector<std::vector<int>> subgroups = all_subsemigroups(g, 24);

  rep.all_proper_subgroups_nilpotent = true;
  for (const auto& members : subgroups) {
    if (static_cast<int>(members.size()) == n) continue;
    if (!group_nilpotency_class(subsemigroup(g, members)).has_value())
      rep.all_proper_subgroups_nilpotent = false;
  }
  rep.is_schmidt = rep.nonnilpotent && rep.all_proper_subgroups_nilpotent;

  rep.two_generated = false;
  for (int a = 0; a < n && !rep.two_generated; ++a)
    for (int b = a; b < n && !rep.two_generated; ++b)
      rep.two_generated =
          static_cast<int>(subgroup_generated(g, {a, b}).size()) == n;

  const std::map<int, int> factors = factorize(n);

  // Sylow subgroups per prime, picked out of the enumerated subgroups.
  auto sylows = [&](int p) {
    int pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    std::vector<std::vector<int>> out;
    for (const auto& members : subgroups)
      if (static_cast<int>(members.size()) == pk) out.push_back(members);
    return out;
  };
  auto is_normal = [&](const std::vector<int>& members) {
    Bitset in(n);
    for (int m : members) in.set(m);
    for (int x = 0; x < n; ++x)
      for (int m : members)
        if (!in.test(g.product(g.product(x, m), inv[x]))) return false;
    return true;
  };
  auto is_cyclic = [&](const std::vector<int>& members) {
    for (int x : members)
      if (subgroup_generated(g, {x}) == members) return true;
    return false;
  };
  auto frattini_central = [&](const std::vector<int>& sylow) {
    // Frattini subgroup: intersection of the maximal proper subgroups.
    Bitset in(n);
    for (int m : sylow) in.set(m);
    std::vector<std::vector<int>> proper;
    for (const auto& members : subgroups) {
      if (members.size() >= sylow.size()) continue;
      bool inside = true;
      for (int m : members) inside = inside && in.test(m);
      if (inside) proper.push_back(members);
    }
    std::vector<int> frattini;
    if (proper.empty()) {
      frattini = {e};
    } else {
      Bitset acc(n);
      for (int i = 0; i < n; ++i) acc.set(i);
      for (const auto& m : proper) {
        // keep only maximal ones
        bool maximal = true;
        for (const auto& other : proper)
          if (&other != &m && other.size() > m.size() &&
              std::includes(other.begin(), other.end(), m.begin(), m.end()))
            maximal = false;
        if (!maximal) continue;
        Bitset b(n);
        for (int x : m) b.set(x);
        acc &= b;
      }
      frattini = acc.to_indices();
    }
    for (int f : frattini)
      for (int x = 0; x < n; ++x)
        if (g.product(f, x) != g.product(x, f)) return false;
    return true;
  };

  if (factors.size() == 2) {
    auto it = factors.begin();
    const auto [p1, a1] = *it++;
    const auto [p2, a2] = *it;
    const auto sy1 = sylows(p1);
    const auto sy2 = sylows(p2);
    const bool n1 = sy1.size() == 1 && is_normal(sy1.front());
    const bool n2 = sy2.size() == 1 && is_normal(sy2.front());
    // p is the prime with the normal Sylow subgroup (smaller prime on a tie).
    int p = p1, a = a1, q = p2, b = a2;
    if (n2 && !n1) {
      p = p2;
      a = a2;
      q = p1;
      b = a1;
    }
    rep.order_pq = {p, a, q, b};
    const auto syp = sylows(p);
    const auto syq = sylows(q);
    rep.normal_sylow_p = syp.size() == 1 && is_normal(syp.front());
    rep.cyclic_sylow_q = !syq.empty();
    for (const auto& s : syq) rep.cyclic_sylow_q = rep.cyclic_sylow_q && is_cyclic(s);
    rep.frattini_central = true;
    for (const auto& s : syp) rep.frattini_central = rep.frattini_central && frattini_central(s);
    for (const auto& s : syq) rep.frattini_central = rep.frattini_central && frattini_central(s);
  } else {
    rep.order_pq = std::nullopt;
    // No (p,q) split; report against all Sylow subgroups instead.
    rep.normal_sylow_p = true;
    rep.cyclic_sylow_q = true;
    rep.frattini_central = true;
    for (const auto& [p, a] : factors) {
      const auto sy = sylows(p);
      rep.normal_sylow_p = rep.normal_sylow_p && sy.size() == 1 && is_normal(sy.front());
      for (const auto& s : sy) {
        rep.cyclic_sylow_q = rep.cyclic_sylow_q && is_cyclic(s);
        rep.frattini_central = rep.frattini_central && frattini_central(s);
      }
    }
  }
  return rep;
}

}  // namespace nilpotentia

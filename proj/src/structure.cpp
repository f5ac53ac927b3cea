#include "nilpotentia/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"

namespace nilpotentia {

namespace {

Bitset principal_ideal(const Semigroup& s, int x) {
  const int n = s.size();
  Bitset p(n);
  p.set(x);
  std::vector<int> xs;  // x S
  for (int t = 0; t < n; ++t) {
    const int v = s.product(x, t);
    if (!p.test(v)) p.set(v);
    xs.push_back(v);
  }
  for (int t = 0; t < n; ++t) p.set(s.product(t, x));  // S x
  for (int u : xs)
    for (int t = 0; t < n; ++t) p.set(s.product(t, u));  // S x S
  return p;
}

std::vector<Bitset> distinct_principal_ideals(const Semigroup& s) {
  std::vector<Bitset> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int x = 0; x < s.size(); ++x) {
    Bitset p = principal_ideal(s, x);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

// Saturates `members` (already product-closed except for the freshly added
// elements in `fresh`) into a closure.
void saturate(const Semigroup& s, Bitset& members, std::vector<int> fresh) {
  std::vector<int> all = members.to_indices();
  for (size_t head = 0; head < fresh.size(); ++head) {
    const int x = fresh[head];
    for (size_t m = 0; m < all.size(); ++m) {
      for (int p : {s.product(x, all[m]), s.product(all[m], x)}) {
        if (!members.test(p)) {
          members.set(p);
          fresh.push_back(p);
          all.push_back(p);
        }
      }
    }
  }
}

}  // namespace

bool is_ideal(const Semigroup& s, const std::vector<int>& members) {
  if (members.empty()) return false;
  Bitset in(s.size());
  for (int m : members) {
    if (m < 0 || m >= s.size()) return false;
    in.set(m);
  }
  for (int m : members)
    for (int t = 0; t < s.size(); ++t)
      if (!in.test(s.product(m, t)) || !in.test(s.product(t, m))) return false;
  return true;
}

std::vector<std::vector<int>> ideals(const Semigroup& s) {
  constexpr size_t kCap = size_t{1} << 20;
  std::vector<Bitset> found = distinct_principal_ideals(s);
  std::unordered_set<Bitset, BitsetHash> seen(found.begin(), found.end());
  // Union-closure: every ideal is a union of principal ideals.
  for (size_t i = 0; i < found.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Bitset u = found[i];
      u |= found[j];
      if (seen.insert(u).second) {
        found.push_back(std::move(u));
        if (found.size() > kCap)
          fail(ErrorKind::CapExceeded, "ideal lattice larger than 2^20");
      }
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(b.to_indices());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Semigroup rees_quotient(const Semigroup& s, const std::vector<int>& ideal) {
  if (!is_ideal(s, ideal))
    fail(ErrorKind::NotAnIdeal, "Rees quotient by a non-ideal");
  const int n = s.size();
  Bitset in(n);
  for (int m : ideal) in.set(m);

  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in.test(i)) rest.push_back(i);

  const int m = static_cast<int>(rest.size());
  const int theta = m;  // fresh zero appended last
  std::vector<int> pos(n, theta);
  for (int k = 0; k < m; ++k) pos[rest[k]] = k;

  std::vector<std::string> labels;
  labels.reserve(m + 1);
  for (int r : rest) labels.push_back(s.label(r));
  std::string zl = "0";
  while (std::find(labels.begin(), labels.end(), zl) != labels.end()) zl += "'";
  labels.push_back(zl);

  std::vector<std::vector<int>> table(m + 1, std::vector<int>(m + 1, theta));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = pos[s.product(rest[i], rest[j])];
  return validate_semigroup(std::move(labels), table);
}

std::vector<SubsetClosure> subsemigroups_generated(const Semigroup& s,
                                                   int max_gens, int threads) {
  if (max_gens < 1) fail(ErrorKind::BadParameter, "max_gens must be >= 1");
  const int n = s.size();

  std::unordered_map<Bitset, std::vector<int>, BitsetHash> known;  // members -> gens
  std::vector<std::pair<Bitset, std::vector<int>>> level;

  for (int x = 0; x < n; ++x) {
    Bitset b(n);
    b.set(x);
    saturate(s, b, {x});
    if (known.emplace(b, std::vector<int>{x}).second) level.push_back({b, {x}});
  }

  for (int depth = 2; depth <= max_gens; ++depth) {
    const size_t tasks = level.size() * static_cast<size_t>(n);
    std::vector<std::pair<Bitset, std::vector<int>>> produced(tasks);
    std::vector<char> valid(tasks, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (size_t t = 0; t < tasks; ++t) {
      const auto& [base, gens] = level[t / n];
      const int y = static_cast<int>(t % n);
      if (base.test(y)) continue;  // same closure, smaller generating set
      Bitset b = base;
      b.set(y);
      saturate(s, b, {y});
      std::vector<int> g = gens;
      g.push_back(y);
      std::sort(g.begin(), g.end());
      produced[t] = {std::move(b), std::move(g)};
      valid[t] = 1;
    }
    std::vector<std::pair<Bitset, std::vector<int>>> next;
    for (size_t t = 0; t < tasks; ++t) {
      if (!valid[t]) continue;
      if (known.emplace(produced[t].first, produced[t].second).second)
        next.push_back(std::move(produced[t]));
    }
    level = std::move(next);
    if (level.empty()) break;
  }

  std::vector<SubsetClosure> out;
  out.reserve(known.size());
  for (auto& [members, gens] : known)
    out.push_back(SubsetClosure{gens, members.to_indices()});
  std::sort(out.begin(), out.end(), [](const SubsetClosure& a, const SubsetClosure& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

int exhaustive_cap() {
  if (const char* env = std::getenv("NILPOTENTIA_CAP")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 12;
}

std::vector<std::vector<int>> all_subsemigroups(const Semigroup& s) {
  return all_subsemigroups(s, exhaustive_cap());
}

std::vector<std::vector<int>> all_subsemigroups(const Semigroup& s, int cap) {
  if (s.size() > cap)
    fail(ErrorKind::CapExceeded, "order " + std::to_string(s.size()) +
                                     " above exhaustive cap " + std::to_string(cap));
  const int n = s.size();
  std::unordered_set<Bitset, BitsetHash> known;
  std::vector<Bitset> queue;
  for (int x = 0; x < n; ++x) {
    Bitset b(n);
    b.set(x);
    saturate(s, b, {x});
    if (known.insert(b).second) queue.push_back(std::move(b));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const Bitset base = queue[head];
    for (int y = 0; y < n; ++y) {
      if (base.test(y)) continue;
      Bitset b = base;
      b.set(y);
      saturate(s, b, {y});
      if (known.insert(b).second) queue.push_back(std::move(b));
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(known.size());
  for (const auto& b : known) out.push_back(b.to_indices());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MnnVerdict is_minimal_non_nilpotent(const Semigroup& s, MnnMode mode, int threads) {
  MnnVerdict verdict;
  verdict.mode = mode;

  const NilpotencyResult nn = decide_nilpotent(s);
  if (nn.nilpotent) {
    verdict.minimal = false;
    return verdict;
  }
  verdict.witness = nn.witness;

  // Proper Rees factors.  S/I nilpotent implies S/J nilpotent for any ideal
  // J containing I, and every ideal of size >= 2 contains a principal ideal
  // of size >= 2, so the principal ones decide the lot.
  for (const Bitset& p : distinct_principal_ideals(s)) {
    if (p.count() < 2) continue;
    const std::vector<int> members = p.to_indices();
    if (!decide_nilpotent(rees_quotient(s, members)).nilpotent)
      verdict.offenders.push_back(
          {MnnOffender::Kind::Ideal, {}, members});
  }

  // Proper subsemigroups.
  std::vector<MnnOffender> candidates;
  if (mode == MnnMode::FourGenerator) {
    const auto subs = subsemigroups_generated(s, 4, threads);
    std::vector<char> bad(subs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (size_t i = 0; i < subs.size(); ++i) {
      if (static_cast<int>(subs[i].members.size()) == s.size()) continue;
      bad[i] = !decide_nilpotent(subsemigroup(s, subs[i].members)).nilpotent;
    }
    for (size_t i = 0; i < subs.size(); ++i)
      if (bad[i])
        candidates.push_back(
            {MnnOffender::Kind::Subsemigroup, subs[i].generators, subs[i].members});
  } else {
    const auto subs = all_subsemigroups(s);
    std::vector<char> bad(subs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (size_t i = 0; i < subs.size(); ++i) {
      if (static_cast<int>(subs[i].size()) == s.size()) continue;
      bad[i] = !decide_nilpotent(subsemigroup(s, subs[i])).nilpotent;
    }
    for (size_t i = 0; i < subs.size(); ++i)
      if (bad[i])
        candidates.push_back({MnnOffender::Kind::Subsemigroup, subs[i], subs[i]});
  }
  verdict.offenders.insert(verdict.offenders.end(), candidates.begin(),
                           candidates.end());

  std::sort(verdict.offenders.begin(), verdict.offenders.end(),
            [](const MnnOffender& a, const MnnOffender& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              if (a.members != b.members) return a.members < b.members;
              return a.generators < b.generators;
            });
  verdict.minimal = verdict.offenders.empty();
  return verdict;
}

}  // namespace nilpotentia

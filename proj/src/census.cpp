#include "nilpotentia/census.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilpotentia/error.hpp"
#include "nilpotentia/nilpotency.hpp"
#include "nilpotentia/structure.hpp"

namespace nilpotentia {

namespace {

constexpr int kMaxOrder = 7;

using Perm = std::array<uint8_t, kMaxOrder>;

std::vector<Perm> all_permutations(int n) {
  Perm p{};
  for (int i = 0; i < n; ++i) p[i] = static_cast<uint8_t>(i);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return out;
}

// Partial Cayley table with associativity checking against the filled part.
struct TableState {
  int n = 0;
  std::array<int8_t, kMaxOrder * kMaxOrder> t{};
  std::array<std::vector<int>, kMaxOrder> preimages;  // value -> cells

  explicit TableState(int order) : n(order) { t.fill(-1); }

  int8_t at(int r, int c) const { return t[r * n + c]; }

  void assign(int cell, int v) {
    t[cell] = static_cast<int8_t>(v);
    preimages[v].push_back(cell);
  }
  void unassign(int cell) {
    preimages[t[cell]].pop_back();
    t[cell] = -1;
  }

  // All associativity triples that the assignment cell=(i,j) completes.
  bool consistent(int cell) const {
    const int i = cell / n, j = cell % n;
    const int v = t[cell];
    for (int c = 0; c < n; ++c) {
      const int bc = at(j, c);  // (i j) c  vs  i (j c)
      if (bc >= 0) {
        const int l = at(v, c), r = at(i, bc);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
      const int ai = at(c, i);  // (c i) j  vs  c (i j)
      if (ai >= 0) {
        const int l = at(ai, j), r = at(c, v);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
    for (int ab : preimages[i]) {  // a b = i: (a b) j  vs  a (b j)
      const int a = ab / n, b = ab % n;
      const int bj = at(b, j);
      if (bj >= 0) {
        const int r = at(a, bj);
        if (r >= 0 && r != v) return false;
      }
    }
    for (int bc : preimages[j]) {  // b c = j: (i b) c  vs  i (b c)
      const int b = bc / n, c = bc % n;
      const int ib = at(i, b);
      if (ib >= 0) {
        const int l = at(ib, c);
        if (l >= 0 && l != v) return false;
      }
    }
    return true;
  }
};

// One symmetry still capable of beating the table: permutation index,
// whether it reads the transpose, and the first cell not yet proven equal.
struct Candidate {
  uint16_t perm;
  uint8_t transposed;
  uint8_t resume;
};

enum class WalkResult { Prune, Drop, Keep };

struct Orderly {
  int n;
  bool anti;
  std::vector<Perm> perms;
  std::vector<Perm> inverse;
  TableState state;
  std::vector<CensusTable>* out = nullptr;

  Orderly(int order, bool anti_iso)
      : n(order), anti(anti_iso), perms(all_permutations(order)), state(order) {
    inverse.resize(perms.size());
    for (size_t p = 0; p < perms.size(); ++p)
      for (int i = 0; i < n; ++i) inverse[p][perms[p][i]] = static_cast<uint8_t>(i);
  }

  std::vector<Candidate> initial_candidates() const {
    std::vector<Candidate> cands;
    for (size_t p = 0; p < perms.size(); ++p) {
      if (p != 0) cands.push_back({static_cast<uint16_t>(p), 0, 0});
      if (anti) cands.push_back({static_cast<uint16_t>(p), 1, 0});
    }
    return cands;
  }

  // Compares the candidate's image table against the filled prefix.  A
  // certainly-smaller image prunes the subtree; a certainly-greater one
  // retires the candidate for the whole subtree.
  WalkResult walk(Candidate& c, int rows_filled) const {
    const Perm& p = perms[c.perm];
    const Perm& pinv = inverse[c.perm];
    const int limit = rows_filled * n;
    for (int q = c.resume; q < limit; ++q) {
      int sr = pinv[q / n], sc = pinv[q % n];
      if (c.transposed) std::swap(sr, sc);
      if (sr >= rows_filled) {
        c.resume = static_cast<uint8_t>(q);
        return WalkResult::Keep;
      }
      const int img = p[state.at(sr, sc)];
      const int own = state.at(q / n, q % n);
      if (img != own) return img < own ? WalkResult::Prune : WalkResult::Drop;
    }
    c.resume = static_cast<uint8_t>(limit);
    return WalkResult::Keep;
  }

  // Filters candidates after completing row (rows_filled-1).  Returns false
  // when the prefix is certainly non-minimal.
  bool filter(const std::vector<Candidate>& in, int rows_filled,
              std::vector<Candidate>& kept) const {
    kept.clear();
    for (Candidate c : in) {
      switch (walk(c, rows_filled)) {
        case WalkResult::Prune: return false;
        case WalkResult::Drop: break;
        case WalkResult::Keep: kept.push_back(c); break;
      }
    }
    return true;
  }

  void fill_row(int row, int col, const std::vector<Candidate>& cands) {
    if (col == n) {
      std::vector<Candidate> kept;
      if (!filter(cands, row + 1, kept)) return;
      if (row + 1 == n) {
        out->emplace_back(state.t.begin(), state.t.begin() + n * n);
      } else {
        fill_row(row + 1, 0, kept);
      }
      return;
    }
    const int cell = row * n + col;
    for (int v = 0; v < n; ++v) {
      state.assign(cell, v);
      if (state.consistent(cell)) fill_row(row, col + 1, cands);
      state.unassign(cell);
    }
  }
};

struct Root {
  std::array<int8_t, kMaxOrder> row0{};
  std::vector<Candidate> cands;
};

std::vector<Root> first_row_roots(int n, bool anti) {
  Orderly e(n, anti);
  const std::vector<Candidate> initial = e.initial_candidates();
  std::vector<Root> roots;

  // Depth-first over row 0 only.
  struct Rec {
    Orderly& e;
    const std::vector<Candidate>& initial;
    std::vector<Root>& roots;
    void operator()(int col) {
      const int n = e.n;
      if (col == n) {
        std::vector<Candidate> kept;
        if (!e.filter(initial, 1, kept)) return;
        Root r;
        for (int c = 0; c < n; ++c) r.row0[c] = e.state.at(0, c);
        r.cands = std::move(kept);
        roots.push_back(std::move(r));
        return;
      }
      for (int v = 0; v < n; ++v) {
        e.state.assign(col, v);
        if (e.state.consistent(col)) (*this)(col + 1);
        e.state.unassign(col);
      }
    }
  };
  Rec{e, initial, roots}(0);
  return roots;
}

void validate_config(const CensusConfig& cfg) {
  if (cfg.order < 1 || cfg.order > kMaxOrder)
    fail(ErrorKind::CapExceeded,
         "census order must be between 1 and " + std::to_string(kMaxOrder));
  if (cfg.shards < 1) fail(ErrorKind::BadParameter, "shards must be positive");
}

}  // namespace

std::vector<CensusTable> enumerate_semigroups(const CensusConfig& cfg, int threads) {
  validate_config(cfg);
  const int n = cfg.order;
  const bool anti = cfg.modulo == CensusModulo::IsoAntiIso;

  const std::vector<Root> roots = first_row_roots(n, anti);
  std::vector<std::vector<CensusTable>> per_root(roots.size());

  // Shards partition the first-row prefixes; each shard sweeps its roots in
  // parallel.  The slot-indexed assembly keeps the output identical for any
  // shard or thread count.
  for (int shard = 0; shard < cfg.shards; ++shard) {
    std::vector<size_t> mine;
    for (size_t r = shard; r < roots.size(); r += cfg.shards) mine.push_back(r);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (size_t k = 0; k < mine.size(); ++k) {
      const Root& root = roots[mine[k]];
      Orderly e(n, anti);
      e.out = &per_root[mine[k]];
      for (int c = 0; c < n; ++c) e.state.assign(c, root.row0[c]);
      if (n == 1) {
        e.out->emplace_back(e.state.t.begin(), e.state.t.begin() + 1);
      } else {
        e.fill_row(1, 0, root.cands);
      }
    }
  }

  std::vector<CensusTable> out;
  for (auto& block : per_root)
    for (auto& t : block) out.push_back(std::move(t));
  assert(std::is_sorted(out.begin(), out.end()));
  return out;
}

std::vector<CensusTable> enumerate_semigroups_reference(int order,
                                                        CensusModulo modulo) {
  CensusConfig cfg;
  cfg.order = order;
  validate_config(cfg);
  const int n = order;
  const bool anti = modulo == CensusModulo::IsoAntiIso;
  const std::vector<Perm> perms = all_permutations(n);
  std::vector<Perm> inverse(perms.size());
  for (size_t p = 0; p < perms.size(); ++p)
    for (int i = 0; i < n; ++i) inverse[p][perms[p][i]] = static_cast<uint8_t>(i);

  TableState state(n);
  std::vector<CensusTable> out;

  auto canonical = [&]() {
    for (size_t p = 0; p < perms.size(); ++p)
      for (int tr = 0; tr <= (anti ? 1 : 0); ++tr) {
        if (p == 0 && tr == 0) continue;
        for (int q = 0; q < n * n; ++q) {
          int sr = inverse[p][q / n], sc = inverse[p][q % n];
          if (tr) std::swap(sr, sc);
          const int img = perms[p][state.at(sr, sc)];
          const int own = state.at(q / n, q % n);
          if (img != own) {
            if (img < own) return false;
            break;
          }
        }
      }
    return true;
  };

  struct Rec {
    TableState& state;
    std::vector<CensusTable>& out;
    const std::function<bool()>& canonical;
    int n;
    void operator()(int cell) {
      if (cell == n * n) {
        if (canonical()) out.emplace_back(state.t.begin(), state.t.begin() + n * n);
        return;
      }
      for (int v = 0; v < n; ++v) {
        state.assign(cell, v);
        if (state.consistent(cell)) (*this)(cell + 1);
        state.unassign(cell);
      }
    }
  };
  const std::function<bool()> canon_fn = canonical;
  Rec{state, out, canon_fn, n}(0);
  return out;
}

Semigroup census_semigroup(const CensusTable& table, int order) {
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) rows[i][j] = table[i * order + j];
  return validate_semigroup(default_labels(order), rows);
}

std::vector<CensusHit> find_minimal_non_nilpotent(const CensusConfig& cfg,
                                                  int threads) {
  if (cfg.filter != CensusFilter::MinimalNonNilpotent)
    fail(ErrorKind::BadParameter, "filter must be mnn");
  const std::vector<CensusTable> tables = enumerate_semigroups(cfg, threads);

  std::vector<char> keep(tables.size(), 0);
  std::vector<Classification> cls(tables.size());
  std::exception_ptr error;  // exceptions must not unwind the parallel region
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
  for (size_t i = 0; i < tables.size(); ++i) {
    try {
      const Semigroup s = census_semigroup(tables[i], cfg.order);
      if (decide_nilpotent(s).nilpotent) continue;
      if (!is_minimal_non_nilpotent(s, MnnMode::Exhaustive).minimal) continue;
      ClassifyOptions opts;
      opts.mode = MnnMode::Exhaustive;
      cls[i] = classify(s, opts);
      keep[i] = 1;
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<CensusHit> hits;
  for (size_t i = 0; i < tables.size(); ++i)
    if (keep[i]) hits.push_back({census_semigroup(tables[i], cfg.order), std::move(cls[i])});
  return hits;
}

}  // namespace nilpotentia

#include "nilpotentia/nilpotency.hpp"

#include <algorithm>
#include <cassert>

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"

namespace nilpotentia {

PairGraph::PairGraph(const Semigroup& s, WitnessScope scope) : n_(s.size()) {
  labels_ = scope == WitnessScope::MonoidS1 ? s.monoid_size() : s.size();
  adjoined_ = (scope == WitnessScope::MonoidS1 && s.identity_adjoined()) ? s.size() : -1;
  succ_.resize(static_cast<size_t>(n_) * n_ * labels_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const size_t base = static_cast<size_t>(node(x, y)) * labels_;
      for (int w = 0; w < labels_; ++w) {
        const int xw = s.monoid_product(x, w);
        const int yw = s.monoid_product(y, w);
        succ_[base + w] = node(s.product(xw, y), s.product(yw, x));
      }
    }
}

int PairGraph::label_rank(int w) const {
  if (adjoined_ == -1) return w;
  return w == adjoined_ ? 0 : w + 1;
}

std::vector<int> PairGraph::labels_by_rank() const {
  std::vector<int> order(labels_);
  for (int w = 0; w < labels_; ++w) order[w] = w;
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return label_rank(a) < label_rank(b); });
  return order;
}

std::pair<int, int> lambda_rho(const Semigroup& s, int x, int y,
                               const std::vector<int>& ws) {
  if (x < 0 || x >= s.size() || y < 0 || y >= s.size())
    fail(ErrorKind::IndexOutOfRange, "lambda_rho start pair");
  int l = x, r = y;
  for (int w : ws) {
    if (w < 0 || w >= s.monoid_size())
      fail(ErrorKind::IndexOutOfRange, "word entry " + std::to_string(w));
    const int lw = s.monoid_product(l, w);
    const int rw = s.monoid_product(r, w);
    const int nl = s.product(lw, r);
    const int nr = s.product(rw, l);
    l = nl;
    r = nr;
  }
  return {l, r};
}

bool verify_witness(const Semigroup& s, const Witness& w) {
  if (w.x == w.y) return false;
  if (w.ws.empty()) return false;
  if (w.x < 0 || w.x >= s.size() || w.y < 0 || w.y >= s.size()) return false;
  for (int c : w.ws)
    if (c < 0 || c >= s.monoid_size()) return false;
  return lambda_rho(s, w.x, w.y, w.ws) == std::make_pair(w.x, w.y);
}

namespace {

// Iterative Tarjan over the off-diagonal part of the pair graph (edges that
// leave the off-diagonal are ignored: the diagonal cannot lead back).
struct SccResult {
  std::vector<int> comp;   // node -> component id, -1 for diagonal nodes
  std::vector<int> comp_size;
};

SccResult off_diagonal_sccs(const PairGraph& g) {
  const int V = g.node_count();
  SccResult res;
  res.comp.assign(V, -1);
  std::vector<int> index(V, -1), low(V, 0);
  std::vector<char> on_stack(V, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    int w;  // next label to explore
  };
  std::vector<Frame> call;

  for (int root = 0; root < V; ++root) {
    if (g.diagonal(root) || index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.w < g.label_count()) {
        const int u = g.successor(f.v, f.w++);
        if (g.diagonal(u)) continue;
        if (index[u] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
      } else {
        const int v = f.v;
        call.pop_back();
        if (low[v] == index[v]) {
          const int id = static_cast<int>(res.comp_size.size());
          int size = 0;
          while (true) {
            const int u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            res.comp[u] = id;
            ++size;
            if (u == v) break;
          }
          res.comp_size.push_back(size);
        }
        if (!call.empty()) {
          Frame& parent = call.back();
          low[parent.v] = std::min(low[parent.v], low[v]);
        }
      }
    }
  }
  return res;
}

bool has_self_loop(const PairGraph& g, int p) {
  for (int w = 0; w < g.label_count(); ++w)
    if (g.successor(p, w) == p) return true;
  return false;
}

// Shortest directed cycle through p, restricted to p's SCC, bounded by
// `bound` (exclusive).  Returns -1 when none shorter than the bound.
int shortest_cycle_through(const PairGraph& g, const SccResult& scc, int p, int bound) {
  const int V = g.node_count();
  std::vector<int> dist(V, -1);
  std::vector<int> frontier{p};
  int d = 0;
  while (!frontier.empty() && d + 1 < bound) {
    std::vector<int> next;
    for (int v : frontier)
      for (int w = 0; w < g.label_count(); ++w) {
        const int u = g.successor(v, w);
        if (u == p) return d + 1;
        if (g.diagonal(u) || scc.comp[u] != scc.comp[p]) continue;
        if (dist[u] == -1) {
          dist[u] = d + 1;
          next.push_back(u);
        }
      }
    frontier = std::move(next);
    ++d;
  }
  return -1;
}

// Lexicographically least label word of length m from p back to p, ranks per
// PairGraph::label_rank.  Backward-reachability table then a greedy walk.
std::vector<int> least_cycle_word(const PairGraph& g, const SccResult& scc, int p, int m) {
  const int V = g.node_count();
  // can[t*V + v]: a path of length t from v to p exists (within p's SCC).
  std::vector<char> can(static_cast<size_t>(m + 1) * V, 0);
  can[static_cast<size_t>(0) * V + p] = 1;
  for (int t = 1; t <= m; ++t)
    for (int v = 0; v < V; ++v) {
      if (g.diagonal(v) || scc.comp[v] != scc.comp[p]) continue;
      for (int w = 0; w < g.label_count(); ++w) {
        const int u = g.successor(v, w);
        if (can[static_cast<size_t>(t - 1) * V + u]) {
          can[static_cast<size_t>(t) * V + v] = 1;
          break;
        }
      }
    }
  std::vector<int> order = g.labels_by_rank();
  std::vector<int> word;
  int v = p;
  for (int t = m; t >= 1; --t) {
    for (int w : order) {
      const int u = g.successor(v, w);
      if (can[static_cast<size_t>(t - 1) * V + u]) {
        word.push_back(w);
        v = u;
        break;
      }
    }
  }
  assert(static_cast<int>(word.size()) == m && v == p);
  return word;
}

}  // namespace

std::optional<int> nilpotency_class(const Semigroup& s, WitnessScope scope) {
  const int n = s.size();
  const PairGraph g(s, scope);
  Bitset pairs(n * n);
  for (int p = 0; p < n * n; ++p) pairs.set(p);

  Bitset diagonal(n * n);
  for (int x = 0; x < n; ++x) diagonal.set(g.node(x, x));

  int k = 0;
  while (true) {
    if (pairs.is_subset_of(diagonal)) return k;
    Bitset next(n * n);
    for (int p = pairs.first_set(); p != -1; p = pairs.next_set(p + 1))
      for (int w = 0; w < g.label_count(); ++w) next.set(g.successor(p, w));
    if (next == pairs) return std::nullopt;  // limit set meets the off-diagonal
    pairs = std::move(next);
    ++k;
  }
}

NilpotencyResult decide_nilpotent(const Semigroup& s, WitnessScope scope) {
  const PairGraph g(s, scope);
  const SccResult scc = off_diagonal_sccs(g);

  std::vector<int> cyclic;
  for (int p = 0; p < g.node_count(); ++p) {
    if (g.diagonal(p)) continue;
    if (scc.comp_size[scc.comp[p]] >= 2 || has_self_loop(g, p)) cyclic.push_back(p);
  }

  if (cyclic.empty()) {
    NilpotencyResult res;
    res.nilpotent = true;
    const auto cls = nilpotency_class(s, scope);
    if (!cls)
      fail(ErrorKind::IllDefined,
           "pair-graph and fixpoint routes disagree on nilpotency");
    res.cls = *cls;
    return res;
  }

  int best_len = g.node_count() + 1;
  std::vector<int> at_best;
  for (int p : cyclic) {
    const int len = shortest_cycle_through(g, scc, p, best_len + 1);
    if (len == -1 || len > best_len) continue;
    if (len < best_len) {
      best_len = len;
      at_best.clear();
    }
    at_best.push_back(p);
  }
  assert(!at_best.empty());

  // Least witness under (cycle length, edge-label word, start pair).
  int best_node = -1;
  std::vector<int> best_word;
  auto word_rank_less = [&g](const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t k = 0; k < a.size(); ++k) {
      if (g.label_rank(a[k]) != g.label_rank(b[k]))
        return g.label_rank(a[k]) < g.label_rank(b[k]);
    }
    return false;
  };
  for (int p : at_best) {
    std::vector<int> word = least_cycle_word(g, scc, p, best_len);
    if (best_node == -1 || word_rank_less(word, best_word)) {
      best_node = p;
      best_word = std::move(word);
    }
  }

  Witness w;
  w.x = g.node_x(best_node);
  w.y = g.node_y(best_node);
  w.ws = std::move(best_word);

  NilpotencyResult res;
  res.nilpotent = false;
  res.witness = std::move(w);
  assert(verify_witness(s, *res.witness));
  return res;
}

}  // namespace nilpotentia

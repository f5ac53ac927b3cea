#ifndef NILPOTENTIA_NILPOTENCY_HPP_
#define NILPOTENTIA_NILPOTENCY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

// Which alphabet the interleaving words w_i range over: the monoid S^1 (the
// definition in force throughout) or S only (the historical variant, kept as
// a diagnostic).
enum class WitnessScope { MonoidS1, SemigroupOnly };

// A non-nilpotency certificate: distinct x != y and words w_1..w_m over S^1
// with lambda_m(x,y,ws) == x and rho_m(x,y,ws) == y.  Entries of ws use
// monoid indexing (index size() is the adjoined identity when S^1 != S).
struct Witness {
  int x = -1;
  int y = -1;
  std::vector<int> ws;
};

struct NilpotencyResult {
  bool nilpotent = false;
  int cls = -1;                    // nilpotency class, valid when nilpotent
  std::optional<Witness> witness;  // present when not nilpotent
};

// The directed graph on ordered pairs whose edges apply one lambda/rho step:
// (x,y) --w--> (x*w*y, y*w*x) for every w in the chosen alphabet.  The
// diagonal is closed under edges, so off-diagonal cycles are exactly the
// non-nilpotency obstructions.
class PairGraph {
 public:
  PairGraph(const Semigroup& s, WitnessScope scope);

  int node_count() const { return n_ * n_; }
  int label_count() const { return labels_; }
  int node(int x, int y) const { return x * n_ + y; }
  int node_x(int p) const { return p / n_; }
  int node_y(int p) const { return p % n_; }
  bool diagonal(int p) const { return p / n_ == p % n_; }
  int successor(int p, int w) const { return succ_[static_cast<size_t>(p) * labels_ + w]; }

  // Rank used for lexicographic witness comparison: the adjoined identity
  // sorts before the elements of S.
  int label_rank(int w) const;
  std::vector<int> labels_by_rank() const;

 private:
  int n_;
  int labels_;
  int adjoined_;  // monoid index of the adjoined identity, or -1
  std::vector<int> succ_;
};

// lambda_m and rho_m for the given word, multiplying in S^1.
std::pair<int, int> lambda_rho(const Semigroup& s, int x, int y,
                               const std::vector<int>& ws);

// Malcev nilpotency decision.  Non-nilpotent iff some off-diagonal pair lies
// on a directed cycle of the pair graph; the witness is the lexicographically
// least one under (cycle length, start pair, edge-label sequence).
NilpotencyResult decide_nilpotent(const Semigroup& s,
                                  WitnessScope scope = WitnessScope::MonoidS1);

// Least k with P_k inside the diagonal for the descending pair-set chain
// P_0 = all pairs, P_{k+1} = one edge step; nullopt when the limit set meets
// the off-diagonal.
std::optional<int> nilpotency_class(const Semigroup& s,
                                    WitnessScope scope = WitnessScope::MonoidS1);

bool verify_witness(const Semigroup& s, const Witness& w);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_NILPOTENCY_HPP_

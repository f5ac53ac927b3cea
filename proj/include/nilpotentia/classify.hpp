#ifndef NILPOTENTIA_CLASSIFY_HPP_
#define NILPOTENTIA_CLASSIFY_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "nilpotentia/groups.hpp"
#include "nilpotentia/rees.hpp"
#include "nilpotentia/structure.hpp"

namespace nilpotentia {

enum class SemigroupType { Nilpotent, NotMinimal, Schmidt, U1, U2, U3, U4, U5 };

const char* to_string(SemigroupType t);

// S = M^0(G,2,2;I_2) u <u>: cyclic 2^k-group glued along a transposition.
struct U3Data {
  int u = -1;
  int k = 0;                           // |<u>| = 2^k
  std::array<int, 2> psi{};            // G indices of Psi(u)(1), Psi(u)(2)
  std::vector<int> group_generators;   // the psi values, deduplicated
};

// S = M^0(G,3,3;I_3) u <x1,x2> with the (2,1,3,theta) / (2,3,theta)(1) orbits.
struct U4Data {
  int x1 = -1, x2 = -1;
  std::vector<int> relabel;            // old point -> new point; [0] unused
  bool relations_checked = false;      // x2 x1^2 = x1^2 x2 = x1^3 = x2 x1 x2 = theta
  std::vector<int> group_generators;
};

// S = M^0(G,n,n;I_n) u <v1,v2> with the crossed 4-point orbit pattern.
struct U5Data {
  int v1 = -1, v2 = -1;
  std::array<int, 4> ks{};             // k1..k4 realising the pattern
  std::vector<int> group_generators;
};

struct Classification {
  SemigroupType verdict = SemigroupType::Nilpotent;
  std::optional<int> nilpotency_class;     // Nilpotent
  std::optional<Witness> witness;          // everything non-nilpotent
  std::vector<MnnOffender> offenders;      // NotMinimal
  std::optional<SchmidtReport> schmidt;    // Schmidt
  std::vector<int> ideal;                  // U3/U4/U5: members of M
  std::optional<ReesDecomposition> dec;    // U3/U4/U5
  std::optional<GammaPsi> gp;              // U3/U4/U5
  std::optional<U3Data> u3;
  std::optional<U4Data> u4;
  std::optional<U5Data> u5;
};

struct ClassifyOptions {
  MnnMode mode = MnnMode::FourGenerator;
  int threads = 1;
  // Classify against every qualifying inverse ideal and insist the verdicts
  // agree, instead of just the smallest one.
  bool verify_all_ideals = false;
};

// The full pipeline: nilpotency, minimality, then Schmidt / U1 / U2 or the
// inverse-ideal orbit analysis dispatching U3 -> U4 -> U5.  Type invariants
// are verified before returning; a violation throws, it is never ignored.
Classification classify(const Semigroup& s, const ClassifyOptions& opts = {});

// Gamma(S) as a semigroup of transformations under composition, with the
// index map of the surjection S -> Gamma(S).
std::pair<Semigroup, std::vector<int>> minimal_image(const Semigroup& s,
                                                     const ReesDecomposition& dec);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_CLASSIFY_HPP_

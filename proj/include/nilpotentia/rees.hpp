#ifndef NILPOTENTIA_REES_HPP_
#define NILPOTENTIA_REES_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

// Rees matrix semigroup data M^0(G, n, m; P).  Row indices i run 1..rows,
// column indices j run 1..cols; the sandwich matrix P is cols x rows with
// entry p[j][k] mediating the product (g;i,j)(h;k,l) = (g p_{jk} h; i, l).
// Entries are group indices, -1 for theta.
struct ReesSpec {
  Semigroup group;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> sandwich;
  bool with_zero = true;

  int entry(int j, int k) const { return sandwich[j - 1][k - 1]; }
};

// Coordinates (g;i,j); the zero carries g == -1.
struct ReesTriple {
  int g = -1;
  int i = 0;
  int j = 0;
  bool operator==(const ReesTriple&) const = default;
};

struct BuiltRees {
  Semigroup s;
  std::vector<ReesTriple> coords;  // per element of s
  int zero = -1;                   // index of theta, -1 when with_zero is false

  int element_of(int g, int i, int j) const;  // inverse of coords
};

// Constructs the semigroup; validates regularity and associativity.
BuiltRees build_rees(const ReesSpec& spec);

// True iff rows == cols, the sandwich normalises to the identity matrix
// (exactly one nonzero entry in every row and column) and the group passes
// the lower-central-series oracle.
bool rees_nilpotency_criterion(const ReesSpec& spec);

// Rees coordinatisation of a completely 0-simple ideal M of S, validated by
// rebuilding the semigroup from the recovered spec.  When the sandwich is
// monomial and square the decomposition is normalised so that P = I_n.
struct ReesDecomposition {
  ReesSpec spec;
  std::vector<int> ideal;          // members of M in S, ascending
  int zero = -1;                   // S index of theta
  std::vector<ReesTriple> coords;  // per S element; g == -1 off the ideal

  int element_of(int g, int i, int j) const;  // S index of (g;i,j)
  bool inverse_form() const;                  // rows == cols and P == I_n

 private:
  friend ReesDecomposition rees_decompose(const Semigroup& s,
                                          const std::vector<int>& ideal_members);
  std::vector<int> lookup_;  // (g, i-1, j-1) -> S index
};

ReesDecomposition rees_decompose(const Semigroup& s,
                                 const std::vector<int>& ideal_members);

// A transformation of {1..n} with adjoined theta (point 0); img[0] == 0.
struct Transformation {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()) - 1; }
  int operator()(int p) const { return img[p]; }
  bool constant_theta() const {
    for (size_t p = 1; p < img.size(); ++p)
      if (img[p] != 0) return false;
    return true;
  }
  bool operator==(const Transformation&) const = default;
};

Transformation identity_transformation(int n);
// f after g: (f * g)(p) = f(g(p)), matching Gamma(st) = Gamma(s) . Gamma(t).
Transformation compose(const Transformation& f, const Transformation& g);

// The action of S on the R-class indices of an inverse ideal, with the
// G-valued coordinate cocycle; gamma[s] is the transformation for element s,
// psi[s][i] the group index (or -1 for theta) at point i.
struct GammaPsi {
  int n = 0;
  std::vector<Transformation> gamma;
  std::vector<std::vector<int>> psi;
};

// Requires dec in inverse form.  IllDefined when distinct columns disagree.
GammaPsi gamma_psi(const Semigroup& s, const ReesDecomposition& dec);

// Exhaustive law check: homomorphism, cocycle, support equality, injectivity
// off the theta preimage, and the coordinate formulas on the ideal itself.
void verify_gamma_psi(const Semigroup& s, const ReesDecomposition& dec,
                      const GammaPsi& gp);

// Disjoint cycle notation: closed cycles (i1..ik) including fixed points,
// theta-tailed cycles (i1..ik,theta) with k >= 2, and bare (i,theta) tails
// suppressed.  The constant-theta transformation has no cycles at all.
struct Cycle {
  std::vector<int> points;
  bool theta_tailed = false;
  bool operator==(const Cycle&) const = default;
};

struct CycleForm {
  int degree = 0;
  std::vector<Cycle> cycles;

  bool constant_theta() const { return cycles.empty(); }
  std::string str() const;  // e.g. "(2,1,3,0)(5)"; "0" stands for theta
  bool operator==(const CycleForm&) const = default;
};

CycleForm cycle_decompose(const Transformation& t);
Transformation cycle_expand(const CycleForm& form);

bool has_transposition(const CycleForm& f);

// (o2,o1,o3,theta) in `a` together with (o2,o3,theta)(o1) in `b`, for
// pairwise distinct o1, o2, o3.  Returns {o1, o2, o3}.
std::optional<std::array<int, 3>> find_u4_pattern(const CycleForm& a,
                                                  const CycleForm& b);
bool u4_pattern(const CycleForm& a, const CycleForm& b);

// Pairwise distinct k1..k4 with g1(k1)=k2, g1(k3)=k4, g2(k1)=k4, g2(k3)=k2.
std::optional<std::array<int, 4>> find_u5_pattern(const Transformation& g1,
                                                  const Transformation& g2);
bool u5_pattern(const Transformation& g1, const Transformation& g2);

// The theta-disjoint union of an inverse Rees semigroup and a zero semigroup
// T acting on it through gamma/psi.
struct GlueSpec {
  ReesSpec m_spec;  // rows == cols, identity sandwich
  Semigroup t;      // must have a zero
  std::vector<Transformation> gamma_t;  // per element of t
  std::vector<std::vector<int>> psi_t;  // per element of t, indexed 0..n
};

struct GluedUnion {
  Semigroup s;
  std::vector<int> ideal;    // members of the Rees part, ascending (incl. zero)
  int zero = -1;
  std::vector<int> t_to_s;   // t element -> s element (zero of t -> zero)
  std::vector<int> m_to_s;   // built-rees element -> s element
};

GluedUnion glued_union(const GlueSpec& gs);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_REES_HPP_

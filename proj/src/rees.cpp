#include "nilpotentia/rees.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/groups.hpp"
#include "nilpotentia/structure.hpp"

namespace nilpotentia {

namespace {

void validate_spec(const ReesSpec& spec) {
  if (!is_group(spec.group))
    fail(ErrorKind::NotAGroup, "the Rees coefficient semigroup must be a group");
  if (spec.rows < 1 || spec.cols < 1)
    fail(ErrorKind::BadParameter, "rows and cols must be positive");
  if (static_cast<int>(spec.sandwich.size()) != spec.cols)
    fail(ErrorKind::BadParameter, "sandwich must have cols rows");
  for (const auto& row : spec.sandwich) {
    if (static_cast<int>(row.size()) != spec.rows)
      fail(ErrorKind::BadParameter, "sandwich must have rows columns");
    for (int v : row)
      if (v < -1 || v >= spec.group.size())
        fail(ErrorKind::BadParameter, "sandwich entry out of range");
  }
  for (int j = 1; j <= spec.cols; ++j) {
    bool nonzero = false;
    for (int k = 1; k <= spec.rows; ++k) nonzero = nonzero || spec.entry(j, k) != -1;
    if (!nonzero) fail(ErrorKind::NotRegular, "sandwich row " + std::to_string(j) + " is all theta");
  }
  for (int k = 1; k <= spec.rows; ++k) {
    bool nonzero = false;
    for (int j = 1; j <= spec.cols; ++j) nonzero = nonzero || spec.entry(j, k) != -1;
    if (!nonzero) fail(ErrorKind::NotRegular, "sandwich column " + std::to_string(k) + " is all theta");
  }
  if (!spec.with_zero)
    for (int j = 1; j <= spec.cols; ++j)
      for (int k = 1; k <= spec.rows; ++k)
        if (spec.entry(j, k) == -1)
          fail(ErrorKind::NotRegular, "theta entries require with_zero");
}

bool sandwich_is_monomial(const ReesSpec& spec) {
  for (int j = 1; j <= spec.cols; ++j) {
    int nonzero = 0;
    for (int k = 1; k <= spec.rows; ++k) nonzero += spec.entry(j, k) != -1;
    if (nonzero != 1) return false;
  }
  for (int k = 1; k <= spec.rows; ++k) {
    int nonzero = 0;
    for (int j = 1; j <= spec.cols; ++j) nonzero += spec.entry(j, k) != -1;
    if (nonzero != 1) return false;
  }
  return true;
}

bool sandwich_is_identity(const ReesSpec& spec) {
  if (spec.rows != spec.cols || !spec.group.identity()) return false;
  const int e = *spec.group.identity();
  for (int j = 1; j <= spec.cols; ++j)
    for (int k = 1; k <= spec.rows; ++k)
      if (spec.entry(j, k) != (j == k ? e : -1)) return false;
  return true;
}

}  // namespace

int BuiltRees::element_of(int g, int i, int j) const {
  for (size_t x = 0; x < coords.size(); ++x)
    if (coords[x] == ReesTriple{g, i, j}) return static_cast<int>(x);
  return -1;
}

BuiltRees build_rees(const ReesSpec& spec) {
  validate_spec(spec);
  const int gn = spec.group.size();
  const int count = gn * spec.rows * spec.cols + (spec.with_zero ? 1 : 0);

  BuiltRees out;
  out.coords.reserve(count);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 1; i <= spec.rows; ++i)
    for (int j = 1; j <= spec.cols; ++j)
      for (int g = 0; g < gn; ++g) {
        out.coords.push_back({g, i, j});
        labels.push_back("(" + spec.group.label(g) + ";" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
  const int theta = spec.with_zero ? count - 1 : -1;
  if (spec.with_zero) {
    out.coords.push_back({-1, 0, 0});
    labels.push_back("0");
  }

  auto index_of = [&](int g, int i, int j) {
    return ((i - 1) * spec.cols + (j - 1)) * gn + g;
  };
  std::vector<std::vector<int>> table(count, std::vector<int>(count));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      if (a == theta || b == theta) {
        table[a][b] = theta;
        continue;
      }
      const ReesTriple& x = out.coords[a];
      const ReesTriple& y = out.coords[b];
      const int p = spec.entry(x.j, y.i);
      if (p == -1) {
        table[a][b] = theta;
      } else {
        const int prod = spec.group.product(spec.group.product(x.g, p), y.g);
        table[a][b] = index_of(prod, x.i, y.j);
      }
    }
  out.s = validate_semigroup(std::move(labels), table);
  out.zero = theta;
  return out;
}

bool rees_nilpotency_criterion(const ReesSpec& spec) {
  validate_spec(spec);
  if (spec.rows != spec.cols) return false;
  if (!sandwich_is_monomial(spec)) return false;
  return group_nilpotency_class(spec.group).has_value();
}

int ReesDecomposition::element_of(int g, int i, int j) const {
  if (g == -1) return zero;
  return lookup_[(static_cast<size_t>(g) * spec.rows + (i - 1)) * spec.cols + (j - 1)];
}

bool ReesDecomposition::inverse_form() const {
  return spec.rows == spec.cols && sandwich_is_identity(spec);
}

ReesDecomposition rees_decompose(const Semigroup& s,
                                 const std::vector<int>& ideal_members) {
  if (!is_ideal(s, ideal_members))
    fail(ErrorKind::NotAnIdeal, "the given set is not a two-sided ideal");
  std::vector<int> members = ideal_members;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const Semigroup M = subsemigroup(s, members);
  const int mn = M.size();
  if (!M.zero())
    fail(ErrorKind::NotCompletelyZeroSimple, "the ideal has no zero element");
  const int theta = *M.zero();

  bool square_nonzero = false;
  for (int a = 0; a < mn && !square_nonzero; ++a)
    for (int b = 0; b < mn && !square_nonzero; ++b)
      square_nonzero = a != theta && b != theta && M.product(a, b) != theta;
  if (!square_nonzero)
    fail(ErrorKind::NotCompletelyZeroSimple, "M^2 = {theta}");

  {
    const auto ids = ideals(M);
    if (ids.size() != 2)
      fail(ErrorKind::NotCompletelyZeroSimple,
           "M has a proper nonzero ideal, so it is not 0-simple");
  }

  // Green's R- and L-classes of the nonzero part.
  auto right_set = [&](int x) {
    Bitset b(mn);
    b.set(x);
    for (int t = 0; t < mn; ++t) b.set(M.product(x, t));
    return b;
  };
  auto left_set = [&](int x) {
    Bitset b(mn);
    b.set(x);
    for (int t = 0; t < mn; ++t) b.set(M.product(t, x));
    return b;
  };
  auto classes_of = [&](auto key) {
    std::vector<std::vector<int>> classes;
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int x = 0; x < mn; ++x) {
      if (x == theta) continue;
      Bitset k = key(x);
      auto it = seen.find(k);
      if (it == seen.end()) {
        seen.emplace(std::move(k), static_cast<int>(classes.size()));
        classes.push_back({x});
      } else {
        classes[it->second].push_back(x);
      }
    }
    return classes;
  };
  std::vector<std::vector<int>> rclasses = classes_of(right_set);
  std::vector<std::vector<int>> lclasses = classes_of(left_set);

  int e = -1;
  for (int x = 0; x < mn; ++x)
    if (x != theta && M.product(x, x) == x) {
      e = x;
      break;
    }
  if (e == -1)
    fail(ErrorKind::NotCompletelyZeroSimple, "no nonzero idempotent in M");

  // Class 1 is e's class; the rest follow by least member.
  auto order_classes = [&](std::vector<std::vector<int>>& classes) {
    std::sort(classes.begin(), classes.end(),
              [&](const auto& a, const auto& b) {
                const bool ea = std::find(a.begin(), a.end(), e) != a.end();
                const bool eb = std::find(b.begin(), b.end(), e) != b.end();
                if (ea != eb) return ea;
                return a.front() < b.front();
              });
  };
  for (auto& c : rclasses) std::sort(c.begin(), c.end());
  for (auto& c : lclasses) std::sort(c.begin(), c.end());
  order_classes(rclasses);
  order_classes(lclasses);

  const int nr = static_cast<int>(rclasses.size());
  const int nl = static_cast<int>(lclasses.size());
  std::vector<int> rindex(mn, -1), lindex(mn, -1);
  for (int c = 0; c < nr; ++c)
    for (int x : rclasses[c]) rindex[x] = c;
  for (int c = 0; c < nl; ++c)
    for (int x : lclasses[c]) lindex[x] = c;

  // Maximal subgroup at e.
  std::vector<int> gmembers;
  for (int x = 0; x < mn; ++x)
    if (x != theta && rindex[x] == 0 && lindex[x] == 0) gmembers.push_back(x);
  Semigroup group = [&] {
    for (int a : gmembers)
      for (int b : gmembers) {
        const int p = M.product(a, b);
        if (rindex[p] != 0 || lindex[p] != 0)
          fail(ErrorKind::ReconstructionMismatch, "H-class of e is not closed");
      }
    Semigroup g = subsemigroup(M, gmembers);
    if (!is_group(g))
      fail(ErrorKind::ReconstructionMismatch, "H-class of e is not a group");
    return g;
  }();
  std::vector<int> gpos(mn, -1);
  for (size_t k = 0; k < gmembers.size(); ++k) gpos[gmembers[k]] = static_cast<int>(k);

  // Representatives: q_i in R_i ∩ L_1, mu_j in R_1 ∩ L_j, q_1 = mu_1 = e.
  auto pick_reps = [&](bool rows_side) {
    const int count = rows_side ? nr : nl;
    std::vector<int> reps(count, -1);
    reps[0] = e;
    for (int c = 1; c < count; ++c) {
      for (int x = 0; x < mn; ++x) {
        if (x == theta) continue;
        const bool here = rows_side ? (rindex[x] == c && lindex[x] == 0)
                                    : (rindex[x] == 0 && lindex[x] == c);
        if (here) {
          reps[c] = x;
          break;
        }
      }
      if (reps[c] == -1)
        fail(ErrorKind::NotCompletelyZeroSimple, "an H-class of M is empty");
    }
    return reps;
  };
  std::vector<int> q = pick_reps(true);    // per R-class
  std::vector<int> mu = pick_reps(false);  // per L-class

  // Coordinates and sandwich from the representatives; verified as we go.
  auto coordinate = [&](const std::vector<int>& qs, const std::vector<int>& mus) {
    std::vector<ReesTriple> coords(mn, ReesTriple{-1, 0, 0});
    for (int x = 0; x < mn; ++x) {
      if (x == theta) continue;
      const int i = rindex[x], j = lindex[x];
      int found = -1;
      for (int gm : gmembers) {
        if (M.product(M.product(qs[i], gm), mus[j]) == x) {
          if (found != -1)
            fail(ErrorKind::ReconstructionMismatch,
                 "coordinates not unique for " + M.label(x));
          found = gm;
        }
      }
      if (found == -1)
        fail(ErrorKind::ReconstructionMismatch,
             "no coordinates for " + M.label(x));
      coords[x] = {gpos[found], i + 1, j + 1};
    }
    std::vector<std::vector<int>> sandwich(nl, std::vector<int>(nr, -1));
    for (int j = 0; j < nl; ++j)
      for (int k = 0; k < nr; ++k) {
        const int p = M.product(mus[j], qs[k]);
        if (p == theta) continue;
        if (gpos[p] == -1)
          fail(ErrorKind::ReconstructionMismatch, "sandwich entry escapes the group");
        sandwich[j][k] = gpos[p];
      }
    return std::make_pair(std::move(coords), std::move(sandwich));
  };

  auto [coords, sandwich] = coordinate(q, mu);

  ReesSpec spec;
  spec.group = group;
  spec.rows = nr;
  spec.cols = nl;
  spec.sandwich = sandwich;
  spec.with_zero = true;

  // Normalise a square monomial sandwich to the identity: renumber R-classes
  // and scale the representatives.
  if (nr == nl && sandwich_is_monomial(spec) && !sandwich_is_identity(spec)) {
    const int eg = *group.identity();
    std::vector<int> ginv(group.size());
    for (int a = 0; a < group.size(); ++a)
      for (int b = 0; b < group.size(); ++b)
        if (group.product(a, b) == eg && group.product(b, a) == eg) ginv[a] = b;

    std::vector<int> sigma(nl);  // L-class j pairs with R-class sigma[j]
    for (int j = 0; j < nl; ++j)
      for (int k = 0; k < nr; ++k)
        if (spec.sandwich[j][k] != -1) sigma[j] = k;

    std::vector<int> q2(nr);
    std::vector<std::vector<int>> rclasses2(nr);
    for (int j = 0; j < nl; ++j) {
      const int c = spec.sandwich[j][sigma[j]];
      // New R-index j holds the old class sigma[j], scaled so p'_{jj} = 1.
      q2[j] = M.product(q[sigma[j]], gmembers[ginv[c]]);
      rclasses2[j] = rclasses[sigma[j]];
    }
    rclasses = std::move(rclasses2);
    for (int c = 0; c < nr; ++c)
      for (int x : rclasses[c]) rindex[x] = c;
    q = std::move(q2);

    auto [coords2, sandwich2] = coordinate(q, mu);
    coords = std::move(coords2);
    spec.sandwich = std::move(sandwich2);
    if (!sandwich_is_identity(spec))
      fail(ErrorKind::ReconstructionMismatch, "normalisation failed");
  }

  // Validate by reconstruction.
  const BuiltRees built = build_rees(spec);
  {
    std::vector<int> phi(built.s.size(), -1);  // built index -> M index
    std::vector<int> inverse(mn, -1);
    for (int b = 0; b < built.s.size(); ++b) {
      const ReesTriple& c = built.coords[b];
      int target = -1;
      if (b == built.zero) {
        target = theta;
      } else {
        for (int x = 0; x < mn; ++x)
          if (coords[x] == c) target = x;
      }
      if (target == -1 || inverse[target] != -1)
        fail(ErrorKind::ReconstructionMismatch, "coordinate map is not a bijection");
      phi[b] = target;
      inverse[target] = b;
    }
    for (int a = 0; a < built.s.size(); ++a)
      for (int b = 0; b < built.s.size(); ++b)
        if (phi[built.s.product(a, b)] != M.product(phi[a], phi[b]))
          fail(ErrorKind::ReconstructionMismatch,
               "rebuilt product table disagrees with the ideal");
  }

  ReesDecomposition dec;
  dec.spec = std::move(spec);
  dec.ideal = members;
  dec.zero = members[theta];
  dec.coords.assign(s.size(), ReesTriple{-1, 0, 0});
  dec.lookup_.assign(static_cast<size_t>(group.size()) * nr * nl, -1);
  for (int x = 0; x < mn; ++x) {
    if (x == theta) continue;
    dec.coords[members[x]] = coords[x];
    const ReesTriple& c = coords[x];
    dec.lookup_[(static_cast<size_t>(c.g) * nr + (c.i - 1)) * nl + (c.j - 1)] =
        members[x];
  }
  return dec;
}

Transformation identity_transformation(int n) {
  Transformation t;
  t.img.resize(n + 1);
  for (int p = 0; p <= n; ++p) t.img[p] = p;
  t.img[0] = 0;
  return t;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  assert(f.degree() == g.degree());
  Transformation out;
  out.img.resize(g.img.size());
  for (size_t p = 0; p < g.img.size(); ++p) out.img[p] = f.img[g.img[p]];
  return out;
}

GammaPsi gamma_psi(const Semigroup& s, const ReesDecomposition& dec) {
  if (!dec.inverse_form())
    fail(ErrorKind::BadParameter,
         "gamma/psi need an inverse Rees ideal (square identity sandwich)");
  const int n = dec.spec.rows;
  const int eg = *dec.spec.group.identity();

  GammaPsi gp;
  gp.n = n;
  gp.gamma.resize(s.size());
  gp.psi.resize(s.size());
  for (int x = 0; x < s.size(); ++x) {
    Transformation t;
    t.img.assign(n + 1, 0);
    std::vector<int> psi(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
      const int m1 = dec.element_of(eg, i, 1);
      const int p = s.product(x, m1);
      int gi = -1, ii = 0;
      if (p != dec.zero) {
        const ReesTriple c = dec.coords[p];
        if (c.g == -1)
          fail(ErrorKind::IllDefined, "product left the ideal");
        if (c.j != 1)
          fail(ErrorKind::IllDefined, "column is not preserved");
        gi = c.g;
        ii = c.i;
      }
      if (n >= 2) {
        // Cross-validate against a second column.
        const int m2 = dec.element_of(eg, i, 2);
        const int p2 = s.product(x, m2);
        if (p == dec.zero) {
          if (p2 != dec.zero)
            fail(ErrorKind::IllDefined, "columns disagree on the theta fibre");
        } else {
          const ReesTriple c2 = dec.coords[p2];
          if (!(c2 == ReesTriple{gi, ii, 2}))
            fail(ErrorKind::IllDefined, "columns disagree");
        }
      }
      t.img[i] = ii;
      psi[i] = gi;
    }
    gp.gamma[x] = std::move(t);
    gp.psi[x] = std::move(psi);
  }
  return gp;
}

void verify_gamma_psi(const Semigroup& s, const ReesDecomposition& dec,
                      const GammaPsi& gp) {
  const int n = gp.n;
  const Semigroup& group = dec.spec.group;
  auto check = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::IllDefined, what);
  };
  check(static_cast<int>(gp.gamma.size()) == s.size() &&
            static_cast<int>(gp.psi.size()) == s.size(),
        "gamma/psi tables sized to S");
  for (int x = 0; x < s.size(); ++x) {
    const Transformation& t = gp.gamma[x];
    check(t.degree() == n && t.img[0] == 0, "gamma fixes theta");
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const int v = t.img[i];
      check(v >= 0 && v <= n, "gamma in range");
      if (v != 0) {
        check(!seen[v], "gamma injective off the theta preimage");
        seen[v] = 1;
      }
      check((gp.psi[x][i] != -1) == (v != 0), "psi support equals gamma support");
      if (gp.psi[x][i] != -1)
        check(gp.psi[x][i] >= 0 && gp.psi[x][i] < group.size(), "psi in range");
    }
  }
  // Homomorphism and cocycle, over all pairs.
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const int ab = s.product(a, b);
      check(gp.gamma[ab] == compose(gp.gamma[a], gp.gamma[b]),
            "gamma is a homomorphism at " + s.label(a) + "," + s.label(b));
      for (int i = 1; i <= n; ++i) {
        const int ib = gp.gamma[b](i);
        const int lhs = gp.psi[ab][i];
        if (ib == 0) {
          check(lhs == -1, "cocycle support");
        } else if (gp.gamma[a](ib) == 0) {
          check(lhs == -1, "cocycle support");
        } else {
          check(lhs == group.product(gp.psi[a][ib], gp.psi[b][i]),
                "cocycle identity at " + s.label(a) + "," + s.label(b));
        }
      }
    }
  // Coordinate formulas on the ideal: (g;n1,n2) acts as (n2,n1,theta) or as
  // the fixed point (n1), and psi picks out g on column n2.
  for (int m : dec.ideal) {
    if (m == dec.zero) {
      check(gp.gamma[m].constant_theta(), "theta acts as theta");
      continue;
    }
    const ReesTriple c = dec.coords[m];
    for (int i = 1; i <= n; ++i) {
      const int expect = i == c.j ? c.i : 0;
      check(gp.gamma[m](i) == expect, "ideal element acts by its coordinates");
      check(gp.psi[m][i] == (i == c.j ? c.g : -1), "ideal psi picks the group part");
    }
  }
}

CycleForm cycle_decompose(const Transformation& t) {
  const int n = t.degree();
  if (t.img[0] != 0) fail(ErrorKind::BadParameter, "theta must be fixed");
  std::vector<int> pre(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const int v = t.img[p];
    if (v < 0 || v > n) fail(ErrorKind::IndexOutOfRange, "image out of range");
    if (v != 0) {
      if (pre[v] != 0)
        fail(ErrorKind::NotInjectiveOffTheta,
             "points " + std::to_string(pre[v]) + " and " + std::to_string(p) +
                 " share the image " + std::to_string(v));
      pre[v] = p;
    }
  }

  CycleForm form;
  form.degree = n;
  std::vector<char> visited(n + 1, 0);
  // Theta-tailed chains start at points with no preimage.
  for (int p = 1; p <= n; ++p) {
    if (pre[p] != 0 || visited[p]) continue;
    std::vector<int> chain;
    for (int q = p; q != 0; q = t.img[q]) {
      visited[q] = 1;
      chain.push_back(q);
    }
    if (chain.size() >= 2) form.cycles.push_back({std::move(chain), true});
    // A bare (i,theta) tail is suppressed.
  }
  // What remains lies on closed cycles.
  for (int p = 1; p <= n; ++p) {
    if (visited[p]) continue;
    std::vector<int> cycle;
    int q = p;
    do {
      visited[q] = 1;
      cycle.push_back(q);
      q = t.img[q];
    } while (q != p);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
    form.cycles.push_back({std::move(cycle), false});
  }
  std::sort(form.cycles.begin(), form.cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              return *std::min_element(a.points.begin(), a.points.end()) <
                     *std::min_element(b.points.begin(), b.points.end());
            });
  return form;
}

Transformation cycle_expand(const CycleForm& form) {
  Transformation t;
  t.img.assign(form.degree + 1, 0);
  std::vector<char> used(form.degree + 1, 0);
  for (const Cycle& c : form.cycles) {
    if (c.points.empty()) fail(ErrorKind::BadParameter, "empty cycle");
    for (int p : c.points) {
      if (p < 1 || p > form.degree) fail(ErrorKind::IndexOutOfRange, "cycle point");
      if (used[p]) fail(ErrorKind::BadParameter, "cycles are not disjoint");
      used[p] = 1;
    }
    for (size_t k = 0; k + 1 < c.points.size(); ++k)
      t.img[c.points[k]] = c.points[k + 1];
    t.img[c.points.back()] = c.theta_tailed ? 0 : c.points.front();
  }
  return t;
}

std::string CycleForm::str() const {
  if (constant_theta()) return "0";
  std::string out;
  for (const Cycle& c : cycles) {
    out += "(";
    for (size_t k = 0; k < c.points.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(c.points[k]);
    }
    if (c.theta_tailed) out += ",0";
    out += ")";
  }
  return out;
}

bool has_transposition(const CycleForm& f) {
  for (const Cycle& c : f.cycles)
    if (!c.theta_tailed && c.points.size() == 2) return true;
  return false;
}

std::optional<std::array<int, 3>> find_u4_pattern(const CycleForm& a,
                                                  const CycleForm& b) {
  for (const Cycle& ca : a.cycles) {
    if (!ca.theta_tailed || ca.points.size() != 3) continue;
    const int o2 = ca.points[0], o1 = ca.points[1], o3 = ca.points[2];
    bool tail = false, fixed = false;
    for (const Cycle& cb : b.cycles) {
      tail = tail || (cb.theta_tailed && cb.points == std::vector<int>{o2, o3});
      fixed = fixed || (!cb.theta_tailed && cb.points == std::vector<int>{o1});
    }
    if (tail && fixed) return std::array<int, 3>{o1, o2, o3};
  }
  return std::nullopt;
}

bool u4_pattern(const CycleForm& a, const CycleForm& b) {
  return find_u4_pattern(a, b).has_value();
}

std::optional<std::array<int, 4>> find_u5_pattern(const Transformation& g1,
                                                  const Transformation& g2) {
  const int n = g1.degree();
  for (int k1 = 1; k1 <= n; ++k1) {
    const int k2 = g1(k1);
    if (k2 == 0) continue;
    for (int k3 = 1; k3 <= n; ++k3) {
      if (k3 == k1) continue;
      const int k4 = g1(k3);
      if (k4 == 0) continue;
      if (g2(k1) != k4 || g2(k3) != k2) continue;
      const std::array<int, 4> ks{k1, k2, k3, k4};
      bool distinct = true;
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) distinct = distinct && ks[x] != ks[y];
      if (distinct) return ks;
    }
  }
  return std::nullopt;
}

bool u5_pattern(const Transformation& g1, const Transformation& g2) {
  return find_u5_pattern(g1, g2).has_value();
}

GluedUnion glued_union(const GlueSpec& gs) {
  validate_spec(gs.m_spec);
  if (gs.m_spec.rows != gs.m_spec.cols)
    fail(ErrorKind::BadParameter, "the glued ideal must be square");
  if (!gs.m_spec.with_zero)
    fail(ErrorKind::BadParameter, "the glued ideal must carry theta");
  if (!sandwich_is_identity(gs.m_spec))
    fail(ErrorKind::BadParameter, "the glued ideal must have the identity sandwich");
  if (!gs.t.zero())
    fail(ErrorKind::BadParameter, "T must have a zero element");
  const int n = gs.m_spec.rows;
  const int tn = gs.t.size();
  const int tzero = *gs.t.zero();
  const Semigroup& group = gs.m_spec.group;

  if (static_cast<int>(gs.gamma_t.size()) != tn ||
      static_cast<int>(gs.psi_t.size()) != tn)
    fail(ErrorKind::BadParameter, "gamma/psi tables must cover T");

  int constant_theta_count = 0;
  for (int a = 0; a < tn; ++a) {
    const Transformation& t = gs.gamma_t[a];
    if (t.degree() != n || t.img[0] != 0)
      fail(ErrorKind::BadParameter, "gamma values must act on {1..n} and fix theta");
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const int v = t.img[i];
      if (v < 0 || v > n) fail(ErrorKind::IndexOutOfRange, "gamma image out of range");
      if (v != 0) {
        if (seen[v])
          fail(ErrorKind::NotInjectiveOffTheta,
               "gamma(" + gs.t.label(a) + ") is not injective off theta");
        seen[v] = 1;
      }
    }
    if (t.constant_theta()) ++constant_theta_count;
    if (static_cast<int>(gs.psi_t[a].size()) != n + 1)
      fail(ErrorKind::BadParameter, "psi rows must have n+1 entries");
    for (int i = 1; i <= n; ++i) {
      const int g = gs.psi_t[a][i];
      if (g != -1 && (g < 0 || g >= group.size()))
        fail(ErrorKind::BadParameter, "psi entry out of range");
      if ((g != -1) != (t.img[i] != 0))
        fail(ErrorKind::SupportMismatch,
             "psi(" + gs.t.label(a) + ") support differs from gamma support");
    }
  }
  if (!gs.gamma_t[tzero].constant_theta())
    fail(ErrorKind::BadParameter, "gamma of the zero of T must be theta");
  if (constant_theta_count > 1)
    fail(ErrorKind::BadParameter,
         "at most one element of T may act as constant theta");

  for (int a = 0; a < tn; ++a)
    for (int b = 0; b < tn; ++b) {
      const int ab = gs.t.product(a, b);
      if (gs.gamma_t[ab] != compose(gs.gamma_t[a], gs.gamma_t[b]))
        fail(ErrorKind::GammaNotHomomorphism,
             "gamma(" + gs.t.label(a) + "*" + gs.t.label(b) +
                 ") is not the composite");
      for (int i = 1; i <= n; ++i) {
        const int ib = gs.gamma_t[b](i);
        const int lhs = gs.psi_t[ab][i];
        if (ib == 0 || gs.gamma_t[a](ib) == 0) continue;  // support checked above
        if (lhs != group.product(gs.psi_t[a][ib], gs.psi_t[b][i]))
          fail(ErrorKind::CocycleViolation,
               "psi(" + gs.t.label(a) + "*" + gs.t.label(b) +
                   ") breaks the cocycle identity");
      }
    }

  const BuiltRees built = build_rees(gs.m_spec);
  const int mc = built.s.size() - 1;  // nonzero part
  const int tc = tn - 1;
  const int total = mc + tc + 1;
  const int theta = total - 1;

  std::vector<int> t_to_s(tn, -1);
  std::vector<int> m_to_s(built.s.size(), -1);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (int x = 0; x < mc; ++x) {
    m_to_s[x] = x;
    labels.push_back(built.s.label(x));
  }
  {
    int next = mc;
    for (int a = 0; a < tn; ++a) {
      if (a == tzero) continue;
      t_to_s[a] = next++;
      labels.push_back(gs.t.label(a));
    }
  }
  t_to_s[tzero] = theta;
  m_to_s[built.zero] = theta;
  labels.push_back("0");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::BadParameter, "labels of T collide with the ideal labels");
  }

  std::vector<int> s_to_t(total, -1), s_to_m(total, -1);
  for (int a = 0; a < tn; ++a)
    if (a != tzero) s_to_t[t_to_s[a]] = a;
  for (int x = 0; x < built.s.size(); ++x)
    if (x != built.zero) s_to_m[m_to_s[x]] = x;

  std::vector<std::vector<int>> table(total, std::vector<int>(total, theta));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      if (a == theta || b == theta) continue;  // stays theta
      const int ma = s_to_m[a], mb = s_to_m[b];
      const int ta = s_to_t[a], tb = s_to_t[b];
      if (ma != -1 && mb != -1) {
        table[a][b] = m_to_s[built.s.product(ma, mb)];
      } else if (ta != -1 && tb != -1) {
        table[a][b] = t_to_s[gs.t.product(ta, tb)];
      } else if (ta != -1) {
        // t (g;i,j) = (psi(t)(i) g; gamma(t)(i), j)
        const ReesTriple& c = built.coords[mb];
        const int i2 = gs.gamma_t[ta](c.i);
        if (i2 != 0)
          table[a][b] = m_to_s[built.element_of(
              group.product(gs.psi_t[ta][c.i], c.g), i2, c.j)];
      } else {
        // (g;i,j) t = (g psi(t)(j'); i, j') for the unique j' with
        // gamma(t)(j') = j
        const ReesTriple& c = built.coords[ma];
        int jp = 0;
        for (int cand = 1; cand <= n; ++cand)
          if (gs.gamma_t[tb](cand) == c.j) jp = cand;
        if (jp != 0)
          table[a][b] = m_to_s[built.element_of(
              group.product(c.g, gs.psi_t[tb][jp]), c.i, jp)];
      }
    }

  GluedUnion out;
  try {
    out.s = validate_semigroup(std::move(labels), table);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonAssociative)
      fail(ErrorKind::NonAssociativeResult,
           "inconsistent gamma/psi data: " + std::string(e.what()));
    throw;
  }
  out.zero = theta;
  out.t_to_s = std::move(t_to_s);
  out.m_to_s = std::move(m_to_s);
  for (int x = 0; x < mc; ++x) out.ideal.push_back(x);
  out.ideal.push_back(theta);
  return out;
}

}  // namespace nilpotentia

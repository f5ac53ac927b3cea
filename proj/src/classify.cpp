#include "nilpotentia/classify.hpp"

#include <algorithm>

#include "nilpotentia/bitset.hpp"
#include "nilpotentia/error.hpp"

namespace nilpotentia {

const char* to_string(SemigroupType t) {
  switch (t) {
    case SemigroupType::Nilpotent: return "nilpotent";
    case SemigroupType::NotMinimal: return "not_minimal";
    case SemigroupType::Schmidt: return "schmidt";
    case SemigroupType::U1: return "U1";
    case SemigroupType::U2: return "U2";
    case SemigroupType::U3: return "U3";
    case SemigroupType::U4: return "U4";
    case SemigroupType::U5: return "U5";
  }
  return "?";
}

namespace {

[[noreturn]] void violated(const std::string& what) {
  fail(ErrorKind::TypeInvariantViolation, what);
}

void require(bool ok, const std::string& what) {
  if (!ok) violated(what);
}

std::vector<int> dedup_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Properties shared by U3/U4/U5: exactly one element acts as constant theta,
// and a zero of T, when present, is the zero of S.
void check_image_properties(const Semigroup& s, const ReesDecomposition& dec,
                            const GammaPsi& gp, const std::vector<int>& t_members) {
  int constant = 0;
  for (int x = 0; x < s.size(); ++x) constant += gp.gamma[x].constant_theta();
  require(constant == 1, "exactly one element must act as constant theta");
  const Semigroup t = subsemigroup(s, t_members);
  if (t.zero()) {
    const int tz = t_members[*t.zero()];
    require(tz == dec.zero, "the zero of T must be the zero of S");
  }
}

void check_u3(const Semigroup& s, const ReesDecomposition& dec,
              const GammaPsi& gp, int u, Classification& out) {
  require(dec.spec.rows == 2, "U3 needs a 2x2 inverse ideal");
  const Semigroup& group = dec.spec.group;

  const std::vector<int> tm = closure(s, {u}).members;
  {
    Bitset in_m(s.size());
    for (int m : dec.ideal) in_m.set(m);
    for (int x : tm)
      require(!in_m.test(x), "<u> must be disjoint from the ideal");
    require(tm.size() + dec.ideal.size() == static_cast<size_t>(s.size()),
            "S must be the disjoint union of M and <u>");
  }
  const Semigroup cyc = subsemigroup(s, tm);
  require(is_group(cyc), "<u> must be a group");
  int k = 0, pow = 1;
  while (pow < cyc.size()) {
    pow *= 2;
    ++k;
  }
  require(k >= 1 && pow == cyc.size(), "<u> must have order 2^k with k >= 1");

  const int e1 = tm[*cyc.identity()];
  for (int x = 0; x < s.size(); ++x)
    require(s.product(e1, x) == x && s.product(x, e1) == x,
            "u^(2^k) must be the identity of S");

  require(gp.gamma[u].img[1] == 2 && gp.gamma[u].img[2] == 1,
          "Gamma(u) must be the transposition (1,2)");
  require(gp.gamma[e1] == identity_transformation(2),
          "Gamma(1) must fix both points");

  const int p1 = gp.psi[u][1], p2 = gp.psi[u][2];
  require(p1 != -1 && p2 != -1, "Psi(u) must be defined on both points");
  require(static_cast<int>(closure(group, {p1, p2}).members.size()) == group.size(),
          "G must be generated by Psi(u)(1) and Psi(u)(2)");

  // (Psi(u)(1) Psi(u)(2))^(2^(k-1)) = 1.
  const int base = group.product(p1, p2);
  int acc = *group.identity();
  for (int c = 0; c < (1 << (k - 1)); ++c) acc = group.product(acc, base);
  require(acc == *group.identity(),
          "(Psi(u)(1) Psi(u)(2))^(2^(k-1)) must be the identity");

  check_image_properties(s, dec, gp, tm);

  U3Data data;
  data.u = u;
  data.k = k;
  data.psi = {p1, p2};
  data.group_generators = dedup_sorted({p1, p2});
  out.verdict = SemigroupType::U3;
  out.u3 = std::move(data);
}

void check_u4(const Semigroup& s, const ReesDecomposition& dec,
              const GammaPsi& gp, int x1, int x2, const std::array<int, 3>& os,
              Classification& out) {
  require(dec.spec.rows == 3, "U4 needs a 3x3 inverse ideal");
  const Semigroup& group = dec.spec.group;
  const auto [o1, o2, o3] = os;

  std::vector<int> relabel(4, 0);
  relabel[o1] = 1;
  relabel[o2] = 2;
  relabel[o3] = 3;
  auto relabeled = [&](const Transformation& t) {
    Transformation r;
    r.img.assign(4, 0);
    for (int p = 1; p <= 3; ++p) {
      const int v = t.img[p];
      r.img[relabel[p]] = v == 0 ? 0 : relabel[v];
    }
    return r;
  };

  Transformation expect1;  // (2,1,3,theta)
  expect1.img = {0, 3, 1, 0};
  Transformation expect2;  // (2,3,theta)(1)
  expect2.img = {0, 1, 3, 0};
  require(relabeled(gp.gamma[x1]) == expect1,
          "Gamma(x1) must be exactly (2,1,3,theta) after relabeling");
  require(relabeled(gp.gamma[x2]) == expect2,
          "Gamma(x2) must be exactly (2,3,theta)(1) after relabeling");

  const int x1x1 = s.product(x1, x1);
  const bool relations = s.product(x2, x1x1) == dec.zero &&
                         s.product(x1x1, x2) == dec.zero &&
                         s.product(x1x1, x1) == dec.zero &&
                         s.product(s.product(x2, x1), x2) == dec.zero;
  require(relations, "x2 x1^2 = x1^2 x2 = x1^3 = x2 x1 x2 = theta must hold");

  const std::vector<int> tm = closure(s, {x1, x2}).members;
  {
    Bitset covered(s.size());
    for (int m : dec.ideal) covered.set(m);
    for (int m : tm) covered.set(m);
    require(covered.count() == s.size(), "S must be M together with <x1,x2>");
  }

  std::vector<int> psis;
  for (int x : {x1, x2})
    for (int p : {o1, o2}) {
      require(gp.psi[x][p] != -1, "Psi value in the U4 generating set undefined");
      psis.push_back(gp.psi[x][p]);
    }
  require(static_cast<int>(closure(group, psis).members.size()) == group.size(),
          "G must be generated by the four listed Psi values");

  check_image_properties(s, dec, gp, tm);

  U4Data data;
  data.x1 = x1;
  data.x2 = x2;
  data.relabel = relabel;
  data.relations_checked = relations;
  data.group_generators = dedup_sorted(psis);
  out.verdict = SemigroupType::U4;
  out.u4 = std::move(data);
}

void check_u5(const Semigroup& s, const ReesDecomposition& dec,
              const GammaPsi& gp, int v1, int v2, const std::array<int, 4>& ks,
              const std::vector<int>& non_ideal, Classification& out) {
  const Semigroup& group = dec.spec.group;

  const std::vector<int> tm = closure(s, {v1, v2}).members;
  {
    Bitset covered(s.size());
    for (int m : dec.ideal) covered.set(m);
    for (int m : tm) covered.set(m);
    require(covered.count() == s.size(), "S must be M together with <v1,v2>");
  }

  // Neither the U3 nor the U4 pattern may occur over <v1,v2> u (S \ M).
  std::vector<int> domain = tm;
  domain.insert(domain.end(), non_ideal.begin(), non_ideal.end());
  domain = dedup_sorted(domain);
  std::vector<CycleForm> forms;
  forms.reserve(domain.size());
  for (int x : domain) forms.push_back(cycle_decompose(gp.gamma[x]));
  for (const CycleForm& f : forms)
    require(!has_transposition(f), "U5 excludes transpositions over <v1,v2> u (S\\M)");
  for (const CycleForm& a : forms)
    for (const CycleForm& b : forms)
      require(!u4_pattern(a, b), "U5 excludes the U4 pattern over <v1,v2> u (S\\M)");

  std::vector<int> psis;
  for (int v : {v1, v2})
    for (int p = 1; p <= gp.n; ++p)
      if (gp.psi[v][p] != -1) psis.push_back(gp.psi[v][p]);
  require(!psis.empty() &&
              static_cast<int>(closure(group, psis).members.size()) == group.size(),
          "G must be generated by the nonzero Psi values of v1 and v2");

  check_image_properties(s, dec, gp, tm);

  U5Data data;
  data.v1 = v1;
  data.v2 = v2;
  data.ks = ks;
  data.group_generators = dedup_sorted(psis);
  out.verdict = SemigroupType::U5;
  out.u5 = std::move(data);
}

// Orbit analysis of a minimal non-nilpotent S against a fixed inverse ideal.
void classify_with_ideal(const Semigroup& s, ReesDecomposition dec,
                         Classification& out) {
  GammaPsi gp = gamma_psi(s, dec);
  verify_gamma_psi(s, dec, gp);

  Bitset in_m(s.size());
  for (int m : dec.ideal) in_m.set(m);
  std::vector<int> non_ideal;
  for (int x = 0; x < s.size(); ++x)
    if (!in_m.test(x)) non_ideal.push_back(x);

  const std::vector<int> hull = closure(s, non_ideal).members;  // <S \ M>
  std::vector<CycleForm> hull_forms;
  hull_forms.reserve(hull.size());
  for (int x : hull) hull_forms.push_back(cycle_decompose(gp.gamma[x]));

  out.ideal = dec.ideal;

  // U3: a transposition anywhere in Gamma(<S \ M>).
  for (size_t c = 0; c < hull.size(); ++c) {
    if (!has_transposition(hull_forms[c])) continue;
    require(!in_m.test(hull[c]), "a transposition can only come from S \\ M");
    check_u3(s, dec, gp, hull[c], out);
    out.dec = std::move(dec);
    out.gp = std::move(gp);
    return;
  }
  // U4: the chain/fixed-point pattern over <S \ M>.
  for (size_t a = 0; a < hull.size(); ++a)
    for (size_t b = 0; b < hull.size(); ++b) {
      const auto os = find_u4_pattern(hull_forms[a], hull_forms[b]);
      if (!os) continue;
      check_u4(s, dec, gp, hull[a], hull[b], *os, out);
      out.dec = std::move(dec);
      out.gp = std::move(gp);
      return;
    }
  // U5: the crossed 4-point pattern over S \ M.
  for (int v1 : non_ideal)
    for (int v2 : non_ideal) {
      const auto ks = find_u5_pattern(gp.gamma[v1], gp.gamma[v2]);
      if (!ks) continue;
      check_u5(s, dec, gp, v1, v2, *ks, non_ideal, out);
      out.dec = std::move(dec);
      out.gp = std::move(gp);
      return;
    }
  violated("minimal non-nilpotent with an inverse ideal but no orbit pattern");
}

}  // namespace

Classification classify(const Semigroup& s, const ClassifyOptions& opts) {
  Classification out;

  const NilpotencyResult nn = decide_nilpotent(s);
  if (nn.nilpotent) {
    out.verdict = SemigroupType::Nilpotent;
    out.nilpotency_class = nn.cls;
    return out;
  }
  out.witness = nn.witness;

  const MnnVerdict mv = is_minimal_non_nilpotent(s, opts.mode, opts.threads);
  if (!mv.minimal) {
    out.verdict = SemigroupType::NotMinimal;
    out.offenders = mv.offenders;
    return out;
  }

  if (is_group(s)) {
    SchmidtReport rep = schmidt_report(s);
    require(rep.is_schmidt, "minimal non-nilpotent group failed the Schmidt report");
    out.verdict = SemigroupType::Schmidt;
    out.schmidt = rep;
    return out;
  }

  if (s.size() == 2) {
    const bool right_zero = s.product(0, 0) == 0 && s.product(0, 1) == 1 &&
                            s.product(1, 0) == 0 && s.product(1, 1) == 1;
    const bool left_zero = s.product(0, 0) == 0 && s.product(0, 1) == 0 &&
                           s.product(1, 0) == 1 && s.product(1, 1) == 1;
    require(right_zero || left_zero,
            "a 2-element minimal non-nilpotent semigroup must be a band of zeros");
    out.verdict = right_zero ? SemigroupType::U1 : SemigroupType::U2;
    return out;
  }

  // Scan proper ideals, smallest first, for an inverse Rees decomposition
  // with a nilpotent maximal subgroup.
  std::vector<ReesDecomposition> qualifying;
  for (const auto& members : ideals(s)) {
    if (static_cast<int>(members.size()) >= s.size()) continue;
    try {
      ReesDecomposition dec = rees_decompose(s, members);
      if (!dec.inverse_form() || dec.spec.rows < 2) continue;
      if (!group_nilpotency_class(dec.spec.group).has_value()) continue;
      qualifying.push_back(std::move(dec));
      if (!opts.verify_all_ideals) break;
    } catch (const Error&) {
      // Not completely 0-simple (or not coordinatisable); skip.
    }
  }
  if (qualifying.empty())
    fail(ErrorKind::NoInverseIdeal,
         "no proper ideal is an inverse Rees semigroup over a nilpotent group");

  classify_with_ideal(s, std::move(qualifying.front()), out);
  for (size_t k = 1; k < qualifying.size(); ++k) {
    Classification other;
    other.witness = out.witness;
    classify_with_ideal(s, std::move(qualifying[k]), other);
    require(other.verdict == out.verdict,
            "classification must not depend on the choice of inverse ideal");
  }
  return out;
}

std::pair<Semigroup, std::vector<int>> minimal_image(const Semigroup& s,
                                                     const ReesDecomposition& dec) {
  const GammaPsi gp = gamma_psi(s, dec);
  std::vector<Transformation> distinct;
  std::vector<int> hom(s.size(), -1);
  for (int x = 0; x < s.size(); ++x) {
    const Transformation& t = gp.gamma[x];
    int found = -1;
    for (size_t d = 0; d < distinct.size(); ++d)
      if (distinct[d] == t) {
        found = static_cast<int>(d);
        break;
      }
    if (found == -1) {
      found = static_cast<int>(distinct.size());
      distinct.push_back(t);
    }
    hom[x] = found;
  }
  const int m = static_cast<int>(distinct.size());
  std::vector<std::string> labels(m);
  for (int d = 0; d < m; ++d) labels[d] = cycle_decompose(distinct[d]).str();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Transformation prod = compose(distinct[a], distinct[b]);
      int idx = -1;
      for (int d = 0; d < m; ++d)
        if (distinct[d] == prod) idx = d;
      if (idx == -1)
        fail(ErrorKind::IllDefined, "Gamma(S) is not closed under composition");
      table[a][b] = idx;
    }
  return {validate_semigroup(std::move(labels), table), std::move(hom)};
}

}  // namespace nilpotentia

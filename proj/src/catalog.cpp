#include "nilpotentia/catalog.hpp"

#include <algorithm>

#include "nilpotentia/error.hpp"
#include "nilpotentia/rees.hpp"

namespace nilpotentia {

namespace {

Semigroup trivial_group() {
  return validate_semigroup({"e"}, {{0}});
}

Semigroup cyclic2_group() {
  return validate_semigroup({"1", "g"}, {{0, 1}, {1, 0}});
}

ReesSpec identity_spec(Semigroup group, int n) {
  ReesSpec spec;
  const int e = *group.identity();
  spec.group = std::move(group);
  spec.rows = spec.cols = n;
  spec.sandwich.assign(n, std::vector<int>(n, -1));
  for (int d = 0; d < n; ++d) spec.sandwich[d][d] = e;
  spec.with_zero = true;
  return spec;
}

std::vector<int> id_psi(const Transformation& t, int identity_index) {
  std::vector<int> psi(t.img.size(), -1);
  for (size_t i = 1; i < t.img.size(); ++i)
    if (t.img[i] != 0) psi[i] = identity_index;
  return psi;
}

void check_relation(bool ok, const std::string& name, const std::string& what) {
  if (!ok)
    fail(ErrorKind::BadParameter, "catalog table for " + name +
                                      " violates the relation " + what);
}

std::vector<int> members_by_label(const Semigroup& s,
                                  const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) {
    const int idx = s.index_of(l);
    if (idx == -1) fail(ErrorKind::BadParameter, "missing catalog label " + l);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CatalogEntry make_u1() {
  CatalogEntry e;
  e.name = "u1";
  e.semigroup = validate_semigroup({"e", "f"}, {{0, 1}, {0, 1}});  // xy = y
  e.expected_nilpotent = false;
  e.expected_minimal = ExpectedFlag::Yes;
  e.expected_type = SemigroupType::U1;
  e.provenance = "two-element right-zero band";
  return e;
}

CatalogEntry make_u2() {
  CatalogEntry e;
  e.name = "u2";
  e.semigroup = validate_semigroup({"e'", "f'"}, {{0, 0}, {1, 1}});  // xy = x
  e.expected_nilpotent = false;
  e.expected_minimal = ExpectedFlag::Yes;
  e.expected_type = SemigroupType::U2;
  e.provenance = "two-element left-zero band";
  return e;
}

// M^0(G,2,2;I_2) glued with the order-2 cyclic group <u | u^2 = 1> acting by
// the transposition (1,2); psi(u) is (p1, p2) in G.
CatalogEntry make_u3_family(const std::string& name, Semigroup group, int p1, int p2) {
  GlueSpec gs;
  gs.m_spec = identity_spec(group, 2);
  gs.t = validate_semigroup({"u", "1", "0"},
                            {{1, 0, 2}, {0, 1, 2}, {2, 2, 2}});
  const int ge = *gs.m_spec.group.identity();
  Transformation swap12;
  swap12.img = {0, 2, 1};
  Transformation idt = identity_transformation(2);
  Transformation zero;
  zero.img = {0, 0, 0};
  gs.gamma_t = {swap12, idt, zero};
  gs.psi_t = {{-1, p1, p2}, {-1, ge, ge}, {-1, -1, -1}};
  // The cocycle forces psi(1) = psi(u)(Gamma(u)(i)) psi(u)(i).
  gs.psi_t[1][1] = gs.m_spec.group.product(p2, p1);
  gs.psi_t[1][2] = gs.m_spec.group.product(p1, p2);

  GluedUnion glue = glued_union(gs);
  CatalogEntry e;
  e.name = name;
  e.semigroup = std::move(glue.s);
  e.ideal = std::move(glue.ideal);
  e.expected_nilpotent = false;
  return e;
}

CatalogEntry make_f7() {
  CatalogEntry e = make_u3_family("f7", trivial_group(), 0, 0);
  e.expected_minimal = ExpectedFlag::ToBeDetermined;
  e.expected_type = SemigroupType::U3;
  e.provenance =
      "2x2 inverse ideal over the trivial group glued with a cyclic group of order 2";
  return e;
}

CatalogEntry make_u3_nonminimal() {
  // G = {1,g} cyclic of order 2, psi(u)(1) = psi(u)(2) = g.
  CatalogEntry e = make_u3_family("u3_nonminimal", cyclic2_group(), 1, 1);
  e.expected_minimal = ExpectedFlag::No;
  e.expected_type = SemigroupType::NotMinimal;
  e.provenance =
      "2x2 inverse ideal over C2 glued with a cyclic group of order 2; "
      "contains a copy of f7";
  e.expected_offender = members_by_label(
      e.semigroup, {"(1;1,1)", "(1;2,2)", "(g;1,2)", "(g;2,1)", "u", "1", "0"});
  return e;
}

CatalogEntry make_u4_nonminimal() {
  // T = <w,v> with v^2 = v^3, wv^2 = wv, vw = v^2w, w^2 = wvw = wv^2w and
  // vw^2 = w^2v = w^3 = vwv = 0, frozen over the normal forms
  // {w, v, v^2, wv, vw, w^2, 0}.
  const std::vector<std::string> tl{"w", "v", "v^2", "wv", "vw", "w^2", "0"};
  const int W = 0, V = 1, V2 = 2, WV = 3, VW = 4, W2 = 5, Z = 6;
  const std::vector<std::vector<int>> tt{
      {W2, WV, WV, Z, W2, Z, Z},  // w *
      {VW, V2, V2, Z, VW, Z, Z},  // v *
      {VW, V2, V2, Z, VW, Z, Z},  // v^2 *
      {W2, WV, WV, Z, W2, Z, Z},  // wv *
      {Z, Z, Z, Z, Z, Z, Z},      // vw *
      {Z, Z, Z, Z, Z, Z, Z},      // w^2 *
      {Z, Z, Z, Z, Z, Z, Z},      // 0 *
  };
  Semigroup t = validate_semigroup(tl, tt);
  auto mul = [&](std::vector<int> word) {
    int acc = word[0];
    for (size_t k = 1; k < word.size(); ++k) acc = t.product(acc, word[k]);
    return acc;
  };
  check_relation(mul({V, V}) == mul({V, V, V}), "u4_nonminimal", "v^2 = v^3");
  check_relation(mul({W, V, V}) == mul({W, V}), "u4_nonminimal", "wv^2 = wv");
  check_relation(mul({V, W}) == mul({V, V, W}), "u4_nonminimal", "vw = v^2w");
  check_relation(mul({W, W}) == mul({W, V, W}), "u4_nonminimal", "w^2 = wvw");
  check_relation(mul({W, W}) == mul({W, V, V, W}), "u4_nonminimal", "w^2 = wv^2w");
  check_relation(mul({V, W, W}) == Z, "u4_nonminimal", "vw^2 = 0");
  check_relation(mul({W, W, V}) == Z, "u4_nonminimal", "w^2v = 0");
  check_relation(mul({W, W, W}) == Z, "u4_nonminimal", "w^3 = 0");
  check_relation(mul({V, W, V}) == Z, "u4_nonminimal", "vwv = 0");

  GlueSpec gs;
  gs.m_spec = identity_spec(cyclic2_group(), 3);
  gs.t = std::move(t);
  Transformation gw;  // (2,1,3,theta)
  gw.img = {0, 3, 1, 0};
  Transformation gv;  // (2,3,theta)(1)
  gv.img = {0, 1, 3, 0};
  const Transformation gv2 = compose(gv, gv);
  const Transformation gwv = compose(gw, gv);
  const Transformation gvw = compose(gv, gw);
  const Transformation gw2 = compose(gw, gw);
  Transformation zero;
  zero.img = {0, 0, 0, 0};
  gs.gamma_t = {gw, gv, gv2, gwv, gvw, gw2, zero};
  const int ge = *gs.m_spec.group.identity();
  gs.psi_t.clear();
  for (const auto& tr : gs.gamma_t) gs.psi_t.push_back(id_psi(tr, ge));

  GluedUnion glue = glued_union(gs);
  CatalogEntry e;
  e.name = "u4_nonminimal";
  e.semigroup = std::move(glue.s);
  e.ideal = std::move(glue.ideal);
  e.expected_nilpotent = false;
  e.expected_minimal = ExpectedFlag::No;
  e.expected_type = SemigroupType::NotMinimal;
  e.provenance =
      "3x3 inverse ideal over C2 glued with a 2-generated nilpotent T; "
      "shrinking C2 to the trivial group leaves a proper non-nilpotent part";
  std::vector<std::string> offender{"w", "v", "v^2", "wv", "vw", "w^2", "0"};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      offender.push_back("(1;" + std::to_string(i) + "," + std::to_string(j) + ")");
  e.expected_offender = members_by_label(e.semigroup, offender);
  return e;
}

CatalogEntry make_u5_c2() {
  GlueSpec gs;
  gs.m_spec = identity_spec(cyclic2_group(), 4);
  gs.t = validate_semigroup({"w", "v", "0"},
                            {{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
  Transformation gw;  // (4,1,theta)(3,2,theta)
  gw.img = {0, 0, 0, 2, 1};
  Transformation gv;  // (4,2,theta)(3,1,theta)
  gv.img = {0, 0, 0, 1, 2};
  Transformation zero;
  zero.img = {0, 0, 0, 0, 0};
  gs.gamma_t = {gw, gv, zero};
  gs.psi_t = {{-1, -1, -1, 0, 0},   // psi(w)(3) = psi(w)(4) = 1
              {-1, -1, -1, 1, 0},   // psi(v)(3) = g, psi(v)(4) = 1
              {-1, -1, -1, -1, -1}};

  GluedUnion glue = glued_union(gs);
  CatalogEntry e;
  e.name = "u5_c2";
  e.semigroup = std::move(glue.s);
  e.ideal = std::move(glue.ideal);
  e.expected_nilpotent = false;
  e.expected_minimal = ExpectedFlag::Yes;
  e.expected_type = SemigroupType::U5;
  e.provenance =
      "4x4 inverse ideal over C2 glued with the three-element null semigroup "
      "{w, v, 0}";
  return e;
}

CatalogEntry make_y(int n) {
  if (n < 5) fail(ErrorKind::BadParameter, "y(n) needs n >= 5");
  // T = <w, v> over the normal forms {w, v, ..., v^(n-3), wv, ..., wv^(n-4)}.
  const int vmax = n - 3, wvmax = n - 4;
  const int count = 1 + vmax + wvmax + 1;
  const int Z = count - 1;
  auto videx = [&](int j) { return j; };              // v^j, 1 <= j <= vmax
  auto wvidx = [&](int p) { return vmax + p; };       // w v^p, 1 <= p <= wvmax
  std::vector<std::string> tl(count);
  tl[0] = "w";
  tl[Z] = "0";
  for (int j = 1; j <= vmax; ++j)
    tl[videx(j)] = j == 1 ? "v" : "v^" + std::to_string(j);
  for (int p = 1; p <= wvmax; ++p)
    tl[wvidx(p)] = p == 1 ? "wv" : "wv^" + std::to_string(p);

  std::vector<std::vector<int>> tt(count, std::vector<int>(count, Z));
  // w * v^j
  for (int j = 1; j <= vmax; ++j)
    tt[0][videx(j)] = j <= wvmax ? wvidx(j) : Z;
  // v^i * v^j
  for (int i = 1; i <= vmax; ++i)
    for (int j = 1; j <= vmax; ++j)
      tt[videx(i)][videx(j)] = i + j <= vmax ? videx(i + j) : Z;
  // wv^p * v^j
  for (int p = 1; p <= wvmax; ++p)
    for (int j = 1; j <= vmax; ++j)
      tt[wvidx(p)][videx(j)] = p + j <= wvmax ? wvidx(p + j) : Z;
  Semigroup t = validate_semigroup(tl, tt);

  const std::string yname = "y" + std::to_string(n);
  // v^p w^q = w^k = v^l = 0 (p,q >= 1, k >= 2, l >= n-2); w^q v^p = 0 for
  // q >= 2; and a w v^p = 0 for every a in T.
  for (int p = 1; p <= vmax; ++p)
    check_relation(t.product(videx(p), 0) == Z, yname, "v^p w = 0");
  check_relation(t.product(0, 0) == Z, yname, "w^2 = 0");
  for (int a = 0; a < count; ++a)
    for (int p = 1; p <= wvmax; ++p)
      check_relation(t.product(a, wvidx(p)) == Z, yname, "a (w v^p) = 0");

  GlueSpec gs;
  gs.m_spec = identity_spec(trivial_group(), n);
  Transformation gw;  // (2,3,theta)(4,1,theta)
  gw.img.assign(n + 1, 0);
  gw.img[2] = 3;
  gw.img[4] = 1;
  Transformation gv;  // (2,1,theta)(n,n-1,...,4,3,theta)
  gv.img.assign(n + 1, 0);
  gv.img[2] = 1;
  for (int i = 4; i <= n; ++i) gv.img[i] = i - 1;
  gs.t = std::move(t);
  gs.gamma_t.resize(count);
  gs.gamma_t[0] = gw;
  gs.gamma_t[videx(1)] = gv;
  for (int j = 2; j <= vmax; ++j)
    gs.gamma_t[videx(j)] = compose(gs.gamma_t[videx(j - 1)], gv);
  for (int p = 1; p <= wvmax; ++p)
    gs.gamma_t[wvidx(p)] = compose(gw, gs.gamma_t[videx(p)]);
  Transformation zero;
  zero.img.assign(n + 1, 0);
  gs.gamma_t[Z] = zero;
  gs.psi_t.clear();
  for (const auto& tr : gs.gamma_t) gs.psi_t.push_back(id_psi(tr, 0));

  GluedUnion glue = glued_union(gs);
  CatalogEntry e;
  e.name = yname;
  e.semigroup = std::move(glue.s);
  e.ideal = std::move(glue.ideal);
  e.expected_nilpotent = false;
  // Not minimal: the rows {1..4} part together with T is a proper
  // non-nilpotent subsemigroup (no element acts onto row n, so the witness
  // generators never leave rows {1..4}).
  e.expected_minimal = ExpectedFlag::No;
  e.expected_type = SemigroupType::NotMinimal;
  e.provenance = "n x n inverse ideal over the trivial group glued with the "
                 "2-generated nilpotent T of size 2(n-3)";
  {
    std::vector<std::string> offender{"0"};
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= n; ++j)
        offender.push_back("(e;" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int k = 0; k < count; ++k)
      if (k != Z) offender.push_back(tl[k]);
    e.expected_offender = members_by_label(e.semigroup, offender);
  }
  return e;
}

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "u1") return make_u1();
  if (name == "u2") return make_u2();
  if (name == "f7") return make_f7();
  if (name == "u3_nonminimal") return make_u3_nonminimal();
  if (name == "u4_nonminimal") return make_u4_nonminimal();
  if (name == "u5_c2") return make_u5_c2();
  if (name.size() > 1 && name[0] == 'y') {
    int n = 0;
    for (size_t k = 1; k < name.size(); ++k) {
      if (name[k] < '0' || name[k] > '9')
        fail(ErrorKind::BadParameter, "unknown catalog name " + name);
      n = n * 10 + (name[k] - '0');
    }
    return make_y(n);
  }
  fail(ErrorKind::BadParameter, "unknown catalog name " + name);
}

std::vector<std::string> catalog_names() {
  return {"u1", "u2", "f7", "u3_nonminimal", "u4_nonminimal", "u5_c2",
          "y5", "y6", "y7"};
}

}  // namespace nilpotentia

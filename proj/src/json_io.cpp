#include "nilpotentia/json_io.hpp"

#include <sstream>

#include "nilpotentia/error.hpp"

namespace nilpotentia {

namespace {

std::vector<std::string> labels_of(const Semigroup& s, const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(s.label(i));
  return out;
}

int index_of_label(const Semigroup& s, const std::string& label,
                   const std::string& what) {
  const int idx = s.index_of(label);
  if (idx == -1) fail(ErrorKind::ParseError, what + ": unknown element '" + label + "'");
  return idx;
}

}  // namespace

json semigroup_to_json(const Semigroup& s) {
  json rows = json::array();
  for (int i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(s.product(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"elements", s.labels()}, {"table", std::move(rows)}};
}

Semigroup semigroup_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "semigroup JSON must be an object");
  if (j.contains("semigroup")) return semigroup_from_json(j.at("semigroup"));
  if (!j.contains("elements") || !j.contains("table"))
    fail(ErrorKind::ParseError, "semigroup JSON needs 'elements' and 'table'");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
  try {
    labels = j.at("elements").get<std::vector<std::string>>();
    table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("semigroup JSON: ") + e.what());
  }
  return validate_semigroup(std::move(labels), table);
}

Semigroup parse_semigroup(const std::string& content) {
  size_t k = content.find_first_not_of(" \t\r\n");
  if (k == std::string::npos) fail(ErrorKind::ParseError, "empty input");
  if (content[k] == '{') {
    json j;
    try {
      j = json::parse(content);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return semigroup_from_json(j);
  }
  std::istringstream in(content);
  int n = 0;
  if (!(in >> n) || n < 1) fail(ErrorKind::ParseError, "expected the order first");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j]))
        fail(ErrorKind::ParseError, "expected " + std::to_string(n * n) + " table entries");
  return validate_semigroup(default_labels(n), table);
}

json witness_to_json(const Semigroup& s, const Witness& w) {
  json ws = json::array();
  for (int c : w.ws) {
    if (s.identity_adjoined() && c == s.size()) {
      if (s.index_of("1") != -1)
        fail(ErrorKind::BadParameter,
             "label '1' is taken; the adjoined identity cannot be serialised");
      ws.push_back("1");
    } else {
      ws.push_back(s.label(c));
    }
  }
  return json{{"x", s.label(w.x)}, {"y", s.label(w.y)}, {"ws", std::move(ws)}};
}

Witness witness_from_json(const Semigroup& s, const json& j) {
  Witness w;
  try {
    w.x = index_of_label(s, j.at("x").get<std::string>(), "witness x");
    w.y = index_of_label(s, j.at("y").get<std::string>(), "witness y");
    for (const auto& entry : j.at("ws")) {
      const std::string label = entry.get<std::string>();
      if (s.identity_adjoined() && label == "1" && s.index_of("1") == -1) {
        w.ws.push_back(s.size());
      } else {
        w.ws.push_back(index_of_label(s, label, "witness ws"));
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("witness JSON: ") + e.what());
  }
  return w;
}

json rees_spec_to_json(const ReesSpec& spec) {
  if (spec.group.index_of("0") != -1)
    fail(ErrorKind::BadParameter,
         "group label '0' collides with the reserved theta symbol");
  json sandwich = json::array();
  for (int j = 1; j <= spec.cols; ++j) {
    json row = json::array();
    for (int k = 1; k <= spec.rows; ++k) {
      const int v = spec.entry(j, k);
      row.push_back(v == -1 ? "0" : spec.group.label(v));
    }
    sandwich.push_back(std::move(row));
  }
  return json{{"group", semigroup_to_json(spec.group)},
              {"rows", spec.rows},
              {"cols", spec.cols},
              {"sandwich", std::move(sandwich)},
              {"with_zero", spec.with_zero}};
}

ReesSpec rees_spec_from_json(const json& j) {
  ReesSpec spec;
  try {
    spec.group = semigroup_from_json(j.at("group"));
    spec.rows = j.at("rows").get<int>();
    spec.cols = j.at("cols").get<int>();
    spec.with_zero = j.value("with_zero", true);
    for (const auto& row : j.at("sandwich")) {
      std::vector<int> entries;
      for (const auto& cell : row) {
        const std::string label = cell.is_string() ? cell.get<std::string>() : cell.dump();
        entries.push_back(label == "0" ? -1
                                       : index_of_label(spec.group, label, "sandwich"));
      }
      spec.sandwich.push_back(std::move(entries));
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("rees spec JSON: ") + e.what());
  }
  return spec;
}

json glue_spec_to_json(const GlueSpec& gs) {
  const int n = gs.m_spec.rows;
  json gamma = json::object();
  json psi = json::object();
  for (int a = 0; a < gs.t.size(); ++a) {
    json grow = json::array();
    json prow = json::array();
    for (int i = 1; i <= n; ++i) {
      const int v = gs.gamma_t[a].img[i];
      if (v == 0)
        grow.push_back("0");
      else
        grow.push_back(v);
      const int g = gs.psi_t[a][i];
      prow.push_back(g == -1 ? "0" : gs.m_spec.group.label(g));
    }
    gamma[gs.t.label(a)] = std::move(grow);
    psi[gs.t.label(a)] = std::move(prow);
  }
  return json{{"m_spec", rees_spec_to_json(gs.m_spec)},
              {"t", semigroup_to_json(gs.t)},
              {"gamma", std::move(gamma)},
              {"psi", std::move(psi)}};
}

GlueSpec glue_spec_from_json(const json& j) {
  GlueSpec gs;
  try {
    gs.m_spec = rees_spec_from_json(j.at("m_spec"));
    gs.t = semigroup_from_json(j.at("t"));
    const int n = gs.m_spec.rows;
    gs.gamma_t.resize(gs.t.size());
    gs.psi_t.resize(gs.t.size());
    for (int a = 0; a < gs.t.size(); ++a) {
      const std::string& label = gs.t.label(a);
      if (!j.at("gamma").contains(label) || !j.at("psi").contains(label))
        fail(ErrorKind::ParseError, "gamma/psi missing for '" + label + "'");
      Transformation t;
      t.img.assign(n + 1, 0);
      const json& grow = j.at("gamma").at(label);
      if (static_cast<int>(grow.size()) != n)
        fail(ErrorKind::ParseError, "gamma row for '" + label + "' must have n entries");
      for (int i = 1; i <= n; ++i) {
        const json& cell = grow[i - 1];
        if (cell.is_string()) {
          if (cell.get<std::string>() != "0")
            fail(ErrorKind::ParseError, "gamma entries are points or \"0\"");
          t.img[i] = 0;
        } else {
          t.img[i] = cell.get<int>();
        }
      }
      gs.gamma_t[a] = std::move(t);
      std::vector<int> prow(n + 1, -1);
      const json& pj = j.at("psi").at(label);
      if (static_cast<int>(pj.size()) != n)
        fail(ErrorKind::ParseError, "psi row for '" + label + "' must have n entries");
      for (int i = 1; i <= n; ++i) {
        const std::string cell = pj[i - 1].get<std::string>();
        prow[i] = cell == "0" ? -1 : index_of_label(gs.m_spec.group, cell, "psi");
      }
      gs.psi_t[a] = std::move(prow);
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("glue spec JSON: ") + e.what());
  }
  return gs;
}

json mnn_to_json(const Semigroup& s, const MnnVerdict& v) {
  json offenders = json::array();
  for (const auto& o : v.offenders) {
    json entry{{"members", labels_of(s, o.members)}};
    if (o.kind == MnnOffender::Kind::Subsemigroup) {
      entry["kind"] = "subsemigroup";
      entry["generators"] = labels_of(s, o.generators);
    } else {
      entry["kind"] = "ideal";
    }
    offenders.push_back(std::move(entry));
  }
  json out{{"minimal", v.minimal},
           {"mode", v.mode == MnnMode::FourGenerator ? "4gen" : "exhaustive"},
           {"offenders", std::move(offenders)}};
  if (v.witness) out["witness"] = witness_to_json(s, *v.witness);
  return out;
}

json schmidt_to_json(const SchmidtReport& r) {
  json out{{"is_group", r.is_group},
           {"nonnilpotent", r.nonnilpotent},
           {"normal_sylow_p", r.normal_sylow_p},
           {"cyclic_sylow_q", r.cyclic_sylow_q},
           {"frattini_central", r.frattini_central},
           {"two_generated", r.two_generated},
           {"all_proper_subgroups_nilpotent", r.all_proper_subgroups_nilpotent},
           {"is_schmidt", r.is_schmidt}};
  if (r.order_pq)
    out["order_pq"] = json{{"p", (*r.order_pq)[0]},
                           {"a", (*r.order_pq)[1]},
                           {"q", (*r.order_pq)[2]},
                           {"b", (*r.order_pq)[3]}};
  else
    out["order_pq"] = nullptr;
  return out;
}

json nilpotency_to_json(const Semigroup& s, const NilpotencyResult& r) {
  if (r.nilpotent) return json{{"verdict", "nilpotent"}, {"class", r.cls}};
  return json{{"verdict", "non_nilpotent"}, {"witness", witness_to_json(s, *r.witness)}};
}

json classification_to_json(const Semigroup& s, const Classification& c) {
  json out{{"verdict", to_string(c.verdict)}};
  if (c.nilpotency_class) out["class"] = *c.nilpotency_class;
  if (c.witness) out["witness"] = witness_to_json(s, *c.witness);
  if (c.verdict == SemigroupType::NotMinimal) {
    json offenders = json::array();
    for (const auto& o : c.offenders) {
      json entry{{"members", labels_of(s, o.members)}};
      if (o.kind == MnnOffender::Kind::Subsemigroup) {
        entry["kind"] = "subsemigroup";
        entry["generators"] = labels_of(s, o.generators);
      } else {
        entry["kind"] = "ideal";
      }
      offenders.push_back(std::move(entry));
    }
    out["offenders"] = std::move(offenders);
  }
  if (c.schmidt) out["schmidt"] = schmidt_to_json(*c.schmidt);
  if (!c.ideal.empty()) out["ideal"] = labels_of(s, c.ideal);
  if (c.gp) {
    json gamma = json::object();
    for (int x = 0; x < s.size(); ++x)
      gamma[s.label(x)] = cycle_decompose(c.gp->gamma[x]).str();
    out["gamma"] = std::move(gamma);
  }
  if (c.u3) {
    const Semigroup& g = c.dec->spec.group;
    out["u3"] = json{{"u", s.label(c.u3->u)},
                     {"k", c.u3->k},
                     {"psi", json::array({g.label(c.u3->psi[0]), g.label(c.u3->psi[1])})},
                     {"group_generators", labels_of(g, c.u3->group_generators)}};
  }
  if (c.u4) {
    const Semigroup& g = c.dec->spec.group;
    out["u4"] = json{{"x1", s.label(c.u4->x1)},
                     {"x2", s.label(c.u4->x2)},
                     {"relabel", std::vector<int>(c.u4->relabel.begin() + 1, c.u4->relabel.end())},
                     {"relations_checked", c.u4->relations_checked},
                     {"group_generators", labels_of(g, c.u4->group_generators)}};
  }
  if (c.u5) {
    const Semigroup& g = c.dec->spec.group;
    out["u5"] = json{{"v1", s.label(c.u5->v1)},
                     {"v2", s.label(c.u5->v2)},
                     {"pattern_points", c.u5->ks},
                     {"group_generators", labels_of(g, c.u5->group_generators)}};
  }
  return out;
}

json catalog_to_json(const CatalogEntry& e) {
  json expected{{"nilpotent", e.expected_nilpotent}};
  switch (e.expected_minimal) {
    case ExpectedFlag::No: expected["minimal"] = false; break;
    case ExpectedFlag::Yes: expected["minimal"] = true; break;
    case ExpectedFlag::ToBeDetermined: expected["minimal"] = "to_be_determined"; break;
  }
  if (e.expected_type)
    expected["type"] = to_string(*e.expected_type);
  json out{{"name", e.name},
           {"semigroup", semigroup_to_json(e.semigroup)},
           {"expected", std::move(expected)},
           {"provenance", e.provenance}};
  if (!e.ideal.empty()) out["ideal"] = labels_of(e.semigroup, e.ideal);
  if (!e.expected_offender.empty())
    out["expected_offender"] = labels_of(e.semigroup, e.expected_offender);
  return out;
}

}  // namespace nilpotentia

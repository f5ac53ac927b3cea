// Command-line surface: analysis reports, family constructors and the census,
// all emitting deterministic JSON (or a text rendering with --pretty).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/census.hpp"
#include "nilpotentia/classify.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/json_io.hpp"

namespace {

using namespace nilpotentia;

constexpr const char* kVersion = "0.1.0";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

MnnMode parse_mode(const std::string& mode) {
  if (mode == "4gen") return MnnMode::FourGenerator;
  if (mode == "exhaustive") return MnnMode::Exhaustive;
  fail(ErrorKind::BadParameter, "mode must be 4gen or exhaustive");
}

std::string render_witness(const Semigroup& s, const Witness& w) {
  std::string out = "x=" + s.label(w.x) + ", y=" + s.label(w.y) + ", ws=[";
  for (size_t k = 0; k < w.ws.size(); ++k) {
    if (k) out += ",";
    out += w.ws[k] == s.size() ? "1" : s.label(w.ws[k]);
  }
  return out + "]";
}

std::string render_nilpotency(const Semigroup& s, const NilpotencyResult& r) {
  if (r.nilpotent)
    return "nilpotent of class " + std::to_string(r.cls);
  return "not nilpotent; witness " + render_witness(s, *r.witness);
}

std::string render_minimality(const Semigroup& s, const MnnVerdict& v) {
  std::string out = v.minimal ? "minimal non-nilpotent" : "not minimal";
  out += v.mode == MnnMode::FourGenerator ? " (4-generator sweep)" : " (exhaustive sweep)";
  for (const auto& o : v.offenders) {
    out += "\n  offender ";
    out += o.kind == MnnOffender::Kind::Ideal ? "ideal {" : "subsemigroup {";
    for (size_t k = 0; k < o.members.size(); ++k) {
      if (k) out += ",";
      out += s.label(o.members[k]);
    }
    out += "}";
  }
  return out;
}

std::string render_classification(const Semigroup& s, const Classification& c) {
  std::string out = std::string("type: ") + to_string(c.verdict);
  if (c.nilpotency_class) out += " (class " + std::to_string(*c.nilpotency_class) + ")";
  if (c.u3)
    out += "; u=" + s.label(c.u3->u) + ", k=" + std::to_string(c.u3->k);
  if (c.u4) out += "; x1=" + s.label(c.u4->x1) + ", x2=" + s.label(c.u4->x2);
  if (c.u5) out += "; v1=" + s.label(c.u5->v1) + ", v2=" + s.label(c.u5->v2);
  return out;
}

void emit(const json& report, bool pretty, const std::string& text) {
  if (pretty)
    std::cout << text << "\n";
  else
    std::cout << report.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"finite-semigroup nilpotency analyser"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string file, mode = "4gen", out_path;
  int threads = 1;
  bool pretty = false, s_only = false;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("file", file, "semigroup file (JSON or text), - for stdin")
        ->required();
    cmd->add_flag("--pretty", pretty, "human-readable rendering");
    if (with_mode) {
      cmd->add_option("--mode", mode, "4gen|exhaustive")->capture_default_str();
      cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "nilpotency + minimality + type");
  add_common(analyze, true);
  analyze->add_flag("--s-only", s_only, "also report the S-only witness variant");

  CLI::App* cls = app.add_subcommand("class", "nilpotency class / witness");
  add_common(cls, false);
  cls->add_flag("--s-only", s_only, "also report the S-only witness variant");

  CLI::App* minimal = app.add_subcommand("minimal", "minimal non-nilpotency certificate");
  add_common(minimal, true);

  CLI::App* classify_cmd = app.add_subcommand("classify", "structure classification");
  add_common(classify_cmd, true);

  CLI::App* rees = app.add_subcommand("rees", "Rees matrix semigroup tools");
  CLI::App* rees_build = rees->add_subcommand("build", "build M^0(G,n,m;P) from a spec");
  std::string spec_file;
  rees_build->add_option("specfile", spec_file, "ReesSpec JSON, - for stdin")->required();
  rees_build->add_flag("--pretty", pretty);

  CLI::App* glue = app.add_subcommand("glue", "build a glued union from a spec");
  glue->add_option("specfile", spec_file, "GlueSpec JSON, - for stdin")->required();
  glue->add_flag("--pretty", pretty);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "named semigroup constructions");
  std::string name;
  catalog_cmd->add_option("name", name, "u1,u2,f7,u3_nonminimal,u4_nonminimal,u5_c2,y<n>")
      ->required();
  catalog_cmd->add_flag("--pretty", pretty);

  CLI::App* census_cmd = app.add_subcommand("census", "small-order census");
  int order = 2, shards = 1;
  std::string modulo = "iso", filter = "all";
  census_cmd->add_option("--order", order, "order, 1..7")->required();
  census_cmd->add_option("--modulo", modulo, "iso|isoanti")->capture_default_str();
  census_cmd->add_option("--filter", filter, "all|mnn")->capture_default_str();
  census_cmd->add_option("--shards", shards, "work partitions")->capture_default_str();
  census_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
  census_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  json report{{"version", kVersion}};

  if (*analyze || *cls || *minimal || *classify_cmd) {
    const Semigroup s = parse_semigroup(read_input(file));
    report["input"] = file;
    report["order"] = s.size();
    std::string text;
    if (*analyze || *cls) {
      const NilpotencyResult r = decide_nilpotent(s);
      report["nilpotency"] = nilpotency_to_json(s, r);
      text += render_nilpotency(s, r);
      if (s_only) {
        const NilpotencyResult r2 = decide_nilpotent(s, WitnessScope::SemigroupOnly);
        report["nilpotency_s_only"] = nilpotency_to_json(s, r2);
        text += "\nS-only variant: " + render_nilpotency(s, r2);
      }
    }
    if (*analyze || *minimal) {
      const MnnVerdict v = is_minimal_non_nilpotent(s, parse_mode(mode), threads);
      report["minimality"] = mnn_to_json(s, v);
      if (!text.empty()) text += "\n";
      text += render_minimality(s, v);
    }
    if (*analyze || *classify_cmd) {
      ClassifyOptions opts;
      opts.mode = parse_mode(mode);
      opts.threads = threads;
      const Classification c = classify(s, opts);
      report["classification"] = classification_to_json(s, c);
      if (!text.empty()) text += "\n";
      text += render_classification(s, c);
    }
    report["timing_ms"] = timer.ms();
    emit(report, pretty, text);
    return 0;
  }

  if (*rees_build) {
    const ReesSpec spec = rees_spec_from_json(json::parse(read_input(spec_file), nullptr, true));
    const BuiltRees built = build_rees(spec);
    json out = semigroup_to_json(built.s);
    out["nilpotent_by_criterion"] = rees_nilpotency_criterion(spec);
    emit(out, pretty, out.dump(2));
    return 0;
  }
  if (*glue) {
    const GlueSpec gs = glue_spec_from_json(json::parse(read_input(spec_file), nullptr, true));
    const GluedUnion g = glued_union(gs);
    emit(semigroup_to_json(g.s), pretty, semigroup_to_json(g.s).dump(2));
    return 0;
  }
  if (*catalog_cmd) {
    const CatalogEntry e = catalog_entry(name);
    const json out = catalog_to_json(e);
    emit(out, pretty, out.dump(2));
    return 0;
  }
  if (*census_cmd) {
    CensusConfig cfg;
    cfg.order = order;
    cfg.shards = shards;
    if (modulo == "iso")
      cfg.modulo = CensusModulo::Iso;
    else if (modulo == "isoanti")
      cfg.modulo = CensusModulo::IsoAntiIso;
    else
      fail(ErrorKind::BadParameter, "modulo must be iso or isoanti");
    if (filter != "all" && filter != "mnn")
      fail(ErrorKind::BadParameter, "filter must be all or mnn");
    if (order == 7)
      std::cerr << "note: order 7 is long-running (1627672 classes, minutes"
                   " of search)\n";

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      out_file.open(out_path);
      if (!out_file) fail(ErrorKind::ParseError, "cannot open " + out_path);
      out = &out_file;
    }
    if (filter == "all") {
      for (const CensusTable& t : enumerate_semigroups(cfg, threads))
        *out << semigroup_to_json(census_semigroup(t, cfg.order)).dump() << "\n";
    } else {
      cfg.filter = CensusFilter::MinimalNonNilpotent;
      for (const CensusHit& hit : find_minimal_non_nilpotent(cfg, threads)) {
        json line{{"semigroup", semigroup_to_json(hit.s)},
                  {"classification", classification_to_json(hit.s, hit.classification)}};
        *out << line.dump() << "\n";
      }
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    json err{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    const bool format_error = e.kind() == ErrorKind::ParseError ||
                              e.kind() == ErrorKind::BadShape ||
                              e.kind() == ErrorKind::NonAssociative;
    return format_error ? 2 : 1;
  } catch (const std::exception& e) {
    json err{{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}

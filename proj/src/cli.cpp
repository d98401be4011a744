#include "hyperfuzz/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperfuzz/explore.hpp"
#include "hyperfuzz/format.hpp"

namespace hyperfuzz {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

// Positioned diagnostics gain the file name on the way out.
HyperGroupoid load_hg(const std::string& path) {
  try {
    return parse_hypergroupoid(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) + ": " +
                e.what());
  }
}

FuzzySubset load_fz(const std::string& path, const HyperGroupoid& h) {
  try {
    return parse_fuzzy(read_file(path), h);
  } catch (const ParseError& e) {
    throw Error(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) + ": " +
                e.what());
  }
}

json set_json(const HyperGroupoid& h, ElementSet s) {
  json arr = json::array();
  for (Element e : s) arr.push_back(h.name(e));
  return arr;
}

json witness_json(const HyperGroupoid& h, const Witness& witness) {
  json j;
  if (const auto* w = std::get_if<AssocWitness>(&witness)) {
    j["type"] = "associativity";
    j["x"] = h.name(w->x);
    j["y"] = h.name(w->y);
    j["z"] = h.name(w->z);
    j["lhs"] = set_json(h, w->lhs);
    j["rhs"] = set_json(h, w->rhs);
  } else if (const auto* w = std::get_if<OneSidedWitness>(&witness)) {
    j["type"] = "one-sided";
    j["x"] = h.name(w->x);
    j["y"] = h.name(w->y);
    j["u"] = h.name(w->u);
    j["f_u"] = to_string(w->fu);
    j["bound"] = to_string(w->bound);
  } else if (const auto* w = std::get_if<QuasiWitness>(&witness)) {
    j["type"] = "quasi";
    j["x"] = h.name(w->x);
    j["b"] = h.name(w->b);
    j["s"] = h.name(w->s);
    j["t"] = h.name(w->t);
    j["c"] = h.name(w->c);
    j["f_x"] = to_string(w->fx);
    j["f_b"] = to_string(w->fb);
    j["f_c"] = to_string(w->fc);
  } else if (const auto* w = std::get_if<BiWitness>(&witness)) {
    j["type"] = "bi";
    j["x"] = h.name(w->x);
    j["y"] = h.name(w->y);
    j["z"] = h.name(w->z);
    j["u"] = h.name(w->u);
    j["f_u"] = to_string(w->fu);
    j["f_x"] = to_string(w->fx);
    j["f_z"] = to_string(w->fz);
  } else if (const auto* w = std::get_if<BoundWitness>(&witness)) {
    j["type"] = "characterization";
    j["a"] = h.name(w->a);
    j["lhs"] = to_string(w->lhs);
    j["f_a"] = to_string(w->fa);
  }
  return j;
}

json check_json(const HyperGroupoid& h, const CheckReport& report) {
  json j;
  j["method"] = report.method
                    ? json(*report.method == Method::definition ? "definition" : "characterization")
                    : json(nullptr);
  j["pass"] = report.pass;
  j["witness"] = report.witness ? witness_json(h, *report.witness) : json(nullptr);
  return j;
}

json scope_json(const VerificationScope& sc) {
  json j;
  j["n"] = sc.carrier_size;
  j["k"] = sc.grid;
  j["mode"] = sc.mode == Mode::exhaustive ? "exhaustive" : "sampled";
  if (sc.mode == Mode::sampled) {
    j["samples"] = sc.samples;
    j["seed"] = sc.seed;
  }
  j["assoc_only"] = sc.assoc_only;
  return j;
}

int do_check(const std::string& path, bool as_json, std::ostream& out) {
  const HyperGroupoid h = load_hg(path);
  const CheckReport report = is_hypersemigroup(h);
  if (as_json) {
    json j;
    j["command"] = "check";
    j["associative"] = report.pass;
    j["witness"] = report.witness ? witness_json(h, *report.witness) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "associative: " << (report.pass ? "yes" : "no") << '\n';
    if (report.witness) out << render_witness(h, *report.witness, std::nullopt);
  }
  return report.pass ? 0 : 1;
}

int do_compose(const std::string& hg_path, const std::string& f_path, const std::string& g_path,
               const std::string& out_path, bool as_json, std::ostream& out) {
  const HyperGroupoid h = load_hg(hg_path);
  const FuzzySubset f = load_fz(f_path, h);
  const FuzzySubset g = load_fz(g_path, h);
  const FuzzySubset result = compose(h, f, g);
  const std::string text = render_fuzzy(h, result);
  if (!out_path.empty()) {
    write_file(out_path, text);
  }
  if (as_json) {
    json grades;
    for (Element e : h.elements()) grades[h.name(e)] = to_string(result.at(e));
    json j;
    j["command"] = "compose";
    j["grades"] = grades;
    if (!out_path.empty()) j["out"] = out_path;
    out << j.dump(2) << '\n';
  } else if (out_path.empty()) {
    out << text;
  }
  return 0;
}

int do_ideal(const std::string& hg_path, const std::string& fz_path, const std::string& kind_name,
             const std::string& method_name, bool as_json, std::ostream& out, std::ostream& err) {
  const HyperGroupoid h = load_hg(hg_path);
  const FuzzySubset f = load_fz(fz_path, h);

  IdealKind kind = IdealKind::right;
  if (kind_name == "left") kind = IdealKind::left;
  if (kind_name == "quasi") kind = IdealKind::quasi;
  if (kind_name == "bi") kind = IdealKind::bi;

  std::vector<CheckReport> reports;
  if (method_name == "definition" || method_name == "both") {
    reports.push_back(check_ideal(h, f, kind, Method::definition));
  }
  if (method_name == "characterization" || method_name == "both") {
    reports.push_back(check_ideal(h, f, kind, Method::characterization));
  }
  const bool agree =
      reports.size() < 2 || reports[0].pass == reports[1].pass;

  if (as_json) {
    json checks = json::array();
    for (const CheckReport& r : reports) checks.push_back(check_json(h, r));
    json j;
    j["command"] = "ideal";
    j["kind"] = kind_name;
    j["checks"] = checks;
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << "kind: " << kind_name << '\n';
    for (const CheckReport& r : reports) out << render_check_report(h, r);
    if (reports.size() == 2) out << "agreement: " << (agree ? "yes" : "NO") << '\n';
  }

  if (!agree) {
    err << "error: the two methods disagree; this is an internal invariant violation\n";
    return 3;
  }
  return reports.front().pass ? 0 : 1;
}

int do_classify(const std::string& hg_path, const std::string& fz_path, bool as_json,
                std::ostream& out) {
  const HyperGroupoid h = load_hg(hg_path);
  const FuzzySubset f = load_fz(fz_path, h);
  const IdealProfile profile = classify(h, f);
  if (as_json) {
    json j;
    j["command"] = "classify";
    j["associative"] = profile.associative;
    j["right"] = profile.right;
    j["left"] = profile.left;
    j["quasi"] = profile.quasi;
    j["bi"] = profile.bi ? json(*profile.bi) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << render_ideal_profile(profile);
  }
  return 0;
}

int do_verify(const std::string& theorem, const VerificationScope& scope, bool no_time,
              bool as_json, std::ostream& out, std::ostream& err) {
  const auto id = theorem_from_name(theorem);
  if (!id) throw Error("unknown theorem '" + theorem + "'");
  const VerificationReport report = verify_theorem(*id, scope);
  if (as_json) {
    json j;
    j["command"] = "verify";
    j["theorem"] = theorem_name(report.theorem);
    j["scope"] = scope_json(report.scope);
    j["tables"] = report.tables_checked;
    j["instances"] = report.instances_checked;
    j["disagreements"] = report.disagreements;
    j["first_disagreement"] =
        report.first_disagreement
            ? json{{"instance", report.first_disagreement->instance_index},
                   {"description", report.first_disagreement->description}}
            : json(nullptr);
    if (!no_time) j["wall_ms"] = report.wall_time.count();
    out << j.dump(2) << '\n';
  } else {
    out << render_verification_report(report, !no_time);
  }
  if (report.disagreements != 0) {
    err << "error: " << report.disagreements
        << " disagreement(s); this points at an implementation bug\n";
    return 3;
  }
  return 0;
}

int do_enumerate(int size, bool assoc_only, bool canonical, const std::string& out_dir,
                 bool as_json, std::ostream& out) {
  HypergroupoidEnumerator en(size);
  const int width = std::max<int>(3, static_cast<int>(std::to_string(en.total() - 1).size()));

  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  json tables = json::array();
  std::uint64_t index = 0;
  std::uint64_t written = 0;
  while (auto h = en.next()) {
    const std::uint64_t this_index = index++;
    if (assoc_only && !is_hypersemigroup(*h).pass) continue;
    if (canonical && table_key(*h) != canonical_key(*h)) continue;

    std::string stem = std::to_string(this_index);
    stem.insert(0, static_cast<std::size_t>(width) - std::min<std::size_t>(stem.size(), width), '0');
    stem = "n" + std::to_string(size) + "-" + stem;
    const std::string text = render_hypergroupoid(*h);

    if (!out_dir.empty()) {
      write_file((std::filesystem::path(out_dir) / (stem + ".hg")).string(), text);
    }
    if (as_json) {
      tables.push_back({{"name", stem}, {"text", text}});
    } else if (out_dir.empty()) {
      out << "# " << stem << '\n' << text << '\n';
    }
    ++written;
  }

  if (as_json) {
    json j;
    j["command"] = "enumerate";
    j["size"] = size;
    j["count"] = written;
    if (!out_dir.empty()) {
      j["out"] = out_dir;
    } else {
      j["tables"] = tables;
    }
    out << j.dump(2) << '\n';
  } else if (!out_dir.empty()) {
    out << "wrote " << written << " tables to " << out_dir << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for finite hypergroupoids, sup-min fuzzy composition and fuzzy ideals"};
  app.name("hyperfuzz");
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");

  auto* check = app.add_subcommand("check", "test the hypersemigroup identity on a table");
  std::string check_hg;
  check->add_option("hg", check_hg, ".hg table file")->required();

  auto* comp = app.add_subcommand("compose", "sup-min composition of two fuzzy subsets");
  std::string comp_hg, comp_f, comp_g, comp_out;
  comp->add_option("hg", comp_hg, ".hg table file")->required();
  comp->add_option("f", comp_f, "first .fz fuzzy subset")->required();
  comp->add_option("g", comp_g, "second .fz fuzzy subset")->required();
  comp->add_option("--out", comp_out, "write the result to this .fz file");

  auto* ideal = app.add_subcommand("ideal", "decide a fuzzy ideal predicate");
  std::string ideal_hg, ideal_fz, ideal_kind, ideal_method = "both";
  ideal->add_option("hg", ideal_hg, ".hg table file")->required();
  ideal->add_option("fz", ideal_fz, ".fz fuzzy subset file")->required();
  ideal->add_option("--kind", ideal_kind, "right|left|quasi|bi")
      ->required()
      ->check(CLI::IsMember({"right", "left", "quasi", "bi"}));
  ideal->add_option("--method", ideal_method, "definition|characterization|both (default both)")
      ->check(CLI::IsMember({"definition", "characterization", "both"}));

  auto* cls = app.add_subcommand("classify", "run all applicable ideal checks");
  std::string cls_hg, cls_fz;
  cls->add_option("hg", cls_hg, ".hg table file")->required();
  cls->add_option("fz", cls_fz, ".fz fuzzy subset file")->required();

  auto* verify = app.add_subcommand("verify", "cross-check a theorem over an instance space");
  std::string verify_theorem_name;
  VerificationScope scope;
  bool no_time = false;
  verify->add_option("--theorem", verify_theorem_name, "T4|T6|T8|T11|P9|NOTE")
      ->required()
      ->check(CLI::IsMember({"T4", "T6", "T8", "T11", "P9", "NOTE"}));
  verify->add_option("--size", scope.carrier_size, "carrier size n")->required();
  verify->add_option("--grid", scope.grid, "grade grid parameter k")->required();
  auto* opt_samples = verify->add_option("--samples", scope.samples, "sample count (sampled mode)");
  auto* opt_seed = verify->add_option("--seed", scope.seed, "sampling seed");
  opt_samples->needs(opt_seed);
  opt_seed->needs(opt_samples);
  verify->add_flag("--assoc-only", scope.assoc_only, "restrict to associative tables");
  verify->add_flag("--no-time", no_time, "omit the wall-time line (byte-stable reports)");

  auto* enumerate = app.add_subcommand("enumerate", "write every table of a given size");
  int enum_size = 0;
  bool enum_assoc = false, enum_canonical = false;
  std::string enum_out;
  enumerate->add_option("--size", enum_size, "carrier size n")->required();
  enumerate->add_flag("--assoc-only", enum_assoc, "keep hypersemigroups only");
  enumerate->add_flag("--canonical", enum_canonical, "keep one table per isomorphism class");
  enumerate->add_option("--out", enum_out, "directory for the .hg files");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return do_check(check_hg, as_json, out);
    if (app.got_subcommand(comp)) return do_compose(comp_hg, comp_f, comp_g, comp_out, as_json, out);
    if (app.got_subcommand(ideal))
      return do_ideal(ideal_hg, ideal_fz, ideal_kind, ideal_method, as_json, out, err);
    if (app.got_subcommand(cls)) return do_classify(cls_hg, cls_fz, as_json, out);
    if (app.got_subcommand(verify)) {
      if (opt_samples->count() > 0) scope.mode = Mode::sampled;
      return do_verify(verify_theorem_name, scope, no_time, as_json, out, err);
    }
    if (app.got_subcommand(enumerate))
      return do_enumerate(enum_size, enum_assoc, enum_canonical, enum_out, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace hyperfuzz

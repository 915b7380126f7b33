// detlab command line: check, compute, construct, reproduce.
//
// Exit codes: 0 certified yes / success, 1 certified no, 2 probable or
// inconclusive, 3 usage or parse error, 4 domain error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "detlab/constructions.hpp"
#include "detlab/detcheck.hpp"
#include "detlab/errors.hpp"
#include "detlab/io.hpp"
#include "detlab/reproduce.hpp"
#include "detlab/resolution.hpp"

using namespace detlab;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kMaybe = 2, kUsage = 3, kDomain = 4 };

struct Common {
  std::uint64_t seed = 1;
  std::uint32_t field = 0;
  bool json = false;
  std::vector<std::string> argv;
};

Field field_of(const Common& c) {
  return c.field == 0 ? Field() : Field::prime(c.field);
}

bool is_matrix_file(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".mat") == 0;
}

// A .mat file stands for the ideal of its maximal minors.
Ideal load_ideal(const std::string& path, const Common& c) {
  if (is_matrix_file(path)) {
    auto m = read_matrix_file(path, c.field);
    return Ideal(m.ring(), maximal_minors(m));
  }
  return read_ideal_file(path, c.field);
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::certified_yes:
      return kYes;
    case Verdict::certified_no:
      return kNo;
    case Verdict::probable_no:
      return kMaybe;
  }
  return kMaybe;
}

int exit_for(OneGenericVerdict v) {
  switch (v) {
    case OneGenericVerdict::yes:
      return kYes;
    case OneGenericVerdict::no:
      return kNo;
    case OneGenericVerdict::probably_yes:
      return kMaybe;
  }
  return kMaybe;
}

class Reporter {
 public:
  explicit Reporter(const Common& c) : common_(c), start_(std::chrono::steady_clock::now()) {}

  void emit(const json& result, const std::string& human) const {
    if (common_.json) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      json out = {{"schema_version", kSchemaVersion},
                  {"command", common_.argv},
                  {"seed", common_.seed},
                  {"field", field_name(field_of(common_))},
                  {"result", result},
                  {"timing", {{"seconds", secs}}}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << human;
      if (!human.empty() && human.back() != '\n') std::cout << "\n";
    }
  }

 private:
  const Common& common_;
  std::chrono::steady_clock::time_point start_;
};

std::string hilbert_text(const HilbertSeries& hs) {
  std::string out = "series: " + hs.to_string() + "\n";
  out += "h-vector: " + to_string(hs.h_vector()) + "\n";
  out += "dimension: " + std::to_string(hs.dimension()) + "\n";
  out += "degree: " + std::to_string(hs.degree()) + "\n";
  out += "polynomial: " + to_string(hs.polynomial()) + "\n";
  return out;
}

std::string report_text(const CheckReport& r) {
  std::string out = "verdict: " + to_string(r.verdict) + "\n" + r.summary + "\n";
  if (r.row_transform) {
    out += "row transform:\n" + r.row_transform->to_string() + "deleted row: " + std::to_string(*r.deleted_row) + "\n";
  }
  for (const auto& p : r.sweep) {
    out += "  sweep " + (p.alpha ? "alpha=" + std::to_string(*p.alpha) : std::string("first row")) +
           " height " + std::to_string(p.height) + "\n";
  }
  return out;
}

int run_check(const std::string& kind, const std::string& file, int trials, const std::string& mode, const Common& c) {
  Reporter rep(c);
  if (kind == "acm") {
    Ideal i = load_ideal(file, c);
    bool yes = is_acm(i);
    rep.emit({{"kind", kind}, {"acm", yes}}, std::string("acm: ") + (yes ? "yes" : "no"));
    return yes ? kYes : kNo;
  }
  auto m = read_matrix_file(file, c.field);
  if (kind == "one-generic") {
    auto mo = mode == "generalized" ? OneGenericMode::generalized : OneGenericMode::rows_cols;
    auto r = is_one_generic(m, mo, trials, c.seed);
    rep.emit({{"kind", kind}, {"mode", mode}, {"verdict", to_string(r.verdict)}, {"reason", r.reason}},
             "verdict: " + to_string(r.verdict) + "\n" + r.reason);
    return exit_for(r.verdict);
  }
  CheckReport r = kind == "standard" ? check_standard(m) : check_good(m, trials, c.seed);
  json j = to_json(r);
  j["kind"] = kind;
  rep.emit(j, report_text(r));
  return exit_for(r.verdict);
}

struct ComputeArgs {
  std::string kind;
  std::vector<std::string> files;
  std::size_t size = 0;
  bool square = false;
  std::string hyperplane;
  bool random = false;
  std::string form;
  std::int64_t s = 1;
};

int run_compute(const ComputeArgs& a, const Common& c) {
  Reporter rep(c);
  auto need_files = [&](std::size_t k) {
    if (a.files.size() != k) {
      throw CLI::ValidationError("compute " + a.kind, "expects " + std::to_string(k) + " input file(s)");
    }
  };
  if (a.kind == "minors") {
    need_files(1);
    auto m = read_matrix_file(a.files[0], c.field);
    std::size_t s = a.size == 0 ? m.rows() : a.size;
    json list = json::array();
    std::string human;
    for (const auto& f : minors(m, s)) {
      list.push_back(f.to_string());
      human += f.to_string() + "\n";
    }
    rep.emit({{"size", s}, {"minors", list}}, human);
    return kYes;
  }
  if (a.kind == "degree-matrix") {
    need_files(1);
    auto u = degree_matrix(read_matrix_file(a.files[0], c.field));
    rep.emit(to_json(u), u.to_string());
    return kYes;
  }
  if (a.kind == "hilbert") {
    need_files(1);
    Ideal i = load_ideal(a.files[0], c);
    rep.emit(to_json(i.hilbert()), hilbert_text(i.hilbert()));
    return kYes;
  }
  if (a.kind == "mu") {
    need_files(1);
    Ideal i = load_ideal(a.files[0], c);
    if (a.square) i = power(minimalize(i), 2);
    auto v = mu(i);
    rep.emit({{"mu", v}, {"square", a.square}}, std::to_string(v));
    return kYes;
  }
  if (a.kind == "betti") {
    need_files(1);
    Ideal i = load_ideal(a.files[0], c);
    auto res = free_resolution(i);
    auto table = betti_table(res);
    json j = to_json(table);
    j["complete"] = res.complete;
    j["matches_hilbert_series"] = matches_hilbert_series(res, i);
    rep.emit(j, betti_grid(table));
    return kYes;
  }
  if (a.kind == "section") {
    need_files(1);
    Ideal i = load_ideal(a.files[0], c);
    Polynomial h;
    if (a.random || a.hyperplane.empty()) {
      std::mt19937_64 rng(c.seed);
      h = random_linear_form(i.ring(), rng);
    } else {
      h = parse_polynomial(a.hyperplane, i.ring());
    }
    auto sec = hyperplane_section(i, h, true);
    json j = {{"hyperplane", h.to_string()},
              {"pivot", sec.pivot},
              {"saturated", *sec.saturated},
              {"ideal", to_json(sec.ideal)}};
    rep.emit(j, "# H = " + h.to_string() + ", saturated: " + (*sec.saturated ? "yes" : "no") + "\n" +
                    format_ideal(sec.ideal));
    return kYes;
  }
  if (a.kind == "artinian") {
    need_files(1);
    auto ar = artinian_reduction(load_ideal(a.files[0], c), c.seed);
    json forms = json::array();
    for (const auto& f : ar.forms) forms.push_back(f.to_string());
    rep.emit({{"forms", forms}, {"ideal", to_json(ar.ideal)}, {"hilbert", to_json(ar.ideal.hilbert())}},
             format_ideal(ar.ideal));
    return kYes;
  }
  if (a.kind == "bdl") {
    need_files(2);
    if (a.form.empty()) throw CLI::ValidationError("--form", "compute bdl needs --form F");
    Ideal curve = load_ideal(a.files[0], c), surface = load_ideal(a.files[1], c);
    auto link = basic_double_link(curve, surface, parse_polynomial(a.form, curve.ring()));
    Ideal out = minimalize(link.ideal);
    rep.emit({{"ideal", to_json(out)}, {"saturated", link.saturated}}, format_ideal(out));
    return kYes;
  }
  if (a.kind == "cone-family") {
    need_files(1);
    Ideal i = load_ideal(a.files[0], c);
    auto member = cone_family(i, i.ring().field.from_int(a.s));
    rep.emit({{"s", a.s}, {"ideal", to_json(member.ideal)}}, format_ideal(member.ideal));
    return kYes;
  }
  throw CLI::ValidationError("compute", "unknown kind " + a.kind);
}

int run_reproduce(const std::vector<std::string>& ids, std::optional<std::size_t> n, const Common& c) {
  Reporter rep(c);
  ReproduceOptions opts;
  opts.seed = c.seed;
  opts.n = n;
  opts.field = field_of(c);
  json all = json::array();
  std::string human;
  bool ok = true;
  for (const auto& id : ids) {
    auto r = reproduce(id, opts);
    all.push_back(to_json(r));
    ok = ok && r.passed();
    human += id + ": " + (r.passed() ? "pass" : "FAIL") + " (" + std::to_string(r.claims.size()) + " claims)\n";
    if (const Claim* bad = r.first_failure()) {
      human += "  first failed claim: " + bad->label + "\n  expected: " + bad->expected + "\n  actual:   " +
               bad->actual + "\n";
    }
  }
  rep.emit(ids.size() == 1 ? all[0] : all, human);
  return ok ? kYes : kNo;
}

int run_construct(const std::string& id, const std::string& out_path, bool as_matrix, const Common& c) {
  auto con = construct(id, field_of(c));
  std::string body;
  if (as_matrix) {
    if (!con.matrix) throw PreconditionError("construction '" + id + "' has no matrix");
    body = format_matrix(*con.matrix);
  } else {
    body = format_ideal(con.ideal);
  }
  body = "# " + con.description + "\n" + body;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << body;
    return kYes;
  }
  Reporter rep(c);
  json j = {{"id", con.id}, {"description", con.description}, {"ideal", to_json(con.ideal)}};
  if (con.matrix) j["matrix"] = to_json(*con.matrix);
  rep.emit(j, body);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detlab: exact polynomial algebra and determinantal ideal checks"};
  app.require_subcommand(1);
  Common common;
  common.argv.assign(argv, argv + argc);
  common.argv[0] = "detlab";
  if (const char* env = std::getenv("DETLAB_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: DETLAB_SEED is not an integer\n";
      return kUsage;
    }
  }
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "random seed (default: DETLAB_SEED or 1)");
    sub->add_option("--field", common.field, "prime characteristic (default 32003)");
    sub->add_flag("--json", common.json, "JSON report");
  };

  std::string check_kind, check_file, mode = "rows-cols";
  int trials = 8;
  auto* check = app.add_subcommand("check", "certify a property of a matrix or ideal");
  check->add_option("kind", check_kind)->required()->check(CLI::IsMember({"standard", "good", "one-generic", "acm"}));
  check->add_option("file", check_file)->required();
  check->add_option("--trials", trials, "random trials for good / one-generic");
  check->add_option("--mode", mode, "one-generic mode")->check(CLI::IsMember({"rows-cols", "generalized"}));
  add_common(check);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "compute an invariant");
  compute->add_option("kind", compute_args.kind)
      ->required()
      ->check(CLI::IsMember(
          {"minors", "degree-matrix", "hilbert", "mu", "betti", "section", "artinian", "bdl", "cone-family"}));
  compute->add_option("files", compute_args.files)->required();
  compute->add_option("--size", compute_args.size, "minor size (default: maximal)");
  compute->add_flag("--square", compute_args.square, "mu of the square of the ideal");
  compute->add_option("--hyperplane", compute_args.hyperplane, "linear form H");
  compute->add_flag("--random", compute_args.random, "random hyperplane from --seed");
  compute->add_option("--form", compute_args.form, "form F for bdl");
  compute->add_option("--s", compute_args.s, "parameter of the cone family");
  add_common(compute);

  std::vector<std::string> repro_ids;
  bool repro_all = false;
  std::size_t repro_n = 0;
  auto* repro = app.add_subcommand("reproduce", "run a scripted example");
  auto* id_opt = repro->add_option("id", repro_ids)->check(CLI::IsMember(reproduce_ids()));
  auto* all_flag = repro->add_flag("--all", repro_all, "run the whole catalog");
  id_opt->excludes(all_flag);
  repro->add_option("--n", repro_n, "size parameter");
  add_common(repro);

  std::string con_id, con_out;
  bool con_matrix = false;
  auto* con = app.add_subcommand("construct", "print a registry construction");
  con->add_option("id", con_id)->required();
  con->add_option("-o,--output", con_out, "write to file");
  con->add_flag("--matrix", con_matrix, "print the matrix instead of the ideal");
  add_common(con);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(check_kind, check_file, trials, mode, common);
    if (*compute) return run_compute(compute_args, common);
    if (*repro) {
      if (repro_all) repro_ids = reproduce_ids();
      if (repro_ids.empty()) throw CLI::ValidationError("reproduce", "give an id or --all");
      return run_reproduce(repro_ids, repro_n ? std::optional<std::size_t>(repro_n) : std::nullopt, common);
    }
    if (*con) return run_construct(con_id, con_out, con_matrix, common);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "suite.hpp"
#include "supergroup/conjecture.hpp"
#include "supergroup/errors.hpp"
#include "supergroup/grassmann.hpp"
#include "supergroup/integrals.hpp"
#include "supergroup/sampling.hpp"

namespace supergroup::tools {

namespace {

struct Options {
  std::string command;
  long prec_bits = 0;
  long trunc_cap = 512;
  std::uint64_t seed = 42;
  long samples = 10;
  std::string radius = "2";
  long N = 0;
  long m = 0;
  long n = 0;
  long max_boxes = 0;
  long depth = 64;
  unsigned jobs = 1;
  std::string json_out;
  std::string input_path;
  std::string input_json;
  std::string bosonic;
  std::string fermionic;
  std::string beta;
  bool omit_run_info = false;
  Json input = Json::object();
  CLI::App* app = nullptr;

  bool given(const std::string& flag) const { return app->get_option(flag)->count() > 0; }
};

struct Outcome {
  Json result;
  int code = kOk;
};

// Values from the input document fill every flag that was not given on the command line.
template <class T>
void merge(Options& o, const std::string& flag, const char* key, T& target) {
  if (o.given(flag) || !o.input.contains(key)) return;
  try {
    if constexpr (std::is_same_v<T, std::string>) {
      const Json& v = o.input.at(key);
      target = v.is_string() ? v.get<std::string>() : v.dump();
    } else {
      target = o.input.at(key).get<T>();
    }
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("input field \"") + key + "\" has the wrong type");
  }
}

void load_input(Options& o) {
  std::string text;
  if (!o.input_path.empty()) {
    std::ifstream file(o.input_path);
    if (!file) throw InputError("cannot read input file " + o.input_path);
    std::stringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  } else if (!o.input_json.empty()) {
    text = o.input_json;
  } else {
    return;
  }
  try {
    o.input = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!o.input.is_object()) throw InputError("input must be a JSON object");
  merge(o, "--prec-bits", "prec_bits", o.prec_bits);
  merge(o, "--trunc-cap", "trunc_cap", o.trunc_cap);
  merge(o, "--seed", "seed", o.seed);
  merge(o, "--samples", "samples", o.samples);
  merge(o, "--radius", "radius", o.radius);
  merge(o, "--N", "N", o.N);
  merge(o, "--m", "m", o.m);
  merge(o, "--n", "n", o.n);
  merge(o, "--max-boxes", "max_boxes", o.max_boxes);
  merge(o, "--depth", "depth", o.depth);
}

Precision precision_of(const Options& o) {
  Precision p = Precision::from_environment();
  if (o.prec_bits != 0) p.bits = static_cast<Bits>(o.prec_bits);
  p.truncation_cap = o.trunc_cap;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return p;
}

std::vector<BigComplex> eigenvalue_list(const Options& o, const Json& doc, const char* key, const std::string& flag_text,
                                        Bits bits) {
  if (!flag_text.empty()) {
    std::vector<BigComplex> out;
    for (const auto& item : split_list(flag_text)) out.push_back(parse_complex(Json(item), bits));
    return out;
  }
  (void)o;
  if (!doc.contains(key)) return {};
  return parse_complex_list(doc.at(key), bits);
}

SuperEigenvalues eigenvalues_from(const Options& o, const Json& doc, const Precision& prec, bool use_flags) {
  const Bits bits = prec.bits;
  SuperEigenvalues ev;
  ev.bosonic = eigenvalue_list(o, doc, "bosonic", use_flags ? o.bosonic : std::string(), bits);
  ev.fermionic = eigenvalue_list(o, doc, "fermionic", use_flags ? o.fermionic : std::string(), bits);
  if (use_flags && !o.beta.empty()) {
    ev.beta = parse_complex(Json(o.beta), bits);
  } else if (doc.contains("beta")) {
    ev.beta = parse_complex(doc.at("beta"), bits);
  } else {
    ev.beta = BigComplex(1, bits);
  }
  if (doc.contains("m") && doc.at("m") != ev.m()) throw InputError("\"m\" does not match the number of bosonic entries");
  if (doc.contains("n") && doc.at("n") != ev.n()) throw InputError("\"n\" does not match the number of fermionic entries");
  if (ev.m() + ev.n() == 0) throw InputError("no eigenvalues given");
  return ev;
}

Json integral_json(const IntegralResult& r) {
  return Json{{"value", to_json(r.value)}, {"branch", to_string(r.branch)}, {"terms_used", r.terms_used}, {"warnings", r.warnings}};
}

Outcome ls_eval(const Options& o, const Precision& prec) {
  const SuperEigenvalues ev = eigenvalues_from(o, o.input, prec, true);
  Outcome out;
  out.result = {{"m", ev.m()}, {"n", ev.n()}, {"beta", to_json(ev.beta)}, {"integral", integral_json(ls_closed_form(ev, prec))}};
  return out;
}

Outcome bk_eval(const Options& o, const Precision& prec) {
  if (!o.input.contains("lambda") || !o.input.contains("mu")) {
    throw InputError("bk-eval needs an input document with \"lambda\" and \"mu\" objects");
  }
  Json lambda_doc = o.input.at("lambda");
  Json mu_doc = o.input.at("mu");
  if (!lambda_doc.is_object() || !mu_doc.is_object()) throw InputError("\"lambda\" and \"mu\" must be objects");
  if (o.input.contains("beta")) {
    lambda_doc["beta"] = o.input.at("beta");
    mu_doc["beta"] = o.input.at("beta");
  }
  const SuperEigenvalues lambda = eigenvalues_from(o, lambda_doc, prec, false);
  const SuperEigenvalues mu = eigenvalues_from(o, mu_doc, prec, false);
  if (lambda.m() != mu.m() || lambda.n() != mu.n()) throw InputError("lambda and mu must have the same (m|n)");
  Outcome out;
  out.result = {{"m", lambda.m()}, {"n", lambda.n()}, {"beta", to_json(lambda.beta)},
                {"integral", integral_json(bk_closed_form(lambda, mu, prec))}};
  return out;
}

Outcome conjecture_verify(const Options& o, const Precision& prec) {
  const long N = o.N == 0 ? 2 : o.N;
  if (N < 1) throw InputError("--N must be positive");
  std::vector<long> ms;
  if (o.m == 0) {
    for (long m = 1; m <= N; ++m) ms.push_back(m);
  } else {
    ms.push_back(o.m);
  }
  Outcome out;
  Json reports = Json::array();
  bool pass = true;
  for (long m : ms) {
    ConjectureConfig config;
    config.N = N;
    config.m = m;
    config.samples = o.samples;
    config.radius = parse_rational(Json(o.radius));
    config.seed = o.seed;
    config.K = o.depth;
    config.jobs = o.jobs;
    const ConjectureReport report = verify_conjecture(config, prec);
    Json samples = Json::array();
    for (const auto& s : report.samples) {
      Json z = Json::array();
      for (const auto& g : s.z) z.push_back(to_json(g));
      samples.push_back({{"z", z}, {"j0", to_json(s.j0)}, {"jm", to_json(s.jm)}, {"abs_diff", to_json(s.abs_diff)},
                         {"rel_diff", to_json(s.rel_diff)}});
    }
    reports.push_back({{"N", N},
                       {"m", m},
                       {"samples", samples},
                       {"max_rel_diff", to_json(report.max_rel_diff)},
                       {"tail_bound", to_json(report.tail_bound)},
                       {"tolerance", to_json(report.tolerance)},
                       {"pass", report.pass}});
    pass = pass && report.pass;
  }
  out.result = {{"N", N}, {"radius", o.radius}, {"depth", o.depth}, {"samples", o.samples}, {"reports", reports}, {"pass", pass}};
  out.code = pass ? kOk : kMismatch;
  return out;
}

Outcome lr_check(const Options& o) {
  const long m = o.m == 0 ? 2 : o.m;
  const long n = o.n == 0 ? 2 : o.n;
  const long boxes = o.max_boxes == 0 ? 8 : o.max_boxes;
  if (m < 1 || n < 1 || boxes < 0 || boxes > 10) throw InputError("lr-check needs m, n >= 1 and 0 <= max-boxes <= 10");
  Outcome out;
  Json cells = Json::array();
  bool pass = true;
  for (const LrCheck& c : lr_sweep(boxes, m, n, o.jobs)) {
    cells.push_back({{"p", to_json(c.p)}, {"q", to_json(c.q)}, {"g", to_json(c.rhs)}, {"terms", c.terms},
                     {"residual", to_json(c.residual)}});
    pass = pass && c.equal;
  }
  out.result = {{"m", m}, {"n", n}, {"max_boxes", boxes}, {"cells", cells}, {"pass", pass}};
  out.code = pass ? kOk : kMismatch;
  return out;
}

Outcome supertrace_power_command(const Options& o) {
  const long boxes = o.max_boxes == 0 ? 6 : o.max_boxes;
  std::vector<BigRational> bos, ferm;
  if (o.input.contains("bosonic") || o.input.contains("fermionic") || !o.bosonic.empty() || !o.fermionic.empty()) {
    const auto read = [&](const char* key, const std::string& flag) {
      std::vector<BigRational> v;
      if (!flag.empty()) {
        for (const auto& item : split_list(flag)) v.push_back(parse_rational(Json(item)));
      } else if (o.input.contains(key)) {
        if (!o.input.at(key).is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
        for (const auto& item : o.input.at(key)) v.push_back(parse_rational(item));
      }
      return v;
    };
    bos = read("bosonic", o.bosonic);
    ferm = read("fermionic", o.fermionic);
  } else {
    const long m = o.m == 0 ? 2 : o.m;
    const long n = o.n == 0 ? 2 : o.n;
    for (long i = 0; i < m + n; ++i) {
      const std::uint64_t h = counter_hash(o.seed, 4000, static_cast<std::uint64_t>(i), 0);
      const BigRational q = make_rational(static_cast<long>(h % 41) - 20, 1 + static_cast<long>((h >> 32) % 9));
      (i < m ? bos : ferm).push_back(q);
    }
  }
  if (bos.size() > 2 || ferm.size() > 2 || bos.size() + ferm.size() == 0 || boxes < 1 || boxes > 6) {
    throw InputError("strninxi-check needs m, n <= 2, m + n >= 1 and 1 <= max-boxes <= 6");
  }
  Outcome out;
  Json checks = Json::array();
  bool pass = true;
  for (const auto& c : character_expansion_check(boxes, bos, ferm)) {
    checks.push_back({{"boxes", c.boxes}, {"str_power", to_json(c.lhs)}, {"character_sum", to_json(c.rhs)}, {"equal", c.equal}});
    pass = pass && c.equal;
  }
  Json b = Json::array(), f = Json::array();
  for (const auto& x : bos) b.push_back(to_json(x));
  for (const auto& y : ferm) f.push_back(to_json(y));
  out.result = {{"bosonic", b}, {"fermionic", f}, {"checks", checks}, {"pass", pass}};
  out.code = pass ? kOk : kMismatch;
  return out;
}

Outcome criteria_outcome(const std::vector<int>& ids, const Options& o, const Precision& prec, std::ostream& err,
                         Json* timings) {
  SuiteOptions suite{prec, o.seed, o.jobs};
  Outcome out;
  Json criteria = Json::array();
  bool pass = true;
  bool truncation = false;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, suite);
    err << std::left << std::setw(4) << r.id << std::setw(6) << (r.pass ? "PASS" : "FAIL") << r.name << "  [" << r.detail << "]"
        << std::endl;
    criteria.push_back(criterion_json(r));
    if (timings) timings->push_back({{"id", r.id}, {"seconds", r.seconds}});
    pass = pass && r.pass;
    truncation = truncation || r.truncation;
  }
  out.result = {{"criteria", criteria}, {"pass", pass}};
  out.code = truncation ? kTruncation : (pass ? kOk : kMismatch);
  return out;
}

Outcome theorems_check(const Options& o, const Precision& prec) {
  std::vector<long> sizes;
  if (o.N == 0) {
    for (long N = 1; N <= 6; ++N) sizes.push_back(N);
  } else {
    sizes.push_back(o.N);
  }
  Outcome out;
  Json checks = Json::array();
  bool pass = true;
  for (long N : sizes) {
    if (N < 1 || N > 6) throw InputError("theorems-check needs 1 <= N <= 6");
    for (const TheoremCheck& c : determinant_theorem_checks(N, o.seed, 50, prec)) {
      checks.push_back({{"name", c.name}, {"N", c.N}, {"pass", c.pass}, {"detail", c.detail}});
      pass = pass && c.pass;
    }
  }
  out.result = {{"checks", checks}, {"pass", pass}};
  out.code = pass ? kOk : kMismatch;
  return out;
}

void write_report(const Options& o, const Json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (o.json_out.empty() || o.json_out == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.json_out, std::ios::binary);
  if (!file) throw InputError("cannot write " + o.json_out);
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Supergroup integrals: closed forms, character expansions and identity checks"};
  o.app = &app;
  app.require_subcommand(1);
  app.add_option("--prec-bits", o.prec_bits, "Working precision in bits (default 256, or SUPERGROUP_PREC_BITS)");
  app.add_option("--trunc-cap", o.trunc_cap, "Maximum number of series terms");
  app.add_option("--seed", o.seed, "Seed for all sampled inputs");
  app.add_option("--samples", o.samples, "Samples per conjecture run");
  app.add_option("--radius", o.radius, "Sampling disk radius (exact rational)");
  app.add_option("--N", o.N, "Number of variables");
  app.add_option("--m", o.m, "Bosonic dimension");
  app.add_option("--n", o.n, "Fermionic dimension");
  app.add_option("--max-boxes", o.max_boxes, "Largest diagram size");
  app.add_option("--depth", o.depth, "Truncation depth K of the J-series");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--json-out", o.json_out, "Write the report here instead of stdout");
  app.add_option("--input", o.input_path, "JSON input document");
  app.add_option("--input-json", o.input_json, "Inline JSON input document");
  app.add_option("--bosonic", o.bosonic, "Comma-separated bosonic eigenvalues");
  app.add_option("--fermionic", o.fermionic, "Comma-separated fermionic eigenvalues");
  app.add_option("--beta", o.beta, "Coupling beta");
  app.add_flag("--omit-run-info", o.omit_run_info, "Leave out wall time and worker count (byte-stable reports)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ls-eval", "Leutwyler-Smilga integral from bosonic/fermionic lambda^2 and beta"},
      {"bk-eval", "Berezin-Karpelevich integral from lambda^2, mu^2 and beta"},
      {"conjecture-verify", "Compare the truncated J_0 and J_m series on sampled points"},
      {"lr-check", "Exact Littlewood-Richardson relation sweep"},
      {"strninxi-check", "Exact supertrace power expansion in supercharacters"},
      {"appendix-e-verify", "Berezin integration over U(1|1) and U(2|1) against the closed form"},
      {"theorems-check", "Rearrangement, power-series determinant and factorial determinant identities"},
      {"selftest", "Run every acceptance criterion"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&o, name = name] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    load_input(o);
    const Precision prec = precision_of(o);
    Outcome outcome;
    Json timings = Json::array();
    if (o.command == "ls-eval") {
      outcome = ls_eval(o, prec);
    } else if (o.command == "bk-eval") {
      outcome = bk_eval(o, prec);
    } else if (o.command == "conjecture-verify") {
      outcome = conjecture_verify(o, prec);
    } else if (o.command == "lr-check") {
      outcome = lr_check(o);
    } else if (o.command == "strninxi-check") {
      outcome = supertrace_power_command(o);
    } else if (o.command == "appendix-e-verify") {
      outcome = criteria_outcome({8, 9}, o, prec, err, &timings);
    } else if (o.command == "theorems-check") {
      outcome = theorems_check(o, prec);
    } else {
      std::vector<int> all;
      for (int id = 1; id <= static_cast<int>(criterion_names().size()); ++id) all.push_back(id);
      outcome = criteria_outcome(all, o, prec, err, &timings);
    }
    Json report;
    report["schema"] = kSchema;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = o.command;
    report["config"] = {{"precision_bits", prec.bits}, {"guard_bits", prec.guard_bits}, {"truncation_cap", prec.truncation_cap},
                        {"seed", o.seed}};
    report["result"] = outcome.result;
    report["exit_code"] = outcome.code;
    if (!o.omit_run_info) {
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report["run"] = {{"wall_time_seconds", wall}, {"jobs", o.jobs}};
      if (!timings.empty()) report["run"]["criterion_seconds"] = timings;
    }
    write_report(o, report, out);
    return outcome.code;
  } catch (const TruncationCapExceeded& e) {
    err << "error: " << e.what() << std::endl;
    return kTruncation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  } catch (const SupergroupError& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  }
}

}  // namespace supergroup::tools

#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wz/fixtures.hpp"

namespace wz::cli {

namespace {

struct Config {
  std::string command;
  int example = 0;
  std::string kind = "omega";
  std::string base;
  std::string pattern;
  int digits = 30;
  long max_terms = 10000;
  int max_order = 3;
  bool json = false;
  std::optional<long> shift;
  std::string constancy;

  PrecisionContext ctx() const {
    PrecisionContext c;
    c.digits = digits;
    c.max_terms = max_terms;
    c.validate();
    return c;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"command", command}, {"digits", digits}, {"max_terms", max_terms}, {"max_order", max_order}};
    if (command == "example") j["example_id"] = example;
    if (command == "accelerate" || (command == "certify" && example == 0)) {
      j["kind"] = kind;
      j["base"] = base;
      j["pattern"] = pattern;
    }
    if (command == "certify" && example != 0) j["example_id"] = example;
    if (shift) j["shift"] = *shift;
    if (!constancy.empty()) j["constancy"] = constancy;
    return j;
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<long> parse_ks(const std::string& csv) {
  std::vector<long> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Rational q = parse_rational(item);
    if (!is_integer(q) || q < 0) throw UsageError("--constancy takes integers k >= 0, got " + item);
    out.push_back(q.get_num().get_si());
  }
  if (out.empty()) throw UsageError("--constancy needs at least one k");
  return out;
}

RunOptions options(const Config& cfg) {
  RunOptions o;
  o.shift = cfg.shift;
  if (!cfg.constancy.empty()) o.constancy = parse_ks(cfg.constancy);
  return o;
}

int exit_code(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) ? 0 : 1;
}

// Result of one command: a report, its checks and notes, or an error.
struct Outcome {
  nlohmann::json report = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::string error;
  int exit = 0;
};

void print_human(std::ostream& out, const std::string& title, const Outcome& o) {
  out << title << "\n";
  const nlohmann::json& r = o.report;
  auto line = [&](const char* label, const char* key) {
    if (r.contains(key)) out << "  " << label << ": " << (r[key].is_string() ? r[key].get<std::string>() : r[key].dump()) << "\n";
  };
  if (r.contains("telescoper")) {
    const nlohmann::json& c = r["telescoper"]["coeffs"];
    out << "  telescoper of U:";
    for (std::size_t i = c.size(); i-- > 0;) {
      out << (i + 1 == c.size() ? " " : " + ") << "(" << c[i].get<std::string>() << ")";
      if (i > 0) out << " N" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    out << "\n";
  }
  line("multiplier", "multiplier");
  line("certificate R(n,k)", "certificate");
  line("series", "series_text");
  line("sum_n G(n,0)", "value");
  if (r.contains("target")) {
    out << "  target " << r["target"]["name"].get<std::string>() << ": " << r["target"]["value"].get<std::string>()
        << "\n";
  }
  if (r.contains("identity_report")) {
    const nlohmann::json& id = r["identity_report"];
    out << "  identity: lhs " << id["lhs"].get<std::string>() << "\n"
        << "            sum_k F(0,k) " << id["rhs_inner_sum"].get<std::string>() << "\n"
        << "            boundary limit " << id["rhs_boundary_limit"].get<std::string>() << "\n";
  }
  if (r.contains("shift")) out << "  shifted pair: " << r["shift"].dump() << "\n";
  if (r.contains("constancy")) out << "  constancy: " << r["constancy"].dump() << "\n";
  if (r.contains("grid_failures")) out << "  telescoping grid failures: " << r["grid_failures"].dump() << "\n";
  for (const Check& c : o.checks) {
    out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const std::string& n : o.notes) out << "  note: " << n << "\n";
  if (!o.error.empty()) out << "  error: " << o.error << "\n";
  out << "  exit " << o.exit << "\n";
}

nlohmann::json checks_json(const std::vector<Check>& checks) {
  nlohmann::json a = nlohmann::json::array();
  for (const Check& c : checks) a.push_back(to_json(c));
  return a;
}

Outcome guarded(const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
    o.exit = exit_code(o.checks);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    o.error = e.what();
    o.exit = 2;
  }
  return o;
}

Outcome example(const Config& cfg, int id, Exec exec) {
  return guarded([&](Outcome& o) {
    FixtureRun r = run_fixture(id, cfg.ctx(), options(cfg), cfg.max_order, exec);
    o.report = std::move(r.report);
    o.checks = std::move(r.checks);
    o.notes = std::move(r.notes);
  });
}

std::string title(const Config& cfg, int id) {
  std::ostringstream t;
  if (id != 0) {
    const Fixture& f = fixture(id);
    t << "example " << id << ": " << kind_name(f.base.kind) << "(" << to_string(f.base) << ") pattern ["
      << to_string(f.pattern) << "], " << cfg.digits << " digits";
  } else {
    t << cfg.command << ": " << cfg.kind << "(" << cfg.base << ") pattern [" << cfg.pattern << "], " << cfg.digits
      << " digits";
  }
  return t.str();
}

void emit(std::ostream& out, const Config& cfg, const std::string& head, const Outcome& o) {
  if (cfg.json) {
    nlohmann::json j = {{"config", cfg.to_json()}, {"report", o.report}, {"checks", checks_json(o.checks)},
                        {"notes", o.notes}, {"exit", o.exit}};
    if (!o.error.empty()) j["error"] = o.error;
    out << j.dump(2) << "\n";
  } else {
    print_human(out, head, o);
  }
}

std::pair<DougallBase, Pattern> inputs(const Config& cfg) {
  if (cfg.base.empty() || cfg.pattern.empty()) throw UsageError(cfg.command + " needs --base and --pattern");
  try {
    const SeriesKind kind = parse_kind(cfg.kind);
    return {parse_base(kind, cfg.base), parse_pattern(cfg.pattern)};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_example(const Config& cfg, std::ostream& out) {
  const Outcome o = example(cfg, cfg.example, Exec::parallel);
  emit(out, cfg, title(cfg, cfg.example), o);
  return o.exit;
}

int cmd_accelerate(const Config& cfg, std::ostream& out) {
  const auto [base, pattern] = inputs(cfg);
  const RunOptions opt = options(cfg);
  Outcome o = guarded([&](Outcome& oc) {
    const PipelineRun run = run_pipeline(base, pattern, cfg.ctx(), cfg.max_order);
    oc.report = to_json(run, cfg.digits);
    oc.checks = generic_checks(run, cfg.ctx(), opt, oc.report);
    if (base.kind == SeriesKind::omega && convergence_margin(base) <= 0) {
      oc.notes.push_back("Omega(" + to_string(base) + ") is not defined: convergence margin " +
                         to_string(convergence_margin(base)) + " <= 0");
    }
  });
  emit(out, cfg, title(cfg, 0), o);
  return o.exit;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  DougallBase base;
  Pattern pattern;
  if (cfg.example != 0) {
    base = fixture(cfg.example).base;
    pattern = fixture(cfg.example).pattern;
  } else {
    std::tie(base, pattern) = inputs(cfg);
  }
  Outcome o = guarded([&](Outcome& oc) {
    const WZPair pair = build_wz_pair(base, pattern, cfg.max_order);
    oc.report = {{"base", to_string(base)},
                 {"pattern", to_string(pattern)},
                 {"kind", kind_name(base.kind)},
                 {"telescoper", to_json(pair.telescoper)},
                 {"multiplier", to_json(pair.multiplier)},
                 {"certificate", pair.R.to_string()}};
    oc.checks.push_back({"telescoper of U certified", certify(pair.U, pair.telescoper), ""});
    oc.checks.push_back({"WZ pair certified", certify(pair.F, pair.wz_telescoper()), ""});
    const auto failures = telescoping_failures(pair.F, pair.G(), 6, 12, Exec::parallel);
    nlohmann::json f = nlohmann::json::array();
    for (const auto& [n, K] : failures) f.push_back({n, K});
    oc.report["grid_failures"] = f;
    oc.checks.push_back({"telescoping partial sums, n <= 6, K <= 12", failures.empty(),
                         std::to_string(failures.size()) + " failures"});
  });
  emit(out, cfg, title(cfg, cfg.example), o);
  return o.exit;
}

int cmd_verify_all(const Config& cfg, std::ostream& out) {
  const std::vector<Fixture>& all = fixtures();
  std::vector<Outcome> results(all.size());
  // Fixtures run concurrently; inner loops then run serially.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < all.size(); ++i) {
    results[i] = example(cfg, all[i].id, Exec::serial);
  }
  int worst = 0;
  for (const Outcome& o : results) worst = std::max(worst, o.exit);
  if (cfg.json) {
    nlohmann::json fx = nlohmann::json::array();
    std::vector<Check> flat;
    for (std::size_t i = 0; i < all.size(); ++i) {
      nlohmann::json j = {{"id", all[i].id}, {"report", results[i].report}, {"checks", checks_json(results[i].checks)},
                          {"notes", results[i].notes}, {"exit", results[i].exit}};
      if (!results[i].error.empty()) j["error"] = results[i].error;
      fx.push_back(j);
      for (const Check& c : results[i].checks) flat.push_back({std::to_string(all[i].id) + ": " + c.name, c.pass, c.detail});
      if (!results[i].error.empty()) flat.push_back({std::to_string(all[i].id) + ": pipeline", false, results[i].error});
    }
    out << nlohmann::json{{"config", cfg.to_json()}, {"fixtures", fx}, {"checks", checks_json(flat)}, {"exit", worst}}
               .dump(2)
        << "\n";
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) print_human(out, title(cfg, all[i].id), results[i]);
    out << "verify-all exit " << worst << "\n";
  }
  return worst;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"WZ acceleration of Dougall-type series", "wzsum"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", cfg.digits, "decimal places to report")->check(CLI::Range(1, 100000));
  app.add_option("--max-terms", cfg.max_terms, "term budget per series")->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "largest telescoper order tried")->check(CLI::Range(1, 10));
  app.add_flag("--json", cfg.json, "print a JSON report");
  app.add_option("--shift", cfg.shift, "evaluate sum_k F(m, k) for the pair shifted by m")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--constancy", cfg.constancy, "integers k at which to evaluate sum_n G(n, k)");

  CLI::App* ex = app.add_subcommand("example", "run one of the examples 42, 45, 50, 53");
  ex->add_option("id", cfg.example)->required()->check(CLI::IsMember({42, 45, 50, 53}));
  CLI::App* acc = app.add_subcommand("accelerate", "run the pipeline on any base and pattern");
  CLI::App* cert = app.add_subcommand("certify", "derive and certify a WZ pair");
  cert->add_option("id", cfg.example, "example id instead of --base/--pattern")->check(CLI::IsMember({42, 45, 50, 53}));
  for (CLI::App* sub : {acc, cert}) {
    sub->add_option("--kind", cfg.kind, "omega or phi")->check(CLI::IsMember({"omega", "phi"}));
    sub->add_option("--base", cfg.base, "parameters, e.g. 3/2,1/2,1,1,1");
    sub->add_option("--pattern", cfg.pattern, "slopes in n, e.g. 3,0,1,2,2");
  }
  CLI::App* all = app.add_subcommand("verify-all", "run all examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*ex) {
      cfg.command = "example";
      return cmd_example(cfg, out);
    }
    if (*acc) {
      cfg.command = "accelerate";
      return cmd_accelerate(cfg, out);
    }
    if (*cert) {
      cfg.command = "certify";
      return cmd_certify(cfg, out);
    }
    if (*all) {
      cfg.command = "verify-all";
      return cmd_verify_all(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wz::cli

// groupft: generate and validate group specs, run transforms, verification
// suites and difference-set experiments.
//
// Exit status: 0 pass, 1 a check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "groupft/documents.hpp"
#include "groupft/errors.hpp"
#include "groupft/theorems.hpp"

using namespace groupft;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string group, spec_file, config_file, suite, out, format, set, set_file, box, input, kind, csv, lambda_rule;
  double tol = 0.0, grid_l = 0.0, lambda_min = 0.0, lambda_max = 0.0;
  std::uint64_t seed = 0;
  std::size_t trials = 0, grid_n = 0, lambda_nodes = 0;
  bool summary = false;
  std::string family;
  std::vector<std::string> params;
};

// Options added to every backend-using subcommand. Keys are the settings
// document paths they override.
struct Registered {
  std::vector<std::pair<CLI::Option*, std::string>> opts;
};

void add_backend_options(CLI::App* cmd, Flags& f, Registered& reg) {
  reg.opts.emplace_back(cmd->add_option("--group", f.group, "builtin:NAME (zN, dN, s3, hP, AxB) or heisenberg"),
                        "/group");
  reg.opts.emplace_back(cmd->add_option("--spec-file", f.spec_file, "group-spec document"), "/spec_file");
  cmd->add_option("--config", f.config_file, "JSON settings file (flags take precedence)");
  reg.opts.emplace_back(cmd->add_option("--tol", f.tol, "replace every tolerance"), "/tol");
  reg.opts.emplace_back(cmd->add_option("--seed", f.seed, "random seed"), "/seed");
  reg.opts.emplace_back(cmd->add_option("--grid-n", f.grid_n, "Heisenberg carrier size N"), "/heisenberg/grid_n");
  reg.opts.emplace_back(cmd->add_option("--grid-l", f.grid_l, "Heisenberg carrier half-width L"),
                        "/heisenberg/half_width");
  reg.opts.emplace_back(cmd->add_option("--lambda-min", f.lambda_min, "smallest |λ|"), "/heisenberg/lambda_min");
  reg.opts.emplace_back(cmd->add_option("--lambda-max", f.lambda_max, "largest |λ|"), "/heisenberg/lambda_max");
  reg.opts.emplace_back(cmd->add_option("--lambda-nodes", f.lambda_nodes, "total λ nodes (even)"),
                        "/heisenberg/lambda_nodes");
  reg.opts.emplace_back(cmd->add_option("--lambda-rule", f.lambda_rule, "gauss-legendre, midpoint or trapezoid"),
                        "/heisenberg/rule");
  reg.opts.emplace_back(cmd->add_option("--out", f.out, "output file (default stdout)"), "/out");
  reg.opts.emplace_back(cmd->add_option("--format", f.format, "json or csv"), "/format");
}

json defaults() {
  return json{{"group", nullptr},  {"spec_file", nullptr}, {"suite", "all"},
              {"tol", nullptr},    {"seed", 1},            {"trials", 100},
              {"out", nullptr},    {"format", "json"},     {"heisenberg", HeisenbergConfig{}.to_json()}};
}

json flag_value(const Flags& f, const std::string& key) {
  if (key == "/group") return f.group;
  if (key == "/spec_file") return f.spec_file;
  if (key == "/tol") return f.tol;
  if (key == "/seed") return f.seed;
  if (key == "/trials") return f.trials;
  if (key == "/suite") return f.suite;
  if (key == "/out") return f.out;
  if (key == "/format") return f.format;
  if (key == "/heisenberg/grid_n") return f.grid_n;
  if (key == "/heisenberg/half_width") return f.grid_l;
  if (key == "/heisenberg/lambda_min") return f.lambda_min;
  if (key == "/heisenberg/lambda_max") return f.lambda_max;
  if (key == "/heisenberg/lambda_nodes") return f.lambda_nodes;
  if (key == "/heisenberg/rule") return f.lambda_rule;
  throw std::logic_error("unmapped flag " + key);
}

// defaults < config file < flags
json resolve_settings(const Flags& f, const Registered& reg) {
  json s = defaults();
  if (!f.config_file.empty()) {
    const json file = read_json_file(f.config_file);
    if (!file.is_object()) throw FormatError(f.config_file + ": settings must be a JSON object");
    for (const auto& [key, value] : file.items()) {
      if (!s.contains(key)) throw FormatError(f.config_file + ": unknown setting '" + key + "'");
      if (key == "heisenberg") {
        if (!value.is_object()) throw FormatError(f.config_file + ": 'heisenberg' must be an object");
        for (const auto& [hk, hv] : value.items()) {
          if (!s["heisenberg"].contains(hk)) throw FormatError(f.config_file + ": unknown heisenberg setting '" + hk + "'");
          s["heisenberg"][hk] = hv;
        }
      } else {
        s[key] = value;
      }
    }
  }
  for (const auto& [opt, key] : reg.opts) {
    if (opt->count() > 0) s[json::json_pointer(key)] = flag_value(f, key);
  }
  if (!s["tol"].is_null() && !(s["tol"].get<double>() > 0.0)) throw UsageError("--tol must be positive");
  const auto fmt = s["format"].get<std::string>();
  if (fmt != "json" && fmt != "csv") throw UsageError("--format must be json or csv");
  return s;
}

using Backend = std::variant<FiniteGroup, HeisenbergGroup>;

Backend make_backend(const json& s) {
  const bool has_group = !s["group"].is_null();
  const bool has_spec = !s["spec_file"].is_null();
  if (has_group == has_spec) throw UsageError("give exactly one of --group or --spec-file");
  if (has_spec) return load_group_file(s["spec_file"].get<std::string>());
  std::string name = s["group"].get<std::string>();
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  if (name == "heisenberg") return HeisenbergGroup(HeisenbergConfig::from_json(s["heisenberg"]));
  return builtin_group(name);
}

void emit(const json& s, const std::string& text) {
  if (s["out"].is_null()) {
    std::cout << text;
    return;
  }
  const auto path = s["out"].get<std::string>();
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "name,metric,tolerance,passed\n";
  for (const auto& c : r.checks) os << c.name << ',' << c.metric << ',' << c.tolerance << ',' << (c.passed ? 1 : 0) << '\n';
  return os.str();
}

int finish(const json& s, VerificationReport report) {
  report.config["cli"] = s;
  if (s["format"] == "csv") {
    emit(s, report_csv(report));
  } else {
    emit(s, to_json(report).dump(1) + "\n");
  }
  if (const auto* bad = report.first_failure()) {
    std::cerr << "check failed: " << bad->name << " (metric " << bad->metric << ", tolerance " << bad->tolerance
              << ")\n";
    return kExitFail;
  }
  return 0;
}

int cmd_gen(const Flags& f) {
  auto need = [&](std::size_t n) {
    if (f.params.size() != n) {
      throw UsageError("gen " + f.family + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  auto number = [](const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("expected a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoul(text));
  };
  std::optional<FiniteGroup> g;
  if (f.family == "cyclic") {
    need(1);
    g = gen_cyclic(number(f.params[0]));
  } else if (f.family == "dihedral") {
    need(1);
    g = gen_dihedral(number(f.params[0]));
  } else if (f.family == "finite-heisenberg") {
    need(1);
    g = gen_finite_heisenberg(number(f.params[0]));
  } else if (f.family == "product") {
    need(2);
    g = direct_product(builtin_group(f.params[0]), builtin_group(f.params[1]));
  } else {
    throw UsageError("unknown family '" + f.family + "' (cyclic, dihedral, finite-heisenberg, product)");
  }
  json s = defaults();
  if (!f.out.empty()) s["out"] = f.out;
  emit(s, save_group(*g) + "\n");
  return 0;
}

int cmd_validate(const json& s) {
  const Backend backend = make_backend(s);
  VerificationReport report;
  if (const auto* g = std::get_if<FiniteGroup>(&backend)) {
    FiniteValidationOptions v;
    if (!s["tol"].is_null()) v.tol = s["tol"].get<double>();
    v.seed = s["seed"].get<std::uint64_t>();
    report = validate_group(*g, v);
  } else {
    HeisenbergValidationOptions v;
    if (!s["tol"].is_null()) v.tol = v.homomorphism_tol = s["tol"].get<double>();
    report = validate_group(std::get<HeisenbergGroup>(backend), v);
  }
  return finish(s, std::move(report));
}

int cmd_transform(const json& s, const Flags& f) {
  if (f.input.empty()) throw UsageError("transform needs --input");
  if (f.kind != "function" && f.kind != "measure") throw UsageError("--kind must be function or measure");
  const Backend backend = make_backend(s);
  const json doc = read_json_file(f.input);
  const json out = std::visit(
      [&](const auto& g) {
        const auto field = f.kind == "function" ? fourier_function(function_from_json(g, doc))
                                                : fourier_measure(measure_from_json(g, doc));
        json r = field_to_json(g, field, !f.summary);
        r["kind"] = f.kind;
        return r;
      },
      backend);
  emit(s, out.dump(1) + "\n");
  return 0;
}

SuiteOptions suite_options(const json& s) {
  SuiteOptions o;
  o.seed = s["seed"].get<std::uint64_t>();
  o.trials = s["trials"].get<std::size_t>();
  if (!s["tol"].is_null()) o.tol = s["tol"].get<double>();
  return o;
}

int cmd_verify(const json& s) {
  const Backend backend = make_backend(s);
  const auto suite = s["suite"].get<std::string>();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const auto opts = suite_options(s);
  auto report = std::visit([&](const auto& g) { return run_suite(g, suite, opts); }, backend);
  return finish(s, std::move(report));
}

int cmd_distset(const json& s, const Flags& f, const CLI::App* cmd) {
  const Backend backend = make_backend(s);
  const Tolerances tol = s["tol"].is_null() ? std::visit([](const auto& g) { return default_tolerances(g); }, backend)
                                            : Tolerances::uniform(s["tol"].get<double>());
  const bool has_set = cmd->count("--set") > 0;
  const std::size_t sources = cmd->count("--set") + cmd->count("--set-file") + cmd->count("--box");
  if (sources != 1) throw UsageError("give exactly one of --set, --set-file or --box");

  json doc;
  std::string csv;
  CheckResult check;
  if (const auto* g = std::get_if<FiniteGroup>(&backend)) {
    if (cmd->count("--box") > 0) throw UsageError("--box needs the heisenberg backend");
    const auto set = has_set ? set_from_string(f.set) : set_from_json(read_json_file(f.set_file));
    const auto m = indicator_measure(*g, set);
    const auto r = analyze_difference_set(m);
    check = assess_difference_report(*g, m, r, tol);
    doc = to_json(*g, r);
    csv = density_csv(*g, r.density);
  } else {
    const auto& h = std::get<HeisenbergGroup>(backend);
    if (has_set) throw UsageError("--set needs a finite backend; use --box");
    const Box box = f.box.empty() ? box_from_json(read_json_file(f.set_file)) : box_from_string(f.box);
    const auto m = box_measure(h, box.lo, box.hi);
    const auto r = analyze_difference_set(m);
    check = assess_difference_report(h, m, r, tol);
    doc = to_json(h, r);
    csv = density_csv(h, r.density);
  }
  doc["check"] = to_json(check);
  doc["config"] = s;
  if (s["format"] == "csv") {
    emit(s, csv);
  } else {
    emit(s, doc.dump(1) + "\n");
  }
  if (!f.csv.empty()) {
    std::ofstream out(f.csv);
    if (!out) throw FormatError("cannot write " + f.csv);
    out << csv;
  }
  if (!check.passed) {
    std::cerr << "check failed: " << check.name << " (metric " << check.metric << ")\n";
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group Fourier transform toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto* gen = app.add_subcommand("gen", "write a group-spec document");
  gen->add_option("family", f.family, "cyclic, dihedral, finite-heisenberg or product")->required();
  gen->add_option("params", f.params, "family parameters (n, p, or two builtin names)");
  gen->add_option("--out", f.out, "output file (default stdout)");

  Registered validate_reg, transform_reg, verify_reg, distset_reg;
  auto* validate = app.add_subcommand("validate", "validate a backend");
  add_backend_options(validate, f, validate_reg);

  auto* transform = app.add_subcommand("transform", "Fourier transform of a function or measure document");
  add_backend_options(transform, f, transform_reg);
  transform->add_option("--input", f.input, "function or measure document");
  transform->add_option("--kind", f.kind, "function or measure")->default_val("function");
  transform->add_flag("--summary", f.summary, "omit matrices, keep norms");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_backend_options(verify, f, verify_reg);
  verify_reg.opts.emplace_back(verify->add_option("--suite", f.suite, "suite name"), "/suite");
  verify_reg.opts.emplace_back(verify->add_option("--trials", f.trials, "random trials per check"), "/trials");

  auto* distset = app.add_subcommand("distset", "difference-set pipeline");
  add_backend_options(distset, f, distset_reg);
  distset->add_option("--set", f.set, "element indices, e.g. 0,1")->expected(0, 1);
  distset->add_option("--set-file", f.set_file, "set or box document");
  distset->add_option("--box", f.box, "x0,y0,t0,x1,y1,t1");
  distset->add_option("--csv", f.csv, "also write the density samples as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(f);
    if (validate->parsed()) return cmd_validate(resolve_settings(f, validate_reg));
    if (transform->parsed()) return cmd_transform(resolve_settings(f, transform_reg), f);
    if (verify->parsed()) return cmd_verify(resolve_settings(f, verify_reg));
    if (distset->parsed()) return cmd_distset(resolve_settings(f, distset_reg), f, distset);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid setting: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

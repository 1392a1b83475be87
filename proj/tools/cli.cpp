#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <regex>
#include <sstream>

#include "padic_euler/fermionic.hpp"
#include "padic_euler/identities.hpp"
#include "padic_euler/loggamma.hpp"
#include "padic_euler/zeta.hpp"

namespace padic_euler {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  long p = 5;
  long prec = 20;
  long guard = kDefaultGuard;
  std::string budget = "1e6";
  long kcap = kDefaultReductionCap;
  std::string format = "text";
  std::uint64_t seed = 0;
};

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("not a rational a/b: '" + text + "'");
  BigInt num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw UsageError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

long long parse_budget(const std::string& text) {
  std::string source = text;
  if (const char* env = std::getenv("PADIC_EULER_BUDGET"); env != nullptr && *env != '\0') source = env;
  double v = 0;
  try {
    size_t used = 0;
    v = std::stod(source, &used);
    if (used != source.size()) throw std::invalid_argument(source);
  } catch (const std::exception&) {
    throw UsageError("budget is not a number: '" + source + "'");
  }
  if (v < 1) throw UsageError("budget must be at least 1");
  return static_cast<long long>(v);
}

Json padic_json(const PAdicNumber& a) {
  Json j;
  j["p"] = a.prime();
  if (a.is_zero()) {
    j["val"] = nullptr;
  } else {
    j["val"] = a.valuation();
  }
  j["digits"] = a.digits();
  j["prec"] = a.aprec();
  return j;
}

Json value_json(const ZetaValue& v) {
  Json j;
  j["value"] = padic_json(v.value);
  j["strategy"] = v.strategy;
  j["terms"] = v.terms;
  j["guaranteed_prec"] = v.guaranteed_prec;
  return j;
}

class Emitter {
 public:
  Emitter(const Config& cfg, std::ostream& out) : json_(cfg.format == "json"), out_(out) {}

  void value(const std::string& command, const ZetaValue& v) {
    if (json_) {
      Json j{{"schema", 1}, {"command", command}};
      j.update(value_json(v));
      out_ << j.dump() << "\n";
      return;
    }
    out_ << "value: " << to_string(v.value) << "\n"
         << "strategy: " << v.strategy << "\n"
         << "terms: " << v.terms << "\n"
         << "guaranteed_prec: " << v.guaranteed_prec << "\n";
  }

  void padic(const std::string& command, const PAdicNumber& v) {
    if (json_) {
      out_ << Json{{"schema", 1}, {"command", command}, {"value", padic_json(v)}}.dump() << "\n";
      return;
    }
    out_ << "value: " << to_string(v) << "\n";
  }

  bool json() const { return json_; }
  std::ostream& out() { return out_; }

 private:
  bool json_;
  std::ostream& out_;
};

struct PointArgs {
  std::string s = "0";
  std::string x;
  std::string omega;
};

void add_point(CLI::App* cmd, PointArgs& a, bool with_s) {
  if (with_s) cmd->add_option("--s", a.s, "exponent s in Z_p (integer or a/b)");
  cmd->add_option("--x", a.x, "point x as a/b")->required();
  cmd->add_option("--omega", a.omega, "comma-separated parameters omega_1,...,omega_N");
}

ZetaRequest zeta_request(const Config& cfg, const PointArgs& a) {
  ZetaRequest r;
  r.p = cfg.p;
  r.prec = cfg.prec;
  r.s = parse_rational(a.s);
  r.x = parse_rational(a.x);
  r.omega = parse_list(a.omega);
  r.guard = cfg.guard;
  r.kcap = cfg.kcap;
  r.budget = parse_budget(cfg.budget);
  return r;
}

LogGammaRequest gamma_request(const Config& cfg, const PointArgs& a) {
  LogGammaRequest r;
  r.p = cfg.p;
  r.prec = cfg.prec;
  r.x = parse_rational(a.x);
  r.omega = parse_list(a.omega);
  r.guard = cfg.guard;
  r.kcap = cfg.kcap;
  r.budget = parse_budget(cfg.budget);
  return r;
}

void validate_config(const Config& cfg) {
  if (!is_odd_prime(cfg.p)) throw UsageError("--p must be an odd prime, got " + std::to_string(cfg.p));
  if (cfg.prec < 1) throw UsageError("--prec must be at least 1");
  if (cfg.guard < 0) throw UsageError("--guard must be nonnegative");
  if (cfg.kcap < 1) throw UsageError("--kcap must be at least 1");
  parse_budget(cfg.budget);
}

Json report_json(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"name", r.name}, {"params", params}, {"exact", r.exact}, {"pass", r.pass}};
  if (!r.exact) {
    j["agreement"] = r.agreement;
    j["required"] = r.required;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string report_line(const IdentityReport& r) {
  std::ostringstream line;
  line << (r.pass ? "PASS " : "FAIL ") << r.name;
  for (const auto& [k, v] : r.params) line << " " << k << "=" << v;
  if (r.exact) {
    line << " exact";
  } else {
    line << " agreement=" << r.agreement << "/" << r.required;
  }
  if (!r.note.empty()) line << " (" << r.note << ")";
  return line.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate p-adic Euler zeta and Log Gamma functions, export Euler tables, run identity checks",
              "padic-euler"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--p", cfg.p, "odd prime")->capture_default_str();
  app.add_option("--prec", cfg.prec, "absolute precision M")->capture_default_str();
  app.add_option("--guard", cfg.guard, "guard digits G")->capture_default_str();
  CLI::Option* budget_opt = app.add_option("--budget", cfg.budget, "term budget (PADIC_EULER_BUDGET overrides)");
  app.add_option("--kcap", cfg.kcap, "largest reduction exponent k")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized identity instances")->capture_default_str();

  PointArgs zeta_args;
  std::string zeta_strategy = "auto";
  CLI::App* zeta_cmd = app.add_subcommand("zeta", "p-adic multiple Euler zeta value");
  add_point(zeta_cmd, zeta_args, true);
  zeta_cmd->add_option("--strategy", zeta_strategy, "auto | series | reduce(k)")->capture_default_str();

  PointArgs star_args;
  CLI::App* star_cmd = app.add_subcommand("zeta-star", "starred zeta for x in Lambda");
  add_point(star_cmd, star_args, true);

  PointArgs gamma_args;
  std::string gamma_strategy = "auto";
  long gamma_level = 3;
  CLI::App* gamma_cmd = app.add_subcommand("loggamma", "multiple Diamond-Euler Log Gamma value");
  add_point(gamma_cmd, gamma_args, false);
  gamma_cmd->add_option("--strategy", gamma_strategy, "auto | stirling | integral_oracle | reduce(k)")
      ->capture_default_str();
  gamma_cmd->add_option("--level", gamma_level, "truncation level for integral_oracle")->capture_default_str();

  PointArgs gstar_args;
  CLI::App* gstar_cmd = app.add_subcommand("loggamma-star", "starred Log Gamma for x in Lambda");
  add_point(gstar_cmd, gstar_args, false);

  PointArgs psi_args;
  long psi_k = 1;
  CLI::App* psi_cmd = app.add_subcommand("psi", "k-th derivative of Log Gamma");
  add_point(psi_cmd, psi_args, false);
  psi_cmd->add_option("--k", psi_k, "derivative order k >= 1")->capture_default_str();

  std::string poly_omega;
  std::string poly_x = "0";
  long poly_order = -1;
  long poly_n = 0;
  bool poly_table = false;
  CLI::App* poly_cmd = app.add_subcommand("euler-poly", "higher-order Euler polynomial E_{N,n}(x; omega)");
  poly_cmd->add_option("--N", poly_order, "order N (must match the omega count)");
  poly_cmd->add_option("--omega", poly_omega, "comma-separated parameters");
  poly_cmd->add_option("--n", poly_n, "degree n")->capture_default_str();
  poly_cmd->add_option("--x", poly_x, "point x as a/b")->capture_default_str();
  poly_cmd->add_flag("--table", poly_table, "also print E_{N,k}(0; omega) for k <= n");

  std::string teich_x;
  CLI::App* teich_cmd = app.add_subcommand("teichmuller", "Teichmuller representative of a unit");
  teich_cmd->add_option("--x", teich_x, "unit x as a/b")->required();

  PointArgs int_args;
  std::string int_kind = "poly";
  long int_level = 3;
  long int_n = 0;
  bool int_starred = false;
  CLI::App* int_cmd = app.add_subcommand("integrate", "numeric fermionic integral");
  add_point(int_cmd, int_args, true);
  int_cmd->add_option("--kind", int_kind, "integrand kind")
      ->check(CLI::IsMember({"poly", "log", "xlogx", "angle"}))
      ->capture_default_str();
  int_cmd->add_option("--level", int_level, "truncation level L")->capture_default_str();
  int_cmd->add_option("--n", int_n, "degree for --kind poly")->capture_default_str();
  int_cmd->add_flag("--starred", int_starred, "zero the integrand where |x + omega.t| < ||omega||");

  std::string suite = "all";
  long instances = 3;
  CLI::App* check_cmd = app.add_subcommand("check", "run the identity suite");
  check_cmd->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"all", "padic", "projection", "euler", "fermionic", "zeta", "gamma"}))
      ->capture_default_str();
  check_cmd->add_option("--instances", instances, "random instances per identity")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    validate_config(cfg);
    Emitter emit(cfg, out);

    if (zeta_cmd->parsed()) {
      ZetaRequest r = zeta_request(cfg, zeta_args);
      try {
        r.strategy = Strategy::parse(zeta_strategy);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      emit.value("zeta", zeta(r));
    } else if (star_cmd->parsed()) {
      emit.value("zeta-star", zeta_star(zeta_request(cfg, star_args)));
    } else if (gamma_cmd->parsed()) {
      LogGammaRequest r = gamma_request(cfg, gamma_args);
      try {
        r.strategy = GammaStrategy::parse(gamma_strategy);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      r.level = gamma_level;
      emit.value("loggamma", log_gamma(r));
    } else if (gstar_cmd->parsed()) {
      emit.value("loggamma-star", log_gamma_star(gamma_request(cfg, gstar_args)));
    } else if (psi_cmd->parsed()) {
      if (psi_k < 1) throw UsageError("--k must be at least 1");
      emit.padic("psi", psi(psi_k, gamma_request(cfg, psi_args)));
    } else if (poly_cmd->parsed()) {
      const std::vector<Rational> omega = parse_list(poly_omega);
      if (poly_order >= 0 && poly_order != static_cast<long>(omega.size())) {
        throw UsageError("--N " + std::to_string(poly_order) + " does not match " + std::to_string(omega.size()) +
                         " omega components");
      }
      if (poly_n < 0) throw UsageError("--n must be nonnegative");
      const EulerTable table = build_table(omega, poly_n);
      const Rational value = euler_poly(table, poly_n, parse_rational(poly_x));
      if (emit.json()) {
        Json j{{"schema", 1}, {"command", "euler-poly"}, {"N", omega.size()}, {"n", poly_n}, {"value", value.get_str()}};
        if (poly_table) j["table"] = Json::parse(table_to_json(table));
        out << j.dump() << "\n";
      } else {
        out << value.get_str() << "\n";
        if (poly_table) out << table_to_json(table) << "\n";
      }
    } else if (teich_cmd->parsed()) {
      emit.padic("teichmuller", teichmuller(PAdicNumber::from_rational(parse_rational(teich_x), cfg.p, cfg.prec)));
    } else if (int_cmd->parsed()) {
      const Rational x = parse_rational(int_args.x);
      const std::vector<Rational> omega = parse_list(int_args.omega);
      IntegrandSpec spec;
      if (int_kind == "poly") {
        if (int_n < 0) throw UsageError("--n must be nonnegative");
        spec = IntegrandSpec::polynomial(int_n, x, omega);
      } else if (int_kind == "log") {
        spec = IntegrandSpec::log_shift(x, omega);
      } else if (int_kind == "xlogx") {
        spec = IntegrandSpec::xlogx_shift(x, omega);
      } else {
        const Rational s = parse_rational(int_args.s);
        require_integral_exponent(s, cfg.p);
        spec = IntegrandSpec::angle_power(x, omega, s);
      }
      spec.starred = int_starred;
      const long long budget =
          budget_opt->count() > 0 || std::getenv("PADIC_EULER_BUDGET") != nullptr ? parse_budget(cfg.budget)
                                                                                  : kDefaultNumericBudget;
      const NumericIntegral r = fermionic_integral_numeric(spec, cfg.p, int_level, cfg.prec, budget, cfg.guard);
      const PAdicNumber stable = r.value.truncated(r.stabilized);
      if (emit.json()) {
        out << Json{{"schema", 1},         {"command", "integrate"},     {"value", padic_json(stable)},
                    {"partial_sum", padic_json(r.value)}, {"level", r.level}, {"stabilized", r.stabilized},
                    {"terms", r.terms}}
                   .dump()
            << "\n";
      } else {
        out << "value: " << to_string(stable) << "\n"
            << "partial_sum: " << to_string(r.value) << "\n"
            << "level: " << r.level << "\n"
            << "stabilized: " << r.stabilized << "\n"
            << "terms: " << r.terms << "\n";
      }
    } else if (check_cmd->parsed()) {
      CheckConfig cc;
      cc.p = cfg.p;
      cc.prec = cfg.prec;
      cc.guard = cfg.guard;
      cc.budget = parse_budget(cfg.budget);
      cc.kcap = cfg.kcap;
      cc.seed = cfg.seed;
      cc.instances = instances;
      const std::vector<IdentityReport> reports = run_suite(suite, cc);
      long failed = 0;
      for (const IdentityReport& r : reports) failed += r.pass ? 0 : 1;
      if (emit.json()) {
        Json list = Json::array();
        for (const IdentityReport& r : reports) list.push_back(report_json(r));
        out << Json{{"schema", 1},
                    {"command", "check"},
                    {"suite", suite},
                    {"p", cfg.p},
                    {"prec", cfg.prec},
                    {"seed", cfg.seed},
                    {"instances", instances},
                    {"reports", list},
                    {"total", reports.size()},
                    {"failed", failed}}
                   .dump()
            << "\n";
      } else {
        for (const IdentityReport& r : reports) out << report_line(r) << "\n";
        out << reports.size() - failed << "/" << reports.size() << " passed\n";
      }
      return failed == 0 ? kExitOk : kExitCheckFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathPrecondition& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace padic_euler

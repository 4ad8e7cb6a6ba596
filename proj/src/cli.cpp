#include "bss/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bss/analysis.hpp"
#include "bss/csv.hpp"
#include "bss/errors.hpp"
#include "bss/exact.hpp"
#include "bss/hybrid.hpp"
#include "bss/kernel.hpp"
#include "bss/parallel.hpp"
#include "bss/rbergomi.hpp"
#include "bss/trajectory_io.hpp"

namespace bss::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const std::string t = trim(text);
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw std::invalid_argument(key + ": expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const std::string t = trim(text);
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw std::invalid_argument(key + ": expected true or false, got '" + text + "'");
}

struct Setting {
  const char* name;
  const char* help;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

Setting number(const char* name, const char* help, double RunConfig::*field) {
  return {name, help, [field](const RunConfig& c) { return format_double(c.*field); },
          [name, field](RunConfig& c, const std::string& v) { c.*field = to_double(name, v); }};
}

Setting count(const char* name, const char* help, std::size_t RunConfig::*field) {
  return {name, help, [field](const RunConfig& c) { return std::to_string(c.*field); },
          [name, field](RunConfig& c, const std::string& v) { c.*field = to_unsigned(name, v); }};
}

Setting text(const char* name, const char* help, std::string RunConfig::*field) {
  return {name, help, [field](const RunConfig& c) { return c.*field; },
          [field](RunConfig& c, const std::string& v) { c.*field = trim(v); }};
}

Setting flag(const char* name, const char* help, bool RunConfig::*field) {
  return {name, help, [field](const RunConfig& c) { return std::string(c.*field ? "true" : "false"); },
          [name, field](RunConfig& c, const std::string& v) { c.*field = to_bool(name, v); }};
}

const std::vector<Setting>& settings() {
  static const std::vector<Setting> table = {
      {"command", "simulate, covmat, jtable, mse, estimate or smile",
       [](const RunConfig& c) { return std::string(to_string(c.command)); },
       [](RunConfig& c, const std::string& v) { c.command = parse_command(trim(v)); }},
      text("kernel", "kernel family: gamma, powerlaw or scaledpower", &RunConfig::kernel),
      number("alpha", "roughness index", &RunConfig::alpha),
      number("lambda", "gamma kernel decay rate", &RunConfig::lambda),
      number("beta", "power-law kernel tail exponent", &RunConfig::beta),
      number("scale", "scaled power kernel constant", &RunConfig::scale),
      count("n", "grid resolution (steps per unit time; steps for smile)", &RunConfig::n),
      number("T", "time horizon or option maturity", &RunConfig::horizon),
      text("kappa", "number of exact power cells (list for tables)", &RunConfig::kappa),
      text("b", "evaluation points: forward or optimal (list for tables)", &RunConfig::rule),
      number("gamma", "truncation exponent, N = floor(n^(1+gamma))", &RunConfig::gamma),
      text("process", "simulate target: bss, tbss or exact", &RunConfig::process),
      text("alpha-grid", "alpha values, start:stop:step or a comma list", &RunConfig::alpha_grid),
      count("N", "number of series terms in the MSE constant", &RunConfig::j_terms),
      text("resolutions", "grid resolutions for the mse table", &RunConfig::resolutions),
      flag("truncated", "mse table for the truncated process", &RunConfig::truncated),
      count("m", "observations used by the roughness estimator", &RunConfig::m),
      text("s", "subsampling steps (list)", &RunConfig::subsample),
      count("reps", "estimator replications", &RunConfig::reps),
      text("source", "estimator paths: exact, hybrid or riemann", &RunConfig::source),
      number("s0", "initial spot", &RunConfig::s0),
      number("xi", "flat forward variance", &RunConfig::xi),
      number("eta", "volatility of volatility", &RunConfig::eta),
      number("rho", "spot-volatility correlation", &RunConfig::rho),
      count("paths", "Monte Carlo paths", &RunConfig::paths),
      text("scheme", "hybrid1, hybrid2, riemann-fwd, riemann-opt or exact", &RunConfig::scheme),
      text("k-grid", "log-strikes, start:stop:step or a comma list", &RunConfig::k_grid),
      flag("antithetic", "negate every Gaussian draw", &RunConfig::antithetic),
      {"seed", "master seed, or 'random'", [](const RunConfig& c) { return std::to_string(c.seed); },
       [](RunConfig& c, const std::string& v) {
         if (trim(v) == "random") {
           std::random_device rd;
           c.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
         } else {
           c.seed = to_unsigned("seed", v);
         }
       }},
      text("out", "output file (default: standard output)", &RunConfig::out),
      {"format", "csv or raw (raw only for simulate)",
       [](const RunConfig& c) { return std::string(c.format == OutputFormat::Raw ? "raw" : "csv"); },
       [](RunConfig& c, const std::string& v) {
         const std::string t = trim(v);
         if (t == "csv") c.format = OutputFormat::Csv;
         else if (t == "raw") c.format = OutputFormat::Raw;
         else throw std::invalid_argument("format: expected csv or raw, got '" + v + "'");
       }},
  };
  return table;
}

const Setting& find_setting(const std::string& key) {
  for (const Setting& s : settings()) {
    if (key == s.name) return s;
  }
  throw std::invalid_argument("unknown setting '" + key + "'");
}

Kernel make_kernel(const RunConfig& c, double alpha) {
  switch (parse_kernel_family(c.kernel)) {
    case KernelFamily::Gamma:
      return Kernel::gamma(alpha, c.lambda);
    case KernelFamily::PowerLaw:
      return Kernel::power_law(alpha, c.beta);
    case KernelFamily::ScaledPower:
      return Kernel::scaled_power(alpha, c.scale);
  }
  throw std::invalid_argument("kernel: unsupported family");
}

std::vector<double> alphas(const RunConfig& c) {
  return c.alpha_grid.empty() ? std::vector<double>{c.alpha} : parse_grid(c.alpha_grid);
}

std::vector<EvaluationRule> rules(const RunConfig& c) {
  std::vector<EvaluationRule> out;
  std::stringstream ss(c.rule);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_evaluation_rule(trim(item)));
  if (out.empty()) throw std::invalid_argument("b: empty list");
  return out;
}

std::size_t single_kappa(const RunConfig& c) {
  const auto list = parse_index_list(c.kappa);
  if (list.size() != 1) throw std::invalid_argument("kappa: this command takes a single value");
  return list.front();
}

EvaluationRule single_rule(const RunConfig& c) {
  const auto list = rules(c);
  if (list.size() != 1) throw std::invalid_argument("b: this command takes a single value");
  return list.front();
}

// Opens config.out when set, otherwise hands out the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, bool binary) : path_(path), stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, binary ? std::ios::out | std::ios::binary | std::ios::trunc : std::ios::out | std::ios::trunc);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write to '" + where() + "' failed");
  }

  std::string where() const { return path_.empty() ? "stdout" : path_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

std::string csv_header(const RunConfig& c) { return "effective config\n" + to_key_value(c); }

void run_simulate(const RunConfig& c, Sink& sink, std::ostream& log) {
  const Kernel kernel = make_kernel(c, c.alpha);
  const std::size_t kappa = single_kappa(c);
  const EvaluationRule rule = single_rule(c);
  Trajectory path;
  if (c.process == "bss") {
    path = simulate_bss(HybridPlan::bss(kernel, c.n, c.horizon, kappa, rule, c.gamma), c.seed);
  } else if (c.process == "tbss") {
    const auto steps = static_cast<std::size_t>(std::floor(static_cast<double>(c.n) * c.horizon));
    if (steps == 0) throw std::invalid_argument("simulate: n T must be at least 1");
    path = simulate_tbss(
        HybridPlan::tbss(kernel, steps, static_cast<double>(steps) / static_cast<double>(c.n), kappa, rule),
        c.seed);
  } else if (c.process == "exact") {
    if (kernel.family() == KernelFamily::ScaledPower) {
      path = exact_tbss_power(c.alpha, c.scale, c.n, c.horizon, c.seed);
    } else {
      path = exact_bss(ExactPlan{kernel, c.n, c.horizon}, c.seed);
    }
  } else {
    throw std::invalid_argument("process: expected bss, tbss or exact, got '" + c.process + "'");
  }
  if (c.format == OutputFormat::Raw) {
    write_trajectory_raw(sink.stream(), path);
  } else {
    write_trajectory_csv(sink.stream(), path, csv_header(c));
  }
  sink.finish();
  log << "simulate: " << path.values.size() << " points (" << to_string(path.label) << ", " << kernel.describe()
      << ") seed=" << c.seed << " -> " << sink.where() << '\n';
}

void run_covmat(const RunConfig& c, Sink& sink, std::ostream& log) {
  const std::size_t kappa = single_kappa(c);
  const InnovationCovariance cov = innovation_covariance(c.alpha, c.n, kappa);
  std::ostream& out = sink.stream();
  write_comment(out, csv_header(c));
  out << "row,col,sigma,cholesky\n";
  for (Eigen::Index i = 0; i < cov.matrix().rows(); ++i) {
    for (Eigen::Index j = 0; j < cov.matrix().cols(); ++j) {
      out << i << ',' << j << ',' << format_double(cov.matrix()(i, j)) << ',' << format_double(cov.cholesky()(i, j))
          << '\n';
    }
  }
  sink.finish();
  log << "covmat: " << cov.dimension() << "x" << cov.dimension() << " for alpha=" << c.alpha << " n=" << c.n
      << " seed=" << c.seed << " -> " << sink.where() << '\n';
}

void run_jtable(const RunConfig& c, Sink& sink, std::ostream& log) {
  const auto kappas = parse_index_list(c.kappa);
  const auto rule_list = rules(c);
  const auto alpha_list = alphas(c);
  const std::size_t max_kappa = *std::max_element(kappas.begin(), kappas.end());

  struct Row {
    std::vector<std::vector<double>> tables;
    double reference = 0.0;
  };
  std::vector<Row> rows(alpha_list.size());
  parallel_for(alpha_list.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (EvaluationRule r : rule_list) rows[i].tables.push_back(j_functional_table(alpha_list[i], max_kappa, r, c.j_terms));
      rows[i].reference = j_functional_table(alpha_list[i], 0, EvaluationRule::Forward, c.j_terms)[0];
    }
  });

  std::ostream& out = sink.stream();
  write_comment(out, csv_header(c));
  out << "alpha,kappa,b_rule,N,J,J_tilde,rmse_reduction\n";
  std::size_t count = 0;
  for (std::size_t i = 0; i < alpha_list.size(); ++i) {
    const double ref = std::sqrt(rows[i].reference);
    for (std::size_t r = 0; r < rule_list.size(); ++r) {
      for (std::size_t kappa : kappas) {
        const double j = rows[i].tables[r][kappa];
        out << format_double(alpha_list[i]) << ',' << kappa << ',' << to_string(rule_list[r]) << ',' << c.j_terms
            << ',' << format_double(j) << ',' << format_double(j_tilde(alpha_list[i])) << ','
            << format_double(-(std::sqrt(j) - ref) / ref * 100.0) << '\n';
        ++count;
      }
    }
  }
  sink.finish();
  log << "jtable: " << count << " rows seed=" << c.seed << " -> " << sink.where() << '\n';
}

void run_mse(const RunConfig& c, Sink& sink, std::ostream& log) {
  MseExperiment e;
  for (double a : alphas(c)) e.kernels.push_back(make_kernel(c, a));
  e.kappas = parse_index_list(c.kappa);
  e.rules = rules(c);
  e.resolutions = parse_index_list(c.resolutions);
  e.truncated = c.truncated;
  e.truncation_exponent = c.gamma;
  e.j_terms = c.j_terms;
  const auto rows = run_mse_experiment(e);

  std::ostream& out = sink.stream();
  write_comment(out, csv_header(c));
  out << "alpha,kappa,b_rule,n,analytic,theoretical,ratio\n";
  for (const MseRow& r : rows) {
    out << format_double(r.kernel.alpha()) << ',' << r.kappa << ',' << to_string(r.rule) << ',' << r.n << ','
        << format_double(r.analytic) << ',' << format_double(r.theoretical) << ',' << format_double(r.ratio) << '\n';
  }
  sink.finish();
  log << "mse: " << rows.size() << " rows seed=" << c.seed << " -> " << sink.where() << '\n';
}

void run_estimate(const RunConfig& c, Sink& sink, std::ostream& log) {
  CofExperiment base{make_kernel(c, c.alpha)};
  base.m = c.m;
  base.replications = c.reps;
  base.truncation_exponent = c.gamma;
  base.seed = c.seed;
  if (c.source == "exact") {
    base.source = PathSource::Exact;
  } else if (c.source == "hybrid") {
    base.source = PathSource::Hybrid;
    base.kappa = single_kappa(c);
    base.rule = single_rule(c);
  } else if (c.source == "riemann") {
    base.source = PathSource::Hybrid;
    base.kappa = 0;
    base.rule = EvaluationRule::Forward;
  } else {
    throw std::invalid_argument("source: expected exact, hybrid or riemann, got '" + c.source + "'");
  }

  std::ostream& out = sink.stream();
  write_comment(out, csv_header(c));
  out << "alpha,s,source,kappa,b_rule,m,reps,mean_alpha_hat,bias,stdev\n";
  std::size_t count = 0;
  for (double a : alphas(c)) {
    for (std::size_t s : parse_index_list(c.subsample)) {
      CofExperiment e = base;
      e.kernel = make_kernel(c, a);
      e.s = s;
      const CofSummary summary = run_cof_experiment(e);
      const bool exact = e.source == PathSource::Exact;
      out << format_double(a) << ',' << s << ',' << c.source << ',' << (exact ? std::string() : std::to_string(e.kappa))
          << ',' << (exact ? std::string() : std::string(to_string(e.rule))) << ',' << e.m << ',' << e.replications
          << ',' << format_double(summary.mean_alpha_hat) << ',' << format_double(summary.bias) << ','
          << format_double(summary.stdev) << '\n';
      ++count;
    }
  }
  sink.finish();
  log << "estimate: " << count << " rows seed=" << c.seed << " -> " << sink.where() << '\n';
}

void run_smile(const RunConfig& c, Sink& sink, std::ostream& log) {
  RBergomiParams p;
  p.s0 = c.s0;
  p.xi = c.xi;
  p.eta = c.eta;
  p.alpha = c.alpha;
  p.rho = c.rho;
  p.maturity = c.horizon;
  p.validate();
  const PricingScheme scheme = parse_pricing_scheme(c.scheme);
  const std::vector<double> strikes = c.k_grid.empty() ? default_log_strikes(c.horizon) : parse_grid(c.k_grid);
  const auto rows = smile(p, c.n, c.paths, scheme, strikes, c.seed, PathOptions{c.antithetic});

  std::ostream& out = sink.stream();
  write_comment(out, csv_header(c));
  out << "k,K,price,stderr,implied_vol,iv_stderr,scheme,T,n,paths,seed\n";
  for (const SmileRow& r : rows) {
    out << format_double(r.log_strike) << ',' << format_double(r.strike) << ',' << format_double(r.price) << ','
        << format_double(r.mc_stderr) << ',' << (r.implied_vol ? format_double(*r.implied_vol) : std::string()) << ','
        << (r.iv_stderr ? format_double(*r.iv_stderr) : std::string()) << ',' << to_string(scheme) << ','
        << format_double(c.horizon) << ',' << c.n << ',' << c.paths << ',' << c.seed << '\n';
  }
  sink.finish();
  log << "smile: " << rows.size() << " strikes, " << c.paths << " paths (" << to_string(scheme)
      << ") seed=" << c.seed << " -> " << sink.where() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Simulate:
      return "simulate";
    case Command::Covmat:
      return "covmat";
    case Command::Jtable:
      return "jtable";
    case Command::Mse:
      return "mse";
    case Command::Estimate:
      return "estimate";
    case Command::Smile:
      return "smile";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::Simulate, Command::Covmat, Command::Jtable, Command::Mse, Command::Estimate,
                    Command::Smile}) {
    if (name == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string to_key_value(const RunConfig& config) {
  std::string out;
  for (const Setting& s : settings()) {
    out += s.name;
    out += '=';
    out += s.get(config);
    out += '\n';
  }
  return out;
}

RunConfig parse_key_value(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    find_setting(trim(line.substr(0, eq))).set(base, line.substr(eq + 1));
  }
  return base;
}

std::vector<std::string> setting_names() {
  std::vector<std::string> names;
  for (const Setting& s : settings()) names.emplace_back(s.name);
  return names;
}

std::vector<double> parse_grid(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("grid: empty");
  std::vector<double> out;
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("grid: expected start:stop:step, got '" + t + "'");
    const double start = to_double("grid", parts[0]);
    const double stop = to_double("grid", parts[1]);
    const double step = to_double("grid", parts[2]);
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("grid: need step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
    if (count > 10'000'000) throw std::invalid_argument("grid: too many points");
    // Points are start + i step snapped to 1e-12, so 0.21 prints as 0.21.
    for (std::size_t i = 0; i <= count; ++i) {
      out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double("grid", item));
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_unsigned("list", item));
  if (out.empty()) throw std::invalid_argument("list: empty");
  return out;
}

void execute(const RunConfig& config, std::ostream& data, std::ostream& log) {
  if (config.format == OutputFormat::Raw && config.command != Command::Simulate) {
    throw std::invalid_argument("format: raw output is only available for simulate");
  }
  Sink sink(config.out, data, config.format == OutputFormat::Raw);
  switch (config.command) {
    case Command::Simulate:
      return run_simulate(config, sink, log);
    case Command::Covmat:
      return run_covmat(config, sink, log);
    case Command::Jtable:
      return run_jtable(config, sink, log);
    case Command::Mse:
      return run_mse(config, sink, log);
    case Command::Estimate:
      return run_estimate(config, sink, log);
    case Command::Smile:
      return run_smile(config, sink, log);
  }
}

int run(const std::vector<std::string>& args, std::ostream& data, std::ostream& log) {
  CLI::App app{"Simulation and analysis of Brownian semistationary processes", "bss"};
  std::string command;
  std::string config_path;
  std::size_t threads = 0;
  std::map<std::string, std::string> given;

  app.add_option("command", command, "simulate, covmat, jtable, mse, estimate or smile");
  app.add_option("--config", config_path, "key=value file applied before the flags");
  app.add_option("--threads", threads, "worker threads (0: all cores)");
  for (const Setting& s : settings()) {
    if (std::string_view(s.name) == "command") continue;
    app.add_option(std::string("--") + s.name, given[s.name], s.help);
  }

  // "--flag value" becomes "--flag=value" so values such as -0.49:0.49:0.02
  // are never mistaken for options.
  std::vector<std::string> argv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size() && a != "--help") {
      argv.push_back(a + "=" + args[++i]);
    } else {
      argv.push_back(a);
    }
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, data, log);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = parse_key_value(read_file(config_path));
    if (!command.empty()) config.command = parse_command(command);
    for (const Setting& s : settings()) {
      if (std::string_view(s.name) == "command") continue;
      if (app.get_option(std::string("--") + s.name)->count() > 0) s.set(config, given[s.name]);
    }
    if (command.empty() && config_path.empty()) throw std::invalid_argument("no command given (see --help)");
    set_thread_count(threads);
    execute(config, data, log);
  } catch (const IoError& e) {
    log << "error[io]: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    log << "error[io]: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    log << "error[numerical]: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    log << "error[config]: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    log << "error[config]: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    log << "error[numerical]: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool to_file = [&] {
    for (const auto& a : args) {
      if (a.rfind("--out", 0) == 0) return true;
    }
    return false;
  }();
  // Summary goes to stdout when the data is written to a file.
  return run(args, std::cout, to_file ? std::cout : std::cerr);
}

}  // namespace bss::cli

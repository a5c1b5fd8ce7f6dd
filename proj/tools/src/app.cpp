#include "ubseq_cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ubseq/distribution.hpp"
#include "ubseq/dynsys.hpp"
#include "ubseq/ergodic.hpp"
#include "ubseq/error.hpp"
#include "ubseq/indicator.hpp"
#include "ubseq/sequence.hpp"
#include "ubseq/series.hpp"
#include "ubseq/sieve.hpp"
#include "ubseq/sieve_cache.hpp"
#include "ubseq/theta.hpp"
#include "ubseq/weyl.hpp"

namespace ubseq::cli {

namespace {

const std::vector<std::string> kCommands{"sieve",    "seq",      "weyl",   "density", "dynsys-probe",
                                         "converge", "disjoint", "panel",  "report"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s;
}

/// Everything an experiment needs, parsed and validated before any work starts.
struct Resolved {
  explicit Resolved(const ExperimentConfig& c) : cfg(c) {}

  const ExperimentConfig& cfg;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> checkpoints;
  std::vector<Theta> thetas;
  std::optional<SequenceSpec> sequence;
  std::optional<FlowDescriptor> flow;
  std::optional<Observable> observable;
  std::optional<FlowPoint> start;
  std::optional<IndicatorName> mask;
  Parallelism par;
};

std::string require(const std::string& value, const char* flag, const std::string& command) {
  if (value.empty()) throw ValidationError(command + " needs " + flag);
  return value;
}

Resolved resolve(const ExperimentConfig& cfg) {
  Resolved r(cfg);
  r.par.threads = cfg.threads;
  r.N = parse_count(cfg.max_n);
  if (r.N < 2) throw ValidationError("--max must be at least 2");
  r.checkpoints = parse_checkpoints(cfg.checkpoints, r.N);
  for (const auto& t : cfg.thetas) r.thetas.push_back(theta_parse(t));
  if (!cfg.sequence.empty()) r.sequence = parse_sequence_spec(cfg.sequence);
  if (!cfg.flow.empty()) r.flow = parse_flow(cfg.flow);
  if (!cfg.observable.empty()) r.observable = parse_observable(cfg.observable);
  if (r.flow) r.start = parse_point(*r.flow, cfg.start);
  if (r.flow && r.observable) check_compatible(*r.flow, *r.observable);
  if (!cfg.mask.empty()) r.mask = parse_indicator_name(cfg.mask);
  if (!cfg.weights.empty()) {
    static const std::vector<std::string> known{"tm", "rs", "ef", "of", "lambda", "liouville", "mobius", "mu", "ones"};
    std::string lower;
    for (char c : cfg.weights) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (std::find(known.begin(), known.end(), lower) == known.end()) {
      throw ValidationError("unknown weight sequence '" + cfg.weights + "'");
    }
  }
  if (!(cfg.delta > 0.0)) throw ValidationError("--delta must be positive");
  if (!(cfg.epsilon > 0.0)) throw ValidationError("--epsilon must be positive");
  if (!(cfg.tolerance >= 0.0)) throw ValidationError("--tol must be non-negative");
  if (cfg.modulus == 1) throw ValidationError("--modulus must be at least 2");
  if (cfg.residue && cfg.modulus != 0 && *cfg.residue >= cfg.modulus) {
    throw ValidationError("--residue must be below --modulus");
  }
  const auto& c = cfg.command;
  if (c == "dynsys-probe" || c == "converge" || c == "disjoint") require(cfg.flow, "--flow", c);
  if (c == "converge" || c == "disjoint") require(cfg.observable, "--obs", c);
  if (c == "disjoint") require(cfg.weights, "--weights", c);
  return r;
}

std::string header(const Resolved& r) {
  const auto& c = r.cfg;
  std::string h = "# ubseq command=" + c.command + " max=" + std::to_string(r.N) +
                  " checkpoints=" + join(r.checkpoints);
  std::vector<std::string> thetas;
  for (const auto& t : r.thetas) thetas.push_back(t.to_string());
  h += " theta=" + join(thetas);
  h += " flow=" + (r.flow ? to_string(*r.flow) : std::string());
  h += " obs=" + (r.observable ? to_string(*r.observable) : std::string());
  h += " start=" + (r.start ? to_string(*r.start) : std::string());
  h += " seq=" + (r.sequence ? to_string(*r.sequence) : std::string());
  h += " mask=" + (r.mask ? std::string(to_string(*r.mask)) : std::string());
  h += " weights=" + c.weights;
  h += " modulus=" + std::to_string(c.modulus);
  h += " residue=" + (c.residue ? std::to_string(*c.residue) : std::string());
  h += " delta=" + num(c.delta) + " epsilon=" + num(c.epsilon) + " pairs=" + std::to_string(c.pairs);
  h += " seed=" + std::to_string(c.seed);
  h += " assert=" + std::string(c.assert_result ? "1" : "0");
  h += " target=" + (c.target ? num(*c.target) : std::string());
  h += " tol=" + num(c.tolerance);
  return h + "\n";
}

class Experiment {
 public:
  Experiment(const Resolved& r, std::ostream& err) : r_(r), err_(err) {}

  const ArithmeticFunctionTable& table(std::uint64_t size) {
    size = std::max<std::uint64_t>(size, 2);
    if (!table_ || table_->max_n() < size) {
      table_ = r_.cfg.cache.empty() ? ArithmeticFunctionTable::build(size)
                                    : load_or_build_sieve(r_.cfg.cache, size, err_);
    }
    return *table_;
  }

  /// Table large enough for the first N terms of `spec` and for masks over [1, N].
  const ArithmeticFunctionTable& table_for(const SequenceSpec& spec) {
    return table(std::max(suggested_sieve_size(spec, r_.N), r_.N));
  }

  std::vector<std::uint64_t> values(const SequenceSpec& spec) {
    return sequence_values(spec, r_.N, table_for(spec));
  }

 private:
  const Resolved& r_;
  std::ostream& err_;
  std::optional<ArithmeticFunctionTable> table_;
};

struct Outcome {
  std::string csv;
  bool assertion_failed = false;
};

bool within(double value, double target, double tol) { return std::fabs(value - target) <= tol; }

SequenceSpec sequence_or(const Resolved& r, std::string_view fallback) {
  return r.sequence ? *r.sequence : parse_sequence_spec(fallback);
}

Outcome cmd_sieve(const Resolved& r, Experiment& ex, std::ostream& err) {
  const auto& t = ex.table(r.N);
  if (!r.cfg.output.empty()) {
    write_sieve_cache(r.cfg.output, t);
    err << "wrote sieve cache for 1.." << r.N << " to " << r.cfg.output << "\n";
  }
  Outcome o;
  o.csv = header(r) + "N,squarefree,primes,mertens,liouville\n";
  std::uint64_t sf = 0, primes = 0;
  std::int64_t mertens = 0, liouville = 0;
  std::uint64_t n = 0;
  for (const std::uint64_t cp : r.checkpoints) {
    for (; n < cp; ++n) {
      sf += t.squarefree(n + 1);
      primes += t.is_prime(n + 1);
      mertens += t.mobius(n + 1);
      liouville += t.liouville(n + 1);
    }
    o.csv += std::to_string(cp) + "," + std::to_string(sf) + "," + std::to_string(primes) + "," +
             std::to_string(mertens) + "," + std::to_string(liouville) + "\n";
  }
  return o;
}

Outcome cmd_seq(const Resolved& r, Experiment& ex) {
  const auto values = ex.values(sequence_or(r, "omega"));
  Outcome o;
  o.csv = header(r) + "n,a_n\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    o.csv += std::to_string(i + 1) + "," + std::to_string(values[i]) + "\n";
  }
  return o;
}

Outcome cmd_weyl(const Resolved& r, Experiment& ex) {
  Outcome o;
  o.csv = header(r);
  if (!r.cfg.weights.empty()) {
    const auto weights = weight_values(r.cfg.weights, r.N, ex.table(r.N));
    const auto grid = r.thetas.empty() ? default_theta_grid() : r.thetas;
    const auto profile = sup_profile(weights, grid, r.checkpoints, r.par);
    o.csv += "N,sup,sup_over_sqrt_n,argmax\n";
    for (const auto& p : profile) {
      o.csv += std::to_string(p.n) + "," + num(p.sup) + "," +
               num(p.sup / std::sqrt(static_cast<double>(p.n))) + "," + p.argmax.to_string() + "\n";
    }
    const auto& last = profile.back();
    const double ratio = last.sup / std::sqrt(static_cast<double>(last.n));
    o.assertion_failed = ratio > r.cfg.tolerance;
    return o;
  }
  const auto spec = sequence_or(r, "omega");
  const auto values = ex.values(spec);
  const auto thetas = r.thetas.empty() ? std::vector<Theta>{theta_parse("golden")} : r.thetas;
  for (const auto& theta : thetas) {
    const WeylSeries series =
        r.mask ? restricted_weyl_series(values, indicator_for(*r.mask, ex.table_for(spec)), theta,
                                        r.checkpoints, r.par, to_string(spec))
               : weyl_series(values, theta, r.checkpoints, r.par, to_string(spec));
    if (thetas.size() > 1) o.csv += "# theta=" + theta.to_string() + "\n";
    o.csv += "N,re,im,abs\n";
    for (const auto& p : series.checkpoints) {
      o.csv += std::to_string(p.n) + "," + num(p.value.real()) + "," + num(p.value.imag()) + "," +
               num(std::abs(p.value)) + "\n";
    }
    const double last = std::abs(series.checkpoints.back().value);
    if (r.cfg.target ? !within(last, *r.cfg.target, r.cfg.tolerance) : last > r.cfg.tolerance) {
      o.assertion_failed = true;
    }
  }
  return o;
}

Outcome cmd_density(const Resolved& r, Experiment& ex) {
  Outcome o;
  o.csv = header(r);
  const auto spec = sequence_or(r, "sf");
  const auto* subseq = std::get_if<seq::SubseqOf>(&spec);
  double last = 0.0;
  if (r.cfg.modulus >= 2) {
    const auto values = ex.values(spec);
    const auto reports = residue_densities(values, r.cfg.modulus, r.checkpoints);
    o.csv += "N";
    for (std::uint64_t k = 0; k < r.cfg.modulus; ++k) o.csv += ",r" + std::to_string(k);
    o.csv += "\n";
    for (const auto& rep : reports) {
      o.csv += std::to_string(rep.n);
      for (const double d : rep.densities) o.csv += "," + num(d);
      o.csv += "\n";
    }
    last = reports.back().densities[r.cfg.residue.value_or(0)];
  } else if (r.mask) {
    const auto values = ex.values(spec);
    const std::uint64_t top = *std::max_element(values.begin(), values.end());
    const auto set = indicator_for(*r.mask, ex.table(std::max(top, r.N)));
    const auto series = a_density(values, set, r.checkpoints);
    o.csv += "N,value\n";
    for (const auto& p : series.series) o.csv += std::to_string(p.n) + "," + num(p.value) + "\n";
    last = series.series.back().value;
  } else {
    if (!subseq) {
      throw ValidationError("density needs an indicator --seq, a --modulus or a --mask");
    }
    const auto set = indicator_for(subseq->indicator, ex.table(r.N));
    const auto series = densities(set, r.checkpoints);
    o.csv += "N,value\n";
    for (const auto& p : series.series) o.csv += std::to_string(p.n) + "," + num(p.value) + "\n";
    last = series.series.back().value;
  }
  if (r.cfg.assert_result) {
    if (!r.cfg.target) throw ValidationError("density --assert needs --target");
    o.assertion_failed = !within(last, *r.cfg.target, r.cfg.tolerance);
  }
  return o;
}

Outcome cmd_probe(const Resolved& r, Experiment& ex) {
  const auto values = ex.values(sequence_or(r, "n"));
  const ProbeReport p =
      mls_probe(*r.flow, values, r.cfg.delta, r.cfg.epsilon, r.cfg.pairs, r.N, r.cfg.seed, r.par);
  Outcome o;
  o.csv = header(r) + "N,delta,epsilon,pairs,worst_exceptional_density,worst_mean_distance\n";
  o.csv += std::to_string(r.N) + "," + num(p.delta) + "," + num(p.epsilon) + "," +
           std::to_string(p.pairs_tested) + "," + num(p.worst_exceptional_density) + "," +
           num(p.worst_mean_distance) + "\n";
  o.assertion_failed = p.worst_exceptional_density > r.cfg.tolerance;
  return o;
}

Outcome cmd_converge(const Resolved& r, Experiment& ex) {
  const auto spec = sequence_or(r, "omega");
  const auto values = ex.values(spec);
  Outcome o;
  o.csv = header(r);
  AverageSeries series;
  std::optional<IndicatorSequence> mask;
  if (r.mask) {
    mask = indicator_for(*r.mask, ex.table_for(spec));
    series = masked_time_average_series(*r.flow, *r.observable, *r.start, values, *mask,
                                        r.checkpoints, r.par, to_string(spec));
    o.csv += "N,value,conditional_value\n";
    for (const auto& p : series.points) {
      const double hits = static_cast<double>(mask->count_upto(p.n));
      const double conditional = hits == 0 ? 0.0 : p.value * static_cast<double>(p.n) / hits;
      o.csv += std::to_string(p.n) + "," + num(p.value) + "," + num(conditional) + "\n";
    }
  } else {
    series = time_average_series(*r.flow, *r.observable, *r.start, values, r.checkpoints, r.par,
                                 to_string(spec));
    o.csv += "N,value\n";
    for (const auto& p : series.points) o.csv += std::to_string(p.n) + "," + num(p.value) + "\n";
  }
  if (r.cfg.assert_result) {
    if (r.mask && !r.cfg.target) throw ValidationError("masked converge --assert needs --target");
    const double target = r.cfg.target.value_or(space_average(*r.flow, *r.observable));
    o.assertion_failed = convergence_report(series, target).final_residual > r.cfg.tolerance;
  }
  return o;
}

Outcome cmd_disjoint(const Resolved& r, Experiment& ex) {
  const auto weights = weight_values(r.cfg.weights, r.N, ex.table(r.N));
  const auto series = linear_disjointness_series(weights, *r.flow, *r.observable, *r.start,
                                                 r.checkpoints, r.par, r.cfg.weights);
  Outcome o;
  o.csv = header(r) + "N,value\n";
  for (const auto& p : series.points) o.csv += std::to_string(p.n) + "," + num(p.value) + "\n";
  o.assertion_failed = std::fabs(series.points.back().value) > r.cfg.tolerance;
  return o;
}

Outcome cmd_panel(const Resolved& r, Experiment& ex) {
  const auto panel = number_theory_panel(ex.table(r.N), r.checkpoints);
  Outcome o;
  o.csv = header(r) + "N,liouville_mean,mertens_mean,pnt_ratio\n";
  for (const auto& p : panel) {
    o.csv += std::to_string(p.n) + "," + num(p.liouville_mean) + "," + num(p.mertens_mean) + "," +
             num(p.pnt_ratio) + "\n";
  }
  const auto& last = panel.back();
  o.assertion_failed = std::fabs(last.liouville_mean) > r.cfg.tolerance ||
                       std::fabs(last.mertens_mean) > r.cfg.tolerance;
  return o;
}

Outcome cmd_report(const Resolved& r, Experiment& ex) {
  Outcome o;
  o.csv = header(r) + "check,N,value,target,tolerance,pass\n";
  const std::vector<std::uint64_t> at_n{r.N};
  auto row = [&](const std::string& name, double value, double target, double tol) {
    const bool pass = within(value, target, tol);
    o.assertion_failed |= !pass;
    o.csv += name + "," + std::to_string(r.N) + "," + num(value) + "," + num(target) + "," + num(tol) +
             "," + (pass ? "1" : "0") + "\n";
  };
  const auto& t = ex.table(r.N);
  const double six_over_pi2 = 6.0 / (std::numbers::pi * std::numbers::pi);
  row("squarefree_density", densities(indicator_for(IndicatorName::SquareFree, t), at_n).series[0].value,
      six_over_pi2, 1e-3);
  const auto omega = sequence_values(seq::BigOmega{}, r.N, t);
  row("big_omega_even_density", residue_densities(omega, 2, at_n)[0].densities[0], 0.5, 0.005);
  row("weyl_big_omega_golden",
      std::abs(weyl_series(omega, theta_parse("golden"), at_n, r.par).checkpoints[0].value), 0.0, 0.05);
  const auto panel = number_theory_panel(t, at_n)[0];
  row("liouville_mean", panel.liouville_mean, 0.0, 0.002);
  row("mertens_mean", panel.mertens_mean, 0.0, 0.002);
  row("pnt_ratio", panel.pnt_ratio, 1.06, 0.06);
  const FlowDescriptor cyclic = flow::Cyclic{2};
  const Observable state0 = obs::StateIndicator{0};
  row("cyclic_big_omega_average",
      time_average_series(cyclic, state0, default_start(cyclic), omega, at_n, r.par).points[0].value, 0.5,
      0.005);
  const auto small = sequence_values(seq::SmallOmega{}, r.N, t);
  row("cyclic_small_omega_squarefree_average",
      masked_time_average_series(cyclic, state0, default_start(cyclic), small,
                                 indicator_for(IndicatorName::SquareFree, t), at_n, r.par)
          .points[0]
          .value,
      six_over_pi2 / 2.0, 0.01);
  return o;
}

}  // namespace

std::optional<ExperimentConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  ExperimentConfig cfg;
  CLI::App app{"Arithmetic sequences, Weyl sums and time averages along them", "ubseq"};
  app.add_option("command", cfg.command, "sieve | seq | weyl | density | dynsys-probe | converge | disjoint | panel | report")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--max", cfg.max_n, "N, the number of terms or the sieve limit (accepts 1e7)");
  app.add_option("--checkpoints", cfg.checkpoints, "geo:start:ratio:count or a comma list");
  app.add_option("--theta", cfg.thetas, "golden | sqrt2m1 | rat:p/q | fix:<32 hex digits>; repeatable");
  app.add_option("--flow", cfg.flow, "rotation[:angle] | cyclic:q | odometer[:depth] | denjoy[:angle:G:K]");
  app.add_option("--obs", cfg.observable, "harm:h:re|im | cyl:bits | state:r | denharm:h:re|im");
  app.add_option("--seq", cfg.sequence, "omega | smallomega | n | poly:c0,c1,.. | tm | rs | ef | of | sf | efsf | ofsf | file:path");
  app.add_option("--mask", cfg.mask, "indicator restricting n (tm, rs, ef, of, sf, efsf, ofsf)");
  app.add_option("--start", cfg.start, "start point of the flow");
  app.add_option("--weights", cfg.weights, "tm | rs | ef | of | lambda | mobius | ones");
  app.add_option("--modulus", cfg.modulus, "residue classes mod m");
  std::uint64_t residue = 0;
  auto* residue_opt = app.add_option("--residue", residue, "residue checked by --assert");
  app.add_option("--delta", cfg.delta, "probe pair radius");
  app.add_option("--epsilon", cfg.epsilon, "probe exceptional threshold");
  app.add_option("--pairs", cfg.pairs, "probe pair count");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--out", cfg.output, "CSV path (sieve: cache file path)");
  app.add_option("--cache", cfg.cache, "sieve cache file to read or create");
  app.add_option("--threads", cfg.threads, "worker threads, 0 = hardware count");
  app.add_flag("--assert", cfg.assert_result, "exit 3 when the result misses the target");
  double target = 0.0;
  auto* target_opt = app.add_option("--target", target, "expected value for --assert");
  app.add_option("--tol", cfg.tolerance, "tolerance for --assert");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }
  if (residue_opt->count() > 0) cfg.residue = residue;
  if (target_opt->count() > 0) cfg.target = target;
  return cfg;
}

int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(cfg);
  Experiment ex(r, err);
  Outcome o;
  const auto& c = cfg.command;
  if (c == "sieve") {
    o = cmd_sieve(r, ex, err);
  } else if (c == "seq") {
    o = cmd_seq(r, ex);
  } else if (c == "weyl") {
    o = cmd_weyl(r, ex);
  } else if (c == "density") {
    o = cmd_density(r, ex);
  } else if (c == "dynsys-probe") {
    o = cmd_probe(r, ex);
  } else if (c == "converge") {
    o = cmd_converge(r, ex);
  } else if (c == "disjoint") {
    o = cmd_disjoint(r, ex);
  } else if (c == "panel") {
    o = cmd_panel(r, ex);
  } else if (c == "report") {
    o = cmd_report(r, ex);
  } else {
    throw ValidationError("unknown command '" + c + "'");
  }
  if (cfg.output.empty() || c == "sieve") {
    out << o.csv;
  } else {
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open '" + cfg.output + "' for writing");
    file << o.csv;
    if (!file) throw Error("failed writing '" + cfg.output + "'");
  }
  if (cfg.assert_result && o.assertion_failed) {
    err << c << ": result outside tolerance\n";
    return kExitAssert;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitOk;
    return run(*cfg, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ubseq::cli

// Copyright 2026 The qdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qdiag/diagnose.hpp"
#include "qdiag/error.hpp"
#include "qdiag/experiments.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/json_io.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/cnf.hpp"
#include "qdiag/satdiag.hpp"

namespace qdiag::cli {
namespace {

/// Unreadable file or other malformed input outside the library parsers.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

Family family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

/// `adder2`, `ripple_adder:2` or a netlist path.
Circuit resolve_circuit(const std::string& source, std::istream& in, std::string& label) {
  if (auto colon = source.find(':'); colon != std::string::npos) {
    const auto family = family_or_throw(source.substr(0, colon));
    int width = 0;
    const auto w = source.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), width);
    if (ec != std::errc{} || ptr != w.data() + w.size()) throw UsageError("bad width in '" + source + "'");
    label = BenchmarkInstance{family, width}.id();
    return generate_benchmark(family, width);
  }
  auto digits = source.find_last_not_of("0123456789");
  if (digits != std::string::npos && digits + 1 < source.size()) {
    if (auto family = parse_family(source.substr(0, digits + 1))) {
      const int width = std::stoi(source.substr(digits + 1));
      label = BenchmarkInstance{*family, width}.id();
      return generate_benchmark(*family, width);
    }
  }
  label = source;
  return parse_bench(read_source(source, in));
}

FaultCircuit fault_model(const Circuit& c, const std::string& assume) {
  if (assume.empty()) return augment_stuck_at_1(c);
  return designate_assumables(c, split_list(assume));
}

QuantumOptions quantum_options(const RunConfig& cfg) {
  QuantumOptions q;
  auto backend = parse_backend(cfg.backend);
  if (!backend) throw UsageError("unknown backend '" + cfg.backend + "'");
  q.backend = *backend;
  q.qubit_cap = cfg.qubit_cap;
  q.max_superposition = cfg.max_superposition;
  q.seed = cfg.seed;
  if (cfg.mode == "shots") q.shots = cfg.shots;
  return q;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const auto c = generate_benchmark(family_or_throw(cfg.family), cfg.width);
  write_sink(cfg.out, render_bench(c), out);
  return kOk;
}

int cmd_diagnose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto c = parse_bench(read_source(cfg.netlist, in));
  const auto fc = fault_model(c, cfg.assume);
  const auto alpha = parse_assignment(cfg.alpha);
  const auto beta = parse_assignment(cfg.beta);
  const auto start = std::chrono::steady_clock::now();

  Json j;
  j["engine"] = cfg.engine;
  j["alpha"] = to_json(alpha);
  j["beta"] = to_json(beta);
  j["faults"] = fc.fault_inputs;
  std::map<std::string, double> probs;
  int code = kOk;

  if (cfg.engine == "sat") {
    const auto dist = circuit_health_sat(fc, alpha, beta);
    j["result"] = to_json(dist);
    if (!dist.consistent()) {
      code = kInconsistent;
    } else {
      probs = dist.probabilities();
    }
  } else {
    const auto q = quantum_options(cfg);
    if (auto problem = capacity_problem(fc, beta, q)) throw ResourceLimit(*problem);
    const auto est = quantum_diagnose(fc, alpha, beta, q);
    j["qubits"] = diagnosis_qubit_count(fc, beta);
    j["result"] = to_json(est);
    probs = est.probability;
  }
  if (cfg.timing) j["elapsed_ms"] = elapsed_ms(start);

  if (cfg.pretty) {
    std::ostringstream s;
    s << "engine  " << cfg.engine << "\n";
    if (cfg.engine == "sat") s << "d       " << j["result"]["diagnoses"].get<std::uint64_t>() << "\n";
    if (code == kInconsistent) {
      s << "observation is inconsistent with every fault assignment\n";
    } else {
      for (const auto& f : fc.fault_inputs) s << f << "  " << fixed(probs.at(f)) << "\n";
    }
    write_sink(cfg.out, s.str(), out);
  } else {
    write_sink(cfg.out, render_json(j), out);
  }
  if (code == kInconsistent) err << "qdiag: inconsistent observation (d = 0)\n";
  return code;
}

int cmd_export(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto c = parse_bench(read_source(cfg.netlist, in));
  const auto fc = fault_model(c, cfg.assume);
  const auto alpha = parse_assignment(cfg.alpha);
  const auto beta = parse_assignment(cfg.beta);
  if (cfg.what == "cnf") {
    write_sink(cfg.out, to_dimacs(to_cnf(fc, alpha, beta)), out);
  } else {
    const auto qc = build_diagnosis_circuit(fc, alpha, beta, CompileOptions{cfg.qubit_cap});
    write_sink(cfg.out, to_qasm(qc), out);
  }
  return kOk;
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
  if (auto dash = text.find('-'); dash != std::string::npos) {
    return doubling_schedule(std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1)));
  }
  std::vector<std::uint64_t> values;
  for (const auto& item : split_list(text)) values.push_back(std::stoull(item));
  return values;
}

int cmd_experiment_size(const RunConfig& cfg, std::ostream& out) {
  if (cfg.families.empty()) throw UsageError("--family is required");
  if (cfg.widths.empty()) throw UsageError("--widths must list at least one width");
  SizeExperimentConfig config;
  for (const auto& name : cfg.families) {
    std::vector<Family> selected;
    if (name == "all") {
      selected.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    } else {
      selected.push_back(family_or_throw(name));
    }
    for (auto f : selected) {
      for (int w : cfg.widths) config.circuits.push_back({f, w});
    }
  }
  config.scenarios_per_circuit = cfg.scenarios;
  config.max_cardinality = cfg.max_cardinality;
  config.seed = cfg.seed;
  config.quantum = quantum_options(cfg);
  config.timing = cfg.timing;
  const auto records = run_error_vs_size(config);
  if (cfg.format == "csv") {
    write_sink(cfg.out, to_csv(records), out);
  } else {
    Json j = Json::array();
    for (const auto& r : records) j.push_back(to_json(r));
    write_sink(cfg.out, render_json(j), out);
  }
  return kOk;
}

int cmd_experiment_shots(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.circuit.empty()) throw UsageError("--circuit is required");
  std::string label;
  const auto c = resolve_circuit(cfg.circuit, in, label);
  const auto fc = fault_model(c, cfg.assume);
  Scenario scenario;
  if (!cfg.alpha.empty() || !cfg.beta.empty()) {
    scenario.alpha = parse_assignment(cfg.alpha);
    scenario.beta = parse_assignment(cfg.beta);
  } else {
    scenario = random_scenarios(fc, 1, cfg.max_cardinality, cfg.scenario_seed).front();
  }
  ShotsExperimentConfig config;
  config.schedule = parse_schedule(cfg.schedule);
  if (config.schedule.empty()) throw UsageError("--schedule is empty");
  config.repeats = cfg.repeats;
  config.seed = cfg.seed;
  config.include_exact = cfg.include_exact;
  config.quantum = quantum_options(cfg);
  const auto series = run_error_vs_shots(fc, scenario, config);
  if (cfg.format == "csv") {
    write_sink(cfg.out, to_csv(series), out);
  } else {
    Json j;
    j["circuit"] = label;
    j["scenario"] = to_json(scenario);
    j["generator"] = std::string(kRngName);
    j["seed"] = cfg.seed;
    j["series"] = Json::array();
    for (const auto& p : series) j["series"].push_back(to_json(p));
    write_sink(cfg.out, render_json(j), out);
  }
  return kOk;
}

void add_netlist_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--netlist", cfg.netlist, "netlist file, or - for standard input")->required();
  sub->add_option("--alpha", cfg.alpha, "observed inputs, e.g. a=0,b=1")->required();
  sub->add_option("--beta", cfg.beta, "observed outputs, e.g. o=1")->required();
  sub->add_option("--assume", cfg.assume, "treat these primary inputs as unknowns instead of adding stuck-at-1 faults");
}

void add_quantum_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "exact or shots")->check(CLI::IsMember({"exact", "shots"}));
  sub->add_option("--shots", cfg.shots, "shot count (shots mode)")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "sampling seed");
  sub->add_option("--backend", cfg.backend, "auto, dense, sparse or enumerate")
      ->check(CLI::IsMember({"auto", "dense", "sparse", "enumerate"}));
  sub->add_option("--qubit-cap", cfg.qubit_cap, "qubit cap of the dense backend");
  sub->add_option("--max-superposition", cfg.max_superposition, "largest number of superposed fault qubits");
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.mode == "shots" && !cfg.shots) throw UsageError("--mode shots requires --shots");
  if (cfg.mode == "exact" && cfg.shots && cfg.subcommand != "experiment")
    throw UsageError("--shots requires --mode shots");
  if (cfg.subcommand == "generate") return cmd_generate(cfg, out);
  if (cfg.subcommand == "diagnose") return cmd_diagnose(cfg, in, out, err);
  if (cfg.subcommand == "export") return cmd_export(cfg, in, out);
  if (cfg.kind == "size") return cmd_experiment_size(cfg, out);
  return cmd_experiment_shots(cfg, in, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fault diagnosis of combinational circuits with SAT and simulated quantum search", "qdiag"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "write a benchmark netlist");
  generate->add_option("--family", cfg.family, "benchmark family")->required();
  generate->add_option("--width", cfg.width, "operand width")->required();
  generate->add_option("--out", cfg.out, "output path (default standard output)");

  auto* diagnose = app.add_subcommand("diagnose", "fault probabilities for one observation");
  add_netlist_options(diagnose, cfg);
  diagnose->add_option("--engine", cfg.engine, "sat or quantum")->check(CLI::IsMember({"sat", "quantum"}));
  add_quantum_options(diagnose, cfg);
  diagnose->add_flag("--pretty", cfg.pretty, "plain-text table instead of JSON");
  diagnose->add_flag("!--no-timing", cfg.timing, "omit wall-clock fields");
  diagnose->add_option("--out", cfg.out, "output path");

  auto* experiment = app.add_subcommand("experiment", "run an error-vs-size or error-vs-shots experiment");
  experiment->add_option("--kind", cfg.kind, "size or shots")->required()->check(CLI::IsMember({"size", "shots"}));
  experiment->add_option("--family", cfg.families, "family to include (repeatable, or all)");
  experiment->add_option("--widths", cfg.widths, "widths, comma separated")->delimiter(',');
  experiment->add_option("--circuit", cfg.circuit, "adder2, family:width or a netlist path");
  experiment->add_option("--alpha", cfg.alpha, "observed inputs (shots kind)");
  experiment->add_option("--beta", cfg.beta, "observed outputs (shots kind)");
  experiment->add_option("--assume", cfg.assume, "treat these primary inputs as unknowns");
  experiment->add_option("--scenarios", cfg.scenarios, "scenarios per circuit");
  experiment->add_option("--max-cardinality", cfg.max_cardinality, "largest injected fault set");
  experiment->add_option("--scenario-seed", cfg.scenario_seed, "seed of the generated scenario (shots kind)");
  experiment->add_option("--schedule", cfg.schedule, "lo-hi (powers of two) or a comma list of shot counts");
  experiment->add_option("--repeats", cfg.repeats, "seeds per shot count")->check(CLI::PositiveNumber);
  experiment->add_flag("--include-exact", cfg.include_exact, "append the exact-mode point");
  add_quantum_options(experiment, cfg);
  experiment->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  experiment->add_flag("!--no-timing", cfg.timing, "omit wall-clock fields");
  experiment->add_option("--out", cfg.out, "output path");

  auto* exporter = app.add_subcommand("export", "write the CNF or the diagnosis circuit");
  add_netlist_options(exporter, cfg);
  exporter->add_option("--what", cfg.what, "cnf or qasm")->required()->check(CLI::IsMember({"cnf", "qasm"}));
  exporter->add_option("--qubit-cap", cfg.qubit_cap, "qubit cap of the compiled circuit");
  exporter->add_option("--out", cfg.out, "output path");

  std::vector<std::string> argv_storage{"qdiag"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, in, out, err);
  } catch (const UsageError& e) {
    err << "qdiag: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistentObservation& e) {
    err << "qdiag: inconsistent observation: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ResourceLimit& e) {
    err << "qdiag: resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "qdiag: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument&) {
    err << "qdiag: invalid number\n";
    return kUsage;
  } catch (const std::out_of_range&) {
    err << "qdiag: number out of range\n";
    return kUsage;
  }
}

}  // namespace qdiag::cli

// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver for cut-circuit analysis: per-circuit cut/overhead
// reports, hydrogen-chain sweeps, cut-execution verification, and subcircuit
// emission.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcut/bench.hpp"
#include "qcut/qasm.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

qcut::Encoding encoding_from_name(const std::string& name) {
  if (name == "jw" || name == "jordan-wigner") return qcut::Encoding::jordan_wigner;
  if (name == "bk" || name == "bravyi-kitaev") return qcut::Encoding::bravyi_kitaev;
  throw std::invalid_argument("unknown encoding '" + name + "' (expected jw or bk)");
}

qcut::Layout layout_from_name(const std::string& name) {
  if (name == "all-to-all") return qcut::Layout::all_to_all;
  if (name == "heavy-hex") return qcut::Layout::heavy_hex;
  throw std::invalid_argument("unknown layout '" + name + "' (expected all-to-all or heavy-hex)");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qcut::Circuit load_qasm(const std::string& path) {
  qcut::ParseOptions opts;
  opts.warn = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  return qcut::parse_qasm(read_file(path), opts);
}

std::string emit_qasm_with_measures(const qcut::RealizedBlock& block) {
  // Inline the pending signed measurements as mid-circuit measure statements.
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << block.circuit.n_qubits << "];\n";
  if (!block.markers.empty()) os << "creg m[" << block.markers.size() << "];\n";
  std::size_t marker = 0;
  for (std::size_t i = 0; i <= block.circuit.gates.size(); ++i) {
    while (marker < block.markers.size() && block.markers[marker].gate_pos == i) {
      os << "measure q[" << block.markers[marker].qubit << "] -> m[" << marker << "];\n";
      ++marker;
    }
    if (i == block.circuit.gates.size()) break;
    const qcut::Gate& g = block.circuit.gates[i];
    os << qcut::gate_name(g.kind);
    if (qcut::has_angle(g.kind)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
      os << "(" << buf << ")";
    }
    os << " q[" << g.q0 << "]";
    if (qcut::is_two_qubit(g.kind)) os << ",q[" << g.q1 << "]";
    os << ";\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Circuit cutting analysis for electronic-structure ansatz circuits"};
  app.require_subcommand(1);

  // ---- analyze --------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Report cuts and sampling overhead for one configuration");
  std::string an_method = "uccsd", an_encoding, an_layout, an_format = "json", an_out;
  int an_n = 1, an_layers = 1, an_k = 1;
  double an_cp_angle = 0.0;
  std::optional<double> an_sigma;
  std::uint64_t an_seed = 0;
  analyze->add_option("--method", an_method, "uccsd | upccd | upccgsd | lucj")->required();
  analyze->add_option("--n", an_n, "chain index: H_{2n} with a (2n,2n) active space")->required();
  analyze->add_option("--encoding", an_encoding, "jw | bk (non-lucj methods)");
  analyze->add_option("--layout", an_layout, "all-to-all | heavy-hex (lucj)");
  analyze->add_option("--layers", an_layers, "lucj layer count");
  analyze->add_option("--k", an_k, "upccgsd product repetitions");
  analyze->add_option("--cp-angle", an_cp_angle, "lucj opposite-spin coupling angle (radians)");
  analyze->add_option("--synthetic-angles", an_sigma, "draw all lucj angles from N(0, sigma^2)");
  analyze->add_option("--seed", an_seed, "seed for synthetic angles");
  analyze->add_option("--format", an_format, "json | csv");
  analyze->add_option("--out", an_out, "output path (stdout when omitted)");

  // ---- sweep ----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Hydrogen-chain sweep over methods and configurations");
  std::vector<int> sw_n_list = {1, 5, 9, 13, 17, 21, 25};
  std::vector<std::string> sw_methods = {"uccsd", "upccd", "upccgsd", "lucj"};
  std::vector<std::string> sw_encodings = {"jw", "bk"};
  std::vector<std::string> sw_layouts = {"all-to-all", "heavy-hex"};
  int sw_max_layers = 5, sw_max_qubits = 36;
  double sw_cp_angle = 0.0;
  std::optional<double> sw_sigma;
  std::uint64_t sw_seed = 0;
  std::string sw_format = "csv", sw_out;
  sweep->add_option("--n-list", sw_n_list, "chain indices n (systems H_{2n})");
  sweep->add_option("--methods", sw_methods, "methods to sweep");
  sweep->add_option("--encodings", sw_encodings, "encodings for non-lucj methods");
  sweep->add_option("--layouts", sw_layouts, "layouts for lucj");
  sweep->add_option("--layers-max", sw_max_layers, "sweep lucj layers 1..layers-max");
  sweep->add_option("--cp-angle", sw_cp_angle, "lucj opposite-spin coupling angle");
  sweep->add_option("--synthetic-angles", sw_sigma, "draw all lucj angles from N(0, sigma^2)");
  sweep->add_option("--seed", sw_seed, "seed for synthetic angles");
  sweep->add_option("--max-qubits", sw_max_qubits,
                    "skip uccsd rows above this register size (0 disables)");
  sweep->add_option("--format", sw_format, "csv | json");
  sweep->add_option("--out", sw_out, "output path (stdout when omitted)");

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Reconstruct an observable of a cut circuit and compare to the uncut value");
  std::string ve_qasm, ve_partition, ve_observable, ve_mode = "exact";
  std::uint64_t ve_shots = 100000, ve_seed = 0;
  unsigned ve_shards = 1;
  verify->add_option("--qasm", ve_qasm, "OpenQASM 2 circuit file")->required();
  verify->add_option("--partition", ve_partition, "semicolon-separated qubit lists, e.g. 0,1;2,3")
      ->required();
  verify->add_option("--observable", ve_observable, "Pauli sum, e.g. \"1.0*Z0 Z1 - 0.5*X0\"")
      ->required();
  verify->add_option("--mode", ve_mode, "exact | mc");
  verify->add_option("--shots", ve_shots, "samples for mc mode");
  verify->add_option("--seed", ve_seed, "rng seed");
  verify->add_option("--shards", ve_shards, "parallel sampling streams");

  // ---- cut ------------------------------------------------------------------
  auto* cut = app.add_subcommand("cut", "Emit the subcircuits of one term assignment as QASM files");
  std::string cu_qasm, cu_partition, cu_assignment, cu_prefix;
  cut->add_option("--qasm", cu_qasm, "OpenQASM 2 circuit file")->required();
  cut->add_option("--partition", cu_partition, "semicolon-separated qubit lists")->required();
  cut->add_option("--assignment", cu_assignment,
                  "comma-separated term index per cut (default: all zeros)");
  cut->add_option("--out-prefix", cu_prefix, "output prefix for <prefix>.block{0,1}.qasm")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (analyze->parsed()) {
    qcut::AnalyzeOptions opts;
    opts.method = qcut::method_from_name(an_method);
    opts.n = an_n;
    if (!an_encoding.empty()) opts.encoding = encoding_from_name(an_encoding);
    if (!an_layout.empty()) opts.layout = layout_from_name(an_layout);
    opts.layers = an_layers;
    opts.k = an_k;
    opts.cp_angle = an_cp_angle;
    opts.synthetic_sigma = an_sigma;
    opts.seed = an_seed;
    const qcut::ReportRow row = qcut::analyze_configuration(opts);
    write_output(an_format == "csv" ? qcut::to_csv({row}) : qcut::to_json(row), an_out);
    return 0;
  }

  if (sweep->parsed()) {
    qcut::SweepSpec spec;
    spec.n_list = sw_n_list;
    spec.methods.clear();
    for (const auto& m : sw_methods) spec.methods.push_back(qcut::method_from_name(m));
    spec.encodings.clear();
    for (const auto& e : sw_encodings) spec.encodings.push_back(encoding_from_name(e));
    spec.layouts.clear();
    for (const auto& l : sw_layouts) spec.layouts.push_back(layout_from_name(l));
    spec.max_layers = sw_max_layers;
    spec.cp_angle = sw_cp_angle;
    spec.synthetic_sigma = sw_sigma;
    spec.seed = sw_seed;
    spec.max_qubits_uccsd = sw_max_qubits;
    const auto rows = qcut::run_sweep(spec);
    write_output(sw_format == "json" ? qcut::to_json(rows) : qcut::to_csv(rows), sw_out);
    return 0;
  }

  if (verify->parsed()) {
    if (ve_mode != "exact" && ve_mode != "mc")
      throw std::invalid_argument("mode must be 'exact' or 'mc'");
    const qcut::Circuit circuit = load_qasm(ve_qasm);
    qcut::VerifyOptions opts;
    opts.partition_spec = ve_partition;
    opts.observable_text = ve_observable;
    opts.monte_carlo = ve_mode == "mc";
    opts.shots = ve_shots;
    opts.seed = ve_seed;
    opts.shards = ve_shards;
    const qcut::VerifyReport report = qcut::verify_cut_execution(circuit, opts);
    std::cout << qcut::to_json(report);
    return report.verified ? 0 : kExitVerificationFailed;
  }

  if (cut->parsed()) {
    const qcut::Circuit circuit = load_qasm(cu_qasm);
    const qcut::Partition partition = qcut::Partition::parse(cu_partition, circuit.n_qubits);
    const auto cuts = qcut::find_cuts(circuit, partition);

    std::vector<std::size_t> choice(cuts.size(), 0);
    if (!cu_assignment.empty()) {
      choice.clear();
      std::istringstream ss(cu_assignment);
      std::string item;
      while (std::getline(ss, item, ',')) choice.push_back(std::stoul(item));
    }
    const qcut::Realization real = qcut::realize_assignment(circuit, partition, choice);

    json j;
    j["n_cuts"] = cuts.size();
    j["weight"] = real.weight;
    j["kappa_total"] = real.kappa_total;
    j["blocks"] = json::array();
    for (int b = 0; b < 2; ++b) {
      const auto& block = real.blocks[static_cast<std::size_t>(b)];
      const std::string path = cu_prefix + ".block" + std::to_string(b) + ".qasm";
      write_output(emit_qasm_with_measures(block), path);
      json jb;
      jb["file"] = path;
      jb["n_qubits"] = block.circuit.n_qubits;
      jb["qubit_map"] = block.qubit_map;
      json measures = json::array();
      for (const auto& m : block.markers)
        measures.push_back({{"qubit", m.qubit}, {"after_gate", m.gate_pos}});
      jb["signed_measurements"] = measures;
      j["blocks"].push_back(jb);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qcut::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

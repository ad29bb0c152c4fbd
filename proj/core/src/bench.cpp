// SPDX-License-Identifier: Apache-2.0
#include "qcut/bench.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcut/qasm.hpp"
#include "qcut/simulator.hpp"

namespace qcut {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

json json_number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

const char* encoding_name(Encoding e) {
  return e == Encoding::jordan_wigner ? "jw" : "bk";
}

const char* layout_name(Layout l) {
  return l == Layout::all_to_all ? "all-to-all" : "heavy-hex";
}

}  // namespace

Method method_from_name(const std::string& name) {
  if (name == "uccsd") return Method::uccsd;
  if (name == "upccd") return Method::upccd;
  if (name == "upccgsd") return Method::upccgsd;
  if (name == "lucj") return Method::lucj;
  throw std::invalid_argument("unknown method '" + name + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::uccsd: return "uccsd";
    case Method::upccd: return "upccd";
    case Method::upccgsd: return "upccgsd";
    case Method::lucj: return "lucj";
  }
  return "?";
}

std::pair<Circuit, Partition> build_configuration(const AnalyzeOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("chain index must be positive");
  const int n_elec = 2 * opts.n;
  const int n_spatial = 2 * opts.n;
  const int n_qubits = 2 * n_spatial;

  if (opts.method == Method::lucj) {
    if (opts.encoding)
      throw std::invalid_argument("lucj takes a layout, not an encoding");
    const Layout layout = opts.layout.value_or(Layout::all_to_all);
    if (opts.layers < 1) throw std::invalid_argument("layer count must be positive");

    LucjParameters params = LucjParameters::zeros(n_spatial, opts.layers);
    if (opts.synthetic_sigma) {
      params = LucjParameters::synthetic(n_spatial, opts.layers, *opts.synthetic_sigma, opts.seed);
    } else if (opts.cp_angle != 0.0) {
      for (auto& layer : params.layers)
        std::fill(layer.opposite_spin.begin(), layer.opposite_spin.end(), opts.cp_angle);
    }

    Circuit c = lucj(n_elec, n_spatial, params, layout);
    // alpha sector | beta sector
    std::vector<int> blocks(static_cast<std::size_t>(n_qubits), 1);
    for (int q = 0; q < n_spatial; ++q) blocks[static_cast<std::size_t>(q)] = 0;
    return {std::move(c), Partition(std::move(blocks))};
  }

  if (opts.layout)
    throw std::invalid_argument("only lucj takes a layout; pass an encoding instead");
  const Encoding enc = opts.encoding.value_or(Encoding::jordan_wigner);

  AmplitudeSet amps;  // zero-initialized parameters; cut gates are unparameterized
  Circuit c;
  switch (opts.method) {
    case Method::uccsd:
      c = uccsd(n_elec, n_spatial, amps, enc);
      break;
    case Method::upccd:
      c = upccd(n_elec, n_spatial, amps, enc);
      break;
    case Method::upccgsd:
      c = upccgsd(n_elec, n_spatial, amps, enc, QubitOrdering::spatial_blocked, opts.k);
      break;
    default:
      throw std::invalid_argument("unreachable method");
  }
  // occupied spatial orbitals (lowest n_elec/2) | virtual rest
  std::vector<int> blocks(static_cast<std::size_t>(n_qubits), 1);
  for (int q = 0; q < n_elec; ++q) blocks[static_cast<std::size_t>(q)] = 0;
  return {std::move(c), Partition(std::move(blocks))};
}

ReportRow analyze_configuration(const AnalyzeOptions& opts) {
  const auto [circuit, partition] = build_configuration(opts);
  const auto cuts = find_cuts(circuit, partition);
  const OverheadReport report = total_overhead(cuts);

  ReportRow row;
  row.system = "H" + std::to_string(2 * opts.n);
  row.method = method_name(opts.method);
  row.config = opts.method == Method::lucj
                   ? layout_name(opts.layout.value_or(Layout::all_to_all))
                   : encoding_name(opts.encoding.value_or(Encoding::jordan_wigner));
  row.layers = opts.method == Method::lucj ? opts.layers : opts.k;
  row.n_qubits = circuit.n_qubits;
  row.n_cuts = cuts.size();
  auto count = [&](GateKind k) {
    auto it = report.counts.find(k);
    return it == report.counts.end() ? std::size_t{0} : it->second;
  };
  row.cuts_cx = count(GateKind::CX);
  row.cuts_cz = count(GateKind::CZ);
  row.cuts_cp = count(GateKind::CP);
  row.cuts_rzz = count(GateKind::RZZ);
  row.gamma_sq = report.total_gamma_squared;
  row.log10_gamma_sq = report.log10_total;
  row.shots_1e3 = shots_for_parity(1e3, report);
  row.shots_1e4 = shots_for_parity(1e4, report);
  return row;
}

std::vector<ReportRow> run_sweep(const SweepSpec& spec) {
  std::vector<AnalyzeOptions> configs;
  for (int n : spec.n_list) {
    for (Method m : spec.methods) {
      if (m == Method::lucj) {
        for (Layout layout : spec.layouts)
          for (int layers = 1; layers <= spec.max_layers; ++layers) {
            AnalyzeOptions o;
            o.method = m;
            o.n = n;
            o.layout = layout;
            o.layers = layers;
            o.cp_angle = spec.cp_angle;
            o.synthetic_sigma = spec.synthetic_sigma;
            o.seed = spec.seed;
            configs.push_back(o);
          }
        continue;
      }
      if (m == Method::uccsd && spec.max_qubits_uccsd > 0 && 4 * n > spec.max_qubits_uccsd)
        continue;
      for (Encoding enc : spec.encodings) {
        AnalyzeOptions o;
        o.method = m;
        o.n = n;
        o.encoding = enc;
        o.seed = spec.seed;
        configs.push_back(o);
      }
    }
  }

  std::vector<std::future<ReportRow>> futures;
  futures.reserve(configs.size());
  for (const auto& cfg : configs)
    futures.push_back(std::async(std::launch::async, analyze_configuration, cfg));

  std::vector<ReportRow> rows;
  rows.reserve(configs.size());
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "system,method,config,layers,n_qubits,n_cuts,cuts_cx,cuts_cz,cuts_cp,cuts_rzz,"
        "gamma_sq,log10_gamma_sq,shots_1e3,shots_1e4\n";
  for (const auto& r : rows) {
    os << r.system << ',' << r.method << ',' << r.config << ',' << r.layers << ','
       << r.n_qubits << ',' << r.n_cuts << ',' << r.cuts_cx << ',' << r.cuts_cz << ','
       << r.cuts_cp << ',' << r.cuts_rzz << ',' << format_double(r.gamma_sq) << ','
       << format_double(r.log10_gamma_sq) << ',' << format_double(r.shots_1e3) << ','
       << format_double(r.shots_1e4) << '\n';
  }
  return os.str();
}

namespace {

json row_to_json(const ReportRow& r) {
  json j;
  j["system"] = r.system;
  j["method"] = r.method;
  j["config"] = r.config;
  j["layers"] = r.layers;
  j["n_qubits"] = r.n_qubits;
  j["n_cuts"] = r.n_cuts;
  j["cuts_cx"] = r.cuts_cx;
  j["cuts_cz"] = r.cuts_cz;
  j["cuts_cp"] = r.cuts_cp;
  j["cuts_rzz"] = r.cuts_rzz;
  j["gamma_sq"] = json_number_or_inf(r.gamma_sq);
  j["log10_gamma_sq"] = r.log10_gamma_sq;
  j["shots_1e3"] = json_number_or_inf(r.shots_1e3);
  j["shots_1e4"] = json_number_or_inf(r.shots_1e4);
  return j;
}

}  // namespace

std::string to_json(const ReportRow& row) { return row_to_json(row).dump(2) + "\n"; }

std::string to_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

VerifyReport verify_cut_execution(const Circuit& c, const VerifyOptions& opts) {
  const Partition partition = Partition::parse(opts.partition_spec, c.n_qubits);
  const PauliSum observable = parse_pauli_text(opts.observable_text, c.n_qubits);
  const auto cuts = find_cuts(c, partition);

  VerifyReport report;
  report.n_cuts = cuts.size();

  if (c.n_qubits <= kSimulationQubitCap)
    report.uncut = expectation(simulate(c), observable);

  if (opts.monte_carlo) {
    EstimatorConfig cfg;
    cfg.shots = opts.shots;
    cfg.seed = opts.seed;
    cfg.shards = opts.shards;
    const ExpectationEstimate est = mc_estimate(c, partition, observable, cfg);
    report.estimate = est.value;
    report.stderr_ = est.stderr_;
    report.kappa_total = est.kappa_total;
    if (report.uncut) {
      report.difference = std::abs(*report.uncut - est.value);
      report.verified = *report.difference <= 5.0 * est.stderr_ + 1e-9;
    }
  } else {
    report.estimate = exact_reconstruction(c, partition, observable);
    const OverheadReport oh = total_overhead(cuts);
    report.kappa_total = std::sqrt(oh.total_gamma_squared);
    if (report.uncut) {
      report.difference = std::abs(*report.uncut - report.estimate);
      report.verified = *report.difference < 1e-8;
    }
  }
  return report;
}

std::string to_json(const VerifyReport& report) {
  json j;
  if (report.uncut)
    j["uncut_expectation"] = *report.uncut;
  else
    j["uncut_expectation"] = nullptr;
  j["estimate"] = report.estimate;
  j["stderr"] = report.stderr_;
  j["kappa_total"] = report.kappa_total;
  if (report.difference)
    j["difference"] = *report.difference;
  else
    j["difference"] = nullptr;
  j["n_cuts"] = report.n_cuts;
  j["verified"] = report.verified;
  return j.dump(2) + "\n";
}

}  // namespace qcut

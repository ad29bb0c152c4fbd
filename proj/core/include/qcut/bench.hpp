// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcut/ansatz.hpp"
#include "qcut/cutting.hpp"
#include "qcut/estimator.hpp"

namespace qcut {

enum class Method : std::uint8_t { uccsd, upccd, upccgsd, lucj };

Method method_from_name(const std::string& name);
const char* method_name(Method m);

/// One analyzed configuration of a hydrogen-chain circuit.
struct ReportRow {
  std::string system;   // e.g. "H2"
  std::string method;   // uccsd / upccd / upccgsd / lucj
  std::string config;   // jw / bk / all-to-all / heavy-hex
  int layers = 1;
  int n_qubits = 0;
  std::size_t n_cuts = 0;
  std::size_t cuts_cx = 0;
  std::size_t cuts_cz = 0;
  std::size_t cuts_cp = 0;
  std::size_t cuts_rzz = 0;
  double gamma_sq = 1.0;  // +inf when saturated
  double log10_gamma_sq = 0.0;
  double shots_1e3 = 0.0;
  double shots_1e4 = 0.0;
};

struct AnalyzeOptions {
  Method method = Method::uccsd;
  int n = 1;  // chain index: H_{2n}, (2n, 2n) active space
  std::optional<Encoding> encoding;
  std::optional<Layout> layout;
  int layers = 1;
  int k = 1;                 // upccgsd repetitions
  double cp_angle = 0.0;     // lucj coupling angle when no synthetic sigma
  std::optional<double> synthetic_sigma;
  std::uint64_t seed = 0;
};

/// Builds the configured circuit, applies the method's canonical partition
/// (occupied|virtual for spatial-blocked methods, alpha|beta for lucj) and
/// reports cuts and overheads. Throws std::invalid_argument for invalid
/// method/config combinations.
ReportRow analyze_configuration(const AnalyzeOptions& opts);

/// The circuit and partition behind analyze_configuration, for reuse.
std::pair<Circuit, Partition> build_configuration(const AnalyzeOptions& opts);

struct SweepSpec {
  std::vector<int> n_list = {1, 5, 9, 13, 17, 21, 25};
  std::vector<Method> methods = {Method::uccsd, Method::upccd, Method::upccgsd,
                                 Method::lucj};
  std::vector<Encoding> encodings = {Encoding::jordan_wigner, Encoding::bravyi_kitaev};
  std::vector<Layout> layouts = {Layout::all_to_all, Layout::heavy_hex};
  int max_layers = 5;  // lucj sweeps layers 1..max_layers
  double cp_angle = 0.0;
  std::optional<double> synthetic_sigma;
  std::uint64_t seed = 0;
  /// Rows whose register would exceed this many qubits are skipped for
  /// uccsd (circuit depth scaling); 0 disables the guard.
  int max_qubits_uccsd = 36;
};

/// Rows for every (system, method, config) combination, computed
/// concurrently but emitted in the deterministic grid order.
std::vector<ReportRow> run_sweep(const SweepSpec& spec);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);
std::string to_json(const ReportRow& row);

struct VerifyOptions {
  std::string partition_spec;   // "0,1;2,3"
  std::string observable_text;  // "1.0*Z0 Z1"
  bool monte_carlo = false;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

struct VerifyReport {
  std::optional<double> uncut;  // absent when the joint register exceeds the cap
  double estimate = 0.0;
  double stderr_ = 0.0;
  double kappa_total = 1.0;
  std::optional<double> difference;
  bool verified = true;
  std::size_t n_cuts = 0;
};

/// Cuts the circuit, reconstructs the observable (exactly or by sampling) and
/// compares against the uncut expectation when it is computable.
VerifyReport verify_cut_execution(const Circuit& c, const VerifyOptions& opts);

std::string to_json(const VerifyReport& report);

}  // namespace qcut

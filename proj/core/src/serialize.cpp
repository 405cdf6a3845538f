/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace coh {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvariantError("json.complex", "expected a two-element [re, im] array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from_json(const Json& j, const char* field) {
  if (!j.is_array() || j.empty()) {
    throw InvariantError(field, "expected a nonempty array of [re, im] pairs");
  }
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const char* field) {
  if (!j.is_array() || j.empty()) throw InvariantError(field, "expected a nonempty nested array");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != cols) throw InvariantError(field, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

}  // namespace

Json to_json(const PureState& psi) {
  Json j;
  j["dim"] = psi.dim();
  Json amps = Json::array();
  for (int i = 0; i < psi.dim(); ++i) amps.push_back(complex_to_json(psi.amplitude(i)));
  j["amplitudes"] = std::move(amps);
  return j;
}

Json to_json(const DensityOperator& rho) {
  Json j;
  j["dim"] = rho.dim();
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

Json to_json(const PureEnsemble& ensemble) {
  Json members = Json::array();
  for (const auto& m : ensemble.members()) {
    Json entry;
    entry["weight"] = m.weight;
    Json amps = Json::array();
    for (int i = 0; i < m.state.dim(); ++i) amps.push_back(complex_to_json(m.state.amplitude(i)));
    entry["amplitudes"] = std::move(amps);
    members.push_back(std::move(entry));
  }
  return Json{{"members", std::move(members)}};
}

Json to_json(const IncoherentChannel& ch) {
  Json kraus = Json::array();
  for (const auto& k : ch.kraus) kraus.push_back(matrix_to_json(k));
  Json j;
  j["input_dim"] = ch.input_dim;
  j["output_dim"] = ch.output_dim;
  j["kraus"] = std::move(kraus);
  return j;
}

PureState pure_state_from_json(const Json& j) {
  if (!j.contains("amplitudes")) throw InvariantError("state.amplitudes", "missing field");
  ComplexVector v = vector_from_json(j["amplitudes"], "state.amplitudes");
  if (j.contains("dim") && j["dim"].get<Eigen::Index>() != v.size()) {
    throw InvariantError("state.dim", "inconsistent with amplitude count");
  }
  return PureState(std::move(v));
}

DensityOperator density_from_json(const Json& j) {
  if (!j.contains("matrix")) throw InvariantError("density.matrix", "missing field");
  ComplexMatrix m = matrix_from_json(j["matrix"], "density.matrix");
  if (j.contains("dim") && j["dim"].get<Eigen::Index>() != m.rows()) {
    throw InvariantError("density.dim", "inconsistent with matrix size");
  }
  return DensityOperator(std::move(m));
}

PureEnsemble ensemble_from_json(const Json& j) {
  if (!j.contains("members") || !j["members"].is_array() || j["members"].empty()) {
    throw InvariantError("ensemble.members", "expected a nonempty member array");
  }
  std::vector<EnsembleMember> members;
  for (const auto& entry : j["members"]) {
    if (!entry.contains("weight")) throw InvariantError("ensemble.weight", "missing field");
    members.push_back({entry["weight"].get<double>(),
                       PureState(vector_from_json(entry["amplitudes"], "ensemble.amplitudes"))});
  }
  return PureEnsemble(std::move(members));
}

IncoherentChannel channel_from_json(const Json& j) {
  IncoherentChannel ch;
  ch.input_dim = j.at("input_dim").get<int>();
  ch.output_dim = j.at("output_dim").get<int>();
  for (const auto& k : j.at("kraus")) ch.kraus.push_back(matrix_from_json(k, "channel.kraus"));
  return ch;
}

Json finite_or_sentinel(double value) {
  if (!std::isfinite(value)) return Json("unbounded");
  return Json(value);
}

Json rate_report_to_json(const RateReport& report) {
  Json j;
  j["epsilon"] = report.epsilon;
  j["M_achievable"] = report.m_achievable;
  j["rate_lower_bits"] = finite_or_sentinel(report.rate_lower_bits);
  j["rate_upper_bits"] = finite_or_sentinel(report.rate_upper_bits);
  j["smoothed_value_bits"] = finite_or_sentinel(report.smoothed_value_bits);
  j["witness"] = report.witness;
  if (report.channel_fidelity_sq >= 0.0) j["channel_fidelity_sq"] = report.channel_fidelity_sq;
  Json meta;
  meta["seed"] = report.seed;
  meta["restarts"] = report.restarts;
  meta["copies"] = report.copies;
  j["metadata"] = std::move(meta);
  return j;
}

std::string format_csv_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,rate_bits,rate_per_copy,target_avg_bits,target_da_bits\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_csv_number(r.rate_bits) << ',' << format_csv_number(r.rate_per_copy)
        << ',' << format_csv_number(r.target_avg_bits) << ','
        << format_csv_number(r.target_da_bits) << '\n';
  }
  return out.str();
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace coh

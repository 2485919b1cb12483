// Copyright 2026 The entgeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entgeo/states.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace entgeo {

namespace {

using json = nlohmann::json;

Dims default_dims(std::size_t n) { return n % 2 == 0 ? Dims{2, n / 2} : Dims{1, n}; }

std::string format_magnitude(double v) {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << v;
  return os.str();
}

DensityMatrix pure(std::initializer_list<Complex> amplitudes, Dims dims) {
  std::vector<Complex> v(amplitudes);
  return validate_state(ComplexMatrix::outer(v), dims);
}

}  // namespace

DensityMatrix validate_state(const ComplexMatrix& m, Dims dims, double tol) {
  if (dims.a == 0 || dims.b == 0 || dims.total() != m.dim()) {
    throw StateError(StateError::Kind::bad_dims,
                     "dims " + std::to_string(dims.a) + "x" + std::to_string(dims.b) +
                         " do not match matrix dimension " + std::to_string(m.dim()));
  }
  const double asym = hermitian_asymmetry(m);
  if (asym > tol) {
    throw StateError(StateError::Kind::not_hermitian,
                     "not Hermitian, asymmetry " + format_magnitude(asym), asym);
  }
  const double trace_err = std::abs(m.trace() - 1.0);
  if (trace_err > tol) {
    throw StateError(StateError::Kind::bad_trace,
                     "trace != 1, |trace - 1| = " + format_magnitude(trace_err), trace_err);
  }
  const double min_eig = eigvals_hermitian(m, tol).front();
  if (min_eig < -tol) {
    throw StateError(StateError::Kind::not_psd,
                     "not PSD, min eigenvalue " + format_magnitude(min_eig), min_eig);
  }
  return DensityMatrix(m, dims);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem sub) {
  if (dims.total() != m.dim()) throw DimensionMismatch(dims.total(), m.dim());
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const Complex v = m(i * db + j, k * db + l);
          if (sub == Subsystem::B)
            out(i * db + l, k * db + j) = v;
          else
            out(k * db + j, i * db + l) = v;
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem sub) {
  return partial_transpose(rho.matrix(), rho.dims(), sub);
}

DensityMatrix make_named(NamedState name, std::size_t n) {
  const double r2 = std::numbers::sqrt2 / 2.0;
  const Dims qubits{2, 2};
  switch (name) {
    case NamedState::w_state: {
      const double w = 1.0 / std::numbers::sqrt3;
      return pure({0, w, w, 0, w, 0, 0, 0}, Dims{2, 4});
    }
    case NamedState::bell_psi_plus:
      return pure({0, r2, r2, 0}, qubits);
    case NamedState::bell_psi_minus_like:
    case NamedState::ff8_rho2:
      return pure({0, r2, -r2, 0}, qubits);
    case NamedState::ff1_rho2:
      return pure({1, 0, 0, 0}, qubits);
    case NamedState::ff2_rho2:
      return pure({r2, r2, 0, 0}, qubits);
    case NamedState::ff3_rho2:
      return pure({0, 1, 0, 0}, qubits);
    case NamedState::ff4_rho2: {
      const double norm = std::sqrt(101.0);
      return pure({10.0 / norm, 0, 0, 1.0 / norm}, qubits);
    }
    case NamedState::quasi_distillable: {
      ComplexMatrix m(4);
      m(1, 1) = 0.25;
      m(2, 2) = 0.25;
      m(1, 2) = -0.25;
      m(2, 1) = -0.25;
      m(3, 3) = 0.5;
      return validate_state(m, qubits);
    }
    case NamedState::max_mixed: {
      if (n < 1) throw StateError(StateError::Kind::bad_dims, "max_mixed needs n >= 1");
      return validate_state(ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n)),
                            default_dims(n));
    }
  }
  throw StateError(StateError::Kind::unknown_name, "unknown named state");
}

std::optional<DensityMatrix> named_from_string(std::string_view name) {
  struct Entry {
    std::string_view key;
    NamedState tag;
  };
  static constexpr std::array<Entry, 11> kTable{{
      {"w", NamedState::w_state},
      {"w-state", NamedState::w_state},
      {"bell-psi-plus", NamedState::bell_psi_plus},
      {"bell-psi-minus", NamedState::bell_psi_minus_like},
      {"ff1-rho2", NamedState::ff1_rho2},
      {"ff2-rho2", NamedState::ff2_rho2},
      {"ff3-rho2", NamedState::ff3_rho2},
      {"ff4-rho2", NamedState::ff4_rho2},
      {"ff8-rho2", NamedState::ff8_rho2},
      {"quasi-distillable", NamedState::quasi_distillable},
      {"max-mixed", NamedState::max_mixed},
  }};
  constexpr std::string_view kMixedPrefix = "max-mixed";
  if (name.starts_with(kMixedPrefix) && name.size() > kMixedPrefix.size()) {
    std::size_t n = 0;
    const auto digits = name.substr(kMixedPrefix.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1 || n > 64)
      return std::nullopt;
    return make_named(NamedState::max_mixed, n);
  }
  for (const auto& entry : kTable)
    if (entry.key == name) return make_named(entry.tag);
  return std::nullopt;
}

HsSampler::HsSampler(Dims dims, std::uint64_t seed) : dims_(dims), engine_(seed) {}

double HsSampler::uniform_open() {
  // 53 random bits mapped onto (0, 1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double HsSampler::standard_normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform_open();
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

DensityMatrix HsSampler::next() {
  const std::size_t n = dims_.total();
  ComplexMatrix g(n);
  for (auto& e : g.entries()) {
    const double re = standard_normal();
    const double im = standard_normal();
    e = Complex(re, im);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // G G^dagger is Hermitian up to rounding; store it exactly Hermitian.
  for (std::size_t i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return validate_state(rho, dims_);
}

DensityMatrix sample_hs_random(std::size_t n, std::uint64_t seed) {
  return HsSampler(default_dims(n), seed).next();
}

std::string matrix_to_json(const ComplexMatrix& m, Dims dims) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dims"] = {dims.a, dims.b};
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

std::string state_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.matrix(), rho.dims());
}

DensityMatrix state_from_json(std::string_view text, double tol) {
  const auto malformed = [](const std::string& why) {
    return StateError(StateError::Kind::malformed, "malformed state document: " + why);
  };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw malformed(e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix"))
    throw malformed("expected object with \"dims\" and \"matrix\"");
  const json& jd = doc["dims"];
  if (!jd.is_array() || jd.size() != 2 || !jd[0].is_number_unsigned() ||
      !jd[1].is_number_unsigned())
    throw malformed("\"dims\" must be two non-negative integers");
  const Dims dims{jd[0].get<std::size_t>(), jd[1].get<std::size_t>()};

  const json& jm = doc["matrix"];
  if (!jm.is_array()) throw malformed("\"matrix\" must be an array of rows");
  const std::size_t n = jm.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : jm) {
    if (!row.is_array() || row.size() != n) throw malformed("matrix must be square");
    for (const auto& e : row) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw malformed("entries must be [re, im] pairs");
      entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  return validate_state(ComplexMatrix(n, std::move(entries)), dims, tol);
}

}  // namespace entgeo

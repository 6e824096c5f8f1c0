// Copyright 2026 The realqm Authors
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

/**
 * @file    random.hpp
 * @brief   Reproducible random samples for property sweeps.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. The std distributions are not (their algorithms are left to the
 * implementation), so doubles are produced here directly: uniform01 takes
 * the top 53 bits of one engine draw, normal uses Box-Muller on two
 * uniforms. Same seed, same samples, on every conforming toolchain.
 */

#ifndef REALQM_RANDOM_HPP_
#define REALQM_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "realqm/matrix.hpp"
#include "realqm/realification.hpp"
#include "realqm/states.hpp"

namespace realqm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform01() * static_cast<double>(hi - lo + 1));
  }

  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (double& v : m.flat()) v = rng.uniform(-1.0, 1.0);
  return m;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, n);
  return (m + m.transpose()) * 0.5;
}

inline Matrix random_antisymmetric(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, n);
  return (m - m.transpose()) * 0.5;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

inline ComplexVector random_complex_vector(Rng& rng, std::size_t d) {
  ComplexVector v(d);
  for (Complex& z : v) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return v;
}

inline ComplexMatrixRep random_complex_matrix(Rng& rng, std::size_t d) {
  return {d, random_matrix(rng, d, d), random_matrix(rng, d, d)};
}

inline ComplexMatrixRep random_hermitian(Rng& rng, std::size_t d) {
  const ComplexMatrixRep g = random_complex_matrix(rng, d);
  return {d, (g.re + g.re.transpose()) * 0.5, (g.im - g.im.transpose()) * 0.5};
}

/// Unitary from complex Gram-Schmidt on the columns of a random matrix.
inline ComplexMatrixRep random_unitary(Rng& rng, std::size_t d) {
  std::vector<ComplexVector> cols;
  while (cols.size() < d) {
    ComplexVector v(d);
    for (Complex& z : v) z = {rng.normal(), rng.normal()};
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexVector& b : cols) {
        Complex c{};
        for (std::size_t i = 0; i < d; ++i) c += std::conj(b[i]) * v[i];
        for (std::size_t i = 0; i < d; ++i) v[i] -= c * b[i];
      }
    double nrm = 0.0;
    for (const Complex& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-6) continue;
    for (Complex& z : v) z /= nrm;
    cols.push_back(std::move(v));
  }
  ComplexMatrixRep u = ComplexMatrixRep::zeros(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) u.set(i, k, cols[k][i]);
  return u;
}

/// G G^dagger / Tr, a full-rank complex density matrix.
inline ComplexMatrixRep random_complex_density(Rng& rng, std::size_t d) {
  const ComplexMatrixRep g = random_complex_matrix(rng, d);
  ComplexMatrixRep rho = g * adjoint(g);
  double tr = 0.0;
  for (std::size_t k = 0; k < d; ++k) tr += rho.re(k, k);
  rho.re /= tr;
  rho.im /= tr;
  // Exact hermiticity.
  rho.re = (rho.re + rho.re.transpose()) * 0.5;
  rho.im = (rho.im - rho.im.transpose()) * 0.5;
  return rho;
}

inline DensityMatrix random_physical_density(Rng& rng, std::size_t d) {
  return physical_from_complex(random_complex_density(rng, d));
}

/// M M^T / Tr: a general state, not J-commuting.
inline DensityMatrix random_general_density(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, n);
  Matrix rho = m * m.transpose();
  rho /= trace(rho);
  rho = (rho + rho.transpose()) * 0.5;
  return DensityMatrix::general(std::move(rho));
}

/// Uniform alpha in [0, 1/2], beta = 1/2 - alpha, (gamma, delta) uniform in
/// the disk of radius sqrt(alpha beta).
inline Rho4dParams random_rho4d(Rng& rng) {
  Rho4dParams s;
  s.alpha = rng.uniform(0.0, 0.5);
  s.beta = 0.5 - s.alpha;
  const double r = std::sqrt(s.alpha * s.beta * rng.uniform01());
  const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
  s.gamma = r * std::cos(th);
  s.delta = r * std::sin(th);
  return s;
}

/// Symmetric matrix commuting with the standard J (an embedded Hermitean).
inline Matrix random_complex_linear_symmetric(Rng& rng, std::size_t d) {
  return embed_matrix(random_hermitian(rng, d));
}

}  // namespace realqm

#endif  // REALQM_RANDOM_HPP_

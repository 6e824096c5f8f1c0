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

#ifndef REALQM_EXPM_HPP_
#define REALQM_EXPM_HPP_

#include <array>
#include <cmath>

#include "realqm/decompositions.hpp"
#include "realqm/matrix.hpp"

namespace realqm {

namespace detail {

// Numerator coefficients of the diagonal (6,6) Pade approximant to exp:
// c_k = (12-k)! 6! / (12! k! (6-k)!).
inline constexpr std::array<double, 7> kPade6 = {
    1.0, 1.0 / 2.0, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};

// Scaled Frobenius norm bound for the Pade step.
inline constexpr double kPadeNormBound = 0.5;

}  // namespace detail

/// Matrix exponential by scaling and squaring around a (6,6) Pade approximant.
///
/// The argument is halved until its Frobenius norm is at most 0.5, where the
/// truncation error of the approximant is far below double precision, then
/// squared back up.
inline Matrix expm(const Matrix& a) {
  detail::require_square(a, "expm");
  if (!a.all_finite()) throw DomainError("expm: non-finite entries");
  const std::size_t n = a.rows();

  const double norm = frobenius_norm(a);
  int squarings = 0;
  if (norm > detail::kPadeNormBound)
    squarings = static_cast<int>(std::ceil(std::log2(norm / detail::kPadeNormBound)));
  const Matrix scaled = a * std::ldexp(1.0, -squarings);

  const Matrix eye = Matrix::identity(n);
  const Matrix a2 = scaled * scaled;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const auto& c = detail::kPade6;
  // Split into even part V and odd part U; exp ~ (V - U)^{-1} (V + U).
  const Matrix even = c[0] * eye + c[2] * a2 + c[4] * a4 + c[6] * a6;
  const Matrix odd = scaled * (c[1] * eye + c[3] * a2 + c[5] * a4);
  Matrix result = solve(even - odd, even + odd);

  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace realqm

#endif  // REALQM_EXPM_HPP_

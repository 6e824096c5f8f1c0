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


#include <gtest/gtest.h>

#include "realqm/expm.hpp"
#include "realqm/oscillator.hpp"
#include "realqm/random.hpp"
#include "realqm/realification.hpp"

namespace realqm {
namespace {

TEST(StandardJ, SingleBlock) {
  EXPECT_EQ(standard_j(1).matrix(), Matrix::from_rows({{0, -1}, {1, 0}}));
}

TEST(StandardJ, FourDimensional) {
  const Matrix want = Matrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  EXPECT_EQ(standard_j(2).matrix(), want);
}

TEST(StandardJ, SquaresToMinusIdentityAndIsOrthogonal) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const Matrix j = standard_j(d).matrix();
    EXPECT_EQ(j * j, -Matrix::identity(2 * d));
    EXPECT_EQ(j.transpose() * j, Matrix::identity(2 * d));
  }
  EXPECT_THROW(standard_j(0), DomainError);
}

TEST(ComplexStructure, ValidatesCandidates) {
  EXPECT_NO_THROW(ComplexStructure::from_matrix(fermionic_k()));
  EXPECT_THROW(ComplexStructure::from_matrix(Matrix::identity(2)), DomainError);
  EXPECT_THROW(ComplexStructure::from_matrix(Matrix::from_rows({{0, -2}, {2, 0}})), DomainError);
  EXPECT_THROW(ComplexStructure::from_matrix(Matrix(3, 3)), DomainError);
}

TEST(EmbedVector, InterleavedLayout) {
  EXPECT_EQ(embed_vector({{1.0, 0.0}, {0.0, 0.0}}), (Vector{1, 0, 0, 0}));
  EXPECT_EQ(embed_vector({{1.5, -2.0}, {0.25, 3.0}}), (Vector{1.5, -2.0, 0.25, 3.0}));
}

TEST(EmbedVector, MultiplicationByIIsJ) {
  Rng rng(31);
  const ComplexVector psi = random_complex_vector(rng, 4);
  ComplexVector ipsi = psi;
  for (Complex& z : ipsi) z *= Complex(0.0, 1.0);
  const Vector lhs = embed_vector(ipsi);
  const Vector rhs = standard_j(4).matrix() * embed_vector(psi);
  for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_EQ(lhs[k], rhs[k]);
  const ComplexVector back = extract_vector(embed_vector(psi));
  EXPECT_EQ(back, psi);
  EXPECT_THROW(extract_vector(Vector(3)), DimensionError);
}

TEST(EmbedMatrix, IdentityAndDisplayedPattern) {
  EXPECT_EQ(embed_matrix(ComplexMatrixRep::identity(3)), Matrix::identity(6));
  ComplexMatrixRep a = ComplexMatrixRep::zeros(2);
  a.set(0, 0, {1, 2});
  a.set(0, 1, {3, 4});
  a.set(1, 0, {5, 6});
  a.set(1, 1, {7, 8});
  const Matrix want =
      Matrix::from_rows({{1, -2, 3, -4}, {2, 1, 4, 3}, {5, -6, 7, -8}, {6, 5, 8, 7}});
  EXPECT_EQ(embed_matrix(a), want);
}

TEST(EmbedMatrix, PauliY) {
  ComplexMatrixRep y = ComplexMatrixRep::zeros(2);
  y.set(0, 1, {0, -1});
  y.set(1, 0, {0, 1});
  const Matrix m = embed_matrix(y);
  EXPECT_EQ(m, Matrix::from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
  EXPECT_TRUE(is_symmetric(m));
  EXPECT_EQ(m * m, Matrix::identity(4));
}

TEST(EmbedMatrix, HomomorphismAndAdjoint) {
  Rng rng(32);
  for (std::size_t d = 1; d <= 4; ++d) {
    const ComplexMatrixRep a = random_complex_matrix(rng, d);
    const ComplexMatrixRep b = random_complex_matrix(rng, d);
    EXPECT_LE(distance(embed_matrix(a * b), embed_matrix(a) * embed_matrix(b)), 1e-10);
    EXPECT_EQ(embed_matrix(adjoint(a)), embed_matrix(a).transpose());
  }
}

TEST(EmbedMatrix, ComplexProductOracle) {
  // Entry (0,0) of A B computed with std::complex.
  Rng rng(33);
  const ComplexMatrixRep a = random_complex_matrix(rng, 3);
  const ComplexMatrixRep b = random_complex_matrix(rng, 3);
  Complex z{};
  for (std::size_t k = 0; k < 3; ++k) z += a.at(0, k) * b.at(k, 0);
  const Matrix m = embed_matrix(a) * embed_matrix(b);
  EXPECT_NEAR(m(0, 0), z.real(), 1e-14);
  EXPECT_NEAR(m(1, 0), z.imag(), 1e-14);
}

TEST(ExtractMatrix, RoundTrip) {
  Rng rng(34);
  const ComplexMatrixRep a = random_complex_matrix(rng, 3);
  const ComplexMatrixRep back = extract_matrix(embed_matrix(a), standard_j(3));
  EXPECT_EQ(back.re, a.re);
  EXPECT_EQ(back.im, a.im);
}

TEST(ExtractMatrix, JIsImaginaryUnit) {
  const ComplexMatrixRep i = extract_matrix(standard_j(2).matrix(), standard_j(2));
  EXPECT_EQ(i.re, Matrix(2, 2));
  EXPECT_EQ(i.im, Matrix::identity(2));
}

TEST(ExtractMatrix, RejectsAntilinear) {
  EXPECT_THROW(extract_matrix(conjugation_operator(2), standard_j(2)), DomainError);
  EXPECT_THROW(extract_matrix(Matrix::identity(4), ComplexStructure::from_matrix(fermionic_k())),
               DomainError);
}

TEST(Conjugation, ConjugatesEmbeddedVectors) {
  EXPECT_EQ(conjugation_operator(1), Matrix::from_rows({{1, 0}, {0, -1}}));
  Rng rng(35);
  const ComplexVector psi = random_complex_vector(rng, 3);
  ComplexVector conj = psi;
  for (Complex& z : conj) z = std::conj(z);
  EXPECT_EQ(conjugation_operator(3) * embed_vector(psi), embed_vector(conj));
}

TEST(Split, TrivialCases) {
  const ComplexStructure j = standard_j(2);
  const auto sj = split_linear_antilinear(j.matrix(), j);
  EXPECT_EQ(sj.plus, j.matrix());
  EXPECT_EQ(sj.minus, Matrix(4, 4));
  const auto sc = split_linear_antilinear(conjugation_operator(2), j);
  EXPECT_EQ(sc.plus, Matrix(4, 4));
  EXPECT_EQ(sc.minus, conjugation_operator(2));
}

TEST(Split, RandomInputs) {
  Rng rng(36);
  for (std::size_t d = 1; d <= 8; ++d) {
    const ComplexStructure j = standard_j(d);
    const Matrix a = random_matrix(rng, 2 * d, 2 * d);
    const auto s = split_linear_antilinear(a, j);
    EXPECT_LE(distance(s.plus + s.minus, a), 1e-14 * frobenius_norm(a));
    EXPECT_LE(commutator_residual(s.plus, j.matrix()), 1e-10);
    EXPECT_LE(anticommutator_residual(s.minus, j.matrix()), 1e-10);
  }
}

TEST(Split, SubspaceRanks) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const SplitRanks r = split_subspace_ranks(d);
    EXPECT_EQ(r.linear, 2 * d * d);
    EXPECT_EQ(r.antilinear, 2 * d * d);
  }
}

TEST(ScalarProducts, UnitVectorWithItself) {
  Rng rng(37);
  Vector v = random_vector(rng, 6);
  const double n = norm2(v);
  for (double& x : v) x /= n;
  const ScalarProducts sp = scalar_products(v, v, standard_j(3));
  EXPECT_NEAR(sp.real_part, 1.0, 1e-15);
  EXPECT_EQ(sp.imag_part, 0.0);
}

TEST(ScalarProducts, MatchesComplexOracle) {
  Rng rng(38);
  const ComplexVector phi = random_complex_vector(rng, 3);
  const ComplexVector psi = random_complex_vector(rng, 3);
  Complex z{};
  for (std::size_t k = 0; k < 3; ++k) z += std::conj(phi[k]) * psi[k];
  const ComplexStructure j = standard_j(3);
  const ScalarProducts sp = scalar_products(embed_vector(phi), embed_vector(psi), j);
  EXPECT_NEAR(sp.real_part, z.real(), 1e-14);
  EXPECT_NEAR(sp.imag_part, z.imag(), 1e-14);
  // (phi, J psi) = i (phi, psi) = (-imag, real).
  const ScalarProducts sj = scalar_products(embed_vector(phi), j.matrix() * embed_vector(psi), j);
  EXPECT_NEAR(sj.real_part, -z.imag(), 1e-14);
  EXPECT_NEAR(sj.imag_part, z.real(), 1e-14);
}

TEST(Classify, EmbeddedUnitary) {
  Rng rng(39);
  for (std::size_t d = 1; d <= 4; ++d) {
    const OperatorClass c = classify(embed_matrix(random_unitary(rng, d)), standard_j(d));
    EXPECT_TRUE(c.orthogonal && c.symplectic && c.complex_linear);
  }
}

TEST(Classify, Conjugation) {
  const OperatorClass c = classify(conjugation_operator(2), standard_j(2));
  EXPECT_TRUE(c.orthogonal);
  EXPECT_FALSE(c.symplectic);
  EXPECT_TRUE(c.complex_antilinear);
  EXPECT_FALSE(c.complex_linear);
  EXPECT_TRUE(c.symmetric);
}

TEST(Classify, RandomRotationIsNotSymplectic) {
  Rng rng(40);
  const OperatorClass c = classify(expm(random_antisymmetric(rng, 6) * 2.0), standard_j(3));
  EXPECT_TRUE(c.orthogonal);
  EXPECT_FALSE(c.symplectic);
  EXPECT_FALSE(c.complex_linear);
}

TEST(GeneratorRanks, GroupDimensions) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const GeneratorRanks g = generator_space_ranks(d);
    EXPECT_EQ(g.orthogonal, 2 * d * d - d);
    EXPECT_EQ(g.symplectic, 2 * d * d + d);
    EXPECT_EQ(g.unitary, d * d);
  }
}

}  // namespace
}  // namespace realqm

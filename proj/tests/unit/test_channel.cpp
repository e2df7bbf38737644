// Copyright 2026 The ebx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "ebx/channel.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/error.hpp"
#include "ebx/gallery.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace ebx {
namespace {

const Tolerance kTol;

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ebx::Error thrown";
  return ErrorCode::InternalInconsistency;
}

Channel identity_channel(Index d) { return Channel(KrausSet{d, d, {CMatrix::Identity(d, d)}}); }

Channel ucp_diag_split() {
  CMatrix v = CMatrix::Identity(2, 2);
  v(1, 1) = -1.0;
  const double h = 1.0 / std::sqrt(2.0);
  return Channel(KrausSet{2, 2, {h * CMatrix::Identity(2, 2), h * v}});
}

TEST(Channel, ConstructionValidatesDimensions) {
  EXPECT_EQ(error_code_of([] { (void)Channel(KrausSet{2, 3, {CMatrix::Zero(2, 2)}}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(error_code_of([] { (void)Channel(ChoiMatrix{2, 2, CMatrix::Zero(3, 3)}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(error_code_of([] {
              (void)Channel(HolevoEnsemble{2, 2, {{CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)}}});
            }),
            ErrorCode::DimensionMismatch);
  const Channel ch = gallery::diag_m2();
  EXPECT_EQ(error_code_of([&] { (void)ebx::apply(ch, CMatrix::Zero(3, 3)); }),
            ErrorCode::DimensionMismatch);
}

TEST(Apply, DiagonalCompression) {
  CMatrix x(2, 2);
  x << Complex(1, 2), Complex(3, -1), Complex(-2, 5), Complex(7, 0);
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 0) = x(0, 0);
  expected(1, 1) = x(1, 1);
  EXPECT_LE(max_abs(ebx::apply(gallery::diag_m2(), x) - expected), 0.0);
}

TEST(Apply, IdentityAndTraceEnsemble) {
  SeededRng rng(1);
  const CMatrix x = rng.complex_gaussian(3, 3);
  EXPECT_LE(max_abs(ebx::apply(identity_channel(3), x) - x), 1e-15);

  const Channel h(HolevoEnsemble{2, 2, {{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2) / 2.0}}});
  const CMatrix y = rng.complex_gaussian(2, 2);
  EXPECT_LE(max_abs(ebx::apply(h, y) - y.trace() * CMatrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(ToChoi, IdentityChannelOnM2) {
  const ChoiMatrix c = to_choi(identity_channel(2));
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  EXPECT_LE(max_abs(c.matrix - expected), 0.0);
  EXPECT_EQ(svd_rank(c.matrix, kTol), 1);
}

TEST(ToChoi, DiagonalCompression) {
  const ChoiMatrix c = to_choi(gallery::diag_m2());
  const CMatrix expected = kron(matrix_unit(2, 0, 0), matrix_unit(2, 0, 0)) +
                           kron(matrix_unit(2, 1, 1), matrix_unit(2, 1, 1));
  EXPECT_LE(max_abs(c.matrix - expected), 0.0);
  EXPECT_EQ(svd_rank(c.matrix, kTol), 2);
}

TEST(ToChoi, TetrahedralHasRankFour) {
  const Channel ch = gallery::tetrahedral_m3();
  std::vector<std::pair<CMatrix, CMatrix>> terms;
  for (const auto& t : ch.holevo()->terms) terms.emplace_back(t.F, t.R);
  const CMatrix reference = oracle::choi_from_holevo(terms, 3, 3);
  const ChoiMatrix c = to_choi(ch);
  EXPECT_LE(max_abs(c.matrix - reference), 1e-15);
  EXPECT_EQ(oracle::gram_schmidt_rank(reference), 4);
  EXPECT_EQ(svd_rank(c.matrix, kTol), 4);
}

TEST(ToChoi, KrausAgreesWithOracle) {
  SeededRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d1 = 1 + trial % 3;
    const Index d2 = 1 + (trial / 3) % 3;
    const Channel ch = testing::random_kraus_channel(rng, d1, d2, 2);
    const CMatrix reference = oracle::choi_from_kraus(ch.kraus()->operators, d1, d2);
    EXPECT_LE(max_abs(to_choi(ch).matrix - reference), 1e-12 * std::max(1.0, max_abs(reference)));
  }
}

TEST(ChoiToKraus, IdentityGivesOneUnitary) {
  const KrausSet k = choi_to_kraus(to_choi(identity_channel(2)), kTol);
  ASSERT_EQ(k.operators.size(), 1u);
  const CMatrix& v = k.operators[0];
  EXPECT_LE(max_abs(v.adjoint() * v - CMatrix::Identity(2, 2)), 1e-14);
  // Unitary up to phase: v is a multiple of I.
  EXPECT_LE(max_abs(v - v(0, 0) * CMatrix::Identity(2, 2)), 1e-14);
}

TEST(ChoiToKraus, DiagonalChoiGivesProductOperators) {
  const KrausSet k = choi_to_kraus(to_choi(gallery::diag_m2()), kTol);
  ASSERT_EQ(k.operators.size(), 2u);
  std::vector<CMatrix> all = k.operators;
  all.push_back(matrix_unit(2, 0, 0));
  all.push_back(matrix_unit(2, 1, 1));
  EXPECT_EQ(oracle::span_dimension(all), 2);
  for (const auto& v : k.operators) EXPECT_EQ(svd_rank(v, kTol), 1);
}

TEST(ChoiToKraus, ZeroMapGivesSingleZeroOperator) {
  const KrausSet k = choi_to_kraus(ChoiMatrix{2, 3, CMatrix::Zero(6, 6)}, kTol);
  ASSERT_EQ(k.operators.size(), 1u);
  EXPECT_EQ(k.operators[0].rows(), 2);
  EXPECT_EQ(k.operators[0].cols(), 3);
  EXPECT_EQ(max_abs(k.operators[0]), 0.0);
}

TEST(ChoiToKraus, RejectsNonCp) {
  CMatrix c = CMatrix::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = -1.0;
  EXPECT_EQ(error_code_of([&] { (void)choi_to_kraus(ChoiMatrix{2, 2, c}, kTol); }),
            ErrorCode::NotCP);
}

TEST(ChoiToKraus, RoundTripOnRandomCpMaps) {
  SeededRng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Index d1 = 1 + trial % 3;
    const Index d2 = 1 + (trial / 3) % 3;
    const Channel ch = testing::random_kraus_channel(rng, d1, d2, 1 + trial % 4);
    const ChoiMatrix c = to_choi(ch);
    const ChoiMatrix back = to_choi(Channel(choi_to_kraus(c, kTol)));
    EXPECT_LE(max_abs(back.matrix - c.matrix), 1e-9 * max_abs(c.matrix));
  }
}

TEST(ChoiToKraus, SpansMatchOriginalKrausOperators) {
  SeededRng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + trial % 3;
    const Channel ch = testing::random_kraus_channel(rng, 3, 2, n);
    const KrausSet extracted = choi_to_kraus(to_choi(ch), kTol);
    std::vector<CMatrix> all = ch.kraus()->operators;
    const int original = oracle::span_dimension(all);
    all.insert(all.end(), extracted.operators.begin(), extracted.operators.end());
    EXPECT_EQ(static_cast<int>(extracted.operators.size()), original);
    EXPECT_EQ(oracle::span_dimension(all), original);
  }
}

TEST(HolevoToKraus, Examples) {
  const CMatrix e11 = matrix_unit(2, 0, 0);
  const KrausSet one = holevo_to_kraus(HolevoEnsemble{2, 2, {{e11, e11}}}, kTol);
  ASSERT_EQ(one.operators.size(), 1u);
  EXPECT_NEAR(std::abs(one.operators[0](0, 0)), 1.0, 1e-15);
  EXPECT_LE(max_abs(one.operators[0] - one.operators[0](0, 0) * e11), 1e-15);

  const KrausSet two =
      holevo_to_kraus(HolevoEnsemble{2, 2, {{CMatrix::Identity(2, 2), e11}}}, kTol);
  ASSERT_EQ(two.operators.size(), 2u);
  std::vector<CMatrix> all = two.operators;
  all.push_back(matrix_unit(2, 0, 0));
  all.push_back(matrix_unit(2, 1, 0));
  EXPECT_EQ(oracle::span_dimension(all), 2);
}

TEST(HolevoToKraus, RankOneTermsGiveScaledOuterProducts) {
  SeededRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const CVector u = rng.unit_vector(3);
    const CVector v = rng.unit_vector(2);
    const double lambda = 0.1 + rng.uniform();
    const KrausSet k =
        holevo_to_kraus(HolevoEnsemble{3, 2, {{ket_bra(u, u), lambda * ket_bra(v, v)}}}, kTol);
    ASSERT_EQ(k.operators.size(), 1u);
    const CMatrix expected = std::sqrt(lambda) * ket_bra(u, v);
    // Equal up to a global phase.
    const Complex overlap = (expected.adjoint() * k.operators[0]).trace();
    const Complex phase = overlap / std::abs(overlap);
    EXPECT_LE(max_abs(k.operators[0] - phase * expected), 1e-12);
  }
}

TEST(Representations, ApplyAgreesAcrossAllThree) {
  SeededRng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d1 = 2 + trial % 2;
    const Index d2 = 2 + (trial / 2) % 2;
    const Channel holevo = random_unital_eb(rng, d1, d2, 3);
    const Channel choi(to_choi(holevo));
    const Channel kraus(kraus_of(holevo, kTol));
    for (Index i = 0; i < d1; ++i) {
      for (Index j = 0; j < d1; ++j) {
        const CMatrix e = matrix_unit(d1, i, j);
        const CMatrix h = ebx::apply(holevo, e);
        EXPECT_LE(max_abs(ebx::apply(choi, e) - h), kTol.eq_abs);
        EXPECT_LE(max_abs(ebx::apply(kraus, e) - h), kTol.eq_abs);
        EXPECT_LE(max_abs(oracle::apply_choi(choi.choi()->matrix, e, static_cast<int>(d1),
                                             static_cast<int>(d2)) -
                          h),
                  kTol.eq_abs);
      }
    }
  }
}

TEST(Adjoint, Examples) {
  EXPECT_LE(basis_distance(adjoint(identity_channel(2)), identity_channel(2)), 0.0);
  EXPECT_LE(basis_distance(adjoint(gallery::diag_m2()), gallery::diag_m2()), 0.0);
}

TEST(Adjoint, HilbertSchmidtDuality) {
  SeededRng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d1 = 1 + trial % 3;
    const Index d2 = 1 + (trial / 3) % 3;
    std::vector<Channel> reps;
    reps.push_back(testing::random_kraus_channel(rng, d1, d2, 2));
    reps.push_back(Channel(to_choi(reps[0])));
    reps.push_back(random_unital_eb(rng, d1, d2, 2));
    for (const Channel& ch : reps) {
      const Channel adj = adjoint(ch);
      ASSERT_EQ(adj.d1(), d2);
      ASSERT_EQ(adj.d2(), d1);
      const CMatrix x = rng.complex_gaussian(d1, d1);
      const CMatrix y = rng.complex_gaussian(d2, d2);
      const Complex lhs = (ebx::apply(ch, x).adjoint() * y).trace();
      const Complex rhs = (x.adjoint() * ebx::apply(adj, y)).trace();
      EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(Adjoint, UnitalIffAdjointTracePreserving) {
  SeededRng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Index d1 = 2 + trial % 2;
    const Index d2 = 2 + (trial / 2) % 2;
    const Channel unital = random_unital_eb(rng, d1, d2, 2);
    EXPECT_TRUE(predicates(unital, kTol).is_unital);
    EXPECT_TRUE(predicates(adjoint(unital), kTol).is_tp);
    const Channel generic = testing::random_kraus_channel(rng, d1, d2, 2);
    EXPECT_EQ(predicates(generic, kTol).is_unital, predicates(adjoint(generic), kTol).is_tp);
  }
}

TEST(Predicates, Examples) {
  const ChannelPredicates diag = predicates(gallery::diag_m2(), kTol);
  EXPECT_TRUE(diag.is_cp && diag.is_unital && diag.is_tp && diag.is_hermiticity_preserving);

  const ChannelPredicates scaled = predicates(gallery::scaled_trace(2, 1.0), kTol);
  EXPECT_TRUE(scaled.is_cp);
  EXPECT_FALSE(scaled.is_unital);

  CMatrix c = CMatrix::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = -1.0;
  EXPECT_FALSE(predicates(Channel(ChoiMatrix{2, 2, c}), kTol).is_cp);
}

TEST(Stinespring, UnitaryChannel) {
  SeededRng rng(41);
  const CMatrix u = rng.unitary(3);
  const StinespringTriple s = stinespring(Channel(KrausSet{3, 3, {u}}), kTol);
  EXPECT_EQ(s.dilation_dim, 1);
  EXPECT_LE(max_abs(s.isometry - u), 0.0);
}

TEST(Stinespring, DiagonalCompression) {
  const StinespringTriple s = stinespring(gallery::diag_m2(), kTol);
  ASSERT_EQ(s.dilation_dim, 2);
  // V z = (E11 z) ⊗ e1 + (E22 z) ⊗ e2, so V = e1 ⊗ e1 e1^* + e2 ⊗ e2 e2^*.
  CMatrix expected = CMatrix::Zero(4, 2);
  expected(0, 0) = 1.0;
  expected(3, 1) = 1.0;
  EXPECT_LE(max_abs(s.isometry - expected), 0.0);
  EXPECT_LE(max_abs(s.isometry.adjoint() * s.isometry - CMatrix::Identity(2, 2)), 0.0);
}

TEST(Stinespring, UnitalGalleryChannelsGiveIsometries) {
  for (const Channel& ch : {gallery::diag_m2(), gallery::diag_m2_swapped(),
                            gallery::tetrahedral_m3(), gallery::depolarizing(3),
                            gallery::normalized_trace_m2(), gallery::block_state_m3(),
                            gallery::trace_plus_identity(2, 1.0), gallery::sign_flip_m2()}) {
    const StinespringTriple s = stinespring(ch, kTol);
    EXPECT_LE(max_abs(s.isometry.adjoint() * s.isometry - CMatrix::Identity(ch.d2(), ch.d2())),
              1e-9)
        << ch.label();
  }
}

TEST(FixedPointCheck, DiagonalSplitExamples) {
  const Channel ch = ucp_diag_split();
  const FixedPointCheck e11 = fixed_point_check(ch, matrix_unit(2, 0, 0), kTol);
  EXPECT_TRUE(e11.is_fixed);
  EXPECT_TRUE(e11.commutes_with_all_kraus);
  EXPECT_TRUE(e11.diagnostic.empty());
  const FixedPointCheck e12 = fixed_point_check(ch, matrix_unit(2, 0, 1), kTol);
  EXPECT_FALSE(e12.is_fixed);
  EXPECT_FALSE(e12.commutes_with_all_kraus);
  const FixedPointCheck id = fixed_point_check(ch, CMatrix::Identity(2, 2), kTol);
  EXPECT_TRUE(id.is_fixed && id.commutes_with_all_kraus);
}

TEST(FixedPointCheck, Preconditions) {
  EXPECT_EQ(error_code_of([] {
              (void)fixed_point_check(gallery::scaled_trace(2, 1.0), CMatrix::Identity(2, 2), kTol);
            }),
            ErrorCode::NotUnitalTP);
  EXPECT_EQ(error_code_of([] {
              (void)fixed_point_check(gallery::diag_m2(), CMatrix::Identity(3, 3), kTol);
            }),
            ErrorCode::DimensionMismatch);
}

TEST(FixedPointCheck, BooleansAgreeOnRandomCases) {
  SeededRng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = 2 + trial % 3;
    const bool planted = trial % 2 == 0;
    const auto pf = testing::random_planted_fixed_point(rng, d, 3);
    const Channel ch = planted ? pf.channel : testing::random_mixed_unitary(rng, d, 3);
    const CMatrix a = planted ? pf.fixed : testing::random_hermitian(rng, d);
    const FixedPointCheck r = fixed_point_check(ch, a, kTol);
    EXPECT_EQ(r.is_fixed, r.commutes_with_all_kraus) << r.diagnostic;
    if (planted) EXPECT_TRUE(r.is_fixed);
  }
}

TEST(Commutant, Examples) {
  const CommutantInfo diag = commutant_dimension(gallery::diag_m2(), kTol);
  EXPECT_EQ(diag.dim, 2);
  EXPECT_FALSE(diag.is_irreducible);

  SeededRng rng(47);
  const CVector u = rng.unit_vector(3);
  const Channel state(HolevoEnsemble{3, 1, {{ket_bra(u, u), CMatrix::Identity(1, 1)}}});
  const CommutantInfo s = commutant_dimension(state, kTol);
  EXPECT_EQ(s.dim, 1);
  EXPECT_TRUE(s.is_irreducible);

  EXPECT_EQ(commutant_dimension(gallery::normalized_trace_m2(), kTol).dim, 4);
}

TEST(PartialTranspose, MatchesIndexDefinition) {
  SeededRng rng(53);
  for (Index d1 : {1, 2, 3}) {
    for (Index d2 : {1, 2, 3}) {
      const ChoiMatrix c{d1, d2, rng.complex_gaussian(d1 * d2, d1 * d2)};
      EXPECT_LE(max_abs(partial_transpose(c) -
                        oracle::partial_transpose(c.matrix, static_cast<int>(d1),
                                                  static_cast<int>(d2))),
                0.0);
    }
  }
}

TEST(Difference, IsChoiDifference) {
  const Channel phi = gallery::trace_plus_identity(2, 1.0);
  const Channel psi = gallery::scaled_trace(2, 1.0);
  const Channel diff = difference(phi, psi);
  ASSERT_NE(diff.choi(), nullptr);
  // (tr(X) I + X) / 3 - tr(X) I / 3 = X / 3.
  SeededRng rng(59);
  const CMatrix x = rng.complex_gaussian(2, 2);
  EXPECT_LE(max_abs(ebx::apply(diff, x) - x / 3.0), 1e-15);
}

}  // namespace
}  // namespace ebx

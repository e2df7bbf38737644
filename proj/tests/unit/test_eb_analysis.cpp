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

#include "ebx/eb_analysis.hpp"
#include "ebx/error.hpp"
#include "ebx/gallery.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace ebx {
namespace {

const Tolerance kTol;

Channel identity_channel(Index d) { return Channel(KrausSet{d, d, {CMatrix::Identity(d, d)}}); }

// T^* Phi(X) T assembled block by block on the Choi matrix.
Channel compose_ad(const Channel& ch, const CMatrix& t) {
  ChoiMatrix c = to_choi(ch);
  const Index d2 = ch.d2();
  for (Index i = 0; i < ch.d1(); ++i) {
    for (Index j = 0; j < ch.d1(); ++j) {
      c.matrix.block(i * d2, j * d2, d2, d2) =
          t.adjoint() * c.matrix.block(i * d2, j * d2, d2, d2) * t;
    }
  }
  return Channel(std::move(c));
}

TEST(IsPpt, Examples) {
  EXPECT_TRUE(is_ppt(gallery::normalized_trace_m2(), kTol));
  EXPECT_TRUE(is_ppt(gallery::quarter_trace_plus_identity(), kTol));
  EXPECT_FALSE(is_ppt(identity_channel(2), kTol));
  EXPECT_TRUE(is_ppt(gallery::diag_m2(), kTol));
}

TEST(IsPpt, IdentityPartialTransposeHasNegativeEigenvalue) {
  const CMatrix pt = oracle::partial_transpose(to_choi(identity_channel(2)).matrix, 2, 2);
  // The flip operator: eigenvalue -1 on the antisymmetric vector.
  CVector a = CVector::Zero(4);
  a(1) = 1.0 / std::sqrt(2.0);
  a(2) = -1.0 / std::sqrt(2.0);
  EXPECT_NEAR(a.dot(pt * a).real(), -1.0, 1e-15);
  EXPECT_FALSE(oracle::psd_by_cholesky(pt));
}

TEST(IsPpt, AgreesWithOracleOnRandomMaps) {
  SeededRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d1 = 2 + trial % 2;
    const Index d2 = 2 + (trial / 2) % 2;
    const Channel ch = trial % 3 == 0 ? random_unital_eb(rng, d1, d2, 2)
                                      : testing::random_kraus_channel(rng, d1, d2, 1 + trial % 4);
    const CMatrix pt = oracle::partial_transpose(to_choi(ch).matrix, static_cast<int>(d1),
                                                 static_cast<int>(d2));
    const HermEig e = herm_eig((pt + pt.adjoint()) * 0.5, kTol);
    if (std::abs(e.values(e.values.size() - 1)) < 1e-6) continue;
    EXPECT_EQ(is_ppt(ch, kTol), oracle::psd_by_cholesky(pt));
  }
}

TEST(EbVerdict, HolevoChannelIsCertified) {
  SeededRng rng(5);
  for (Index d1 : {2, 3, 4}) {
    for (Index d2 : {2, 3, 4}) {
      const EBVerdict v = eb_verdict(random_unital_eb(rng, d1, d2, 3), kTol);
      EXPECT_EQ(v.is_eb, Tristate::yes);
      EXPECT_TRUE(v.conclusive);
      EXPECT_TRUE(v.certificate.has_value());
      EXPECT_TRUE(v.ppt);
    }
  }
}

TEST(EbVerdict, CpButNotEbDifference) {
  const EBVerdict v =
      eb_verdict(difference(gallery::trace_plus_identity(2, 1.0), gallery::scaled_trace(2, 1.0)),
                 kTol);
  EXPECT_EQ(v.is_eb, Tristate::no);
  EXPECT_FALSE(v.ppt);
  EXPECT_TRUE(v.conclusive);
  EXPECT_FALSE(v.certificate.has_value());
}

TEST(EbVerdict, KrausDiagonalCompressionIsConclusiveWithoutCertificate) {
  const EBVerdict v = eb_verdict(gallery::diag_m2(), kTol);
  EXPECT_EQ(v.is_eb, Tristate::yes);
  EXPECT_TRUE(v.conclusive);
  EXPECT_FALSE(v.certificate.has_value());
  EXPECT_EQ(v.provenance, "PPT conclusive: d1*d2 <= 6");
}

TEST(EbVerdict, PptAboveSixIsUnknown) {
  // The Choi form of a Holevo channel on M_3 carries no certificate.
  const EBVerdict v = eb_verdict(Channel(to_choi(gallery::tetrahedral_m3())), kTol);
  EXPECT_EQ(v.is_eb, Tristate::unknown);
  EXPECT_FALSE(v.conclusive);
  EXPECT_TRUE(v.ppt);
}

TEST(EbVerdict, RejectsNonCp) {
  CMatrix c = CMatrix::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = -1.0;
  try {
    (void)eb_verdict(Channel(ChoiMatrix{2, 2, c}), kTol);
    FAIL() << "expected NotCP";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCP);
  }
}

TEST(EbVerdict, NeverNoWhilePpt) {
  SeededRng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Index d1 = 2 + trial % 3;
    const Index d2 = 2 + (trial / 3) % 3;
    const Channel ch = testing::random_kraus_channel(rng, d1, d2, 1 + trial % 6);
    const EBVerdict v = eb_verdict(ch, kTol);
    EXPECT_FALSE(v.is_eb == Tristate::no && v.ppt);
    if (v.is_eb == Tristate::unknown) EXPECT_GT(d1 * d2, 6);
  }
}

TEST(RankBounds, Examples) {
  const RankBounds diag = rank_bounds(gallery::diag_m2(), kTol);
  EXPECT_EQ(diag.choi_rank, 2);
  EXPECT_EQ(diag.eb_rank_lower, 2);
  EXPECT_EQ(diag.eb_rank_upper, 2);

  const RankBounds dep = rank_bounds(gallery::depolarizing(2), kTol);
  EXPECT_EQ(dep.choi_rank, 4);
  EXPECT_EQ(dep.eb_rank_lower, 4);
  EXPECT_EQ(dep.eb_rank_upper, 4);

  const RankBounds tet = rank_bounds(gallery::tetrahedral_m3(), kTol);
  EXPECT_EQ(tet.choi_rank, 4);
  EXPECT_EQ(tet.eb_rank_upper, 4);

  try {
    (void)rank_bounds(identity_channel(2), kTol);
    FAIL() << "expected NotEB";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEB);
  }
}

TEST(RankBounds, OrderingOnGeneratedChannels) {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d1 = 2 + trial % 2;
    const Index d2 = 2 + (trial / 2) % 2;
    const Channel ch = trial % 2 == 0 ? random_unital_eb(rng, d1, d2, 1 + trial % 5)
                                      : random_cstar_extreme(rng, d1, d2, 1 + trial % d2);
    const RankBounds b = rank_bounds(ch, kTol);
    EXPECT_LE(b.choi_rank, b.eb_rank_lower);
    EXPECT_LE(b.eb_rank_lower, b.eb_rank_upper);
    EXPECT_LE(b.eb_rank_upper, (d1 * d2) * (d1 * d2));
  }
}

TEST(RandomUnitalEb, SeededExample) {
  SeededRng rng(42);
  const Channel ch = random_unital_eb(rng, 2, 2, 3);
  const ChannelPredicates p = predicates(ch, kTol);
  EXPECT_TRUE(p.is_unital);
  EXPECT_TRUE(p.is_cp);
  EXPECT_TRUE(is_ppt(ch, kTol));
}

TEST(RandomUnitalEb, SingleTermIsInflatedPureState) {
  SeededRng rng(43);
  const Channel ch = random_unital_eb(rng, 3, 2, 1);
  ASSERT_NE(ch.holevo(), nullptr);
  ASSERT_EQ(ch.holevo()->terms.size(), 1u);
  EXPECT_EQ(ch.holevo()->terms[0].R, CMatrix::Identity(2, 2));
  const CMatrix& f = ch.holevo()->terms[0].F;
  EXPECT_EQ(svd_rank(f, kTol), 1);
  EXPECT_NEAR(f.trace().real(), 1.0, 1e-14);
}

TEST(RandomUnitalEb, Deterministic) {
  SeededRng a(9);
  SeededRng b(9);
  const Channel x = random_unital_eb(a, 3, 2, 4);
  const Channel y = random_unital_eb(b, 3, 2, 4);
  ASSERT_EQ(x.holevo()->terms.size(), y.holevo()->terms.size());
  for (std::size_t i = 0; i < x.holevo()->terms.size(); ++i) {
    EXPECT_EQ(x.holevo()->terms[i].F, y.holevo()->terms[i].F);
    EXPECT_EQ(x.holevo()->terms[i].R, y.holevo()->terms[i].R);
  }
}

TEST(RandomUnitalEb, PropertiesOverManySeeds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SeededRng rng(seed);
    const Index d1 = 2 + static_cast<Index>(seed % 2);
    const Index d2 = 2 + static_cast<Index>((seed / 2) % 2);
    const Channel ch = random_unital_eb(rng, d1, d2, 1 + static_cast<Index>(seed % 5));
    const ChannelPredicates p = predicates(ch, kTol);
    ASSERT_TRUE(p.is_cp) << seed;
    ASSERT_TRUE(p.is_unital) << seed;
    ASSERT_TRUE(is_ppt(ch, kTol)) << seed;
    ASSERT_GE(choi_rank(ch, kTol), d2) << seed;
  }
}

TEST(RandomCstarExtreme, BlockShapes) {
  SeededRng rng(13);
  const Channel full = random_cstar_extreme(rng, 2, 3, 3);
  ASSERT_EQ(full.holevo()->terms.size(), 3u);
  CMatrix sum = CMatrix::Zero(3, 3);
  for (const auto& t : full.holevo()->terms) {
    EXPECT_EQ(svd_rank(t.R, kTol), 1);
    EXPECT_LE(max_abs(t.R * t.R - t.R), 1e-12);
    sum += t.R;
  }
  EXPECT_LE(max_abs(sum - CMatrix::Identity(3, 3)), 1e-12);

  const Channel single = random_cstar_extreme(rng, 3, 2, 1);
  ASSERT_EQ(single.holevo()->terms.size(), 1u);
  EXPECT_LE(max_abs(single.holevo()->terms[0].R - CMatrix::Identity(2, 2)), 1e-12);

  try {
    (void)random_cstar_extreme(rng, 2, 2, 3);
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Ppt, PreservedUnderAdT) {
  SeededRng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d1 = 2 + trial % 2;
    const Index d2 = 2 + (trial / 2) % 2;
    const Channel ch = random_unital_eb(rng, d1, d2, 1 + trial % 4);
    ASSERT_TRUE(is_ppt(ch, kTol));
    const CMatrix t = rng.complex_gaussian(d2, d2);
    EXPECT_TRUE(is_ppt(compose_ad(ch, t), kTol));
  }
}

}  // namespace
}  // namespace ebx

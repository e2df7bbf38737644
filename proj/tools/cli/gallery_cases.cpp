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

#include "cli/gallery_cases.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "ebx/convex_decomp.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/error.hpp"
#include "ebx/extremality.hpp"
#include "ebx/gallery.hpp"

namespace ebx::cli {
namespace {

class Checks {
 public:
  explicit Checks(CaseResult& out) : out_(out) {}

  void expect(bool cond, const std::string& what) {
    out_.checks.push_back((cond ? "ok: " : "FAILED: ") + what);
    if (!cond) out_.passed = false;
  }

  void expect_le(double value, double bound, const std::string& what) {
    std::ostringstream os;
    os << what << " = " << value << " <= " << bound;
    expect(value <= bound, os.str());
  }

  template <typename Fn>
  void expect_error(ErrorCode code, Fn&& fn, const std::string& what) {
    try {
      fn();
      expect(false, what + " (no error raised)");
    } catch (const Error& e) {
      expect(e.code() == code, what + " (" + std::string(e.what()) + ")");
    }
  }

 private:
  CaseResult& out_;
};

// Phi(X) = x11 (t ⊕ 0) + x33 t33 E33 for t = [[1/2, 1/4], [1/4, 1/2]], t33 = 1/2.
CMatrix example_t() {
  CMatrix t(2, 2);
  t << 0.5, 0.25, 0.25, 0.5;
  return t;
}

constexpr double kT33 = 0.5;

Channel ad_after(const CMatrix& z, const CanonicalEBForm& form) {
  HolevoEnsemble h{form.d1, form.d2, {}};
  for (const auto& b : form.blocks) h.terms.push_back({ket_bra(b.u, b.u), z.adjoint() * b.P * z});
  return Channel(std::move(h));
}

bool same_block(const CanonicalBlock& b, const CVector& u, const CMatrix& p, double tol) {
  return std::abs(std::abs(b.u.dot(u)) - 1.0) <= tol && max_abs(b.P - p) <= tol;
}

void case_4_4(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::normalized_trace_m2();
  const Channel psi = gallery::quarter_trace_plus_identity();
  c.expect(is_ppt(phi, tol) && is_ppt(psi, tol), "Phi and Psi are PPT");
  c.expect(dominates_cp(phi, psi, tol), "Psi <=_CP Phi");
  c.expect(is_ppt(difference(phi, psi), tol), "Phi - Psi is PPT");
  c.expect(dominates_eb(phi, psi, tol) == Tristate::yes, "Psi <=_EB Phi");
  c.expect_error(ErrorCode::NotExtreme, [&] { (void)extract_canonical(phi, tol); },
                 "extract_canonical(Phi) raises NotExtreme");
}

void case_4_5(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::trace_plus_identity(2, 1.0);
  const Channel psi = gallery::scaled_trace(2, 1.0);
  c.expect(predicates(phi, tol).is_unital && predicates(phi, tol).is_cp, "Phi is UCP");
  c.expect(eb_verdict(phi, tol).is_eb == Tristate::yes, "Phi is EB");
  c.expect(dominates_cp(phi, psi, tol), "Psi <=_CP Phi");
  const EBVerdict diff = eb_verdict(difference(phi, psi), tol);
  c.expect(diff.is_eb == Tristate::no && diff.conclusive && !diff.ppt,
           "Phi - Psi is not EB (conclusive PPT failure)");
  c.expect(dominates_eb(phi, psi, tol) == Tristate::no, "Psi is not EB-dominated by Phi");
}

void case_5_3(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::block_state_m3();
  const Channel psi = gallery::block_state_m3_scaled(example_t(), kT33);
  const ExtremalityReport rep = is_cstar_extreme(phi, tol);
  c.expect(rep.is_cstar_extreme && rep.choi_rank == 3, "Phi is C*-extreme with Choi rank 3");
  const CanonicalEBForm form = extract_canonical(phi, tol);
  c.expect(form.blocks.size() == 2, "canonical form has two blocks");
  const CMatrix psi_i = ebx::apply(psi, CMatrix::Identity(3, 3));
  const RNDerivative rn = rn_derivative(form, psi, tol);
  c.expect_le(max_abs(rn.R - psi_i), 1e-9, "||R - Psi(I)||_max");
  c.expect_le(rn.residual, 1e-9, "RN residual");
  const CMatrix z = extremality_witness(form, psi, tol);
  c.expect_le(max_abs(z - psd_sqrt(psi_i, tol)), 1e-9, "||Z - sqrt(Psi(I))||_max");
  c.expect_le(basis_distance(ad_after(z, form), psi), 1e-9, "||Ad_Z o Phi - Psi||");
}

void case_5_4(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::normalized_trace_m2();
  const Channel phi1 = gallery::diag_m2();
  const Channel phi2 = gallery::diag_m2_swapped();
  const ExtremalityReport rep = is_cstar_extreme(phi, tol);
  c.expect(!rep.is_cstar_extreme && rep.choi_rank == 4, "Phi is not C*-extreme (Choi rank 4)");
  c.expect(is_cstar_extreme(phi1, tol).is_cstar_extreme &&
               is_cstar_extreme(phi2, tol).is_cstar_extreme,
           "Phi_1 and Phi_2 are C*-extreme");
  const CMatrix half = CMatrix::Identity(2, 2) / std::sqrt(2.0);
  const CStarCombination comb{2, 2, {{half, phi1}, {half, phi2}}};
  c.expect_le(basis_distance(evaluate(comb, tol), phi), 1e-12, "||1/2 Phi_1 + 1/2 Phi_2 - Phi||");
  const UnitaryEquivalence eq =
      unitary_equivalent(extract_canonical(phi1, tol), extract_canonical(phi2, tol), tol);
  c.expect(eq.equivalent, "Phi_1 and Phi_2 are unitarily equivalent");
}

void case_5_7(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::tetrahedral_m3();
  c.expect(choi_rank(phi, tol) == 4, "Choi rank is 4");
  const ChannelPredicates p = predicates(phi, tol);
  c.expect(p.is_unital && p.is_tp, "Phi is unital and trace preserving");
  c.expect(!is_cstar_extreme(phi, tol).is_cstar_extreme, "Phi is not C*-extreme");
  double worst = 0.0;
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const CMatrix x = matrix_unit(3, i, j);
      CMatrix expected(3, 3);
      const Complex tr = x.trace();
      expected << tr, x(0, 1) + x(1, 0), x(0, 2) + x(2, 0), x(1, 0) + x(0, 1), tr,
          x(1, 2) + x(2, 1), x(2, 0) + x(0, 2), x(2, 1) + x(1, 2), tr;
      worst = std::max(worst, max_abs(ebx::apply(phi, x) - expected / 3.0));
    }
  }
  c.expect_le(worst, 1e-12, "deviation from the closed form");
}

void case_5_9(Checks& c, const Tolerance& tol) {
  const Channel phi = gallery::diag_m2();
  const ExtremalityReport rep = is_cstar_extreme(phi, tol);
  c.expect(rep.is_cstar_extreme, "Phi is C*-extreme");
  c.expect(rep.canonical && rep.canonical->blocks.size() == 2 &&
               same_block(rep.canonical->blocks[0], basis_vector(2, 0), matrix_unit(2, 0, 0), 1e-9) &&
               same_block(rep.canonical->blocks[1], basis_vector(2, 1), matrix_unit(2, 1, 1), 1e-9),
           "canonical form {(e1, E11), (e2, E22)}");
  c.expect(rep.is_cq_linear_extreme_in_ucp == false, "all_overlaps_nonzero is false");
  c.expect_le(basis_distance(evaluate(gallery::diag_m2_ucp_split(), tol), phi), 1e-12,
              "||1/2 (id + Ad_V) - Phi||");
}

void case_depolarizing(Checks& c, const Tolerance& tol) {
  for (Index d : {2, 3}) {
    const Channel phi = gallery::depolarizing(d);
    const std::string tag = "d = " + std::to_string(d) + ": ";
    c.expect(choi_rank(phi, tol) == d * d, tag + "Choi rank is d^2");
    const RankBounds b = rank_bounds(phi, tol);
    c.expect(b.eb_rank_lower == d * d && b.eb_rank_upper == d * d, tag + "EB rank is d^2");
    c.expect(!is_cstar_extreme(phi, tol).is_cstar_extreme, tag + "not C*-extreme");
  }
}

void case_5_6(Checks& c, const Tolerance& tol) {
  std::vector<Channel> sources = {gallery::tetrahedral_m3(), gallery::depolarizing(3),
                                  gallery::normalized_trace_m2()};
  SeededRng rng(56);
  for (int k = 0; k < 4; ++k) sources.push_back(random_unital_eb(rng, 3, 2, 3));
  for (const Channel& src : sources) {
    const CStarCombination comb = km_decompose(src, tol);
    CMatrix gram = CMatrix::Zero(src.d2(), src.d2());
    for (const auto& t : comb.terms) gram += t.T.adjoint() * t.T;
    const DecompositionCheck check = verify_decomposition(comb, src, tol);
    const std::string tag = src.label() + ": ";
    c.expect_le(check.reconstruction_error, 1e-9, tag + "reconstruction error");
    c.expect_le(max_abs(gram - CMatrix::Identity(src.d2(), src.d2())), 1e-10,
                tag + "||sum T*T - I||_max");
    c.expect(check.all_factors_extreme, tag + "every factor is C*-extreme");
  }
}

using CaseFn = std::function<void(Checks&, const Tolerance&)>;

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> cases = {
      {"example_4_4", case_4_4},           {"example_4_5", case_4_5},
      {"example_5_3", case_5_3},           {"example_5_4", case_5_4},
      {"example_5_7", case_5_7},           {"example_5_9", case_5_9},
      {"note_5_depolarizing", case_depolarizing}, {"theorem_5_6", case_5_6},
  };
  return cases;
}

}  // namespace

const std::vector<std::string>& gallery_case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CaseResult run_gallery_case(const std::string& name, const Tolerance& tol) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown gallery case '" + name + "'");
  }
  CaseResult out{name, true, {}};
  Checks checks(out);
  try {
    it->second(checks, tol);
  } catch (const Error& e) {
    checks.expect(false, std::string("unexpected error: ") + e.what());
  }
  return out;
}

std::vector<Channel> gallery_channels() {
  return {gallery::diag_m2(),
          gallery::diag_m2_swapped(),
          gallery::tetrahedral_m3(),
          gallery::depolarizing(2),
          gallery::depolarizing(3),
          gallery::normalized_trace_m2(),
          gallery::quarter_trace_plus_identity(),
          gallery::trace_plus_identity(2, 1.0).with_label("trace_plus_identity_m2"),
          gallery::scaled_trace(2, 1.0).with_label("scaled_trace_m2"),
          gallery::block_state_m3(),
          gallery::block_state_m3_scaled(example_t(), kT33),
          gallery::sign_flip_m2()};
}

}  // namespace ebx::cli

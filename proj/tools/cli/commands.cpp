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

#include "cli/commands.hpp"

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/channel_file.hpp"
#include "cli/gallery_cases.hpp"
#include "cli/report.hpp"
#include "ebx/convex_decomp.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/error.hpp"
#include "ebx/extremality.hpp"
#include "ebx/rng.hpp"

namespace ebx::cli {
namespace {

struct Options {
  double tol = 1e-9;
  bool json = false;
  std::string path;
  std::string other_path;
  std::string dominating;
  std::string kind = "povm-ensemble";
  Index d1 = 2;
  Index d2 = 2;
  Index terms = 2;
  std::uint64_t seed = 0;
  std::string gallery_case;
  bool all = false;
  std::string export_dir;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
      return 1;
    default:
      return 2;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const Options& o, const Tolerance& tol, std::ostream& out) {
  const AnalysisReport r = analyze(load_channel(o.path), tol);
  if (o.json) {
    emit(out, report_to_json(r, tol));
  } else {
    out << report_to_text(r, tol);
  }
  return 0;
}

int cmd_km(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Channel src = load_channel(o.path);
  const CStarCombination comb = km_decompose(src, tol);
  const DecompositionCheck check = verify_decomposition(comb, src, tol);
  CMatrix gram = CMatrix::Zero(src.d2(), src.d2());
  Json terms = Json::array();
  for (const auto& t : comb.terms) {
    gram += t.T.adjoint() * t.T;
    Json jt;
    jt["T"] = matrix_to_json(t.T);
    jt["factor"] = channel_to_json(t.channel);
    terms.push_back(std::move(jt));
  }
  Json j = document_header(tol);
  j["source"] = src.label();
  j["terms"] = std::move(terms);
  j["reconstruction_error"] = check.reconstruction_error;
  j["coefficient_defect"] = max_abs(gram - CMatrix::Identity(src.d2(), src.d2()));
  j["all_factors_extreme"] = check.all_factors_extreme;
  j["proper"] = check.proper;
  j["diagnostics"] = check.diagnostics;
  emit(out, j);
  return 0;
}

int cmd_rn(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Channel psi = load_channel(o.path);
  const Channel phi = load_channel(o.dominating);
  const CanonicalEBForm form = extract_canonical(phi, tol);
  const RNDerivative rn = rn_derivative(form, psi, tol);
  Json blocks = Json::array();
  for (const auto& b : rn.per_block) blocks.push_back(matrix_to_json(b));
  Json j = document_header(tol);
  j["canonical"] = canonical_to_json(form);
  j["R"] = matrix_to_json(rn.R);
  j["per_block"] = std::move(blocks);
  j["residual"] = rn.residual;
  emit(out, j);
  return 0;
}

int cmd_arveson(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Channel psi = load_channel(o.path);
  const Channel phi = load_channel(o.dominating);
  const ArvesonDerivative a = arveson_derivative(phi, psi, tol);
  Json j = document_header(tol);
  j["T"] = matrix_to_json(a.T);
  j["residual"] = a.residual;
  emit(out, j);
  return 0;
}

int cmd_equiv(const Options& o, const Tolerance& tol, std::ostream& out) {
  const CanonicalEBForm a = extract_canonical(load_channel(o.path), tol);
  const CanonicalEBForm b = extract_canonical(load_channel(o.other_path), tol);
  const UnitaryEquivalence eq = unitary_equivalent(a, b, tol);
  Json j = document_header(tol);
  j["equivalent"] = eq.equivalent;
  j["witness_unitary"] = eq.witness_unitary ? matrix_to_json(*eq.witness_unitary) : Json(nullptr);
  emit(out, j);
  return 0;
}

int cmd_random(const Options& o, std::ostream& out) {
  SeededRng rng(o.seed);
  const Channel ch = o.kind == "cstar-extreme" ? random_cstar_extreme(rng, o.d1, o.d2, o.terms)
                                               : random_unital_eb(rng, o.d1, o.d2, o.terms);
  out << serialize_channel(ch);
  return 0;
}

int cmd_gallery(const Options& o, const Tolerance& tol, std::ostream& out, std::ostream& err) {
  if (!o.export_dir.empty()) {
    std::filesystem::create_directories(o.export_dir);
    for (const Channel& ch : gallery_channels()) {
      save_channel(ch, std::filesystem::path(o.export_dir) / (ch.label() + ".json"));
    }
    if (!o.all && o.gallery_case.empty()) return 0;
  }
  std::vector<std::string> names;
  if (o.all) {
    names = gallery_case_names();
  } else if (!o.gallery_case.empty()) {
    names.push_back(o.gallery_case);
  } else {
    err << "gallery: pass --case <name>, --all or --export <dir>\n";
    return 1;
  }
  std::vector<CaseResult> results;
  for (const auto& n : names) results.push_back(run_gallery_case(n, tol));
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;

  if (o.json) {
    Json j = document_header(tol);
    Json cases = Json::array();
    for (const auto& r : results) {
      cases.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}});
    }
    j["cases"] = std::move(cases);
    j["passed"] = passed;
    j["total"] = results.size();
    emit(out, j);
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(22) << r.name << (r.passed ? "PASS" : "FAIL") << "\n";
      for (const auto& c : r.checks) {
        if (!r.passed || c.rfind("FAILED", 0) == 0) out << "    " << c << "\n";
      }
    }
    out << passed << "/" << results.size() << " PASS\n";
  }
  return passed == results.size() ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Analysis of unital entanglement-breaking maps between matrix algebras", "ebx"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Numerical tolerance (rank, PSD floor and equality)")
      ->envname("EBX_TOL");
  app.add_flag("--json", o.json, "Emit JSON");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report for a channel file");
  analyze_cmd->add_option("path", o.path, "Channel file")->required();

  auto* km_cmd = app.add_subcommand("km", "C*-convex decomposition into pure-state factors");
  km_cmd->add_option("path", o.path, "Channel file with a Holevo representation")->required();

  auto* rn_cmd = app.add_subcommand("rn", "Radon-Nikodym derivative against a C*-extreme map");
  rn_cmd->add_option("path", o.path, "Dominated channel file")->required();
  rn_cmd->add_option("--dominating", o.dominating, "C*-extreme dominating channel file")
      ->required();

  auto* arveson_cmd = app.add_subcommand("arveson", "Arveson derivative coefficients");
  arveson_cmd->add_option("path", o.path, "Dominated channel file")->required();
  arveson_cmd->add_option("--dominating", o.dominating, "Dominating channel file")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Unitary equivalence of two C*-extreme maps");
  equiv_cmd->add_option("a", o.path, "First channel file")->required();
  equiv_cmd->add_option("b", o.other_path, "Second channel file")->required();

  auto* random_cmd = app.add_subcommand("random", "Seeded random unital EB channel");
  random_cmd->add_option("--kind", o.kind, "Generator")
      ->check(CLI::IsMember({"povm-ensemble", "cstar-extreme"}));
  random_cmd->add_option("--d1", o.d1, "Input dimension")->check(CLI::PositiveNumber);
  random_cmd->add_option("--d2", o.d2, "Output dimension")->check(CLI::PositiveNumber);
  random_cmd->add_option("--terms", o.terms, "Ensemble terms or canonical blocks")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", o.seed, "Generator seed");

  auto* gallery_cmd = app.add_subcommand("gallery", "Run the worked-example gallery");
  auto* case_opt = gallery_cmd->add_option("--case", o.gallery_case, "Case name")
                       ->check(CLI::IsMember(gallery_case_names()));
  gallery_cmd->add_flag("--all", o.all, "Run every case")->excludes(case_opt);
  gallery_cmd->add_option("--export", o.export_dir, "Write the gallery channel files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Tolerance tol = Tolerance::uniform(o.tol);
  try {
    tol.validate();
    if (analyze_cmd->parsed()) return cmd_analyze(o, tol, out);
    if (km_cmd->parsed()) return cmd_km(o, tol, out);
    if (rn_cmd->parsed()) return cmd_rn(o, tol, out);
    if (arveson_cmd->parsed()) return cmd_arveson(o, tol, out);
    if (equiv_cmd->parsed()) return cmd_equiv(o, tol, out);
    if (random_cmd->parsed()) return cmd_random(o, out);
    if (gallery_cmd->parsed()) return cmd_gallery(o, tol, out, err);
  } catch (const Error& e) {
    err << "ebx: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "ebx: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace ebx::cli

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

#include "cli/report.hpp"

#include <sstream>

#include "ebx/error.hpp"

namespace ebx::cli {
namespace {

std::string representation_name(const Channel& ch) {
  if (ch.kraus()) return "kraus";
  if (ch.choi()) return "choi";
  return "holevo";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const Channel& ch, const Tolerance& tol) {
  AnalysisReport r;
  r.d1 = ch.d1();
  r.d2 = ch.d2();
  r.label = ch.label();
  r.representation = representation_name(ch);
  r.predicates = predicates(ch, tol);
  r.choi_rank = choi_rank(ch, tol);
  r.ppt = is_ppt(ch, tol);
  r.commutant = commutant_dimension(ch, tol);

  if (!r.predicates.is_cp) {
    r.notes.push_back("map is not completely positive; EB and extremality analyses skipped");
    return r;
  }
  r.eb = eb_verdict(ch, tol);
  if (r.eb->is_eb != Tristate::yes) {
    r.notes.push_back("EB-rank bounds and extremality need a channel certified EB");
    return r;
  }
  r.rank_bounds = ebx::rank_bounds(ch, tol);
  if (!r.predicates.is_unital) {
    r.notes.push_back("map is not unital; C*-extremality not analyzed");
    return r;
  }
  r.extremality = is_cstar_extreme(ch, tol);
  if (ch.kraus()) {
    r.notes.push_back("Stinespring minimality is not enforced for Kraus input");
  }
  return r;
}

Json tolerance_to_json(const Tolerance& tol) {
  Json j;
  j["rank_rel"] = tol.rank_rel;
  j["psd_floor"] = tol.psd_floor;
  j["eq_abs"] = tol.eq_abs;
  return j;
}

Json document_header(const Tolerance& tol) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["tolerance"] = tolerance_to_json(tol);
  return j;
}

Json canonical_to_json(const CanonicalEBForm& form) {
  Json blocks = Json::array();
  for (const auto& b : form.blocks) {
    Json jb;
    jb["u"] = vector_to_json(b.u);
    jb["P"] = matrix_to_json(b.P);
    blocks.push_back(std::move(jb));
  }
  Json j;
  j["d1"] = form.d1;
  j["d2"] = form.d2;
  j["blocks"] = std::move(blocks);
  return j;
}

Json report_to_json(const AnalysisReport& r, const Tolerance& tol) {
  Json j = document_header(tol);
  j["channel"] = {{"d1", r.d1}, {"d2", r.d2}, {"label", r.label}, {"representation", r.representation}};
  j["predicates"] = {{"is_cp", r.predicates.is_cp},
                     {"is_unital", r.predicates.is_unital},
                     {"is_tp", r.predicates.is_tp},
                     {"is_hermiticity_preserving", r.predicates.is_hermiticity_preserving}};
  j["ppt"] = r.ppt;
  j["choi_rank"] = r.choi_rank;
  if (r.eb) {
    j["eb"] = {{"is_eb", std::string(to_string(r.eb->is_eb))},
               {"conclusive", r.eb->conclusive},
               {"has_certificate", r.eb->certificate.has_value()},
               {"provenance", r.eb->provenance}};
  } else {
    j["eb"] = nullptr;
  }
  if (r.rank_bounds) {
    j["eb_rank"] = {{"lower", r.rank_bounds->eb_rank_lower}, {"upper", r.rank_bounds->eb_rank_upper}};
  } else {
    j["eb_rank"] = nullptr;
  }
  if (r.extremality) {
    const ExtremalityReport& e = *r.extremality;
    Json je;
    je["is_cstar_extreme"] = e.is_cstar_extreme;
    je["canonical"] = e.canonical ? canonical_to_json(*e.canonical) : Json(nullptr);
    je["is_cq_linear_extreme_in_ucp"] =
        e.is_cq_linear_extreme_in_ucp ? Json(*e.is_cq_linear_extreme_in_ucp) : Json(nullptr);
    j["extremality"] = std::move(je);
  } else {
    j["extremality"] = nullptr;
  }
  j["commutant"] = {{"dim", r.commutant.dim}, {"is_irreducible", r.commutant.is_irreducible}};
  j["notes"] = r.notes;
  return j;
}

std::string report_to_text(const AnalysisReport& r, const Tolerance& tol) {
  std::ostringstream os;
  os << "channel         " << (r.label.empty() ? "(unlabeled)" : r.label) << "  M_" << r.d1
     << " -> M_" << r.d2 << "  [" << r.representation << "]\n";
  os << "tolerance       " << tol.rank_rel << " / " << tol.psd_floor << " / " << tol.eq_abs << "\n";
  os << "cp unital tp    " << yes_no(r.predicates.is_cp) << " " << yes_no(r.predicates.is_unital)
     << " " << yes_no(r.predicates.is_tp) << "\n";
  os << "ppt             " << yes_no(r.ppt) << "\n";
  os << "choi rank       " << r.choi_rank << "\n";
  if (r.eb) {
    os << "eb              " << to_string(r.eb->is_eb) << " (" << r.eb->provenance << ")\n";
  }
  if (r.rank_bounds) {
    os << "eb rank         [" << r.rank_bounds->eb_rank_lower << ", "
       << r.rank_bounds->eb_rank_upper << "]\n";
  }
  if (r.extremality) {
    const ExtremalityReport& e = *r.extremality;
    os << "c*-extreme      " << yes_no(e.is_cstar_extreme) << "\n";
    if (e.canonical) os << "canonical       " << e.canonical->blocks.size() << " block(s)\n";
    if (e.is_cq_linear_extreme_in_ucp) {
      os << "cq remark flag  " << yes_no(*e.is_cq_linear_extreme_in_ucp) << "\n";
    }
  }
  os << "commutant dim   " << r.commutant.dim << (r.commutant.is_irreducible ? " (irreducible)" : "")
     << "\n";
  for (const auto& n : r.notes) os << "note            " << n << "\n";
  return os.str();
}

}  // namespace ebx::cli

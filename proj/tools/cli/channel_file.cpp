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

#include "cli/channel_file.hpp"

#include <fstream>
#include <sstream>

#include "ebx/error.hpp"

namespace ebx::cli {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Index read_dim(const Json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    parse_fail(std::string("field '") + key + "' must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

Complex read_entry(const Json& e, std::string_view where) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    parse_fail(std::string(where) + ": complex entries must be [re, im]");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back({v(k).real(), v(k).imag()});
  return out;
}

CMatrix matrix_from_json(const Json& j, Index rows, Index cols, std::string_view where) {
  if (!j.is_array()) parse_fail(std::string(where) + ": matrix must be an array of rows");
  if (static_cast<Index>(j.size()) != rows) {
    throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": expected " +
                                                  std::to_string(rows) + " rows, got " +
                                                  std::to_string(j.size()));
  }
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) parse_fail(std::string(where) + ": matrix rows must be arrays");
    if (static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": expected " +
                                                    std::to_string(cols) + " columns, got " +
                                                    std::to_string(row.size()));
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = read_entry(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

Json channel_to_json(const Channel& ch) {
  Json out;
  out["d1"] = ch.d1();
  out["d2"] = ch.d2();
  if (!ch.label().empty()) out["label"] = ch.label();
  Json rep;
  if (const auto* k = ch.kraus()) {
    Json ops = Json::array();
    for (const auto& v : k->operators) ops.push_back(matrix_to_json(v));
    rep["kraus"] = std::move(ops);
  } else if (const auto* c = ch.choi()) {
    rep["choi"] = matrix_to_json(c->matrix);
  } else if (const auto* h = ch.holevo()) {
    Json terms = Json::array();
    for (const auto& t : h->terms) {
      Json term;
      term["F"] = matrix_to_json(t.F);
      term["R"] = matrix_to_json(t.R);
      terms.push_back(std::move(term));
    }
    rep["holevo"] = std::move(terms);
  }
  out["representation"] = std::move(rep);
  return out;
}

Channel channel_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("channel file must be an object");
  const Index d1 = read_dim(j, "d1");
  const Index d2 = read_dim(j, "d2");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) parse_fail("field 'label' must be a string");
    label = j["label"].get<std::string>();
  }
  if (!j.contains("representation") || !j["representation"].is_object() ||
      j["representation"].size() != 1) {
    parse_fail("field 'representation' must be an object with exactly one of kraus, choi, holevo");
  }
  const Json& rep = j["representation"];
  if (rep.contains("kraus")) {
    const Json& ops = rep["kraus"];
    if (!ops.is_array() || ops.empty()) parse_fail("'kraus' must be a non-empty list of matrices");
    KrausSet k{d1, d2, {}};
    for (std::size_t i = 0; i < ops.size(); ++i) {
      k.operators.push_back(matrix_from_json(ops[i], d1, d2, "kraus[" + std::to_string(i) + "]"));
    }
    return Channel(std::move(k), label);
  }
  if (rep.contains("choi")) {
    return Channel(ChoiMatrix{d1, d2, matrix_from_json(rep["choi"], d1 * d2, d1 * d2, "choi")},
                   label);
  }
  if (rep.contains("holevo")) {
    const Json& terms = rep["holevo"];
    if (!terms.is_array() || terms.empty()) parse_fail("'holevo' must be a non-empty list");
    HolevoEnsemble h{d1, d2, {}};
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Json& t = terms[i];
      const std::string where = "holevo[" + std::to_string(i) + "]";
      if (!t.is_object() || !t.contains("F") || !t.contains("R")) {
        parse_fail(where + " must be an object with F and R");
      }
      h.terms.push_back({matrix_from_json(t["F"], d1, d1, where + ".F"),
                         matrix_from_json(t["R"], d2, d2, where + ".R")});
    }
    return Channel(std::move(h), label);
  }
  parse_fail("unknown representation; expected kraus, choi or holevo");
}

std::string serialize_channel(const Channel& ch) { return channel_to_json(ch).dump(2) + "\n"; }

Channel parse_channel(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  return channel_from_json(j);
}

Channel load_channel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    parse_fail("'" + path.string() + "' is empty");
  }
  return parse_channel(text);
}

void save_channel(const Channel& ch, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  out << serialize_channel(ch);
}

}  // namespace ebx::cli

// Copyright 2026 The choi Authors
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

#pragma once

// JSON file formats for matrices, Kraus sets and channels, and a
// deterministic writer that prints every double with 17 significant digits.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "choi/bipartite.hpp"
#include "choi/channel.hpp"
#include "choi/error.hpp"
#include "choi/matrix.hpp"

namespace choi::io {

using Json = nlohmann::ordered_json;

enum class Representation { Choi, Superop, Kraus };

inline const char* to_string(Representation r) {
  switch (r) {
    case Representation::Choi: return "choi";
    case Representation::Superop: return "superop";
    case Representation::Kraus: return "kraus";
  }
  return "?";
}

inline Representation parse_representation(const std::string& s) {
  if (s == "choi") return Representation::Choi;
  if (s == "superop") return Representation::Superop;
  if (s == "kraus") return Representation::Kraus;
  fail(ErrorKind::Parse, "unknown representation \"" + s + "\" (expected choi, superop or kraus)");
}

// ---------------------------------------------------------------------------
// Writer

inline std::string format_double(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::NonFinite, "cannot serialize a non-finite number");
  if (x == 0.0) return "0.0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j)
    if (e.is_structured()) return false;
  return true;
}

inline void write(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (is_flat(j)) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          write(out, j[k], indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += inner;
        write(out, j[k], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Two-space indented JSON; arrays of scalars stay on one line.
inline std::string render(const Json& j) {
  std::string out;
  detail::write(out, j, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Reading

inline Json parse(const std::string& text, const std::string& origin = "input") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, origin + ": " + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::Parse, std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::size_t dimension(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail(ErrorKind::Parse, std::string("field \"") + key + "\" must be an integer");
  const auto d = v.get<long long>();
  if (d <= 0) fail(ErrorKind::DimensionMismatch, std::string("field \"") + key + "\" must be positive");
  return static_cast<std::size_t>(d);
}

inline double number(const Json& v) {
  if (!v.is_number()) fail(ErrorKind::Parse, "matrix entries must be [re, im] number pairs");
  return v.get<double>();
}

}  // namespace detail

inline Json matrix_to_json(const Matrix& a) {
  Json data = Json::array();
  for (const Complex& z : a.data()) data.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

inline Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = detail::dimension(j, "rows");
  const std::size_t cols = detail::dimension(j, "cols");
  const Json& data = detail::field(j, "data");
  if (!data.is_array()) fail(ErrorKind::Parse, "\"data\" must be an array");
  if (data.size() != rows * cols)
    fail(ErrorKind::DimensionMismatch, "\"data\" has " + std::to_string(data.size()) +
                                           " entries, expected " + std::to_string(rows * cols));
  std::vector<Complex> values;
  values.reserve(data.size());
  for (const Json& e : data) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "matrix entries must be [re, im] pairs");
    values.emplace_back(detail::number(e[0]), detail::number(e[1]));
  }
  return Matrix(rows, cols, std::move(values));
}

inline Json kraus_to_json(const KrausSet& k) {
  Json ops = Json::array();
  for (const Matrix& a : k.ops()) ops.push_back(matrix_to_json(a));
  return Json{{"m", k.shape().m}, {"n", k.shape().n}, {"kraus", std::move(ops)}};
}

inline KrausSet kraus_from_json(const Json& j) {
  const BipartiteShape shape(detail::dimension(j, "m"), detail::dimension(j, "n"));
  const Json& list = detail::field(j, "kraus");
  if (!list.is_array() || list.empty()) fail(ErrorKind::Parse, "\"kraus\" must be a non-empty array");
  std::vector<Matrix> ops;
  for (const Json& e : list) ops.push_back(matrix_from_json(e));
  return KrausSet(shape, std::move(ops));
}

/// Channel in a chosen representation. The Kraus form requires a CP map.
inline Json channel_to_json(const Channel& c, Representation rep, const Tolerance& tol = {}) {
  Json payload;
  switch (rep) {
    case Representation::Choi: payload = matrix_to_json(c.choi_matrix()); break;
    case Representation::Superop: payload = matrix_to_json(superop_from_channel(c)); break;
    case Representation::Kraus: payload = kraus_to_json(kraus_from_channel(c, tol)); break;
  }
  return Json{{"m", c.output_dim()},
              {"n", c.input_dim()},
              {"representation", to_string(rep)},
              {"payload", std::move(payload)}};
}

struct ChannelFile {
  Channel channel;
  Representation representation;
};

inline ChannelFile channel_from_json(const Json& j) {
  const BipartiteShape shape(detail::dimension(j, "m"), detail::dimension(j, "n"));
  const Json& rep_field = detail::field(j, "representation");
  if (!rep_field.is_string()) fail(ErrorKind::Parse, "\"representation\" must be a string");
  const Representation rep = parse_representation(rep_field.get<std::string>());
  const Json& payload = detail::field(j, "payload");
  switch (rep) {
    case Representation::Choi: {
      Matrix a = matrix_from_json(payload);
      require(a.rows() == shape.dim() && a.cols() == shape.dim(), ErrorKind::DimensionMismatch,
              "choi payload must be mn x mn for shape " + to_string(shape));
      return {Channel(shape, std::move(a)), rep};
    }
    case Representation::Superop: {
      Matrix a = matrix_from_json(payload);
      require(a.rows() == shape.m * shape.m && a.cols() == shape.n * shape.n,
              ErrorKind::DimensionMismatch, "superop payload must be m^2 x n^2 for shape " + to_string(shape));
      return {channel_from_superop(a, shape), rep};
    }
    case Representation::Kraus: {
      const KrausSet k = kraus_from_json(payload);
      require(k.shape() == shape, ErrorKind::DimensionMismatch,
              "Kraus payload shape " + to_string(k.shape()) + " differs from " + to_string(shape));
      return {channel_from_kraus(k), rep};
    }
  }
  fail(ErrorKind::Parse, "unreachable representation");
}

}  // namespace choi::io

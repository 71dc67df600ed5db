// Copyright 2026 The choiscope Authors
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

#include "choiscope/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "choiscope/core/linalg.hpp"

namespace choiscope::io {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string pointer(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError("expected a number", where);
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError("non-finite number", where);
  return x;
}

Mat parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw FormatError("expected a nonempty array of rows", where);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rw = pointer(where, r);
    if (!row.is_array() || row.empty()) throw FormatError("expected a nonempty row", rw);
    if (r == 0) cols = row.size();
    if (row.size() != cols) {
      throw DimensionError("ragged matrix: row " + rw + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(cols));
    }
  }
  Mat m(idx(rows), idx(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const json& z = j[r][c];
      const std::string zw = pointer(pointer(where, r), c);
      if (!z.is_array() || z.size() != 2) throw FormatError("expected a [re, im] pair", zw);
      m(idx(r), idx(c)) = Complex(number(z[0], pointer(zw, 0)), number(z[1], pointer(zw, 1)));
    }
  }
  return m;
}

std::size_t positive(const json& obj, const char* key) {
  const std::string where = std::string("/") + key;
  if (!obj.contains(key)) throw FormatError(std::string("missing field '") + key + "'", "/");
  const json& v = obj[key];
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(std::string("'") + key + "' must be a positive integer", where);
  }
  return v.get<std::size_t>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

void expect_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != idx(rows) || m.cols() != idx(cols)) {
    std::ostringstream os;
    os << what << " must be " << rows << "x" << cols << " for the declared dimensions, got "
       << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

std::string number_text(double x) {
  if (x == 0.0) x = 0.0;  // no "-0.0" in output
  return json(x).dump();
}

void write_matrix(std::ostringstream& os, const Mat& m, const std::string& indent) {
  os << "[\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << indent << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << "[" << number_text(m(r, c).real()) << ", " << number_text(m(r, c).imag()) << "]";
    }
    os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
  }
  os << indent << "]";
}

ordered_json vector_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back({v(k).real(), v(k).imag()});
  return out;
}

ordered_json verdict_json(const channels::Verdict& v) {
  return ordered_json{{"holds", v.holds}, {"residual", v.residual}, {"threshold", v.threshold}};
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kChoi:
      return "choi";
    case ChannelKind::kSuperop:
      return "superop";
    case ChannelKind::kKraus:
      return "kraus";
    case ChannelKind::kUnitary:
      return "unitary";
  }
  return "unknown";
}

ChannelKind parse_kind(std::string_view text) {
  if (text == "choi") return ChannelKind::kChoi;
  if (text == "superop") return ChannelKind::kSuperop;
  if (text == "kraus") return ChannelKind::kKraus;
  if (text == "unitary") return ChannelKind::kUnitary;
  throw ArgumentError("unknown channel kind '" + std::string(text) + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ChannelFile parse_channel_file(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw FormatError("top level must be an object", "/");
  if (!root.contains("kind") || !root["kind"].is_string()) {
    throw FormatError("missing or non-string field 'kind'", "/kind");
  }
  ChannelFile f;
  try {
    f.kind = parse_kind(root["kind"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw FormatError(e.what(), "/kind");
  }
  f.dim_in = positive(root, "dim_in");
  f.dim_out = positive(root, "dim_out");
  if (!root.contains("data")) throw FormatError("missing field 'data'", "/");
  const json& data = root["data"];

  const std::size_t a = f.dim_in, b = f.dim_out;
  switch (f.kind) {
    case ChannelKind::kChoi:
      f.data.push_back(parse_matrix(data, "/data"));
      expect_shape(f.data[0], a * b, a * b, "Choi matrix");
      break;
    case ChannelKind::kSuperop:
      f.data.push_back(parse_matrix(data, "/data"));
      expect_shape(f.data[0], b * b, a * a, "superoperator");
      break;
    case ChannelKind::kUnitary:
      f.data.push_back(parse_matrix(data, "/data"));
      if (a != b) throw DimensionError("unitary channel needs dim_in == dim_out");
      expect_shape(f.data[0], b, a, "unitary");
      break;
    case ChannelKind::kKraus:
      if (!data.is_array() || data.empty()) {
        throw FormatError("kraus data must be a nonempty list of matrices", "/data");
      }
      for (std::size_t k = 0; k < data.size(); ++k) {
        f.data.push_back(parse_matrix(data[k], pointer("/data", k)));
        expect_shape(f.data.back(), b, a, "Kraus operator " + std::to_string(k));
      }
      break;
  }
  return f;
}

ChannelFile read_channel_file(const std::filesystem::path& path) {
  return parse_channel_file(read_text(path));
}

std::string write_channel_file(const ChannelFile& file) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"kind\": \"" << to_string(file.kind) << "\",\n";
  os << "  \"dim_in\": " << file.dim_in << ",\n";
  os << "  \"dim_out\": " << file.dim_out << ",\n";
  os << "  \"data\": ";
  if (file.kind == ChannelKind::kKraus) {
    os << "[\n";
    for (std::size_t k = 0; k < file.data.size(); ++k) {
      os << "    ";
      write_matrix(os, file.data[k], "    ");
      os << (k + 1 < file.data.size() ? "," : "") << "\n";
    }
    os << "  ]";
  } else {
    write_matrix(os, file.data.at(0), "  ");
  }
  os << "\n}\n";
  return os.str();
}

channels::Channel to_channel(const ChannelFile& file, const Tol& tol, bool normalized) {
  switch (file.kind) {
    case ChannelKind::kChoi: {
      Mat choi = file.data.at(0);
      if (normalized) choi *= static_cast<double>(file.dim_in);
      return channels::Channel::from_choi(std::move(choi), file.dim_in, file.dim_out);
    }
    case ChannelKind::kSuperop:
      return channels::Channel::from_superoperator(file.data.at(0), file.dim_in, file.dim_out);
    case ChannelKind::kKraus:
      return channels::from_kraus(channels::KrausSet{file.data});
    case ChannelKind::kUnitary:
      return channels::unitary_channel(file.data.at(0), tol);
  }
  throw ArgumentError("unknown channel kind");
}

ChannelFile from_channel(const channels::Channel& channel, ChannelKind kind, const Tol& tol) {
  ChannelFile f{kind, channel.dim_in(), channel.dim_out(), {}};
  switch (kind) {
    case ChannelKind::kChoi:
      f.data.push_back(channel.choi());
      break;
    case ChannelKind::kSuperop:
      f.data.push_back(channel.superoperator());
      break;
    case ChannelKind::kKraus:
      f.data = channels::kraus_decompose(channel, tol).operators;
      break;
    case ChannelKind::kUnitary:
      throw ArgumentError("'unitary' is an input format only");
  }
  return f;
}

std::string write_report(const channels::PropertyReport& report, Seed seed, const Tol& tol,
                         const channels::PPOptions& options) {
  ordered_json pp{{"outcome", std::string(channels::to_string(report.pp.outcome))},
                  {"best_value", report.pp.best_value},
                  {"threshold", report.pp.threshold},
                  {"restarts", report.pp.restarts},
                  {"max_iters", options.max_iters}};
  if (report.pp.witness) {
    pp["witness"] = ordered_json{{"input", vector_json(report.pp.witness->input)},
                                 {"output", vector_json(report.pp.witness->output)},
                                 {"value", report.pp.witness->value}};
  } else {
    pp["witness"] = nullptr;
  }
  ordered_json out{{"tool", std::string(kToolName)},
                   {"version", std::string(kToolVersion)},
                   {"seed", seed.value},
                   {"tolerance", {{"rel", tol.rel()}, {"abs", tol.abs()}}},
                   {"dim_in", report.dim_in},
                   {"dim_out", report.dim_out},
                   {"hp", verdict_json(report.hp)},
                   {"cpp", verdict_json(report.cpp)},
                   {"min_choi_eigenvalue", report.min_choi_eigenvalue},
                   {"tp", verdict_json(report.tp)},
                   {"unital", verdict_json(report.unital)},
                   {"doubly_stochastic", report.doubly_stochastic},
                   {"choi_trace", report.choi_trace},
                   {"pp", std::move(pp)}};
  return out.dump(2) + "\n";
}

diagram::Env parse_env_file(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object() || !root.contains("tensors") || !root["tensors"].is_object()) {
    throw FormatError("expected an object with a 'tensors' object", "/tensors");
  }
  diagram::Env env;
  for (const auto& [name, entry] : root["tensors"].items()) {
    const std::string where = "/tensors/" + name;
    if (!entry.is_object() || !entry.contains("data")) {
      throw FormatError("tensor entry needs a 'data' matrix", where);
    }
    Mat m = parse_matrix(entry["data"], where + "/data");
    auto dims = [&](const char* key, std::size_t fallback) {
      diagram::Dims out;
      if (!entry.contains(key)) return diagram::Dims{fallback};
      const json& j = entry[key];
      if (!j.is_array()) throw FormatError(std::string("'") + key + "' must be a list", where);
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer() || j[k].get<long long>() <= 0) {
          throw FormatError("wire dimensions must be positive integers",
                            where + "/" + key + "/" + std::to_string(k));
        }
        out.push_back(j[k].get<std::size_t>());
      }
      return out;
    };
    diagram::Dims domain = dims("domain", static_cast<std::size_t>(m.cols()));
    diagram::Dims codomain = dims("codomain", static_cast<std::size_t>(m.rows()));
    try {
      env.bind(name, std::move(m), std::move(domain), std::move(codomain));
    } catch (const ArgumentError& e) {
      throw FormatError(e.what(), where);
    }
  }
  return env;
}

diagram::Env read_env_file(const std::filesystem::path& path) {
  return parse_env_file(read_text(path));
}

}  // namespace choiscope::io

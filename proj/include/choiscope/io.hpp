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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "choiscope/channels.hpp"
#include "choiscope/core/types.hpp"
#include "choiscope/diagram.hpp"

// JSON file formats shared by the command-line tool and any other front end.
//
// Channel file:
//   { "kind": "choi" | "superop" | "kraus" | "unitary",
//     "dim_in": <int>, "dim_out": <int>,
//     "data": <matrix> | [<matrix>, ...] }      (a list only for "kraus")
// A matrix is a row-major array of rows, each entry a [re, im] pair.
//
// Environment file (named boxes for diagram expressions):
//   { "tensors": { "<name>": { "domain": [..], "codomain": [..],
//                              "data": <matrix> }, ... } }
// domain/codomain default to [cols] and [rows].
namespace choiscope::io {

inline constexpr std::string_view kToolName = "choiscope";
inline constexpr std::string_view kToolVersion = "0.1.0";

// The file is not well-formed: bad JSON, a missing or mistyped field, a
// non-finite number. `where` is a byte offset ("byte 17") or a JSON pointer
// ("/data/1/0").
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::string where)
      : Error(what + " (at " + where + ")"), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class ChannelKind { kChoi, kSuperop, kKraus, kUnitary };

std::string_view to_string(ChannelKind kind);
ChannelKind parse_kind(std::string_view text);  // ArgumentError on unknown names

struct ChannelFile {
  ChannelKind kind = ChannelKind::kChoi;
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  std::vector<Mat> data;  // exactly one matrix unless kind == kKraus
};

// FormatError when malformed, DimensionError when the declared dimensions
// disagree with the array shapes.
ChannelFile parse_channel_file(std::string_view text);
ChannelFile read_channel_file(const std::filesystem::path& path);

std::string write_channel_file(const ChannelFile& file);

// Builds the channel. With `normalized`, a "choi" payload is taken to be
// J / dim_in and is scaled by dim_in on ingest. A "unitary" payload that is
// not unitary raises PropertyError.
channels::Channel to_channel(const ChannelFile& file, const Tol& tol = {},
                             bool normalized = false);

// Re-expresses a channel; kKraus needs a CPP channel (PropertyError
// otherwise), kUnitary is not a conversion target.
ChannelFile from_channel(const channels::Channel& channel, ChannelKind kind, const Tol& tol = {});

// Machine-readable property report. Byte-identical for identical inputs.
std::string write_report(const channels::PropertyReport& report, Seed seed, const Tol& tol,
                         const channels::PPOptions& options);

diagram::Env parse_env_file(std::string_view text);
diagram::Env read_env_file(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

}  // namespace choiscope::io

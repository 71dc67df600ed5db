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

#include <gtest/gtest.h>
#include <json.hpp>

#include "choiscope/core/linalg.hpp"
#include "choiscope/core/random.hpp"
#include "choiscope/io.hpp"
#include "choiscope/wires.hpp"
#include "test_util.hpp"

namespace choiscope {
namespace {

using namespace io;

const char* kTranspose = R"({
  "kind": "choi", "dim_in": 2, "dim_out": 2,
  "data": [[[1,0],[0,0],[0,0],[0,0]],
           [[0,0],[0,0],[1,0],[0,0]],
           [[0,0],[1,0],[0,0],[0,0]],
           [[0,0],[0,0],[0,0],[1,0]]]
})";

TEST(ChannelFile, ParsesChoi) {
  const auto f = parse_channel_file(kTranspose);
  EXPECT_EQ(f.kind, ChannelKind::kChoi);
  EXPECT_EQ(f.dim_in, 2u);
  ASSERT_EQ(f.data.size(), 1u);
  EXPECT_EQ(f.data[0], wires::swap(2, 2));
  EXPECT_EQ(to_channel(f).choi(), wires::swap(2, 2));
}

TEST(ChannelFile, ParsesKrausAndUnitary) {
  const auto k = parse_channel_file(R"({"kind":"kraus","dim_in":2,"dim_out":1,
      "data":[[[[1,0],[0,0]]],[[[0,0],[1,0]]]]})");
  EXPECT_EQ(k.data.size(), 2u);
  EXPECT_LE(max_abs_diff(to_channel(k).choi(), identity(2)), 0.0);

  const auto u = parse_channel_file(R"({"kind":"unitary","dim_in":2,"dim_out":2,
      "data":[[[0,0],[1,0]],[[1,0],[0,0]]]})");
  const auto c = to_channel(u);
  const Mat x = testing::from_rows({{0, 1}, {1, 0}});
  EXPECT_LE(choi_distance(c, channels::unitary_channel(x)), 0.0);
  const auto not_unitary = parse_channel_file(R"({"kind":"unitary","dim_in":2,"dim_out":2,
      "data":[[[1,0],[1,0]],[[0,0],[1,0]]]})");
  EXPECT_THROW(to_channel(not_unitary), PropertyError);
}

TEST(ChannelFile, FormatErrorsCarryLocation) {
  auto where = [](const char* text) {
    try {
      parse_channel_file(text);
    } catch (const FormatError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  EXPECT_EQ(where(R"({"kind": "choi", )"), "byte 18");
  EXPECT_EQ(where(R"([1,2])"), "/");
  EXPECT_EQ(where(R"({"kind":"bogus","dim_in":1,"dim_out":1,"data":[[[1,0]]]})"), "/kind");
  EXPECT_EQ(where(R"({"kind":"choi","dim_in":0,"dim_out":1,"data":[[[1,0]]]})"), "/dim_in");
  EXPECT_EQ(where(R"({"kind":"choi","dim_in":1,"dim_out":1})"), "/");
  EXPECT_EQ(where(R"({"kind":"choi","dim_in":1,"dim_out":1,"data":[[[1,"x"]]]})"), "/data/0/0/1");
  EXPECT_EQ(where(R"({"kind":"choi","dim_in":1,"dim_out":1,"data":[[[1]]]})"), "/data/0/0");
  EXPECT_EQ(where(R"({"kind":"kraus","dim_in":1,"dim_out":1,"data":[]})"), "/data");
}

TEST(ChannelFile, DimensionErrors) {
  EXPECT_THROW(parse_channel_file(R"({"kind":"choi","dim_in":2,"dim_out":2,"data":[[[1,0]]]})"),
               DimensionError);
  EXPECT_THROW(parse_channel_file(
                   R"({"kind":"choi","dim_in":1,"dim_out":2,"data":[[[1,0],[0,0]],[[0,0]]]})"),
               DimensionError);
  EXPECT_THROW(parse_channel_file(
                   R"({"kind":"unitary","dim_in":1,"dim_out":2,"data":[[[1,0]],[[0,0]]]})"),
               DimensionError);
  EXPECT_THROW(parse_channel_file(
                   R"({"kind":"superop","dim_in":2,"dim_out":1,"data":[[[1,0],[0,0]]]})"),
               DimensionError);
}

TEST(ChannelFile, NormalizedChoiIsRescaled) {
  const auto c = channels::identity_channel(3);
  ChannelFile f{ChannelKind::kChoi, 3, 3, {c.normalized_choi()}};
  EXPECT_LE(choi_distance(to_channel(f, {}, true), c), 1e-15);
}

TEST(ChannelFile, WriteParseRoundtripIsExact) {
  Rng rng(Seed{100});
  const auto c = testing::random_linear_map(2, 3, rng);
  for (ChannelKind kind : {ChannelKind::kChoi, ChannelKind::kSuperop}) {
    const ChannelFile f = from_channel(c, kind);
    const std::string text = write_channel_file(f);
    const ChannelFile back = parse_channel_file(text);
    EXPECT_EQ(back.data[0], f.data[0]);
    EXPECT_EQ(write_channel_file(back), text);
    EXPECT_EQ(to_channel(back).choi(), c.choi());
  }
  const auto cpp = channels::from_kraus(testing::random_kraus(2, 3, 2, rng));
  const ChannelFile k = from_channel(cpp, ChannelKind::kKraus);
  EXPECT_EQ(k.data.size(), 2u);
  EXPECT_LE(choi_distance(to_channel(parse_channel_file(write_channel_file(k))), cpp), 1e-9);
  EXPECT_THROW(from_channel(channels::transpose_channel(2), ChannelKind::kKraus), PropertyError);
  EXPECT_THROW(from_channel(cpp, ChannelKind::kUnitary), ArgumentError);
}

TEST(ChannelFile, NoNegativeZero) {
  Mat m(1, 1);
  m(0, 0) = Complex(-0.0, -0.0);
  const std::string text = write_channel_file({ChannelKind::kChoi, 1, 1, {m}});
  EXPECT_EQ(text.find("-0"), std::string::npos) << text;
}

TEST(Report, ByteIdenticalAndWellFormed) {
  const auto c = channels::partial_transpose_channel(2, 2);
  const channels::PPOptions opt{8, 100, Seed{3}, 0, false};
  const auto a = write_report(channels::property_report(c, {}, opt), opt.seed, {}, opt);
  const auto b = write_report(channels::property_report(c, {}, opt), opt.seed, {}, opt);
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["tool"], "choiscope");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["tp"]["holds"], true);
  EXPECT_EQ(j["pp"]["outcome"], "violation-found");
  EXPECT_EQ(j["pp"]["witness"]["input"].size(), 4u);
  EXPECT_LT(j["pp"]["witness"]["value"].get<double>(), -0.49);
}

TEST(EnvFile, ParsesTensorsWithDefaults) {
  const auto env = parse_env_file(R"({"tensors": {
      "f": {"data": [[[1,0],[2,0]]]},
      "s": {"domain": [], "codomain": [], "data": [[[3,0]]]},
      "g": {"domain": [1,2], "codomain": [2], "data": [[[1,0],[0,0]],[[0,0],[1,0]]]}}})");
  EXPECT_EQ(env.find("f")->domain, (diagram::Dims{2}));
  EXPECT_EQ(env.find("f")->codomain, (diagram::Dims{1}));
  EXPECT_EQ(env.find("s")->domain, diagram::Dims{});
  EXPECT_EQ(env.find("g")->domain, (diagram::Dims{1, 2}));
}

TEST(EnvFile, Errors) {
  EXPECT_THROW(parse_env_file(R"({"x": 1})"), FormatError);
  EXPECT_THROW(parse_env_file(R"({"tensors": {"cup": {"data": [[[1,0]]]}}})"), FormatError);
  EXPECT_THROW(parse_env_file(R"({"tensors": {"f": {"domain": [0], "data": [[[1,0]]]}}})"),
               FormatError);
  EXPECT_THROW(parse_env_file(R"({"tensors": {"f": {"domain": [3], "data": [[[1,0]]]}}})"),
               DimensionError);
}

}  // namespace
}  // namespace choiscope

// Copyright 2026 The maskmt Authors
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

// Exercises libmaskmt through its C interface only.

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "maskmt/maskmt.h"

namespace {

using Json = nlohmann::json;

// Takes ownership of a string returned by the library.
std::string Take(char* s) {
  std::string out = s != nullptr ? s : "";
  maskmt_string_free(s);
  return out;
}

class CapiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(maskmt_context_create_fixture(&ctx_), MASKMT_OK);
  }
  void TearDown() override { maskmt_context_destroy(ctx_); }

  maskmt_context* ctx_ = nullptr;
};

TEST(CapiStatics, Names) {
  EXPECT_STREQ(maskmt_status_name(MASKMT_OK), "OK");
  EXPECT_STREQ(maskmt_status_name(MASKMT_ENGINE), "ENGINE");
  EXPECT_STREQ(maskmt_status_name(static_cast<maskmt_status>(42)), "UNKNOWN");
  EXPECT_STRNE(maskmt_version(), "");
}

TEST(CapiStatics, Aupqc) {
  double area = 0;
  ASSERT_EQ(maskmt_aupqc_csv("param,pps,qs\n0.1,0.2,0.9\n0.5,0.5,0.7\n", &area),
            MASKMT_OK);
  EXPECT_EQ(area, 0.42);
  double qs = 0;
  int extrapolated = -1;
  ASSERT_EQ(maskmt_qs_at_csv("param,pps,qs\n0.1,0.2,0.9\n0.5,0.5,0.7\n", 0.35,
                             &qs, &extrapolated),
            MASKMT_OK);
  EXPECT_NEAR(qs, 0.8, 1e-12);
  EXPECT_EQ(extrapolated, 0);
  EXPECT_EQ(maskmt_aupqc_csv("garbage", &area), MASKMT_INVALID_ARGUMENT);
  EXPECT_STRNE(maskmt_last_error(), "");
  EXPECT_EQ(maskmt_aupqc_csv(nullptr, &area), MASKMT_INVALID_ARGUMENT);
}

TEST(CapiStatics, Epsilon) {
  double eps = 0, ratio = 0;
  ASSERT_EQ(maskmt_epsilon_for(0.5, 10000, &eps), MASKMT_OK);
  EXPECT_NEAR(eps, std::log(1 + 0.5 * 10000 / 0.5), 1e-9);
  ASSERT_EQ(maskmt_ratio_for_epsilon(eps, 10000, &ratio), MASKMT_OK);
  EXPECT_NEAR(ratio, 0.5, 1e-12);
  EXPECT_EQ(maskmt_epsilon_for(1.5, 10000, &eps), MASKMT_INVALID_ARGUMENT);
  EXPECT_EQ(maskmt_epsilon_for(0.5, 0, &eps), MASKMT_INVALID_ARGUMENT);
}

TEST(CapiStatics, ContextFromMissingConfig) {
  maskmt_context* ctx = nullptr;
  EXPECT_EQ(maskmt_context_create_from_config("/nonexistent.json", &ctx),
            MASKMT_NOT_FOUND);
  EXPECT_EQ(ctx, nullptr);
}

TEST_F(CapiTest, EncodeTranslateDecode) {
  const char* text = "Alice went to the market and found a red lamp.";
  char* raw = nullptr;
  ASSERT_EQ(maskmt_encode(ctx_, text,
                          R"({"method":"prism_star","ratio":0.5,"seed":3})",
                          &raw),
            MASKMT_OK)
      << maskmt_last_error();
  const std::string encoded = Take(raw);
  const Json enc = Json::parse(encoded);
  ASSERT_FALSE(enc["history"]["records"].empty());

  ASSERT_EQ(maskmt_translate(ctx_, "mock-en-fr",
                             enc["x_pub"].get<std::string>().c_str(), &raw),
            MASKMT_OK);
  const std::string y_pub = Take(raw);
  ASSERT_EQ(maskmt_decode(ctx_, y_pub.c_str(), encoded.c_str(), &raw),
            MASKMT_OK)
      << maskmt_last_error();
  const Json dec = Json::parse(Take(raw));
  ASSERT_EQ(maskmt_translate(ctx_, "mock-en-fr", text, &raw), MASKMT_OK);
  EXPECT_EQ(dec["y_pri"], Take(raw));
  EXPECT_TRUE(dec["misses"].empty());

  char* audit = nullptr;
  ASSERT_EQ(maskmt_audit_json(ctx_, &audit), MASKMT_OK);
  EXPECT_EQ(Json::parse(Take(audit))["records"].size(), 2u);
}

TEST_F(CapiTest, RunMatchesStepwise) {
  const char* text = "Bob walked to the park in the morning.";
  char* raw = nullptr;
  ASSERT_EQ(maskmt_run(ctx_, text,
                       R"({"method":"prism_r","ratio":0.4,"seed":11,)"
                       R"("engine":"mock-en-fr"})",
                       &raw),
            MASKMT_OK)
      << maskmt_last_error();
  const Json run = Json::parse(Take(raw));
  ASSERT_EQ(maskmt_encode(ctx_, text,
                          R"({"method":"prism_r","ratio":0.4,"seed":11})", &raw),
            MASKMT_OK);
  const Json enc = Json::parse(Take(raw));
  EXPECT_EQ(run["x_pub"], enc["x_pub"]);
  EXPECT_EQ(run["history"], enc["history"]);
  EXPECT_EQ(run["engine"], "mock-en-fr");
  EXPECT_TRUE(run["misses"].empty());
}

TEST_F(CapiTest, Errors) {
  char* raw = nullptr;
  EXPECT_EQ(maskmt_encode(ctx_, "hi", R"({"method":"prism_r","ratio":2})", &raw),
            MASKMT_INVALID_ARGUMENT);
  EXPECT_EQ(raw, nullptr);
  EXPECT_EQ(maskmt_encode(ctx_, "hi", "{", &raw), MASKMT_INVALID_ARGUMENT);
  EXPECT_EQ(maskmt_encode(nullptr, "hi", "{}", &raw), MASKMT_INVALID_ARGUMENT);
  EXPECT_EQ(maskmt_translate(ctx_, "nope", "hi", &raw), MASKMT_NOT_FOUND);
  EXPECT_EQ(maskmt_decode(ctx_, "x", R"({"source_len":0})", &raw),
            MASKMT_INVALID_ARGUMENT);
  EXPECT_EQ(maskmt_load_dictionary(ctx_, "/nonexistent.tsv"), MASKMT_NOT_FOUND);
  EXPECT_EQ(maskmt_register_engine(ctx_, R"({"id":"x","kind":"nope"})"),
            MASKMT_INVALID_ARGUMENT);
}

TEST_F(CapiTest, UnreachableEngineIsEngineError) {
  ASSERT_EQ(maskmt_register_engine(
                ctx_,
                R"({"id":"offline","kind":"remote","source_lang":"en",)"
                R"("target_lang":"fr","endpoint":{"url":"http://127.0.0.1:9",)"
                R"("max_retries":0,"timeout_ms":300}})"),
            MASKMT_OK)
      << maskmt_last_error();
  char* raw = nullptr;
  EXPECT_EQ(maskmt_translate(ctx_, "offline", "hello", &raw), MASKMT_ENGINE);
  char* engines = nullptr;
  ASSERT_EQ(maskmt_engines_json(ctx_, &engines), MASKMT_OK);
  EXPECT_EQ(Json::parse(Take(engines))["engines"].size(), 2u);
}

TEST_F(CapiTest, SweepProducesCurve) {
  char* csv = nullptr;
  ASSERT_EQ(maskmt_eval_sweep(
                ctx_,
                R"({"mechanism":"prism_star","grid":[0.2,0.6],"docs":10,"seed":1})",
                &csv),
            MASKMT_OK)
      << maskmt_last_error();
  const std::string curve = Take(csv);
  double area = -1;
  ASSERT_EQ(maskmt_aupqc_csv(curve.c_str(), &area), MASKMT_OK);
  EXPECT_GT(area, 0.0);
  EXPECT_LE(area, 1.0);
  char* report = nullptr;
  ASSERT_EQ(maskmt_report_json(curve.c_str(), "prism_star", "mock-en-fr",
                               "[0.1]", &report),
            MASKMT_OK);
  EXPECT_TRUE(Json::parse(Take(report)).contains("aupqc"));
  EXPECT_EQ(maskmt_eval_sweep(ctx_, R"({"mechanism":"magic"})", &csv),
            MASKMT_INVALID_ARGUMENT);
}

TEST_F(CapiTest, Server) {
  maskmt_server* server = nullptr;
  int port = 0;
  ASSERT_EQ(maskmt_server_start(ctx_, "127.0.0.1", 0, nullptr, &server, &port),
            MASKMT_OK)
      << maskmt_last_error();
  ASSERT_GT(port, 0);
  EXPECT_STREQ(maskmt_server_bind_address(server), "127.0.0.1");
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/v1/engines");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  maskmt_server_stop(server);
  maskmt_server_destroy(server);
}

}  // namespace

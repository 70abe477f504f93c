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

#include "maskmt/service.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "maskmt/audit.h"
#include "maskmt/config.h"

namespace maskmt {
namespace {

using Json = nlohmann::json;

constexpr char kPrivate[] = "Alice is heading to the hideout.";

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ws_ = Workspace::Fixture();
    RemoteEndpoint ep;
    ep.url = "http://127.0.0.1:9";  // discard port, nothing listens
    ep.max_retries = 0;
    ep.timeout_ms = 500;
    ASSERT_TRUE(ws_->gateway()
                    .RegisterRemote({"offline", EngineKind::kRemote, "en",
                                     "fr", ep})
                    .ok());
    session_dir_ = std::filesystem::path(::testing::TempDir()) /
                   ::testing::UnitTest::GetInstance()->current_test_info()->name();
    std::filesystem::remove_all(session_dir_);
    service_ = std::make_unique<Service>(
        *ws_, ServiceOptions{"127.0.0.1", 0, session_dir_.string()});
  }

  // Returns {status, parsed body}.
  std::pair<int, Json> Call(absl::string_view method, const std::string& path,
                            const Json& body = Json::object()) {
    HttpReply r = service_->Handle(method, path, body.dump());
    return {r.status, Json::parse(r.body)};
  }

  std::string NewSession(const std::string& text = kPrivate) {
    auto [status, body] = Call("POST", "/v1/sessions", {{"text", text}});
    EXPECT_EQ(status, 201);
    EXPECT_EQ(body["state"], "drafted");
    return body["session_id"].get<std::string>();
  }

  std::string Path(const std::string& id, const std::string& action = "") {
    return "/v1/sessions/" + id + (action.empty() ? "" : "/" + action);
  }

  std::unique_ptr<Workspace> ws_;
  std::filesystem::path session_dir_;
  std::unique_ptr<Service> service_;
};

Json ForcedEncode(const std::string& method) {
  return {{"method", method},
          {"substitutions",
           Json::array({{{"position", 0}, {"replacement", "bob"}},
                        {{"position", 5}, {"replacement", "store"}}})}};
}

TEST_F(ServiceTest, FixtureChain) {
  for (const char* method : {"prism_r", "prism_star"}) {
    const std::string id = NewSession();
    auto [s1, enc] = Call("POST", Path(id, "encode"), ForcedEncode(method));
    ASSERT_EQ(s1, 200) << enc;
    EXPECT_EQ(enc["x_pub"], "Bob is heading to the store.");
    ASSERT_EQ(enc["substitutions"].size(), 2u);
    EXPECT_EQ(enc["substitutions"][0]["original"], "Alice");
    EXPECT_EQ(enc["substitutions"][1]["position"], 5);

    auto [s2, sent] = Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}});
    ASSERT_EQ(s2, 200) << sent;
    EXPECT_EQ(sent["y_pub"], "Bob se dirige vers la boutique.");
    EXPECT_EQ(sent["state"], "sent");

    auto [s3, dec] = Call("POST", Path(id, "decode"));
    ASSERT_EQ(s3, 200) << dec;
    EXPECT_EQ(dec["y_pri"], "Alice se dirige vers la cachette.");
    EXPECT_TRUE(dec["misses"].empty());
    EXPECT_EQ(dec["state"], "decoded");

    auto [s4, view] = Call("GET", Path(id));
    EXPECT_EQ(s4, 200);
    EXPECT_EQ(view["state"], "decoded");
    EXPECT_EQ(view["y_pri"], "Alice se dirige vers la cachette.");
  }
}

TEST_F(ServiceTest, StateMachine) {
  const std::string id = NewSession();
  EXPECT_EQ(Call("POST", Path(id, "decode")).first, 409);
  EXPECT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            409);
  ASSERT_EQ(Call("POST", Path(id, "encode"),
                 {{"method", "prism_r"}, {"ratio", 0.5}, {"seed", 1}})
                .first,
            200);
  EXPECT_EQ(Call("POST", Path(id, "decode")).first, 409);
  // Re-encoding is allowed until the text is sent.
  ASSERT_EQ(Call("POST", Path(id, "encode"),
                 {{"method", "prism_star"}, {"ratio", 0.5}})
                .first,
            200);
  ASSERT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            200);
  EXPECT_EQ(Call("POST", Path(id, "encode"),
                 {{"method", "prism_r"}, {"ratio", 0.5}})
                .first,
            409);
  EXPECT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            409);
  ASSERT_EQ(Call("POST", Path(id, "decode")).first, 200);
  EXPECT_EQ(Call("POST", Path(id, "decode")).first, 409);
}

TEST_F(ServiceTest, NotFound) {
  EXPECT_EQ(Call("POST", Path("nope", "encode"),
                 {{"method", "prism_r"}, {"ratio", 0.5}})
                .first,
            404);
  EXPECT_EQ(Call("GET", Path("nope")).first, 404);
  EXPECT_EQ(Call("GET", "/v2/engines").first, 404);
  const std::string id = NewSession();
  EXPECT_EQ(Call("POST", Path(id, "frobnicate")).first, 404);
}

TEST_F(ServiceTest, InvalidRequests) {
  EXPECT_EQ(service_->Handle("POST", "/v1/sessions", "{not json").status, 422);
  EXPECT_EQ(Call("POST", "/v1/sessions", {{"text", ""}}).first, 422);
  EXPECT_EQ(Call("POST", "/v1/sessions", {{"txt", "x"}}).first, 422);
  const std::string id = NewSession();
  const std::string enc = Path(id, "encode");
  EXPECT_EQ(Call("POST", enc, {{"method", "prism_r"}, {"ratio", 1.5}}).first,
            422);
  EXPECT_EQ(Call("POST", enc, {{"method", "prism_r"}, {"ratio", 0.0}}).first,
            422);
  EXPECT_EQ(Call("POST", enc, {{"method", "pup"}, {"ratio", 0.5}}).first, 422);
  EXPECT_EQ(Call("POST", enc, {{"method", "prism_r"}}).first, 422);
  EXPECT_EQ(Call("POST", enc,
                 {{"method", "mixed"}, {"ratio", 0.5}, {"beta", 2.0}})
                .first,
            422);
  EXPECT_EQ(Call("POST", enc,
                 {{"method", "prism_r"},
                  {"substitutions", Json::array({{{"position", 5}}})}})
                .first,
            422);
  EXPECT_EQ(Call("POST", enc,
                 {{"method", "prism_r"},
                  {"substitutions",
                   Json::array({{{"position", 6}, {"replacement", "x"}}})}})
                .first,
            422);
  // Nothing above changed the session.
  EXPECT_EQ(Call("GET", Path(id)).second["state"], "drafted");

  ASSERT_EQ(Call("POST", enc, {{"method", "prism_r"}, {"ratio", 0.5}}).first,
            200);
  EXPECT_EQ(Call("POST", Path(id, "send"), {{"engine", "nope"}}).first, 422);
  EXPECT_EQ(Call("POST", Path(id, "send"), Json::object()).first, 422);
}

TEST_F(ServiceTest, EngineFailureIs502AndKeepsSession) {
  const std::string id = NewSession();
  ASSERT_EQ(Call("POST", Path(id, "encode"), ForcedEncode("prism_r")).first,
            200);
  auto [status, body] = Call("POST", Path(id, "send"), {{"engine", "offline"}});
  EXPECT_EQ(status, 502);
  EXPECT_TRUE(body.contains("error"));
  EXPECT_EQ(Call("GET", Path(id)).second["state"], "encoded");
  // The failed attempt is still audited.
  auto audit = Call("GET", "/v1/audit").second["records"];
  ASSERT_EQ(audit.size(), 1u);
  EXPECT_NE(audit[0]["outcome"], "ok");
  // And the session can still go out through a working engine.
  EXPECT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            200);
}

TEST_F(ServiceTest, OnlyTheLastDraftIsSent) {
  const std::string text =
      "Alice went to the market and found a red lamp near the river.";
  const std::string id = NewSession(text);
  auto first = Call("POST", Path(id, "encode"),
                    {{"method", "prism_r"}, {"ratio", 0.3}, {"seed", 5}});
  auto second = Call("POST", Path(id, "encode"),
                     {{"method", "prism_r"}, {"ratio", 0.8}, {"seed", 6}});
  ASSERT_EQ(first.first, 200);
  ASSERT_EQ(second.first, 200);
  const std::string x_pub = second.second["x_pub"];
  ASSERT_NE(first.second["x_pub"], x_pub);
  EXPECT_TRUE(second.second.contains("epsilon"));

  // Encoding alone never reaches an engine.
  EXPECT_TRUE(Call("GET", "/v1/audit").second["records"].empty());
  ASSERT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            200);
  auto records = Call("GET", "/v1/audit").second["records"];
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0]["payload_sha256"], Sha256Hex(x_pub));
  EXPECT_NE(records[0]["payload_sha256"],
            Sha256Hex(first.second["x_pub"].get<std::string>()));
  EXPECT_NE(records[0]["payload_sha256"], Sha256Hex(text));
}

TEST_F(ServiceTest, AuditHoldsExactlyTheSentPublicTexts) {
  std::set<std::string> expected;
  for (int i = 0; i < 5; ++i) {
    const std::string id = NewSession(
        "Bob walked to the park in the morning. Then Bob bought a red lamp.");
    auto enc = Call("POST", Path(id, "encode"),
                    {{"method", i % 2 ? "prism_star" : "prism_r"},
                     {"ratio", 0.5},
                     {"seed", i}});
    ASSERT_EQ(enc.first, 200);
    if (i == 4) break;  // encoded but never sent
    expected.insert(Sha256Hex(enc.second["x_pub"].get<std::string>()));
    ASSERT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
              200);
  }
  std::set<std::string> audited;
  const Json records = Call("GET", "/v1/audit").second["records"];
  for (const Json& r : records) {
    audited.insert(r["payload_sha256"]);
  }
  EXPECT_EQ(audited, expected);
}

// The CLI encode and run tests freeze the same outputs.
TEST_F(ServiceTest, EncodeMatchesCli) {
  const std::string id =
      NewSession("Alice went to the market and found a red lamp.");
  auto [status, body] =
      Call("POST", Path(id, "encode"),
           {{"method", "prism_star"}, {"ratio", 0.5}, {"seed", 7}});
  ASSERT_EQ(status, 200);
  EXPECT_EQ(body["x_pub"],
            "Liam bought to the phone and found a strange animal.");
}

TEST_F(ServiceTest, PipelineMatchesCliRun) {
  const std::string id =
      NewSession("Later Emma took the lamp to Bob in the evening.");
  auto enc = Call("POST", Path(id, "encode"),
                  {{"method", "prism_r"}, {"ratio", 0.6}, {"seed", 7}});
  ASSERT_EQ(enc.first, 200);
  EXPECT_EQ(enc.second["x_pub"], "Later Took at the paul to Farm in the evening.");
  ASSERT_EQ(Call("POST", Path(id, "send"), {{"engine", "mock-en-fr"}}).first,
            200);
  auto dec = Call("POST", Path(id, "decode"));
  ASSERT_EQ(dec.first, 200);
  EXPECT_EQ(dec.second["y_pri"],
            "Ensuite Emma prit la lampe vers Bob dans la soir.");
}

TEST_F(ServiceTest, ListingEndpoints) {
  auto engines = Call("GET", "/v1/engines").second["engines"];
  ASSERT_EQ(engines.size(), 2u);
  std::set<std::string> ids;
  for (const Json& e : engines) ids.insert(e["id"]);
  EXPECT_EQ(ids, (std::set<std::string>{"mock-en-fr", "offline"}));

  auto [status, stats] = Call("GET", "/v1/dict/stats");
  EXPECT_EQ(status, 200);
  EXPECT_EQ(stats["entries"], ws_->plain()->size());
  EXPECT_EQ(stats["vocab_size"], ws_->plain()->source_vocab().size());
  EXPECT_EQ(stats["mode"], "plain");
  EXPECT_EQ(stats["dictionaries"].size(), 2u);
}

TEST_F(ServiceTest, DeleteForgetsSession) {
  const std::string id = NewSession();
  ASSERT_EQ(Call("POST", Path(id, "encode"), ForcedEncode("prism_r")).first,
            200);
  EXPECT_EQ(service_->session_count(), 1u);
  EXPECT_EQ(Call("DELETE", Path(id)).first, 200);
  EXPECT_EQ(service_->session_count(), 0u);
  EXPECT_EQ(Call("GET", Path(id)).first, 404);
}

TEST_F(ServiceTest, ExportWritesSessionFile) {
  const std::string id = NewSession();
  ASSERT_EQ(Call("POST", Path(id, "encode"), ForcedEncode("prism_r")).first,
            200);
  auto [status, body] = Call("POST", Path(id, "export"));
  ASSERT_EQ(status, 200) << body;
  const std::string path = body["path"];
  EXPECT_EQ(std::filesystem::path(path).parent_path(), session_dir_);
  std::ifstream in(path);
  Json exported = Json::parse(in);
  EXPECT_EQ(exported["encode"]["history"]["records"].size(), 2u);

  Service no_dir(*ws_, ServiceOptions{});
  const std::string id2 =
      Json::parse(no_dir.Handle("POST", "/v1/sessions", R"({"text":"hi"})").body)
          ["session_id"];
  EXPECT_EQ(no_dir.Handle("POST", Path(id2, "export"), "").status, 409);
}

TEST_F(ServiceTest, ConcurrentSessions) {
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 10; ++i) {
        HttpReply c = service_->Handle(
            "POST", "/v1/sessions", R"({"text":"Bob is heading to the store."})");
        const std::string id = Json::parse(c.body)["session_id"];
        HttpReply e = service_->Handle(
            "POST", Path(id, "encode"),
            Json{{"method", "prism_r"}, {"ratio", 0.5}, {"seed", t * 10 + i}}
                .dump());
        HttpReply s = service_->Handle("POST", Path(id, "send"),
                                       R"({"engine":"mock-en-fr"})");
        HttpReply d = service_->Handle("POST", Path(id, "decode"), "");
        if (e.status == 200 && s.status == 200 && d.status == 200) ++ok;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok, 80);
  EXPECT_EQ(service_->session_count(), 80u);
  EXPECT_EQ(ws_->gateway().audit().size(), 80u);
}

TEST_F(ServiceTest, OverHttp) {
  auto port = service_->Start();
  ASSERT_TRUE(port.ok()) << port.status();
  httplib::Client client("127.0.0.1", *port);
  auto created = client.Post("/v1/sessions", R"({"text":"Alice is heading to the hideout."})",
                             "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = Json::parse(created->body)["session_id"];
  auto enc = client.Post(Path(id, "encode").c_str(),
                         ForcedEncode("prism_star").dump(), "application/json");
  ASSERT_TRUE(enc);
  EXPECT_EQ(enc->status, 200);
  auto early = client.Post(Path(id, "decode").c_str(), "", "application/json");
  ASSERT_TRUE(early);
  EXPECT_EQ(early->status, 409);
  auto sent = client.Post(Path(id, "send").c_str(), R"({"engine":"mock-en-fr"})",
                          "application/json");
  ASSERT_TRUE(sent);
  EXPECT_EQ(sent->status, 200);
  auto dec = client.Post(Path(id, "decode").c_str(), "", "application/json");
  ASSERT_TRUE(dec);
  EXPECT_EQ(Json::parse(dec->body)["y_pri"],
            "Alice se dirige vers la cachette.");
  auto engines = client.Get("/v1/engines");
  ASSERT_TRUE(engines);
  EXPECT_EQ(engines->status, 200);
  EXPECT_EQ(engines->get_header_value("Content-Type"), "application/json");
  auto missing = client.Get("/v1/sessions/unknown");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  service_->Stop();
}

}  // namespace
}  // namespace maskmt

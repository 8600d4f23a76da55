// Copyright 2026 The varbench Authors.
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

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "oracles.h"
#include "varbench/llm_client.h"
#include "varbench/pairing.h"

using namespace varbench;
using varbench::testing::make_record;

namespace {

// Local chat-completions stub. `status` and `content` decide the reply.
class StubServer {
 public:
  StubServer() {
    server_.Post(R"(/v1/chat/completions)", [this](const httplib::Request& req,
                                                   httplib::Response& res) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        bodies_.push_back(nlohmann::json::parse(req.body));
        auth_.push_back(req.get_header_value("Authorization"));
      }
      ++hits_;
      res.status = status_.load();
      if (res.status == 200 && !raw_reply_.empty()) {
        res.set_content(raw_reply_, "application/json");
      } else if (res.status == 200) {
        nlohmann::json reply = {
            {"choices", {{{"message", {{"role", "assistant"}, {"content", content_}}}}}}};
        res.set_content(reply.dump(), "application/json");
      } else {
        res.set_content("upstream unhappy", "text/plain");
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  std::atomic<int> status_{200};
  std::string content_ = "7";
  std::string raw_reply_;  // sent verbatim when set
  std::atomic<int> hits_{0};
  std::mutex mu_;
  std::vector<nlohmann::json> bodies_;
  std::vector<std::string> auth_;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

PromptInstance prompt() {
  PromptInstance p;
  p.system_text = "sys";
  p.user_text = "user";
  p.review_ref = "r1";
  return p;
}

ModelEndpoint endpoint(const std::string& url) {
  ModelEndpoint e;
  e.name = "stub";
  e.base_url = url;
  e.model = "stub-model";
  e.max_retries = 2;
  e.backoff = std::chrono::milliseconds(1);
  e.request_timeout = std::chrono::milliseconds(2000);
  return e;
}

}  // namespace

TEST_CASE("chat request carries model, messages, temperature and bearer token") {
  StubServer server;
  setenv("VARBENCH_TEST_TOKEN", "sekret", 1);
  ModelEndpoint e = endpoint(server.base_url());
  e.auth_token_env_var = "VARBENCH_TEST_TOKEN";
  HttpChatModel model(e);
  auto r = model.complete(prompt());
  REQUIRE(r.raw_text);
  CHECK(*r.raw_text == "7");
  CHECK_FALSE(r.transport_error);
  CHECK(r.attempt_count == 1);
  CHECK(r.review_ref == "r1");
  REQUIRE(server.bodies_.size() == 1);
  const auto& body = server.bodies_[0];
  CHECK(body["model"] == "stub-model");
  CHECK(body["temperature"] == 0);
  REQUIRE(body["messages"].size() == 2);
  CHECK(body["messages"][0]["role"] == "system");
  CHECK(body["messages"][1]["content"] == "user");
  CHECK(server.auth_[0] == "Bearer sekret");
}

TEST_CASE("system role is omitted when unsupported") {
  StubServer server;
  ModelEndpoint e = endpoint(server.base_url());
  e.supports_system_role = false;
  e.send_temperature = false;
  HttpChatModel model(e);
  model.complete(prompt());
  const auto& body = server.bodies_.at(0);
  REQUIRE(body["messages"].size() == 1);
  CHECK(body["messages"][0]["role"] == "user");
  CHECK_FALSE(body.contains("temperature"));
}

TEST_CASE("server errors are retried, then reported") {
  StubServer server;
  server.status_ = 500;
  HttpChatModel model(endpoint(server.base_url()));
  auto r = model.complete(prompt());
  CHECK_FALSE(r.raw_text);
  REQUIRE(r.transport_error);
  CHECK(r.transport_error->starts_with("http 500"));
  CHECK(r.attempt_count == 3);
  CHECK(server.hits_ == 3);
}

TEST_CASE("malformed replies are transport errors") {
  StubServer server;
  HttpChatModel model(endpoint(server.base_url()));
  for (const char* reply : {R"({"choices":[{"message":{"content":null}}]})", R"({"choices":[]})",
                            R"({"choices":[["message"]]})", "not json"}) {
    CAPTURE(reply);
    server.raw_reply_ = reply;
    auto r = model.complete(prompt());
    CHECK_FALSE(r.raw_text);
    REQUIRE(r.transport_error);
    CHECK(r.transport_error->starts_with("malformed response"));
    CHECK(r.attempt_count == 1);
  }
}

TEST_CASE("client errors are not retried") {
  StubServer server;
  server.status_ = 400;
  HttpChatModel model(endpoint(server.base_url()));
  auto r = model.complete(prompt());
  CHECK(r.attempt_count == 1);
  CHECK(r.transport_error->starts_with("http 400"));
}

TEST_CASE("unreachable endpoint exhausts its attempts") {
  // Grab a free port, then close it again.
  int port;
  {
    httplib::Server s;
    port = s.bind_to_any_port("127.0.0.1");
  }
  ModelEndpoint e = endpoint("http://127.0.0.1:" + std::to_string(port) + "/v1");
  e.request_timeout = std::chrono::milliseconds(300);
  HttpChatModel model(e);
  auto r = model.complete(prompt());
  CHECK_FALSE(r.raw_text);
  CHECK(r.transport_error);
  CHECK(r.attempt_count == 3);
}

TEST_CASE("endpoint files") {
  auto path = std::filesystem::temp_directory_path() / "varbench_endpoints.json";
  {
    std::ofstream f(path);
    f << R"([{"name":"a","base_url":"http://x/v1","supports_system_role":false,"request_timeout_ms":5,"max_retries":1,"backoff_ms":2}])";
  }
  auto eps = load_endpoints(path);
  REQUIRE(eps.size() == 1);
  CHECK(eps[0].model == "a");
  CHECK_FALSE(eps[0].supports_system_role);
  CHECK(eps[0].request_timeout.count() == 5);
  CHECK(eps[0].max_retries == 1);
  {
    std::ofstream f(path);
    f << R"([{"name":"a","base_url":"http://x"},{"name":"a","base_url":"http://y"}])";
  }
  CHECK_THROWS(load_endpoints(path));
  std::filesystem::remove(path);
}

TEST_CASE("mock models answer from the truth table") {
  std::vector<ReviewRecord> tw = {make_record("t", "H", Variety::kTW, 10, "這個")};
  std::vector<ReviewRecord> cn = {make_record("c", "H", Variety::kCN, 9.5, "这个")};
  auto pairs = build_pairs(tw, cn).pairs;
  REQUIRE(pairs.size() == 1);
  TruthTable truth = truth_from_pairs(pairs);
  auto tables = CharSetTables::load(std::string(VARBENCH_DATA_DIR) + "/charsets");
  ModelContext ctx{&truth, &tables, {}};
  auto answers = [&](const std::string& spec) {
    auto m = make_model(spec, ctx);
    auto res = run_eval(pairs, *m, PromptVariant::kPlain, 0, 2);
    REQUIRE(res.size() == 2);
    CHECK(res[0].side == Side::kTW);
    return std::pair{res[0].raw_text.value_or("<err>"), res[1].raw_text.value_or("<err>")};
  };
  CHECK(answers("mock:echo") == std::pair<std::string, std::string>{"10", "10"});
  CHECK(answers("mock:constant:5") == std::pair<std::string, std::string>{"5", "5"});
  CHECK(answers("mock:biased:tw") == std::pair<std::string, std::string>{"9", "10"});
  CHECK(answers("mock:biased:cn") == std::pair<std::string, std::string>{"10", "9"});
  CHECK(answers("mock:script-biased") == std::pair<std::string, std::string>{"9", "10"});
  CHECK(answers("mock:echo-sentiment") ==
        std::pair<std::string, std::string>{"positive", "positive"});
  CHECK_THROWS(make_model("mock:nope", ctx));
  CHECK_THROWS(make_model("no-such-endpoint", ctx));

  PromptInstance stray;
  stray.review_ref = "unknown";
  auto r = make_model("mock:echo", ctx)->complete(stray);
  CHECK(r.transport_error);
}

TEST_CASE("results are ordered whatever the completion order") {
  std::vector<ReviewRecord> tw, cn;
  for (int i = 0; i < 40; ++i) {
    tw.push_back(make_record("t" + std::to_string(i), "H" + std::to_string(i), Variety::kTW, 5, "x"));
    cn.push_back(make_record("c" + std::to_string(i), "H" + std::to_string(i), Variety::kCN, 5, "y"));
  }
  auto pairs = build_pairs(tw, cn).pairs;
  TruthTable truth = truth_from_pairs(pairs);
  auto m = make_model("mock:echo", {&truth, nullptr, {}});
  auto serialize = [](const std::vector<CompletionResult>& rs) {
    std::ostringstream out;
    write_completions(out, rs);
    return out.str();
  };
  CHECK(serialize(run_eval(pairs, *m, PromptVariant::kShuffled, 3, 1)) ==
        serialize(run_eval(pairs, *m, PromptVariant::kShuffled, 3, 8)));
  CHECK_THROWS(run_eval(pairs, *m, PromptVariant::kShuffled, 3, 0));
}

TEST_CASE("completion files round-trip") {
  CompletionResult a;
  a.pair_id = "p";
  a.side = Side::kCN;
  a.review_ref = "r";
  a.model = "m";
  a.variant = PromptVariant::kStructured;
  a.raw_text = "8";
  a.attempt_count = 1;
  CompletionResult b = a;
  b.raw_text.reset();
  b.transport_error = "http 500: x";
  b.attempt_count = 4;
  std::vector<CompletionResult> rs{a, b};
  std::stringstream buf;
  write_completions(buf, rs);
  CHECK(read_completions(buf) == rs);
}

TEST_CASE("run manifest hash covers its fields") {
  RunManifest m{"e", PromptVariant::kPlain, 1, "t", "c"};
  RunManifest n = m;
  CHECK(m.hash() == n.hash());
  n.seed = 2;
  CHECK(m.hash() != n.hash());
  n = m;
  n.tables_version = "d";
  CHECK(m.hash() != n.hash());
  CHECK(m.to_json()["hash"] == m.hash());
}

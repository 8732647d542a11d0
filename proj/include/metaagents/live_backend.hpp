#pragma once

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "metaagents/llm.hpp"

namespace metaagents {

inline std::string api_key_from_env() {
  if (const char* key = std::getenv("METAAGENTS_API_KEY")) return key;
  if (const char* key = std::getenv("OPENAI_API_KEY")) return key;
  return "";
}

// Live OpenAI-compatible chat-completions backend.
// POSTs {base_url}/v1/chat/completions with a bearer token; retries transport
// errors and 429/5xx with exponential backoff, refuses on other non-2xx.
class LiveBackend : public ChatBackend {
 public:
  struct Options {
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};
    std::chrono::seconds read_timeout{120};
  };

  explicit LiveBackend(std::string base_url, std::string api_key = api_key_from_env(), Options options = {})
      : api_key_(std::move(api_key)), options_(options) {
    // Split "scheme://host[:port][/prefix]" into the client origin and an
    // optional path prefix.
    std::string url = std::move(base_url);
    while (!url.empty() && url.back() == '/') url.pop_back();
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    if (path_start == std::string::npos) {
      origin_ = url;
    } else {
      origin_ = url.substr(0, path_start);
      path_prefix_ = url.substr(path_start);
    }
  }

  bool deterministic() const override { return false; }

  ChatResponse complete(const ChatRequest& request) override {
    const std::string body = request_wire_json(request).dump();
    const std::string path = path_prefix_ + "/v1/chat/completions";

    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    std::string last_error;
    auto backoff = options_.initial_backoff;
    for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
      httplib::Client client(origin_);
      client.set_read_timeout(options_.read_timeout);
      client.set_connection_timeout(std::chrono::seconds(10));

      auto result = client.Post(path, headers, body, "application/json");
      if (!result) {
        last_error = httplib::to_string(result.error());
      } else if (result->status == 429 || result->status >= 500) {
        last_error = "HTTP " + std::to_string(result->status);
      } else if (result->status < 200 || result->status >= 300) {
        throw BackendRefusal(result->status, result->body);
      } else {
        return parse_body(result->body);
      }
      if (attempt < options_.max_attempts) {
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
      }
    }
    throw TransportError("request to " + origin_ + path + " failed after " +
                         std::to_string(options_.max_attempts) + " attempts: " + last_error);
  }

 private:
  static ChatResponse parse_body(const std::string& body) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
      const auto& choice = j.at("choices").at(0);
      ChatResponse response;
      response.content = choice.at("message").at("content").get<std::string>();
      response.finish_reason = choice.value("finish_reason", "stop");
      if (j.contains("usage")) {
        TokenUsage usage;
        usage.prompt_tokens = j["usage"].value("prompt_tokens", 0L);
        usage.completion_tokens = j["usage"].value("completion_tokens", 0L);
        usage.total_tokens = j["usage"].value("total_tokens", 0L);
        response.usage = usage;
      }
      return response;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed completion body: ") + e.what());
    }
  }

  std::string origin_;
  std::string path_prefix_;
  std::string api_key_;
  Options options_;
};

}  // namespace metaagents

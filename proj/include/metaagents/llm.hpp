#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "metaagents/errors.hpp"
#include "metaagents/sha256.hpp"
#include "metaagents/util.hpp"

namespace metaagents {

// Which cognitive function issued a request. Tags drive scripted fixtures and
// the ablation accounting, and never travel on the wire.
enum class FunctionTag { poster_choice, utterance, digest, plan, goal_update, reflection, decision };

inline std::string_view to_string(FunctionTag tag) {
  switch (tag) {
    case FunctionTag::poster_choice: return "poster_choice";
    case FunctionTag::utterance: return "utterance";
    case FunctionTag::digest: return "digest";
    case FunctionTag::plan: return "plan";
    case FunctionTag::goal_update: return "goal_update";
    case FunctionTag::reflection: return "reflection";
    case FunctionTag::decision: return "decision";
  }
  return "?";
}

inline FunctionTag function_tag_from_string(std::string_view name) {
  for (const FunctionTag tag : {FunctionTag::poster_choice, FunctionTag::utterance, FunctionTag::digest,
                                FunctionTag::plan, FunctionTag::goal_update, FunctionTag::reflection,
                                FunctionTag::decision}) {
    if (to_string(tag) == name) return tag;
  }
  throw ParseError("unknown function tag: " + std::string(name));
}

enum class MessageRole { system, user, assistant };

inline std::string_view to_string(MessageRole role) {
  switch (role) {
    case MessageRole::system: return "system";
    case MessageRole::user: return "user";
    case MessageRole::assistant: return "assistant";
  }
  return "?";
}

inline MessageRole message_role_from_string(std::string_view name) {
  if (name == "system") return MessageRole::system;
  if (name == "user") return MessageRole::user;
  if (name == "assistant") return MessageRole::assistant;
  throw ParseError("unknown message role: " + std::string(name));
}

struct ChatMessage {
  MessageRole role = MessageRole::user;
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

// Local routing metadata. Excluded from the wire format and from cache keys.
struct RequestMeta {
  std::string agent_id;
  FunctionTag function_tag = FunctionTag::utterance;
  std::string run_id;

  bool operator==(const RequestMeta&) const = default;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.5;
  std::optional<int> max_tokens;
  RequestMeta meta;

  bool operator==(const ChatRequest&) const = default;

  const std::string* last_user_message() const {
    for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
      if (it->role == MessageRole::user) return &it->content;
    }
    return nullptr;
  }
};

struct TokenUsage {
  long prompt_tokens = 0;
  long completion_tokens = 0;
  long total_tokens = 0;

  bool operator==(const TokenUsage&) const = default;
};

struct ChatResponse {
  std::string content;
  std::string finish_reason = "stop";
  std::optional<TokenUsage> usage;

  bool operator==(const ChatResponse&) const = default;
};

// ---------------------------------------------------------------------------
// Wire / archive JSON

inline nlohmann::json request_wire_json(const ChatRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : request.messages) {
    messages.push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
  }
  nlohmann::json j{{"model", request.model}, {"messages", messages}, {"temperature", request.temperature}};
  if (request.max_tokens) j["max_tokens"] = *request.max_tokens;
  return j;
}

inline nlohmann::json meta_to_json(const RequestMeta& meta) {
  return {{"agent_id", meta.agent_id},
          {"function_tag", std::string(to_string(meta.function_tag))},
          {"run_id", meta.run_id}};
}

inline RequestMeta meta_from_json(const nlohmann::json& j) {
  RequestMeta meta;
  meta.agent_id = j.at("agent_id").get<std::string>();
  meta.function_tag = function_tag_from_string(j.at("function_tag").get<std::string>());
  meta.run_id = j.at("run_id").get<std::string>();
  return meta;
}

inline nlohmann::json response_to_json(const ChatResponse& response) {
  nlohmann::json j{{"content", response.content}, {"finish_reason", response.finish_reason}};
  if (response.usage) {
    j["usage"] = {{"prompt_tokens", response.usage->prompt_tokens},
                  {"completion_tokens", response.usage->completion_tokens},
                  {"total_tokens", response.usage->total_tokens}};
  }
  return j;
}

inline ChatResponse response_from_json(const nlohmann::json& j) {
  ChatResponse r;
  r.content = j.at("content").get<std::string>();
  r.finish_reason = j.value("finish_reason", "stop");
  if (j.contains("usage")) {
    TokenUsage u;
    u.prompt_tokens = j["usage"].value("prompt_tokens", 0L);
    u.completion_tokens = j["usage"].value("completion_tokens", 0L);
    u.total_tokens = j["usage"].value("total_tokens", 0L);
    r.usage = u;
  }
  return r;
}

// Stable content hash over (model, messages, temperature, max_tokens); meta is
// excluded, so a request keys identically regardless of which run issued it.
// The key is the SHA-256 hex digest of the wire JSON with sorted object keys,
// which keeps archives portable across machines and tool versions.
inline std::string cache_key(const ChatRequest& request) {
  return detail::sha256_hex(request_wire_json(request).dump());
}

// ---------------------------------------------------------------------------
// Call log

struct CallLogEntry {
  std::string key;
  RequestMeta meta;
  ChatRequest request;
  ChatResponse response;
  double wall_time_ms = 0.0;  // in-memory only; excluded from serialization
};

class CallLog {
 public:
  void append(CallLogEntry entry) { entries_.push_back(std::move(entry)); }

  const std::vector<CallLogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::size_t count_tag(FunctionTag tag) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
      if (e.meta.function_tag == tag) ++n;
    }
    return n;
  }

  std::size_t count_tag_for(FunctionTag tag, const std::string& agent_id) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
      if (e.meta.function_tag == tag && e.meta.agent_id == agent_id) ++n;
    }
    return n;
  }

  // One JSON object per line, matching the record/replay archive format.
  std::string to_jsonl() const {
    std::string out;
    for (const auto& e : entries_) {
      nlohmann::json line{{"key", e.key},
                          {"meta", meta_to_json(e.meta)},
                          {"request", request_wire_json(e.request)},
                          {"response", response_to_json(e.response)}};
      out += line.dump();
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<CallLogEntry> entries_;
};

// ---------------------------------------------------------------------------
// Backends

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;

  // Whether complete() is a pure function of the request.
  virtual bool deterministic() const { return true; }
};

// Deterministic test double: an ordered rule list matched on
// (function_tag, agent_id, optional substring of the last user message).
// The first matching rule wins.
class ScriptedBackend : public ChatBackend {
 public:
  struct Rule {
    std::optional<FunctionTag> function_tag;
    std::optional<std::string> agent_id;
    std::optional<std::string> contains;
    std::string response;
  };

  ScriptedBackend() = default;
  explicit ScriptedBackend(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  static ScriptedBackend from_json(const nlohmann::json& j) {
    std::vector<Rule> rules;
    for (const auto& item : j) {
      Rule rule;
      if (item.contains("match")) {
        const auto& match = item["match"];
        if (match.contains("function_tag"))
          rule.function_tag = function_tag_from_string(match["function_tag"].get<std::string>());
        if (match.contains("agent_id")) rule.agent_id = match["agent_id"].get<std::string>();
        if (match.contains("contains")) rule.contains = match["contains"].get<std::string>();
      }
      rule.response = item.at("response").get<std::string>();
      rules.push_back(std::move(rule));
    }
    return ScriptedBackend(std::move(rules));
  }

  static ScriptedBackend from_file(const std::filesystem::path& path) {
    try {
      return from_json(nlohmann::json::parse(read_file(path)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }

  void add_rule(Rule rule) { rules_.push_back(std::move(rule)); }

  ChatResponse complete(const ChatRequest& request) override {
    const std::string* last_user = request.last_user_message();
    for (const auto& rule : rules_) {
      if (rule.function_tag && *rule.function_tag != request.meta.function_tag) continue;
      if (rule.agent_id && *rule.agent_id != request.meta.agent_id) continue;
      if (rule.contains) {
        if (!last_user || last_user->find(*rule.contains) == std::string::npos) continue;
      }
      return ChatResponse{rule.response, "stop", std::nullopt};
    }
    throw ScriptMiss("no script rule for (function_tag=" + std::string(to_string(request.meta.function_tag)) +
                     ", agent_id=" + request.meta.agent_id + ")");
  }

 private:
  std::vector<Rule> rules_;
};

// Replays a recorded archive: responses looked up by cache key.
class ReplayBackend : public ChatBackend {
 public:
  ReplayBackend() = default;

  static ReplayBackend from_archive_file(const std::filesystem::path& path) {
    ReplayBackend backend;
    backend.load_archive_file(path);
    return backend;
  }

  void load_archive_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    for (const auto& line : split_lines(text)) {
      if (trim(line).empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
      }
      const auto key = j.at("key").get<std::string>();
      responses_[key] = response_from_json(j.at("response"));
      if (j.contains("meta")) tags_[key] = j["meta"].value("function_tag", "");
    }
  }

  ChatResponse complete(const ChatRequest& request) override {
    const std::string key = cache_key(request);
    const auto it = responses_.find(key);
    if (it == responses_.end())
      throw ReplayMiss(key, std::string(to_string(request.meta.function_tag)));
    return it->second;
  }

  std::size_t size() const { return responses_.size(); }

 private:
  std::unordered_map<std::string, ChatResponse> responses_;
  std::unordered_map<std::string, std::string> tags_;
};

// ---------------------------------------------------------------------------
// Gateway

// Front door for all model traffic within one run: validates requests,
// delegates to the backend, appends to the per-run call log, and optionally
// records an append-only JSONL archive for later replay.
class LlmGateway {
 public:
  explicit LlmGateway(ChatBackend& backend) : backend_(&backend) {}

  void start_recording(const std::filesystem::path& archive_path) {
    if (archive_path.has_parent_path()) std::filesystem::create_directories(archive_path.parent_path());
    record_.emplace(archive_path, std::ios::binary | std::ios::trunc);
    if (!*record_) throw Error("cannot open archive for recording: " + archive_path.string());
  }

  ChatResponse complete(const ChatRequest& request) {
    if (request.messages.empty()) throw ValidationError("messages", "must be non-empty");
    if (request.messages.front().role != MessageRole::system)
      throw ValidationError("messages[0].role", "first message must be system");
    for (std::size_t i = 0; i < request.messages.size(); ++i) {
      if (request.messages[i].content.empty())
        throw ValidationError("messages[" + std::to_string(i) + "].content", "empty content on request");
    }

    const auto started = std::chrono::steady_clock::now();
    const ChatResponse response = backend_->complete(request);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    CallLogEntry entry{cache_key(request), request.meta, request, response, elapsed.count()};
    if (record_) {
      nlohmann::json line{{"key", entry.key},
                          {"meta", meta_to_json(entry.meta)},
                          {"request", request_wire_json(entry.request)},
                          {"response", response_to_json(entry.response)}};
      *record_ << line.dump() << '\n';
      record_->flush();
    }
    log_.append(std::move(entry));
    return response;
  }

  const CallLog& log() const { return log_; }
  ChatBackend& backend() { return *backend_; }

 private:
  ChatBackend* backend_;
  CallLog log_;
  std::optional<std::ofstream> record_;
};

}  // namespace metaagents

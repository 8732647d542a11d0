#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace metaagents {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- configuration / data model ---

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  std::string field_path;
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_path(std::move(field)) {}
};

struct UnknownScenario : Error {
  using Error::Error;
};

// --- llm gateway ---

struct TransportError : Error {
  using Error::Error;
};

struct BackendRefusal : Error {
  int status = 0;
  std::string body;
  BackendRefusal(int http_status, std::string response_body)
      : Error("backend refused request (HTTP " + std::to_string(http_status) + ")"),
        status(http_status),
        body(std::move(response_body)) {}
};

struct ReplayMiss : Error {
  std::string key;
  ReplayMiss(std::string cache_key, const std::string& hint)
      : Error("replay miss for key " + cache_key + (hint.empty() ? "" : " (nearest tag: " + hint + ")")),
        key(std::move(cache_key)) {}
};

struct ScriptMiss : Error {
  using Error::Error;
};

// --- agent cognition ---

struct UnknownAgent : Error {
  using Error::Error;
};

struct OwnerMismatch : Error {
  using Error::Error;
};

struct DigestParseError : Error {
  using Error::Error;
};

struct ChoiceParseError : Error {
  using Error::Error;
};

struct DecisionParseError : Error {
  using Error::Error;
};

struct ReflectionDisabled : Error {
  using Error::Error;
};

struct SkillNotFound : Error {
  using Error::Error;
};

struct SkillNotAllowed : Error {
  using Error::Error;
};

// --- evaluation / harness ---

struct MissingGroundTruth : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

struct MissingInput : Error {
  using Error::Error;
};

struct MixedScenario : Error {
  using Error::Error;
};

}  // namespace metaagents

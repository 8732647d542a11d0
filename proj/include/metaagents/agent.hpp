#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metaagents/errors.hpp"
#include "metaagents/llm.hpp"
#include "metaagents/memory.hpp"
#include "metaagents/prompts.hpp"
#include "metaagents/rng.hpp"
#include "metaagents/scenario.hpp"
#include "metaagents/types.hpp"

namespace metaagents {

// Stored hybrid memory of one conversation: theme summary plus key terms.
struct ConversationDigest {
  std::string partner;  // agent_id of the other participant
  std::string theme;
  std::vector<std::string> key_terms;
};

struct Plan {
  std::string owner;
  std::string text;
  std::vector<std::string> derived_needs;  // parsed "- " bullet lines
};

struct Goal {
  std::string owner;
  std::string text;
  int revision = 0;
};

// Per-run mutable state of one agent: spec + memory stream + current goal.
class Agent {
 public:
  explicit Agent(const AgentSpec& spec) : spec_(&spec), memory_(spec.agent_id) {
    memory_.store({spec.agent_id, 0, MemoryKind::Biography, spec.biography, {}});
    memory_.store({spec.agent_id, 0, MemoryKind::Goal, spec.initial_goal, {}});
    goal_ = Goal{spec.agent_id, spec.initial_goal, 0};
  }

  const AgentSpec& spec() const { return *spec_; }
  const std::string& id() const { return spec_->agent_id; }
  const std::string& name() const { return spec_->name; }
  MemoryStore& memory() { return memory_; }
  const MemoryStore& memory() const { return memory_; }
  const Goal& goal() const { return goal_; }
  const std::optional<Plan>& plan() const { return plan_; }

  void set_goal(Goal goal) { goal_ = std::move(goal); }
  void set_plan(Plan plan) { plan_ = std::move(plan); }

 private:
  const AgentSpec* spec_;
  MemoryStore memory_;
  Goal goal_;
  std::optional<Plan> plan_;
};

// Shared plumbing for all cognitive operations of one run.
struct CognitionContext {
  LlmGateway& gateway;
  const PromptLibrary& prompts;
  const ScenarioConfig& scenario;
  std::string model = "gpt-3.5-turbo-16k";
  double temperature = 0.5;
  std::optional<int> max_tokens;
  std::string run_id = "run-0";
  std::size_t memory_budget_chars = 8000;
  bool reflection_enabled = true;
  int tick = 0;
};

namespace detail {

inline std::string agent_display_name(const ScenarioConfig& cfg, const std::string& agent_id) {
  const AgentSpec* spec = cfg.find_agent(agent_id);
  return spec ? spec->name : agent_id;
}

inline std::string render_memory(const Agent& agent, const CognitionContext& ctx) {
  const auto entries = agent.memory().retrieve(ctx.memory_budget_chars);
  std::string out;
  for (const auto& e : entries) {
    out += "[";
    out += to_string(e.kind);
    out += "] ";
    out += e.content;
    out += '\n';
  }
  if (out.empty()) out = "(nothing retrieved)\n";
  return out;
}

inline std::string render_transcript(const Transcript& transcript, const ScenarioConfig& cfg) {
  if (transcript.utterances.empty()) return "(no messages yet; you speak first)";
  std::string out;
  for (const auto& [speaker, text] : transcript.utterances) {
    out += agent_display_name(cfg, speaker);
    out += ": ";
    out += text;
    out += '\n';
  }
  return out;
}

inline ChatRequest make_request(const Agent& agent, FunctionTag tag, const std::string& user_prompt,
                                const CognitionContext& ctx) {
  ChatRequest request;
  request.model = ctx.model;
  request.temperature = ctx.temperature;
  request.max_tokens = ctx.max_tokens;
  request.meta = RequestMeta{agent.id(), tag, ctx.run_id};
  request.messages.push_back({MessageRole::system,
                              ctx.prompts.render("system", {{"name", agent.name()},
                                                            {"biography", agent.spec().biography},
                                                            {"goal", agent.goal().text}})});
  request.messages.push_back({MessageRole::user, user_prompt});
  return request;
}

// Re-asks once with a format reminder. Used by every parse-sensitive op.
inline ChatResponse reprompt(ChatRequest request, const ChatResponse& bad, const std::string& reminder,
                             CognitionContext& ctx) {
  request.messages.push_back({MessageRole::assistant, bad.content.empty() ? "(empty)" : bad.content});
  request.messages.push_back({MessageRole::user, reminder});
  return ctx.gateway.complete(request);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Memory module operations

inline void memory_store(Agent& agent, MemoryEntry entry) { agent.memory().store(std::move(entry)); }

inline std::vector<MemoryEntry> memory_retrieve(const Agent& agent, std::size_t budget_chars) {
  return agent.memory().retrieve(budget_chars);
}

// Parses "THEME: ... | TERMS: a; b; c" (or the two on separate lines).
inline std::optional<ConversationDigest> try_parse_digest(const std::string& text) {
  const auto theme_pos = text.find("THEME:");
  const auto terms_pos = text.find("TERMS:");
  if (theme_pos == std::string::npos || terms_pos == std::string::npos || terms_pos < theme_pos)
    return std::nullopt;
  std::string theme = text.substr(theme_pos + 6, terms_pos - (theme_pos + 6));
  // tolerate the "|" separator and a trailing newline before TERMS:
  while (!theme.empty() && (theme.back() == '|' || theme.back() == ' ' || theme.back() == '\n' || theme.back() == '\r'))
    theme.pop_back();
  theme = trim(theme);
  std::string terms_text = text.substr(terms_pos + 6);
  if (const auto nl = terms_text.find('\n'); nl != std::string::npos) terms_text = terms_text.substr(0, nl);
  std::vector<std::string> terms;
  for (const auto& part : split(terms_text, ';')) {
    const std::string term = trim(part);
    if (!term.empty()) terms.push_back(term);
  }
  if (theme.empty() || terms.empty()) return std::nullopt;
  ConversationDigest digest;
  digest.theme = theme;
  digest.key_terms = std::move(terms);
  return digest;
}

inline std::string render_digest(const ConversationDigest& digest) {
  return "THEME: " + digest.theme + " | TERMS: " + join(digest.key_terms, "; ");
}

// One gateway call (function_tag=digest); parses the hybrid summary format.
// Stores nothing itself.
inline ConversationDigest digest_conversation(Agent& agent, const Transcript& transcript,
                                              CognitionContext& ctx) {
  if (transcript.utterances.empty()) throw Error("cannot digest an empty transcript");
  const std::string partner_id =
      agent.id() == transcript.recruiter_id ? transcript.seeker_id : transcript.recruiter_id;
  const std::string prompt = ctx.prompts.render(
      "digest", {{"partner_name", detail::agent_display_name(ctx.scenario, partner_id)},
                 {"transcript", detail::render_transcript(transcript, ctx.scenario)}});
  const ChatRequest request = detail::make_request(agent, FunctionTag::digest, prompt, ctx);
  ChatResponse response = ctx.gateway.complete(request);
  auto parsed = try_parse_digest(response.content);
  if (!parsed) {
    response = detail::reprompt(request, response,
                                "Your reply did not match the required format. Respond on one line exactly as:\n"
                                "THEME: <summary> | TERMS: <term 1>; <term 2>; <term 3>",
                                ctx);
    parsed = try_parse_digest(response.content);
  }
  if (!parsed) throw DigestParseError("digest response unparseable for " + agent.id());
  parsed->partner = partner_id;
  return *parsed;
}

// ---------------------------------------------------------------------------
// Reasoning module operations

inline Plan generate_initial_plan(Agent& agent, CognitionContext& ctx) {
  if (agent.spec().kind != AgentKind::Recruiter)
    throw Error("generate_initial_plan requires a recruiter, got " + agent.id());
  if (agent.plan()) throw Error("plan already generated for " + agent.id());
  const CompanySpec* company = ctx.scenario.find_company(agent.spec().company_id);
  if (!company) throw UnknownAgent("recruiter " + agent.id() + " has no company");
  const std::string prompt = ctx.prompts.render("plan", {{"poster", company->poster}});
  const ChatResponse response =
      ctx.gateway.complete(detail::make_request(agent, FunctionTag::plan, prompt, ctx));

  Plan plan{agent.id(), trim(response.content), {}};
  for (const auto& line : split_lines(response.content)) {
    const std::string t = trim(line);
    if (t.starts_with("- ")) plan.derived_needs.push_back(trim(t.substr(2)));
  }
  agent.memory().store({agent.id(), ctx.tick, MemoryKind::Plan, plan.text, {}});
  agent.set_plan(plan);
  return plan;
}

inline Goal update_goal(Agent& agent, const ConversationDigest& digest, CognitionContext& ctx) {
  const std::string prompt = ctx.prompts.render("goal_update", {{"memory", detail::render_memory(agent, ctx)},
                                                                {"theme", digest.theme},
                                                                {"terms", join(digest.key_terms, "; ")}});
  const ChatResponse response =
      ctx.gateway.complete(detail::make_request(agent, FunctionTag::goal_update, prompt, ctx));
  Goal updated{agent.id(), trim(response.content), agent.goal().revision + 1};
  agent.memory().store({agent.id(), ctx.tick, MemoryKind::Goal, updated.text, {}});
  agent.set_goal(updated);
  return updated;
}

// Subject of a reflection: a finished conversation or a draft team decision.
struct ReflectOnConversation {
  const ConversationDigest* digest;
};
struct ReflectOnDraftDecision {
  std::string rendered_draft;
};
using ReflectionSubject = std::variant<ReflectOnConversation, ReflectOnDraftDecision>;

inline std::string reflect(Agent& agent, const ReflectionSubject& subject, CognitionContext& ctx) {
  if (!ctx.reflection_enabled)
    throw ReflectionDisabled("reflect invoked while reflection is ablated (engine bug)");
  std::string subject_text;
  if (const auto* conv = std::get_if<ReflectOnConversation>(&subject)) {
    subject_text = "A conversation you just had, digested as:\n" + render_digest(*conv->digest);
  } else {
    subject_text = "Your draft team decision:\n" + std::get<ReflectOnDraftDecision>(subject).rendered_draft;
  }
  const std::string prompt = ctx.prompts.render(
      "reflection", {{"memory", detail::render_memory(agent, ctx)}, {"subject", subject_text}});
  const ChatResponse response =
      ctx.gateway.complete(detail::make_request(agent, FunctionTag::reflection, prompt, ctx));
  const std::string text = trim(response.content);
  agent.memory().store({agent.id(), ctx.tick, MemoryKind::Reflection, text, {}});
  return text;
}

// ---------------------------------------------------------------------------
// Poster choice

namespace detail {

// Earliest case-insensitive occurrence of the company id, also accepting
// "company-1" written as "company 1" or "company1".
inline std::size_t find_company_mention(const std::string& response, const std::string& company_id) {
  const std::string haystack = ascii_lower(response);
  std::size_t best = std::string::npos;
  const std::string base = ascii_lower(company_id);
  std::string spaced = base;
  std::string collapsed;
  for (char& c : spaced) {
    if (c == '-' || c == '_') c = ' ';
  }
  for (const char c : base) {
    if (c != '-' && c != '_') collapsed.push_back(c);
  }
  for (const std::string& needle : {base, spaced, collapsed}) {
    if (needle.empty()) continue;
    const auto pos = haystack.find(needle);
    if (pos != std::string::npos && pos < best) best = pos;
  }
  return best;
}

// Poster ids ranked by first mention in the response.
inline std::vector<std::string> parse_company_ranking(
    const std::string& response, const std::vector<std::pair<std::string, std::string>>& posters) {
  std::vector<std::pair<std::size_t, std::string>> hits;
  for (const auto& [company_id, poster] : posters) {
    const auto pos = find_company_mention(response, company_id);
    if (pos != std::string::npos) hits.emplace_back(pos, company_id);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::string> ranked;
  for (auto& [pos, id] : hits) ranked.push_back(std::move(id));
  return ranked;
}

}  // namespace detail

struct CompanyChoice {
  std::vector<std::string> companies;  // in interview order
  bool used_fallback = false;
};

// Which recruiters to approach. SingleChoice asks the model to name exactly
// one company (short-circuited when only one poster exists);
// UniformRandomCount draws k from the seeded stream and asks for a ranked
// list, taking the top k distinct ids. Falls back to seeded uniform draws
// when no poster id is recognizable after one reprompt.
inline CompanyChoice choose_companies(Agent& agent,
                                      const std::vector<std::pair<std::string, std::string>>& posters,
                                      const InterviewPolicy& policy, std::uint64_t master_seed,
                                      CognitionContext& ctx) {
  if (posters.empty()) throw Error("choose_companies requires at least one poster");

  const bool single = policy.kind == InterviewPolicy::Kind::SingleChoice;
  if (single && posters.size() == 1) return CompanyChoice{{posters.front().first}, false};

  int want = 1;
  if (!single) {
    auto rng = make_rng(master_seed, "interview-count:" + agent.id());
    want = uniform_int_inclusive(rng, policy.min_count, policy.max_count);
    want = std::min<int>(want, static_cast<int>(posters.size()));
  }

  std::string posters_text;
  for (const auto& [company_id, poster] : posters) {
    posters_text += company_id + ":\n" + poster + "\n\n";
  }
  const std::string instruction =
      single ? "Name exactly one company you want to interview with, by its identifier."
             : "Rank the companies you would like to interview with, most preferred first, one per line, "
               "by their identifiers.";
  const std::string prompt =
      ctx.prompts.render("poster_choice", {{"posters", posters_text}, {"instruction", instruction}});
  const ChatRequest request = detail::make_request(agent, FunctionTag::poster_choice, prompt, ctx);

  ChatResponse response = ctx.gateway.complete(request);
  auto ranked = detail::parse_company_ranking(response.content, posters);
  if (ranked.empty()) {
    response = detail::reprompt(request, response,
                                "No company identifier was recognizable in your reply. Answer with the "
                                "company identifier(s) exactly as written on the posters.",
                                ctx);
    ranked = detail::parse_company_ranking(response.content, posters);
  }

  CompanyChoice choice;
  if (ranked.empty()) choice.used_fallback = true;
  for (const auto& id : ranked) {
    if (static_cast<int>(choice.companies.size()) == want) break;
    choice.companies.push_back(id);
  }
  // Top up from the seeded stream when the reply named too few companies.
  if (static_cast<int>(choice.companies.size()) < want) {
    auto rng = make_rng(master_seed, "choice-fallback:" + agent.id());
    std::vector<std::string> remaining;
    for (const auto& [company_id, poster] : posters) {
      if (std::find(choice.companies.begin(), choice.companies.end(), company_id) == choice.companies.end())
        remaining.push_back(company_id);
    }
    while (static_cast<int>(choice.companies.size()) < want && !remaining.empty()) {
      const std::size_t pick = uniform_index(rng, remaining.size());
      choice.companies.push_back(remaining[pick]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
      choice.used_fallback = true;
    }
  }
  return choice;
}

// ---------------------------------------------------------------------------
// Conversation

struct UtteranceResult {
  std::string text;
  bool end_signal = false;
};

// One turn of dialogue. The end-of-conversation token is stripped from the
// stored text; its presence is surfaced as the end signal.
inline UtteranceResult next_utterance(Agent& agent, const Transcript& transcript, CognitionContext& ctx) {
  const std::string partner_id =
      agent.id() == transcript.recruiter_id ? transcript.seeker_id : transcript.recruiter_id;
  const std::string prompt = ctx.prompts.render(
      "utterance", {{"partner_name", detail::agent_display_name(ctx.scenario, partner_id)},
                    {"memory", detail::render_memory(agent, ctx)},
                    {"transcript", detail::render_transcript(transcript, ctx.scenario)},
                    {"end_marker", ctx.scenario.conversation_limits.end_marker}});
  const ChatResponse response =
      ctx.gateway.complete(detail::make_request(agent, FunctionTag::utterance, prompt, ctx));

  UtteranceResult result;
  std::string text = response.content;
  const std::string& marker = ctx.scenario.conversation_limits.end_marker;
  std::size_t pos;
  while ((pos = text.find(marker)) != std::string::npos) {
    text.erase(pos, marker.size());
    result.end_signal = true;
  }
  result.text = trim(text);
  return result;
}

// ---------------------------------------------------------------------------
// Team decision

namespace detail {

// Resolves a free-text name to an agent id: exact id, exact name, then
// case-insensitive name. Unresolved names stay as-is (the evaluator counts
// them as redundant recruits). No fuzzy matching.
inline std::string resolve_agent_name(const ScenarioConfig& cfg, const std::string& raw) {
  const std::string name = trim(raw);
  auto all = [&](auto&& fn) -> const AgentSpec* {
    for (const auto& a : cfg.recruiters) {
      if (fn(a)) return &a;
    }
    for (const auto& a : cfg.seekers) {
      if (fn(a)) return &a;
    }
    return nullptr;
  };
  if (const auto* a = all([&](const AgentSpec& s) { return s.agent_id == name; })) return a->agent_id;
  if (const auto* a = all([&](const AgentSpec& s) { return s.name == name; })) return a->agent_id;
  const std::string lower = ascii_lower(name);
  if (const auto* a = all([&](const AgentSpec& s) { return ascii_lower(s.name) == lower; })) return a->agent_id;
  return name;
}

inline std::vector<std::string> parse_name_list(const std::string& text, const ScenarioConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& part : split(text, ',')) {
    std::string name = trim(part);
    if (name.empty() || name == "(none)" || name == "none") continue;
    out.push_back(resolve_agent_name(cfg, name));
  }
  return out;
}

// Strips leading enumeration like "1.", "2)", "(3)", "step 4:", "- ".
inline std::string strip_enumeration(std::string_view s) {
  std::string t = trim(s);
  if (t.starts_with("- ")) return trim(t.substr(2));
  std::size_t i = 0;
  if (i < t.size() && t[i] == '(') ++i;
  const std::size_t digits_start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == digits_start) {
    const std::string lower = ascii_lower(t);
    if (lower.starts_with("step ")) {
      std::size_t j = 5;
      while (j < lower.size() && std::isdigit(static_cast<unsigned char>(lower[j]))) ++j;
      if (j > 5 && j < lower.size() && (lower[j] == ':' || lower[j] == '.')) return trim(t.substr(j + 1));
    }
    return t;
  }
  if (i < t.size() && (t[i] == '.' || t[i] == ')' || t[i] == ':')) ++i;
  return trim(t.substr(i));
}

}  // namespace detail

// Parses the labeled-sections decision format. Returns nullopt when the
// required markers or content are missing.
inline std::optional<TeamDecision> try_parse_decision(const std::string& text, const ScenarioConfig& cfg,
                                                      const std::string& company_id) {
  TeamDecision decision;
  decision.company_id = company_id;

  enum class Section { none, workflow, assign };
  Section section = Section::none;
  bool saw_recruit = false, saw_workflow = false, saw_assign = false;
  std::vector<std::pair<std::string, std::string>> assign_lines;

  for (const auto& raw_line : split_lines(text)) {
    const std::string line = trim(raw_line);
    if (line.empty()) continue;
    const std::string upper_probe = ascii_lower(line);
    if (upper_probe.starts_with("recruit:")) {
      decision.recruited = detail::parse_name_list(line.substr(8), cfg);
      saw_recruit = true;
      section = Section::none;
      continue;
    }
    if (upper_probe.starts_with("workflow:")) {
      saw_workflow = true;
      section = Section::workflow;
      continue;
    }
    if (upper_probe.starts_with("assign:")) {
      saw_assign = true;
      section = Section::assign;
      continue;
    }
    if (section == Section::workflow) {
      const std::string label = detail::strip_enumeration(line);
      if (!label.empty()) decision.workflow.push_back({label, {}});
    } else if (section == Section::assign) {
      const auto colon = line.find(':');
      if (colon != std::string::npos)
        assign_lines.emplace_back(trim(line.substr(0, colon)), line.substr(colon + 1));
    }
  }

  if (!saw_recruit || !saw_workflow || !saw_assign) return std::nullopt;
  if (decision.recruited.empty() || decision.workflow.empty()) return std::nullopt;

  for (const auto& [key, names] : assign_lines) {
    ProposedStage* stage = nullptr;
    bool numeric = !key.empty();
    for (const char c : key) {
      if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    }
    if (numeric) {
      const std::size_t index = static_cast<std::size_t>(std::stoul(key));
      if (index >= 1 && index <= decision.workflow.size()) stage = &decision.workflow[index - 1];
    } else {
      const std::string want = ascii_lower(detail::strip_enumeration(key));
      for (auto& s : decision.workflow) {
        if (ascii_lower(s.label) == want) {
          stage = &s;
          break;
        }
      }
      if (!stage) {
        for (auto& s : decision.workflow) {
          if (ascii_lower(s.label).find(want) != std::string::npos) {
            stage = &s;
            break;
          }
        }
      }
    }
    if (stage) {
      for (auto& name : detail::parse_name_list(names, cfg)) stage->assignees.push_back(std::move(name));
    }
  }
  return decision;
}

inline std::string render_decision(const TeamDecision& decision, const ScenarioConfig& cfg) {
  std::vector<std::string> recruit_names;
  for (const auto& id : decision.recruited) recruit_names.push_back(detail::agent_display_name(cfg, id));
  std::string out = "RECRUIT: " + join(recruit_names, ", ") + "\nWORKFLOW:\n";
  for (std::size_t i = 0; i < decision.workflow.size(); ++i) {
    out += std::to_string(i + 1) + ". " + decision.workflow[i].label + "\n";
  }
  out += "ASSIGN:\n";
  for (std::size_t i = 0; i < decision.workflow.size(); ++i) {
    std::vector<std::string> names;
    for (const auto& id : decision.workflow[i].assignees) names.push_back(detail::agent_display_name(cfg, id));
    out += std::to_string(i + 1) + ": " + join(names, ", ") + "\n";
  }
  return out;
}

// The recruiter's final act: one structured decision call, optionally passed
// through a draft-reflection-revision loop when reflection is enabled.
inline TeamDecision decide_team(Agent& agent, const std::vector<std::string>& interviewed_names,
                                CognitionContext& ctx) {
  if (agent.spec().kind != AgentKind::Recruiter)
    throw Error("decide_team requires a recruiter, got " + agent.id());
  const CompanySpec* company = ctx.scenario.find_company(agent.spec().company_id);
  if (!company) throw UnknownAgent("recruiter " + agent.id() + " has no company");

  const auto ask = [&](const std::string& revision_note) -> TeamDecision {
    const std::string prompt =
        ctx.prompts.render("decision", {{"memory", detail::render_memory(agent, ctx)},
                                        {"revision_note", revision_note},
                                        {"poster", company->poster},
                                        {"candidates", interviewed_names.empty()
                                                           ? std::string("(none)")
                                                           : join(interviewed_names, ", ")}});
    const ChatRequest request = detail::make_request(agent, FunctionTag::decision, prompt, ctx);
    ChatResponse response = ctx.gateway.complete(request);
    auto parsed = try_parse_decision(response.content, ctx.scenario, company->company_id);
    if (!parsed) {
      response = detail::reprompt(request, response,
                                  "Your reply did not match the required format. Respond exactly with the "
                                  "RECRUIT:, WORKFLOW:, and ASSIGN: sections as instructed.",
                                  ctx);
      parsed = try_parse_decision(response.content, ctx.scenario, company->company_id);
    }
    if (!parsed) throw DecisionParseError("decision unparseable for " + agent.id());
    return *parsed;
  };

  TeamDecision decision = ask("");
  if (ctx.reflection_enabled) {
    const std::string draft_text = render_decision(decision, ctx.scenario);
    const std::string reflection = reflect(agent, ReflectOnDraftDecision{draft_text}, ctx);
    const std::string revision_note = "You previously drafted:\n" + draft_text +
                                      "\nYour reflection on the draft:\n" + reflection +
                                      "\nRevise your decision accordingly.\n\n";
    decision = ask(revision_note);
  }
  agent.memory().store(
      {agent.id(), ctx.tick, MemoryKind::Observation, "Final decision:\n" + render_decision(decision, ctx.scenario), {}});
  return decision;
}

}  // namespace metaagents

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "metaagents/agent.hpp"
#include "metaagents/llm.hpp"
#include "metaagents/rng.hpp"
#include "metaagents/scenario.hpp"
#include "metaagents/sha256.hpp"
#include "metaagents/types.hpp"
#include "metaagents/util.hpp"

namespace metaagents {

enum class Engagement { Free, Busy };

// Shared fair state observable by every agent's perception module.
struct Venue {
  int tick = 0;
  std::vector<std::pair<std::string, std::string>> posters;  // (company_id, text)
  std::map<std::string, Engagement> engagement;
  std::map<std::string, std::vector<std::string>> interview_queues;  // company -> seekers
};

struct PerceptionReport {
  std::vector<std::pair<std::string, std::string>> posters;
  std::map<std::string, Engagement> availability;
};

// Read-only snapshot of the venue at the current tick.
inline PerceptionReport perceive(const Venue& venue, const std::string& agent_id, const ScenarioConfig& cfg) {
  if (!cfg.find_agent(agent_id)) throw UnknownAgent("no agent " + agent_id);
  return PerceptionReport{venue.posters, venue.engagement};
}

// One company's decision slot in a fair outcome. A slot without a decision is
// the Unparseable marker, carrying the error text.
struct DecisionSlot {
  std::optional<TeamDecision> decision;
  std::string error;
  bool unparseable() const { return !decision.has_value(); }
};

struct FairOutcome {
  std::string run_id;
  std::uint64_t seed = 0;
  bool reflection_enabled = true;
  std::vector<Transcript> transcripts;
  std::map<std::string, std::vector<ConversationDigest>> digests;  // per agent
  std::map<std::string, DecisionSlot> decisions;                   // per company
  CallLog call_log;
  std::string config_hash;
};

inline std::string scenario_config_hash(const ScenarioConfig& cfg) {
  return detail::sha256_hex(serialize_scenario(cfg));
}

struct RunFairOptions {
  bool reflection_enabled = true;
  std::string run_id = "run-0";
  std::string model = "gpt-3.5-turbo-16k";
  std::optional<int> max_tokens;
  std::size_t memory_budget_chars = 8000;
  std::optional<std::filesystem::path> record_archive;
  // Test hook: called after every utterance with the current venue state.
  std::function<void(const Venue&)> tick_observer;
};

// Per-seeker interview count for the UniformRandomCount policy. Exposed so the
// sampling distribution can be tested without running a fair.
inline int draw_interview_count(std::uint64_t master_seed, const std::string& seeker_id,
                                const InterviewPolicy& policy) {
  auto rng = make_rng(master_seed, "interview-count:" + seeker_id);
  return uniform_int_inclusive(rng, policy.min_count, policy.max_count);
}

namespace detail {

// Errors that indicate a broken harness setup rather than experiment data;
// these abort the run instead of poisoning a decision slot.
[[noreturn]] inline void rethrow_if_harness_fault() { throw; }

template <typename Fn>
bool guard_slot(DecisionSlot& slot, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const ScriptMiss&) {
    throw;
  } catch (const ReplayMiss&) {
    throw;
  } catch (const TransportError&) {
    throw;
  } catch (const BackendRefusal&) {
    throw;
  } catch (const Error& e) {
    if (slot.error.empty()) {
      slot.decision.reset();
      slot.error = e.what();
    }
    return false;
  }
}

}  // namespace detail

class FairEngine {
 public:
  FairEngine(const ScenarioConfig& cfg, ChatBackend& backend, std::uint64_t seed, RunFairOptions options = {})
      : cfg_(cfg),
        seed_(seed),
        options_(std::move(options)),
        gateway_(backend),
        ctx_{gateway_, prompts_, cfg, options_.model, cfg.temperature, options_.max_tokens,
             options_.run_id, options_.memory_budget_chars, options_.reflection_enabled, 0} {
    prompts_ = PromptLibrary::builtin();
    if (options_.record_archive) gateway_.start_recording(*options_.record_archive);
  }

  FairEngine(const ScenarioConfig& cfg, ChatBackend& backend, std::uint64_t seed, PromptLibrary prompts,
             RunFairOptions options = {})
      : FairEngine(cfg, backend, seed, std::move(options)) {
    prompts_ = std::move(prompts);
  }

  FairOutcome run() {
    FairOutcome outcome;
    outcome.run_id = options_.run_id;
    outcome.seed = seed_;
    outcome.reflection_enabled = options_.reflection_enabled;
    outcome.config_hash = scenario_config_hash(cfg_);

    init_venue();
    for (const auto& c : cfg_.companies) outcome.decisions[c.company_id] = DecisionSlot{TeamDecision{}, ""};

    // 1. Recruiters draw up their initial plans.
    for (const auto& spec : cfg_.recruiters) {
      ++ctx_.tick;
      venue_.tick = ctx_.tick;
      auto& slot = outcome.decisions[spec.company_id];
      detail::guard_slot(slot, [&] { generate_initial_plan(agent(spec.agent_id), ctx_); });
    }

    // 2. Seekers read the posters and choose whom to approach.
    std::map<std::string, std::vector<std::string>> chosen;  // seeker -> companies in rank order
    for (const auto& spec : cfg_.seekers) {
      ++ctx_.tick;
      venue_.tick = ctx_.tick;
      Agent& seeker = agent(spec.agent_id);
      const PerceptionReport report = perceive(venue_, spec.agent_id, cfg_);
      std::string seen = "Posters at the fair:\n";
      for (const auto& [company_id, poster] : report.posters) seen += company_id + ": " + poster + "\n";
      seeker.memory().store({spec.agent_id, ctx_.tick, MemoryKind::Observation, seen, {}});
      const CompanyChoice choice = choose_companies(seeker, report.posters, cfg_.interview_policy, seed_, ctx_);
      chosen[spec.agent_id] = choice.companies;
    }

    // 3. Interviews.
    if (cfg_.interview_policy.kind == InterviewPolicy::Kind::SingleChoice) {
      // Queue per company in seeker list order, then a seeded tie-shuffle;
      // queues drain sequentially in company order.
      for (const auto& spec : cfg_.seekers) {
        for (const auto& company_id : chosen[spec.agent_id]) {
          venue_.interview_queues[company_id].push_back(spec.agent_id);
        }
      }
      for (auto& [company_id, queue] : venue_.interview_queues) {
        auto rng = make_rng(seed_, "queue:" + company_id);
        deterministic_shuffle(queue, rng);
      }
      for (const auto& company : cfg_.companies) {
        const auto queue_it = venue_.interview_queues.find(company.company_id);
        if (queue_it == venue_.interview_queues.end()) continue;
        for (const auto& seeker_id : queue_it->second) {
          interview(company.company_id, seeker_id, outcome);
        }
      }
    } else {
      // Multi-interview policy: each seeker completes all of its interviews in
      // its ranked company order before the next seeker starts.
      for (const auto& spec : cfg_.seekers) {
        for (const auto& company_id : chosen[spec.agent_id]) {
          venue_.interview_queues[company_id].push_back(spec.agent_id);
          interview(company_id, spec.agent_id, outcome);
        }
      }
    }

    // 4. Team decisions.
    for (const auto& company : cfg_.companies) {
      ++ctx_.tick;
      venue_.tick = ctx_.tick;
      auto& slot = outcome.decisions[company.company_id];
      if (slot.unparseable()) continue;  // already poisoned by an earlier error
      const AgentSpec* recruiter_spec = cfg_.recruiter_for(company.company_id);
      if (!recruiter_spec) {
        slot.decision.reset();
        slot.error = "no recruiter for company " + company.company_id;
        continue;
      }
      detail::guard_slot(slot, [&] {
        std::vector<std::string> interviewed;
        for (const auto& t : outcome.transcripts) {
          if (t.recruiter_id == recruiter_spec->agent_id)
            interviewed.push_back(detail::agent_display_name(cfg_, t.seeker_id));
        }
        slot.decision = decide_team(agent(recruiter_spec->agent_id), interviewed, ctx_);
      });
    }

    outcome.call_log = std::move(gateway_).log_snapshot();
    return outcome;
  }

  // Runs one interview conversation: marks both parties busy, alternates
  // utterances starting with the recruiter, stops on the end token or the
  // utterance cap. The transcript is written in place so a mid-conversation
  // gateway error still leaves the partial transcript behind.
  void run_conversation(const std::string& recruiter_id, const std::string& seeker_id, Transcript& transcript) {
    if (venue_.engagement[recruiter_id] != Engagement::Free || venue_.engagement[seeker_id] != Engagement::Free)
      throw Error("conversation requested while a participant is busy");
    venue_.engagement[recruiter_id] = Engagement::Busy;
    venue_.engagement[seeker_id] = Engagement::Busy;

    transcript.recruiter_id = recruiter_id;
    transcript.seeker_id = seeker_id;
    transcript.ended_by = Transcript::EndedBy::MaxUtterances;

    const int max_utterances = cfg_.conversation_limits.max_utterances;
    try {
      bool recruiter_turn = true;  // recruiter speaks first
      while (static_cast<int>(transcript.utterances.size()) < max_utterances) {
        Agent& speaker = agent(recruiter_turn ? recruiter_id : seeker_id);
        const UtteranceResult result = next_utterance(speaker, transcript, ctx_);
        transcript.utterances.emplace_back(speaker.id(), result.text);
        if (options_.tick_observer) options_.tick_observer(venue_);
        if (result.end_signal) {
          transcript.ended_by = Transcript::EndedBy::EndMarker;
          break;
        }
        recruiter_turn = !recruiter_turn;
      }
    } catch (...) {
      transcript.ended_by = Transcript::EndedBy::MaxUtterances;
      venue_.engagement[recruiter_id] = Engagement::Free;
      venue_.engagement[seeker_id] = Engagement::Free;
      throw;
    }
    venue_.engagement[recruiter_id] = Engagement::Free;
    venue_.engagement[seeker_id] = Engagement::Free;
  }

  const Venue& venue() const { return venue_; }
  Agent& agent(const std::string& agent_id) {
    const auto it = agents_.find(agent_id);
    if (it == agents_.end()) throw UnknownAgent("no agent " + agent_id);
    return *it->second;
  }

 private:
  void init_venue() {
    venue_ = Venue{};
    for (const auto& c : cfg_.companies) venue_.posters.emplace_back(c.company_id, c.poster);
    agents_.clear();
    for (const auto& spec : cfg_.recruiters) {
      agents_.emplace(spec.agent_id, std::make_unique<Agent>(spec));
      venue_.engagement[spec.agent_id] = Engagement::Free;
    }
    for (const auto& spec : cfg_.seekers) {
      agents_.emplace(spec.agent_id, std::make_unique<Agent>(spec));
      venue_.engagement[spec.agent_id] = Engagement::Free;
    }
  }

  // Conversation plus the post-conversation cognition of both parties.
  void interview(const std::string& company_id, const std::string& seeker_id, FairOutcome& outcome) {
    const AgentSpec* recruiter_spec = cfg_.recruiter_for(company_id);
    if (!recruiter_spec) return;
    auto& slot = outcome.decisions[company_id];

    ++ctx_.tick;
    venue_.tick = ctx_.tick;
    outcome.transcripts.emplace_back();
    Transcript& transcript = outcome.transcripts.back();
    const bool ok = detail::guard_slot(slot, [&] {
      run_conversation(recruiter_spec->agent_id, seeker_id, transcript);
    });
    if (!ok || transcript.utterances.empty()) return;

    // Both parties digest, store, and update goals; reflection follows when
    // enabled (recruiter first, mirroring speaking order).
    for (const std::string& party : {recruiter_spec->agent_id, seeker_id}) {
      detail::guard_slot(slot, [&] {
        Agent& a = agent(party);
        const ConversationDigest digest = digest_conversation(a, transcript, ctx_);
        const std::string partner_name = detail::agent_display_name(cfg_, digest.partner);
        a.memory().store({party, ctx_.tick, MemoryKind::Digest,
                          "Conversation with " + partner_name + ": " + digest.theme +
                              " (key terms: " + join(digest.key_terms, "; ") + ")",
                          digest.key_terms});
        outcome.digests[party].push_back(digest);
        update_goal(a, digest, ctx_);
        if (ctx_.reflection_enabled) reflect(a, ReflectOnConversation{&digest}, ctx_);
      });
    }
  }

  const ScenarioConfig& cfg_;
  std::uint64_t seed_;
  RunFairOptions options_;
  LlmGateway gateway_;
  PromptLibrary prompts_;
  CognitionContext ctx_;
  Venue venue_;
  std::map<std::string, std::unique_ptr<Agent>> agents_;
};

// Executes one full fair: plans, poster choices, queued interviews with
// digest/goal-update/reflection after each conversation, then team decisions.
// With a deterministic backend the outcome is a pure function of
// (scenario, seed, options).
inline FairOutcome run_fair(const ScenarioConfig& cfg, ChatBackend& backend, std::uint64_t seed,
                            RunFairOptions options = {}, std::optional<PromptLibrary> prompts = std::nullopt) {
  if (prompts) {
    FairEngine engine(cfg, backend, seed, std::move(*prompts), std::move(options));
    return engine.run();
  }
  FairEngine engine(cfg, backend, seed, std::move(options));
  return engine.run();
}

// ---------------------------------------------------------------------------
// Outcome serialization (directory of transcripts.jsonl, decisions.json,
// calllog.jsonl, meta.json)

inline nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json utterances = nlohmann::json::array();
  for (const auto& [speaker, text] : t.utterances) utterances.push_back({{"speaker", speaker}, {"text", text}});
  return {{"recruiter", t.recruiter_id},
          {"seeker", t.seeker_id},
          {"utterances", utterances},
          {"ended_by", t.ended_by == Transcript::EndedBy::EndMarker ? "EndMarker" : "MaxUtterances"}};
}

inline nlohmann::json decision_to_json(const TeamDecision& d) {
  nlohmann::json workflow = nlohmann::json::array();
  for (const auto& stage : d.workflow) workflow.push_back({{"label", stage.label}, {"assignees", stage.assignees}});
  return {{"company_id", d.company_id}, {"recruited", d.recruited}, {"workflow", workflow}};
}

inline TeamDecision decision_from_json(const nlohmann::json& j) {
  TeamDecision d;
  d.company_id = j.at("company_id").get<std::string>();
  d.recruited = j.at("recruited").get<std::vector<std::string>>();
  for (const auto& stage : j.at("workflow")) {
    d.workflow.push_back({stage.at("label").get<std::string>(),
                          stage.at("assignees").get<std::vector<std::string>>()});
  }
  return d;
}

inline std::string transcripts_to_jsonl(const FairOutcome& outcome) {
  std::string out;
  for (const auto& t : outcome.transcripts) {
    out += transcript_to_json(t).dump();
    out += '\n';
  }
  return out;
}

inline std::string decisions_to_json(const FairOutcome& outcome) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [company_id, slot] : outcome.decisions) {
    if (slot.unparseable()) {
      j[company_id] = {{"unparseable", true}, {"error", slot.error}};
    } else {
      j[company_id] = decision_to_json(*slot.decision);
    }
  }
  return j.dump(2) + "\n";
}

inline std::string outcome_meta_json(const FairOutcome& outcome) {
  nlohmann::json j{{"run_id", outcome.run_id},
                   {"seed", outcome.seed},
                   {"config_hash", outcome.config_hash},
                   {"options", {{"reflection_enabled", outcome.reflection_enabled}}}};
  return j.dump(2) + "\n";
}

inline void write_outcome_dir(const FairOutcome& outcome, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "transcripts.jsonl", transcripts_to_jsonl(outcome));
  write_file(dir / "decisions.json", decisions_to_json(outcome));
  write_file(dir / "calllog.jsonl", outcome.call_log.to_jsonl());
  write_file(dir / "meta.json", outcome_meta_json(outcome));
}

}  // namespace metaagents

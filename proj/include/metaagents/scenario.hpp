#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "metaagents/errors.hpp"
#include "metaagents/types.hpp"
#include "metaagents/util.hpp"

namespace metaagents {

enum class AgentKind { Recruiter, Seeker };

struct AgentSpec {
  std::string agent_id;
  std::string name;
  AgentKind kind = AgentKind::Seeker;
  std::string company_id;  // set iff kind == Recruiter
  std::string biography;   // prompt-visible
  std::string initial_goal;
  // Evaluator-only ground-truth identity; never rendered into a prompt.
  // Absent for distractor seekers.
  std::optional<RoleId> ground_truth_role;

  bool operator==(const AgentSpec&) const = default;
};

struct GroundTruthSpec {
  std::string team_id;
  std::vector<CanonicalPhase> canonical_workflow;
  std::vector<RoleId> required_roles;
  std::map<RoleId, std::set<CanonicalPhase>> role_phase_map;
  std::set<std::string> capable_agents;
  // The team leader (normally the company's recruiter). The leader takes part
  // in workflow stages without being a recruit, so the evaluator treats them
  // as a qualified assignee. Filled from the company's recruiter when absent.
  std::optional<std::string> team_lead;

  bool operator==(const GroundTruthSpec&) const = default;
};

struct CompanySpec {
  std::string company_id;
  std::string poster;  // prompt-visible one-paragraph description
  GroundTruthSpec ground_truth;

  bool operator==(const CompanySpec&) const = default;
};

struct InterviewPolicy {
  enum class Kind { SingleChoice, UniformRandomCount };
  Kind kind = Kind::SingleChoice;
  int min_count = 1;
  int max_count = 3;

  bool operator==(const InterviewPolicy&) const = default;
};

struct ConversationLimits {
  int max_utterances = 10;
  std::string end_marker = "<END_CONVERSATION>";

  bool operator==(const ConversationLimits&) const = default;
};

struct ScenarioConfig {
  std::string scenario_id;  // "1".."4" or a custom string
  std::vector<AgentSpec> recruiters;
  std::vector<AgentSpec> seekers;
  std::vector<CompanySpec> companies;
  InterviewPolicy interview_policy;
  int default_runs = 100;
  ConversationLimits conversation_limits;
  double temperature = 0.5;
  std::vector<std::string> notes;  // free-form provenance notes, not used at runtime

  bool operator==(const ScenarioConfig&) const = default;

  const AgentSpec* find_agent(const std::string& agent_id) const {
    for (const auto& a : recruiters) {
      if (a.agent_id == agent_id) return &a;
    }
    for (const auto& a : seekers) {
      if (a.agent_id == agent_id) return &a;
    }
    return nullptr;
  }

  const CompanySpec* find_company(const std::string& company_id) const {
    for (const auto& c : companies) {
      if (c.company_id == company_id) return &c;
    }
    return nullptr;
  }

  const AgentSpec* recruiter_for(const std::string& company_id) const {
    for (const auto& a : recruiters) {
      if (a.company_id == company_id) return &a;
    }
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string field_path;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool empty() const { return violations.empty(); }
};

inline ValidationReport validate(const ScenarioConfig& cfg) {
  ValidationReport report;
  auto fail = [&](std::string path, std::string msg) {
    report.violations.push_back({std::move(path), std::move(msg)});
  };

  std::set<std::string> agent_ids;
  auto check_agent = [&](const AgentSpec& a, const std::string& where) {
    if (a.agent_id.empty()) fail(where + ".agent_id", "empty id");
    if (!agent_ids.insert(a.agent_id).second) fail(where + ".agent_id", "duplicate agent_id " + a.agent_id);
  };
  for (std::size_t i = 0; i < cfg.recruiters.size(); ++i) {
    const auto& r = cfg.recruiters[i];
    const std::string where = "recruiters[" + std::to_string(i) + "]";
    check_agent(r, where);
    if (r.kind != AgentKind::Recruiter) fail(where + ".kind", "must be Recruiter");
    if (!cfg.find_company(r.company_id)) fail("companies", "unknown id " + r.company_id);
  }
  for (std::size_t i = 0; i < cfg.seekers.size(); ++i) {
    const auto& s = cfg.seekers[i];
    const std::string where = "seekers[" + std::to_string(i) + "]";
    check_agent(s, where);
    if (s.kind != AgentKind::Seeker) fail(where + ".kind", "must be Seeker");
  }

  std::set<std::string> seeker_ids;
  for (const auto& s : cfg.seekers) seeker_ids.insert(s.agent_id);

  for (std::size_t i = 0; i < cfg.companies.size(); ++i) {
    const auto& c = cfg.companies[i];
    const std::string where = "companies[" + std::to_string(i) + "]";
    if (c.poster.empty()) fail(where + ".poster", "poster must be non-empty");
    const auto& gt = c.ground_truth;
    if (gt.team_id != c.company_id) fail(where + ".ground_truth.team_id", "must match company_id");
    std::set<CanonicalPhase> seen;
    for (const CanonicalPhase p : gt.canonical_workflow) {
      if (!seen.insert(p).second)
        fail(where + ".ground_truth.canonical_workflow", "duplicate phase " + std::string(to_string(p)));
    }
    for (const auto& [role, phases] : gt.role_phase_map) {
      for (const CanonicalPhase p : phases) {
        if (!seen.count(p))
          fail(where + ".ground_truth.role_phase_map." + role,
               "phase " + std::string(to_string(p)) + " not in canonical_workflow");
      }
    }
    for (const auto& agent_id : gt.capable_agents) {
      if (!seeker_ids.count(agent_id))
        fail(where + ".ground_truth.capable_agents", agent_id + " is not a seeker");
    }
    // Every required role must be held by exactly one capable agent, or the
    // alignment criterion has no answer.
    for (const auto& role : gt.required_roles) {
      int holders = 0;
      for (const auto& s : cfg.seekers) {
        if (gt.capable_agents.count(s.agent_id) && s.ground_truth_role == role) ++holders;
      }
      if (holders != 1)
        fail(where + ".ground_truth.required_roles", role + " held by " + std::to_string(holders) + " capable agents");
    }
    if (gt.team_lead && !cfg.find_agent(*gt.team_lead))
      fail(where + ".ground_truth.team_lead", "unknown agent " + *gt.team_lead);
  }

  if (cfg.default_runs <= 0) fail("default_runs", "must be positive");
  if (cfg.conversation_limits.max_utterances <= 0) fail("conversation_limits.max_utterances", "must be positive");
  if (cfg.conversation_limits.end_marker.empty()) fail("conversation_limits.end_marker", "must be non-empty");
  if (cfg.temperature < 0.0 || cfg.temperature > 2.0) fail("temperature", "must be in [0, 2]");
  if (cfg.interview_policy.kind == InterviewPolicy::Kind::UniformRandomCount &&
      (cfg.interview_policy.min_count < 1 || cfg.interview_policy.max_count < cfg.interview_policy.min_count))
    fail("interview_policy", "invalid count range");

  // Cast shape of the four built-in scenarios.
  auto expect_cast = [&](std::size_t recruiters, std::size_t seekers) {
    if (cfg.recruiters.size() != recruiters)
      fail("recruiters", "scenario " + cfg.scenario_id + " expects " + std::to_string(recruiters));
    if (cfg.seekers.size() != seekers)
      fail("seekers", "scenario " + cfg.scenario_id + " expects " + std::to_string(seekers));
  };
  if (cfg.scenario_id == "1") expect_cast(1, 4);
  if (cfg.scenario_id == "2") expect_cast(1, 6);
  if (cfg.scenario_id == "3" || cfg.scenario_id == "4") expect_cast(3, 9);
  if (cfg.scenario_id == "3" && cfg.interview_policy.kind != InterviewPolicy::Kind::SingleChoice)
    fail("interview_policy", "scenario 3 uses SingleChoice");
  if (cfg.scenario_id == "4" && cfg.interview_policy.kind != InterviewPolicy::Kind::UniformRandomCount)
    fail("interview_policy", "scenario 4 uses UniformRandomCount");

  return report;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace detail {

inline nlohmann::json agent_to_json(const AgentSpec& a) {
  nlohmann::json j{{"agent_id", a.agent_id},
                   {"name", a.name},
                   {"kind", a.kind == AgentKind::Recruiter ? "Recruiter" : "Seeker"},
                   {"biography", a.biography},
                   {"initial_goal", a.initial_goal}};
  if (a.kind == AgentKind::Recruiter) j["company_id"] = a.company_id;
  if (a.ground_truth_role) j["ground_truth_role"] = *a.ground_truth_role;
  return j;
}

inline AgentSpec agent_from_json(const nlohmann::json& j) {
  AgentSpec a;
  a.agent_id = j.at("agent_id").get<std::string>();
  a.name = j.at("name").get<std::string>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Recruiter") {
    a.kind = AgentKind::Recruiter;
    a.company_id = j.at("company_id").get<std::string>();
  } else if (kind == "Seeker") {
    a.kind = AgentKind::Seeker;
  } else {
    throw ParseError("agent kind must be Recruiter or Seeker, got " + kind);
  }
  a.biography = j.at("biography").get<std::string>();
  a.initial_goal = j.at("initial_goal").get<std::string>();
  if (j.contains("ground_truth_role")) a.ground_truth_role = j.at("ground_truth_role").get<std::string>();
  return a;
}

inline nlohmann::json ground_truth_to_json(const GroundTruthSpec& gt) {
  nlohmann::json workflow = nlohmann::json::array();
  for (const CanonicalPhase p : gt.canonical_workflow) workflow.push_back(std::string(to_string(p)));
  nlohmann::json role_map = nlohmann::json::object();
  for (const auto& [role, phases] : gt.role_phase_map) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CanonicalPhase p : phases) arr.push_back(std::string(to_string(p)));
    role_map[role] = arr;
  }
  nlohmann::json j{{"team_id", gt.team_id},
                   {"canonical_workflow", workflow},
                   {"required_roles", gt.required_roles},
                   {"role_phase_map", role_map},
                   {"capable_agents", gt.capable_agents}};
  if (gt.team_lead) j["team_lead"] = *gt.team_lead;
  return j;
}

inline GroundTruthSpec ground_truth_from_json(const nlohmann::json& j) {
  GroundTruthSpec gt;
  gt.team_id = j.at("team_id").get<std::string>();
  for (const auto& p : j.at("canonical_workflow")) gt.canonical_workflow.push_back(phase_from_string(p.get<std::string>()));
  gt.required_roles = j.at("required_roles").get<std::vector<RoleId>>();
  for (const auto& [role, phases] : j.at("role_phase_map").items()) {
    std::set<CanonicalPhase> set;
    for (const auto& p : phases) set.insert(phase_from_string(p.get<std::string>()));
    gt.role_phase_map[role] = std::move(set);
  }
  gt.capable_agents = j.at("capable_agents").get<std::set<std::string>>();
  if (j.contains("team_lead")) gt.team_lead = j.at("team_lead").get<std::string>();
  return gt;
}

}  // namespace detail

inline nlohmann::json scenario_to_json(const ScenarioConfig& cfg) {
  nlohmann::json recruiters = nlohmann::json::array();
  for (const auto& a : cfg.recruiters) recruiters.push_back(detail::agent_to_json(a));
  nlohmann::json seekers = nlohmann::json::array();
  for (const auto& a : cfg.seekers) seekers.push_back(detail::agent_to_json(a));
  nlohmann::json companies = nlohmann::json::array();
  for (const auto& c : cfg.companies) {
    companies.push_back(nlohmann::json{{"company_id", c.company_id},
                                       {"poster", c.poster},
                                       {"ground_truth", detail::ground_truth_to_json(c.ground_truth)}});
  }
  nlohmann::json policy;
  if (cfg.interview_policy.kind == InterviewPolicy::Kind::SingleChoice) {
    policy = nlohmann::json{{"kind", "SingleChoice"}};
  } else {
    policy = nlohmann::json{{"kind", "UniformRandomCount"},
                            {"min", cfg.interview_policy.min_count},
                            {"max", cfg.interview_policy.max_count}};
  }
  nlohmann::json j{{"scenario_id", cfg.scenario_id},
                   {"recruiters", recruiters},
                   {"seekers", seekers},
                   {"companies", companies},
                   {"interview_policy", policy},
                   {"default_runs", cfg.default_runs},
                   {"conversation_limits",
                    {{"max_utterances", cfg.conversation_limits.max_utterances},
                     {"end_marker", cfg.conversation_limits.end_marker}}},
                   {"temperature", cfg.temperature}};
  if (!cfg.notes.empty()) j["notes"] = cfg.notes;
  return j;
}

inline std::string serialize_scenario(const ScenarioConfig& cfg) { return scenario_to_json(cfg).dump(2) + "\n"; }

inline ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  ScenarioConfig cfg;
  try {
    if (j.at("scenario_id").is_number_integer()) {
      cfg.scenario_id = std::to_string(j.at("scenario_id").get<int>());
    } else {
      cfg.scenario_id = j.at("scenario_id").get<std::string>();
    }
    for (const auto& a : j.at("recruiters")) cfg.recruiters.push_back(detail::agent_from_json(a));
    for (const auto& a : j.at("seekers")) cfg.seekers.push_back(detail::agent_from_json(a));
    for (const auto& c : j.at("companies")) {
      CompanySpec company;
      company.company_id = c.at("company_id").get<std::string>();
      company.poster = c.at("poster").get<std::string>();
      company.ground_truth = detail::ground_truth_from_json(c.at("ground_truth"));
      cfg.companies.push_back(std::move(company));
    }
    const auto& policy = j.at("interview_policy");
    const auto kind = policy.at("kind").get<std::string>();
    if (kind == "SingleChoice") {
      cfg.interview_policy.kind = InterviewPolicy::Kind::SingleChoice;
    } else if (kind == "UniformRandomCount") {
      cfg.interview_policy.kind = InterviewPolicy::Kind::UniformRandomCount;
      cfg.interview_policy.min_count = policy.value("min", 1);
      cfg.interview_policy.max_count = policy.value("max", 3);
    } else {
      throw ParseError("unknown interview_policy kind: " + kind);
    }
    cfg.default_runs = j.at("default_runs").get<int>();
    cfg.conversation_limits.max_utterances = j.at("conversation_limits").at("max_utterances").get<int>();
    cfg.conversation_limits.end_marker = j.at("conversation_limits").at("end_marker").get<std::string>();
    cfg.temperature = j.at("temperature").get<double>();
    if (j.contains("notes")) cfg.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario schema error: ") + e.what());
  }

  // Default the team lead to the company's recruiter.
  for (auto& c : cfg.companies) {
    if (!c.ground_truth.team_lead) {
      if (const AgentSpec* r = cfg.recruiter_for(c.company_id)) c.ground_truth.team_lead = r->agent_id;
    }
  }
  return cfg;
}

inline ScenarioConfig load_scenario(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  ScenarioConfig cfg = scenario_from_json(j);
  const ValidationReport report = validate(cfg);
  if (!report.empty()) {
    const auto& v = report.violations.front();
    throw ValidationError(v.field_path, v.message);
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Built-in presets (casts and ground truths of the four job-fair scenarios)

namespace detail {

inline AgentSpec recruiter_tyler() {
  AgentSpec a;
  a.agent_id = "tyler-zeller";
  a.name = "Tyler Zeller";
  a.kind = AgentKind::Recruiter;
  a.company_id = "company-1";
  a.biography =
      "Tyler Zeller is the leader of the software development team at company 1. He is an organized and "
      "decisive manager with years of experience turning preliminary concepts into fully-realized software "
      "products. Tyler values quality, reliability, and clear division of work, and he is attending the job "
      "fair to build the team that will deliver company 1's next product.";
  a.initial_goal =
      "Assemble a software development team capable of transforming a preliminary concept into a "
      "fully-realized software product.";
  return a;
}

inline AgentSpec recruiter_priya() {
  AgentSpec a;
  a.agent_id = "priya-raman";
  a.name = "Priya Raman";
  a.kind = AgentKind::Recruiter;
  a.company_id = "company-2";
  a.biography =
      "Priya Raman leads the data analysis team at company 2. She is a methodical and curious team leader "
      "who has guided analysis projects from problem formulation through presentation of findings. Priya is "
      "attending the job fair to recruit the specialists her next engagement needs.";
  a.initial_goal = "Recruit a data analysis team that can take a client problem from formulation to a final presentation.";
  return a;
}

inline AgentSpec recruiter_daniel() {
  AgentSpec a;
  a.agent_id = "daniel-okafor";
  a.name = "Daniel Okafor";
  a.kind = AgentKind::Recruiter;
  a.company_id = "company-3";
  a.biography =
      "Daniel Okafor is the leader of the advertising poster design team at company 3. He is an energetic "
      "creative director with a record of campaigns that pair sharp copy with striking visuals. Daniel is at "
      "the job fair to staff the team for company 3's next poster campaign.";
  a.initial_goal = "Put together a poster design team covering brief creation, copywriting, and graphic design.";
  return a;
}

inline AgentSpec seeker_yohan() {
  AgentSpec a;
  a.agent_id = "yohan-henderson";
  a.name = "Yohan Henderson";
  a.kind = AgentKind::Seeker;
  // Biography text follows the fixture used for this agent elsewhere in the corpus.
  a.biography =
      "Yohan Henderson is an adaptable, strategic, and communicative person. He is a skilled professional "
      "with experience in product design, strategic planning, innovation, and project management. He "
      "possesses a proven track record of effectively overseeing projects from inception to completion. His "
      "strategic thinking and innovative approach consistently yield impactful results. Yohan is seeking new "
      "working opportunities.";
  a.initial_goal = "Find a position where experience overseeing projects from inception to completion is valued.";
  a.ground_truth_role = "ProjectManager";
  return a;
}

inline AgentSpec seeker_marcus() {
  AgentSpec a;
  a.agent_id = "marcus-chen";
  a.name = "Marcus Chen";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Marcus Chen is a focused and inventive professional with deep experience in building software: "
      "front-end and back-end development, API design, code review, and performance tuning. He has shipped "
      "reliable production systems and enjoys turning designs into working code. Marcus is seeking new "
      "working opportunities.";
  a.initial_goal = "Find a team that needs hands-on software development expertise.";
  a.ground_truth_role = "Programmer";
  return a;
}

inline AgentSpec seeker_george() {
  AgentSpec a;
  a.agent_id = "george-holloway";
  a.name = "George Holloway";
  a.kind = AgentKind::Seeker;
  a.biography =
      "George Holloway is a meticulous professional with expertise in software analysis, designing "
      "comprehensive programming test procedures, implementing test programs, and conducting rigorous "
      "software evaluation. He takes pride in catching defects before users ever see them. George is seeking "
      "new working opportunities.";
  a.initial_goal = "Find a team where rigorous software evaluation and debugging skills are essential.";
  a.ground_truth_role = "CodeTester";
  return a;
}

inline AgentSpec seeker_lena() {
  AgentSpec a;
  a.agent_id = "lena-alvarez";
  a.name = "Lena Alvarez";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Lena Alvarez is an imaginative and detail-oriented professional skilled in visual concepts, interface "
      "aesthetics, prototyping, and translating rough ideas into polished mockups. Her portfolio spans "
      "product interfaces and brand imagery praised for clarity and style. Lena is seeking new working "
      "opportunities.";
  a.initial_goal = "Find a product team that needs strong visual and interface design work.";
  a.ground_truth_role = "ArtisticDesigner";
  return a;
}

inline AgentSpec seeker_benjamin() {
  AgentSpec a;
  a.agent_id = "benjamin-williams";
  a.name = "Benjamin Williams";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Benjamin Williams is an undergraduate student majoring in mathematics. He is enthusiastic and quick "
      "to learn, with a strong background in mathematics and problem-solving, though he has little practical "
      "work experience. Benjamin is not actively seeking employment; he is gathering information for future "
      "career planning.";
  a.initial_goal = "Gather information about career paths for future planning.";
  return a;
}

inline AgentSpec seeker_sofia() {
  AgentSpec a;
  a.agent_id = "sofia-mercer";
  a.name = "Sofia Mercer";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Sofia Mercer is an outgoing advertising specialist experienced in campaign planning, audience "
      "research, and media placement. She has run print and online campaigns for consumer brands and is "
      "comfortable presenting to clients. Sofia is seeking new working opportunities.";
  a.initial_goal = "Find a company that needs advertising campaign expertise.";
  return a;
}

inline AgentSpec seeker_noah() {
  AgentSpec a;
  a.agent_id = "noah-fischer";
  a.name = "Noah Fischer";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Noah Fischer is a systematic professional experienced in gathering data from disparate sources, "
      "building ingestion pipelines, and formatting and cleaning datasets until they are trustworthy. He is "
      "known for robust tooling and careful documentation of data lineage. Noah is seeking new working "
      "opportunities.";
  a.initial_goal = "Find a team that needs dependable data acquisition and cleaning.";
  a.ground_truth_role = "DataEngineer";
  return a;
}

inline AgentSpec seeker_amara() {
  AgentSpec a;
  a.agent_id = "amara-diallo";
  a.name = "Amara Diallo";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Amara Diallo is an analytical and inventive professional skilled in exploring datasets for patterns "
      "and anomalies, developing and validating predictive models, and communicating findings to "
      "stakeholders. Her analyses have repeatedly changed product decisions. Amara is seeking new working "
      "opportunities.";
  a.initial_goal = "Find a position centered on modeling and insight work.";
  a.ground_truth_role = "DataScientist";
  return a;
}

inline AgentSpec seeker_isabel() {
  AgentSpec a;
  a.agent_id = "isabel-fuentes";
  a.name = "Isabel Fuentes";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Isabel Fuentes is a perceptive professional experienced in defining campaign objectives, researching "
      "target audiences, and writing the creative briefs that align a team before any artwork begins. She "
      "excels at distilling a client's intent into a clear direction. Isabel is seeking new working "
      "opportunities.";
  a.initial_goal = "Find a creative team that values a strong brief before execution.";
  a.ground_truth_role = "ContentStrategist";
  return a;
}

inline AgentSpec seeker_elliot() {
  AgentSpec a;
  a.agent_id = "elliot-graves";
  a.name = "Elliot Graves";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Elliot Graves is a precise and witty professional who drafts and refines the text elements of "
      "campaigns: headlines, slogans, and body copy that land with the intended audience. Editors praise his "
      "ear for tone and economy of words. Elliot is seeking new working opportunities.";
  a.initial_goal = "Find a campaign team that needs persuasive writing.";
  a.ground_truth_role = "Copywriter";
  return a;
}

inline AgentSpec seeker_mina() {
  AgentSpec a;
  a.agent_id = "mina-park";
  a.name = "Mina Park";
  a.kind = AgentKind::Seeker;
  a.biography =
      "Mina Park is a visually-driven professional skilled in layout, composition, typography, and the "
      "overall aesthetics of printed and digital pieces. Her poster work balances bold imagery with "
      "legibility. Mina is seeking new working opportunities.";
  a.initial_goal = "Find a design team producing visual campaign material.";
  a.ground_truth_role = "GraphicDesigner";
  return a;
}

inline CompanySpec company_one(const std::set<std::string>& capable) {
  CompanySpec c;
  c.company_id = "company-1";
  c.poster =
      "Company 1 is a start-up aiming at delivering advanced software solutions that cater to a diverse "
      "range of needs. With expertise finely honed in software development, Company 1 has consistently "
      "engineered products that uphold high standards of functionality and reliability. The company's "
      "unwavering commitment to quality guarantees seamless integration of software components and "
      "streamlined user experiences. Company 1's mission is firmly rooted in leveraging technology to "
      "optimize processes and elevate user interactions. Through a meticulous approach to development, the "
      "company places a premium on innovation, precision, and achieving measurable outcomes.";
  GroundTruthSpec gt;
  gt.team_id = "company-1";
  gt.canonical_workflow = {CanonicalPhase::Designing, CanonicalPhase::Coding, CanonicalPhase::Testing,
                           CanonicalPhase::Documenting};
  gt.required_roles = {"ProjectManager", "Programmer", "CodeTester", "ArtisticDesigner"};
  gt.role_phase_map = {
      {"ProjectManager", {CanonicalPhase::Designing, CanonicalPhase::Documenting}},
      {"Programmer", {CanonicalPhase::Coding}},
      {"CodeTester", {CanonicalPhase::Testing}},
      {"ArtisticDesigner", {CanonicalPhase::Designing}},
  };
  gt.capable_agents = capable;
  gt.team_lead = "tyler-zeller";
  c.ground_truth = gt;
  return c;
}

inline CompanySpec company_two() {
  CompanySpec c;
  c.company_id = "company-2";
  c.poster =
      "Company 2 is a consultancy dedicated to turning raw data into decisions. Its teams take client "
      "problems from first formulation through data gathering, exploration, and modeling to a final "
      "presentation that stakeholders can act on. Company 2 prides itself on rigorous methods, honest "
      "evaluation of models, and findings communicated with clarity. Its mission is to make evidence the "
      "foundation of every client's strategy.";
  GroundTruthSpec gt;
  gt.team_id = "company-2";
  gt.canonical_workflow = {CanonicalPhase::ProblemFormulation, CanonicalPhase::DataAcquisition,
                           CanonicalPhase::DataExploration,    CanonicalPhase::ModelDevelopment,
                           CanonicalPhase::ModelEvaluation,    CanonicalPhase::Presentation};
  gt.required_roles = {"DataEngineer", "DataScientist"};
  gt.role_phase_map = {
      {"DataEngineer", {CanonicalPhase::DataAcquisition}},
      {"DataScientist",
       {CanonicalPhase::DataExploration, CanonicalPhase::ModelDevelopment, CanonicalPhase::ModelEvaluation,
        CanonicalPhase::Presentation}},
  };
  gt.capable_agents = {"noah-fischer", "amara-diallo"};
  gt.team_lead = "priya-raman";
  c.ground_truth = gt;
  return c;
}

inline CompanySpec company_three() {
  CompanySpec c;
  c.company_id = "company-3";
  c.poster =
      "Company 3 is an advertising agency known for posters that people remember. Every campaign starts "
      "with a sharp creative brief, moves through copy that persuades, and ends in graphic design that "
      "stops passers-by. Company 3's mission is to give each client's message a form worth looking at, "
      "pairing disciplined process with bold creative instincts.";
  GroundTruthSpec gt;
  gt.team_id = "company-3";
  gt.canonical_workflow = {CanonicalPhase::BriefCreating, CanonicalPhase::Copywriting, CanonicalPhase::GraphicDesign};
  gt.required_roles = {"ContentStrategist", "Copywriter", "GraphicDesigner"};
  gt.role_phase_map = {
      {"ContentStrategist", {CanonicalPhase::BriefCreating}},
      {"Copywriter", {CanonicalPhase::Copywriting}},
      {"GraphicDesigner", {CanonicalPhase::GraphicDesign}},
  };
  gt.capable_agents = {"isabel-fuentes", "elliot-graves", "mina-park"};
  gt.team_lead = "daniel-okafor";
  c.ground_truth = gt;
  return c;
}

}  // namespace detail

inline ScenarioConfig builtin_scenario(int id) {
  using namespace detail;
  const std::set<std::string> team1_capable = {"yohan-henderson", "marcus-chen", "george-holloway", "lena-alvarez"};
  ScenarioConfig cfg;
  cfg.conversation_limits = {};
  cfg.temperature = 0.5;
  cfg.notes = {"Agent casts beyond the named published examples are fabricated fixtures."};
  switch (id) {
    case 1:
      cfg.scenario_id = "1";
      cfg.recruiters = {recruiter_tyler()};
      cfg.seekers = {seeker_yohan(), seeker_marcus(), seeker_george(), seeker_lena()};
      cfg.companies = {company_one(team1_capable)};
      cfg.interview_policy.kind = InterviewPolicy::Kind::SingleChoice;
      cfg.default_runs = 100;
      break;
    case 2:
      cfg.scenario_id = "2";
      cfg.recruiters = {recruiter_tyler()};
      cfg.seekers = {seeker_yohan(), seeker_marcus(), seeker_george(),
                     seeker_lena(),  seeker_benjamin(), seeker_sofia()};
      cfg.companies = {company_one(team1_capable)};
      cfg.interview_policy.kind = InterviewPolicy::Kind::SingleChoice;
      cfg.default_runs = 100;
      break;
    case 3:
    case 4:
      cfg.scenario_id = std::to_string(id);
      cfg.recruiters = {recruiter_tyler(), recruiter_priya(), recruiter_daniel()};
      cfg.seekers = {seeker_yohan(),  seeker_marcus(), seeker_george(),
                     seeker_lena(),   seeker_noah(),   seeker_amara(),
                     seeker_isabel(), seeker_elliot(), seeker_mina()};
      cfg.companies = {company_one(team1_capable), company_two(), company_three()};
      if (id == 3) {
        cfg.interview_policy.kind = InterviewPolicy::Kind::SingleChoice;
      } else {
        cfg.interview_policy.kind = InterviewPolicy::Kind::UniformRandomCount;
        cfg.interview_policy.min_count = 1;
        cfg.interview_policy.max_count = 3;
      }
      cfg.default_runs = 50;
      break;
    default:
      throw UnknownScenario("no built-in scenario " + std::to_string(id));
  }
  return cfg;
}

}  // namespace metaagents

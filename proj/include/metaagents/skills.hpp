#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "metaagents/errors.hpp"
#include "metaagents/scenario.hpp"
#include "metaagents/types.hpp"
#include "metaagents/util.hpp"

namespace metaagents {

// A role-gated function in the execution module. Execution bodies are stubs:
// the harness studies coordination, not task output.
struct SkillDescriptor {
  std::string skill_id;
  std::string description;
  std::set<RoleId> allowed_roles;
  std::function<std::string(std::string_view)> execute;
};

inline std::function<std::string(std::string_view)> stub_skill_body(const std::string& skill_id) {
  return [skill_id](std::string_view input) { return "[stub:" + skill_id + "] " + std::string(input); };
}

class SkillPool {
 public:
  void add(SkillDescriptor skill) { skills_[skill.skill_id] = std::move(skill); }

  static SkillPool builtin() {
    SkillPool pool;
    const auto add = [&](std::string id, std::string description, std::set<RoleId> roles) {
      pool.add(SkillDescriptor{id, std::move(description), std::move(roles), stub_skill_body(id)});
    };
    add("write_code", "Write application code for a feature.", {"Programmer"});
    add("review_code", "Review a change for defects and style.", {"Programmer", "CodeTester"});
    add("run_tests", "Design and execute test procedures.", {"CodeTester"});
    add("write_user_manual", "Write end-user documentation.", {"ProjectManager"});
    add("design_mockup", "Produce interface mockups and visual concepts.", {"ArtisticDesigner"});
    add("build_data_pipeline", "Gather, format, and clean datasets.", {"DataEngineer"});
    add("train_model", "Develop and evaluate predictive models.", {"DataScientist"});
    add("present_findings", "Present analysis findings to stakeholders.", {"DataScientist"});
    add("write_brief", "Write a campaign creative brief.", {"ContentStrategist"});
    add("write_copy", "Draft and refine campaign text.", {"Copywriter"});
    add("design_graphics", "Lay out the visual design of a piece.", {"GraphicDesigner"});
    return pool;
  }

  // Registry file: JSON list of {"skill_id","description","allowed_roles"}.
  static SkillPool from_file(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
    SkillPool pool;
    for (const auto& item : j) {
      SkillDescriptor skill;
      skill.skill_id = item.at("skill_id").get<std::string>();
      skill.description = item.at("description").get<std::string>();
      for (const auto& role : item.at("allowed_roles")) skill.allowed_roles.insert(role.get<std::string>());
      skill.execute = stub_skill_body(skill.skill_id);
      pool.add(std::move(skill));
    }
    return pool;
  }

  std::string invoke(const std::optional<RoleId>& role, const std::string& skill_id, std::string_view input) const {
    const auto it = skills_.find(skill_id);
    if (it == skills_.end()) throw SkillNotFound("no skill registered as " + skill_id);
    if (!role || !it->second.allowed_roles.count(*role))
      throw SkillNotAllowed(skill_id + " is not available to this agent");
    return it->second.execute(input);
  }

  const std::map<std::string, SkillDescriptor>& skills() const { return skills_; }

 private:
  std::map<std::string, SkillDescriptor> skills_;
};

inline std::string invoke_skill(const ScenarioConfig& cfg, const SkillPool& pool, const std::string& agent_id,
                                const std::string& skill_id, std::string_view input) {
  const AgentSpec* agent = cfg.find_agent(agent_id);
  if (!agent) throw UnknownAgent("no agent " + agent_id);
  return pool.invoke(agent->ground_truth_role, skill_id, input);
}

}  // namespace metaagents

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metaagents/errors.hpp"

namespace metaagents {

// Machine identifier for a ground-truth role ("ProjectManager", "DataEngineer", ...).
// Deliberately decoupled from the free-text job titles the language model may
// invent; only the evaluator ever sees these.
using RoleId = std::string;

// Union of all ground-truth workflow phases across the three built-in teams.
enum class CanonicalPhase {
  Designing,
  Coding,
  Testing,
  Documenting,
  ProblemFormulation,
  DataAcquisition,
  DataExploration,
  ModelDevelopment,
  ModelEvaluation,
  Presentation,
  BriefCreating,
  Copywriting,
  GraphicDesign,
};

inline constexpr std::array<CanonicalPhase, 13> kAllPhases = {
    CanonicalPhase::Designing,       CanonicalPhase::Coding,
    CanonicalPhase::Testing,         CanonicalPhase::Documenting,
    CanonicalPhase::ProblemFormulation, CanonicalPhase::DataAcquisition,
    CanonicalPhase::DataExploration, CanonicalPhase::ModelDevelopment,
    CanonicalPhase::ModelEvaluation, CanonicalPhase::Presentation,
    CanonicalPhase::BriefCreating,   CanonicalPhase::Copywriting,
    CanonicalPhase::GraphicDesign,
};

inline std::string_view to_string(CanonicalPhase phase) {
  switch (phase) {
    case CanonicalPhase::Designing: return "Designing";
    case CanonicalPhase::Coding: return "Coding";
    case CanonicalPhase::Testing: return "Testing";
    case CanonicalPhase::Documenting: return "Documenting";
    case CanonicalPhase::ProblemFormulation: return "ProblemFormulation";
    case CanonicalPhase::DataAcquisition: return "DataAcquisition";
    case CanonicalPhase::DataExploration: return "DataExploration";
    case CanonicalPhase::ModelDevelopment: return "ModelDevelopment";
    case CanonicalPhase::ModelEvaluation: return "ModelEvaluation";
    case CanonicalPhase::Presentation: return "Presentation";
    case CanonicalPhase::BriefCreating: return "BriefCreating";
    case CanonicalPhase::Copywriting: return "Copywriting";
    case CanonicalPhase::GraphicDesign: return "GraphicDesign";
  }
  return "?";
}

inline CanonicalPhase phase_from_string(std::string_view name) {
  for (const CanonicalPhase p : kAllPhases) {
    if (to_string(p) == name) return p;
  }
  throw ParseError("unknown canonical phase: " + std::string(name));
}

// One interview between a recruiter and a seeker.
struct Transcript {
  std::string recruiter_id;
  std::string seeker_id;
  // (speaker id, text); speakers strictly alternate, recruiter first.
  std::vector<std::pair<std::string, std::string>> utterances;
  enum class EndedBy { EndMarker, MaxUtterances };
  EndedBy ended_by = EndedBy::EndMarker;
};

// One workflow stage as proposed by a recruiter, with resolved assignees.
// Entries in `assignees` (and in TeamDecision::recruited) are agent ids where
// name resolution succeeded and the raw name string otherwise.
struct ProposedStage {
  std::string label;
  std::vector<std::string> assignees;
};

// A recruiter's final output: who to hire and the team workflow.
struct TeamDecision {
  std::string company_id;
  std::vector<std::string> recruited;
  std::vector<ProposedStage> workflow;
};

}  // namespace metaagents

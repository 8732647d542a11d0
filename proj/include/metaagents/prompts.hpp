#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "metaagents/errors.hpp"
#include "metaagents/util.hpp"

namespace metaagents {

// Prompt templates with named {placeholder} substitution. One template per
// cognitive function plus a shared "system" template. The built-in set is the
// shipped default; from_directory() overrides any template with a same-named
// .txt file, so prompts can be swapped without a rebuild.
class PromptLibrary {
 public:
  static PromptLibrary builtin() {
    PromptLibrary lib;
    lib.templates_["system"] =
        "You are {name}, a participant at a job fair. Stay in character and speak in first person.\n"
        "Biography: {biography}\n"
        "Current goal: {goal}\n";

    lib.templates_["plan"] =
        "You are about to open your company's booth at the job fair.\n"
        "Company poster:\n"
        "{poster}\n"
        "\n"
        "Based on your biography and goal, write your initial plan for the team you want to assemble.\n"
        "Describe the kind of people you need to recruit and what each of them would do.\n"
        "After the paragraph, list each role you need on its own line starting with \"- \".\n";

    lib.templates_["utterance"] =
        "You are talking with {partner_name} at the job fair.\n"
        "Relevant memory:\n"
        "{memory}\n"
        "\n"
        "Conversation so far:\n"
        "{transcript}\n"
        "\n"
        "Reply with your next utterance only, without your name prefix. When the conversation has\n"
        "reached a natural end, append the literal token {end_marker} to your reply.\n";

    lib.templates_["digest"] =
        "Summarize the conversation you just had with {partner_name}.\n"
        "\n"
        "Transcript:\n"
        "{transcript}\n"
        "\n"
        "Extract (1) the overarching theme and context of the conversation and (2) the key terms or\n"
        "standout words. Respond on a single line in exactly this format:\n"
        "THEME: <one-paragraph summary> | TERMS: <term 1>; <term 2>; <term 3>\n";

    lib.templates_["goal_update"] =
        "Relevant memory:\n"
        "{memory}\n"
        "\n"
        "You just finished a conversation, digested as:\n"
        "THEME: {theme} | TERMS: {terms}\n"
        "\n"
        "Restate your goal, adjusted in light of this conversation. Respond with the new goal text only.\n";

    lib.templates_["reflection"] =
        "Relevant memory:\n"
        "{memory}\n"
        "\n"
        "Reflect on the following and reconsider your position:\n"
        "{subject}\n"
        "\n"
        "Respond with your reflection as a short paragraph.\n";

    lib.templates_["poster_choice"] =
        "You are reading the company posters at the job fair.\n"
        "{posters}\n"
        "\n"
        "{instruction}\n";

    lib.templates_["decision"] =
        "The job fair has concluded and you must now decide your team.\n"
        "Relevant memory:\n"
        "{memory}\n"
        "{revision_note}"
        "Company poster:\n"
        "{poster}\n"
        "\n"
        "Candidates you interviewed: {candidates}\n"
        "\n"
        "Decide which candidates to recruit, design the workflow for the team project, and assign\n"
        "people to each stage. Respond exactly in this format:\n"
        "RECRUIT: <comma-separated full names>\n"
        "WORKFLOW:\n"
        "1. <stage label>\n"
        "2. <stage label>\n"
        "ASSIGN:\n"
        "1: <comma-separated full names>\n"
        "2: <comma-separated full names>\n";
    return lib;
  }

  // Loads *.txt files from a directory, overriding built-in templates of the
  // same stem. Unknown stems are added as-is.
  static PromptLibrary from_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw MissingInput("prompt directory not found: " + dir.string());
    PromptLibrary lib = builtin();
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
      lib.templates_[entry.path().stem().string()] = read_file(entry.path());
    }
    return lib;
  }

  const std::string& raw(const std::string& name) const {
    const auto it = templates_.find(name);
    if (it == templates_.end()) throw MissingInput("no prompt template named " + name);
    return it->second;
  }

  std::string render(const std::string& name, const std::map<std::string, std::string>& values) const {
    std::string out = raw(name);
    for (const auto& [key, value] : values) {
      const std::string token = "{" + key + "}";
      std::size_t pos = 0;
      while ((pos = out.find(token, pos)) != std::string::npos) {
        out.replace(pos, token.size(), value);
        pos += value.size();
      }
    }
    return out;
  }

  const std::map<std::string, std::string>& templates() const { return templates_; }

 private:
  std::map<std::string, std::string> templates_;
};

}  // namespace metaagents

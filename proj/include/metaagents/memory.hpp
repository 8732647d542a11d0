#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "metaagents/errors.hpp"

namespace metaagents {

enum class MemoryKind { Biography, Observation, Digest, Reflection, Plan, Goal };

inline std::string_view to_string(MemoryKind kind) {
  switch (kind) {
    case MemoryKind::Biography: return "Biography";
    case MemoryKind::Observation: return "Observation";
    case MemoryKind::Digest: return "Digest";
    case MemoryKind::Reflection: return "Reflection";
    case MemoryKind::Plan: return "Plan";
    case MemoryKind::Goal: return "Goal";
  }
  return "?";
}

struct MemoryEntry {
  std::string owner;
  int tick = 0;
  MemoryKind kind = MemoryKind::Observation;
  std::string content;
  std::vector<std::string> key_terms;  // non-empty only for digests
};

// Retrieval packs by kind priority, then recency. Replaces score-based memory
// ranking with a deterministic ordering so runs are reproducible.
inline int retrieval_priority(MemoryKind kind) {
  switch (kind) {
    case MemoryKind::Biography: return 0;
    case MemoryKind::Goal: return 1;
    case MemoryKind::Plan: return 2;
    case MemoryKind::Digest: return 3;
    case MemoryKind::Reflection: return 4;
    case MemoryKind::Observation: return 5;
  }
  return 6;
}

// Append-only per-agent memory stream.
class MemoryStore {
 public:
  explicit MemoryStore(std::string owner) : owner_(std::move(owner)) {}

  void store(MemoryEntry entry) {
    if (entry.owner != owner_)
      throw OwnerMismatch("entry owner " + entry.owner + " stored into memory of " + owner_);
    if (!entries_.empty() && entry.tick < entries_.back().tick)
      throw Error("memory tick went backwards for " + owner_);
    if (entry.kind == MemoryKind::Biography && entry.tick != 0)
      throw Error("biography entries are only valid at tick 0");
    entries_.push_back(std::move(entry));
  }

  // Returns entries ordered by (kind priority, then newest first within kind),
  // cut to the longest prefix whose total content length fits the budget.
  std::vector<MemoryEntry> retrieve(std::size_t budget_chars) const {
    std::vector<std::size_t> order(entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const int pa = retrieval_priority(entries_[a].kind);
      const int pb = retrieval_priority(entries_[b].kind);
      if (pa != pb) return pa < pb;
      return a > b;  // newest first within kind
    });

    std::vector<MemoryEntry> out;
    std::size_t used = 0;
    for (const std::size_t idx : order) {
      const auto& entry = entries_[idx];
      if (used + entry.content.size() > budget_chars) break;
      used += entry.content.size();
      out.push_back(entry);
    }
    return out;
  }

  const std::vector<MemoryEntry>& entries() const { return entries_; }
  const std::string& owner() const { return owner_; }

  std::size_t count_kind(MemoryKind kind) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
      if (e.kind == kind) ++n;
    }
    return n;
  }

 private:
  std::string owner_;
  std::vector<MemoryEntry> entries_;
};

}  // namespace metaagents

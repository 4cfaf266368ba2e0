#pragma once

#include <array>
#include <optional>
#include <vector>

#include "navsim/core/agent.hpp"

namespace navsim {

struct CurriculumStage {
  int index{0};
  int pedestrian_count{0};
  // Class mix is drawn uniformly unless an explicit per-class split is set.
  std::optional<std::array<int, kNumAgentClasses>> class_counts;
  double promote_threshold{1.0};  // 100-episode mean reward to advance
  double demote_threshold{0.0};
};

// Six stages, counts ending at the hardest scripted scenario size.
inline std::vector<CurriculumStage> default_curriculum() {
  std::vector<CurriculumStage> stages;
  const int counts[] = {1, 2, 3, 5, 7, 9};
  for (int i = 0; i < 6; ++i) {
    CurriculumStage s;
    s.index = i;
    s.pedestrian_count = counts[i];
    stages.push_back(s);
  }
  return stages;
}

// Hysteresis update on the rolling mean episode reward; caller guarantees
// the window is filled. Stage index saturates at both ends.
inline int curriculum_update(int stage_index, double mean_reward,
                             const std::vector<CurriculumStage>& stages) {
  const auto& s = stages[static_cast<size_t>(stage_index)];
  if (mean_reward >= s.promote_threshold) {
    return std::min(stage_index + 1, static_cast<int>(stages.size()) - 1);
  }
  if (mean_reward <= s.demote_threshold) {
    return std::max(stage_index - 1, 0);
  }
  return stage_index;
}

}  // namespace navsim

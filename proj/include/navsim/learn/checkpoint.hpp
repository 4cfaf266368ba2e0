#pragma once

#include <fstream>

#include <json.hpp>

#include "navsim/learn/ppo.hpp"

namespace navsim {

// Bad configuration supplied by the caller: unknown files, shape mismatches.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kCheckpointVersion = 1;

// Weight dump with the architecture embedded; doubles round-trip exactly
// through the JSON encoder, so save/load is bit-faithful.
inline nlohmann::json checkpoint_to_json(PolicyNetwork& net) {
  nlohmann::json j;
  j["version"] = kCheckpointVersion;
  const auto& cfg = net.config();
  j["network"]["lstm_hidden"] = cfg.lstm_hidden;
  j["network"]["lidar_widths"] = cfg.lidar_widths;
  j["network"]["merge_widths"] = cfg.merge_widths;
  j["network"]["initial_log_std"] = cfg.initial_log_std;
  j["network"]["lidar_beams"] = kLidarBeams;
  j["network"]["human_features"] = kHumanFeatureDim;
  for (auto* p : net.parameters()) {
    auto& entry = j["params"][p->name];
    entry["rows"] = p->value.rows();
    entry["cols"] = p->value.cols();
    auto& data = entry["data"] = nlohmann::json::array();
    for (Eigen::Index c = 0; c < p->value.cols(); ++c) {
      for (Eigen::Index r = 0; r < p->value.rows(); ++r) {
        data.push_back(p->value(r, c));
      }
    }
  }
  return j;
}

inline PolicyNetwork checkpoint_from_json(const nlohmann::json& j) {
  try {
    if (!j.contains("version") || j.at("version").get<int>() != kCheckpointVersion) {
      throw ConfigError("checkpoint: missing or unsupported version");
    }
    const auto& nj = j.at("network");
    if (nj.at("lidar_beams").get<int>() != kLidarBeams ||
        nj.at("human_features").get<int>() != kHumanFeatureDim) {
      throw ConfigError("checkpoint: observation shape mismatch");
    }
    NetworkConfig cfg;
    cfg.lstm_hidden = nj.at("lstm_hidden").get<int>();
    cfg.lidar_widths = nj.at("lidar_widths").get<std::array<int, 3>>();
    cfg.merge_widths = nj.at("merge_widths").get<std::array<int, 2>>();
    cfg.initial_log_std = nj.at("initial_log_std").get<double>();

    PolicyNetwork net(cfg, 0);
    for (auto* p : net.parameters()) {
      if (!j.at("params").contains(p->name)) {
        throw ConfigError("checkpoint: missing parameter block " + p->name);
      }
      const auto& entry = j.at("params").at(p->name);
      if (entry.at("rows").get<Eigen::Index>() != p->value.rows() ||
          entry.at("cols").get<Eigen::Index>() != p->value.cols()) {
        throw ConfigError("checkpoint: shape mismatch for " + p->name);
      }
      const auto& data = entry.at("data");
      size_t idx = 0;
      for (Eigen::Index c = 0; c < p->value.cols(); ++c) {
        for (Eigen::Index r = 0; r < p->value.rows(); ++r) {
          p->value(r, c) = data.at(idx++).get<double>();
        }
      }
    }
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("checkpoint: malformed json: ") + e.what());
  }
}

inline void save_checkpoint(PolicyNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write checkpoint: " + path);
  out << checkpoint_to_json(net) << "\n";
}

inline PolicyNetwork load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open checkpoint: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("checkpoint " + path + ": " + e.what());
  }
  return checkpoint_from_json(j);
}

}  // namespace navsim

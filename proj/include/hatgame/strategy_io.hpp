#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hatgame/game.hpp"

namespace hatgame {

/// Malformed strategy document. The message names the offending field and,
/// where relevant, the index within it.
class StrategyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategyPair {
  Strategy f;
  Strategy g;
};

/// JSON document {"n": N, "f": [...], "g": [...]}, 2^N entries per table in
/// point-mask order, each in [1, N].
std::string format_strategy_json(const Strategy& f, const Strategy& g);
StrategyPair parse_strategy_json(const std::string& text);

void write_strategy_file(const std::filesystem::path& path, const Strategy& f, const Strategy& g);
StrategyPair parse_strategy_file(const std::filesystem::path& path);

}  // namespace hatgame

#include "hatgame/strategy_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hatgame {

namespace {

using nlohmann::json;

Strategy parse_table(const json& doc, const char* field, int n) {
  if (!doc.contains(field)) throw StrategyFormatError(std::string(field) + ": missing");
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw StrategyFormatError(std::string(field) + ": expected an array");
  const std::size_t want = cube_size(n);
  if (arr.size() != want)
    throw StrategyFormatError(std::string(field) + ": expected " + std::to_string(want) +
                              " entries for n = " + std::to_string(n) + ", got " +
                              std::to_string(arr.size()));
  std::vector<std::uint8_t> choices(want);
  for (std::size_t m = 0; m < want; ++m) {
    const json& v = arr[m];
    if (!v.is_number_integer())
      throw StrategyFormatError(std::string(field) + "[" + std::to_string(m) +
                                "]: expected an integer");
    auto c = v.get<std::int64_t>();
    if (c < 1 || c > n)
      throw StrategyFormatError(std::string(field) + "[" + std::to_string(m) + "]: choice " +
                                std::to_string(c) + " outside [1, " + std::to_string(n) + "]");
    choices[m] = static_cast<std::uint8_t>(c);
  }
  return Strategy(n, std::move(choices));
}

}  // namespace

std::string format_strategy_json(const Strategy& f, const Strategy& g) {
  if (f.n() != g.n()) throw std::invalid_argument("format_strategy_json: dimension mismatch");
  json doc;
  doc["n"] = f.n();
  doc["f"] = std::vector<int>(f.choices().begin(), f.choices().end());
  doc["g"] = std::vector<int>(g.choices().begin(), g.choices().end());
  return doc.dump() + "\n";
}

StrategyPair parse_strategy_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StrategyFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StrategyFormatError("document: expected a JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer())
    throw StrategyFormatError("n: missing or not an integer");
  auto n = doc.at("n").get<std::int64_t>();
  if (n < 1 || n > kMaxStrategyDimension)
    throw StrategyFormatError("n: " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxStrategyDimension) + "]");
  const int dim = static_cast<int>(n);
  return {parse_table(doc, "f", dim), parse_table(doc, "g", dim)};
}

void write_strategy_file(const std::filesystem::path& path, const Strategy& f, const Strategy& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << format_strategy_json(f, g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

StrategyPair parse_strategy_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StrategyFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strategy_json(buf.str());
}

}  // namespace hatgame

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gaussmap/error.hpp"
#include "gaussmap_cli/cli.hpp"

namespace gaussmap::cli {

std::string tool_version() { return GAUSSMAP_VERSION; }

int max_genus() {
  if (const char* env = std::getenv("GAUSSMAP_MAX_GENUS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 3) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GAUSSMAP_MAX_GENUS must be an integer >= 3, got '") + env + "'");
  }
  return 12;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

}  // namespace

std::pair<int, int> parse_genus_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text, "genus");
  } else {
    lo = parse_int(text.substr(0, dots), "genus");
    hi = parse_int(text.substr(dots + 2), "genus");
  }
  if (lo < 3) throw UsageError("genus must be at least 3, got " + std::to_string(lo));
  if (hi < lo) throw UsageError("empty genus range " + text);
  if (hi > max_genus()) {
    throw UsageError("genus " + std::to_string(hi) + " exceeds the cap " + std::to_string(max_genus()) +
                     " (set GAUSSMAP_MAX_GENUS to raise it)");
  }
  return {lo, hi};
}

Curve load_curve(const std::string& source) {
  std::vector<Rational> points;
  std::ifstream file(source);
  if (file) {
    nlohmann::json j;
    try {
      file >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "curve file " + source + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("branch_points") || !j["branch_points"].is_array()) {
      throw Error(ErrorCode::ParseError, "curve file needs a \"branch_points\" array");
    }
    for (const auto& v : j["branch_points"]) {
      if (v.is_string()) {
        points.push_back(Rational::parse(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        points.emplace_back(v.get<long>());
      } else {
        throw Error(ErrorCode::ParseError, "branch points must be strings \"p/q\" or integers");
      }
    }
  } else {
    std::stringstream ss(source);
    std::string item;
    while (std::getline(ss, item, ',')) points.push_back(Rational::parse(item));
  }
  return new_curve(points);
}

nlohmann::json curve_json(const Curve& c) {
  return {{"branch_points", c.branch_point_strings()}, {"genus", c.genus()}};
}

}  // namespace gaussmap::cli

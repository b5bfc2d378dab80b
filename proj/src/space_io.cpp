#include "proxtopo/space_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "space file: " + what);
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

FiniteSpace parse_space(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "space file: malformed JSON at " + location(text, e.byte ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "points" && key != "opens" && key != "coordinates") schema_error("unknown key '" + key + "'");
  if (!doc.contains("points") || !doc["points"].is_array()) schema_error("'points' must be an array of strings");
  if (!doc.contains("opens") || !doc["opens"].is_array()) schema_error("'opens' must be an array of label lists");

  std::vector<std::string> labels;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) schema_error("point labels must be strings");
    const std::string name = p.get<std::string>();
    if (std::find(labels.begin(), labels.end(), name) != labels.end()) schema_error("duplicate point '" + name + "'");
    labels.push_back(name);
  }
  if (labels.empty()) throw Error(ErrorCode::EmptySpace, "space file declares no points");
  if (labels.size() > kMaxPoints) throw Error(ErrorCode::SizeLimitExceeded, "too many points");

  auto index_of = [&](const std::string& name) -> PointId {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) schema_error("unknown point '" + name + "'");
    return static_cast<PointId>(it - labels.begin());
  };

  std::vector<Subset> opens;
  std::set<Subset> seen;
  for (const auto& o : doc["opens"]) {
    if (!o.is_array()) schema_error("each open must be a list of labels");
    Subset s;
    for (const auto& p : o) {
      if (!p.is_string()) schema_error("open members must be point labels");
      const PointId x = index_of(p.get<std::string>());
      if (s.contains(x)) schema_error("open lists '" + p.get<std::string>() + "' twice");
      s |= Subset::singleton(x);
    }
    if (!seen.insert(s).second) schema_error("duplicate open set");
    opens.push_back(s);
  }

  FiniteSpace space = build_space(static_cast<unsigned>(labels.size()), std::move(opens), labels);

  if (doc.contains("coordinates")) {
    const auto& coords = doc["coordinates"];
    if (!coords.is_object()) schema_error("'coordinates' must map labels to \"x,y\" strings");
    MetricPoints pts;
    pts.coordinates.resize(labels.size());
    std::vector<bool> have(labels.size(), false);
    for (const auto& [name, value] : coords.items()) {
      if (!value.is_string()) schema_error("coordinate of '" + name + "' must be a string \"x,y\"");
      const PointId x = index_of(name);
      pts.coordinates[x] = parse_vec2(value.get<std::string>());
      have[x] = true;
    }
    for (std::size_t i = 0; i < have.size(); ++i)
      if (!have[i]) schema_error("point '" + labels[i] + "' has no coordinates");
    space = space.with_metric(std::move(pts));
  }
  return space;
}

FiniteSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open space file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

std::string dump_space(const FiniteSpace& space) {
  nlohmann::ordered_json doc;
  doc["points"] = space.labels();
  auto& opens = doc["opens"] = nlohmann::ordered_json::array();
  for (Subset s : space.opens()) {
    auto names = nlohmann::ordered_json::array();
    for (PointId x : s.members()) names.push_back(space.label(x));
    opens.push_back(names);
  }
  if (space.metric()) {
    auto& coords = doc["coordinates"] = nlohmann::ordered_json::object();
    for (PointId x = 0; x < space.size(); ++x) {
      const Vec2& v = space.metric()->coordinates[x];
      coords[space.label(x)] = to_string(v.x) + "," + to_string(v.y);
    }
  }
  return doc.dump();
}

}  // namespace proxtopo

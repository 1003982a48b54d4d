#include "digitop/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

DigitalSpace parse_space(std::string_view text) {
  std::vector<PointId> points;
  std::set<PointId, std::less<>> declared;
  std::vector<Edge> edges;
  std::set<std::pair<PointId, PointId>> edge_set;
  bool header_seen = false;
  bool edges_started = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!header_seen) {
      if (words.size() != 2 || words[0] != "digitop" || words[1] != "1") {
        throw ParseError(line_no, "expected header 'digitop 1'");
      }
      header_seen = true;
    } else if (words[0] == "point") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'point <id>'");
      if (edges_started) throw ParseError(line_no, "point declared after edges");
      const std::string id(words[1]);
      if (!is_valid_point_id(id)) throw ParseError(line_no, "invalid point id '" + id + "'");
      if (!declared.insert(id).second) throw ParseError(line_no, "duplicate point '" + id + "'");
      points.push_back(id);
    } else if (words[0] == "edge") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
      edges_started = true;
      std::string a(words[1]);
      std::string b(words[2]);
      for (const std::string& id : {a, b}) {
        if (declared.find(id) == declared.end()) {
          throw ParseError(line_no, "edge endpoint '" + id + "' is not a declared point");
        }
      }
      if (a == b) throw ParseError(line_no, "self-loop at '" + a + "'");
      if (b < a) std::swap(a, b);
      if (!edge_set.insert({a, b}).second) {
        throw ParseError(line_no, "duplicate edge " + a + " " + b);
      }
      edges.emplace_back(std::move(a), std::move(b));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!header_seen) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'digitop 1'");
  return DigitalSpace(std::move(points), edges);
}

std::string serialize_space(const DigitalSpace& g) {
  std::string out = "digitop 1\n";
  for (const PointId& p : g.points()) out += "point " + p + "\n";
  for (const auto& [a, b] : g.edges()) out += "edge " + a + " " + b + "\n";
  return out;
}

std::string export_dot(const DigitalSpace& g, std::string_view name) {
  std::string out = "graph \"" + std::string(name) + "\" {\n";
  for (const PointId& p : g.points()) out += "  \"" + p + "\";\n";
  for (const auto& [a, b] : g.edges()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

DigitalSpace read_space_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

void write_space_file(const std::string& path, const DigitalSpace& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_space(g);
}

}  // namespace digitop

#include "halinstar/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "halinstar/errors.hpp"

namespace halinstar {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<long long> parse_ints(std::string_view s, int line) {
  std::vector<long long> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

int checked_vertex(long long v, int n, int line) {
  if (v < 0 || v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

nlohmann::json parse_json_object(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "expected a JSON object keyed by edge");
  return doc;
}

std::size_t edge_for_key(const std::string& key, const EdgeIndex& edges) {
  const auto e = edges.find_key(key);
  if (!e) throw ParseError(0, "unknown edge '" + key + "'");
  return *e;
}

Color checked_color(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > std::numeric_limits<Color>::max())
    throw ParseError(0, "edge '" + key + "': colors must be non-negative integers");
  return value.get<Color>();
}

}  // namespace

HalinInstance parse_instance(std::string_view text) {
  int n = -1;
  Vertex root = kNoVertex;
  std::vector<std::vector<Vertex>> children;
  std::vector<bool> has_line;
  std::vector<Vertex> cycle;
  bool saw_cycle = false;
  std::optional<Mode> mode;
  int cycle_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (n < 0) {
      if (!line.starts_with("tree ") && line != "tree")
        throw ParseError(line_no, "expected 'tree <n> <root>'");
      const auto nums = parse_ints(line.substr(4), line_no);
      if (nums.size() != 2) throw ParseError(line_no, "expected 'tree <n> <root>'");
      if (nums[0] < 1 || nums[0] > 10'000'000) throw ParseError(line_no, "bad vertex count");
      n = static_cast<int>(nums[0]);
      root = checked_vertex(nums[1], n, line_no);
      children.assign(n, {});
      has_line.assign(n, false);
      continue;
    }
    if (mode) throw ParseError(line_no, "content after 'mode:' line");

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected '<label>: ...'");
    const std::string_view label = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));

    if (label == "mode") {
      mode = parse_mode(rest);
      if (!mode) throw ParseError(line_no, "unknown mode '" + std::string(rest) + "'");
    } else if (label == "cycle") {
      if (saw_cycle) throw ParseError(line_no, "duplicate cycle line");
      saw_cycle = true;
      cycle_line = line_no;
      for (long long v : parse_ints(rest, line_no)) cycle.push_back(checked_vertex(v, n, line_no));
    } else {
      if (saw_cycle) throw ParseError(line_no, "vertex lines must precede the cycle line");
      const auto head = parse_ints(label, line_no);
      if (head.size() != 1) throw ParseError(line_no, "expected a vertex id before ':'");
      const Vertex v = checked_vertex(head[0], n, line_no);
      if (has_line[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
      has_line[v] = true;
      for (long long c : parse_ints(rest, line_no)) {
        const Vertex child = checked_vertex(c, n, line_no);
        if (std::find(children[v].begin(), children[v].end(), child) != children[v].end())
          throw ParseError(line_no, "duplicate child " + std::to_string(child));
        children[v].push_back(child);
      }
    }
  }
  if (n < 0) throw ParseError(0, "missing 'tree <n> <root>' header");

  HalinInstance inst;
  try {
    inst.tree = PlaneTree(n, root, std::move(children));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  inst.mode = mode.value_or(saw_cycle ? Mode::GeneralizedHalin : Mode::TreeOnly);
  inst.cycle = std::move(cycle);

  if (inst.mode == Mode::TreeOnly) {
    if (saw_cycle) throw ParseError(cycle_line, "tree mode does not take a cycle");
    return inst;
  }
  if (!saw_cycle) throw ParseError(0, "Halin modes need a cycle line");
  std::vector<Vertex> sorted = inst.cycle;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != inst.tree.leaves()) throw ParseError(cycle_line, "cycle must cover all leaves");
  if (!same_cyclic_order(inst.cycle, inst.tree.dfs_leaf_order()))
    throw ParseError(cycle_line, "cycle order is inconsistent with the rotation system");
  return inst;
}

std::string serialize_instance(const HalinInstance& instance) {
  const PlaneTree& t = instance.tree;
  std::ostringstream out;
  out << "tree " << t.size() << ' ' << t.root() << '\n';
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.children(v).empty()) continue;
    out << v << ':';
    for (Vertex c : t.children(v)) out << ' ' << c;
    out << '\n';
  }
  if (instance.has_cycle()) {
    out << "cycle:";
    for (Vertex v : instance.cycle) out << ' ' << v;
    out << '\n';
  }
  out << "mode: " << to_string(instance.mode) << '\n';
  return out.str();
}

ListAssignment parse_lists(std::string_view json_text, const EdgeIndex& edges) {
  const auto doc = parse_json_object(json_text);
  ListAssignment lists(edges.size());
  std::vector<bool> seen(edges.size(), false);
  for (const auto& [key, value] : doc.items()) {
    const std::size_t e = edge_for_key(key, edges);
    if (seen[e]) throw ParseError(0, "edge '" + key + "' given twice");
    seen[e] = true;
    if (!value.is_array()) throw ParseError(0, "edge '" + key + "': expected an array");
    for (const auto& c : value) lists[e].push_back(checked_color(c, key));
    std::sort(lists[e].begin(), lists[e].end());
    lists[e].erase(std::unique(lists[e].begin(), lists[e].end()), lists[e].end());
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!seen[e]) throw ParseError(0, "missing list for edge '" + edges[e].key() + "'");
  return lists;
}

std::string serialize_lists(const ListAssignment& lists, const EdgeIndex& edges) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (std::size_t e = 0; e < edges.size(); ++e) doc[edges[e].key()] = lists.at(e);
  return doc.dump() + "\n";
}

EdgeColoring parse_coloring(std::string_view json_text, const EdgeIndex& edges) {
  const auto doc = parse_json_object(json_text);
  EdgeColoring coloring(edges.size(), kNoColor);
  for (const auto& [key, value] : doc.items()) {
    const std::size_t e = edge_for_key(key, edges);
    if (coloring[e] != kNoColor) throw ParseError(0, "edge '" + key + "' given twice");
    coloring[e] = checked_color(value, key);
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (coloring[e] == kNoColor) throw ParseError(0, "missing color for edge '" + edges[e].key() + "'");
  return coloring;
}

std::string serialize_coloring(const EdgeColoring& coloring, const EdgeIndex& edges) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (std::size_t e = 0; e < edges.size(); ++e) doc[edges[e].key()] = coloring.at(e);
  return doc.dump(1) + "\n";
}

std::string to_dot(const HalinInstance& instance, const EdgeColoring& coloring) {
  const EdgeIndex edges(instance);
  std::ostringstream out;
  out << "graph H {\n  node [shape=circle];\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << "  " << edges[e].a << " -- " << edges[e].b << " [label=\"";
    if (e < coloring.size() && coloring[e] != kNoColor) out << coloring[e];
    out << '"';
    if (edges[e].kind == EdgeKind::Cycle) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace halinstar

#include "gt/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gt {

namespace {

// Strips comments and whitespace-only lines; returns logical lines in order.
std::vector<std::string> logical_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    auto begin = line.find_first_not_of(" \t");
    out.push_back(line.substr(begin, end - begin + 1));
  }
  return out;
}

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("parse error: " + what); }

}  // namespace

GraphCollection read_collection(std::istream& in) {
  auto lines = logical_lines(in);
  if (lines.empty()) fail("empty collection file");
  int n = 0, h = 0;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n >> h)) fail("expected 'n h' header, got '" + lines[0] + "'");
  }
  if (n < 1 || h < 1) fail("collection needs n >= 1 and h >= 1");
  std::vector<GraphBuilder> builders;
  builders.reserve(h);
  for (int c = 0; c < h; ++c) builders.emplace_back(n);
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    int c, u, v;
    if (!(row >> c >> u >> v)) fail("expected 'c u v', got '" + lines[i] + "'");
    if (c < 0 || c >= h) fail("color out of range in '" + lines[i] + "'");
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v) fail("need 0 <= u < v < n in '" + lines[i] + "'");
    if (!seen.insert({c, u, v}).second) fail("duplicate edge line '" + lines[i] + "'");
    builders[c].add_edge(u, v);
  }
  std::vector<Graph> layers;
  layers.reserve(h);
  for (auto& b : builders) layers.push_back(b.build());
  return GraphCollection(n, std::move(layers));
}

GraphCollection read_collection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open collection file: " + path);
  return read_collection(in);
}

void write_collection(std::ostream& out, const GraphCollection& coll) {
  out << coll.vertex_count() << " " << coll.color_count() << "\n";
  for (int c = 0; c < coll.color_count(); ++c)
    for (auto [u, v] : coll.layer(c).edges()) out << c << " " << u << " " << v << "\n";
}

TargetFile read_target(std::istream& in) {
  auto lines = logical_lines(in);
  if (lines.empty()) fail("empty target file");
  int n = 0;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n)) fail("expected 'n' header, got '" + lines[0] + "'");
  }
  if (n < 1) fail("target needs n >= 1");
  GraphBuilder b(n);
  std::optional<std::vector<int>> order;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("order:", 0) == 0) {
      if (i + 1 != lines.size()) fail("order line must be last");
      std::istringstream row(lines[i].substr(6));
      std::vector<int> ord;
      int v;
      while (row >> v) ord.push_back(v);
      if (static_cast<int>(ord.size()) != n) fail("order line must list all n vertices");
      std::vector<bool> used(n, false);
      for (int x : ord) {
        if (x < 0 || x >= n || used[x]) fail("order line is not a permutation");
        used[x] = true;
      }
      order = std::move(ord);
      continue;
    }
    std::istringstream row(lines[i]);
    int u, v;
    if (!(row >> u >> v)) fail("expected 'u v', got '" + lines[i] + "'");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) fail("bad edge '" + lines[i] + "'");
    if (b.has_edge(u, v)) fail("duplicate edge '" + lines[i] + "'");
    b.add_edge(u, v);
  }
  return TargetFile{b.build(), std::move(order)};
}

TargetFile read_target_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open target file: " + path);
  return read_target(in);
}

void write_target(std::ostream& out, const Graph& g, const std::optional<std::vector<int>>& order) {
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  if (order) {
    out << "order:";
    for (int v : *order) out << " " << v;
    out << "\n";
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::runtime_error("bad edge '" + item + "', expected u-v");
    out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return out;
}

}  // namespace gt

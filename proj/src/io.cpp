#include "simdim/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace simdim {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (size_t h = s.find('#'); h != std::string::npos) s.resize(h);
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RawBlock {
  std::string name;
  int n = -1;
  std::vector<std::pair<int, int>> edges;  // original labels
  int line = 0;                            // of the "graph" directive
};

Graph realize(const RawBlock& b, const std::string& file) {
  std::set<int> labels;
  for (auto [u, v] : b.edges) {
    labels.insert(u);
    labels.insert(v);
  }
  if (int(labels.size()) > b.n)
    throw parse_fail(file, b.line,
                     "graph " + b.name + " uses " + std::to_string(labels.size()) +
                         " labels but declares n " + std::to_string(b.n));
  for (int next = 0; int(labels.size()) < b.n; ++next) labels.insert(next);

  std::map<int, int> index;
  std::vector<int> label_list(labels.begin(), labels.end());
  for (int i = 0; i < b.n; ++i) index[label_list[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : b.edges) {
    if (u == v) throw parse_fail(file, b.line, "loop edge " + std::to_string(u) + " in " + b.name);
    edges.emplace_back(index[u], index[v]);
  }
  Graph g = make_graph(b.name, b.n, edges);
  g.labels = label_list;
  return g;
}

}  // namespace

std::vector<Graph> parse_family_text(std::istream& in, const std::string& filename) {
  std::vector<Graph> out;
  RawBlock cur;
  bool open = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "graph") {
      if (open) throw parse_fail(filename, lineno, "graph block not closed before new block");
      std::string rest;
      std::getline(ls, rest);
      cur = RawBlock{};
      cur.name = strip(rest);
      cur.line = lineno;
      if (cur.name.empty()) throw parse_fail(filename, lineno, "graph directive needs a name");
      open = true;
    } else if (kw == "n") {
      if (!open) throw parse_fail(filename, lineno, "n outside graph block");
      if (cur.n >= 0) throw parse_fail(filename, lineno, "duplicate n directive");
      if (!(ls >> cur.n) || cur.n < 0)
        throw parse_fail(filename, lineno, "n needs a non-negative order");
      if (cur.n > kMaxVertices)
        throw parse_fail(filename, lineno, "order exceeds 64");
    } else if (kw == "e") {
      if (!open) throw parse_fail(filename, lineno, "e outside graph block");
      if (cur.n < 0) throw parse_fail(filename, lineno, "e before n directive");
      int u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0)
        throw parse_fail(filename, lineno, "e needs two non-negative labels");
      cur.edges.emplace_back(u, v);
    } else if (kw == "end") {
      if (!open) throw parse_fail(filename, lineno, "end outside graph block");
      if (cur.n < 0) throw parse_fail(filename, lineno, "graph block missing n");
      out.push_back(realize(cur, filename));
      open = false;
    } else {
      throw parse_fail(filename, lineno, "unknown directive '" + kw + "'");
    }
    std::string trailing;
    if (kw != "graph" && ls >> trailing)
      throw parse_fail(filename, lineno, "trailing tokens after directive");
  }
  if (open) throw parse_fail(filename, lineno, "unterminated graph block " + cur.name);
  return out;
}

std::vector<Graph> parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::parse_error, "cannot open " + path);
  return parse_family_text(in, path);
}

Graph parse_graph_file(const std::string& path) {
  std::vector<Graph> all = parse_family_file(path);
  if (all.size() != 1)
    throw Error(Error::parse_error,
                path + ": expected exactly one graph block, found " + std::to_string(all.size()));
  return all.front();
}

GraphFamily family_from_file(const std::string& path) {
  std::vector<Graph> all = parse_family_file(path);
  if (all.empty()) throw Error(Error::parse_error, path + ": no graph blocks");
  for (const Graph& g : all)
    if (g.labels != all.front().labels)
      throw Error(Error::parse_error,
                  path + ": members must share one label set (" + g.name + " differs)");
  return family_of(std::move(all));
}

void serialize_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.name << "\n";
  out << "n " << g.n << "\n";
  for (auto [u, v] : g.edges()) out << "e " << g.labels[u] << " " << g.labels[v] << "\n";
  out << "end\n";
}

void serialize_family(std::ostream& out, const std::vector<Graph>& members) {
  for (const Graph& g : members) serialize_graph(out, g);
}

void write_family_file(const std::string& path, const std::vector<Graph>& members) {
  std::ofstream out(path);
  if (!out) throw Error(Error::parse_error, "cannot write " + path);
  serialize_family(out, members);
}

int label_to_index(const Graph& g, int label) {
  auto it = std::lower_bound(g.labels.begin(), g.labels.end(), label);
  if (it == g.labels.end() || *it != label)
    throw Error(Error::invalid_parameter,
                "label " + std::to_string(label) + " not present in " + g.name);
  return int(it - g.labels.begin());
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(g.labels[v]);
    first = false;
  }
  return out + "}";
}

std::string format_index_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

VertexSet parse_label_set(const Graph& g, const std::string& text) {
  std::string t = text;
  std::erase(t, '{');
  std::erase(t, '}');
  VertexSet s{g.n, 0};
  std::istringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = strip(item);
    if (item.empty()) continue;
    size_t pos = 0;
    int label;
    try {
      label = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw Error(Error::invalid_parameter, "bad vertex label '" + item + "'");
    }
    if (pos != item.size() || label < 0)
      throw Error(Error::invalid_parameter, "bad vertex label '" + item + "'");
    s.add(label_to_index(g, label));
  }
  return s;
}

bool looks_like_standard_name(const std::string& token) {
  if (token.size() < 2) return false;
  char k = token[0];
  if (k != 'P' && k != 'C' && k != 'K' && k != 'N') return false;
  bool seen_x = false;
  for (size_t i = 1; i < token.size(); ++i) {
    if (token[i] == 'x' && k == 'K' && !seen_x && i > 1 && i + 1 < token.size())
      seen_x = true;
    else if (!std::isdigit(static_cast<unsigned char>(token[i])))
      return false;
  }
  return true;
}

Graph standard_graph(const std::string& token) {
  if (!looks_like_standard_name(token))
    throw Error(Error::invalid_parameter, "not a standard graph name: " + token);
  char k = token[0];
  std::string rest = token.substr(1);
  if (size_t x = rest.find('x'); x != std::string::npos) {
    int r = std::stoi(rest.substr(0, x));
    int s = std::stoi(rest.substr(x + 1));
    return complete_bipartite_graph(r, s);
  }
  int n = std::stoi(rest);
  switch (k) {
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    case 'K': return complete_graph(n);
    default: return empty_graph(n);
  }
}

}  // namespace simdim

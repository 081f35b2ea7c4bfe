#include "mmcu/io.hpp"

#include <map>
#include <sstream>

#include "mmcu/util.hpp"

namespace mmcu {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c") continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

long long parse_int(const Line& ln, std::size_t idx) {
  if (idx >= ln.tokens.size()) throw ParseError(ln.number, "missing field");
  try {
    std::size_t used = 0;
    long long v = std::stoll(ln.tokens[idx], &used);
    if (used != ln.tokens[idx].size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(ln.number, "expected an integer, got '" + ln.tokens[idx] + "'");
  }
}

VertexId parse_vertex(const Line& ln, std::size_t idx, int n) {
  long long v = parse_int(ln, idx);
  if (v < 1 || v > n) throw ParseError(ln.number, "vertex id out of range");
  return static_cast<VertexId>(v - 1);
}

MmcuInstance parse_mmcu_body(const std::vector<Line>& lines, const Line& header) {
  int n = static_cast<int>(parse_int(header, 2));
  int m = static_cast<int>(parse_int(header, 3));
  MmcuInstance inst;
  inst.graph = MultiGraph(n);
  inst.vertex_budget = static_cast<int>(parse_int(header, 4));
  inst.edge_budget = static_cast<int>(parse_int(header, 5));
  if (n < 0 || m < 0 || inst.vertex_budget < 0 || inst.edge_budget < 0)
    throw ParseError(header.number, "negative header field");

  std::map<std::string, std::vector<VertexId>> classes;
  std::vector<std::string> label_order;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.tokens[0] == "e") {
      VertexId u = parse_vertex(ln, 1, n), v = parse_vertex(ln, 2, n);
      if (u == v) throw ParseError(ln.number, "self-loops are not allowed");
      inst.graph.add_edge(u, v);
    } else if (ln.tokens[0] == "t") {
      VertexId v = parse_vertex(ln, 1, n);
      if (ln.tokens.size() < 3) throw ParseError(ln.number, "missing class label");
      const std::string& label = ln.tokens[2];
      if (!classes.count(label)) label_order.push_back(label);
      classes[label].push_back(v);
    } else {
      throw ParseError(ln.number, "unexpected directive '" + ln.tokens[0] + "'");
    }
  }
  if (inst.graph.num_edges() != m)
    throw ParseError(header.number, "edge count disagrees with the header");
  for (const auto& label : label_order) {
    auto cls = sorted_unique(classes[label]);
    inst.terminals = set_union(inst.terminals, cls);
    inst.classes.push_back(std::move(cls));
  }
  inst.classes = canonical_partition(std::move(inst.classes));
  std::size_t total = 0;
  for (const auto& cls : inst.classes) total += cls.size();
  if (total != inst.terminals.size())
    throw ParseError(header.number, "a terminal appears in two classes");
  validate_instance(inst);
  return inst;
}

MixedCutInstance parse_mixedcut_body(const std::vector<Line>& lines, const Line& header) {
  int n = static_cast<int>(parse_int(header, 2));
  int m = static_cast<int>(parse_int(header, 3));
  MixedCutInstance mc;
  mc.graph = MultiGraph(n);
  mc.vertex_budget = static_cast<int>(parse_int(header, 4));
  mc.edge_budget = static_cast<int>(parse_int(header, 5));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.tokens[0] == "e") {
      VertexId u = parse_vertex(ln, 1, n), v = parse_vertex(ln, 2, n);
      if (u == v) throw ParseError(ln.number, "self-loops are not allowed");
      mc.graph.add_edge(u, v);
    } else if (ln.tokens[0] == "source") {
      mc.source = parse_vertex(ln, 1, n);
    } else if (ln.tokens[0] == "sink") {
      mc.sink = parse_vertex(ln, 1, n);
    } else {
      throw ParseError(ln.number, "unexpected directive '" + ln.tokens[0] + "'");
    }
  }
  if (mc.graph.num_edges() != m)
    throw ParseError(header.number, "edge count disagrees with the header");
  if (mc.source < 0 || mc.sink < 0)
    throw ParseError(header.number, "source and sink are required");
  validate_mixedcut(mc);
  return mc;
}

BpvcInstance parse_bpvc_body(const std::vector<Line>& lines, const Line& header) {
  int nx = static_cast<int>(parse_int(header, 2));
  int ny = static_cast<int>(parse_int(header, 3));
  int m = static_cast<int>(parse_int(header, 4));
  BpvcInstance b;
  b.cover_budget = static_cast<int>(parse_int(header, 5));
  b.cover_target = static_cast<int>(parse_int(header, 6));
  for (VertexId x = 0; x < nx; ++x) b.left.push_back(x);
  for (VertexId y = nx; y < nx + ny; ++y) b.right.push_back(y);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.tokens[0] != "e")
      throw ParseError(ln.number, "unexpected directive '" + ln.tokens[0] + "'");
    VertexId x = parse_vertex(ln, 1, nx + ny);
    VertexId y = parse_vertex(ln, 2, nx + ny);
    if (x >= nx) throw ParseError(ln.number, "left endpoint out of range");
    if (y < nx) throw ParseError(ln.number, "right endpoint out of range");
    b.edges.emplace_back(x, y);
  }
  if (static_cast<int>(b.edges.size()) != m)
    throw ParseError(header.number, "edge count disagrees with the header");
  BpvcInstance trimmed = drop_isolated_vertices(b);
  validate_bpvc(trimmed);
  return trimmed;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty instance");
  const Line& header = lines[0];
  if (header.tokens[0] != "p" || header.tokens.size() < 2)
    throw ParseError(header.number, "expected a 'p <type> ...' header");
  const std::string& type = header.tokens[1];
  if (type == "mmcu") return parse_mmcu_body(lines, header);
  if (type == "mixedcut") return parse_mixedcut_body(lines, header);
  if (type == "bpvc") return parse_bpvc_body(lines, header);
  throw ParseError(header.number, "unknown problem type '" + type + "'");
}

namespace {

// Files use dense 1-based ids; live ids may have holes after surgery, so
// serialization renumbers in sorted order.
struct IdMaps {
  std::map<VertexId, int> vertex;
  std::map<EdgeId, int> edge;
};

IdMaps dense_ids(const MultiGraph& g) {
  IdMaps maps;
  int next = 1;
  for (VertexId v : g.vertices()) maps.vertex[v] = next++;
  next = 1;
  for (EdgeId e : g.edges()) maps.edge[e] = next++;
  return maps;
}

void write_edges(std::ostringstream& out, const MultiGraph& g, const IdMaps& maps) {
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    out << "e " << maps.vertex.at(a) << ' ' << maps.vertex.at(b) << '\n';
  }
}

}  // namespace

std::string serialize(const MmcuInstance& inst) {
  IdMaps maps = dense_ids(inst.graph);
  std::ostringstream out;
  out << "p mmcu " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << ' '
      << inst.vertex_budget << ' ' << inst.edge_budget << '\n';
  write_edges(out, inst.graph, maps);
  for (std::size_t c = 0; c < inst.classes.size(); ++c)
    for (VertexId t : inst.classes[c])
      out << "t " << maps.vertex.at(t) << " c" << (c + 1) << '\n';
  return out.str();
}

std::string serialize(const MixedCutInstance& mc) {
  IdMaps maps = dense_ids(mc.graph);
  std::ostringstream out;
  out << "p mixedcut " << mc.graph.num_vertices() << ' ' << mc.graph.num_edges() << ' '
      << mc.vertex_budget << ' ' << mc.edge_budget << '\n';
  write_edges(out, mc.graph, maps);
  out << "source " << maps.vertex.at(mc.source) << '\n';
  out << "sink " << maps.vertex.at(mc.sink) << '\n';
  return out.str();
}

std::string serialize(const BpvcInstance& b) {
  std::map<VertexId, int> id;
  int next = 1;
  for (VertexId x : b.left) id[x] = next++;
  for (VertexId y : b.right) id[y] = next++;
  std::ostringstream out;
  out << "p bpvc " << b.left.size() << ' ' << b.right.size() << ' ' << b.edges.size()
      << ' ' << b.cover_budget << ' ' << b.cover_target << '\n';
  for (auto [x, y] : b.edges) out << "e " << id.at(x) << ' ' << id.at(y) << '\n';
  return out.str();
}

std::string serialize_witness(const std::optional<MixedSolution>& sol) {
  std::ostringstream out;
  if (!sol) {
    out << "s NO\n";
    return out.str();
  }
  out << "s YES\n";
  out << "v";
  for (VertexId v : sol->vertices) out << ' ' << (v + 1);
  out << "\nf";
  for (EdgeId e : sol->edges) out << ' ' << (e + 1);
  out << '\n';
  return out.str();
}

std::optional<MixedSolution> parse_witness(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "s")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected an 's' line");
  if (lines[0].tokens.size() < 2) throw ParseError(lines[0].number, "missing answer");
  if (lines[0].tokens[1] == "NO") return std::nullopt;
  if (lines[0].tokens[1] != "YES")
    throw ParseError(lines[0].number, "answer must be YES or NO");
  MixedSolution sol;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    auto& target = ln.tokens[0] == "v"   ? sol.vertices
                   : ln.tokens[0] == "f" ? sol.edges
                                         : sol.vertices;
    if (ln.tokens[0] != "v" && ln.tokens[0] != "f")
      throw ParseError(ln.number, "unexpected directive '" + ln.tokens[0] + "'");
    for (std::size_t j = 1; j < ln.tokens.size(); ++j) {
      long long id = parse_int(ln, j);
      if (id < 1) throw ParseError(ln.number, "ids are 1-based");
      target.push_back(static_cast<int>(id - 1));
    }
  }
  sol.vertices = sorted_unique(std::move(sol.vertices));
  sol.edges = sorted_unique(std::move(sol.edges));
  return sol;
}

}  // namespace mmcu

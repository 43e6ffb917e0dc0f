#include "domtree/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "domtree/errors.hpp"

namespace domtree {

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::mdt: return "mdt";
    case ProblemKind::gst: return "gst";
    case ProblemKind::mds: return "mds";
    case ProblemKind::mdp: return "mdp";
    case ProblemKind::dom: return "dom";
    case ProblemKind::hp: return "hp";
    case ProblemKind::sc: return "sc";
  }
  return "?";
}

bool problem_kind_from(const std::string& token, ProblemKind& out) {
  static const std::pair<const char*, ProblemKind> table[] = {
      {"mdt", ProblemKind::mdt}, {"gst", ProblemKind::gst}, {"mds", ProblemKind::mds},
      {"mdp", ProblemKind::mdp}, {"dom", ProblemKind::dom}, {"hp", ProblemKind::hp},
      {"sc", ProblemKind::sc}};
  for (const auto& [name, kind] : table)
    if (token == name) {
      out = kind;
      return true;
    }
  return false;
}

namespace {

struct LineReader {
  std::istringstream stream;
  int line_no = 0;
  std::string line;

  explicit LineReader(const std::string& text) : stream(text) {}

  bool next() {
    while (std::getline(stream, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, int line, const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "invalid " + what + " '" + tok + "'");
  return value;
}

ExtWeight parse_weight(const std::string& tok, int line) {
  if (tok == "inf") return ExtWeight::infinity();
  if (!tok.empty() && tok[0] == '-')
    throw ParseError(line, "negative weight '" + tok + "'");
  std::int64_t value = parse_int(tok, line, "weight");
  return ExtWeight::finite(value);
}

Vertex parse_vertex(const std::string& tok, int line, int n) {
  std::int64_t v = parse_int(tok, line, "vertex index");
  if (v < 0 || v >= n)
    throw ParseError(line, "vertex index " + tok + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  LineReader reader(text);
  if (!reader.next()) throw ParseError(1, "empty instance");

  std::vector<std::string> header = tokens_of(reader.line);
  if (header.size() != 5 || header[0] != "p")
    throw ParseError(reader.line_no, "expected header 'p <kind> <n> <m> <scale>'");
  Instance inst;
  if (!problem_kind_from(header[1], inst.kind))
    throw ParseError(reader.line_no, "unknown problem kind '" + header[1] + "'");
  std::int64_t n = parse_int(header[2], reader.line_no, "count");
  std::int64_t m = parse_int(header[3], reader.line_no, "count");
  inst.scale = parse_int(header[4], reader.line_no, "scale");
  if (n < 0) throw ParseError(reader.line_no, "negative vertex count");
  if (m < 0) throw ParseError(reader.line_no, "negative edge count");
  if (inst.scale < 1) throw ParseError(reader.line_no, "scale must be positive");

  const bool is_sc = inst.kind == ProblemKind::sc;
  if (is_sc) {
    inst.sets = SetCoverInstance(static_cast<int>(n));
    int seen = 0;
    while (reader.next()) {
      std::vector<std::string> toks = tokens_of(reader.line);
      if (toks[0] != "s")
        throw ParseError(reader.line_no, "expected 's' line in sc body");
      if (toks.size() < 2)
        throw ParseError(reader.line_no, "set line needs a weight");
      ExtWeight w = parse_weight(toks[1], reader.line_no);
      if (w.is_infinite())
        throw ParseError(reader.line_no, "set weights must be finite");
      VertexSet elements;
      for (size_t i = 2; i < toks.size(); ++i)
        elements.push_back(parse_vertex(toks[i], reader.line_no, static_cast<int>(n)));
      inst.sets.add_set(std::move(elements), w);
      ++seen;
    }
    if (seen != m)
      throw ParseError(reader.line_no + 1,
                       "header declares " + std::to_string(m) + " sets, found " +
                           std::to_string(seen));
    return inst;
  }

  inst.graph = WeightedGraph(static_cast<int>(n));
  int seen_edges = 0;
  bool in_groups = false;
  while (reader.next()) {
    std::vector<std::string> toks = tokens_of(reader.line);
    if (toks[0] == "e") {
      if (in_groups) throw ParseError(reader.line_no, "edge line after group lines");
      if (toks.size() != 4)
        throw ParseError(reader.line_no, "expected 'e <u> <v> <w>'");
      Vertex u = parse_vertex(toks[1], reader.line_no, static_cast<int>(n));
      Vertex v = parse_vertex(toks[2], reader.line_no, static_cast<int>(n));
      if (u == v) throw ParseError(reader.line_no, "self-loop on vertex " + toks[1]);
      if (inst.graph.has_edge(u, v))
        throw ParseError(reader.line_no,
                         "duplicate edge (" + toks[1] + "," + toks[2] + ")");
      inst.graph.add_edge(u, v, parse_weight(toks[3], reader.line_no));
      ++seen_edges;
    } else if (toks[0] == "g") {
      if (inst.kind != ProblemKind::gst)
        throw ParseError(reader.line_no, "group lines are only valid for gst");
      in_groups = true;
      if (toks.size() < 2) throw ParseError(reader.line_no, "empty group");
      VertexSet grp;
      for (size_t i = 1; i < toks.size(); ++i)
        grp.push_back(parse_vertex(toks[i], reader.line_no, static_cast<int>(n)));
      inst.groups.add_group(std::move(grp));
    } else {
      throw ParseError(reader.line_no, "unexpected line '" + toks[0] + "'");
    }
  }
  if (seen_edges != m)
    throw ParseError(reader.line_no + 1,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(seen_edges));
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  if (inst.kind == ProblemKind::sc) {
    out << "p sc " << inst.sets.universe_size() << ' ' << inst.sets.set_count() << ' '
        << inst.scale << '\n';
    for (const auto& set : inst.sets.sets()) {
      out << "s " << set.weight.to_string();
      for (int e : set.elements) out << ' ' << e;
      out << '\n';
    }
    return out.str();
  }
  out << "p " << to_string(inst.kind) << ' ' << inst.graph.vertex_count() << ' '
      << inst.graph.edge_count() << ' ' << inst.scale << '\n';
  for (const WeightedEdge& e : inst.graph.edges())
    out << "e " << e.u << ' ' << e.v << ' ' << e.w.to_string() << '\n';
  if (inst.kind == ProblemKind::gst)
    for (const VertexSet& grp : inst.groups) {
      out << 'g';
      for (Vertex v : grp) out << ' ' << v;
      out << '\n';
    }
  return out.str();
}

std::string to_string(SolutionFile::Kind kind) {
  switch (kind) {
    case SolutionFile::Kind::tree: return "tree";
    case SolutionFile::Kind::star: return "star";
    case SolutionFile::Kind::path: return "path";
    case SolutionFile::Kind::vertex_set: return "set";
    case SolutionFile::Kind::cover: return "cover";
  }
  return "?";
}

namespace {

bool solution_kind_from(const std::string& token, SolutionFile::Kind& out) {
  static const std::pair<const char*, SolutionFile::Kind> table[] = {
      {"tree", SolutionFile::Kind::tree},
      {"star", SolutionFile::Kind::star},
      {"path", SolutionFile::Kind::path},
      {"set", SolutionFile::Kind::vertex_set},
      {"cover", SolutionFile::Kind::cover}};
  for (const auto& [name, kind] : table)
    if (token == name) {
      out = kind;
      return true;
    }
  return false;
}

}  // namespace

SolutionFile parse_solution(const std::string& text) {
  LineReader reader(text);
  if (!reader.next()) throw ParseError(1, "empty solution");
  std::vector<std::string> header = tokens_of(reader.line);
  if (header.size() != 3 || header[0] != "sol")
    throw ParseError(reader.line_no, "expected header 'sol <kind> <weight>'");
  SolutionFile sol;
  if (!solution_kind_from(header[1], sol.kind))
    throw ParseError(reader.line_no, "unknown solution kind '" + header[1] + "'");
  sol.weight = parse_weight(header[2], reader.line_no);
  while (reader.next()) {
    std::vector<std::string> toks = tokens_of(reader.line);
    if (toks[0] == "v") {
      for (size_t i = 1; i < toks.size(); ++i)
        sol.vertices.push_back(
            static_cast<Vertex>(parse_int(toks[i], reader.line_no, "vertex index")));
    } else if (toks[0] == "e") {
      if (toks.size() != 3) throw ParseError(reader.line_no, "expected 'e <u> <v>'");
      sol.edges.push_back(
          Edge{static_cast<Vertex>(parse_int(toks[1], reader.line_no, "vertex index")),
               static_cast<Vertex>(parse_int(toks[2], reader.line_no, "vertex index"))});
    } else if (toks[0] == "c") {
      for (size_t i = 1; i < toks.size(); ++i)
        sol.cover.push_back(
            static_cast<int>(parse_int(toks[i], reader.line_no, "set index")));
    } else {
      throw ParseError(reader.line_no, "unexpected line '" + toks[0] + "'");
    }
  }
  sol.vertices = normalize_vertex_set(std::move(sol.vertices));
  for (Edge& e : sol.edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(sol.edges.begin(), sol.edges.end());
  std::sort(sol.cover.begin(), sol.cover.end());
  sol.cover.erase(std::unique(sol.cover.begin(), sol.cover.end()), sol.cover.end());
  return sol;
}

std::string serialize_solution(const SolutionFile& sol) {
  std::ostringstream out;
  out << "sol " << to_string(sol.kind) << ' ' << sol.weight.to_string() << '\n';
  if (sol.kind == SolutionFile::Kind::cover) {
    out << 'c';
    for (int i : sol.cover) out << ' ' << i;
    out << '\n';
    return out.str();
  }
  out << 'v';
  for (Vertex v : sol.vertices) out << ' ' << v;
  out << '\n';
  for (const Edge& e : sol.edges) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

SolutionFile solution_file_of(const SubgraphSolution& s) {
  SolutionFile sol;
  switch (s.kind) {
    case SolutionKind::tree: sol.kind = SolutionFile::Kind::tree; break;
    case SolutionKind::star: sol.kind = SolutionFile::Kind::star; break;
    case SolutionKind::path: sol.kind = SolutionFile::Kind::path; break;
  }
  sol.weight = s.weight;
  sol.vertices = s.vertices;
  sol.edges = s.edges;
  return sol;
}

SubgraphSolution subgraph_solution_of(const SolutionFile& sol) {
  SubgraphSolution s;
  switch (sol.kind) {
    case SolutionFile::Kind::tree: s.kind = SolutionKind::tree; break;
    case SolutionFile::Kind::star: s.kind = SolutionKind::star; break;
    case SolutionFile::Kind::path: s.kind = SolutionKind::path; break;
    default:
      throw std::invalid_argument("solution file is not a tree/star/path");
  }
  s.vertices = sol.vertices;
  s.edges = sol.edges;
  s.weight = sol.weight;
  return s;
}

namespace {

bool gadget_tag_from(const std::string& token, GadgetTag& out) {
  static const std::pair<const char*, GadgetTag> table[] = {
      {"orig", GadgetTag::orig},     {"group", GadgetTag::group},
      {"lcopy", GadgetTag::lcopy},   {"rcopy", GadgetTag::rcopy},
      {"center", GadgetTag::center}, {"pendant", GadgetTag::pendant}};
  for (const auto& [name, tag] : table)
    if (token == name) {
      out = tag;
      return true;
    }
  return false;
}

}  // namespace

Sidecar parse_sidecar(const std::string& text) {
  LineReader reader(text);
  if (!reader.next()) throw ParseError(1, "empty sidecar");
  std::vector<std::string> header = tokens_of(reader.line);
  if (header.size() != 4 || header[0] != "r")
    throw ParseError(reader.line_no, "expected header 'r <from> <to> <scale-note>'");
  Sidecar sc;
  sc.scale_note = header[3];
  if (!problem_kind_from(header[1], sc.from))
    throw ParseError(reader.line_no, "unknown problem kind '" + header[1] + "'");
  if (!problem_kind_from(header[2], sc.to))
    throw ParseError(reader.line_no, "unknown problem kind '" + header[2] + "'");
  while (reader.next()) {
    std::vector<std::string> toks = tokens_of(reader.line);
    if (toks[0] == "v" && toks.size() == 4) {
      int out_index = static_cast<int>(parse_int(toks[1], reader.line_no, "index"));
      GadgetTag tag;
      if (!gadget_tag_from(toks[2], tag))
        throw ParseError(reader.line_no, "unknown tag '" + toks[2] + "'");
      int src = static_cast<int>(parse_int(toks[3], reader.line_no, "index"));
      if (out_index != static_cast<int>(sc.vertex_map.size()))
        throw ParseError(reader.line_no, "vertex rows must be dense and in order");
      sc.vertex_map.push_back(VertexOrigin{tag, src});
    } else if (toks[0] == "g" && toks.size() == 3) {
      sc.group_map.push_back(static_cast<int>(parse_int(toks[2], reader.line_no, "index")));
    } else if (toks[0] == "c" && toks.size() == 2) {
      sc.center = static_cast<Vertex>(parse_int(toks[1], reader.line_no, "index"));
    } else if (toks[0] == "u" && toks.size() == 3) {
      sc.element_to_vertex.push_back(
          static_cast<Vertex>(parse_int(toks[2], reader.line_no, "index")));
    } else if (toks[0] == "s" && toks.size() == 3) {
      sc.set_to_leaf.push_back(
          static_cast<Vertex>(parse_int(toks[2], reader.line_no, "index")));
    } else {
      throw ParseError(reader.line_no, "unexpected sidecar line '" + reader.line + "'");
    }
  }
  return sc;
}

std::string serialize_sidecar(const Sidecar& sc) {
  std::ostringstream out;
  out << "r " << to_string(sc.from) << ' ' << to_string(sc.to) << ' ' << sc.scale_note
      << '\n';
  for (size_t i = 0; i < sc.vertex_map.size(); ++i)
    out << "v " << i << ' ' << to_string(sc.vertex_map[i].tag) << ' '
        << sc.vertex_map[i].source_index << '\n';
  for (size_t i = 0; i < sc.group_map.size(); ++i)
    out << "g " << i << ' ' << sc.group_map[i] << '\n';
  if (sc.center >= 0) out << "c " << sc.center << '\n';
  for (size_t i = 0; i < sc.element_to_vertex.size(); ++i)
    out << "u " << i << ' ' << sc.element_to_vertex[i] << '\n';
  for (size_t i = 0; i < sc.set_to_leaf.size(); ++i)
    out << "s " << i << ' ' << sc.set_to_leaf[i] << '\n';
  return out.str();
}

Sidecar sidecar_of(const MdtToGstArtifact& art) {
  Sidecar sc;
  sc.from = ProblemKind::mdt;
  sc.to = ProblemKind::gst;
  sc.scale_note = art.scale_note;
  sc.vertex_map = art.vertex_map;
  for (int i = 0; i < art.groups.size(); ++i) sc.group_map.push_back(i);
  return sc;
}

Sidecar sidecar_of(const GstToMdtArtifact& art) {
  Sidecar sc;
  sc.from = ProblemKind::gst;
  sc.to = ProblemKind::mdt;
  sc.scale_note = art.scale_note;
  sc.vertex_map = art.vertex_map;
  return sc;
}

Sidecar sidecar_of(const DomToMdsArtifact& art) {
  Sidecar sc;
  sc.from = ProblemKind::dom;
  sc.to = ProblemKind::mds;
  sc.scale_note = art.scale_note;
  sc.vertex_map = art.vertex_map;
  return sc;
}

Sidecar sidecar_of(const MdsToScArtifact& art) {
  Sidecar sc;
  sc.from = ProblemKind::mds;
  sc.to = ProblemKind::sc;
  sc.scale_note = art.scale_note;
  sc.center = art.center;
  sc.element_to_vertex = art.element_to_vertex;
  sc.set_to_leaf = art.set_to_leaf;
  return sc;
}

Sidecar sidecar_of(const HpToMdpArtifact& art) {
  Sidecar sc;
  sc.from = ProblemKind::hp;
  sc.to = ProblemKind::mdp;
  sc.scale_note = art.scale_note;
  sc.vertex_map = art.vertex_map;
  return sc;
}

namespace {

SolutionFile lift_identity(const Sidecar& sc, const SolutionFile& sol,
                           SolutionFile::Kind out_kind, bool forbid_gadgets) {
  if (sol.kind != SolutionFile::Kind::tree && sol.kind != SolutionFile::Kind::star &&
      sol.kind != SolutionFile::Kind::path)
    throw std::invalid_argument("lift: expected a tree/star/path solution");
  if (forbid_gadgets)
    for (Vertex v : sol.vertices) {
      if (v < 0 || static_cast<size_t>(v) >= sc.vertex_map.size())
        throw std::invalid_argument("lift: vertex outside the reduced instance");
      if (sc.vertex_map[static_cast<size_t>(v)].tag != GadgetTag::orig)
        throw std::invalid_argument("lift: solution touches gadget vertex " +
                                    std::to_string(v));
    }
  SolutionFile out = sol;
  out.kind = out_kind;
  return out;
}

}  // namespace

SolutionFile lift_via_sidecar(const Sidecar& sc, const SolutionFile& sol) {
  if (sc.from == ProblemKind::mdt && sc.to == ProblemKind::gst)
    return lift_identity(sc, sol, SolutionFile::Kind::tree, false);
  if (sc.from == ProblemKind::gst && sc.to == ProblemKind::mdt) {
    if (sol.weight.is_infinite())
      throw std::invalid_argument("lift: dominating tree has infinite weight");
    return lift_identity(sc, sol, SolutionFile::Kind::tree, true);
  }
  if (sc.from == ProblemKind::dom && sc.to == ProblemKind::mds) {
    if (sol.kind != SolutionFile::Kind::star)
      throw std::invalid_argument("lift: expected a star solution");
    if (sol.weight.is_infinite())
      throw std::invalid_argument("lift: dominating star has infinite weight");
    SolutionFile out;
    out.kind = SolutionFile::Kind::vertex_set;
    for (Vertex v : sol.vertices) {
      if (v < 0 || static_cast<size_t>(v) >= sc.vertex_map.size())
        throw std::invalid_argument("lift: vertex outside the reduced instance");
      const VertexOrigin& origin = sc.vertex_map[static_cast<size_t>(v)];
      if (origin.tag == GadgetTag::lcopy) out.vertices.push_back(origin.source_index);
    }
    out.vertices = normalize_vertex_set(std::move(out.vertices));
    out.weight = ExtWeight::finite(static_cast<std::int64_t>(out.vertices.size()));
    return out;
  }
  if (sc.from == ProblemKind::mds && sc.to == ProblemKind::sc) {
    if (sol.kind != SolutionFile::Kind::cover)
      throw std::invalid_argument("lift: expected a cover solution");
    SolutionFile out;
    out.kind = SolutionFile::Kind::star;
    out.weight = sol.weight;
    out.vertices.push_back(sc.center);
    for (int i : sol.cover) {
      if (i < 0 || static_cast<size_t>(i) >= sc.set_to_leaf.size())
        throw std::invalid_argument("lift: set index " + std::to_string(i) +
                                    " outside the reduced instance");
      Vertex leaf = sc.set_to_leaf[static_cast<size_t>(i)];
      out.vertices.push_back(leaf);
      out.edges.push_back(leaf < sc.center ? Edge{leaf, sc.center}
                                           : Edge{sc.center, leaf});
    }
    out.vertices = normalize_vertex_set(std::move(out.vertices));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }
  if (sc.from == ProblemKind::hp && sc.to == ProblemKind::mdp) {
    if (sol.kind != SolutionFile::Kind::path)
      throw std::invalid_argument("lift: expected a path solution");
    if (sol.weight != ExtWeight::zero())
      throw std::invalid_argument("lift: only zero-weight paths witness a "
                                  "Hamiltonian path");
    return lift_identity(sc, sol, SolutionFile::Kind::path, true);
  }
  throw std::invalid_argument("lift: unsupported reduction " + to_string(sc.from) +
                              " -> " + to_string(sc.to));
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace domtree

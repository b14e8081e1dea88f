#include "dsn/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "dsn/errors.hpp"
#include "dsn/reach.hpp"

namespace dsn {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    number++;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, const char* what, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line);
  }
}

VertexId parse_vertex(const std::string& tok, int n, int line) {
  long long v = parse_int(tok, "vertex id", line);
  if (v < 0 || v >= n)
    throw ParseError("dangling vertex reference '" + tok + "'", line);
  return (VertexId)v;
}

SolutionClass parse_class(const std::string& value, int line) {
  if (value == "any") return SolutionClass::any();
  if (value == "planar") return SolutionClass::planar();
  if (value == "polytree") return SolutionClass::poly_tree();
  if (value == "cycle") return SolutionClass::cycle();
  if (value.rfind("tw:", 0) == 0) {
    long long w = parse_int(value.substr(3), "treewidth bound", line);
    if (w < 1) throw ParseError("treewidth bound must be at least 1", line);
    return SolutionClass::treewidth_at_most((int)w);
  }
  throw ParseError("unknown solution class '" + value + "'", line);
}

std::string class_to_string(const SolutionClass& c) {
  switch (c.kind) {
    case SolutionClass::Kind::Any: return "any";
    case SolutionClass::Kind::Planar: return "planar";
    case SolutionClass::Kind::TreewidthAtMost:
      return "tw:" + std::to_string(c.omega);
    case SolutionClass::Kind::PolyTree: return "polytree";
    case SolutionClass::Kind::Cycle: return "cycle";
  }
  return "any";
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty instance", 1);

  const Line& header = lines[0];
  if (header.tokens.size() < 4) throw ParseError("malformed header", header.number);
  Instance inst;
  if (header.tokens[0] == "dsn")
    inst.variant = Variant::DSN;
  else if (header.tokens[0] == "scss")
    inst.variant = Variant::SCSS;
  else
    throw ParseError("unknown variant '" + header.tokens[0] + "'", header.number);

  long long n = parse_int(header.tokens[1], "vertex count", header.number);
  long long m = parse_int(header.tokens[2], "edge count", header.number);
  long long k = parse_int(header.tokens[3], "demand count", header.number);
  if (n < 0 || m < 0 || k < 0) throw ParseError("malformed header", header.number);
  for (size_t i = 4; i < header.tokens.size(); ++i) {
    const std::string& flag = header.tokens[i];
    if (flag == "bidirected")
      inst.bidirected_required = true;
    else if (flag.rfind("class=", 0) == 0)
      inst.solution_class = parse_class(flag.substr(6), header.number);
    else
      throw ParseError("unknown header flag '" + flag + "'", header.number);
  }

  inst.graph.n = (int)n;
  inst.graph.labels.assign((size_t)n, std::string());
  if ((long long)lines.size() != 1 + m + k)
    throw ParseError("expected " + std::to_string(m) + " edge and " +
                         std::to_string(k) + " demand lines, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);

  std::vector<int> edge_lines;
  for (long long i = 0; i < m; ++i) {
    const Line& line = lines[1 + i];
    if (line.tokens.size() != 4 || line.tokens[0] != "e")
      throw ParseError("expected 'e <tail> <head> <weight>'", line.number);
    VertexId tail = parse_vertex(line.tokens[1], inst.graph.n, line.number);
    VertexId head = parse_vertex(line.tokens[2], inst.graph.n, line.number);
    Weight w;
    try {
      w = Weight::parse(line.tokens[3]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number);
    }
    if (w.is_negative()) throw ParseError("negative edge weight", line.number);
    if (tail == head) throw ParseError("self-loop edge", line.number);
    inst.graph.add_edge(tail, head, w);
    edge_lines.push_back(line.number);
  }

  bool saw_terminal_line = false;
  for (long long i = 0; i < k; ++i) {
    const Line& line = lines[1 + m + i];
    if (line.tokens.empty()) throw ParseError("empty demand line", line.number);
    if (line.tokens[0] == "d") {
      if (line.tokens.size() != 3)
        throw ParseError("expected 'd <s> <t>'", line.number);
      VertexId s = parse_vertex(line.tokens[1], inst.graph.n, line.number);
      VertexId t = parse_vertex(line.tokens[2], inst.graph.n, line.number);
      if (s == t) throw ParseError("demand with equal endpoints", line.number);
      inst.pattern.demands.emplace_back(s, t);
      inst.pattern.terminals.push_back(s);
      inst.pattern.terminals.push_back(t);
    } else if (line.tokens[0] == "r" && inst.variant == Variant::SCSS) {
      if (saw_terminal_line || i != 0 || k != 1)
        throw ParseError("'r' must be the only demand line", line.number);
      saw_terminal_line = true;
      if (line.tokens.size() < 3)
        throw ParseError("'r' needs at least two terminals", line.number);
      std::vector<VertexId> terms;
      for (size_t j = 1; j < line.tokens.size(); ++j)
        terms.push_back(parse_vertex(line.tokens[j], inst.graph.n, line.number));
      inst.pattern = Pattern::all_pairs(terms);
    } else {
      throw ParseError("expected demand line", line.number);
    }
  }
  inst.pattern.normalize();

  if (inst.variant == Variant::SCSS && !saw_terminal_line) {
    // Accept any demand list that asks for the full strong connectivity of
    // its terminal set (all ordered pairs, or a single directed cycle) and
    // normalize to all ordered pairs.
    Pattern full = Pattern::all_pairs(inst.pattern.terminals);
    bool all_pairs = inst.pattern.demands == full.demands;
    bool covers_cycle = false;
    if (!all_pairs && !inst.pattern.terminals.empty()) {
      size_t r = inst.pattern.terminals.size();
      if (inst.pattern.demands.size() == r && r >= 2) {
        // A directed Hamiltonian cycle on the terminals: every terminal has
        // out-degree and in-degree one and the demand digraph is strongly
        // connected.
        Graph dg;
        dg.n = inst.graph.n;
        std::vector<EdgeId> ids;
        std::vector<int> outdeg(inst.graph.n, 0), indeg(inst.graph.n, 0);
        for (auto& [s, t] : inst.pattern.demands) {
          ids.push_back(dg.add_edge(s, t, Weight(0)));
          outdeg[s]++;
          indeg[t]++;
        }
        covers_cycle = true;
        for (VertexId t : inst.pattern.terminals)
          if (outdeg[t] != 1 || indeg[t] != 1) covers_cycle = false;
        if (covers_cycle) {
          auto seen = reachable_from(dg, ids, inst.pattern.terminals[0]);
          for (VertexId t : inst.pattern.terminals)
            if (!seen[t]) covers_cycle = false;
        }
      }
      if (!all_pairs && !covers_cycle)
        throw ParseError(
            "scss demands must form all ordered pairs or a directed cycle over the terminals",
            lines.back().number);
      if (covers_cycle) inst.pattern = full;
    }
  }

  if (inst.bidirected_required && !is_bidirected(inst.graph)) {
    std::vector<EdgeId> partner = bidirected_partner(inst.graph);
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
      if (partner[e] == -1)
        throw ParseError("bidirected flag violated: edge has no equal-weight reverse",
                         edge_lines[e]);
  }
  inst.validate();
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << (inst.variant == Variant::DSN ? "dsn" : "scss") << ' ' << inst.graph.n << ' '
      << inst.graph.edge_count() << ' ' << inst.pattern.demands.size();
  if (inst.bidirected_required) out << " bidirected";
  if (!(inst.solution_class == SolutionClass::any()))
    out << " class=" << class_to_string(inst.solution_class);
  out << '\n';
  for (const Edge& e : inst.graph.edges)
    out << "e " << e.tail << ' ' << e.head << ' ' << e.weight.str() << '\n';
  for (auto& [s, t] : inst.pattern.demands) out << "d " << s << ' ' << t << '\n';
  return out.str();
}

Solution parse_solution(std::istream& in, const Graph& g, const Pattern& p) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty solution", 1);
  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "cost")
    throw ParseError("expected 'cost <weight>'", header.number);
  Weight declared;
  try {
    declared = Weight::parse(header.tokens[1]);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), header.number);
  }
  std::vector<EdgeId> ids;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2 || line.tokens[0] != "e")
      throw ParseError("expected 'e <edge-id>'", line.number);
    long long id = parse_int(line.tokens[1], "edge id", line.number);
    if (id < 0 || id >= g.edge_count())
      throw ParseError("edge id out of range", line.number);
    if (std::find(ids.begin(), ids.end(), (EdgeId)id) != ids.end())
      throw ParseError("duplicate edge id", line.number);
    ids.push_back((EdgeId)id);
  }
  Solution sol = make_solution(g, ids, p);
  if (!(sol.cost == declared))
    throw ParseError("declared cost " + declared.str() + " does not match edge set cost " +
                         sol.cost.str(),
                     header.number);
  return sol;
}

Solution load_solution(const std::string& path, const Graph& g, const Pattern& p) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file '" + path + "'");
  return parse_solution(in, g, p);
}

std::string serialize_solution(const Solution& sol) {
  std::ostringstream out;
  out << "cost " << sol.cost.str() << '\n';
  for (EdgeId e : sol.edge_ids) out << "e " << e << '\n';
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

}  // namespace dsn

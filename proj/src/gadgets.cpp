#include "dsn/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "dsn/errors.hpp"

namespace dsn {

namespace {

// Graph under construction plus a directed (tail, head) -> edge id index
// so generators can refer back to specific arcs of the pairs they added.
struct Builder {
  Graph g;
  std::map<std::pair<VertexId, VertexId>, EdgeId> arc;

  void add_unit(VertexId x, VertexId y, const Weight& w) {
    arc.emplace(std::make_pair(x, y), g.add_edge(x, y, w));
    arc.emplace(std::make_pair(y, x), g.add_edge(y, x, w));
  }

  EdgeId arc_id(VertexId x, VertexId y) const {
    auto it = arc.find({x, y});
    if (it == arc.end()) throw std::logic_error("generator lost an edge id");
    return it->second;
  }
};

UniquenessGadget append_gadget(Builder& b, const std::string& name, const Weight& M,
                               const std::vector<std::string>& row_keys) {
  UniquenessGadget u;
  u.n = (int)row_keys.size();
  u.M = M;
  u.s1 = b.g.add_vertex(name + "(s1)");
  u.s2 = b.g.add_vertex(name + "(s2)");
  u.t1 = b.g.add_vertex(name + "(t1)");
  u.t2 = b.g.add_vertex(name + "(t2)");
  EdgeId first = b.g.edge_count();
  for (const std::string& key : row_keys) {
    std::array<VertexId, 4> row;
    for (int p = 0; p < 4; ++p)
      row[p] = b.g.add_vertex(name + "(" + std::to_string(p) + "_" + key + ")");
    for (int p = 0; p + 1 < 4; ++p) b.add_unit(row[p], row[p + 1], M);
    b.add_unit(u.s1, row[1], M);
    b.add_unit(u.t1, row[1], M);
    b.add_unit(u.s2, row[2], M);
    b.add_unit(u.t2, row[2], M);
    u.rows.push_back(row);
  }
  for (EdgeId e = first; e < b.g.edge_count(); ++e) u.edge_ids.push_back(e);
  return u;
}

}  // namespace

GadgetBuild gen_uniqueness_gadget(int n, const Weight& M) {
  if (n < 1) throw ContractError("gadget needs at least one row");
  if (!(Weight(0) < M)) throw ContractError("gadget weight must be positive");
  Builder b;
  std::vector<std::string> keys;
  for (int i = 1; i <= n; ++i) keys.push_back(std::to_string(i));
  UniquenessGadget u = append_gadget(b, "U", M, keys);
  return {std::move(b.g), std::move(u)};
}

std::vector<EdgeId> representation_edges(const Graph& g, const UniquenessGadget& u,
                                         int row, Orientation o) {
  if (row < 1 || row > u.n) throw ContractError("row out of range");
  const std::array<VertexId, 4>& r = u.rows[row - 1];
  auto arc = [&](VertexId x, VertexId y) -> EdgeId {
    for (EdgeId e : u.edge_ids)
      if (e >= 0 && e < g.edge_count() && g.edges[e].tail == x && g.edges[e].head == y)
        return e;
    throw ContractError("gadget does not match the graph");
  };
  std::vector<EdgeId> ids = {arc(u.s1, r[1]), arc(u.s2, r[2]), arc(r[1], u.t1),
                             arc(r[2], u.t2)};
  if (o == Orientation::right)
    for (int p = 0; p < 3; ++p) ids.push_back(arc(r[p], r[p + 1]));
  else
    for (int p = 3; p > 0; --p) ids.push_back(arc(r[p], r[p - 1]));
  std::sort(ids.begin(), ids.end());
  return ids;
}

InOutReport check_inout(const Graph& g, const UniquenessGadget& u,
                        const std::vector<EdgeId>& ids) {
  std::vector<EdgeId> sel(ids);
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  for (EdgeId e : sel)
    if (!std::binary_search(u.edge_ids.begin(), u.edge_ids.end(), e))
      throw ContractError("edge outside the gadget");

  InOutReport report;
  for (EdgeId e : sel) report.weight += g.edges[e].weight;

  std::vector<char> boundary(g.n, 0);
  for (const std::array<VertexId, 4>& r : u.rows) {
    boundary[r[0]] = 1;
    boundary[r[3]] = 1;
  }
  auto hits_boundary = [&](VertexId from, bool forward) {
    std::vector<char> seen(g.n, 0);
    std::vector<VertexId> stack = {from};
    seen[from] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : sel) {
        VertexId src = forward ? g.edges[e].tail : g.edges[e].head;
        VertexId dst = forward ? g.edges[e].head : g.edges[e].tail;
        if (src != v || seen[dst]) continue;
        if (boundary[dst]) return true;
        seen[dst] = 1;
        stack.push_back(dst);
      }
    }
    return false;
  };
  report.satisfies = hits_boundary(u.s1, true) && hits_boundary(u.s2, true) &&
                     hits_boundary(u.t1, false) && hits_boundary(u.t2, false);

  if (report.satisfies && report.weight == Weight(7) * u.M)
    for (int row = 1; row <= u.n && !report.representation; ++row)
      for (Orientation o : {Orientation::right, Orientation::left})
        if (sel == representation_edges(g, u, row, o)) {
          report.representation = {row, o};
          break;
        }
  return report;
}

namespace {

// Shared layout for the two grid-of-gadgets generators. The grid has L
// columns and L rows of cells; `present` marks which cells carry a
// gadget. Seam gadgets sit between horizontally and vertically
// neighbouring present cells and along the outer border, and skipping
// absent cells is what merges seams. All indices are 1-based; column
// index 0 and L+1 stand for the border vertices.
struct GridSpec {
  int L = 0;
  Weight M;
  SolutionClass cls = SolutionClass::any();
  std::vector<std::vector<char>> present;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cell_rows;
  std::vector<std::vector<int>> hs_rows;  // rows of the seams above/below column i
  std::vector<std::vector<int>> vs_rows;  // rows of the seams beside row j
};

int next_h(const GridSpec& s, int i, int j) {
  for (int r = i + 1; r <= s.L; ++r)
    if (s.present[r][j]) return r;
  return s.L + 1;
}

int prev_h(const GridSpec& s, int i, int j) {
  for (int r = i - 1; r >= 1; --r)
    if (s.present[r][j]) return r;
  return 0;
}

int next_v(const GridSpec& s, int i, int j) {
  for (int r = j + 1; r <= s.L; ++r)
    if (s.present[i][r]) return r;
  return s.L + 1;
}

int prev_v(const GridSpec& s, int i, int j) {
  for (int r = j - 1; r >= 1; --r)
    if (s.present[i][r]) return r;
  return 0;
}

int first_v(const GridSpec& s, int i) { return next_v(s, i, 0); }
int first_h(const GridSpec& s, int j) { return next_h(s, 0, j); }

struct GridParts {
  Builder b;
  std::map<std::pair<int, int>, UniquenessGadget> main, hs, vs;
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> main_row;
  std::vector<std::map<int, int>> hs_row, vs_row;  // value -> 1-based row
  std::vector<VertexId> a, b_border, c, d;         // 1-based
  Pattern pattern;
  Weight budget;
};

std::string grid_name(const char* prefix, int i, int j) {
  return std::string(prefix) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

GridParts build_grid(const GridSpec& spec) {
  GridParts parts;
  int L = spec.L;
  auto pair_key = [](const std::pair<int, int>& xy) {
    return "(" + std::to_string(xy.first) + "," + std::to_string(xy.second) + ")";
  };

  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j) {
      if (!spec.present[i][j]) continue;
      const std::vector<std::pair<int, int>>& rows = spec.cell_rows.at({i, j});
      std::vector<std::string> keys;
      std::map<std::pair<int, int>, int>& index = parts.main_row[{i, j}];
      for (int r = 0; r < (int)rows.size(); ++r) {
        keys.push_back(pair_key(rows[r]));
        index[rows[r]] = r + 1;
      }
      parts.main.emplace(std::make_pair(i, j),
                         append_gadget(parts.b, grid_name("M", i, j), spec.M, keys));
    }

  parts.hs_row.assign(L + 1, {});
  for (int i = 1; i <= L; ++i) {
    std::vector<std::string> keys;
    for (int r = 0; r < (int)spec.hs_rows[i].size(); ++r) {
      keys.push_back(std::to_string(spec.hs_rows[i][r]));
      parts.hs_row[i][spec.hs_rows[i][r]] = r + 1;
    }
    for (int j = 1; j <= L + 1; ++j) {
      if (j <= L && !spec.present[i][j]) continue;
      parts.hs.emplace(std::make_pair(i, j),
                       append_gadget(parts.b, grid_name("HS", i, j), spec.M, keys));
    }
  }

  parts.vs_row.assign(L + 1, {});
  for (int j = 1; j <= L; ++j) {
    std::vector<std::string> keys;
    for (int r = 0; r < (int)spec.vs_rows[j].size(); ++r) {
      keys.push_back(std::to_string(spec.vs_rows[j][r]));
      parts.vs_row[j][spec.vs_rows[j][r]] = r + 1;
    }
    for (int i = 1; i <= L + 1; ++i) {
      if (i <= L && !spec.present[i][j]) continue;
      parts.vs.emplace(std::make_pair(i, j),
                       append_gadget(parts.b, grid_name("VS", i, j), spec.M, keys));
    }
  }

  parts.a.assign(L + 1, -1);
  parts.b_border.assign(L + 1, -1);
  parts.c.assign(L + 1, -1);
  parts.d.assign(L + 1, -1);
  for (int i = 1; i <= L; ++i) parts.a[i] = parts.b.g.add_vertex("a" + std::to_string(i));
  for (int i = 1; i <= L; ++i)
    parts.b_border[i] = parts.b.g.add_vertex("b" + std::to_string(i));
  for (int j = 1; j <= L; ++j) parts.c[j] = parts.b.g.add_vertex("c" + std::to_string(j));
  for (int j = 1; j <= L; ++j) parts.d[j] = parts.b.g.add_vertex("d" + std::to_string(j));

  Weight one(1);
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j) {
      if (!spec.present[i][j]) continue;
      const UniquenessGadget& mg = parts.main.at({i, j});
      const UniquenessGadget& top = parts.hs.at({i, next_v(spec, i, j)});
      const UniquenessGadget& bottom = parts.hs.at({i, j});
      const UniquenessGadget& left = parts.vs.at({i, j});
      const UniquenessGadget& right = parts.vs.at({next_h(spec, i, j), j});
      const std::vector<std::pair<int, int>>& rows = spec.cell_rows.at({i, j});
      for (int r = 0; r < (int)rows.size(); ++r) {
        auto [x, y] = rows[r];
        parts.b.add_unit(top.rows[parts.hs_row[i].at(x) - 1][3], mg.rows[r][0], one);
        parts.b.add_unit(left.rows[parts.vs_row[j].at(y) - 1][3], mg.rows[r][0], one);
        parts.b.add_unit(mg.rows[r][3], bottom.rows[parts.hs_row[i].at(x) - 1][0], one);
        parts.b.add_unit(mg.rows[r][3], right.rows[parts.vs_row[j].at(y) - 1][0], one);
      }
    }

  for (int i = 1; i <= L; ++i) {
    const UniquenessGadget& top = parts.hs.at({i, L + 1});
    const UniquenessGadget& bottom = parts.hs.at({i, first_v(spec, i)});
    for (int x : spec.hs_rows[i]) {
      int r = parts.hs_row[i].at(x) - 1;
      parts.b.add_unit(parts.a[i], top.rows[r][0], one);
      parts.b.add_unit(parts.b_border[i], bottom.rows[r][3], one);
    }
  }
  for (int j = 1; j <= L; ++j) {
    const UniquenessGadget& leftmost = parts.vs.at({first_h(spec, j), j});
    const UniquenessGadget& rightmost = parts.vs.at({L + 1, j});
    for (int y : spec.vs_rows[j]) {
      int r = parts.vs_row[j].at(y) - 1;
      parts.b.add_unit(parts.c[j], leftmost.rows[r][0], one);
      parts.b.add_unit(parts.d[j], rightmost.rows[r][3], one);
    }
  }

  std::vector<std::pair<VertexId, VertexId>> demands;
  for (int j = 1; j <= L; ++j)
    for (int i = 1; i <= L + 1; ++i) {
      if (i <= L && !spec.present[i][j]) continue;
      const UniquenessGadget& seam = parts.vs.at({i, j});
      int p = prev_h(spec, i, j);
      demands.emplace_back(p == 0 ? parts.c[j] : parts.main.at({p, j}).s1, seam.t1);
      demands.emplace_back(p == 0 ? parts.c[j] : parts.main.at({p, j}).s2, seam.t2);
      demands.emplace_back(seam.s1, i == L + 1 ? parts.d[j] : parts.main.at({i, j}).t1);
      demands.emplace_back(seam.s2, i == L + 1 ? parts.d[j] : parts.main.at({i, j}).t2);
    }
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L + 1; ++j) {
      if (j <= L && !spec.present[i][j]) continue;
      const UniquenessGadget& seam = parts.hs.at({i, j});
      demands.emplace_back(j == L + 1 ? parts.a[i] : parts.main.at({i, j}).s1, seam.t1);
      demands.emplace_back(j == L + 1 ? parts.a[i] : parts.main.at({i, j}).s2, seam.t2);
      int p = prev_v(spec, i, j);
      demands.emplace_back(seam.s1, p == 0 ? parts.b_border[i] : parts.main.at({i, p}).t1);
      demands.emplace_back(seam.s2, p == 0 ? parts.b_border[i] : parts.main.at({i, p}).t2);
    }
  parts.pattern.demands = demands;
  for (auto& [s, t] : demands) {
    parts.pattern.terminals.push_back(s);
    parts.pattern.terminals.push_back(t);
  }
  parts.pattern.normalize();

  long long cells = (long long)parts.main.size();
  Weight B = Weight(7) * spec.M;
  parts.budget = Weight(4LL * L) + Weight(2 * (cells + L)) * B +
                 Weight(cells) * (B + Weight(4));
  return parts;
}

// First selection (ascending, columns h before rows v) whose pair sits in
// every present cell; empty when none exists within the search cap.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_selection(
    const GridSpec& spec) {
  int L = spec.L;
  std::vector<int> h(L + 1, 0), v(L + 1, 0);
  std::vector<char> hset(L + 1, 0), vset(L + 1, 0);
  auto cell_ok = [&](int i, int j) {
    const std::vector<std::pair<int, int>>& rows = spec.cell_rows.at({i, j});
    return std::binary_search(rows.begin(), rows.end(), std::make_pair(h[i], v[j]));
  };
  long long nodes = 0;
  std::function<bool(int)> go = [&](int pos) -> bool {
    if (pos == 2 * L) return true;
    if (++nodes > 4000000) return false;
    int idx = pos / 2 + 1;
    if (pos % 2 == 0) {
      for (int x : spec.hs_rows[idx]) {
        h[idx] = x;
        hset[idx] = 1;
        bool ok = true;
        for (int j = 1; j <= L && ok; ++j)
          if (spec.present[idx][j] && vset[j] && !cell_ok(idx, j)) ok = false;
        if (ok && go(pos + 1)) return true;
        hset[idx] = 0;
      }
      return false;
    }
    for (int y : spec.vs_rows[idx]) {
      v[idx] = y;
      vset[idx] = 1;
      bool ok = true;
      for (int i = 1; i <= L && ok; ++i)
        if (spec.present[i][idx] && hset[i] && !cell_ok(i, idx)) ok = false;
      if (ok && go(pos + 1)) return true;
      vset[idx] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return std::make_pair(h, v);
}

std::vector<EdgeId> grid_witness(const GridParts& parts, const GridSpec& spec,
                                 const std::vector<int>& h, const std::vector<int>& v) {
  int L = spec.L;
  std::vector<EdgeId> ids;
  auto take = [&](std::vector<EdgeId> more) {
    ids.insert(ids.end(), more.begin(), more.end());
  };
  const Graph& g = parts.b.g;

  for (int i = 1; i <= L; ++i) {
    const UniquenessGadget& top = parts.hs.at({i, L + 1});
    const UniquenessGadget& bottom = parts.hs.at({i, first_v(spec, i)});
    int r = parts.hs_row[i].at(h[i]) - 1;
    ids.push_back(parts.b.arc_id(parts.a[i], top.rows[r][0]));
    ids.push_back(parts.b.arc_id(bottom.rows[r][3], parts.b_border[i]));
  }
  for (int j = 1; j <= L; ++j) {
    const UniquenessGadget& leftmost = parts.vs.at({first_h(spec, j), j});
    const UniquenessGadget& rightmost = parts.vs.at({L + 1, j});
    int r = parts.vs_row[j].at(v[j]) - 1;
    ids.push_back(parts.b.arc_id(parts.c[j], leftmost.rows[r][0]));
    ids.push_back(parts.b.arc_id(rightmost.rows[r][3], parts.d[j]));
  }

  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j) {
      if (!spec.present[i][j]) continue;
      const UniquenessGadget& mg = parts.main.at({i, j});
      std::pair<int, int> row{h[i], v[j]};
      int r = parts.main_row.at({i, j}).at(row) - 1;
      take(representation_edges(g, mg, r + 1, Orientation::right));
      const UniquenessGadget& top = parts.hs.at({i, next_v(spec, i, j)});
      const UniquenessGadget& bottom = parts.hs.at({i, j});
      const UniquenessGadget& left = parts.vs.at({i, j});
      const UniquenessGadget& right = parts.vs.at({next_h(spec, i, j), j});
      int hx = parts.hs_row[i].at(h[i]) - 1;
      int vy = parts.vs_row[j].at(v[j]) - 1;
      ids.push_back(parts.b.arc_id(top.rows[hx][3], mg.rows[r][0]));
      ids.push_back(parts.b.arc_id(left.rows[vy][3], mg.rows[r][0]));
      ids.push_back(parts.b.arc_id(mg.rows[r][3], bottom.rows[hx][0]));
      ids.push_back(parts.b.arc_id(mg.rows[r][3], right.rows[vy][0]));
    }

  for (const auto& [key, seam] : parts.hs)
    take(representation_edges(g, seam, parts.hs_row[key.first].at(h[key.first]),
                              Orientation::right));
  for (const auto& [key, seam] : parts.vs)
    take(representation_edges(g, seam, parts.vs_row[key.second].at(v[key.second]),
                              Orientation::right));
  return ids;
}

ReductionOutput finish_grid(GridSpec spec) {
  GridParts parts = build_grid(spec);
  ReductionOutput out;
  out.budget = parts.budget;
  auto selection = find_selection(spec);
  if (selection)
    out.witness = make_solution(parts.b.g,
                                grid_witness(parts, spec, selection->first,
                                             selection->second),
                                parts.pattern);
  out.instance.graph = std::move(parts.b.g);
  out.instance.pattern = std::move(parts.pattern);
  out.instance.variant = Variant::DSN;
  out.instance.bidirected_required = true;
  out.instance.solution_class = spec.cls;
  out.instance.validate();
  return out;
}

void validate_partition(const Graph& g, const std::vector<std::vector<VertexId>>& classes) {
  std::vector<char> seen(g.n, 0);
  for (const std::vector<VertexId>& cls : classes)
    for (VertexId v : cls) {
      if (v < 0 || v >= g.n) throw ContractError("partition entry out of range");
      if (seen[v]) throw ContractError("partition classes overlap");
      seen[v] = 1;
    }
  for (char s : seen)
    if (!s) throw ContractError("partition misses a vertex");
}

}  // namespace

ReductionOutput gen_gridtiling_bidsnplanar(const GridTilingInput& gt,
                                           std::optional<Weight> M) {
  if (gt.k < 1) throw ContractError("grid size must be positive");
  if (gt.n < 1) throw ContractError("value range must be positive");
  if ((int)gt.cells.size() != gt.k) throw ContractError("grid tiling table has wrong shape");
  for (const auto& row : gt.cells)
    if ((int)row.size() != gt.k) throw ContractError("grid tiling table has wrong shape");

  GridSpec spec;
  spec.L = gt.k;
  Weight fourth(1);
  for (int t = 0; t < 4; ++t) fourth *= Weight(gt.k);
  spec.M = M.value_or(fourth);
  if (!(Weight(0) < spec.M)) throw ContractError("gadget weight must be positive");
  spec.cls = SolutionClass::planar();
  spec.present.assign(gt.k + 2, std::vector<char>(gt.k + 2, 0));
  spec.hs_rows.assign(gt.k + 1, {});
  spec.vs_rows.assign(gt.k + 1, {});
  for (int i = 1; i <= gt.k; ++i)
    for (int x = 1; x <= gt.n; ++x) {
      spec.hs_rows[i].push_back(x);
      spec.vs_rows[i].push_back(x);
    }
  for (int i = 1; i <= gt.k; ++i)
    for (int j = 1; j <= gt.k; ++j) {
      spec.present[i][j] = 1;
      std::vector<std::pair<int, int>> rows = gt.cells[i - 1][j - 1];
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      if (rows.empty()) throw ContractError("grid tiling cell is empty");
      for (auto [x, y] : rows)
        if (x < 1 || x > gt.n || y < 1 || y > gt.n)
          throw ContractError("grid tiling entry out of range");
      spec.cell_rows[{i, j}] = std::move(rows);
    }
  return finish_grid(std::move(spec));
}

ReductionOutput gen_csi_bidsn(const CSIInput& csi, const Weight& M) {
  if (!csi.g.undirected) throw ContractError("host graph must be undirected");
  if (!csi.h.undirected) throw ContractError("class graph must be undirected");
  if ((int)csi.classes.size() != csi.h.n)
    throw ContractError("class count must match the partition");
  validate_partition(csi.g, csi.classes);
  if (!(Weight(0) < M)) throw ContractError("gadget weight must be positive");

  int l = csi.h.n;
  std::vector<std::vector<char>> adj(l + 2, std::vector<char>(l + 2, 0));
  for (const Edge& e : csi.h.edges) {
    if (e.tail == e.head) throw ContractError("class graph has a self-loop");
    adj[e.tail + 1][e.head + 1] = 1;
    adj[e.head + 1][e.tail + 1] = 1;
  }
  for (int i = 1; i <= l; ++i) {
    bool any = false;
    for (int j = 1; j <= l && !any; ++j) any = adj[i][j];
    if (!any) throw ContractError("class graph has an isolated vertex");
  }
  std::vector<char> visited(l + 1, 0);
  std::vector<int> stack = {1};
  visited[1] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 1; j <= l; ++j)
      if (adj[i][j] && !visited[j]) {
        visited[j] = 1;
        stack.push_back(j);
      }
  }
  for (int i = 1; i <= l; ++i)
    if (!visited[i]) throw ContractError("class graph is disconnected");

  GridSpec spec;
  spec.L = l;
  spec.M = M;
  spec.cls = SolutionClass::any();
  spec.present.assign(l + 2, std::vector<char>(l + 2, 0));
  spec.hs_rows.assign(l + 1, {});
  spec.vs_rows.assign(l + 1, {});
  for (int i = 1; i <= l; ++i) {
    std::vector<int> members(csi.classes[i - 1].begin(), csi.classes[i - 1].end());
    std::sort(members.begin(), members.end());
    spec.hs_rows[i] = members;
    spec.vs_rows[i] = members;
  }
  std::vector<int> class_of(csi.g.n, 0);
  for (int i = 0; i < l; ++i)
    for (VertexId v : csi.classes[i]) class_of[v] = i + 1;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      if (i != j && !adj[i][j]) continue;
      spec.present[i][j] = 1;
      std::vector<std::pair<int, int>>& rows = spec.cell_rows[{i, j}];
      if (i == j)
        for (int x : spec.hs_rows[i]) rows.emplace_back(x, x);
    }
  for (const Edge& e : csi.g.edges) {
    if (e.tail == e.head) continue;
    int cu = class_of[e.tail], cv = class_of[e.head];
    if (cu == cv) continue;
    if (!adj[cu][cv]) continue;
    spec.cell_rows[{cu, cv}].emplace_back(e.tail, e.head);
    spec.cell_rows[{cv, cu}].emplace_back(e.head, e.tail);
  }
  for (auto& [key, rows] : spec.cell_rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  return finish_grid(std::move(spec));
}

ReductionOutput gen_hamcycle_biscss(const Graph& ug) {
  if (!ug.undirected) throw ContractError("gen_hamcycle_biscss expects an undirected graph");
  if (ug.n < 3) throw ContractError("cycle reduction needs at least three vertices");
  std::set<std::pair<VertexId, VertexId>> present;
  for (const Edge& e : ug.edges)
    if (e.tail != e.head)
      present.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});

  Graph g;
  for (VertexId v = 0; v < ug.n; ++v) g.add_vertex(ug.label(v));
  for (VertexId u = 0; u < ug.n; ++u)
    for (VertexId v = u + 1; v < ug.n; ++v) {
      Weight w(present.count({u, v}) ? 1 : 2);
      g.add_edge(u, v, w);
      g.add_edge(v, u, w);
    }
  std::vector<VertexId> all(ug.n);
  for (VertexId v = 0; v < ug.n; ++v) all[v] = v;

  ReductionOutput out;
  out.instance.graph = std::move(g);
  out.instance.pattern = Pattern::all_pairs(all);
  out.instance.variant = Variant::SCSS;
  out.instance.bidirected_required = true;
  out.instance.validate();
  out.budget = Weight(ug.n);
  return out;
}

namespace {

struct McsiBase {
  int l = 0;
  std::vector<int> class_of;                        // 0-based class per host vertex
  std::vector<std::vector<VertexId>> classes;       // sorted members
  std::vector<std::pair<VertexId, VertexId>> cross; // u < v across classes
  std::vector<std::pair<VertexId, VertexId>> all_edges;  // u < v, any classes
  std::set<std::pair<VertexId, VertexId>> cross_set;
};

McsiBase mcsi_base(const MCSIInput& in) {
  if (!in.g.undirected) throw ContractError("host graph must be undirected");
  if (!in.h.undirected) throw ContractError("class graph must be undirected");
  if ((int)in.classes.size() != in.h.n)
    throw ContractError("class count must match the partition");
  if (in.h.n < 2) throw ContractError("needs at least two classes");
  validate_partition(in.g, in.classes);
  std::set<std::pair<int, int>> hedges;
  for (const Edge& e : in.h.edges)
    if (e.tail != e.head)
      hedges.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  for (int i = 0; i < in.h.n; ++i)
    for (int j = i + 1; j < in.h.n; ++j)
      if (!hedges.count({i, j})) throw ContractError("class graph must be complete");

  McsiBase base;
  base.l = in.h.n;
  base.class_of.assign(in.g.n, 0);
  for (int i = 0; i < base.l; ++i) {
    std::vector<VertexId> members(in.classes[i].begin(), in.classes[i].end());
    std::sort(members.begin(), members.end());
    base.classes.push_back(std::move(members));
    for (VertexId v : base.classes.back()) base.class_of[v] = i;
  }
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : in.g.edges) {
    if (e.tail == e.head) continue;
    edges.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  }
  for (const auto& uv : edges) {
    base.all_edges.push_back(uv);
    if (base.class_of[uv.first] != base.class_of[uv.second]) {
      base.cross.push_back(uv);
      base.cross_set.insert(uv);
    }
  }
  return base;
}

// First ascending choice of one vertex per class that is pairwise joined
// by cross-class host edges; empty when none exists within the search cap.
std::optional<std::vector<VertexId>> find_class_clique(const McsiBase& base) {
  double combos = 1;
  for (const std::vector<VertexId>& cls : base.classes)
    combos *= (double)std::max<size_t>(cls.size(), 1);
  if (combos > 4e6) return std::nullopt;
  std::vector<VertexId> pick;
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == base.l) return true;
    for (VertexId v : base.classes[i]) {
      bool ok = true;
      for (VertexId u : pick)
        if (!base.cross_set.count({std::min(u, v), std::max(u, v)})) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      if (go(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return pick;
}

std::string host_name(const Graph& g, VertexId v) {
  return g.label(v).empty() ? std::to_string(v) : g.label(v);
}

}  // namespace

ReductionOutput gen_mcsi_scss(const MCSIInput& mcsi, const Weight& q) {
  McsiBase base = mcsi_base(mcsi);
  if (!(Weight(0) < q)) throw ContractError("gap root must be positive");
  int l = base.l;

  Graph g;
  std::vector<VertexId> b(l);
  for (int i = 1; i <= l; ++i) b[i - 1] = g.add_vertex("b" + std::to_string(i));
  std::vector<VertexId> c(mcsi.g.n), cp(mcsi.g.n);
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    c[v] = g.add_vertex("c(" + host_name(mcsi.g, v) + ")");
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    cp[v] = g.add_vertex("c'(" + host_name(mcsi.g, v) + ")");
  std::vector<std::pair<VertexId, VertexId>> ordered;
  for (const auto& [u, v] : base.cross) {
    ordered.emplace_back(u, v);
    ordered.emplace_back(v, u);
  }
  std::map<std::pair<VertexId, VertexId>, VertexId> d, dp;
  for (const auto& [u, v] : ordered)
    d[{u, v}] = g.add_vertex("d(" + host_name(mcsi.g, u) + "," + host_name(mcsi.g, v) + ")");
  for (const auto& [u, v] : ordered)
    dp[{u, v}] =
        g.add_vertex("d'(" + host_name(mcsi.g, u) + "," + host_name(mcsi.g, v) + ")");
  std::map<std::pair<int, int>, VertexId> f;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (i != j)
        f[{i, j}] = g.add_vertex("f(" + std::to_string(i) + "," + std::to_string(j) + ")");

  Weight zero(0);
  Weight beta_weight = Weight(2) * q / Weight(l);
  Weight lane_weight(1, (long long)l * (l - 1) / 2);
  auto cls1 = [&](VertexId v) { return base.class_of[v] + 1; };
  std::vector<EdgeId> alpha(mcsi.g.n), alphap(mcsi.g.n), beta(mcsi.g.n);
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    alpha[v] = g.add_edge(b[cls1(v) - 1], c[v], zero);
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    alphap[v] = g.add_edge(cp[v], b[cls1(v) - 1], zero);
  for (VertexId v = 0; v < mcsi.g.n; ++v) beta[v] = g.add_edge(c[v], cp[v], beta_weight);
  std::map<std::pair<VertexId, VertexId>, EdgeId> delta, deltap, eps, zeta, zetap;
  for (const auto& uv : ordered) delta[uv] = g.add_edge(cp[uv.first], d.at(uv), zero);
  for (const auto& uv : ordered) deltap[uv] = g.add_edge(dp.at(uv), c[uv.second], zero);
  for (const auto& uv : ordered) eps[uv] = g.add_edge(d.at(uv), dp.at(uv), lane_weight);
  for (const auto& uv : ordered)
    zeta[uv] = g.add_edge(f.at({cls1(uv.first), cls1(uv.second)}), d.at(uv), zero);
  for (const auto& uv : ordered)
    zetap[uv] = g.add_edge(dp.at(uv), f.at({cls1(uv.first), cls1(uv.second)}), zero);

  std::vector<VertexId> terminals(b);
  for (const auto& [key, vert] : f) terminals.push_back(vert);

  ReductionOutput out;
  out.instance.graph = std::move(g);
  out.instance.pattern = Pattern::all_pairs(terminals);
  out.instance.variant = Variant::SCSS;
  out.instance.validate();
  out.budget = Weight(2) * (Weight(1) + q);

  if (auto clique = find_class_clique(base)) {
    std::vector<EdgeId> ids;
    for (VertexId v : *clique) {
      ids.push_back(alpha[v]);
      ids.push_back(alphap[v]);
      ids.push_back(beta[v]);
    }
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (i == j) continue;
        std::pair<VertexId, VertexId> uv{(*clique)[i], (*clique)[j]};
        ids.push_back(delta.at(uv));
        ids.push_back(deltap.at(uv));
        ids.push_back(eps.at(uv));
        ids.push_back(zeta.at(uv));
        ids.push_back(zetap.at(uv));
      }
    out.witness = make_solution(out.instance.graph, std::move(ids), out.instance.pattern);
  }
  return out;
}

ReductionOutput gen_mcsi_dsn(const MCSIInput& mcsi) {
  McsiBase base = mcsi_base(mcsi);
  int l = base.l;

  Graph g;
  std::vector<VertexId> entry(mcsi.g.n), exit(mcsi.g.n);
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    entry[v] = g.add_vertex("in(" + host_name(mcsi.g, v) + ")");
  for (VertexId v = 0; v < mcsi.g.n; ++v)
    exit[v] = g.add_vertex("out(" + host_name(mcsi.g, v) + ")");
  std::vector<VertexId> s(l), t(l);
  for (int i = 1; i <= l; ++i) s[i - 1] = g.add_vertex("s" + std::to_string(i));
  for (int i = 1; i <= l; ++i) t[i - 1] = g.add_vertex("t" + std::to_string(i));

  Weight port_weight(1, 2LL * l);
  std::vector<EdgeId> src(mcsi.g.n, -1), snk(mcsi.g.n, -1);
  for (int i = 0; i < l; ++i)
    for (VertexId v : base.classes[i]) src[v] = g.add_edge(s[i], entry[v], port_weight);
  for (int i = 0; i < l; ++i)
    for (VertexId v : base.classes[i]) snk[v] = g.add_edge(exit[v], t[i], port_weight);
  std::map<std::pair<VertexId, VertexId>, EdgeId> mid;
  Weight zero(0);
  for (const auto& [u, v] : base.all_edges) {
    mid[{u, v}] = g.add_edge(entry[u], exit[v], zero);
    mid[{v, u}] = g.add_edge(entry[v], exit[u], zero);
  }

  Pattern pattern;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j) pattern.demands.emplace_back(s[i], t[j]);
  pattern.terminals = s;
  pattern.terminals.insert(pattern.terminals.end(), t.begin(), t.end());
  pattern.normalize();

  ReductionOutput out;
  out.instance.graph = std::move(g);
  out.instance.pattern = std::move(pattern);
  out.instance.variant = Variant::DSN;
  out.instance.validate();
  out.budget = Weight(1);

  if (auto clique = find_class_clique(base)) {
    std::vector<EdgeId> ids;
    for (VertexId v : *clique) {
      ids.push_back(src[v]);
      ids.push_back(snk[v]);
    }
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (i != j) ids.push_back(mid.at({(*clique)[i], (*clique)[j]}));
    out.witness = make_solution(out.instance.graph, std::move(ids), out.instance.pattern);
  }
  return out;
}

}  // namespace dsn

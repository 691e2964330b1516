#include "ildkit/families.hpp"

#include <cassert>

#include "ildkit/census.hpp"
#include "ildkit/exact.hpp"

namespace ildkit {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
  if (name == "path") return FamilyKind::Path;
  if (name == "cycle") return FamilyKind::Cycle;
  if (name == "complete") return FamilyKind::Complete;
  if (name == "complete_bipartite") return FamilyKind::CompleteBipartite;
  if (name == "star") return FamilyKind::Star;
  if (name == "wheel") return FamilyKind::Wheel;
  if (name == "split") return FamilyKind::Split;
  if (name == "gamma_r") return FamilyKind::GammaR;
  if (name == "fig5_tree" || name == "spider") return FamilyKind::Fig5Tree;
  return std::nullopt;
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path:
      return "path";
    case FamilyKind::Cycle:
      return "cycle";
    case FamilyKind::Complete:
      return "complete";
    case FamilyKind::CompleteBipartite:
      return "complete_bipartite";
    case FamilyKind::Star:
      return "star";
    case FamilyKind::Wheel:
      return "wheel";
    case FamilyKind::Split:
      return "split";
    case FamilyKind::GammaR:
      return "gamma_r";
    case FamilyKind::Fig5Tree:
      return "fig5_tree";
  }
  return "?";
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph::build(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

Graph complete_bipartite(int r, int s) {
  require(r >= 1 && s >= 1, "complete bipartite needs r, s >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) e.emplace_back(i, r + j);
  return Graph::build(r + s, e);
}

Graph star(int n) {
  require(n >= 2, "star needs n >= 2");
  return complete_bipartite(1, n - 1);
}

Graph wheel(int n) {
  require(n >= 4, "wheel needs n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 1);
  for (int i = 1; i < n; ++i) e.emplace_back(i, n);
  return Graph::build(n, e);
}

Graph split_graph(int r, int s,
                  const std::vector<std::pair<int, int>>& incidence) {
  require(r >= 1 && s >= 1, "split graph needs r, s >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) e.emplace_back(i, j);
  if (incidence.empty()) {
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= s; ++j) e.emplace_back(i, r + j);
  } else {
    for (auto [i, j] : incidence) {
      require(i >= 1 && i <= r && j >= 1 && j <= s,
              "split incidence pair out of range");
      e.emplace_back(i, r + j);
    }
  }
  return Graph::build(r + s, e);
}

Graph gamma_r(int r) {
  require(r >= 1, "gamma_r needs r >= 1");
  require(r + (1 << r) - 1 <= max_vertices, "gamma_r order exceeds 64");
  const int s = (1 << r) - 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) e.emplace_back(i, j);
  for (int j = 1; j <= s; ++j)
    for (int i = 1; i <= r; ++i)
      if (j & (1 << (i - 1))) e.emplace_back(i, r + j);
  return Graph::build(r + s, e);
}

Graph fig5_tree(int h, int k) {
  require(2 <= h && h <= k, "spider needs 2 <= h <= k");
  const int n = 3 * k - 2 * h + 1;
  require(n <= max_vertices, "spider order exceeds 64");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= h; ++i) e.emplace_back(1, 1 + i);
  int next = h + 2;
  for (int leg = 0; leg < k - h; ++leg) {
    int x = next, y = next + 1, z = next + 2;
    e.emplace_back(1, x);
    e.emplace_back(x, y);
    e.emplace_back(y, z);
    next += 3;
  }
  return Graph::build(n, e);
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path:
      return path(spec.n);
    case FamilyKind::Cycle:
      return cycle(spec.n);
    case FamilyKind::Complete:
      return complete(spec.n);
    case FamilyKind::CompleteBipartite:
      return complete_bipartite(spec.r, spec.s);
    case FamilyKind::Star:
      return star(spec.n);
    case FamilyKind::Wheel:
      return wheel(spec.n);
    case FamilyKind::Split:
      return split_graph(spec.r, spec.s, spec.split_incidence);
    case FamilyKind::GammaR:
      return gamma_r(spec.r);
    case FamilyKind::Fig5Tree:
      return fig5_tree(spec.h, spec.k);
  }
  throw std::invalid_argument("unknown family kind");
}

Table1Row table1_expected(FamilyKind kind, int n, int r) {
  Table1Row row;
  switch (kind) {
    case FamilyKind::Path:
      require(n >= 1, "path row needs n >= 1");
      row.gamma = row.iota = ceil_div(n, 3);
      row.gamma_l = ceil_div(2 * n, 5);
      row.iota_l = ceil_div(2 * n, 5);
      row.alpha = ceil_div(n, 2);
      return row;
    case FamilyKind::Cycle:
      require(n >= 4, "cycle row needs n >= 4");
      if (n == 4) return Table1Row{2, 2, 2, 2, std::nullopt};
      row.gamma = row.iota = ceil_div(n, 3);
      row.gamma_l = ceil_div(2 * n, 5);
      row.iota_l = ceil_div(2 * n, 5);
      row.alpha = n / 2;
      return row;
    case FamilyKind::Complete:
      require(n >= 3, "complete row needs n >= 3");
      return Table1Row{1, 1, n - 1, 1, std::nullopt};
    case FamilyKind::Star:
      require(n >= 2, "star row needs n >= 2");
      return Table1Row{1, 1, n - 1, n - 1, n - 1};
    case FamilyKind::CompleteBipartite:
      require(1 < r && r <= n - r, "bipartite row needs 1 < r <= n - r");
      return Table1Row{2, 2, n - 2, n - r, std::nullopt};
    case FamilyKind::Wheel:
      require(n >= 7, "wheel row needs n >= 7");
      row.gamma = row.iota = 1;
      row.gamma_l = ceil_div(2 * n - 2, 5);
      row.iota_l = ceil_div(2 * n - 2, 5);
      row.alpha = n / 2;
      return row;
    default:
      throw std::invalid_argument("family has no closed-form row");
  }
}

std::pair<VertexSet, VertexSet> fig5_witnesses(int h, int k) {
  require(2 <= h && h <= k, "spider needs 2 <= h <= k");
  VertexSet s1, s2;
  s1.add(0);                                 // center w
  for (int i = 2; i <= h; ++i) s1.add(i);    // z_2..z_h (vertex 1+i, 0-based i)
  for (int i = 1; i <= h; ++i) s2.add(i);    // z_1..z_h
  int next = h + 1;  // 0-based index of the first leg vertex
  for (int leg = 0; leg < k - h; ++leg) {
    int x = next, y = next + 1, z = next + 2;
    s1.add(y);
    s2.add(x);
    s2.add(z);
    next += 3;
  }
  assert(s1.size() == k && s2.size() == 2 * k - h);
  return {s1, s2};
}

Realization realization_search(int r, int s, RealizationRegion region,
                               int max_n) {
  require(2 <= r && r <= s, "realization needs 2 <= r <= s");
  if (region == RealizationRegion::Tree) {
    require(s <= 2 * r - 2, "tree region needs s <= 2r - 2");
    Graph t = fig5_tree(2 * r - s, r);
    auto gl = parameter(t, Param::GammaL);
    auto il = parameter(t, Param::IotaL);
    assert(gl && il);
    return Realization{t, gl->value, il->value};
  }
  require(s <= 2 * r - 3, "twin-free tree region needs s <= 2r - 3");
  std::optional<Realization> found;
  for (int n = 2; n <= max_n && !found; ++n) {
    enumerate_trees(n, [&](const Graph& t) {
      if (found || !is_twin_free(t)) return;
      auto gl = parameter(t, Param::GammaL);
      if (!gl || gl->value != r) return;
      auto il = parameter(t, Param::IotaL);
      if (il && il->value == s) found = Realization{t, gl->value, il->value};
    });
  }
  if (!found)
    throw std::runtime_error(
        "no twin-free tree witness with gamma_l = " + std::to_string(r) +
        ", iota_l = " + std::to_string(s) + " up to the search cap n = " +
        std::to_string(max_n));
  return *found;
}

}  // namespace ildkit

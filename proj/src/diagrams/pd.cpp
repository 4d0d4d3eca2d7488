#include <numeric>
#include <sstream>

#include "slicecert/diagrams.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::diagrams {
namespace {

// Rays around a plat crossing, in counterclockwise order.
enum Ray { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };
constexpr std::array<std::array<int, 2>, 4> kRayVec{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

struct Visit {
  int in_ray = 0;
  int out_ray = 0;
  int in_edge = 0;
  int out_edge = 0;
};

}  // namespace

PlatDiagram plat_to_pd(const PlatWord& plat) {
  validate_plat(plat);
  const int n = plat.strands;
  const int len = static_cast<int>(plat.word.size());

  PlatDiagram out;
  out.segment_edge.assign(len + 1, std::vector<int>(n, 0));
  out.segment_direction.assign(len + 1, std::vector<int>(n, 0));

  // rays[t][ray] = edge label; over/under visits per crossing
  std::vector<std::array<int, 4>> ray_edge(len);
  std::vector<Visit> under_visit(len), over_visit(len);

  int pos = 1, level = 0, dir = 1;  // dir +1 = heading down
  int edge = 1;
  do {
    out.segment_edge[level][pos - 1] = edge;
    out.segment_direction[level][pos - 1] = dir;
    if (dir > 0) {
      if (level == len) {
        pos = (pos % 2 == 1) ? pos + 1 : pos - 1;
        dir = -1;
        continue;
      }
      const Letter& l = plat.word[level];
      if (pos == l.gen || pos == l.gen + 1) {
        const bool from_left = pos == l.gen;
        Visit v{from_left ? kNW : kNE, from_left ? kSE : kSW, edge, edge + 1};
        const bool over = (l.sign > 0) == from_left;
        (over ? over_visit : under_visit)[level] = v;
        ++edge;
        pos = from_left ? l.gen + 1 : l.gen;
      }
      ++level;
    } else {
      if (level == 0) {
        pos = (pos % 2 == 1) ? pos + 1 : pos - 1;
        dir = 1;
        continue;
      }
      const Letter& l = plat.word[level - 1];
      if (pos == l.gen || pos == l.gen + 1) {
        const bool from_left = pos == l.gen;  // entering at SW
        Visit v{from_left ? kSW : kSE, from_left ? kNE : kNW, edge, edge + 1};
        // NW-SE strand is the one entering at SE going up
        const bool on_nw_se = !from_left;
        const bool over = (l.sign > 0) == on_nw_se;
        (over ? over_visit : under_visit)[level - 1] = v;
        ++edge;
        pos = from_left ? l.gen + 1 : l.gen;
      }
      --level;
    }
  } while (!(pos == 1 && level == 0 && dir == 1));

  const int last = 2 * len;
  auto wrap = [last](int e) { return e > last ? e - last : e; };
  for (auto& row : out.segment_edge) {
    for (int& e : row) e = wrap(e);
  }

  out.pd.crossings.resize(len);
  for (int t = 0; t < len; ++t) {
    const Visit& u = under_visit[t];
    const Visit& o = over_visit[t];
    ray_edge[t][u.in_ray] = wrap(u.in_edge);
    ray_edge[t][u.out_ray] = wrap(u.out_edge);
    ray_edge[t][o.in_ray] = wrap(o.in_edge);
    ray_edge[t][o.out_ray] = wrap(o.out_edge);
    PDCrossing& c = out.pd.crossings[t];
    for (int i = 0; i < 4; ++i) c.edges[i] = ray_edge[t][(u.in_ray + i) % 4];
    const int ox = kRayVec[o.out_ray][0] - kRayVec[o.in_ray][0];
    const int oy = kRayVec[o.out_ray][1] - kRayVec[o.in_ray][1];
    const int ux = kRayVec[u.out_ray][0] - kRayVec[u.in_ray][0];
    const int uy = kRayVec[u.out_ray][1] - kRayVec[u.in_ray][1];
    c.sign = (ox * uy - oy * ux) > 0 ? 1 : -1;
  }
  check_pd(out.pd);
  return out;
}

void check_pd(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return;
  std::vector<int> count(2 * n + 1, 0);
  std::vector<std::vector<int>> where(2 * n + 1);
  for (int c = 0; c < n; ++c) {
    for (int e : pd.crossings[c].edges) {
      if (e < 1 || e > 2 * n) {
        throw StructuralError("PD edge label " + std::to_string(e) + " out of range");
      }
      ++count[e];
      where[e].push_back(c);
    }
  }
  for (int e = 1; e <= 2 * n; ++e) {
    if (count[e] != 2) {
      throw StructuralError("PD edge label " + std::to_string(e) + " occurs " +
                            std::to_string(count[e]) + " times");
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 1; e <= 2 * n; ++e) parent[find(where[e][0])] = find(where[e][1]);
  for (int c = 0; c < n; ++c) {
    if (find(c) != find(0)) throw StructuralError("PD crossing graph is disconnected");
  }
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& c = pd.crossings[i];
    if (i) out << ", ";
    out << "X[" << c.edges[0] << "," << c.edges[1] << "," << c.edges[2] << "," << c.edges[3]
        << "]" << (c.sign > 0 ? "+" : "-");
  }
  out << "]";
  return out.str();
}

}  // namespace slicecert::diagrams

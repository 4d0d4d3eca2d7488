#include <map>
#include <queue>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::covers {

BigInt integer_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Faces of a PD diagram. Corner (c, i) sits between positions i and i+1 of
// crossing c, counterclockwise.
struct Faces {
  std::vector<std::array<int, 4>> face_of_corner;
  int count = 0;
};

Faces trace_faces(const diagrams::PDCode& pd) {
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int i = 0; i < 4; ++i) ends[pd.crossings[c].edges[i]].emplace_back(static_cast<int>(c), i);
  Faces f;
  f.face_of_corner.assign(pd.crossings.size(), {-1, -1, -1, -1});
  for (std::size_t c0 = 0; c0 < pd.crossings.size(); ++c0) {
    for (int i0 = 0; i0 < 4; ++i0) {
      if (f.face_of_corner[c0][i0] >= 0) continue;
      int c = static_cast<int>(c0), i = i0;
      while (f.face_of_corner[c][i] < 0) {
        f.face_of_corner[c][i] = f.count;
        int out = (i + 1) % 4;
        const auto& e = ends.at(pd.crossings[c].edges[out]);
        auto other = e[0] == std::make_pair(c, out) ? e[1] : e[0];
        c = other.first;
        i = other.second;
      }
      ++f.count;
    }
  }
  return f;
}

}  // namespace

GoeritzMatrix goeritz(const diagrams::PDCode& pd) {
  GoeritzMatrix g;
  if (pd.crossings.empty()) {
    g.region_count = 2;
    return g;
  }
  diagrams::check_pd(pd);
  Faces faces = trace_faces(pd);
  g.region_count = faces.count;

  // Adjacent corners lie on opposite sides of an edge.
  std::vector<std::vector<int>> adj(faces.count);
  for (const auto& corners : faces.face_of_corner)
    for (int i = 0; i < 4; ++i) {
      adj[corners[i]].push_back(corners[(i + 1) % 4]);
      adj[corners[(i + 1) % 4]].push_back(corners[i]);
    }
  std::vector<int> colour(faces.count, -1);
  std::queue<int> q;
  colour[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int h : adj[f]) {
      if (colour[h] < 0) {
        colour[h] = 1 - colour[f];
        q.push(h);
      } else if (colour[h] == colour[f]) {
        throw StructuralError("diagram faces are not 2-colourable");
      }
    }
  }
  if (faces.count != static_cast<int>(pd.crossings.size()) + 2) {
    throw StructuralError("face count differs from crossings + 2");
  }

  // The face left of edge 1. Entering a crossing, the left side is the
  // corner clockwise of the edge; leaving, it is the one counterclockwise.
  int start_face = -1;
  for (std::size_t c = 0; c < pd.crossings.size() && start_face < 0; ++c)
    for (int i = 0; i < 4; ++i)
      if (pd.crossings[c].edges[i] == 1) {
        bool entering = pd.crossings[c].edges[(i + 2) % 4] == 2;
        start_face = entering ? faces.face_of_corner[c][(i + 3) % 4] : faces.face_of_corner[c][i];
        break;
      }
  const int white = colour[start_face];

  std::vector<int> index(faces.count, -1);
  g.indexed.push_back(start_face);
  for (int f = 0; f < faces.count; ++f)
    if (colour[f] == white && f != start_face) g.indexed.push_back(f);
  for (std::size_t k = 0; k < g.indexed.size(); ++k) index[g.indexed[k]] = static_cast<int>(k);

  const std::size_t m = g.indexed.size();
  IntMatrix full(m, std::vector<BigInt>(m, 0));
  for (const auto& corners : faces.face_of_corner) {
    bool even_white = colour[corners[0]] == white;
    int eta = even_white ? -1 : 1;
    int a = index[corners[even_white ? 0 : 1]], b = index[corners[even_white ? 2 : 3]];
    if (a == b) continue;
    full[a][b] -= eta;
    full[b][a] -= eta;
    full[a][a] += eta;
    full[b][b] += eta;
  }
  g.matrix.assign(m - 1, std::vector<BigInt>(m - 1));
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) g.matrix[i - 1][j - 1] = full[i][j];
  return g;
}

BigInt determinant(const diagrams::PDCode& pd) {
  BigInt d = integer_determinant(goeritz(pd).matrix);
  return d < 0 ? BigInt(-d) : d;
}

}  // namespace slicecert::covers

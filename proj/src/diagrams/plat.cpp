#include "slicecert/diagrams.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "slicecert/errors.hpp"

namespace slicecert::diagrams {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

void check_shape(const PlatWord& plat) {
  if (plat.strands < 2 || plat.strands % 2 != 0) {
    throw InputError("plat needs an even, positive strand count (got " +
                     std::to_string(plat.strands) + ")");
  }
  for (const Letter& l : plat.word) {
    if (l.gen < 1 || l.gen >= plat.strands) {
      throw InputError("letter g" + std::to_string(l.gen) + " out of range for " +
                       std::to_string(plat.strands) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

}  // namespace

int plat_components(const PlatWord& plat) {
  check_shape(plat);
  const int n = plat.strands;
  const int len = static_cast<int>(plat.word.size());
  auto id = [n](int pos, int level) { return level * n + (pos - 1); };
  UnionFind uf(n * (len + 1));
  for (int t = 0; t < len; ++t) {
    const int k = plat.word[t].gen;
    for (int p = 1; p <= n; ++p) {
      if (p == k) {
        uf.unite(id(k, t), id(k + 1, t + 1));
      } else if (p == k + 1) {
        uf.unite(id(k + 1, t), id(k, t + 1));
      } else {
        uf.unite(id(p, t), id(p, t + 1));
      }
    }
  }
  for (int i = 1; i < n; i += 2) {
    uf.unite(id(i, 0), id(i + 1, 0));
    uf.unite(id(i, len), id(i + 1, len));
  }
  int roots = 0;
  for (int s = 0; s < n * (len + 1); ++s) roots += uf.find(s) == s ? 1 : 0;
  return roots;
}

PlatHandle validate_plat(const PlatWord& plat) {
  const int comps = plat_components(plat);
  if (comps != 1) {
    throw InputError("plat closure has " + std::to_string(comps) +
                     " components; a knot is required");
  }
  PlatHandle h{plat, comps, {}};
  h.permutation.resize(plat.strands);
  for (int p = 1; p <= plat.strands; ++p) {
    int pos = p;
    for (const Letter& l : plat.word) {
      if (pos == l.gen) {
        pos = l.gen + 1;
      } else if (pos == l.gen + 1) {
        pos = l.gen;
      }
    }
    h.permutation[p - 1] = pos;
  }
  return h;
}

PlatWord mirror(const PlatWord& plat) {
  PlatWord out{plat.strands, {}};
  out.word.reserve(plat.word.size());
  for (auto it = plat.word.rbegin(); it != plat.word.rend(); ++it) {
    out.word.push_back({it->gen, -it->sign});
  }
  return out;
}

PlatWord reflect_left_right(const PlatWord& plat) {
  PlatWord out{plat.strands, {}};
  out.word.reserve(plat.word.size());
  for (const Letter& l : plat.word) out.word.push_back({plat.strands - l.gen, -l.sign});
  return out;
}

PlatWord parse_plat(std::istream& in) {
  PlatWord plat{0, {}};
  bool have_strands = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw InputError("plat line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_strands) {
      if (head != "strands" || !(ls >> plat.strands)) fail("expected 'strands N'");
      have_strands = true;
      continue;
    }
    if (head.size() < 2 || head[0] != 'g') fail("expected 'g<k> +|-', got '" + head + "'");
    int gen = 0;
    try {
      std::size_t used = 0;
      gen = std::stoi(head.substr(1), &used);
      if (used != head.size() - 1) fail("bad generator '" + head + "'");
    } catch (const std::logic_error&) {
      fail("bad generator '" + head + "'");
    }
    std::string sign;
    if (!(ls >> sign) || (sign != "+" && sign != "-")) fail("expected sign + or -");
    if (gen < 1 || gen >= plat.strands) {
      fail("letter " + head + " out of range for " + std::to_string(plat.strands) + " strands");
    }
    plat.word.push_back({gen, sign == "+" ? 1 : -1});
  }
  if (!have_strands) throw InputError("plat file has no 'strands' line");
  check_shape(plat);
  return plat;
}

PlatWord parse_plat_string(const std::string& text) {
  std::istringstream in(text);
  return parse_plat(in);
}

PlatWord load_plat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open plat file '" + path + "'");
  return parse_plat(in);
}

std::string format_plat(const PlatWord& plat) {
  std::ostringstream out;
  out << "strands " << plat.strands << "\n";
  for (const Letter& l : plat.word) out << 'g' << l.gen << ' ' << (l.sign > 0 ? '+' : '-') << "\n";
  return out.str();
}

std::vector<int> parse_twists(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw InputError("bad twist entry '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad twist entry '" + item + "'");
    }
  }
  return out;
}

bool TwistVector::all_even() const {
  for (int t : entries) {
    if (t % 2 != 0) return false;
  }
  return true;
}

bool TwistVector::all_zero() const {
  for (int t : entries) {
    if (t != 0) return false;
  }
  return true;
}

}  // namespace slicecert::diagrams

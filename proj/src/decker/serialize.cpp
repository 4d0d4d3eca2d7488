#include <istream>
#include <sstream>

#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::decker {

namespace {

// Non-empty, comment-stripped lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(n, line);
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string format_decker_set(const DeckerSet& ds) {
  std::ostringstream out;
  out << "decker " << ds.L << " " << ds.M << "\n";
  for (int c = 1; c <= ds.L; ++c) {
    out << "circle " << c << " pair " << ds.circle_pair[c] << (ds.circle_over[c] ? " over" : " under")
        << "\n";
  }
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    out << "sign " << i << (ds.pairs[i].sign > 0 ? " +" : " -") << "\n";
  }
  for (std::size_t j = 0; j < ds.bridge_region.size(); ++j) {
    out << "bridge " << j + 1 << " region " << ds.bridge_region[j] << "\n";
  }
  return out.str();
}

DeckerSet parse_decker_set(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError("empty decker set");
  DeckerSet ds;
  {
    std::istringstream head(lines[0].second);
    std::string kw;
    if (!(head >> kw >> ds.L >> ds.M) || kw != "decker" || ds.L < 0) {
      fail(lines[0].first, "expected 'decker L M'");
    }
  }
  ds.circle_pair.assign(ds.L + 1, -1);
  ds.circle_over.assign(ds.L + 1, false);
  std::vector<int> signs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [n, text] = lines[i];
    std::istringstream ls(text);
    std::string kw, a, b;
    int x = 0, y = 0;
    ls >> kw;
    if (kw == "circle") {
      if (!(ls >> x >> a >> y >> b) || a != "pair" || (b != "over" && b != "under")) {
        fail(n, "expected 'circle <idx> pair <i> over|under'");
      }
      if (x < 1 || x > ds.L || y < 0) fail(n, "circle index out of range");
      ds.circle_pair[x] = y;
      ds.circle_over[x] = b == "over";
      if (static_cast<int>(ds.pairs.size()) <= y) ds.pairs.resize(y + 1);
      (b == "over" ? ds.pairs[y].over_circle : ds.pairs[y].under_circle) = x;
    } else if (kw == "sign") {
      if (!(ls >> x >> a) || (a != "+" && a != "-") || x < 0) fail(n, "expected 'sign <i> +|-'");
      if (static_cast<int>(signs.size()) <= x) signs.resize(x + 1, 1);
      signs[x] = a == "+" ? 1 : -1;
    } else if (kw == "bridge") {
      if (!(ls >> x >> a >> y) || a != "region" || x != static_cast<int>(ds.bridge_region.size()) + 1) {
        fail(n, "expected 'bridge <j> region <r>' in order");
      }
      ds.bridge_region.push_back(y);
    } else {
      fail(n, "unknown keyword '" + kw + "'");
    }
  }
  for (std::size_t i = 0; i < ds.pairs.size() && i < signs.size(); ++i) ds.pairs[i].sign = signs[i];
  check_decker_set(ds);
  return ds;
}

std::string format_curve(const SliceCurve& c) {
  std::ostringstream out;
  out << "curve " << c.M << " rows";
  for (int h : c.rows) out << " " << h;
  out << "\n";
  const GridVertex& s = c.cycle.front();
  if (c.is_north(s)) out << "start N\n";
  else if (c.is_south(s)) out << "start S\n";
  else out << "start " << s.row << " " << s.lon << "\n";
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const GridVertex& a = c.cycle[i];
    const GridVertex& b = c.cycle[(i + 1) % c.cycle.size()];
    switch (classify_move(c, a, b)) {
      case MoveKind::kH:
        out << "move H " << ((a.lon + 1) % c.M == b.lon ? "+" : "-") << "\n";
        break;
      case MoveKind::kV:
        out << "move V " << (b.row > a.row ? "+" : "-") << "\n";
        break;
      case MoveKind::kX:
        out << "move X " << (b.row > a.row ? "+" : "-") << "\n";
        break;
      case MoveKind::kP:
        if (c.is_north(b)) out << "move P N\n";
        else if (c.is_south(b)) out << "move P S\n";
        else out << "move P " << b.lon << "\n";
        break;
    }
  }
  return out.str();
}

SliceCurve parse_curve(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.size() < 2) throw InputError("curve needs a header and a start line");
  SliceCurve c;
  {
    std::istringstream head(lines[0].second);
    std::string kw, rows;
    if (!(head >> kw >> c.M >> rows) || kw != "curve" || rows != "rows") {
      fail(lines[0].first, "expected 'curve M rows h0 h1 ...'");
    }
    for (int h; head >> h;) c.rows.push_back(h);
    if (c.rows.empty()) fail(lines[0].first, "missing row heights");
    if (c.M < 4 || c.M % 2) fail(lines[0].first, "resolution must be even and at least 4");
  }
  const int R = c.total_rows();
  GridVertex cur;
  {
    std::istringstream ls(lines[1].second);
    std::string kw, a;
    ls >> kw >> a;
    if (kw != "start") fail(lines[1].first, "expected 'start N|S|<row> <lon>'");
    if (a == "N") cur = {-1, 0};
    else if (a == "S") cur = {R, 0};
    else {
      int lon;
      if (!(ls >> lon)) fail(lines[1].first, "expected 'start <row> <lon>'");
      cur = {std::stoi(a), lon};
    }
  }
  const GridVertex start = cur;
  c.cycle.push_back(cur);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [n, text] = lines[i];
    std::istringstream ls(text);
    std::string kw, kind, arg;
    if (!(ls >> kw >> kind >> arg) || kw != "move") fail(n, "expected 'move H|V|X|P <arg>'");
    if (kind == "H" && (arg == "+" || arg == "-")) {
      cur.lon = ((cur.lon + (arg == "+" ? 1 : -1)) % c.M + c.M) % c.M;
    } else if ((kind == "V" || kind == "X") && (arg == "+" || arg == "-")) {
      cur.row += arg == "+" ? 1 : -1;
    } else if (kind == "P") {
      if (arg == "N") cur = {-1, 0};
      else if (arg == "S") cur = {R, 0};
      else cur = {cur.row < 0 ? 0 : R - 1, std::stoi(arg)};
    } else {
      fail(n, "unknown move '" + kind + " " + arg + "'");
    }
    GridVertex prev = c.cycle.back();
    MoveKind k;
    try {
      k = classify_move(c, prev, cur);
    } catch (const StructuralError& e) {
      fail(n, e.what());
    }
    if ((kind == "X") != (k == MoveKind::kX) || (kind == "V") != (k == MoveKind::kV)) {
      fail(n, "move kind " + kind + " does not match the grid");
    }
    if (i + 1 == lines.size()) {
      if (!(cur == start)) fail(n, "curve does not return to its start");
    } else {
      c.cycle.push_back(cur);
    }
  }
  return c;
}

}  // namespace slicecert::decker

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "slicecert/errors.hpp"
#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {

bool GroupPresentation::has_meridians() const {
  return std::find(meridian.begin(), meridian.end(), true) != meridian.end();
}

int GroupPresentation::first_meridian() const {
  for (std::size_t g = 0; g < meridian.size(); ++g) {
    if (meridian[g]) return static_cast<int>(g) + 1;
  }
  return 0;
}

void check_presentation(const GroupPresentation& pres) {
  if (pres.generators < 0) throw InputError("negative generator count");
  if (!pres.meridian.empty() && static_cast<int>(pres.meridian.size()) != pres.generators) {
    throw InputError("meridian marking size does not match generator count");
  }
  for (const Word& r : pres.relators) {
    for (int x : r) {
      if (x == 0 || std::abs(x) > pres.generators) {
        throw InputError("relator letter " + std::to_string(x) + " references a missing generator");
      }
    }
  }
}

bool certify_meridian_conjugacy(GroupPresentation& pres) {
  pres.meridians_conjugate = false;
  if (!pres.has_meridians()) return false;
  std::vector<int> parent(pres.generators + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Word& r : pres.relators) {
    if (r.size() == 4 && r[0] == -r[2] && r[1] > 0 && r[3] < 0) {
      parent[find(r[1])] = find(-r[3]);
    } else if (r.size() == 2 && (r[0] > 0) != (r[1] > 0)) {
      parent[find(std::abs(r[0]))] = find(std::abs(r[1]));
    }
  }
  const int root = find(pres.first_meridian());
  for (int g = 1; g <= pres.generators; ++g) {
    if (pres.meridian[g - 1] && find(g) != root) return false;
  }
  pres.meridians_conjugate = true;
  return true;
}

GroupPresentation parse_presentation(std::istream& in) {
  GroupPresentation pres;
  bool have_gens = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw InputError("presentation line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_gens) {
      if (head != "gens" || !(ls >> pres.generators)) fail("expected 'gens N'");
      have_gens = true;
      continue;
    }
    if (head == "meridians") {
      pres.meridian.assign(pres.generators, false);
      int g = 0;
      while (ls >> g) {
        if (g < 1 || g > pres.generators) fail("meridian index out of range");
        pres.meridian[g - 1] = true;
      }
      continue;
    }
    Word r;
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(tok, &used));
        if (used != tok.size()) fail("bad letter '" + tok + "'");
      } catch (const std::logic_error&) {
        fail("bad letter '" + tok + "'");
      }
    }
    pres.relators.push_back(r);
  }
  if (!have_gens) throw InputError("presentation has no 'gens' line");
  check_presentation(pres);
  certify_meridian_conjugacy(pres);
  return pres;
}

GroupPresentation parse_presentation_string(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

std::string format_presentation(const GroupPresentation& pres) {
  std::ostringstream out;
  out << "gens " << pres.generators << "\n";
  if (pres.has_meridians()) {
    out << "meridians";
    for (int g = 1; g <= pres.generators; ++g) {
      if (pres.meridian[g - 1]) out << ' ' << g;
    }
    out << "\n";
  }
  for (const Word& r : pres.relators) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << "\n";
  }
  return out.str();
}

GroupPresentation normalize(const GroupPresentation& pres) {
  GroupPresentation out = pres;
  out.relators.clear();
  std::set<Word> seen;
  for (const Word& r : pres.relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (seen.insert(w).second) out.relators.push_back(std::move(w));
  }
  return out;
}

namespace {

std::size_t total_length(const std::vector<Word>& rels) {
  std::size_t n = 0;
  for (const Word& r : rels) n += r.size();
  return n;
}

Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  const Word inv = inverse(image);
  for (int x : w) {
    if (x == gen) {
      out.insert(out.end(), image.begin(), image.end());
    } else if (x == -gen) {
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(out);
}

}  // namespace

GroupPresentation simplify(const GroupPresentation& pres, std::size_t max_total_length) {
  check_presentation(pres);
  GroupPresentation cur = normalize(pres);
  if (cur.meridian.empty()) cur.meridian.assign(cur.generators, false);
  const bool had_marks = pres.has_meridians();

  while (true) {
    // shortest relator containing some generator exactly once
    int best_rel = -1, best_gen = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < cur.relators.size(); ++i) {
      const Word& r = cur.relators[i];
      if (best_rel >= 0 && r.size() >= best_len) continue;
      std::vector<int> count(cur.generators + 1, 0);
      for (int x : r) ++count[std::abs(x)];
      for (int x : r) {
        if (count[std::abs(x)] == 1) {
          best_rel = static_cast<int>(i);
          best_gen = std::abs(x);
          best_len = r.size();
          break;
        }
      }
    }
    if (best_rel < 0) break;

    // r = u g^e v  =>  g = (u^-1 v^-1)^e
    const Word& r = cur.relators[best_rel];
    std::size_t at = 0;
    while (std::abs(r[at]) != best_gen) ++at;
    const Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(at));
    const Word v(r.begin() + static_cast<std::ptrdiff_t>(at) + 1, r.end());
    Word image = concat(inverse(u), inverse(v));
    if (r[at] < 0) image = inverse(image);

    std::vector<Word> next;
    for (std::size_t i = 0; i < cur.relators.size(); ++i) {
      if (static_cast<int>(i) == best_rel) continue;
      next.push_back(substitute(cur.relators[i], best_gen, image));
    }
    if (total_length(next) > max_total_length) break;

    // drop the generator and renumber
    GroupPresentation reduced;
    reduced.generators = cur.generators - 1;
    reduced.meridians_conjugate = cur.meridians_conjugate;
    for (int g = 1; g <= cur.generators; ++g) {
      if (g != best_gen) reduced.meridian.push_back(cur.meridian[g - 1]);
    }
    for (Word& w : next) {
      for (int& x : w) {
        const int a = std::abs(x);
        if (a > best_gen) x = x > 0 ? x - 1 : x + 1;
      }
      reduced.relators.push_back(std::move(w));
    }
    cur = normalize(reduced);
  }
  if (!had_marks) cur.meridian.clear();
  if (!cur.has_meridians()) cur.meridians_conjugate = false;
  return cur;
}

}  // namespace slicecert::groups

#include "frontkit/ribbon.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"

namespace fk {

namespace {

// Band ends as darts: dart 2i is bands[i].a, dart 2i+1 is bands[i].b.
struct Darts {
  std::vector<int> disk;                  // dart -> disk
  std::vector<int> position;              // dart -> index in that disk's cycle
  std::vector<std::vector<int>> cycle;    // disk -> darts in cyclic order
  std::vector<int> twist;                 // dart -> half-twist parity of its band
};

Darts make_darts(const DiskBandSurface& s) {
  Darts out;
  const int n = static_cast<int>(s.bands.size()) * 2;
  out.disk.assign(n, 0);
  out.position.assign(n, 0);
  out.twist.assign(n, 0);
  out.cycle.assign(s.disks.size(), {});
  std::map<std::pair<int, int>, int> at;
  for (int i = 0; i < static_cast<int>(s.bands.size()); ++i) {
    const Band& b = s.bands[i];
    at[{b.a.disk, b.a.slot}] = 2 * i;
    at[{b.b.disk, b.b.slot}] = 2 * i + 1;
    out.twist[2 * i] = out.twist[2 * i + 1] = ((b.half_twists % 2) + 2) % 2;
  }
  for (int d = 0; d < static_cast<int>(s.order.size()); ++d) {
    for (int slot : s.order[d]) {
      const int dart = at.at({d, slot});
      out.disk[dart] = d;
      out.position[dart] = static_cast<int>(out.cycle[d].size());
      out.cycle[d].push_back(dart);
    }
  }
  return out;
}

int partner(int dart) { return dart ^ 1; }

int step_around(const Darts& g, int dart, int direction) {
  const auto& cyc = g.cycle[g.disk[dart]];
  const int m = static_cast<int>(cyc.size());
  return cyc[((g.position[dart] + direction) % m + m) % m];
}

std::vector<int> component_of_disks(const DiskBandSurface& s) {
  std::vector<int> parent(s.disks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Band& b : s.bands) parent[find(b.a.disk)] = find(b.b.disk);
  std::vector<int> comp(s.disks.size());
  for (std::size_t d = 0; d < s.disks.size(); ++d) comp[d] = find(static_cast<int>(d));
  return comp;
}

// Orientable iff disk orientations can be chosen so that every band joins
// them with even twist parity.
bool orientable(const DiskBandSurface& s) {
  std::vector<int> sign(s.disks.size(), -1);
  std::vector<std::vector<std::pair<int, int>>> adj(s.disks.size());
  for (const Band& b : s.bands) {
    const int parity = ((b.half_twists % 2) + 2) % 2;
    adj[b.a.disk].push_back({b.b.disk, parity});
    adj[b.b.disk].push_back({b.a.disk, parity});
  }
  for (std::size_t root = 0; root < s.disks.size(); ++root) {
    if (sign[root] >= 0) continue;
    sign[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int d = queue.front();
      queue.pop_front();
      for (auto [e, parity] : adj[d]) {
        const int want = sign[d] ^ parity;
        if (sign[e] < 0) {
          sign[e] = want;
          queue.push_back(e);
        } else if (sign[e] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

int disk_index(const DiskBandSurface& s, const std::string& id, int line, int col) {
  auto it = std::find(s.disks.begin(), s.disks.end(), id);
  if (it == s.disks.end()) throw ParseError(line, col, "unknown disk '" + id + "'");
  return static_cast<int>(it - s.disks.begin());
}

int parse_int(const std::string& text, int line, int col) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, col, "expected an integer, got '" + text + "'");
}

// Disk code rooted at (disk, position): disks are numbered in discovery order
// and each dart records its band's twist parity and where its partner sits.
std::vector<int> rooted_code(const Darts& g, int root_disk, int root_position) {
  const int disks = static_cast<int>(g.cycle.size());
  std::vector<int> label(disks, -1), start(disks, 0);
  std::vector<int> queue{root_disk};
  label[root_disk] = 0;
  start[root_disk] = root_position;
  std::vector<int> code;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int d = queue[qi];
    const auto& cyc = g.cycle[d];
    const int m = static_cast<int>(cyc.size());
    code.push_back(m);
    for (int k = 0; k < m; ++k) {
      const int dart = cyc[(start[d] + k) % m];
      const int other = partner(dart);
      const int od = g.disk[other];
      if (label[od] < 0) {
        label[od] = static_cast<int>(queue.size());
        start[od] = g.position[other];
        queue.push_back(od);
      }
      const int om = static_cast<int>(g.cycle[od].size());
      code.push_back(g.twist[dart]);
      code.push_back(label[od]);
      code.push_back(((g.position[other] - start[od]) % om + om) % om);
    }
  }
  return code;
}

bool reached(const SurfaceInvariants& inv, SurfaceTarget target) {
  return target == SurfaceTarget::Planar ? inv.genus == 0 : inv.boundary_components == 1;
}

}  // namespace

DiskBandSurface parse_ribbon(std::string_view text) {
  DiskBandSurface s;
  std::vector<bool> ordered;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = line.find_first_not_of(" \t\r"); i != std::string::npos;) {
      const std::size_t j = std::min(line.find_first_of(" \t\r", i), line.size());
      tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = line.find_first_not_of(" \t\r", j);
    }
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].first;
    auto foot = [&](std::size_t i) {
      const auto& [tok, col] = tokens[i];
      const auto dot = tok.rfind('.');
      if (dot == std::string::npos) throw ParseError(line_no, col, "expected <disk>.<slot>, got '" + tok + "'");
      return Foot{disk_index(s, tok.substr(0, dot), line_no, col), parse_int(tok.substr(dot + 1), line_no, col)};
    };
    if (head == "disk") {
      if (tokens.size() != 2) throw ParseError(line_no, 1, "expected 'disk <id>'");
      if (std::find(s.disks.begin(), s.disks.end(), tokens[1].first) != s.disks.end())
        throw ParseError(line_no, tokens[1].second, "duplicate disk '" + tokens[1].first + "'");
      s.disks.push_back(tokens[1].first);
      s.order.emplace_back();
      ordered.push_back(false);
    } else if (head == "band") {
      if (tokens.size() != 4 && tokens.size() != 6)
        throw ParseError(line_no, 1, "expected 'band <id> <disk.slot> <disk.slot> [twists n]'");
      Band b{tokens[1].first, foot(2), foot(3), 0};
      if (tokens.size() == 6) {
        if (tokens[4].first != "twists") throw ParseError(line_no, tokens[4].second, "expected 'twists'");
        b.half_twists = parse_int(tokens[5].first, line_no, tokens[5].second);
      }
      s.bands.push_back(b);
    } else if (head == "order") {
      if (tokens.size() < 2 || tokens[1].first.back() != ':')
        throw ParseError(line_no, 1, "expected 'order <disk>: <slots>'");
      const int d = disk_index(s, tokens[1].first.substr(0, tokens[1].first.size() - 1), line_no, tokens[1].second);
      if (ordered[d]) throw ParseError(line_no, 1, "second order line for disk '" + s.disks[d] + "'");
      ordered[d] = true;
      for (std::size_t i = 2; i < tokens.size(); ++i)
        s.order[d].push_back(parse_int(tokens[i].first, line_no, tokens[i].second));
    } else {
      throw ParseError(line_no, tokens[0].second, "unknown statement '" + head + "'");
    }
  }
  for (std::size_t d = 0; d < s.disks.size(); ++d) {
    if (ordered[d]) continue;
    for (const Band& b : s.bands)
      for (const Foot& f : {b.a, b.b})
        if (f.disk == static_cast<int>(d)) s.order[d].push_back(f.slot);
    std::sort(s.order[d].begin(), s.order[d].end());
  }
  validate_surface(s);
  return s;
}

std::string serialize_ribbon(const DiskBandSurface& s) {
  std::ostringstream os;
  for (const std::string& d : s.disks) os << "disk " << d << "\n";
  for (const Band& b : s.bands) {
    os << "band " << b.id << " " << s.disks[b.a.disk] << "." << b.a.slot << " " << s.disks[b.b.disk] << "."
       << b.b.slot;
    if (b.half_twists != 0) os << " twists " << b.half_twists;
    os << "\n";
  }
  for (std::size_t d = 0; d < s.disks.size(); ++d) {
    os << "order " << s.disks[d] << ":";
    for (int slot : s.order[d]) os << " " << slot;
    os << "\n";
  }
  return os.str();
}

DiskBandSurface load_ribbon(const std::string& path) { return parse_ribbon(read_text_file(path)); }

void validate_surface(const DiskBandSurface& s) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::Validation, what); };
  if (s.order.size() != s.disks.size()) bad("ribbon: one cyclic order per disk is required");
  std::set<std::pair<int, int>> feet;
  std::set<std::string> ids;
  const int disks = static_cast<int>(s.disks.size());
  for (const Band& b : s.bands) {
    if (!ids.insert(b.id).second) bad("ribbon: duplicate band '" + b.id + "'");
    for (const Foot& f : {b.a, b.b}) {
      if (f.disk < 0 || f.disk >= disks) bad("ribbon: band '" + b.id + "' attaches to a missing disk");
      if (!feet.insert({f.disk, f.slot}).second)
        bad("ribbon: slot " + s.disks[f.disk] + "." + std::to_string(f.slot) + " holds two feet");
    }
  }
  for (int d = 0; d < disks; ++d) {
    std::vector<int> want;
    for (const auto& [disk, slot] : feet)
      if (disk == d) want.push_back(slot);
    std::vector<int> got = s.order[d];
    std::sort(got.begin(), got.end());
    if (got != want) bad("ribbon: order of disk '" + s.disks[d] + "' is not a permutation of its feet");
  }
}

bool is_connected(const DiskBandSurface& s) {
  const std::vector<int> comp = component_of_disks(s);
  return std::set<int>(comp.begin(), comp.end()).size() <= 1;
}

SurfaceInvariants surface_invariants(const DiskBandSurface& s) {
  validate_surface(s);
  const Darts g = make_darts(s);
  const int darts = static_cast<int>(g.disk.size());
  // State (dart, dir): arrived at `dart` along a disk boundary running in
  // direction dir. Each boundary circle is met once per orientation.
  std::vector<std::array<bool, 2>> seen(darts, {false, false});
  int orbits = 0;
  for (int start = 0; start < darts; ++start) {
    for (int sd = 0; sd < 2; ++sd) {
      if (seen[start][sd]) continue;
      ++orbits;
      int dart = start, dir = sd;
      while (!seen[dart][dir]) {
        seen[dart][dir] = true;
        const int across = partner(dart);
        dir ^= g.twist[dart];
        dart = step_around(g, across, dir ? -1 : 1);
      }
    }
  }
  int bare = 0;
  for (const auto& cyc : g.cycle) bare += cyc.empty() ? 1 : 0;
  const std::vector<int> comp = component_of_disks(s);

  SurfaceInvariants inv;
  inv.components = static_cast<int>(std::set<int>(comp.begin(), comp.end()).size());
  inv.boundary_components = orbits / 2 + bare;
  inv.euler = static_cast<int>(s.disks.size()) - static_cast<int>(s.bands.size());
  inv.orientable = orientable(s);
  const int deficit = 2 * inv.components - inv.euler - inv.boundary_components;
  inv.genus = inv.orientable ? deficit / 2 : deficit;
  return inv;
}

DiskBandSurface clasp_transpose(const DiskBandSurface& s, int disk, int position) {
  if (disk < 0 || disk >= static_cast<int>(s.disks.size())) fail_precondition("clasp transpose: no such disk");
  const int m = static_cast<int>(s.order[disk].size());
  if (m < 2) fail_precondition("clasp transpose: disk '" + s.disks[disk] + "' carries fewer than two feet");
  if (position < 0 || position >= m)
    fail_precondition("clasp transpose: position " + std::to_string(position) + " outside 0.." +
                      std::to_string(m - 1));
  DiskBandSurface out = s;
  std::swap(out.order[disk][position], out.order[disk][(position + 1) % m]);
  return out;
}

std::string canonical_code(const DiskBandSurface& s) {
  if (!is_connected(s)) fail_precondition("canonical code: surface is disconnected");
  const Darts g = make_darts(s);
  std::vector<int> best;
  if (g.disk.empty()) {
    best = {static_cast<int>(s.disks.size()), 0};
  } else {
    for (int d = 0; d < static_cast<int>(g.cycle.size()); ++d)
      for (int p = 0; p < static_cast<int>(g.cycle[d].size()); ++p) {
        std::vector<int> code = rooted_code(g, d, p);
        if (best.empty() || code < best) best = std::move(code);
      }
  }
  std::string out;
  for (int v : best) out += std::to_string(v) + ",";
  return out;
}

SurfaceNormalization normalize_surface(const DiskBandSurface& s, SurfaceTarget target, std::size_t node_cap) {
  validate_surface(s);
  if (!is_connected(s)) fail_precondition("normalize surface: surface is disconnected");
  for (const Band& b : s.bands)
    if (b.half_twists % 2 != 0)
      fail_precondition("normalize surface: band '" + b.id + "' has an odd twist; normalization needs untwisted bands");
  const SurfaceInvariants start = surface_invariants(s);
  if (target == SurfaceTarget::ConnectedBoundary && start.euler % 2 == 0)
    fail_precondition("normalize surface: connected boundary needs odd Euler characteristic, got " +
                      std::to_string(start.euler));

  struct Node {
    DiskBandSurface surface;
    int parent;
    TransposeStep step;
  };
  std::vector<Node> nodes{{s, -1, {}}};
  std::unordered_map<std::string, int> seen{{canonical_code(s), 0}};
  auto finish = [&](int at) {
    SurfaceNormalization out;
    out.result = nodes[at].surface;
    out.invariants = surface_invariants(out.result);
    out.explored = nodes.size();
    for (int i = at; nodes[i].parent >= 0; i = nodes[i].parent) out.steps.push_back(nodes[i].step);
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
  };
  if (reached(start, target)) return finish(0);
  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    for (int d = 0; d < static_cast<int>(s.disks.size()); ++d) {
      const int m = static_cast<int>(nodes[qi].surface.order[d].size());
      if (m < 3) continue;  // two feet: a transposition is a rotation
      for (int p = 0; p < m; ++p) {
        DiskBandSurface next = clasp_transpose(nodes[qi].surface, d, p);
        if (!seen.emplace(canonical_code(next), static_cast<int>(nodes.size())).second) continue;
        nodes.push_back({std::move(next), static_cast<int>(qi), {d, p}});
        if (reached(surface_invariants(nodes.back().surface), target)) return finish(static_cast<int>(nodes.size()) - 1);
        if (nodes.size() >= node_cap)
          fail_precondition("normalize surface: search budget of " + std::to_string(node_cap) + " surfaces exceeded");
      }
    }
  }
  fail_precondition("normalize surface: none of the " + std::to_string(nodes.size()) +
                    " surfaces reachable by clasp transpositions has " +
                    (target == SurfaceTarget::Planar ? "genus 0" : "one boundary component"));
}

std::vector<DiskBandSurface> enumerate_surfaces(int max_bands, bool twisted) {
  std::vector<DiskBandSurface> out;
  std::set<std::string> codes;
  for (int bands = 0; bands <= max_bands; ++bands) {
    for (int disks = 1; disks <= bands + 1; ++disks) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < disks; ++i)
        for (int j = i; j < disks; ++j) pairs.push_back({i, j});
      // Nondecreasing choices of band endpoints, then twist parities, then cyclic orders.
      std::vector<int> pick(bands, 0);
      while (true) {
        DiskBandSurface base;
        for (int d = 0; d < disks; ++d) base.disks.push_back("D" + std::to_string(d + 1));
        base.order.assign(disks, {});
        std::vector<int> next_slot(disks, 1);
        for (int b = 0; b < bands; ++b) {
          auto [i, j] = pairs[pick[b]];
          Band band{"b" + std::to_string(b + 1), {i, next_slot[i]++}, {j, next_slot[j]++}, 0};
          base.bands.push_back(band);
        }
        for (int d = 0; d < disks; ++d)
          for (int slot = 1; slot < next_slot[d]; ++slot) base.order[d].push_back(slot);
        if (is_connected(base)) {
          const int twist_masks = twisted ? 1 << bands : 1;
          for (int mask = 0; mask < twist_masks; ++mask) {
            DiskBandSurface t = base;
            for (int b = 0; b < bands; ++b) t.bands[b].half_twists = (mask >> b) & 1;
            // Cyclic orders: permute all but the first slot of each disk.
            std::vector<std::vector<int>> perms(disks);
            for (int d = 0; d < disks; ++d) perms[d] = t.order[d];
            std::function<void(int)> rec = [&](int d) {
              if (d == disks) {
                for (int e = 0; e < disks; ++e) t.order[e] = perms[e];
                if (codes.insert(canonical_code(t)).second) out.push_back(t);
                return;
              }
              auto& p = perms[d];
              if (p.size() <= 2) {
                rec(d + 1);
                return;
              }
              std::sort(p.begin() + 1, p.end());
              do {
                rec(d + 1);
              } while (std::next_permutation(p.begin() + 1, p.end()));
            };
            rec(0);
          }
        }
        int b = bands - 1;
        while (b >= 0 && pick[b] == static_cast<int>(pairs.size()) - 1) --b;
        if (b < 0) break;
        ++pick[b];
        for (int c = b + 1; c < bands; ++c) pick[c] = pick[b];
      }
    }
  }
  return out;
}

}  // namespace fk

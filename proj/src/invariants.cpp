#include "frontkit/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "frontkit/error.hpp"

namespace fk {

namespace {

std::pair<ComponentId, ComponentId> key(ComponentId a, ComponentId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Assertion, "integer overflow in Smith form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Assertion, "integer overflow in Smith form");
  return r;
}

void require_closed(const Trace& tr, ComponentId c, const FrontDiagram& d) {
  if (!tr.path(c).closed) fail_precondition("component '" + d.attr(c).label + "' is not closed");
}

}  // namespace

CrossingData::CrossingData(const FrontDiagram& d) : trace_(d) {
  for (const ComponentAttr& a : d.components) orientation_.push_back(a.orientation);
  for (int j = 0; j < static_cast<int>(d.events.size()); ++j) {
    const Event& e = d.events[static_cast<std::size_t>(j)];
    if (e.kind != EventKind::Crossing) continue;
    const Node lo{j, e.position}, hi{j, e.position + 1};
    const int sign = oriented_direction(lo) == oriented_direction(hi) ? 1 : -1;
    auto& entry = pairs_[key(trace_.owner(lo), trace_.owner(hi))];
    entry.first += sign;
    entry.second += 1;
  }
}

int CrossingData::oriented_direction(Node n) const {
  const int dir = trace_.direction(n);
  return orientation_[static_cast<std::size_t>(trace_.owner(n) - 1)] == Orientation::Backward ? -dir : dir;
}

int CrossingData::writhe(ComponentId c) const {
  auto it = pairs_.find({c, c});
  return it == pairs_.end() ? 0 : it->second.first;
}

int CrossingData::signed_crossings(ComponentId a, ComponentId b) const {
  auto it = pairs_.find(key(a, b));
  return it == pairs_.end() ? 0 : it->second.first;
}

int CrossingData::crossings_between(ComponentId a, ComponentId b) const {
  auto it = pairs_.find(key(a, b));
  return it == pairs_.end() ? 0 : it->second.second;
}

int CrossingData::self_crossings(ComponentId c) const { return crossings_between(c, c); }

ClassicalInvariants classical_invariants(const FrontDiagram& d, ComponentId c) {
  if (d.spin != 0) fail_precondition("classical invariants are only defined for spin 0");
  if (c < 1 || c > d.component_count()) fail_precondition("no component " + std::to_string(c));
  CrossingData cd(d);
  const Trace& tr = cd.trace();
  require_closed(tr, c, d);
  ClassicalInvariants out;
  out.writhe = cd.writhe(c);
  for (int j = 0; j < static_cast<int>(d.events.size()); ++j) {
    const Event& e = d.events[static_cast<std::size_t>(j)];
    if (e.kind == EventKind::LeftCusp) {
      const Node upper{j + 1, e.position + 1};
      if (tr.owner(upper) != c) continue;
      ++out.left_cusps;
      // Arriving along the upper branch (moving left) and leaving along the lower one.
      if (cd.oriented_direction(upper) < 0) ++out.down_cusps;
      else ++out.up_cusps;
    } else if (e.kind == EventKind::RightCusp) {
      const Node upper{j, e.position + 1};
      if (tr.owner(upper) != c) continue;
      ++out.right_cusps;
      if (cd.oriented_direction(upper) > 0) ++out.down_cusps;
      else ++out.up_cusps;
    }
  }
  out.tb = out.writhe - out.right_cusps;
  out.rot = (out.down_cusps - out.up_cusps) / 2;
  return out;
}

int linking_number(const FrontDiagram& d, ComponentId a, ComponentId b) {
  if (a == b) fail_precondition("linking number needs two distinct components");
  CrossingData cd(d);
  require_closed(cd.trace(), a, d);
  require_closed(cd.trace(), b, d);
  return cd.signed_crossings(a, b) / 2;
}

HandleCensus handle_census(const FrontDiagram& d) {
  const int n = d.spin + 2;
  HandleCensus out;
  out.counts[0] = 1;
  CrossingData cd(d);
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const ComponentAttr& a = d.attr(c);
    int index = -1;
    if (a.coefficient == Coefficient::Minus) {
      index = n;
    } else if (a.coefficient == Coefficient::Plus) {
      if (a.node_plus && a.node_minus) index = n + 1;
      else if (a.node_plus || a.node_minus)
        fail_precondition("component '" + a.label + "' has a (+1) coefficient and only one node");
      else if (cd.self_crossings(c) != 0)
        fail_precondition("(+1) component '" + a.label + "' without nodes must be a crossingless unknot");
      else index = n - 1;
    }
    if (index >= 0) ++out.counts[index];
  }
  out.euler = 0;
  for (const auto& [k, count] : out.counts) out.euler += (k % 2 == 0 ? 1 : -1) * count;
  return out;
}

LinkingData linking_matrix(const FrontDiagram& d) {
  if (d.spin != 0) fail_precondition("linking data is only defined for spin 0");
  CrossingData cd(d);
  LinkingData out;
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const ComponentAttr& a = d.attr(c);
    if (a.coefficient == Coefficient::Minus) {
      require_closed(cd.trace(), c, d);
      out.minus_components.push_back(c);
    } else if (a.coefficient == Coefficient::Plus && !a.node_plus && !a.node_minus) {
      out.plus_unknots.push_back(c);
    }
  }
  const std::size_t k = out.minus_components.size();
  out.matrix.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ComponentId a = out.minus_components[i], b = out.minus_components[j];
      out.matrix[i][j] = i == j ? classical_invariants(d, a).tb - 1 : cd.signed_crossings(a, b) / 2;
    }
  }
  out.over_ones.assign(k, std::vector<int>(out.plus_unknots.size(), 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < out.plus_unknots.size(); ++j)
      out.over_ones[i][j] = cd.crossings_between(out.minus_components[i], out.plus_unknots[j]) / 2;
  return out;
}

std::vector<std::int64_t> smith_invariant_factors(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t rank_bound = std::min(rows, cols);
  for (std::size_t k = 0; k < rank_bound; ++k) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[k], m[pr]);
      for (auto& row : m) std::swap(row[k], row[pc]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        const std::int64_t q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[k][j]));
        if (m[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        const std::int64_t q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][k]));
        if (m[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple entry into the pivot row.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols && divides; ++j)
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t c = k; c < cols; ++c) m[k][c] += m[i][c];
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> torsion;
  int free_rank = static_cast<int>(rows) - static_cast<int>(rank_bound);
  for (std::size_t k = 0; k < rank_bound; ++k) {
    const std::int64_t v = std::llabs(m[k][k]);
    if (v == 0) ++free_rank;
    else if (v > 1) torsion.push_back(v);
  }
  std::sort(torsion.begin(), torsion.end());
  for (int i = 0; i < free_rank; ++i) torsion.push_back(0);
  return torsion;
}

std::vector<std::vector<std::int64_t>> surgery_matrix(const FrontDiagram& d) {
  if (d.spin != 0) fail_precondition("homology presentation is only defined for spin 0");
  CrossingData cd(d);
  std::vector<ComponentId> comps;
  for (ComponentId c = 1; c <= d.component_count(); ++c)
    if (d.attr(c).coefficient != Coefficient::None) {
      require_closed(cd.trace(), c, d);
      comps.push_back(c);
    }
  const std::size_t k = comps.size();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const ComponentId a = comps[i], b = comps[j];
      if (i == j) {
        const int shift = d.attr(a).coefficient == Coefficient::Minus ? -1 : 1;
        m[i][j] = classical_invariants(d, a).tb + shift;
      } else {
        m[i][j] = cd.signed_crossings(a, b) / 2;
      }
    }
  return m;
}

std::vector<std::int64_t> homology_presentation(const FrontDiagram& d) {
  return smith_invariant_factors(surgery_matrix(d));
}

}  // namespace fk

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fk {

// A band end: the disk it attaches to and its slot label on that disk.
struct Foot {
  int disk = 0;
  int slot = 0;
  friend bool operator==(const Foot&, const Foot&) = default;
};

struct Band {
  std::string id;
  Foot a;
  Foot b;
  int half_twists = 0;
  friend bool operator==(const Band&, const Band&) = default;
};

// Disks with bands attached along their boundaries. `order[d]` lists the slot
// labels of disk d in cyclic (counterclockwise) order. Embedding data is not
// recorded; only the abstract surface matters.
struct DiskBandSurface {
  std::vector<std::string> disks;
  std::vector<Band> bands;
  std::vector<std::vector<int>> order;
  friend bool operator==(const DiskBandSurface&, const DiskBandSurface&) = default;
};

struct SurfaceInvariants {
  int genus = 0;  // crosscap number when non-orientable
  int boundary_components = 0;
  int euler = 0;
  bool orientable = true;
  int components = 1;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// `.ribbon` text: `disk <id>`, `band <id> <disk.slot> <disk.slot> [twists n]`,
// `order <disk>: <slot list>`; disks without an order line use ascending slots.
DiskBandSurface parse_ribbon(std::string_view text);
std::string serialize_ribbon(const DiskBandSurface& s);
DiskBandSurface load_ribbon(const std::string& path);

// Throws Error(Validation) when feet collide or an order is not a permutation
// of the feet on its disk.
void validate_surface(const DiskBandSurface& s);
bool is_connected(const DiskBandSurface& s);

// Boundary tracing over band ends with a direction flag flipped by odd twists.
SurfaceInvariants surface_invariants(const DiskBandSurface& s);

// Swaps the feet at cyclic positions `position` and `position + 1` of `disk`.
DiskBandSurface clasp_transpose(const DiskBandSurface& s, int disk, int position);

// Code of the surface up to renaming of disks, bands and slots and rotation of
// each cyclic order. Equal codes mean identical ribbon structures.
std::string canonical_code(const DiskBandSurface& s);

enum class SurfaceTarget { Planar, ConnectedBoundary };

struct TransposeStep {
  int disk = 0;
  int position = 0;
  friend bool operator==(const TransposeStep&, const TransposeStep&) = default;
};

struct SurfaceNormalization {
  std::vector<TransposeStep> steps;
  DiskBandSurface result;
  SurfaceInvariants invariants;
  std::size_t explored = 0;
};

// Breadth-first search over clasp transpositions for the nearest surface with
// genus 0 (Planar) or one boundary component (ConnectedBoundary). Requires a
// connected surface with untwisted bands; ConnectedBoundary also needs odd
// Euler characteristic. Fails when `node_cap` surfaces were explored or the
// reachable class holds no target.
SurfaceNormalization normalize_surface(const DiskBandSurface& s, SurfaceTarget target,
                                       std::size_t node_cap = 500000);

// Every connected surface with up to `max_bands` bands, one per canonical
// code; with `twisted` bands also take half-twist parity 1.
std::vector<DiskBandSurface> enumerate_surfaces(int max_bands, bool twisted);

}  // namespace fk

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfn.hpp"
#include "railway.hpp"

// Abstract tile assembly on the integer lattice: square tiles with glue
// labels attach to a seeded assembly when matching glue strengths reach the
// temperature. Glue curves cut the lattice south-to-north and assemblies
// encode bit strings along them.
namespace atam {

struct SeedMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConfinedGrowth : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CurveOffAssembly : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RegionOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ReadMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotValidReport : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Layer check failure: a position's pooled placements do not map to a gate.
struct Unclean : std::runtime_error {
  std::vector<std::size_t> position_indices;  // canonical order indices
  Unclean(const std::string& what, std::vector<std::size_t> indices)
      : std::runtime_error(what), position_indices(std::move(indices)) {}
};

struct Pos {
  int x{};
  int y{};
};
inline bool operator==(Pos a, Pos b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Pos a, Pos b) { return !(a == b); }
// Canonical order: south to north, then west to east.
inline bool operator<(Pos a, Pos b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

enum class Bit : std::uint8_t { Zero, One, Eps };

struct Glue {
  std::string name;  // empty = no glue on that side
  int strength{0};
  Bit bit{Bit::Eps};

  bool null() const { return name.empty(); }
};
inline bool operator==(const Glue& a, const Glue& b) {
  return a.name == b.name && a.strength == b.strength && a.bit == b.bit;
}

enum Dir : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };
Dir opposite(Dir d);
Pos neighbor(Pos z, Dir d);

struct TileType {
  std::string name;
  std::array<Glue, 4> sides;  // indexed by Dir

  const Glue& side(Dir d) const { return sides[d]; }
};

struct TileSet {
  std::vector<TileType> tiles;

  // Glue names must determine strength and bit everywhere they appear.
  void validate() const;
  int tile_index(const std::string& name) const;
};

struct Assembly {
  std::map<Pos, int> at;  // position -> tile index; domain edge-connected

  bool occupied(Pos z) const { return at.count(z) != 0; }
  void validate_connected() const;
};

struct TileSystem {
  TileSet tiles;
  Assembly seed;
  int temperature{2};
};

struct Placement {
  int tile{};
  Pos pos;
  std::uint8_t input_sides{};  // bitmask over Dir

  bool has_input(Dir d) const { return (input_sides >> d) & 1; }
};

struct Box {
  int xmin{}, xmax{}, ymin{}, ymax{};
  bool contains(Pos z) const {
    return z.x >= xmin && z.x <= xmax && z.y >= ymin && z.y <= ymax;
  }
};

// Half-integer lattice points in doubled coordinates: exactly one of hx, hy
// is odd. (hx odd, hy even) is the midpoint of a vertical edge; (hx even,
// hy odd) of a horizontal edge.
struct HalfPos {
  int hx{};
  int hy{};
};
inline bool operator==(HalfPos a, HalfPos b) {
  return a.hx == b.hx && a.hy == b.hy;
}
inline bool operator<(HalfPos a, HalfPos b) {
  return a.hy != b.hy ? a.hy < b.hy : a.hx < b.hx;
}

HalfPos glue_position(Pos z, Dir d);

enum class Side { LHS, RHS };

// A simple rectilinear cut: unit edge segments joined corner to corner,
// extended by vertical rays below the first corner and above the last.
class GlueCurve {
 public:
  explicit GlueCurve(std::vector<HalfPos> segment_midpoints);

  const std::vector<HalfPos>& segments() const { return segments_; }
  GlueCurve translated(int dx, int dy) const;

  // Classifies a lattice point by westward ray-crossing parity.
  Side side(Pos z) const;

  // The two tile positions adjacent to a segment; first is the LHS one.
  std::pair<Pos, Pos> segment_tiles(HalfPos mid) const;

 private:
  std::vector<HalfPos> segments_;
  HalfPos south_corner_{};
  HalfPos north_corner_{};
};

// Straight vertical cut along the east side of column x_west, with segments
// covering rows [row_lo, row_hi].
GlueCurve vertical_cut(int x_west, int row_lo, int row_hi);

// All placements that can stick to `a` at empty positions: matching glues
// (same name and strength) summing to at least the temperature. The input
// sides are exactly the sides with matching glues.
std::vector<Placement> attachable(const TileSystem& sys, const Assembly& a);

struct AssembleResult {
  Assembly terminal;
  std::vector<Placement> sequence;
  bool deterministic{true};  // every frontier position admitted one tile type
  bool escaped{false};       // growth was possible outside the region
};

// Attaches placements inside `region` (and, when given, inside LHS(confine))
// under the canonical order: lexicographically smallest (y, x) position
// first, smallest tile index on ties. Runs until no placement remains.
AssembleResult assemble(const TileSystem& sys, const Box& region,
                        const GlueCurve* confine = nullptr);

// Attaches at exactly the given positions in the given order; throws
// NonConfinedGrowth if some position cannot be filled when its turn comes.
AssembleResult assemble_forced(const TileSystem& sys,
                               const std::vector<Pos>& order);

// Bits read along the curve, in curve order: the facing glue of the tile on
// the LHS when present (else the RHS tile), with eps glues skipped.
std::string bits_along_curve(const TileSet& tiles, const Assembly& a,
                             const GlueCurve& c);

std::uint32_t bits_to_state(const std::string& bits);
std::string state_to_bits(std::uint32_t x, std::size_t n);

struct PositionReport {
  Pos z;
  std::size_t wire_lo{};
  std::size_t arity{};
  std::set<std::pair<int, std::uint8_t>> placements;  // (tile, input mask)
  std::map<std::uint32_t, std::uint32_t> gate_observations;
};

struct LayerReport {
  std::size_t n{};
  permfn::FiniteFunction layer_function{std::vector<std::uint32_t>{0}};
  std::vector<PositionReport> positions;  // canonical order
};

struct LayerCheckInput {
  const TileSet* tiles{};
  int temperature{2};
  const GlueCurve* curve{};
  Pos v;
  std::size_t n{};
  std::function<Assembly(std::uint32_t)> seed_for;
  Box region;
};

// Verifies that the tile set layer-computes an n-bit function between the
// curve and its translate: every seed reads back its input along the curve,
// growth confined to LHS(curve + v) reaches the same layer as unconfined
// growth, the pooled placements at each position form a gate of uniform
// arity at most 2 with stable eps glues, and the induced function is total.
LayerReport check_layer_computes(const LayerCheckInput& input);

// One section per position in canonical order; positions of arity 0 become
// width-1 identity sections. The compiled circuit is local and reproduces
// the layer function on every input.
railway::RailwayCircuit compile_to_railway(const LayerReport& report);

// Readings along curve + i*v for i in [0, layers) after assembling within
// the region. When expected is set, each reading must equal the i-th
// iterate of it on the seed's input.
std::vector<std::string> iterate_layers(
    const TileSystem& sys, const GlueCurve& c, Pos v, std::size_t layers,
    const Box& region,
    const std::optional<permfn::FiniteFunction>& expected = std::nullopt);

// Tileset file form; optionally carries the seed table, temperature and the
// per-input seed assemblies used by the layer check.
std::string tileset_to_json(const TileSet& tiles, int temperature,
                            const Assembly* seed = nullptr);
std::string system_bundle_to_json(
    const TileSet& tiles, int temperature, std::size_t n,
    const GlueCurve& curve, Pos v, const Box& region,
    const std::function<Assembly(std::uint32_t)>& seed_for);
TileSystem tileset_from_json(const std::string& text);

struct SystemBundle {
  TileSet tiles;
  int temperature{2};
  std::size_t n{};
  GlueCurve curve{std::vector<HalfPos>{HalfPos{1, 0}}};
  Pos v;
  Box region;
  std::vector<Assembly> seeds;  // indexed by input state

  std::function<Assembly(std::uint32_t)> seed_fn() const;
};
SystemBundle bundle_from_json(const std::string& text);

std::string curve_to_json(const GlueCurve& c);
GlueCurve curve_from_json(const std::string& text);

}  // namespace atam

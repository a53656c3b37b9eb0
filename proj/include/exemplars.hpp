#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "atam.hpp"

// Parameterized builders for the reference tile systems: a plain copy layer,
// iterated Boolean circuit (IBC) tile sets, zig-zig increment counters and
// zig-zag increment/copy counters.
namespace exemplars {

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownInterpretation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Exemplar {
  atam::TileSet tiles;
  int temperature{2};
  std::size_t n{};
  atam::GlueCurve curve{std::vector<atam::HalfPos>{atam::HalfPos{1, 0}}};
  atam::Pos v;
  std::function<atam::Assembly(std::uint32_t)> seed_for;
  atam::Box layer_region;  // covers one layer of growth
  std::function<atam::Box(std::size_t)> region_for_layers;

  atam::LayerCheckInput layer_input() const {
    return atam::LayerCheckInput{&tiles,    temperature, &curve, v,
                                 n,         seed_for,    layer_region};
  }
};

// n copy rows between two seam rows; the layer function is the identity.
Exemplar build_copy(std::size_t n);

// Gate assignment for one IBC layer: a 1-bit gate feeding a chain of n - 1
// 2-bit gates feeding a final 1-bit gate. The 2-bit tables are indexed by
// 2*chain + wire and produce 2*emitted + chain'.
struct IbcPhaseGates {
  std::array<std::uint8_t, 2> first;                 // 1-bit gate
  std::vector<std::array<std::uint8_t, 4>> middle;   // n - 1 gates
  std::array<std::uint8_t, 2> last;                  // 1-bit gate
};

struct IbcSpec {
  std::size_t n{};       // even
  std::size_t layers{};  // >= 1
  std::vector<IbcPhaseGates> gates;  // one entry per layer
};

IbcSpec ibc_identity(std::size_t n, std::size_t layers);
IbcSpec ibc_random(std::size_t n, std::size_t layers, std::uint64_t seed);

// A fixed 6-bit single-layer assignment found by seeded sampling; its
// compiled circuit reaches at least 48 distinct states.
IbcSpec ibc_long_counter();

Exemplar build_ibc(const IbcSpec& spec);

// Increment-only columns; every column adds one to the n-bit reading, so the
// raw assembly is a maximal counter while the layer check is not clean.
Exemplar build_zigzig(std::size_t n);

enum class ZigzagInterp { AllBits, EpsTop };

// Alternating increment and copy-back columns over a trigger wire and n - 1
// payload wires. AllBits keeps every cut glue bit-encoding and layer-checks
// cleanly with counter value 2^(n-1); EpsTop grays the trigger wire, which
// breaks fanin/fanout balance at the trigger endpoints while the raw
// assembly walks through all 2^(n-1) payload readings.
Exemplar build_zigzag(std::size_t n, ZigzagInterp interp);

}  // namespace exemplars

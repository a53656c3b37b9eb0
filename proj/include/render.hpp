#pragma once

#include <string>

#include "atam.hpp"
#include "railway.hpp"

// Deterministic ASCII and SVG renderings for circuits and assemblies,
// suitable for golden-file comparison. Bit-encoding glues are drawn dark,
// eps glues grey.
namespace render {

struct UnsupportedFormat : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string circuit_ascii(const railway::RailwayCircuit& c);
std::string circuit_svg(const railway::RailwayCircuit& c);

std::string assembly_ascii(const atam::TileSet& tiles, const atam::Assembly& a);
std::string assembly_svg(const atam::TileSet& tiles, const atam::Assembly& a);

}  // namespace render

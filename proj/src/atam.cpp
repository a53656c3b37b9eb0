#include "atam.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>

#include "json.hpp"

namespace atam {

Dir opposite(Dir d) {
  switch (d) {
    case North: return South;
    case East: return West;
    case South: return North;
    case West: return East;
  }
  return North;
}

Pos neighbor(Pos z, Dir d) {
  switch (d) {
    case North: return Pos{z.x, z.y + 1};
    case East: return Pos{z.x + 1, z.y};
    case South: return Pos{z.x, z.y - 1};
    case West: return Pos{z.x - 1, z.y};
  }
  return z;
}

HalfPos glue_position(Pos z, Dir d) {
  switch (d) {
    case North: return HalfPos{2 * z.x, 2 * z.y + 1};
    case East: return HalfPos{2 * z.x + 1, 2 * z.y};
    case South: return HalfPos{2 * z.x, 2 * z.y - 1};
    case West: return HalfPos{2 * z.x - 1, 2 * z.y};
  }
  return HalfPos{};
}

void TileSet::validate() const {
  std::map<std::string, Glue> byname;
  for (const TileType& t : tiles) {
    for (const Glue& g : t.sides) {
      if (g.null()) {
        if (g.strength != 0)
          throw std::invalid_argument("null glue with nonzero strength");
        continue;
      }
      auto [it, inserted] = byname.emplace(g.name, g);
      if (!inserted && !(it->second == g))
        throw std::invalid_argument("glue name '" + g.name +
                                    "' used with conflicting attributes");
    }
  }
}

int TileSet::tile_index(const std::string& name) const {
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (tiles[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown tile type '" + name + "'");
}

void Assembly::validate_connected() const {
  if (at.empty()) throw std::invalid_argument("assembly is empty");
  std::set<Pos> seen;
  std::deque<Pos> queue{at.begin()->first};
  seen.insert(queue.front());
  while (!queue.empty()) {
    const Pos z = queue.front();
    queue.pop_front();
    for (Dir d : {North, East, South, West}) {
      const Pos nb = neighbor(z, d);
      if (at.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        queue.push_back(nb);
      }
    }
  }
  if (seen.size() != at.size())
    throw std::invalid_argument("assembly domain is not edge-connected");
}

// ---------------------------------------------------------------------------
// Glue curves

static bool is_vertical(HalfPos mid) { return (mid.hx & 1) != 0; }

static std::pair<HalfPos, HalfPos> segment_corners(HalfPos mid) {
  if (is_vertical(mid))
    return {HalfPos{mid.hx, mid.hy - 1}, HalfPos{mid.hx, mid.hy + 1}};
  return {HalfPos{mid.hx - 1, mid.hy}, HalfPos{mid.hx + 1, mid.hy}};
}

GlueCurve::GlueCurve(std::vector<HalfPos> segment_midpoints)
    : segments_(std::move(segment_midpoints)) {
  if (segments_.empty()) throw std::invalid_argument("curve needs segments");
  for (HalfPos m : segments_) {
    const bool vx = (m.hx & 1) != 0;
    const bool vy = (m.hy & 1) != 0;
    if (vx == vy)
      throw std::invalid_argument("curve point is not an edge midpoint");
  }
  std::vector<HalfPos> corners;
  if (segments_.size() == 1) {
    auto [a, b] = segment_corners(segments_[0]);
    corners = {a, b};  // south/west corner first
  } else {
    auto [a0, b0] = segment_corners(segments_[0]);
    auto [a1, b1] = segment_corners(segments_[1]);
    HalfPos shared;
    if (a0 == a1 || a0 == b1) {
      shared = a0;
      corners.push_back(b0);
    } else if (b0 == a1 || b0 == b1) {
      shared = b0;
      corners.push_back(a0);
    } else {
      throw std::invalid_argument("curve segments are not chained");
    }
    corners.push_back(shared);
    for (std::size_t i = 1; i < segments_.size(); ++i) {
      auto [a, b] = segment_corners(segments_[i]);
      const HalfPos prev = corners.back();
      if (a == prev)
        corners.push_back(b);
      else if (b == prev)
        corners.push_back(a);
      else
        throw std::invalid_argument("curve segments are not chained");
    }
  }
  std::set<std::pair<int, int>> distinct;
  for (HalfPos c : corners)
    if (!distinct.insert({c.hx, c.hy}).second)
      throw std::invalid_argument("curve is not simple");
  south_corner_ = corners.front();
  north_corner_ = corners.back();
  if (north_corner_.hy < south_corner_.hy)
    std::swap(south_corner_, north_corner_);
  for (HalfPos c : corners) {
    if (c.hx == south_corner_.hx && c.hy < south_corner_.hy)
      throw std::invalid_argument("curve crosses its south ray");
    if (c.hx == north_corner_.hx && c.hy > north_corner_.hy)
      throw std::invalid_argument("curve crosses its north ray");
  }
}

GlueCurve GlueCurve::translated(int dx, int dy) const {
  std::vector<HalfPos> segs = segments_;
  for (HalfPos& m : segs) {
    m.hx += 2 * dx;
    m.hy += 2 * dy;
  }
  return GlueCurve(std::move(segs));
}

Side GlueCurve::side(Pos z) const {
  const int ry = 2 * z.y;
  const int rx = 2 * z.x;
  int crossings = 0;
  for (HalfPos m : segments_) {
    if (is_vertical(m) && m.hy == ry && m.hx < rx) ++crossings;
  }
  if (south_corner_.hx < rx && ry < south_corner_.hy) ++crossings;
  if (north_corner_.hx < rx && ry > north_corner_.hy) ++crossings;
  return (crossings % 2 == 0) ? Side::LHS : Side::RHS;
}

std::pair<Pos, Pos> GlueCurve::segment_tiles(HalfPos mid) const {
  Pos a, b;
  if (is_vertical(mid)) {
    a = Pos{(mid.hx - 1) / 2, mid.hy / 2};
    b = Pos{(mid.hx + 1) / 2, mid.hy / 2};
  } else {
    a = Pos{mid.hx / 2, (mid.hy - 1) / 2};
    b = Pos{mid.hx / 2, (mid.hy + 1) / 2};
  }
  if (side(a) == Side::LHS) return {a, b};
  return {b, a};
}

GlueCurve vertical_cut(int x_west, int row_lo, int row_hi) {
  std::vector<HalfPos> segs;
  for (int r = row_lo; r <= row_hi; ++r)
    segs.push_back(HalfPos{2 * x_west + 1, 2 * r});
  return GlueCurve(std::move(segs));
}

// ---------------------------------------------------------------------------
// Attachment

static std::vector<Placement> placements_at(const TileSystem& sys,
                                            const Assembly& a, Pos z) {
  std::vector<Placement> out;
  for (std::size_t t = 0; t < sys.tiles.tiles.size(); ++t) {
    std::uint8_t mask = 0;
    int strength = 0;
    for (Dir d : {North, East, South, West}) {
      const Pos nb = neighbor(z, d);
      auto it = a.at.find(nb);
      if (it == a.at.end()) continue;
      const Glue& mine = sys.tiles.tiles[t].side(d);
      const Glue& theirs = sys.tiles.tiles[it->second].side(opposite(d));
      if (!mine.null() && mine.name == theirs.name &&
          mine.strength == theirs.strength) {
        mask |= static_cast<std::uint8_t>(1u << d);
        strength += mine.strength;
      }
    }
    if (mask != 0 && strength >= sys.temperature)
      out.push_back(Placement{static_cast<int>(t), z, mask});
  }
  return out;
}

std::vector<Placement> attachable(const TileSystem& sys, const Assembly& a) {
  std::set<Pos> candidates;
  for (const auto& [z, t] : a.at) {
    for (Dir d : {North, East, South, West}) {
      const Pos nb = neighbor(z, d);
      if (!a.occupied(nb)) candidates.insert(nb);
    }
  }
  std::vector<Placement> out;
  for (Pos z : candidates) {
    std::vector<Placement> here = placements_at(sys, a, z);
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

AssembleResult assemble(const TileSystem& sys, const Box& region,
                        const GlueCurve* confine) {
  AssembleResult result;
  result.terminal = sys.seed;
  std::set<Pos> candidates;
  auto add_neighbors = [&](Pos z) {
    for (Dir d : {North, East, South, West}) {
      const Pos nb = neighbor(z, d);
      if (!result.terminal.occupied(nb)) candidates.insert(nb);
    }
  };
  for (const auto& [z, t] : sys.seed.at) add_neighbors(z);

  const auto admissible = [&](Pos z) {
    if (!region.contains(z)) return false;
    if (confine && confine->side(z) != Side::LHS) return false;
    return true;
  };

  for (;;) {
    bool found = false;
    Pos best{};
    std::vector<Placement> best_placements;
    for (Pos z : candidates) {
      std::vector<Placement> here = placements_at(sys, result.terminal, z);
      if (here.empty()) continue;
      if (!admissible(z)) {
        result.escaped = true;
        continue;
      }
      std::set<int> kinds;
      for (const Placement& p : here) kinds.insert(p.tile);
      if (kinds.size() > 1) result.deterministic = false;
      if (!found || z < best) {
        found = true;
        best = z;
        best_placements = std::move(here);
      }
    }
    if (!found) break;
    const Placement chosen = *std::min_element(
        best_placements.begin(), best_placements.end(),
        [](const Placement& a, const Placement& b) { return a.tile < b.tile; });
    result.terminal.at[chosen.pos] = chosen.tile;
    result.sequence.push_back(chosen);
    candidates.erase(chosen.pos);
    add_neighbors(chosen.pos);
  }
  return result;
}

AssembleResult assemble_forced(const TileSystem& sys,
                               const std::vector<Pos>& order) {
  AssembleResult result;
  result.terminal = sys.seed;
  for (Pos z : order) {
    std::vector<Placement> here = placements_at(sys, result.terminal, z);
    if (here.empty())
      throw NonConfinedGrowth("no tile attaches at a forced position");
    std::set<int> kinds;
    for (const Placement& p : here) kinds.insert(p.tile);
    if (kinds.size() > 1) result.deterministic = false;
    const Placement chosen = *std::min_element(
        here.begin(), here.end(),
        [](const Placement& a, const Placement& b) { return a.tile < b.tile; });
    result.terminal.at[chosen.pos] = chosen.tile;
    result.sequence.push_back(chosen);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Reading bits along a curve

static char bit_char(Bit b) { return b == Bit::Zero ? '0' : '1'; }

// The glue lying on a curve segment, read from the LHS tile when possible.
static const Glue* glue_on_segment(const TileSet& tiles, const Assembly& a,
                                   const GlueCurve& c, HalfPos mid,
                                   bool* any_tile) {
  const auto [lhs, rhs] = c.segment_tiles(mid);
  const Glue* glue = nullptr;
  *any_tile = false;
  for (Pos z : {lhs, rhs}) {
    auto it = a.at.find(z);
    if (it == a.at.end()) continue;
    *any_tile = true;
    for (Dir d : {North, East, South, West}) {
      if (glue_position(z, d) == mid) {
        const Glue& g = tiles.tiles[it->second].side(d);
        if (!g.null()) return &tiles.tiles[it->second].side(d);
        break;
      }
    }
    if (glue) break;
  }
  return glue;
}

std::string bits_along_curve(const TileSet& tiles, const Assembly& a,
                             const GlueCurve& c) {
  std::string bits;
  for (HalfPos mid : c.segments()) {
    bool any_tile = false;
    const Glue* g = glue_on_segment(tiles, a, c, mid, &any_tile);
    if (!any_tile)
      throw CurveOffAssembly("curve segment touches no tile of the assembly");
    if (g && g->bit != Bit::Eps) bits.push_back(bit_char(g->bit));
  }
  return bits;
}

std::uint32_t bits_to_state(const std::string& bits) {
  std::uint32_t x = 0;
  for (char c : bits) x = (x << 1) | (c == '1' ? 1u : 0u);
  return x;
}

std::string state_to_bits(std::uint32_t x, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if ((x >> (n - 1 - i)) & 1u) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------------------
// Layer checking

namespace {

struct Carrier {
  HalfPos pos;
  char bit;
};

// Bit-encoding glue positions along a curve, in curve order.
std::vector<Carrier> carriers_along(const TileSet& tiles, const Assembly& a,
                                    const GlueCurve& c) {
  std::vector<Carrier> out;
  for (HalfPos mid : c.segments()) {
    bool any_tile = false;
    const Glue* g = glue_on_segment(tiles, a, c, mid, &any_tile);
    if (!any_tile)
      throw CurveOffAssembly("curve segment touches no tile of the assembly");
    if (g && g->bit != Bit::Eps) out.push_back(Carrier{mid, bit_char(g->bit)});
  }
  return out;
}

struct SideObservation {
  bool any_eps = false;
  bool all_same_eps = true;
  std::string eps_name;
  bool first = true;
};

}  // namespace

LayerReport check_layer_computes(const LayerCheckInput& input) {
  const TileSet& tiles = *input.tiles;
  tiles.validate();
  const GlueCurve& c = *input.curve;
  if (input.v.x <= 0)
    throw std::invalid_argument("layer vector needs a positive x component");

  // The curve and its forward translates must stay disjoint over the region.
  {
    std::set<std::pair<int, int>> base;
    for (HalfPos m : c.segments()) base.insert({m.hx, m.hy});
    const int span = input.region.xmax - input.region.xmin + 1;
    const int max_i = std::max(1, span / std::max(1, input.v.x) + 1);
    for (int i = 1; i <= max_i; ++i) {
      for (HalfPos m : c.translated(i * input.v.x, i * input.v.y).segments()) {
        if (base.count({m.hx, m.hy}))
          throw std::invalid_argument("curve meets its own translate");
      }
    }
  }

  const GlueCurve cv = c.translated(input.v.x, input.v.y);
  const std::size_t n = input.n;
  const std::size_t m = std::size_t{1} << n;

  std::vector<Pos> canonical;
  std::vector<PositionReport> positions;
  std::vector<std::uint32_t> f_table(m, 0);
  std::vector<SideObservation> side_obs;          // 4 per position
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> arity_obs;

  for (std::uint32_t x = 0; x < m; ++x) {
    Assembly seed = input.seed_for(x);
    seed.validate_connected();
    for (const auto& [z, t] : seed.at) {
      if (c.side(z) != Side::LHS)
        throw SeedMismatch("seed tile east of the input cut");
    }
    TileSystem sys{tiles, seed, input.temperature};
    if (bits_along_curve(tiles, seed, c) != state_to_bits(x, n))
      throw SeedMismatch("seed does not encode its input along the curve");

    AssembleResult conf = assemble(sys, input.region, &cv);
    if (!conf.deterministic)
      throw NonConfinedGrowth("multiple tiles attachable within the layer");

    AssembleResult full = assemble(sys, input.region);
    for (const auto& [z, t] : full.terminal.at) {
      if (cv.side(z) == Side::LHS && !conf.terminal.occupied(z))
        throw NonConfinedGrowth(
            "layer cannot finish before growth beyond its cut");
    }

    if (x == 0) {
      for (const Placement& p : conf.sequence) {
        if (c.side(p.pos) != Side::RHS)
          throw NonConfinedGrowth("layer growth west of the input cut");
        canonical.push_back(p.pos);
      }
      positions.resize(canonical.size());
      side_obs.resize(4 * canonical.size());
      arity_obs.resize(canonical.size());
      for (std::size_t i = 0; i < canonical.size(); ++i)
        positions[i].z = canonical[i];
    }

    AssembleResult forced = [&]() {
      try {
        return assemble_forced(sys, canonical);
      } catch (const NonConfinedGrowth&) {
        throw Unclean("an input lacks a placement at a layer position", {});
      }
    }();
    if (forced.terminal.at != conf.terminal.at ||
        conf.sequence.size() != canonical.size())
      throw Unclean("inputs occupy different layer positions", {});

    for (std::size_t i = 0; i < canonical.size(); ++i) {
      const Placement& p = forced.sequence[i];
      positions[i].placements.insert({p.tile, p.input_sides});
      const TileType& t = tiles.tiles[p.tile];
      std::size_t in_bits = 0, out_bits = 0;
      for (Dir d : {North, East, South, West}) {
        const Glue& g = t.side(d);
        SideObservation& obs = side_obs[4 * i + d];
        const bool eps = !g.null() && g.bit == Bit::Eps;
        if (obs.first) {
          obs.first = false;
          obs.any_eps = eps;
          if (eps) obs.eps_name = g.name;
        } else {
          if (eps != obs.any_eps || (eps && g.name != obs.eps_name))
            obs.all_same_eps = false;
        }
        if (!g.null() && g.bit != Bit::Eps) {
          if (p.has_input(d))
            ++in_bits;
          else
            ++out_bits;
        }
      }
      arity_obs[i].insert({in_bits, out_bits});
    }
  }

  // Def "cleanly": uniform arity k = fanin = fanout <= 2, stable eps glues.
  std::vector<std::size_t> offending;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    bool clean = arity_obs[i].size() == 1;
    if (clean) {
      const auto [in_bits, out_bits] = *arity_obs[i].begin();
      clean = in_bits == out_bits && in_bits <= 2;
      positions[i].arity = in_bits;
    }
    for (Dir d : {North, East, South, West})
      if (!side_obs[4 * i + d].all_same_eps) clean = false;
    if (!clean) offending.push_back(i);
  }
  if (!offending.empty())
    throw Unclean("positions do not map cleanly to gates", offending);

  // Wire the gates: track live bit carriers through each forced sequence.
  std::vector<bool> wire_set(canonical.size(), false);
  for (std::uint32_t x = 0; x < m; ++x) {
    Assembly seed = input.seed_for(x);
    TileSystem sys{tiles, seed, input.temperature};
    AssembleResult forced = assemble_forced(sys, canonical);
    std::vector<Carrier> live = carriers_along(tiles, seed, c);
    if (live.size() != n)
      throw SeedMismatch("seed does not present n bits along the curve");

    for (std::size_t i = 0; i < canonical.size(); ++i) {
      const Placement& p = forced.sequence[i];
      const TileType& t = tiles.tiles[p.tile];
      std::vector<std::size_t> in_slots;
      std::uint32_t in_value = 0;
      for (Dir d : {North, East, South, West}) {
        const Glue& g = t.side(d);
        if (!p.has_input(d) || g.null() || g.bit == Bit::Eps) continue;
        const HalfPos h = glue_position(p.pos, d);
        bool found = false;
        for (std::size_t s = 0; s < live.size(); ++s) {
          if (live[s].pos == h) {
            in_slots.push_back(s);
            found = true;
            break;
          }
        }
        if (!found)
          throw Unclean("gate input is not a live layer bit", {i});
      }
      std::sort(in_slots.begin(), in_slots.end());
      for (std::size_t s = 1; s < in_slots.size(); ++s) {
        if (in_slots[s] != in_slots[s - 1] + 1)
          throw Unclean("gate straddles non-adjacent wires", {i});
      }
      for (std::size_t s : in_slots)
        in_value = (in_value << 1) | (live[s].bit == '1' ? 1u : 0u);

      std::vector<Carrier> outs;
      for (Dir d : {North, East, South, West}) {
        const Glue& g = t.side(d);
        if (p.has_input(d) || g.null() || g.bit == Bit::Eps) continue;
        outs.push_back(Carrier{glue_position(p.pos, d), bit_char(g.bit)});
      }
      std::sort(outs.begin(), outs.end(),
                [](const Carrier& a, const Carrier& b) { return a.pos < b.pos; });
      if (outs.size() != in_slots.size())
        throw Unclean("fanin differs from fanout", {i});
      std::uint32_t out_value = 0;
      for (std::size_t s = 0; s < outs.size(); ++s) {
        live[in_slots[s]] = outs[s];
        out_value = (out_value << 1) | (outs[s].bit == '1' ? 1u : 0u);
      }

      if (!in_slots.empty()) {
        if (!wire_set[i]) {
          wire_set[i] = true;
          positions[i].wire_lo = in_slots.front();
        } else if (positions[i].wire_lo != in_slots.front()) {
          throw Unclean("gate wires differ between inputs", {i});
        }
        auto [it, inserted] =
            positions[i].gate_observations.emplace(in_value, out_value);
        if (!inserted && it->second != out_value)
          throw Unclean("gate behaviour is not a function of its bits", {i});
      }
    }

    const std::vector<Carrier> expect =
        carriers_along(tiles, forced.terminal, cv);
    if (expect.size() != n)
      throw Unclean("output cut does not carry n bits", {});
    for (std::size_t s = 0; s < n; ++s) {
      if (!(live[s].pos == expect[s].pos) || live[s].bit != expect[s].bit)
        throw Unclean("live wires misaligned with the output cut", {});
    }
    std::uint32_t y = 0;
    for (const Carrier& cr : expect) y = (y << 1) | (cr.bit == '1' ? 1u : 0u);
    f_table[x] = y;
  }

  LayerReport report;
  report.n = n;
  report.layer_function = permfn::FiniteFunction(std::move(f_table));
  report.positions = std::move(positions);
  return report;
}

railway::RailwayCircuit compile_to_railway(const LayerReport& report) {
  if (report.n < 3)
    throw NTooSmall("compilation to a local circuit needs at least 3 wires");
  std::vector<railway::Gate> gates;
  for (std::size_t s = 0; s < report.positions.size(); ++s) {
    const PositionReport& p = report.positions[s];
    if (p.arity == 0) {
      gates.emplace_back(s, 0, 0, railway::GateFunction::identity(1));
      continue;
    }
    const std::size_t entries = std::size_t{1} << p.arity;
    std::vector<std::uint32_t> table(entries);
    for (std::uint32_t v = 0; v < entries; ++v) {
      auto it = p.gate_observations.find(v);
      table[v] = it != p.gate_observations.end() ? it->second : v;
    }
    gates.emplace_back(s, p.wire_lo, p.wire_lo + p.arity - 1,
                       railway::GateFunction(p.arity, std::move(table)));
  }
  railway::RailwayCircuit circuit(report.n, std::move(gates));
  if (!railway::is_local(circuit))
    throw NotValidReport("compiled circuit is not local");
  if (railway::circuit_function(circuit) != report.layer_function)
    throw NotValidReport("compiled circuit disagrees with the layer function");
  return circuit;
}

std::vector<std::string> iterate_layers(
    const TileSystem& sys, const GlueCurve& c, Pos v, std::size_t layers,
    const Box& region, const std::optional<permfn::FiniteFunction>& expected) {
  AssembleResult full = assemble(sys, region);
  std::vector<std::string> readings;
  readings.reserve(layers);
  for (std::size_t i = 0; i < layers; ++i) {
    const GlueCurve ci =
        c.translated(static_cast<int>(i) * v.x, static_cast<int>(i) * v.y);
    try {
      readings.push_back(bits_along_curve(sys.tiles, full.terminal, ci));
    } catch (const CurveOffAssembly&) {
      throw RegionOverflow("region does not cover the requested layers");
    }
  }
  if (expected) {
    if (readings.empty()) return readings;
    std::uint32_t state = bits_to_state(readings.front());
    const std::size_t n = readings.front().size();
    for (std::size_t i = 0; i < readings.size(); ++i) {
      if (readings[i] != state_to_bits(state, n))
        throw ReadMismatch("cut reading disagrees with the iterated function");
      state = (*expected)(state);
    }
  }
  return readings;
}

// ---------------------------------------------------------------------------
// File formats

static std::string bit_name(Bit b) {
  switch (b) {
    case Bit::Zero: return "0";
    case Bit::One: return "1";
    case Bit::Eps: return "eps";
  }
  return "eps";
}

static Bit bit_from_name(const std::string& s) {
  if (s == "0") return Bit::Zero;
  if (s == "1") return Bit::One;
  if (s == "eps") return Bit::Eps;
  throw std::invalid_argument("bit must be \"0\", \"1\" or \"eps\"");
}

static nlohmann::ordered_json tiles_json(const TileSet& tiles) {
  std::map<std::string, Glue> byname;
  for (const TileType& t : tiles.tiles)
    for (const Glue& g : t.sides)
      if (!g.null()) byname.emplace(g.name, g);
  nlohmann::ordered_json j;
  j["glues"] = nlohmann::ordered_json::array();
  for (const auto& [name, g] : byname) {
    nlohmann::ordered_json gj;
    gj["name"] = name;
    gj["strength"] = g.strength;
    gj["bit"] = bit_name(g.bit);
    j["glues"].push_back(gj);
  }
  j["tiles"] = nlohmann::ordered_json::array();
  for (const TileType& t : tiles.tiles) {
    nlohmann::ordered_json tj;
    tj["name"] = t.name;
    tj["north"] = t.sides[North].name;
    tj["east"] = t.sides[East].name;
    tj["south"] = t.sides[South].name;
    tj["west"] = t.sides[West].name;
    j["tiles"].push_back(tj);
  }
  return j;
}

static nlohmann::ordered_json assembly_json(const TileSet& tiles,
                                            const Assembly& a) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [z, t] : a.at) {
    nlohmann::ordered_json tj;
    tj["x"] = z.x;
    tj["y"] = z.y;
    tj["tile"] = tiles.tiles[t].name;
    arr.push_back(tj);
  }
  return arr;
}

std::string tileset_to_json(const TileSet& tiles, int temperature,
                            const Assembly* seed) {
  nlohmann::ordered_json j = tiles_json(tiles);
  j["temperature"] = temperature;
  if (seed) j["seed"] = assembly_json(tiles, *seed);
  return j.dump(2);
}

static TileSet tiles_from_json(const nlohmann::json& j) {
  std::map<std::string, Glue> byname;
  for (const auto& gj : j.at("glues")) {
    Glue g;
    g.name = gj.at("name").get<std::string>();
    g.strength = gj.at("strength").get<int>();
    g.bit = bit_from_name(gj.at("bit").get<std::string>());
    byname[g.name] = g;
  }
  auto lookup = [&](const std::string& name) -> Glue {
    if (name.empty()) return Glue{};
    auto it = byname.find(name);
    if (it == byname.end())
      throw std::invalid_argument("tile references unknown glue '" + name + "'");
    return it->second;
  };
  TileSet tiles;
  for (const auto& tj : j.at("tiles")) {
    TileType t;
    t.name = tj.at("name").get<std::string>();
    t.sides[North] = lookup(tj.at("north").get<std::string>());
    t.sides[East] = lookup(tj.at("east").get<std::string>());
    t.sides[South] = lookup(tj.at("south").get<std::string>());
    t.sides[West] = lookup(tj.at("west").get<std::string>());
    tiles.tiles.push_back(std::move(t));
  }
  tiles.validate();
  return tiles;
}

static Assembly assembly_from_json(const TileSet& tiles,
                                   const nlohmann::json& arr) {
  Assembly a;
  for (const auto& tj : arr) {
    const Pos z{tj.at("x").get<int>(), tj.at("y").get<int>()};
    a.at[z] = tiles.tile_index(tj.at("tile").get<std::string>());
  }
  return a;
}

TileSystem tileset_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  TileSystem sys;
  sys.tiles = tiles_from_json(j);
  sys.temperature = j.value("temperature", 2);
  if (j.contains("seed")) sys.seed = assembly_from_json(sys.tiles, j.at("seed"));
  return sys;
}

static nlohmann::ordered_json curve_json(const GlueCurve& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (HalfPos m : c.segments())
    arr.push_back({m.hx / 2.0, m.hy / 2.0});
  return arr;
}

std::string curve_to_json(const GlueCurve& c) { return curve_json(c).dump(); }

static GlueCurve curve_from(const nlohmann::json& arr) {
  std::vector<HalfPos> segs;
  for (const auto& pj : arr) {
    const double x = pj.at(0).get<double>();
    const double y = pj.at(1).get<double>();
    HalfPos h{static_cast<int>(std::lround(2 * x)),
              static_cast<int>(std::lround(2 * y))};
    segs.push_back(h);
  }
  return GlueCurve(std::move(segs));
}

GlueCurve curve_from_json(const std::string& text) {
  return curve_from(nlohmann::json::parse(text));
}

std::string system_bundle_to_json(
    const TileSet& tiles, int temperature, std::size_t n,
    const GlueCurve& curve, Pos v, const Box& region,
    const std::function<Assembly(std::uint32_t)>& seed_for) {
  nlohmann::ordered_json j = tiles_json(tiles);
  j["temperature"] = temperature;
  j["n"] = n;
  j["curve"] = curve_json(curve);
  j["v"] = {v.x, v.y};
  j["region"] = {{"xmin", region.xmin},
                 {"xmax", region.xmax},
                 {"ymin", region.ymin},
                 {"ymax", region.ymax}};
  j["seeds"] = nlohmann::ordered_json::array();
  const std::size_t m = std::size_t{1} << n;
  for (std::uint32_t x = 0; x < m; ++x)
    j["seeds"].push_back(assembly_json(tiles, seed_for(x)));
  j["seed"] = j["seeds"][0];
  return j.dump(2);
}

std::function<Assembly(std::uint32_t)> SystemBundle::seed_fn() const {
  auto copy = seeds;
  return [copy](std::uint32_t x) { return copy.at(x); };
}

SystemBundle bundle_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SystemBundle b;
  b.tiles = tiles_from_json(j);
  b.temperature = j.value("temperature", 2);
  b.n = j.at("n").get<std::size_t>();
  b.curve = curve_from(j.at("curve"));
  b.v = Pos{j.at("v").at(0).get<int>(), j.at("v").at(1).get<int>()};
  b.region = Box{j.at("region").at("xmin").get<int>(),
                 j.at("region").at("xmax").get<int>(),
                 j.at("region").at("ymin").get<int>(),
                 j.at("region").at("ymax").get<int>()};
  for (const auto& sj : j.at("seeds"))
    b.seeds.push_back(assembly_from_json(b.tiles, sj));
  return b;
}

}  // namespace atam

#include "exemplars.hpp"

#include <string>

#include "counterlab.hpp"

namespace exemplars {

using atam::Assembly;
using atam::Bit;
using atam::Box;
using atam::Dir;
using atam::Glue;
using atam::Pos;
using atam::TileSet;
using atam::TileType;

namespace {

Glue bit_glue(const std::string& name, int v, int strength) {
  return Glue{name + "_" + std::to_string(v), strength,
              v ? Bit::One : Bit::Zero};
}

Glue eps_glue(const std::string& name, int strength) {
  return Glue{name, strength, Bit::Eps};
}

TileType tile(const std::string& name, Glue n, Glue e, Glue s, Glue w) {
  TileType t;
  t.name = name;
  t.sides[atam::North] = std::move(n);
  t.sides[atam::East] = std::move(e);
  t.sides[atam::South] = std::move(s);
  t.sides[atam::West] = std::move(w);
  return t;
}

// Seed tiles present glues eastward only; nothing can regrow them.
TileType seed_tile(const std::string& name, Glue east) {
  return tile(name, Glue{}, std::move(east), Glue{}, Glue{});
}

int bit_of(std::uint32_t x, std::size_t n, std::size_t wire) {
  return static_cast<int>((x >> (n - 1 - wire)) & 1u);
}

}  // namespace

// ---------------------------------------------------------------------------
// Copy layer: seam row, n copy rows, seam row.

Exemplar build_copy(std::size_t n) {
  if (n < 1) throw InvalidSpec("copy layer needs at least one wire");
  Exemplar ex;
  ex.n = n;
  TileSet& ts = ex.tiles;

  auto strut = [&](std::size_t r) {
    return eps_glue("cq" + std::to_string(r), 1);
  };
  ts.tiles.push_back(
      tile("cS", strut(0), eps_glue("cs", 2), Glue{}, eps_glue("cs", 2)));
  for (std::size_t r = 1; r <= n; ++r) {
    for (int b = 0; b < 2; ++b) {
      const std::string wire = "k" + std::to_string(r);
      ts.tiles.push_back(tile("cK" + std::to_string(r) + std::to_string(b),
                              strut(r), bit_glue(wire, b, 1), strut(r - 1),
                              bit_glue(wire, b, 1)));
    }
  }
  ts.tiles.push_back(
      tile("cT", Glue{}, eps_glue("ct", 1), strut(n), eps_glue("ct", 1)));

  ts.tiles.push_back(seed_tile("sB", eps_glue("cs", 2)));
  for (std::size_t r = 1; r <= n; ++r)
    for (int b = 0; b < 2; ++b)
      ts.tiles.push_back(seed_tile("s" + std::to_string(r) + std::to_string(b),
                                   bit_glue("k" + std::to_string(r), b, 1)));
  ts.tiles.push_back(seed_tile("sT", eps_glue("ct", 1)));
  ts.validate();

  const std::size_t wires = n;
  const int bottom_idx = ts.tile_index("sB");
  const int top_idx = ts.tile_index("sT");
  std::vector<std::array<int, 2>> row_idx(wires + 1);
  for (std::size_t r = 1; r <= wires; ++r)
    for (int b = 0; b < 2; ++b)
      row_idx[r][b] =
          ts.tile_index("s" + std::to_string(r) + std::to_string(b));
  ex.seed_for = [bottom_idx, top_idx, row_idx, wires](std::uint32_t x) {
    Assembly a;
    a.at[Pos{0, 0}] = bottom_idx;
    for (std::size_t r = 1; r <= wires; ++r)
      a.at[Pos{0, static_cast<int>(r)}] = row_idx[r][bit_of(x, wires, r - 1)];
    a.at[Pos{0, static_cast<int>(wires) + 1}] = top_idx;
    return a;
  };

  ex.curve = atam::vertical_cut(0, 0, static_cast<int>(n) + 1);
  ex.v = Pos{1, 0};
  ex.layer_region = Box{0, 2, -1, static_cast<int>(n) + 2};
  ex.region_for_layers = [n](std::size_t k) {
    return Box{0, static_cast<int>(k) + 1, -1, static_cast<int>(n) + 2};
  };
  return ex;
}

// ---------------------------------------------------------------------------
// IBC: a climbing column per layer. Position z_k of layer j sits at
// (j, j - 1 + k); its west neighbour is position k + 1 of the previous
// layer, so emitted bits drop one row per column while the frame climbs.

IbcSpec ibc_identity(std::size_t n, std::size_t layers) {
  IbcSpec spec;
  spec.n = n;
  spec.layers = layers;
  IbcPhaseGates phase;
  phase.first = {0, 1};
  phase.middle.assign(n - 1, {0, 1, 2, 3});
  phase.last = {0, 1};
  spec.gates.assign(layers, phase);
  return spec;
}

IbcSpec ibc_random(std::size_t n, std::size_t layers, std::uint64_t seed) {
  IbcSpec spec;
  spec.n = n;
  spec.layers = layers;
  std::uint64_t state = seed;
  for (std::size_t p = 0; p < layers; ++p) {
    IbcPhaseGates phase;
    for (auto& v : phase.first)
      v = static_cast<std::uint8_t>(counterlab::next_below(state, 2));
    phase.middle.resize(n - 1);
    for (auto& g : phase.middle)
      for (auto& v : g)
        v = static_cast<std::uint8_t>(counterlab::next_below(state, 4));
    for (auto& v : phase.last)
      v = static_cast<std::uint8_t>(counterlab::next_below(state, 2));
    spec.gates.push_back(phase);
  }
  return spec;
}

IbcSpec ibc_long_counter() {
  // Found by seeded hill-climbing over single-layer 6-bit assignments; the
  // compiled circuit walks through 63 distinct states, the most any local
  // circuit admits on 6 wires.
  IbcSpec spec;
  spec.n = 6;
  spec.layers = 1;
  IbcPhaseGates phase;
  phase.first = {0, 1};
  phase.middle = {
      std::array<std::uint8_t, 4>{3, 1, 0, 2},
      std::array<std::uint8_t, 4>{1, 2, 0, 3},
      std::array<std::uint8_t, 4>{3, 1, 0, 2},
      std::array<std::uint8_t, 4>{1, 3, 2, 0},
      std::array<std::uint8_t, 4>{1, 3, 0, 2},
  };
  phase.last = {0, 1};
  spec.gates.push_back(phase);
  return spec;
}

Exemplar build_ibc(const IbcSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2 || n % 2 != 0) throw InvalidSpec("bit width must be even");
  if (spec.layers < 1) throw InvalidSpec("at least one layer");
  if (spec.gates.size() != spec.layers)
    throw InvalidSpec("one gate assignment per layer");
  for (const IbcPhaseGates& phase : spec.gates) {
    if (phase.middle.size() != n - 1)
      throw InvalidSpec("wrong number of two-bit gates");
    for (const auto& g : phase.middle)
      for (std::uint8_t v : g)
        if (v > 3) throw InvalidSpec("malformed two-bit gate table");
    for (std::uint8_t v : phase.first)
      if (v > 1) throw InvalidSpec("malformed one-bit gate table");
    for (std::uint8_t v : phase.last)
      if (v > 1) throw InvalidSpec("malformed one-bit gate table");
  }

  Exemplar ex;
  ex.n = n;
  TileSet& ts = ex.tiles;
  const std::size_t L = spec.layers;

  auto tag = [](const std::string& base, std::size_t p) {
    return base + "@" + std::to_string(p);
  };
  for (std::size_t p = 0; p < L; ++p) {
    const std::size_t prev = (p + L - 1) % L;
    const IbcPhaseGates& gates = spec.gates[p];
    // z_0: seam anchored on the previous layer's anchor glue.
    ts.tiles.push_back(tile("ibc0" + tag("", p), eps_glue(tag("q0", p), 1),
                            Glue{}, Glue{}, eps_glue(tag("a", prev), 2)));
    // z_1: one-bit gate turning its wire into the chain.
    for (int a = 0; a < 2; ++a) {
      ts.tiles.push_back(tile(
          "ibc1" + tag("", p) + std::to_string(a),
          bit_glue(tag("c1", p), gates.first[a], 1), eps_glue(tag("a", p), 2),
          eps_glue(tag("q0", p), 1), bit_glue(tag("b1", prev), a, 1)));
    }
    // z_2 .. z_n: two-bit gates consuming (chain, wire), emitting
    // (dropped wire, chain).
    for (std::size_t k = 2; k <= n; ++k) {
      const auto& g = gates.middle[k - 2];
      for (int u = 0; u < 2; ++u) {
        for (int s = 0; s < 2; ++s) {
          const int out = g[2 * u + s];
          ts.tiles.push_back(
              tile("ibc" + std::to_string(k) + tag("", p) + std::to_string(u) +
                       std::to_string(s),
                   bit_glue(tag("c" + std::to_string(k), p), out & 1, 1),
                   bit_glue(tag("b" + std::to_string(k - 1), p), out >> 1, 1),
                   bit_glue(tag("c" + std::to_string(k - 1), p), u, 1),
                   bit_glue(tag("b" + std::to_string(k), prev), s, 1)));
        }
      }
    }
    // z_{n+1}: one-bit gate emitting the last wire.
    for (int u = 0; u < 2; ++u) {
      ts.tiles.push_back(
          tile("ibct" + tag("", p) + std::to_string(u),
               eps_glue(tag("qt", p), 2),
               bit_glue(tag("b" + std::to_string(n), p), gates.last[u], 1),
               bit_glue(tag("c" + std::to_string(n), p), u, 1),
               eps_glue(tag("t", prev), 1)));
    }
    // z_{n+2}: top seam.
    ts.tiles.push_back(tile("ibcs" + tag("", p), Glue{},
                            eps_glue(tag("t", p), 1), eps_glue(tag("qt", p), 2),
                            Glue{}));
  }

  const std::size_t last = L - 1;
  ts.tiles.push_back(seed_tile("sA", eps_glue(tag("a", last), 2)));
  for (std::size_t k = 1; k <= n; ++k)
    for (int b = 0; b < 2; ++b)
      ts.tiles.push_back(
          seed_tile("s" + std::to_string(k) + std::to_string(b),
                    bit_glue(tag("b" + std::to_string(k), last), b, 1)));
  ts.tiles.push_back(seed_tile("sT", eps_glue(tag("t", last), 1)));
  ts.validate();

  const int anchor_idx = ts.tile_index("sA");
  const int top_idx = ts.tile_index("sT");
  std::vector<std::array<int, 2>> row_idx(n + 1);
  for (std::size_t k = 1; k <= n; ++k)
    for (int b = 0; b < 2; ++b)
      row_idx[k][b] =
          ts.tile_index("s" + std::to_string(k) + std::to_string(b));
  ex.seed_for = [anchor_idx, top_idx, row_idx, n](std::uint32_t x) {
    Assembly a;
    a.at[Pos{0, 0}] = anchor_idx;
    for (std::size_t k = 1; k <= n; ++k)
      a.at[Pos{0, static_cast<int>(k)}] = row_idx[k][bit_of(x, n, k - 1)];
    a.at[Pos{0, static_cast<int>(n) + 1}] = top_idx;
    return a;
  };

  const int li = static_cast<int>(L);
  const int ni = static_cast<int>(n);
  ex.curve = atam::vertical_cut(0, 0, ni + 1);
  ex.v = Pos{li, li};
  ex.layer_region = Box{0, li + 1, -1, li + ni + 3};
  ex.region_for_layers = [li, ni](std::size_t k) {
    const int cols = li * static_cast<int>(k) + 1;
    return Box{0, cols, -1, cols + ni + 3};
  };
  return ex;
}

// ---------------------------------------------------------------------------
// Zig-zig: increment-only columns. The least significant bit sits on the top
// row; the anchor glue is strength 2 there and the carry ripples downward,
// so every column adds one to the reading.

Exemplar build_zigzig(std::size_t n) {
  if (n < 2) throw InvalidSpec("zig-zig needs at least two rows");
  Exemplar ex;
  ex.n = n;
  TileSet& ts = ex.tiles;
  const int top = static_cast<int>(n) - 1;

  auto wire = [](std::size_t r) { return "r" + std::to_string(r); };
  auto carry = [](std::size_t r) { return "d" + std::to_string(r); };

  for (int s = 0; s < 2; ++s) {
    // Top row: flips the least significant bit and starts the carry.
    ts.tiles.push_back(tile("zz" + std::to_string(top) + std::to_string(s),
                            Glue{}, bit_glue(wire(top), 1 - s, 2),
                            bit_glue(carry(top), s, 1),
                            bit_glue(wire(top), s, 2)));
  }
  for (std::size_t r = 1; r + 1 < n; ++r) {
    for (int s = 0; s < 2; ++s) {
      for (int c = 0; c < 2; ++c) {
        ts.tiles.push_back(tile(
            "zz" + std::to_string(r) + std::to_string(s) + std::to_string(c),
            bit_glue(carry(r + 1), c, 1), bit_glue(wire(r), s ^ c, 1),
            bit_glue(carry(r), s & c, 1), bit_glue(wire(r), s, 1)));
      }
    }
  }
  for (int s = 0; s < 2; ++s) {
    for (int c = 0; c < 2; ++c) {
      // Bottom row: the final carry is dropped (arithmetic is mod 2^n).
      ts.tiles.push_back(tile("zz0" + std::to_string(s) + std::to_string(c),
                              bit_glue(carry(1), c, 1),
                              bit_glue(wire(0), s ^ c, 1), Glue{},
                              bit_glue(wire(0), s, 1)));
    }
  }

  for (std::size_t r = 0; r < n; ++r)
    for (int b = 0; b < 2; ++b)
      ts.tiles.push_back(
          seed_tile("s" + std::to_string(r) + std::to_string(b),
                    bit_glue(wire(r), b, r + 1 == n ? 2 : 1)));
  ts.validate();

  std::vector<std::array<int, 2>> row_idx(n);
  for (std::size_t r = 0; r < n; ++r)
    for (int b = 0; b < 2; ++b)
      row_idx[r][b] =
          ts.tile_index("s" + std::to_string(r) + std::to_string(b));
  ex.seed_for = [row_idx, n](std::uint32_t x) {
    Assembly a;
    for (std::size_t r = 0; r < n; ++r)
      a.at[Pos{0, static_cast<int>(r)}] = row_idx[r][bit_of(x, n, r)];
    return a;
  };

  ex.curve = atam::vertical_cut(0, 0, top);
  ex.v = Pos{1, 0};
  ex.layer_region = Box{0, 2, -1, static_cast<int>(n)};
  ex.region_for_layers = [n](std::size_t k) {
    return Box{0, static_cast<int>(k) + 1, -1, static_cast<int>(n)};
  };
  return ex;
}

// ---------------------------------------------------------------------------
// Zig-zag: an increment column (bottom-up, carry seeded above a trigger row)
// followed by a copy-back column (top-down) that also folds the all-ones
// state so the payload orbit has exactly 2^(n-1) distinct states.

Exemplar build_zigzag(std::size_t n, ZigzagInterp interp) {
  if (n < 3) throw InvalidSpec("zig-zag needs at least three wires");
  Exemplar ex;
  TileSet& ts = ex.tiles;
  const std::size_t rows = n;            // payload rows 1..n-1, trigger row 0
  const int cap = static_cast<int>(n);   // cap row index

  const bool eps_top = interp == ZigzagInterp::EpsTop;
  auto trigger_glue = [&](int t, int strength) {
    Glue g = bit_glue("t", t, strength);
    if (eps_top) g.bit = Bit::Eps;
    return g;
  };

  // Zig column.
  for (int t = 0; t < 2; ++t) {
    ts.tiles.push_back(tile("zgT" + std::to_string(t),
                            Glue{"c1", 1, Bit::One}, eps_glue("zs", 1), Glue{},
                            trigger_glue(t, 2)));
  }
  for (int s = 0; s < 2; ++s) {
    ts.tiles.push_back(tile("zgA1" + std::to_string(s),
                            bit_glue("c2", s, 1), bit_glue("m1", 1 - s, 1),
                            Glue{"c1", 1, Bit::One}, bit_glue("p1", s, 1)));
  }
  for (std::size_t r = 2; r < rows; ++r) {
    for (int s = 0; s < 2; ++s) {
      for (int c = 0; c < 2; ++c) {
        ts.tiles.push_back(tile(
            "zgA" + std::to_string(r) + std::to_string(s) + std::to_string(c),
            bit_glue("c" + std::to_string(r + 1), s & c, 1),
            bit_glue("m" + std::to_string(r), s ^ c, 1),
            bit_glue("c" + std::to_string(r), c, 1),
            bit_glue("p" + std::to_string(r), s, 1)));
      }
    }
  }
  for (int v = 0; v < 2; ++v) {
    ts.tiles.push_back(tile("zgC" + std::to_string(v), Glue{},
                            bit_glue("w", v, 2),
                            bit_glue("c" + std::to_string(rows), v, 1),
                            eps_glue("ks", 1)));
  }

  // Zag column.
  for (int v = 0; v < 2; ++v) {
    ts.tiles.push_back(
        tile("zgD" + std::to_string(v), Glue{}, eps_glue("ks", 1),
             bit_glue("d" + std::to_string(rows - 1), v, 1),
             bit_glue("w", v, 2)));
  }
  for (std::size_t r = rows - 1; r >= 1; --r) {
    for (int y = 0; y < 2; ++y) {
      for (int v = 0; v < 2; ++v) {
        const int out = (r == 2) ? y : (y | v);  // fold skips bit value 2
        ts.tiles.push_back(tile(
            "zgF" + std::to_string(r) + std::to_string(y) + std::to_string(v),
            bit_glue("d" + std::to_string(r), v, 1),
            bit_glue("p" + std::to_string(r), out, 1),
            bit_glue("d" + std::to_string(r - 1), v, 1),
            bit_glue("m" + std::to_string(r), y, 1)));
      }
    }
  }
  for (int v = 0; v < 2; ++v) {
    ts.tiles.push_back(tile("zgB" + std::to_string(v),
                            bit_glue("d0", v, 1), trigger_glue(1, 2), Glue{},
                            eps_glue("zs", 1)));
  }

  for (int t = 0; t < 2; ++t)
    ts.tiles.push_back(seed_tile("sT" + std::to_string(t), trigger_glue(t, 2)));
  for (std::size_t r = 1; r < rows; ++r)
    for (int b = 0; b < 2; ++b)
      ts.tiles.push_back(
          seed_tile("s" + std::to_string(r) + std::to_string(b),
                    bit_glue("p" + std::to_string(r), b, 1)));
  ts.tiles.push_back(seed_tile("sK", eps_glue("ks", 1)));
  ts.validate();

  // EpsTop drops the trigger wire from the reading; seeds fix the trigger
  // glue to its counting value.
  ex.n = eps_top ? n - 1 : n;
  const std::size_t wires = ex.n;
  std::array<int, 2> trig_idx{ts.tile_index("sT0"), ts.tile_index("sT1")};
  const int cap_idx = ts.tile_index("sK");
  std::vector<std::array<int, 2>> row_idx(n);
  for (std::size_t r = 1; r < n; ++r)
    for (int b = 0; b < 2; ++b)
      row_idx[r][b] =
          ts.tile_index("s" + std::to_string(r) + std::to_string(b));
  ex.seed_for = [trig_idx, cap_idx, row_idx, n, eps_top,
                 wires](std::uint32_t x) {
    Assembly a;
    const int t = eps_top ? 1 : bit_of(x, wires, 0);
    a.at[Pos{0, 0}] = trig_idx[t];
    for (std::size_t r = 1; r < n; ++r) {
      const std::size_t wire = eps_top ? r - 1 : r;
      a.at[Pos{0, static_cast<int>(r)}] = row_idx[r][bit_of(x, wires, wire)];
    }
    a.at[Pos{0, static_cast<int>(n)}] = cap_idx;
    return a;
  };

  ex.curve = atam::vertical_cut(0, 0, cap);
  ex.v = Pos{2, 0};
  ex.layer_region = Box{0, 3, -1, cap + 1};
  ex.region_for_layers = [cap](std::size_t k) {
    return Box{0, 2 * static_cast<int>(k) + 1, -1, cap + 1};
  };
  return ex;
}

}  // namespace exemplars

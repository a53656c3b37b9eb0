#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "atam.hpp"
#include "doctest.h"
#include "exemplars.hpp"

using atam::Assembly;
using atam::Bit;
using atam::Box;
using atam::Dir;
using atam::Glue;
using atam::GlueCurve;
using atam::HalfPos;
using atam::Pos;
using atam::Side;
using atam::TileSet;
using atam::TileSystem;
using atam::TileType;

namespace {

TileType make_tile(const std::string& name, Glue n, Glue e, Glue s, Glue w) {
  TileType t;
  t.name = name;
  t.sides[atam::North] = n;
  t.sides[atam::East] = e;
  t.sides[atam::South] = s;
  t.sides[atam::West] = w;
  return t;
}

Glue g1(const std::string& name, Bit b = Bit::Eps) { return Glue{name, 1, b}; }
Glue g2(const std::string& name, Bit b = Bit::Eps) { return Glue{name, 2, b}; }

}  // namespace

TEST_CASE("sides of a straight vertical cut") {
  const GlueCurve c = atam::vertical_cut(0, -2, 2);
  CHECK(c.side(Pos{0, 0}) == Side::LHS);
  CHECK(c.side(Pos{1, 0}) == Side::RHS);
  CHECK(c.side(Pos{-3, 5}) == Side::LHS);   // above the segments, west
  CHECK(c.side(Pos{4, -7}) == Side::RHS);   // below the segments, east
  const GlueCurve shifted = c.translated(2, 0);
  CHECK(shifted.side(Pos{1, 0}) == Side::LHS);
  // Translation consistency.
  for (int x = -2; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      CHECK(shifted.side(Pos{x, y}) == c.side(Pos{x - 2, y}));
}

TEST_CASE("sides of a staircase cut") {
  // Up x=0.5 to y=0.5, east one cell, up x=1.5 onwards.
  const GlueCurve c(std::vector<HalfPos>{
      HalfPos{1, 0}, HalfPos{2, 1}, HalfPos{3, 2}, HalfPos{3, 4}});
  CHECK(c.side(Pos{0, 0}) == Side::LHS);
  CHECK(c.side(Pos{1, 0}) == Side::RHS);
  CHECK(c.side(Pos{1, 1}) == Side::LHS);  // tucked west of the upper run
  CHECK(c.side(Pos{2, 1}) == Side::RHS);
  const auto [lhs, rhs] = c.segment_tiles(HalfPos{2, 1});
  CHECK(lhs == Pos{1, 1});
  CHECK(rhs == Pos{1, 0});
}

TEST_CASE("curve validation") {
  CHECK_THROWS(GlueCurve({}));
  CHECK_THROWS(GlueCurve(std::vector<HalfPos>{HalfPos{0, 0}}));  // not an edge
  CHECK_THROWS(GlueCurve(
      std::vector<HalfPos>{HalfPos{1, 0}, HalfPos{1, 4}}));  // gap
  CHECK_NOTHROW(GlueCurve(std::vector<HalfPos>{HalfPos{1, 0}, HalfPos{1, 2}}));
}

TEST_CASE("attachment rules at temperature 2") {
  TileSet ts;
  ts.tiles.push_back(make_tile("seed", Glue{}, g2("a", Bit::One), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("t", Glue{}, Glue{}, Glue{}, g2("a", Bit::One)));
  ts.validate();
  Assembly seed;
  seed.at[Pos{0, 0}] = 0;
  TileSystem sys{ts, seed, 2};
  const auto placements = atam::attachable(sys, seed);
  REQUIRE(placements.size() == 1);
  CHECK(placements[0].pos == Pos{1, 0});
  CHECK(placements[0].tile == 1);
  CHECK(placements[0].input_sides == (1u << atam::West));
}

TEST_CASE("single strength-1 bonds do not attach; cooperative corners do") {
  TileSet ts;
  ts.tiles.push_back(make_tile("sw", Glue{}, g1("p"), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("ss", g1("q"), Glue{}, Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("c", Glue{}, Glue{}, g1("q"), g1("p")));
  ts.validate();
  Assembly seed;
  seed.at[Pos{0, 1}] = 0;  // presents p eastward
  seed.at[Pos{0, 0}] = 1;  // hmm: this one presents q northward
  TileSystem sys{ts, seed, 2};

  // Tile c wants west p and south q; only position (1,1) has both after the
  // second seed tile moves east.
  Assembly corner;
  corner.at[Pos{0, 1}] = 0;
  corner.at[Pos{1, 0}] = 1;
  TileSystem sys2{ts, corner, 2};
  const auto placements = atam::attachable(sys2, corner);
  REQUIRE(placements.size() == 1);
  CHECK(placements[0].pos == Pos{1, 1});
  CHECK(placements[0].input_sides ==
        ((1u << atam::West) | (1u << atam::South)));

  // With only one strength-1 neighbour nothing sticks.
  Assembly lone;
  lone.at[Pos{0, 1}] = 0;
  TileSystem sys3{ts, lone, 2};
  CHECK(atam::attachable(sys3, lone).empty());
}

TEST_CASE("assembly of a seed-only system is the seed") {
  TileSet ts;
  ts.tiles.push_back(make_tile("seed", Glue{}, g1("x"), Glue{}, Glue{}));
  ts.validate();
  Assembly seed;
  seed.at[Pos{0, 0}] = 0;
  TileSystem sys{ts, seed, 2};
  const atam::AssembleResult r = atam::assemble(sys, Box{-2, 2, -2, 2});
  CHECK(r.terminal.at == seed.at);
  CHECK(r.deterministic);
  CHECK(r.sequence.empty());
  CHECK(!r.escaped);
}

TEST_CASE("ambiguous attachment clears the deterministic flag") {
  TileSet ts;
  ts.tiles.push_back(make_tile("seed", Glue{}, g2("a"), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("t0", Glue{}, Glue{}, Glue{}, g2("a")));
  ts.tiles.push_back(make_tile("t1", g1("z"), Glue{}, Glue{}, g2("a")));
  ts.validate();
  Assembly seed;
  seed.at[Pos{0, 0}] = 0;
  TileSystem sys{ts, seed, 2};
  const atam::AssembleResult r = atam::assemble(sys, Box{-2, 2, -2, 2});
  CHECK(!r.deterministic);
  CHECK(r.terminal.at.size() == 2);
  CHECK(r.terminal.at.at(Pos{1, 0}) == 1);  // smallest tile index wins
}

TEST_CASE("growth outside the region sets the escape flag") {
  TileSet ts;
  ts.tiles.push_back(make_tile("seed", Glue{}, g2("a"), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("t", Glue{}, g2("a"), Glue{}, g2("a")));
  ts.validate();
  Assembly seed;
  seed.at[Pos{0, 0}] = 0;
  TileSystem sys{ts, seed, 2};
  const atam::AssembleResult r = atam::assemble(sys, Box{0, 3, 0, 0});
  CHECK(r.terminal.at.size() == 4);
  CHECK(r.escaped);
}

TEST_CASE("bits along curves") {
  TileSet ts;
  ts.tiles.push_back(make_tile("b1", Glue{}, g1("one", Bit::One), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("b0", Glue{}, g1("zero", Bit::Zero), Glue{}, Glue{}));
  ts.tiles.push_back(make_tile("be", Glue{}, g1("eps"), Glue{}, Glue{}));
  ts.validate();
  Assembly a;
  a.at[Pos{0, 0}] = 0;
  a.at[Pos{0, 1}] = 2;
  a.at[Pos{0, 2}] = 1;
  const GlueCurve c = atam::vertical_cut(0, 0, 2);
  CHECK(atam::bits_along_curve(ts, a, c) == "10");

  const GlueCurve eps_only = atam::vertical_cut(0, 1, 1);
  CHECK(atam::bits_along_curve(ts, a, eps_only).empty());

  const GlueCurve off = atam::vertical_cut(0, 5, 6);
  CHECK_THROWS_AS(atam::bits_along_curve(ts, a, off), atam::CurveOffAssembly);
}

TEST_CASE("state and bit-string conversions") {
  CHECK(atam::state_to_bits(5, 4) == "0101");
  CHECK(atam::bits_to_state("0101") == 5);
  CHECK(atam::bits_to_state(atam::state_to_bits(19, 6)) == 19);
}

TEST_CASE("canonical and forced-order assembly reach the same terminal") {
  const exemplars::Exemplar ex = exemplars::build_copy(3);
  for (std::uint32_t x = 0; x < 8; ++x) {
    TileSystem sys{ex.tiles, ex.seed_for(x), ex.temperature};
    const atam::GlueCurve cv = ex.curve.translated(ex.v.x, ex.v.y);
    const atam::AssembleResult canonical =
        atam::assemble(sys, ex.layer_region, &cv);
    std::vector<Pos> order;
    for (const auto& p : canonical.sequence) order.push_back(p.pos);
    const atam::AssembleResult forced = atam::assemble_forced(sys, order);
    CHECK(forced.terminal.at == canonical.terminal.at);
  }
}

TEST_CASE("iterate layers detects undersized regions") {
  const exemplars::Exemplar ex = exemplars::build_copy(3);
  TileSystem sys{ex.tiles, ex.seed_for(5), ex.temperature};
  CHECK_THROWS_AS(
      atam::iterate_layers(sys, ex.curve, ex.v, 9, ex.region_for_layers(2)),
      atam::RegionOverflow);
}

TEST_CASE("tileset and bundle JSON round trips") {
  const exemplars::Exemplar ex = exemplars::build_copy(3);
  const std::string bundle = atam::system_bundle_to_json(
      ex.tiles, ex.temperature, ex.n, ex.curve, ex.v, ex.layer_region,
      ex.seed_for);
  const atam::SystemBundle back = atam::bundle_from_json(bundle);
  CHECK(back.n == ex.n);
  CHECK(back.seeds.size() == 8);
  const std::string again = atam::system_bundle_to_json(
      back.tiles, back.temperature, back.n, back.curve, back.v, back.region,
      back.seed_fn());
  CHECK(again == bundle);

  const std::string one = atam::tileset_to_json(ex.tiles, 2, nullptr);
  const atam::TileSystem sys = atam::tileset_from_json(one);
  CHECK(sys.tiles.tiles.size() == ex.tiles.tiles.size());

  const std::string cj = atam::curve_to_json(ex.curve);
  CHECK(atam::curve_to_json(atam::curve_from_json(cj)) == cj);
}

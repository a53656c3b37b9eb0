#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "atam.hpp"
#include "doctest.h"
#include "exemplars.hpp"
#include "railway.hpp"

using atam::TileSystem;
using exemplars::Exemplar;
using permfn::FiniteFunction;

namespace {

atam::LayerReport check(const Exemplar& ex) {
  const atam::LayerCheckInput input = ex.layer_input();
  return atam::check_layer_computes(input);
}

}  // namespace

TEST_CASE("copy layer computes the identity and compiles to five sections") {
  const Exemplar ex = exemplars::build_copy(3);
  const atam::LayerReport report = check(ex);
  CHECK(report.layer_function == FiniteFunction::identity(8));
  REQUIRE(report.positions.size() == 5);
  CHECK(report.positions[0].arity == 0);
  CHECK(report.positions[4].arity == 0);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(report.positions[i].arity == 1);

  const railway::RailwayCircuit c = atam::compile_to_railway(report);
  CHECK(c.sections() == 5);
  CHECK(railway::is_local(c));
  CHECK(railway::circuit_function(c) == FiniteFunction::identity(8));
}

TEST_CASE("copy layers iterate") {
  const Exemplar ex = exemplars::build_copy(3);
  TileSystem sys{ex.tiles, ex.seed_for(5), ex.temperature};
  const auto readings = atam::iterate_layers(
      sys, ex.curve, ex.v, 4, ex.region_for_layers(4),
      FiniteFunction::identity(8));
  REQUIRE(readings.size() == 4);
  for (const std::string& r : readings) CHECK(r == "101");
}

TEST_CASE("identity IBC layer-computes the identity") {
  const Exemplar ex = exemplars::build_ibc(exemplars::ibc_identity(6, 1));
  // One seam, two one-bit and five two-bit positions per layer, plus the
  // top seam: 26 layer tiles and 14 seed tiles.
  CHECK(ex.tiles.tiles.size() == 26 + 14);
  const atam::LayerReport report = check(ex);
  CHECK(report.layer_function == FiniteFunction::identity(64));
  REQUIRE(report.positions.size() == 9);
  CHECK(report.positions[0].arity == 0);
  CHECK(report.positions[1].arity == 1);
  for (std::size_t k = 2; k <= 6; ++k) CHECK(report.positions[k].arity == 2);
  CHECK(report.positions[7].arity == 1);
  CHECK(report.positions[8].arity == 0);

  const railway::RailwayCircuit c = atam::compile_to_railway(report);
  CHECK(c.sections() == 9);
  CHECK(railway::is_local(c));
  CHECK(railway::counter_value(c).counter_value == 1);
}

TEST_CASE("IBC gate assignments are free parameters") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Exemplar ex =
        exemplars::build_ibc(exemplars::ibc_random(6, 1, seed));
    const atam::LayerReport report = check(ex);
    const railway::RailwayCircuit c = atam::compile_to_railway(report);
    CHECK(railway::circuit_function(c) == report.layer_function);
    CHECK(railway::counter_value(c).counter_value < 64);
    CHECK(railway::verify_atomic_restrictions(c).pass);
  }
}

TEST_CASE("two-layer IBC") {
  const Exemplar ex = exemplars::build_ibc(exemplars::ibc_identity(4, 2));
  const atam::LayerReport report = check(ex);
  CHECK(report.positions.size() == 14);  // (n + 3) per layer
  CHECK(report.layer_function == FiniteFunction::identity(16));
}

TEST_CASE("IBC spec validation") {
  CHECK_THROWS_AS(exemplars::build_ibc(exemplars::ibc_identity(5, 1)),
                  exemplars::InvalidSpec);
  exemplars::IbcSpec bad = exemplars::ibc_identity(4, 1);
  bad.gates.clear();
  CHECK_THROWS_AS(exemplars::build_ibc(bad), exemplars::InvalidSpec);
}

TEST_CASE("the stored long-counter assignment walks 63 states") {
  const exemplars::IbcSpec spec = exemplars::ibc_long_counter();
  const Exemplar ex = exemplars::build_ibc(spec);
  const atam::LayerReport report = check(ex);
  const railway::RailwayCircuit c = atam::compile_to_railway(report);
  const railway::CounterReport counter = railway::counter_value(c);
  CHECK(counter.counter_value == 63);
  CHECK(railway::verify_atomic_restrictions(c).pass);
}

TEST_CASE("zig-zig columns increment the reading") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Exemplar ex = exemplars::build_zigzig(n);
    const std::size_t m = std::size_t{1} << n;
    for (std::uint32_t x = 0; x < m; ++x) {
      TileSystem sys{ex.tiles, ex.seed_for(x), ex.temperature};
      const auto readings =
          atam::iterate_layers(sys, ex.curve, ex.v, m, ex.region_for_layers(m));
      REQUIRE(readings.size() == m);
      std::set<std::string> distinct(readings.begin(), readings.end());
      CHECK(distinct.size() == m);
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(atam::bits_to_state(readings[j]) ==
              static_cast<std::uint32_t>((x + j) % m));
      }
    }
  }
}

TEST_CASE("zig-zig is not clean") {
  const Exemplar ex = exemplars::build_zigzig(3);
  CHECK_THROWS_AS(check(ex), atam::Unclean);
  try {
    check(ex);
  } catch (const atam::Unclean& e) {
    // The carry starts at the top tile and is dropped at the bottom one.
    REQUIRE(e.position_indices.size() == 2);
    CHECK(e.position_indices[0] == 0);
    CHECK(e.position_indices[1] == 2);
  }
}

TEST_CASE("zig-zag with all bits encoding is clean and counts to half") {
  for (std::size_t n : {3ull, 4ull, 6ull}) {
    const Exemplar ex =
        exemplars::build_zigzag(n, exemplars::ZigzagInterp::AllBits);
    const atam::LayerReport report = check(ex);
    CHECK(report.positions.size() == 2 * (n + 1));
    const railway::RailwayCircuit c = atam::compile_to_railway(report);
    CHECK(railway::is_local(c));
    CHECK(railway::circuit_function(c) == report.layer_function);
    CHECK(railway::counter_value(c).counter_value ==
          (std::size_t{1} << (n - 1)));
    CHECK(railway::verify_atomic_restrictions(c).pass);
  }
}

TEST_CASE("zig-zag with a grey trigger wire fails at the trigger endpoints") {
  const Exemplar ex =
      exemplars::build_zigzag(6, exemplars::ZigzagInterp::EpsTop);
  CHECK(ex.n == 5);
  try {
    check(ex);
    FAIL("expected the layer check to reject the grey interpretation");
  } catch (const atam::Unclean& e) {
    REQUIRE(e.position_indices.size() == 2);
    CHECK(e.position_indices[0] == 0);
    CHECK(e.position_indices[1] == 13);
  }
}

TEST_CASE("zig-zag with a grey trigger wire is a maximal five-bit counter") {
  const Exemplar ex =
      exemplars::build_zigzag(6, exemplars::ZigzagInterp::EpsTop);
  TileSystem sys{ex.tiles, ex.seed_for(0), ex.temperature};
  const std::size_t layers = 33;
  const auto readings = atam::iterate_layers(sys, ex.curve, ex.v, layers,
                                             ex.region_for_layers(layers));
  std::set<std::string> distinct(readings.begin(), readings.end());
  CHECK(distinct.size() == 32);
  for (const std::string& r : readings) CHECK(r.size() == 5);
}

TEST_CASE("builders round-trip through the bundle format") {
  const Exemplar exs[] = {
      exemplars::build_copy(3),
      exemplars::build_ibc(exemplars::ibc_identity(4, 1)),
      exemplars::build_zigzig(3),
      exemplars::build_zigzag(4, exemplars::ZigzagInterp::AllBits),
  };
  for (const Exemplar& ex : exs) {
    const std::string bundle = atam::system_bundle_to_json(
        ex.tiles, ex.temperature, ex.n, ex.curve, ex.v, ex.layer_region,
        ex.seed_for);
    const atam::SystemBundle back = atam::bundle_from_json(bundle);
    const std::string again = atam::system_bundle_to_json(
        back.tiles, back.temperature, back.n, back.curve, back.v, back.region,
        back.seed_fn());
    CHECK(again == bundle);
  }
}

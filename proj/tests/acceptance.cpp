// Acceptance suite: each case checks one numbered criterion end to end and
// prints a single pass line with its wall time. Every threshold is pinned
// here; nothing is calibrated at run time.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>

#include "atam.hpp"
#include "counterlab.hpp"
#include "doctest.h"
#include "exemplars.hpp"
#include "permfn.hpp"
#include "railway.hpp"

using permfn::FiniteFunction;
using permfn::Parity;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(const char* label) : label_(label) {
    start_ = std::chrono::steady_clock::now();
  }
  void done() const {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const double ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
    std::printf("[PASS] %s (%.1f ms)\n", label_, ms);
    std::fflush(stdout);
  }

 private:
  const char* label_;
  std::chrono::steady_clock::time_point start_;
};

FiniteFunction fn(std::vector<std::uint32_t> t) {
  return FiniteFunction(std::move(t));
}

template <typename Visit>
void all_functions(std::size_t m, Visit visit) {
  std::vector<std::uint32_t> t(m, 0);
  for (;;) {
    visit(FiniteFunction(t));
    std::size_t pos = 0;
    while (pos < m && ++t[pos] == m) {
      t[pos] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
}

FiniteFunction random_function(std::uint64_t& state, std::size_t m) {
  std::vector<std::uint32_t> t(m);
  for (auto& v : t)
    v = static_cast<std::uint32_t>(counterlab::next_below(state, m));
  return FiniteFunction(std::move(t));
}

FiniteFunction random_permutation(std::uint64_t& state, std::size_t m) {
  std::vector<std::uint32_t> t(m);
  std::iota(t.begin(), t.end(), 0);
  for (std::size_t i = m; i > 1; --i) {
    const std::size_t j =
        static_cast<std::size_t>(counterlab::next_below(state, i));
    std::swap(t[i - 1], t[j]);
  }
  return FiniteFunction(std::move(t));
}

std::vector<FiniteFunction> symmetric_group(std::size_t m) {
  std::vector<std::uint32_t> t(m);
  std::iota(t.begin(), t.end(), 0);
  std::vector<FiniteFunction> out;
  do {
    out.push_back(FiniteFunction(t));
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

atam::LayerReport layer_report(const exemplars::Exemplar& ex) {
  return atam::check_layer_computes(ex.layer_input());
}

}  // namespace

TEST_CASE("criterion 1: parity of the reference permutations") {
  Stopwatch watch("criterion 1: parity examples");
  REQUIRE(permfn::parity(fn({1, 0, 3, 2})) == Parity::Even);
  REQUIRE(permfn::parity(fn({0, 2, 1})) == Parity::Odd);
  watch.done();
}

TEST_CASE("criterion 2: ramification of the reference function") {
  Stopwatch watch("criterion 2: ramification example");
  const FiniteFunction f = fn({0, 1, 1, 1, 2, 2, 3});
  REQUIRE(permfn::ramification_degree(f) == 3);
  REQUIRE(permfn::image_size(f) == 4);
  watch.done();
}

TEST_CASE("criterion 3: ramification equals m minus image size, m <= 5") {
  Stopwatch watch("criterion 3: ramification identity for all m <= 5");
  for (std::size_t m = 1; m <= 5; ++m) {
    all_functions(m, [&](const FiniteFunction& f) {
      REQUIRE(permfn::ramification_degree(f) == m - permfn::image_size(f));
    });
  }
  watch.done();
}

TEST_CASE("criterion 4: composition never lowers ramification") {
  Stopwatch watch("criterion 4: composition bound, exhaustive and sampled");
  for (std::size_t m : {3ull, 4ull}) {
    std::vector<FiniteFunction> fns;
    all_functions(m, [&](const FiniteFunction& f) { fns.push_back(f); });
    for (const FiniteFunction& f : fns) {
      const std::size_t rf = permfn::ramification_degree(f);
      for (const FiniteFunction& g : fns) {
        REQUIRE(permfn::ramification_degree(permfn::compose(f, g)) >=
                std::max(rf, permfn::ramification_degree(g)));
      }
    }
  }
  std::uint64_t state = 2026;
  for (int i = 0; i < 10000; ++i) {
    const FiniteFunction f = random_function(state, 64);
    const FiniteFunction g = random_function(state, 64);
    REQUIRE(permfn::ramification_degree(permfn::compose(f, g)) >=
            std::max(permfn::ramification_degree(f),
                     permfn::ramification_degree(g)));
  }
  watch.done();
}

TEST_CASE("criterion 5: parity multiplication table and k-cycle parity") {
  Stopwatch watch("criterion 5: parity table over S4 and k-cycles to m = 8");
  const auto s4 = symmetric_group(4);
  REQUIRE(s4.size() == 24);
  for (const FiniteFunction& f : s4) {
    for (const FiniteFunction& g : s4) {
      const bool odd =
          (permfn::parity(f) == Parity::Odd) != (permfn::parity(g) == Parity::Odd);
      REQUIRE(permfn::parity(permfn::compose(f, g)) ==
              (odd ? Parity::Odd : Parity::Even));
    }
  }
  for (std::size_t m = 1; m <= 8; ++m) {
    for (const FiniteFunction& f : symmetric_group(m)) {
      for (std::size_t k = 1; k <= m; ++k) {
        if (!permfn::is_k_cycle(f, k)) continue;
        REQUIRE(permfn::parity(f) ==
                (((k - 1) % 2 == 0) ? Parity::Even : Parity::Odd));
      }
    }
  }
  watch.done();
}

TEST_CASE("criterion 6: the two parity routes agree") {
  Stopwatch watch("criterion 6: inversion parity vs swap parity");
  for (const FiniteFunction& f : symmetric_group(5))
    REQUIRE(permfn::parity(f) == permfn::parity_by_swaps(f));
  std::uint64_t state = 99;
  for (int i = 0; i < 10000; ++i) {
    const FiniteFunction f = random_permutation(state, 256);
    REQUIRE(permfn::parity(f) == permfn::parity_by_swaps(f));
  }
  watch.done();
}

TEST_CASE("criterion 7: lifted local gates are neither odd nor quasi") {
  Stopwatch watch("criterion 7: generator certificates at n = 2, 3, 4");
  const counterlab::Certificate c3 = counterlab::certify_theorem_main(3);
  REQUIRE(c3.generators == 524);
  REQUIRE(c3.all_pass);
  const counterlab::Certificate c2 = counterlab::certify_theorem_main(2);
  REQUIRE(c2.generators == 8);
  REQUIRE(c2.all_pass);
  const counterlab::Certificate c4 = counterlab::certify_theorem_main(4, 2);
  REQUIRE(c4.generators == 784);
  REQUIRE(c4.all_pass);
  watch.done();
}

TEST_CASE("criterion 8: no maximal counter at n = 2 and n = 3") {
  Stopwatch watch("criterion 8: closure at n = 2, certificate and samples at n = 3");
  const counterlab::ClosureResult closure =
      counterlab::monoid_closure_max_counter(2);
  REQUIRE(closure.max_counter == 3);
  REQUIRE(closure.bound_holds);
  REQUIRE(counterlab::certify_theorem_main(3).all_pass);
  const std::size_t sampled = counterlab::sample_max_counter(3, 8, 10000, 1);
  REQUIRE(sampled <= 7);
  watch.done();
}

TEST_CASE("criterion 9: compiled circuits match simulated layers") {
  Stopwatch watch("criterion 9: layer/circuit equivalence on the exemplars");
  const exemplars::Exemplar systems[] = {
      exemplars::build_copy(3),
      exemplars::build_ibc(exemplars::ibc_identity(6, 1)),
      exemplars::build_ibc(exemplars::ibc_long_counter()),
      exemplars::build_zigzag(6, exemplars::ZigzagInterp::AllBits),
  };
  for (const exemplars::Exemplar& ex : systems) {
    const atam::LayerReport report = layer_report(ex);
    const railway::RailwayCircuit c = atam::compile_to_railway(report);
    REQUIRE(railway::is_local(c));
    const FiniteFunction circuit = railway::circuit_function(c);
    REQUIRE(circuit.domain_size() == (std::size_t{1} << ex.n));
    REQUIRE(circuit == report.layer_function);
  }
  watch.done();
}

TEST_CASE("criterion 10: figure-level counter values") {
  Stopwatch watch("criterion 10: zig-zig and zig-zag counters and verdicts");
  // Zig-zig, 3 bits: eight distinct column readings from any start.
  {
    const exemplars::Exemplar ex = exemplars::build_zigzig(3);
    atam::TileSystem sys{ex.tiles, ex.seed_for(0), ex.temperature};
    const auto readings =
        atam::iterate_layers(sys, ex.curve, ex.v, 8, ex.region_for_layers(8));
    REQUIRE(readings.size() == 8);
    REQUIRE(std::set<std::string>(readings.begin(), readings.end()).size() == 8);
  }
  // Zig-zag with every cut glue encoding: a 2^(n-1)-counter on n = 6 wires.
  {
    const exemplars::Exemplar ex =
        exemplars::build_zigzag(6, exemplars::ZigzagInterp::AllBits);
    const railway::RailwayCircuit c = atam::compile_to_railway(layer_report(ex));
    REQUIRE(railway::counter_value(c).counter_value == 32);
  }
  // Zig-zig fails the layer check on gate arity.
  {
    const exemplars::Exemplar ex = exemplars::build_zigzig(3);
    REQUIRE_THROWS_AS(layer_report(ex), atam::Unclean);
  }
  // Zig-zag with the trigger wire greyed out fails exactly at the trigger
  // endpoints of the layer (the first zig tile and the last zag tile).
  {
    const exemplars::Exemplar ex =
        exemplars::build_zigzag(6, exemplars::ZigzagInterp::EpsTop);
    bool unclean = false;
    try {
      layer_report(ex);
    } catch (const atam::Unclean& e) {
      unclean = true;
      REQUIRE(e.position_indices == std::vector<std::size_t>{0, 13});
    }
    REQUIRE(unclean);
  }
  watch.done();
}

TEST_CASE("criterion 11: sampled 6-bit IBC systems never reach 64 states") {
  Stopwatch watch("criterion 11: 100 sampled IBC gate assignments");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const exemplars::Exemplar ex =
        exemplars::build_ibc(exemplars::ibc_random(6, 1, seed));
    const railway::RailwayCircuit c = atam::compile_to_railway(layer_report(ex));
    REQUIRE(railway::counter_value(c).counter_value <= 63);
  }
  watch.done();
}

TEST_CASE("criterion 12: iterated layers track the compiled circuit") {
  Stopwatch watch("criterion 12: iterated cut readings on the exemplars");
  const exemplars::Exemplar systems[] = {
      exemplars::build_copy(3),
      exemplars::build_ibc(exemplars::ibc_identity(6, 1)),
      exemplars::build_ibc(exemplars::ibc_long_counter()),
      exemplars::build_zigzag(6, exemplars::ZigzagInterp::AllBits),
  };
  std::uint64_t state = 42;
  for (const exemplars::Exemplar& ex : systems) {
    const FiniteFunction f = railway::circuit_function(
        atam::compile_to_railway(layer_report(ex)));
    const std::size_t m = std::size_t{1} << ex.n;
    const std::size_t layers = std::min<std::size_t>(m, 64);
    for (int i = 0; i < 10; ++i) {
      const std::uint32_t x =
          static_cast<std::uint32_t>(counterlab::next_below(state, m));
      atam::TileSystem sys{ex.tiles, ex.seed_for(x), ex.temperature};
      const auto readings = atam::iterate_layers(
          sys, ex.curve, ex.v, layers, ex.region_for_layers(layers), f);
      REQUIRE(readings.size() == layers);
      REQUIRE(atam::bits_to_state(readings.front()) == x);
    }
  }
  watch.done();
}

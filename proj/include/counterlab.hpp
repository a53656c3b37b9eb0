#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permfn.hpp"
#include "railway.hpp"

// Enumeration and search harness over local gates and circuits: exhaustive
// monoid closure for n = 2, per-generator certificates for small n, and
// seeded random sampling of local circuits.
namespace counterlab {

struct WidthTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GeneratorSet {
  std::size_t wires{};
  std::vector<permfn::FiniteFunction> lifted;  // deduplicated by table
};

// Every gate function of width <= max_width at every placement, lifted to
// n wires and deduplicated. Requires 1 <= max_width < n and max_width <= 4.
GeneratorSet enumerate_local_gates(std::size_t n, std::size_t max_width);

// Visits every (placement, gate function) choice without deduplication, in a
// fixed deterministic order. Returns the number of gates visited.
std::size_t for_each_local_gate(
    std::size_t n, std::size_t max_width,
    const std::function<void(const railway::Gate&)>& visit);

struct ClosureResult {
  std::set<std::vector<std::uint32_t>> reached;
  std::size_t max_counter{};
  std::vector<std::uint32_t> witness_table;
  std::string certificate;  // one JSON line per generator
  bool bound_holds{};       // max_counter < 2^n
};

// Exhaustive closure of the lifted local gates under composition. Only
// n = 2 keeps the universe small enough; larger n throws TooLarge.
// A custom generator set may be supplied for experiments.
ClosureResult monoid_closure_max_counter(
    std::size_t n,
    const std::optional<std::vector<permfn::FiniteFunction>>& generators =
        std::nullopt);

struct Certificate {
  std::size_t generators{};
  bool all_pass{};
  std::string jsonl;  // one line per generator, byte-reproducible
};

// Checks every local gate at every placement: a bijective lift must be even
// and no lift may have ramification degree 1. Defaults to width
// min(n - 1, 2); n must be in [2, 4].
Certificate certify_theorem_main(std::size_t n, std::size_t max_width = 0);

// Builds `count` random local circuits with `sections` gates each and
// returns the maximum counter value observed. count == 0 reports 1 (the
// identity baseline). Deterministic for a fixed seed.
std::size_t sample_max_counter(std::size_t n, std::size_t sections,
                               std::size_t count, std::uint64_t seed);

// Uniform integer in [0, bound) from a 64-bit generator, by rejection;
// identical across platforms for the same seed.
std::uint64_t next_below(std::uint64_t& state, std::uint64_t bound);

}  // namespace counterlab

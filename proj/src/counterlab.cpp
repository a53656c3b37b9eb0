#include "counterlab.hpp"

#include <deque>
#include <functional>

#include "json.hpp"

namespace counterlab {

static void check_width(std::size_t n, std::size_t max_width) {
  if (max_width < 1 || max_width >= n)
    throw WidthTooLarge("max_width must satisfy 1 <= max_width < n");
  if (max_width > 4) throw WidthTooLarge("max_width above 4 is not enumerable");
}

std::size_t for_each_local_gate(
    std::size_t n, std::size_t max_width,
    const std::function<void(const railway::Gate&)>& visit) {
  check_width(n, max_width);
  std::size_t visited = 0;
  for (std::size_t w = 1; w <= max_width; ++w) {
    const std::size_t entries = std::size_t{1} << w;
    const std::uint32_t values = std::uint32_t{1} << w;
    for (std::size_t lo = 0; lo + w <= n; ++lo) {
      // Odometer over all (2^w)^(2^w) gate tables.
      std::vector<std::uint32_t> table(entries, 0);
      for (;;) {
        visit(railway::Gate(0, lo, lo + w - 1, railway::GateFunction(w, table)));
        ++visited;
        std::size_t pos = 0;
        while (pos < entries && ++table[pos] == values) {
          table[pos] = 0;
          ++pos;
        }
        if (pos == entries) break;
      }
    }
  }
  return visited;
}

GeneratorSet enumerate_local_gates(std::size_t n, std::size_t max_width) {
  GeneratorSet out;
  out.wires = n;
  std::set<std::vector<std::uint32_t>> seen;
  for_each_local_gate(n, max_width, [&](const railway::Gate& g) {
    permfn::FiniteFunction f = railway::lift_gate(g, n);
    if (seen.insert(f.table()).second) out.lifted.push_back(std::move(f));
  });
  return out;
}

static nlohmann::ordered_json gate_verdict(const railway::Gate& g,
                                           const permfn::FiniteFunction& lift) {
  const permfn::FunctionClass cls = permfn::classify(lift);
  const std::size_t r = permfn::ramification_degree(lift);
  const bool odd = cls.tag == permfn::ClassTag::Bijection &&
                   *cls.parity == permfn::Parity::Odd;
  nlohmann::ordered_json j;
  j["i"] = g.lo;
  j["j"] = g.hi;
  j["table"] = g.fn.table;
  j["r"] = r;
  j["bijection"] = cls.tag == permfn::ClassTag::Bijection;
  if (cls.tag == permfn::ClassTag::Bijection)
    j["parity"] = permfn::parity_name(*cls.parity);
  else
    j["parity"] = nullptr;
  j["pass"] = !odd && r != 1;
  return j;
}

ClosureResult monoid_closure_max_counter(
    std::size_t n,
    const std::optional<std::vector<permfn::FiniteFunction>>& generators) {
  if (n != 2) throw TooLarge("exhaustive closure is supported for n = 2 only");
  std::vector<permfn::FiniteFunction> gens;
  if (generators) {
    gens = *generators;
  } else {
    gens = enumerate_local_gates(n, n - 1).lifted;
  }

  ClosureResult result;
  const std::size_t m = std::size_t{1} << n;
  std::deque<permfn::FiniteFunction> queue;
  queue.push_back(permfn::FiniteFunction::identity(m));
  result.reached.insert(queue.back().table());
  while (!queue.empty()) {
    const permfn::FiniteFunction f = queue.front();
    queue.pop_front();
    for (const permfn::FiniteFunction& g : gens) {
      permfn::FiniteFunction h = permfn::compose(g, f);  // append g after f
      if (result.reached.insert(h.table()).second) queue.push_back(std::move(h));
    }
  }

  result.max_counter = 0;
  for (const std::vector<std::uint32_t>& table : result.reached) {
    const permfn::FiniteFunction f{std::vector<std::uint32_t>(table)};
    const std::size_t k = railway::max_trace_distinct(f);
    if (k > result.max_counter) {
      result.max_counter = k;
      result.witness_table = table;
    }
  }
  result.bound_holds = result.max_counter < m;

  std::string cert;
  for (const permfn::FiniteFunction& g : gens) {
    nlohmann::ordered_json j;
    j["generator"] = g.table();
    const permfn::FunctionClass cls = permfn::classify(g);
    j["class"] = permfn::class_name(cls);
    j["r"] = permfn::ramification_degree(g);
    cert += j.dump();
    cert += '\n';
  }
  result.certificate = std::move(cert);
  return result;
}

Certificate certify_theorem_main(std::size_t n, std::size_t max_width) {
  if (n < 2 || n > 4)
    throw WidthTooLarge("certificates are produced for 2 <= n <= 4");
  if (max_width == 0) max_width = std::min<std::size_t>(n - 1, 2);
  Certificate cert;
  cert.all_pass = true;
  std::string lines;
  cert.generators = for_each_local_gate(n, max_width, [&](const railway::Gate& g) {
    const permfn::FiniteFunction lift = railway::lift_gate(g, n);
    nlohmann::ordered_json j = gate_verdict(g, lift);
    if (!j["pass"].get<bool>()) cert.all_pass = false;
    lines += j.dump();
    lines += '\n';
  });
  cert.jsonl = std::move(lines);
  return cert;
}

// splitmix64; fixed algorithm so sampled runs reproduce everywhere.
static std::uint64_t next_u64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t next_below(std::uint64_t& state, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = next_u64(state) & mask;
    if (v < bound) return v;
  }
}

std::size_t sample_max_counter(std::size_t n, std::size_t sections,
                               std::size_t count, std::uint64_t seed) {
  if (n > 8) throw TooLarge("sampling is supported for n <= 8");
  if (count == 0) return 1;
  std::uint64_t state = seed;
  std::size_t best = 0;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<railway::Gate> gates;
    gates.reserve(sections);
    for (std::size_t s = 0; s < sections; ++s) {
      const std::size_t w = 1 + static_cast<std::size_t>(next_below(state, n - 1));
      const std::size_t lo =
          static_cast<std::size_t>(next_below(state, n - w + 1));
      const std::size_t entries = std::size_t{1} << w;
      std::vector<std::uint32_t> table(entries);
      for (std::uint32_t& v : table)
        v = static_cast<std::uint32_t>(next_below(state, entries));
      gates.emplace_back(s, lo, lo + w - 1,
                         railway::GateFunction(w, std::move(table)));
    }
    const railway::RailwayCircuit circuit(n, std::move(gates));
    best = std::max(best, railway::counter_value(circuit).counter_value);
  }
  return best;
}

}  // namespace counterlab

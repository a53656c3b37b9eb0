#include "railway.hpp"

#include <algorithm>

#include "json.hpp"

namespace railway {

GateFunction::GateFunction(std::size_t w, std::vector<std::uint32_t> t)
    : width(w), table(std::move(t)) {
  if (width == 0) throw std::invalid_argument("gate width must be positive");
  if (width > kMaxGateWidth) throw std::invalid_argument("gate width above 12");
  const std::size_t expect = std::size_t{1} << width;
  if (table.size() != expect)
    throw std::invalid_argument("gate table size must be 2^width");
  for (std::uint32_t v : table) {
    if (v >= expect) throw std::invalid_argument("gate table entry out of range");
  }
}

GateFunction GateFunction::identity(std::size_t w) {
  std::vector<std::uint32_t> t(std::size_t{1} << w);
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = static_cast<std::uint32_t>(i);
  return GateFunction(w, std::move(t));
}

Gate::Gate(std::size_t s, std::size_t lo_wire, std::size_t hi_wire,
           GateFunction f)
    : section(s), lo(lo_wire), hi(hi_wire), fn(std::move(f)) {
  if (lo > hi) throw std::invalid_argument("gate wire range inverted");
  if (fn.width != hi - lo + 1)
    throw std::invalid_argument("gate function width does not match wire span");
}

RailwayCircuit::RailwayCircuit(std::size_t wires, std::vector<Gate> gates)
    : wires_(wires), gates_(std::move(gates)) {
  if (wires_ == 0) throw std::invalid_argument("circuit needs at least 1 wire");
  if (wires_ > kMaxWires) throw std::invalid_argument("circuit above 16 wires");
  for (std::size_t s = 0; s < gates_.size(); ++s) {
    if (gates_[s].section != s)
      throw std::invalid_argument("gates must be ordered one per section");
    if (gates_[s].hi >= wires_)
      throw RangeError("gate touches a wire outside the circuit");
  }
}

permfn::FiniteFunction lift_gate(const Gate& g, std::size_t wires) {
  if (g.hi >= wires) throw RangeError("gate does not fit in the wire count");
  const std::size_t m = std::size_t{1} << wires;
  const std::size_t w = g.fn.width;
  const std::uint32_t shift = static_cast<std::uint32_t>(wires - 1 - g.hi);
  const std::uint32_t mask = ((std::uint32_t{1} << w) - 1) << shift;
  std::vector<std::uint32_t> t(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::uint32_t window = (static_cast<std::uint32_t>(x) & mask) >> shift;
    const std::uint32_t mapped = g.fn.table[window];
    t[x] = (static_cast<std::uint32_t>(x) & ~mask) | (mapped << shift);
  }
  return permfn::FiniteFunction(std::move(t));
}

permfn::FiniteFunction circuit_function(const RailwayCircuit& c) {
  permfn::FiniteFunction cur =
      permfn::FiniteFunction::identity(std::size_t{1} << c.wires());
  for (const Gate& g : c.gates()) cur = permfn::compose(lift_gate(g, c.wires()), cur);
  return cur;
}

bool is_local(const RailwayCircuit& c) {
  for (const Gate& g : c.gates()) {
    if (g.hi - g.lo + 1 >= c.wires()) return false;
  }
  return true;
}

static bool wire_bit(std::uint32_t state, std::size_t wire, std::size_t n) {
  return (state >> (n - 1 - wire)) & 1u;
}

std::vector<AtomicComponent> atomic_components(const RailwayCircuit& c) {
  if (!is_local(c)) throw NotLocal("circuit has a gate spanning all wires");
  const std::size_t n = c.wires();
  const std::size_t m = std::size_t{1} << n;
  std::vector<AtomicComponent> out;
  out.reserve(c.sections());
  for (const Gate& g : c.gates()) {
    permfn::FiniteFunction f = lift_gate(g, n);
    std::size_t witness = n;  // first wire outside [lo, hi]
    for (std::size_t j = 0; j < n; ++j) {
      if (j < g.lo || j > g.hi) {
        witness = j;
        break;
      }
    }
    const std::uint32_t jmask = std::uint32_t{1} << (n - 1 - witness);
    for (std::uint32_t x = 0; x < m; ++x) {
      if (wire_bit(f(x), witness, n) != wire_bit(x, witness, n))
        throw std::logic_error("pass-through wire is not copied");
      if ((x & jmask) == 0) {
        if ((f(x) | jmask) != (f(x | jmask) | jmask))
          throw std::logic_error("pass-through wire influences other outputs");
      }
    }
    out.push_back(AtomicComponent{std::move(f), witness});
  }
  return out;
}

std::vector<std::uint32_t> trace(const RailwayCircuit& c, std::uint32_t x) {
  const std::size_t m = std::size_t{1} << c.wires();
  if (x >= m) throw StateOutOfRange("input state out of range");
  const permfn::FiniteFunction f = circuit_function(c);
  std::vector<std::uint32_t> out;
  out.reserve(m);
  std::uint32_t cur = x;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(cur);
    cur = f(cur);
  }
  return out;
}

std::size_t trace_distinct(const permfn::FiniteFunction& f, std::uint32_t x) {
  const std::size_t m = f.domain_size();
  std::vector<char> seen(m, 0);
  std::size_t distinct = 0;
  std::uint32_t cur = x;
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen[cur]) {
      seen[cur] = 1;
      ++distinct;
    }
    cur = f(cur);
  }
  return distinct;
}

std::size_t max_trace_distinct(const permfn::FiniteFunction& f) {
  std::size_t best = 0;
  for (std::size_t x = 0; x < f.domain_size(); ++x)
    best = std::max(best, trace_distinct(f, static_cast<std::uint32_t>(x)));
  return best;
}

CounterReport counter_value(const RailwayCircuit& c) {
  const permfn::FiniteFunction f = circuit_function(c);
  CounterReport report;
  report.circuit_class = permfn::classify(f);
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    const std::size_t d = trace_distinct(f, static_cast<std::uint32_t>(x));
    if (d > report.counter_value) {
      report.counter_value = d;
      report.witness_input = static_cast<std::uint32_t>(x);
    }
  }
  return report;
}

RestrictionReport verify_atomic_restrictions(const RailwayCircuit& c) {
  RestrictionReport report;
  report.pass = true;
  std::size_t section = 0;
  for (const AtomicComponent& comp : atomic_components(c)) {
    ComponentVerdict v;
    v.section = section++;
    v.cls = permfn::classify(comp.fn);
    v.ramification = permfn::ramification_degree(comp.fn);
    const bool odd_bijection = v.cls.tag == permfn::ClassTag::Bijection &&
                               *v.cls.parity == permfn::Parity::Odd;
    v.pass = !odd_bijection && v.ramification != 1;
    report.pass = report.pass && v.pass;
    report.components.push_back(v);
  }
  return report;
}

std::string to_json(const RailwayCircuit& c) {
  nlohmann::ordered_json j;
  j["n"] = c.wires();
  j["gates"] = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::ordered_json gj;
    gj["s"] = g.section;
    gj["i"] = g.lo;
    gj["j"] = g.hi;
    gj["table"] = g.fn.table;
    j["gates"].push_back(gj);
  }
  return j.dump();
}

RailwayCircuit from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Gate> gates;
  for (const auto& gj : j.at("gates")) {
    const std::size_t lo = gj.at("i").get<std::size_t>();
    const std::size_t hi = gj.at("j").get<std::size_t>();
    std::vector<std::uint32_t> table =
        gj.at("table").get<std::vector<std::uint32_t>>();
    gates.emplace_back(gj.at("s").get<std::size_t>(), lo, hi,
                       GateFunction(hi - lo + 1, std::move(table)));
  }
  return RailwayCircuit(n, std::move(gates));
}

}  // namespace railway

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfn.hpp"

// n parallel wires divided into sections of width 1, one gate per section.
// A state packs the n wires into an integer with wire 0 as the most
// significant bit, so states enumerate in the order x_0 x_1 ... x_{n-1}.
namespace railway {

inline constexpr std::size_t kMaxWires = 16;
inline constexpr std::size_t kMaxGateWidth = 12;

struct RangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotLocal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct StateOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Truth table of a gate on w adjacent wires: 2^w entries, each in [0, 2^w).
struct GateFunction {
  std::size_t width{};
  std::vector<std::uint32_t> table;

  GateFunction(std::size_t w, std::vector<std::uint32_t> t);
  static GateFunction identity(std::size_t w);
};

struct Gate {
  std::size_t section{};
  std::size_t lo{};  // topmost wire the gate touches
  std::size_t hi{};  // bottommost wire; width = hi - lo + 1
  GateFunction fn;

  Gate(std::size_t s, std::size_t lo_wire, std::size_t hi_wire, GateFunction f);
};

class RailwayCircuit {
 public:
  RailwayCircuit(std::size_t wires, std::vector<Gate> gates);

  std::size_t wires() const { return wires_; }
  std::size_t sections() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }

 private:
  std::size_t wires_{};
  std::vector<Gate> gates_;
};

// Extends the gate function to all n wires; wires outside [lo, hi] pass
// through untouched.
permfn::FiniteFunction lift_gate(const Gate& g, std::size_t wires);

// Section 0 applied first.
permfn::FiniteFunction circuit_function(const RailwayCircuit& c);

struct AtomicComponent {
  permfn::FiniteFunction fn;
  std::size_t pass_through_wire{};
};

// One lifted component per section together with a verified pass-through
// wire: that wire's bit is copied to the output and no other output bit
// depends on it. Throws NotLocal if some gate spans all wires.
std::vector<AtomicComponent> atomic_components(const RailwayCircuit& c);

bool is_local(const RailwayCircuit& c);

// The first 2^n iterates of the circuit function on x, starting at x.
std::vector<std::uint32_t> trace(const RailwayCircuit& c, std::uint32_t x);

struct CounterReport {
  std::size_t counter_value{};
  std::uint32_t witness_input{};
  permfn::FunctionClass circuit_class;
};

CounterReport counter_value(const RailwayCircuit& c);

// Counter value of a bare function table: max over inputs of the number of
// distinct elements among the first m iterates.
std::size_t max_trace_distinct(const permfn::FiniteFunction& f);
std::size_t trace_distinct(const permfn::FiniteFunction& f, std::uint32_t x);

struct ComponentVerdict {
  std::size_t section{};
  permfn::FunctionClass cls;
  std::size_t ramification{};
  bool pass{};
};

struct RestrictionReport {
  std::vector<ComponentVerdict> components;
  bool pass{};
};

// Checks each atomic component of a local circuit: a bijective component
// must be even, and no component may have ramification degree 1.
RestrictionReport verify_atomic_restrictions(const RailwayCircuit& c);

// JSON form: {"n": n, "gates": [{"s":., "i":., "j":., "table":[..]}]}.
std::string to_json(const RailwayCircuit& c);
RailwayCircuit from_json(const std::string& text);

}  // namespace railway

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite functions on {0..m-1} stored as output tables, with the analysis
// used throughout the project: ramification degree, bijection classification,
// swap decompositions, parity and cycle structure.
namespace permfn {

// Tables larger than this are refused at construction.
inline constexpr std::size_t kMaxDomain = std::size_t{1} << 20;

struct NotABijection : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class FiniteFunction {
 public:
  // table[i] = f(i); every entry must lie in [0, table.size()).
  explicit FiniteFunction(std::vector<std::uint32_t> table);

  static FiniteFunction identity(std::size_t m);

  std::size_t domain_size() const { return table_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
    return a.table_ == b.table_;
  }
  friend bool operator!=(const FiniteFunction& a, const FiniteFunction& b) {
    return !(a == b);
  }
  friend bool operator<(const FiniteFunction& a, const FiniteFunction& b) {
    return a.table_ < b.table_;
  }

 private:
  std::vector<std::uint32_t> table_;
};

enum class Parity { Even, Odd };

enum class ClassTag { Bijection, QuasiBijection, Neither };

struct FunctionClass {
  ClassTag tag{ClassTag::Neither};
  std::optional<Parity> parity;  // present iff tag == Bijection

  friend bool operator==(const FunctionClass& a, const FunctionClass& b) {
    return a.tag == b.tag && a.parity == b.parity;
  }
};

// A transposition of two distinct points.
struct Swap {
  std::uint32_t i0{};
  std::uint32_t i1{};
};

std::size_t image_size(const FiniteFunction& f);

// r(f) = sum over outputs of max(0, antecedents - 1). Always equals
// m - image_size(f); both routes are computed and cross-checked.
std::size_t ramification_degree(const FiniteFunction& f);

FunctionClass classify(const FiniteFunction& f);

// Adjacent transpositions recorded while bubble-sorting [f(0)..f(m-1)].
// Composing them first-to-last reproduces f. Throws NotABijection.
std::vector<Swap> swap_decomposition(const FiniteFunction& f);

// Parity via inversion count (merge sort, overflow-free).
Parity parity(const FiniteFunction& f);

// Parity as the length of swap_decomposition mod 2; used to cross-check
// the inversion-count route.
Parity parity_by_swaps(const FiniteFunction& f);

// Cycle lengths including fixed points, sorted ascending; sums to m.
std::vector<std::size_t> cycle_structure(const FiniteFunction& f);

// Exactly one cycle of length k, all other points fixed.
bool is_k_cycle(const FiniteFunction& f, std::size_t k);

// h(i) = f(g(i)). Throws DomainMismatch.
FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g);

// Applies the swaps in order (swaps[0] first) as a composition.
FiniteFunction compose_swaps(const std::vector<Swap>& swaps, std::size_t m);

// Text form: "m e0 e1 ... e{m-1}", whitespace separated.
std::string to_text(const FiniteFunction& f);
FiniteFunction from_text(const std::string& text);

std::string parity_name(Parity p);
std::string class_name(const FunctionClass& c);

}  // namespace permfn

#include "permfn.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace permfn {

FiniteFunction::FiniteFunction(std::vector<std::uint32_t> table)
    : table_(std::move(table)) {
  if (table_.empty()) throw std::invalid_argument("domain must be nonempty");
  if (table_.size() > kMaxDomain)
    throw std::invalid_argument("domain larger than 2^20");
  for (std::uint32_t v : table_) {
    if (v >= table_.size())
      throw std::invalid_argument("table entry out of range");
  }
}

FiniteFunction FiniteFunction::identity(std::size_t m) {
  std::vector<std::uint32_t> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = static_cast<std::uint32_t>(i);
  return FiniteFunction(std::move(t));
}

std::size_t image_size(const FiniteFunction& f) {
  std::vector<char> hit(f.domain_size(), 0);
  std::size_t count = 0;
  for (std::uint32_t v : f.table()) {
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  }
  return count;
}

std::size_t ramification_degree(const FiniteFunction& f) {
  std::vector<std::uint32_t> antecedents(f.domain_size(), 0);
  for (std::uint32_t v : f.table()) ++antecedents[v];
  std::size_t r = 0;
  for (std::uint32_t a : antecedents)
    if (a > 1) r += a - 1;
  assert(r == f.domain_size() - image_size(f));
  return r;
}

FunctionClass classify(const FiniteFunction& f) {
  const std::size_t r = ramification_degree(f);
  FunctionClass c;
  if (r == 0) {
    c.tag = ClassTag::Bijection;
    c.parity = parity(f);
  } else if (r == 1) {
    c.tag = ClassTag::QuasiBijection;
  } else {
    c.tag = ClassTag::Neither;
  }
  return c;
}

static void require_bijection(const FiniteFunction& f) {
  if (ramification_degree(f) != 0)
    throw NotABijection("function is not a bijection");
}

std::vector<Swap> swap_decomposition(const FiniteFunction& f) {
  require_bijection(f);
  std::vector<std::uint32_t> seq = f.table();
  std::vector<Swap> swaps;
  const std::size_t m = seq.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (seq[i] > seq[i + 1]) {
        std::swap(seq[i], seq[i + 1]);
        swaps.push_back(Swap{static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(i + 1)});
        moved = true;
      }
    }
  }
  return swaps;
}

// Counts inversions with a merge sort; only the count's parity is used.
static std::uint64_t merge_count(std::vector<std::uint32_t>& a,
                                 std::vector<std::uint32_t>& tmp,
                                 std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      inv += mid - i;
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

Parity parity(const FiniteFunction& f) {
  require_bijection(f);
  std::vector<std::uint32_t> a = f.table();
  std::vector<std::uint32_t> tmp(a.size());
  const std::uint64_t inv = merge_count(a, tmp, 0, a.size());
  return (inv % 2 == 0) ? Parity::Even : Parity::Odd;
}

Parity parity_by_swaps(const FiniteFunction& f) {
  return (swap_decomposition(f).size() % 2 == 0) ? Parity::Even : Parity::Odd;
}

std::vector<std::size_t> cycle_structure(const FiniteFunction& f) {
  require_bijection(f);
  const std::size_t m = f.domain_size();
  std::vector<char> seen(m, 0);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::uint32_t x = static_cast<std::uint32_t>(i);
    while (!seen[x]) {
      seen[x] = 1;
      x = f(x);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool is_k_cycle(const FiniteFunction& f, std::size_t k) {
  if (k < 1 || k > f.domain_size()) return false;
  if (ramification_degree(f) != 0) return false;
  const std::vector<std::size_t> cycles = cycle_structure(f);
  if (k == 1) return cycles.back() == 1;  // identity
  std::size_t count_k = 0;
  for (std::size_t len : cycles) {
    if (len == k) {
      ++count_k;
    } else if (len != 1) {
      return false;
    }
  }
  return count_k == 1;
}

FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.domain_size() != g.domain_size())
    throw DomainMismatch("composing functions with different domains");
  std::vector<std::uint32_t> t(f.domain_size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = f(g(static_cast<std::uint32_t>(i)));
  return FiniteFunction(std::move(t));
}

FiniteFunction compose_swaps(const std::vector<Swap>& swaps, std::size_t m) {
  FiniteFunction result = FiniteFunction::identity(m);
  for (const Swap& s : swaps) {
    std::vector<std::uint32_t> t = result.table();
    for (std::uint32_t& v : t) {
      if (v == s.i0)
        v = s.i1;
      else if (v == s.i1)
        v = s.i0;
    }
    result = FiniteFunction(std::move(t));
  }
  return result;
}

std::string to_text(const FiniteFunction& f) {
  std::ostringstream os;
  os << f.domain_size();
  for (std::uint32_t v : f.table()) os << ' ' << v;
  return os.str();
}

FiniteFunction from_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t m = 0;
  if (!(is >> m)) throw std::invalid_argument("missing domain size");
  std::vector<std::uint32_t> t(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(is >> t[i])) throw std::invalid_argument("truncated table");
  }
  return FiniteFunction(std::move(t));
}

std::string parity_name(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }

std::string class_name(const FunctionClass& c) {
  switch (c.tag) {
    case ClassTag::Bijection:
      return "Bijection " + parity_name(*c.parity);
    case ClassTag::QuasiBijection:
      return "QuasiBijection";
    case ClassTag::Neither:
      return "Neither";
  }
  return "Neither";
}

}  // namespace permfn

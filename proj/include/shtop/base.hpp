#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shtop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyComplexError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

class LastVertexError : public Error {
 public:
  using Error::Error;
};

class MapMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidMapError : public Error {
 public:
  using Error::Error;
};

class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

class InvalidTraceError : public Error {
 public:
  using Error::Error;
};

class AntisymmetryError : public Error {
 public:
  using Error::Error;
};

class NotVertexHomogeneousError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class KindMismatchError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Three-valued verdict for searches that may hit their node budget.
// Unknown is a first-class result, never silently coerced to False.
enum class Tri { False, True, Unknown };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

struct SearchLimits {
  long long max_nodes = 1'000'000;
};

// Per-invocation node counter. charge() throws once the budget is spent;
// callers that expose Tri catch the throw and report Unknown.
class BudgetCounter {
 public:
  explicit BudgetCounter(const SearchLimits& lim) : remaining_(lim.max_nodes) {}
  void charge(long long k = 1) {
    remaining_ -= k;
    if (remaining_ < 0) throw BudgetExceededError("search budget exhausted");
  }
  long long remaining() const { return remaining_; }

 private:
  long long remaining_;
};

// Fixed-width bit row used for facet masks and order-relation rows.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

inline Bits bits_of(int n, const std::vector<int>& ids) {
  Bits b(n);
  for (int i : ids) b.set(i);
  return b;
}

}  // namespace shtop

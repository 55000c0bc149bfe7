#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "kmw/errors.hpp"

namespace kmw {

/// Node subsets of a Dynkin diagram (I_lambda, parabolic J, components).
using NodeSet = std::set<std::size_t>;

/// An integer vector in simple-root coordinates: sum_i v_i alpha_i.
/// Used for roots, Weyl images of simple roots and Laurent exponents.
class SignedOffset {
 public:
  using value_type = std::int64_t;

  SignedOffset() = default;
  explicit SignedOffset(std::size_t rank) : v_(rank, 0) {}
  SignedOffset(std::initializer_list<value_type> v) : v_(v) {}
  explicit SignedOffset(std::vector<value_type> v) : v_(std::move(v)) {}

  static SignedOffset unit(std::size_t rank, std::size_t i) {
    SignedOffset u(rank);
    u.v_.at(i) = 1;
    return u;
  }

  std::size_t size() const { return v_.size(); }
  value_type operator[](std::size_t i) const { return v_[i]; }
  value_type& operator[](std::size_t i) { return v_[i]; }
  const std::vector<value_type>& values() const { return v_; }

  value_type height() const {
    value_type h = 0;
    for (auto x : v_) h += x;
    return h;
  }

  bool is_zero() const {
    for (auto x : v_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (auto x : v_)
      if (x < 0) return false;
    return true;
  }
  /// Nonzero with all entries >= 0.
  bool is_positive() const { return is_nonnegative() && !is_zero(); }
  bool is_negative() const { return (-*this).is_positive(); }

  NodeSet support() const {
    NodeSet s;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] != 0) s.insert(i);
    return s;
  }

  SignedOffset& operator+=(const SignedOffset& o) {
    check_rank(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  SignedOffset& operator-=(const SignedOffset& o) {
    check_rank(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  SignedOffset& operator*=(value_type k) {
    for (auto& x : v_) x *= k;
    return *this;
  }
  SignedOffset operator-() const {
    SignedOffset r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
  }
  friend SignedOffset operator+(SignedOffset a, const SignedOffset& b) { return a += b; }
  friend SignedOffset operator-(SignedOffset a, const SignedOffset& b) { return a -= b; }
  friend SignedOffset operator*(value_type k, SignedOffset a) { return a *= k; }

  friend auto operator<=>(const SignedOffset&, const SignedOffset&) = default;
  friend bool operator==(const SignedOffset&, const SignedOffset&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const SignedOffset& v) { return os << v.str(); }

 private:
  void check_rank(const SignedOffset& o) const {
    if (o.size() != size()) throw InputError("rank mismatch between lattice vectors");
  }

  std::vector<value_type> v_;
};

/// A weight mu = lambda - sum_i c_i alpha_i, identified by its nonnegative
/// coefficient vector c. Offsets, not pairing vectors, are the identity of a
/// weight: for degenerate Cartan matrices distinct offsets share pairings.
class Offset : public SignedOffset {
 public:
  Offset() = default;
  explicit Offset(std::size_t rank) : SignedOffset(rank) {}
  Offset(std::initializer_list<value_type> v) : SignedOffset(v) { validate(); }
  explicit Offset(std::vector<value_type> v) : SignedOffset(std::move(v)) { validate(); }
  explicit Offset(const SignedOffset& v) : SignedOffset(v) { validate(); }

  static Offset zero(std::size_t rank) { return Offset(rank); }
  static Offset unit(std::size_t rank, std::size_t i) { return Offset(SignedOffset::unit(rank, i)); }

  /// nullopt when some entry is negative (the weight is not below lambda).
  static std::optional<Offset> from(const SignedOffset& v) {
    if (!v.is_nonnegative()) return std::nullopt;
    return Offset(v);
  }

 private:
  void validate() const {
    if (!is_nonnegative()) throw InputError("offset has a negative entry: " + str());
  }
};

/// mu1 <= mu2 in the dominance order, where mu_k = lambda - c_k.
inline bool leq(const Offset& c1, const Offset& c2) {
  if (c1.size() != c2.size()) throw InputError("rank mismatch in leq");
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (c1[i] < c2[i]) return false;
  return true;
}

/// Calls visit(c) for every offset of the given rank with height <= max_height,
/// optionally restricted to coordinates in `allowed`. Order is lexicographic
/// by the recursion over coordinates.
template <class Visit>
void for_each_offset(std::size_t rank, std::int64_t max_height, const NodeSet* allowed, Visit&& visit) {
  if (max_height < 0) return;
  Offset c(rank);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
    if (i == rank) {
      visit(static_cast<const Offset&>(c));
      return;
    }
    std::int64_t top = (allowed == nullptr || allowed->count(i)) ? budget : 0;
    for (std::int64_t k = 0; k <= top; ++k) {
      c[i] = k;
      self(self, i + 1, budget - k);
    }
    c[i] = 0;
  };
  rec(rec, 0, max_height);
}

inline std::string to_string(const NodeSet& s) {
  std::string r = "{";
  bool first = true;
  for (auto i : s) {
    if (!first) r += ",";
    first = false;
    r += std::to_string(i);
  }
  return r + "}";
}

}  // namespace kmw

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/rational.hpp"
#include "kmw/roots.hpp"
#include "kmw/weights.hpp"
#include "kmw/weyl.hpp"

namespace kmw {

/// Truncated formal series sum_c a_c e^{lambda - c} with integer coefficients,
/// keeping only offsets of height <= bound(). The base e^lambda is implicit.
class TruncSeries {
 public:
  using Terms = std::map<Offset, Integer>;

  TruncSeries(std::size_t rank, std::int64_t bound) : rank_(rank), bound_(bound) {}

  static TruncSeries one(std::size_t rank, std::int64_t bound) {
    TruncSeries s(rank, bound);
    s.add_term(Offset::zero(rank), 1);
    return s;
  }

  std::size_t rank() const { return rank_; }
  std::int64_t bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Offset& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds a e^{-c}; silently dropped above the bound.
  void add_term(const Offset& c, const Integer& a) {
    if (c.size() != rank_) throw InputError("series: rank mismatch");
    if (c.height() > bound_ || a == 0) return;
    auto [it, fresh] = terms_.try_emplace(c, a);
    if (!fresh) {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::set<Offset> support() const {
    std::set<Offset> s;
    for (const auto& [c, a] : terms_) s.insert(c);
    return s;
  }

  TruncSeries truncated(std::int64_t bound) const {
    TruncSeries r(rank_, std::min(bound, bound_));
    for (const auto& [c, a] : terms_) r.add_term(c, a);
    return r;
  }

  /// Multiplication by e^{-d}.
  TruncSeries shifted(const Offset& d, std::int64_t bound) const {
    TruncSeries r(rank_, bound);
    for (const auto& [c, a] : terms_) r.add_term(Offset(c + d), a);
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    bound_ = std::min(bound_, o.bound_);
    drop_above_bound();
    for (const auto& [c, a] : o.terms_) add_term(c, a);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    bound_ = std::min(bound_, o.bound_);
    drop_above_bound();
    for (const auto& [c, a] : o.terms_) add_term(c, -a);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.rank_, std::min(a.bound_, b.bound_));
    for (const auto& [ca, xa] : a.terms_) {
      const auto ha = ca.height();
      if (ha > r.bound_) continue;
      for (const auto& [cb, xb] : b.terms_) {
        if (ha + cb.height() > r.bound_) continue;
        r.add_term(Offset(ca + cb), xa * xb);
      }
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.rank_ == b.rank_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.rank_ != rank_) throw InputError("series: rank mismatch");
  }
  void drop_above_bound() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first.height() > bound_ ? terms_.erase(it) : std::next(it);
  }

  std::size_t rank_;
  std::int64_t bound_;
  Terms terms_;
};

/// Finite Laurent polynomial sum_v a_v e^{v} over the root lattice.
class LaurentElt {
 public:
  using Terms = std::map<SignedOffset, Integer>;

  explicit LaurentElt(std::size_t rank) : rank_(rank) {}
  static LaurentElt one(std::size_t rank) {
    LaurentElt r(rank);
    r.add_term(SignedOffset(rank), 1);
    return r;
  }
  /// 1 - e^{v}
  static LaurentElt one_minus(const SignedOffset& v) {
    LaurentElt r = one(v.size());
    r.add_term(v, -1);
    return r;
  }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const SignedOffset& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const SignedOffset& v, const Integer& a) {
    if (v.size() != rank_) throw InputError("laurent: rank mismatch");
    if (a == 0) return;
    auto [it, fresh] = terms_.try_emplace(v, a);
    if (!fresh) {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentElt& operator+=(const LaurentElt& o) {
    for (const auto& [v, a] : o.terms_) add_term(v, a);
    return *this;
  }
  LaurentElt& operator-=(const LaurentElt& o) {
    for (const auto& [v, a] : o.terms_) add_term(v, -a);
    return *this;
  }
  friend LaurentElt operator+(LaurentElt a, const LaurentElt& b) { return a += b; }
  friend LaurentElt operator-(LaurentElt a, const LaurentElt& b) { return a -= b; }
  friend LaurentElt operator*(const LaurentElt& a, const LaurentElt& b) {
    if (a.rank_ != b.rank_) throw InputError("laurent: rank mismatch");
    LaurentElt r(a.rank_);
    for (const auto& [va, xa] : a.terms_)
      for (const auto& [vb, xb] : b.terms_) r.add_term(va + vb, xa * xb);
    return r;
  }
  friend bool operator==(const LaurentElt&, const LaurentElt&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

/// prod_k (1 - e^{v_k}).
inline LaurentElt laurent_product(std::size_t rank, const std::vector<SignedOffset>& exponents) {
  LaurentElt r = LaurentElt::one(rank);
  for (const auto& v : exponents) r = r * LaurentElt::one_minus(v);
  return r;
}

/// Highest-weight expansion of 1 / (1 - e^{-beta}) for a real root image beta,
/// as offsets from the base:
///   beta > 0:  1 + e^{-beta} + e^{-2 beta} + ...      (offsets k beta, k >= 0)
///   beta < 0:  -e^{beta} - e^{2 beta} - ...           (offsets -k beta, k >= 1)
inline TruncSeries highest_weight_expansion(const SignedOffset& beta, std::int64_t bound) {
  const std::size_t n = beta.size();
  TruncSeries s(n, bound);
  if (beta.is_positive()) {
    const auto h = beta.height();
    for (std::int64_t k = 0; k * h <= bound; ++k) s.add_term(Offset(k * beta), 1);
  } else if (beta.is_negative()) {
    const SignedOffset up = -beta;
    const auto h = up.height();
    for (std::int64_t k = 1; k * h <= bound; ++k) s.add_term(Offset(k * up), -1);
  } else {
    throw InputError("highest_weight_expansion: " + beta.str() + " is neither positive nor negative");
  }
  return s;
}

/// w (1 - e^{-alpha_i})^{-1} relative to the base e^{w lambda}.
inline TruncSeries geometric_factor(const GroupElement& w, std::size_t i, std::int64_t bound) {
  return highest_weight_expansion(w.simple_images.at(i), bound);
}

/// w e^lambda / prod_i (1 - e^{-alpha_i}), relative to e^lambda and truncated at H.
inline TruncSeries weyl_summand(const GroupElement& w, std::int64_t H) {
  const std::size_t n = w.simple_images.size();
  const auto local = H - w.displacement.height();
  if (local < 0) return TruncSeries(n, H);
  TruncSeries prod = TruncSeries::one(n, local);
  for (std::size_t i = 0; i < n; ++i) prod = prod * geometric_factor(w, i, local);
  return prod.shifted(w.displacement, H);
}

/// The Weyl-Kac weight sum  sum_{w in W_{I_lambda}} w e^lambda / prod_i (1 - e^{-alpha_i})
/// truncated at height H. Equals the weight indicator of L(lambda) when the
/// stabilizer of lambda in W_{I_lambda} is finite.
inline TruncSeries wkw_sum(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H,
                           std::optional<std::size_t> cap = std::nullopt) {
  check_rank(lambda, g);
  TruncSeries total(g.size(), H);
  for (const auto& w : enumerate_group(lambda, g, integrability_set(lambda), H, cap)) total += weyl_summand(w, H);
  return total;
}

/// Character of an integrable L(lambda) over a finite-type algebra:
/// sum_{w in W} w e^lambda / prod_{alpha > 0} (1 - e^{-alpha}), truncated at H.
inline TruncSeries atiyah_bott_sum(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H) {
  check_rank(lambda, g);
  if (!is_finite_type(g)) throw NotFiniteType("the Atiyah-Bott sum needs a finite-type Cartan matrix");
  if (integrability_set(lambda).size() != g.size())
    throw NotDominantIntegral("the Atiyah-Bott sum needs a dominant integral highest weight");
  const auto roots = positive_roots_finite(g);
  const std::size_t n = g.size();
  TruncSeries total(n, H);
  for (const auto& w : enumerate_finite_group(lambda, g, g.nodes())) {
    const auto local = H - w.displacement.height();
    if (local < 0) continue;
    TruncSeries prod = TruncSeries::one(n, local);
    for (const auto& alpha : roots) prod = prod * highest_weight_expansion(w.apply(alpha), local);
    total += prod.shifted(w.displacement, H);
  }
  return total;
}

}  // namespace kmw

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/rational.hpp"

namespace kmw {

/// A highest weight lambda, retained only through its pairings
/// q_i = (h_i, lambda). Every weight in scope has the form lambda - c with c
/// an Offset, so nothing else of h* is needed.
class HighestWeight {
 public:
  HighestWeight() = default;
  explicit HighestWeight(std::vector<Rational> pairings) : q_(std::move(pairings)) {
    for (auto& x : q_) x.canonicalize();
  }
  static HighestWeight parse(const std::vector<std::string>& text) {
    std::vector<Rational> q;
    for (const auto& s : text) q.push_back(parse_rational(s));
    return HighestWeight(std::move(q));
  }

  std::size_t size() const { return q_.size(); }
  const Rational& operator[](std::size_t i) const { return q_[i]; }
  const std::vector<Rational>& pairings() const { return q_; }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<Rational> q_;
};

inline void check_rank(const HighestWeight& lambda, const CartanMatrix& g) {
  if (lambda.size() != g.size())
    throw InputError("highest weight has " + std::to_string(lambda.size()) + " pairings but the Cartan matrix has " +
                     std::to_string(g.size()) + " nodes");
}

/// (h_i, lambda - sum_j c_j alpha_j) = q_i - (A c)_i.
inline Rational pairing(const HighestWeight& lambda, const CartanMatrix& g, const SignedOffset& c, std::size_t i) {
  return lambda[i] - Rational(static_cast<long>(g.row_dot(i, c)));
}

/// I_lambda: nodes where (h_i, lambda) is a nonnegative integer.
inline NodeSet integrability_set(const HighestWeight& lambda) {
  NodeSet s;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (is_nonneg_integer(lambda[i])) s.insert(i);
  return s;
}

/// lambda - c lies in P+_lambda relative to J: every pairing on J is a
/// nonnegative integer.
inline bool in_parabolic_dominant(const HighestWeight& lambda, const CartanMatrix& g, const Offset& c,
                                  const NodeSet& J) {
  for (auto i : J)
    if (!is_nonneg_integer(pairing(lambda, g, c, i))) return false;
  return true;
}

/// Pairings of lambda - c, i.e. the highest weight of the slice through c.
inline HighestWeight shifted(const HighestWeight& lambda, const CartanMatrix& g, const SignedOffset& c) {
  std::vector<Rational> q;
  for (std::size_t i = 0; i < g.size(); ++i) q.push_back(pairing(lambda, g, c, i));
  return HighestWeight(std::move(q));
}

/// Integer pairing on a node known to be integral; throws NonIntegralPairing otherwise.
inline std::int64_t integral_pairing(const HighestWeight& lambda, const CartanMatrix& g, const SignedOffset& c,
                                     std::size_t i) {
  Rational p = pairing(lambda, g, c, i);
  if (!is_integer(p))
    throw NonIntegralPairing("pairing (h_" + g.labels()[i] + ", mu) = " + to_string(p) +
                             " is not an integer at offset " + c.str());
  return p.get_num().get_si();
}

}  // namespace kmw

#pragma once

// Ground-truth weight multiplicities dim L(lambda)_mu at small height, from the
// rank of the contravariant form on f-words applied to the highest weight vector.
//
// <f_i x, y> = <x, e_i y>, e_i v_lambda = 0, [e_i, f_j] = delta_ij h_i, so
//   e_i f_{j1} ... f_{jm} v = sum_{k : jk = i} (q_i - sum_{l > k} a_{i,jl}) f_{j1} .. ^f_{jk} .. f_{jm} v.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/modweights.hpp"
#include "kmw/rational.hpp"
#include "kmw/weights.hpp"

namespace kmw {

/// f_{w[0]} f_{w[1]} ... f_{w[k-1]} v_lambda
using LoweringWord = std::vector<std::size_t>;

inline Offset word_offset(std::size_t rank, const LoweringWord& w) {
  Offset c(rank);
  for (auto i : w) {
    if (i >= rank) throw InputError("lowering word uses node " + std::to_string(i) + " out of range");
    ++c[i];
  }
  return c;
}

struct OracleBudget {
  std::size_t max_rank = 3;
  std::int64_t max_height = 6;
  std::size_t max_words = 20000;
};

/// All words of the given content, in lexicographic order.
inline std::vector<LoweringWord> words_of(const Offset& c) {
  std::vector<LoweringWord> out;
  Offset left = c;
  LoweringWord cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<std::int64_t>(cur.size()) == c.height()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(i);
      self(self);
      cur.pop_back();
      ++left[i];
    }
  };
  rec(rec);
  return out;
}

/// Number of words of content c (a multinomial coefficient).
inline Integer word_count(const Offset& c) {
  Integer total = 1;
  std::int64_t placed = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::int64_t k = 1; k <= c[i]; ++k) {
      ++placed;
      total *= placed;
      total /= k;
    }
  }
  return total;
}

/// Contravariant form on the Verma module M(lambda), memoised over word pairs.
class ShapovalovForm {
 public:
  ShapovalovForm(HighestWeight lambda, CartanMatrix g) : lambda_(std::move(lambda)), g_(std::move(g)) {
    check_rank(lambda_, g_);
  }

  const HighestWeight& highest_weight() const { return lambda_; }
  const CartanMatrix& cartan() const { return g_; }

  /// <f_u v_lambda, f_v v_lambda>
  Rational entry(const LoweringWord& u, const LoweringWord& v) {
    if (word_offset(g_.size(), u) != word_offset(g_.size(), v))
      throw InputError("gram_entry: words have different weights");
    return entry_unchecked(u, v);
  }

  /// e_i applied to f_w v_lambda, as a combination of shorter words.
  std::vector<std::pair<LoweringWord, Rational>> raise(std::size_t i, const LoweringWord& w) const {
    std::vector<std::pair<LoweringWord, Rational>> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != i) continue;
      Rational coeff = lambda_[i];
      for (std::size_t l = k + 1; l < w.size(); ++l) coeff -= g_(i, w[l]);
      if (sgn(coeff) == 0) continue;
      LoweringWord shorter;
      shorter.reserve(w.size() - 1);
      for (std::size_t l = 0; l < w.size(); ++l)
        if (l != k) shorter.push_back(w[l]);
      out.emplace_back(std::move(shorter), std::move(coeff));
    }
    return out;
  }

 private:
  Rational entry_unchecked(const LoweringWord& u, const LoweringWord& v) {
    if (u.empty()) return Rational(1);
    auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LoweringWord tail(u.begin() + 1, u.end());
    Rational total(0);
    for (const auto& [w, coeff] : raise(u.front(), v)) total += coeff * entry_unchecked(tail, w);
    memo_.emplace(std::move(key), total);
    return total;
  }

  HighestWeight lambda_;
  CartanMatrix g_;
  std::map<std::pair<LoweringWord, LoweringWord>, Rational> memo_;
};

inline Rational gram_entry(const HighestWeight& lambda, const CartanMatrix& g, const LoweringWord& u,
                           const LoweringWord& v) {
  ShapovalovForm form(lambda, g);
  return form.entry(u, v);
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline void check_budget(const CartanMatrix& g, const Offset& c, const OracleBudget& budget) {
  if (g.size() > budget.max_rank)
    throw BudgetExceeded("oracle budget allows rank <= " + std::to_string(budget.max_rank));
  if (c.height() > budget.max_height)
    throw BudgetExceeded("oracle budget allows height <= " + std::to_string(budget.max_height) + ", asked " +
                         std::to_string(c.height()));
  if (word_count(c) > budget.max_words)
    throw BudgetExceeded("weight space at " + c.str() + " has " + word_count(c).get_str() + " words, budget " +
                         std::to_string(budget.max_words));
}

/// dim L(lambda)_{lambda - c}: rank of the Gram matrix on all words of content c.
inline std::size_t simple_multiplicity(ShapovalovForm& form, const Offset& c, const OracleBudget& budget = {}) {
  check_budget(form.cartan(), c, budget);
  const auto words = words_of(c);
  std::vector<std::vector<Rational>> gram(words.size(), std::vector<Rational>(words.size()));
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a; b < words.size(); ++b) gram[a][b] = gram[b][a] = form.entry(words[a], words[b]);
  return exact_rank(std::move(gram));
}

inline std::size_t simple_multiplicity(const HighestWeight& lambda, const CartanMatrix& g, const Offset& c,
                                       const OracleBudget& budget = {}) {
  ShapovalovForm form(lambda, g);
  return simple_multiplicity(form, c, budget);
}

/// {c : ht(c) <= H, dim L(lambda)_{lambda - c} > 0}.
inline WeightSet oracle_weight_set(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H,
                                   const OracleBudget& budget = {}) {
  ShapovalovForm form(lambda, g);
  WeightSet ws{H, {}, Method::Oracle, std::nullopt};
  for_each_offset(g.size(), H, nullptr, [&](const Offset& c) {
    if (simple_multiplicity(form, c, budget) > 0) ws.members.insert(c);
  });
  return ws;
}

/// Multiplicities are guaranteed only for symmetrizable matrices; other
/// results are advisory.
inline bool oracle_is_advisory(const CartanMatrix& g) { return !symmetrizer(g).has_value(); }

}  // namespace kmw

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/modweights.hpp"
#include "kmw/oracle.hpp"
#include "kmw/roots.hpp"
#include "kmw/series.hpp"
#include "kmw/weights.hpp"
#include "kmw/weyl.hpp"

namespace kmw {

/// ExpectedFail marks the documented failure of the weight formula when the
/// stabilizer of lambda is infinite (the discrepancy is the payload).
enum class Status { Pass, Fail, ExpectedFail };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ExpectedFail: return "EXPECTED_FAIL";
  }
  return "?";
}

struct DenominatorReport {
  Status status = Status::Fail;
  std::size_t roots = 0;
  std::size_t bases = 0;
  LaurentElt lhs{0}, rhs{0}, difference{0};
};

/// prod_{alpha in Delta} (1 - e^{-alpha}) == sum over bases pi of
/// prod_{beta in Delta \ pi} (1 - e^{-beta}), bases being the W-images of the
/// simple system.
inline DenominatorReport verify_denominator_bases(const CartanMatrix& g) {
  if (!is_finite_type(g)) throw NotFiniteType("the denominator identity over bases needs a finite root system");
  const std::size_t n = g.size();
  std::set<SignedOffset> all;
  for (const auto& a : positive_roots_finite(g)) {
    all.insert(a);
    all.insert(-a);
  }
  const auto W = enumerate_finite_group(HighestWeight(std::vector<Rational>(n, Rational(0))), g, g.nodes());
  std::set<std::set<SignedOffset>> bases;
  for (const auto& w : W) bases.insert(std::set<SignedOffset>(w.simple_images.begin(), w.simple_images.end()));
  if (bases.size() != W.size())
    throw Error("internal: " + std::to_string(bases.size()) + " distinct bases for |W| = " + std::to_string(W.size()));

  DenominatorReport rep;
  rep.roots = all.size();
  rep.bases = bases.size();
  std::vector<SignedOffset> exps;
  for (const auto& a : all) exps.push_back(-a);
  rep.lhs = laurent_product(n, exps);
  rep.rhs = LaurentElt(n);
  for (const auto& pi : bases) {
    std::vector<SignedOffset> rest;
    for (const auto& b : all)
      if (!pi.count(b)) rest.push_back(-b);
    rep.rhs += laurent_product(n, rest);
  }
  rep.difference = rep.lhs - rep.rhs;
  rep.status = rep.difference.is_zero() ? Status::Pass : Status::Fail;
  return rep;
}

struct MacdonaldReport {
  Status status = Status::Fail;
  TruncSeries lhs{0, 0}, rhs{0, 0};
};

/// Rank-2 infinite type: sum_{w in W} w 1/prod_i (1 - e^{-alpha_i}) equals
/// 1 + sum over positive imaginary roots delta of e^{-delta}, up to height H.
inline MacdonaldReport verify_rank2_macdonald(const CartanMatrix& g, std::int64_t H) {
  if (g.size() != 2) throw WrongRank("the rank-2 identity needs exactly 2 nodes, got " + std::to_string(g.size()));
  if (static_cast<std::int64_t>(g(0, 1)) * g(1, 0) < 4)
    throw FiniteType("the rank-2 identity needs a diagram of infinite type (a_01 a_10 >= 4)");
  MacdonaldReport rep;
  rep.lhs = wkw_sum(HighestWeight(std::vector<Rational>(2, Rational(0))), g, H);
  rep.rhs = TruncSeries::one(2, H);
  for (const auto& d : positive_imaginary_up_to(g, H)) rep.rhs.add_term(Offset(d), 1);
  rep.status = rep.lhs == rep.rhs ? Status::Pass : Status::Fail;
  return rep;
}

struct WkwReport {
  Status status = Status::Fail;
  bool stabilizer_finite = false;
  bool coefficients_01 = false;
  bool support_equal = false;
  TruncSeries wkw{0, 0};
  WeightSet weights;
  TruncSeries discrepancy{0, 0};  // wkw_sum minus the weight indicator
};

inline TruncSeries indicator(const WeightSet& ws, std::size_t rank) {
  TruncSeries s(rank, ws.height);
  for (const auto& c : ws.members) s.add_term(c, 1);
  return s;
}

inline WkwReport verify_wkw_vs_weights(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H) {
  WkwReport rep;
  rep.stabilizer_finite = stabilizer_is_finite(lambda, g, integrability_set(lambda));
  rep.wkw = wkw_sum(lambda, g, H);
  rep.weights = wt_simple_slice(lambda, g, H);
  rep.discrepancy = rep.wkw - indicator(rep.weights, g.size());
  rep.coefficients_01 = true;
  for (const auto& [c, a] : rep.wkw.terms())
    if (a != 1) rep.coefficients_01 = false;
  rep.support_equal = rep.wkw.support() == rep.weights.members;
  if (rep.discrepancy.is_zero())
    rep.status = Status::Pass;
  else
    rep.status = rep.stabilizer_finite ? Status::Fail : Status::ExpectedFail;
  return rep;
}

struct IntegrabilityReport {
  Status status = Status::Fail;
  NodeSet integrability;
  NodeSet preserving;
};

/// Nodes i whose reflection s_i maps the truncated weight set into itself on
/// the window {c : ht(c) <= H and ht(s_i c) <= H}.
inline NodeSet preserving_nodes(const HighestWeight& lambda, const CartanMatrix& g, const WeightSet& S) {
  NodeSet keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool ok = true;
    for (const auto& c : S.members) {
      Rational p = pairing(lambda, g, c, i);
      if (!is_integer(p)) {
        ok = false;
        break;
      }
      SignedOffset img = c;
      img[i] += p.get_num().get_si();
      if (img.height() > S.height) continue;
      auto off = Offset::from(img);
      if (!off || !S.contains(*off)) {
        ok = false;
        break;
      }
    }
    if (ok) keep.insert(i);
  }
  return keep;
}

inline IntegrabilityReport check_integrability_invariants(const HighestWeight& lambda, const CartanMatrix& g,
                                                          std::int64_t H) {
  IntegrabilityReport rep;
  rep.integrability = integrability_set(lambda);
  rep.preserving = preserving_nodes(lambda, g, wt_simple_slice(lambda, g, H));
  rep.status = rep.preserving == rep.integrability ? Status::Pass : Status::Fail;
  return rep;
}

struct CrossReport {
  Status status = Status::Fail;
  std::vector<WeightSet> sets;
  std::vector<std::string> skipped;  // methods not applicable, with reason
};

/// Compares the slice, orbit (when the stabilizer is finite), hull and, when
/// the budget allows, oracle weight sets.
inline CrossReport verify_cross(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H,
                                std::optional<std::size_t> depth = std::nullopt, bool with_oracle = true,
                                const OracleBudget& budget = {}) {
  CrossReport rep;
  rep.sets.push_back(wt_simple_slice(lambda, g, H));
  try {
    rep.sets.push_back(wt_simple_orbit(lambda, g, H));
  } catch (const InfiniteStabilizer& e) {
    rep.skipped.push_back(std::string("orbit: ") + e.what());
  }
  rep.sets.push_back(wt_simple_hull(lambda, g, H, depth));
  if (with_oracle) {
    try {
      rep.sets.push_back(oracle_weight_set(lambda, g, H, budget));
    } catch (const BudgetExceeded& e) {
      rep.skipped.push_back(std::string("oracle: ") + e.what());
    }
  }
  rep.status = Status::Pass;
  for (const auto& s : rep.sets)
    if (s.members != rep.sets.front().members) rep.status = Status::Fail;
  return rep;
}

}  // namespace kmw

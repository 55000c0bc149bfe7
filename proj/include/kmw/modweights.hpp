#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/lp.hpp"
#include "kmw/roots.hpp"
#include "kmw/weights.hpp"
#include "kmw/weyl.hpp"

namespace kmw {

enum class Method { Slice, Orbit, Hull, Oracle, ParabolicVerma, Integrable };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Slice: return "slice";
    case Method::Orbit: return "orbit";
    case Method::Hull: return "hull";
    case Method::Oracle: return "oracle";
    case Method::ParabolicVerma: return "parabolic-verma";
    case Method::Integrable: return "integrable";
  }
  return "?";
}

/// The weights lambda - c of a module with ht(c) <= height, as offsets.
struct WeightSet {
  std::int64_t height = 0;
  std::set<Offset> members;
  Method method = Method::Slice;
  std::optional<std::int64_t> depth;  // hull generation depth, when relevant

  bool contains(const Offset& c) const { return members.count(c) > 0; }
  std::size_t size() const { return members.size(); }
};

/// Hull generators: W_J-images of lambda and ray directions up to word length
/// `depth`. A ray r is stored as the root w alpha_i in offset coordinates, so
/// the half-line from vertex d_w is d_w + t r, t >= 0 (weights w lambda - t w alpha_i).
struct HullModel {
  std::set<Offset> vertices;
  std::set<SignedOffset> rays;
  std::set<std::pair<Offset, SignedOffset>> anchored_rays;  // (d_w, w alpha_i) for drawing
  std::size_t depth = 0;
  NodeSet integrability;
};

enum class HullMembership { Member, NotWithinDepth };

namespace detail {

// Each connected component of supp(c) must meet {i : (h_i, lambda) != 0}.
inline bool nondegenerate(const HighestWeight& lambda, const CartanMatrix& g, const Offset& c) {
  for (const auto& comp : connected_components(g, c.support())) {
    bool hit = false;
    for (auto i : comp)
      if (sgn(lambda[i]) != 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline void require_dominant_integral(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J) {
  for (auto i : J) {
    if (i >= g.size()) throw InputError("node " + std::to_string(i) + " out of range");
    if (!is_nonneg_integer(lambda[i]))
      throw NotDominantIntegral("(h_" + g.labels()[i] + ", lambda) = " + to_string(lambda[i]) +
                                " is not a nonnegative integer");
  }
}

}  // namespace detail

/// Weights of the integrable highest-weight module over the Kac-Moody
/// subalgebra on J, as offsets supported on J with height <= H:
///   W_J . { mu J-dominant : mu <= lambda, mu nondegenerate },
/// where lambda - c is nondegenerate iff every connected component of supp(c)
/// contains a node on which lambda does not vanish.
inline WeightSet wt_integrable(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J, std::int64_t H) {
  check_rank(lambda, g);
  detail::require_dominant_integral(lambda, g, J);
  WeightSet ws{H, {}, Method::Integrable, std::nullopt};
  for_each_offset(g.size(), H, &J, [&](const Offset& c) {
    if (!in_parabolic_dominant(lambda, g, c, J) || !detail::nondegenerate(lambda, g, c)) return;
    for (auto& x : orbit_truncated(lambda, g, J, c, H)) ws.members.insert(x);
  });
  return ws;
}

namespace detail {

// Union over b supported off J of b + wt_integrable(lambda - b, J, H - ht b).
// Distinct b differ off J, so the union is disjoint; a collision is a bug.
inline std::set<Offset> slice_union(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J,
                                    std::int64_t H) {
  check_rank(lambda, g);
  require_dominant_integral(lambda, g, J);
  NodeSet K;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!J.count(i)) K.insert(i);
  std::set<Offset> out;
  for_each_offset(g.size(), H, &K, [&](const Offset& b) {
    const auto slice = wt_integrable(shifted(lambda, g, b), g, J, H - b.height());
    for (const auto& s : slice.members) {
      Offset c(b + s);
      for (auto k : K)
        if (c[k] != b[k]) throw Error("internal: slice member " + c.str() + " escaped its slice " + b.str());
      if (!out.insert(c).second) throw Error("internal: slices overlap at " + c.str());
    }
  });
  return out;
}

}  // namespace detail

/// Weights of L(lambda) as the disjoint union of integrable slices over the
/// Levi subalgebra on I_lambda.
inline WeightSet wt_simple_slice(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H) {
  return {H, detail::slice_union(lambda, g, integrability_set(lambda), H), Method::Slice, std::nullopt};
}

/// Weights of L(lambda) as the W_{I_lambda}-saturation of the parabolic
/// dominant weights below lambda. Needs a finite stabilizer.
inline WeightSet wt_simple_orbit(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H) {
  check_rank(lambda, g);
  const NodeSet J = integrability_set(lambda);
  if (!stabilizer_is_finite(lambda, g, J))
    throw InfiniteStabilizer(
        "the orbit formula needs lambda to have finite stabilizer in W_{I_lambda}; here the nodes of I_lambda "
        "where lambda vanishes do not form a finite-type diagram");
  WeightSet ws{H, {}, Method::Orbit, std::nullopt};
  for_each_offset(g.size(), H, nullptr, [&](const Offset& c) {
    if (ws.contains(c) || !in_parabolic_dominant(lambda, g, c, J)) return;
    for (auto& x : orbit_truncated(lambda, g, J, c, H)) ws.members.insert(x);
  });
  return ws;
}

inline HullModel hull_generators(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J,
                                 std::size_t depth) {
  check_rank(lambda, g);
  HullModel m;
  m.depth = depth;
  m.integrability = J;
  for (const auto& w : elements_up_to_length(lambda, g, J, depth)) {
    m.vertices.insert(w.displacement);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!J.count(i)) {
        m.rays.insert(w.simple_images[i]);
        m.anchored_rays.emplace(w.displacement, w.simple_images[i]);
      }
  }
  return m;
}

/// Exact LP test of c in conv(vertices) + cone(rays). Member is definitive;
/// NotWithinDepth only says the depth-limited model does not contain c.
inline HullMembership hull_contains(const HullModel& model, const Offset& c) {
  if (model.vertices.count(c)) return HullMembership::Member;
  const std::size_t n = c.size();
  const std::size_t nv = model.vertices.size(), nr = model.rays.size();
  lp::Matrix A(n + 1, lp::Row(nv + nr, Rational(0)));
  lp::Row b(n + 1, Rational(0));
  std::size_t col = 0;
  for (const auto& v : model.vertices) {
    for (std::size_t i = 0; i < n; ++i) A[i][col] = static_cast<long>(v[i]);
    A[n][col] = 1;
    ++col;
  }
  for (const auto& r : model.rays) {
    for (std::size_t i = 0; i < n; ++i) A[i][col] = static_cast<long>(r[i]);
    ++col;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<long>(c[i]);
  b[n] = 1;
  return lp::find_feasible(A, b) ? HullMembership::Member : HullMembership::NotWithinDepth;
}

inline std::size_t default_hull_depth(std::int64_t H) { return static_cast<std::size_t>(2 * H + 4); }

/// Weights of L(lambda) as the lattice points below lambda in its convex hull,
/// with the hull generated to word length `depth`.
inline WeightSet wt_simple_hull(const HighestWeight& lambda, const CartanMatrix& g, std::int64_t H,
                                std::optional<std::size_t> depth = std::nullopt) {
  const std::size_t L = depth.value_or(default_hull_depth(H));
  const auto model = hull_generators(lambda, g, integrability_set(lambda), L);
  WeightSet ws{H, {}, Method::Hull, static_cast<std::int64_t>(L)};
  for_each_offset(g.size(), H, nullptr, [&](const Offset& c) {
    if (hull_contains(model, c) == HullMembership::Member) ws.members.insert(c);
  });
  return ws;
}

/// Weights of the parabolic Verma module M(lambda, J), J a subset of I_lambda,
/// by the slice construction with J in place of I_lambda.
inline WeightSet wt_parabolic_verma(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J,
                                    std::int64_t H) {
  return {H, detail::slice_union(lambda, g, J, H), Method::ParabolicVerma, std::nullopt};
}

/// Weights of M(lambda, J) by parabolic induction:
///   wt L_J(lambda) + Z>=0 { positive roots whose support meets I \ J }.
/// Independent of the slice construction; used to cross-check it.
inline std::set<Offset> wt_parabolic_verma_induced(const HighestWeight& lambda, const CartanMatrix& g,
                                                   const NodeSet& J, std::int64_t H) {
  const auto levi = wt_integrable(lambda, g, J, H);
  std::set<SignedOffset> gens;
  auto meets_outside = [&](const SignedOffset& r) {
    for (auto i : r.support())
      if (!J.count(i)) return true;
    return false;
  };
  for (const auto& r : positive_real_up_to(g, H))
    if (meets_outside(r)) gens.insert(r);
  for (const auto& r : positive_imaginary_up_to(g, H))
    if (meets_outside(r)) gens.insert(r);

  std::set<Offset> span{Offset::zero(g.size())};
  std::queue<Offset> todo;
  todo.push(Offset::zero(g.size()));
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop();
    for (const auto& r : gens) {
      if (x.height() + r.height() > H) continue;
      Offset y(x + r);
      if (span.insert(y).second) todo.push(y);
    }
  }
  std::set<Offset> out;
  for (const auto& a : levi.members)
    for (const auto& u : span)
      if (a.height() + u.height() <= H) out.insert(Offset(a + u));
  return out;
}

}  // namespace kmw

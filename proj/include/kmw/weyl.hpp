#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/weights.hpp"

namespace kmw {

/// s_i on the root lattice: alpha_j -> alpha_j - a_ij alpha_i.
inline SignedOffset reflect(const CartanMatrix& g, std::size_t i, SignedOffset v) {
  v[i] -= g.row_dot(i, v);
  return v;
}

/// s_i (lambda - c) = lambda - c', c' = c + (h_i, lambda - c) e_i.
/// Returns nullopt when c' has a negative entry (the image is not <= lambda).
/// Throws NonIntegralPairing when the pairing is not an integer.
inline std::optional<Offset> reflect_weight(const HighestWeight& lambda, const CartanMatrix& g, std::size_t i,
                                            const Offset& c) {
  SignedOffset r = c;
  r[i] += integral_pairing(lambda, g, c, i);
  return Offset::from(r);
}

/// A Weyl group element w, carried with its action data:
///   simple_images[i] = w alpha_i, displacement = lambda - w lambda.
struct GroupElement {
  std::vector<std::size_t> word;
  std::vector<SignedOffset> simple_images;
  Offset displacement;

  static GroupElement identity(std::size_t rank) {
    GroupElement e;
    for (std::size_t i = 0; i < rank; ++i) e.simple_images.push_back(SignedOffset::unit(rank, i));
    e.displacement = Offset::zero(rank);
    return e;
  }

  std::size_t length() const { return word.size(); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }

  /// w v for v in the root lattice.
  SignedOffset apply(const SignedOffset& v) const {
    SignedOffset r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r += v[i] * simple_images[i];
    return r;
  }

  bool sends_negative(std::size_t i) const { return simple_images[i].is_negative(); }

  /// Smallest height of a term in w e^lambda / prod_i (1 - e^{-alpha_i}):
  /// ht(d_w) + sum over descents i of ht(-w alpha_i).
  std::int64_t min_summand_height() const {
    std::int64_t h = displacement.height();
    for (const auto& im : simple_images)
      if (im.is_negative()) h -= im.height();
    return h;
  }

  /// w s_j, given the integer pairing q_j = (h_j, lambda).
  GroupElement times_simple(const CartanMatrix& g, std::size_t j, std::int64_t q_j) const {
    GroupElement r;
    r.word = word;
    r.word.push_back(j);
    const SignedOffset& wj = simple_images[j];
    for (std::size_t i = 0; i < simple_images.size(); ++i)
      r.simple_images.push_back(simple_images[i] - static_cast<SignedOffset::value_type>(g(j, i)) * wj);
    auto d = Offset::from(displacement + q_j * wj);
    if (!d) throw Error("internal: Weyl displacement left the cone at word of length " + std::to_string(r.length()));
    r.displacement = *d;
    return r;
  }
};

/// Stabilizer of lambda in W_J is the parabolic subgroup on
/// J_0 = {i in J : (h_i, lambda) = 0}; finite iff J_0 is of finite type.
inline bool stabilizer_is_finite(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J) {
  NodeSet J0;
  for (auto i : J)
    if (sgn(lambda[i]) == 0) J0.insert(i);
  return is_finite_type(g, J0);
}

inline std::size_t default_length_cap(std::int64_t H) { return static_cast<std::size_t>(10 * H + 64); }

namespace detail {

inline std::vector<std::int64_t> integral_pairings_on(const HighestWeight& lambda, const CartanMatrix& g,
                                                      const NodeSet& J) {
  check_rank(lambda, g);
  std::vector<std::int64_t> q(g.size(), 0);
  for (auto j : J) {
    if (j >= g.size()) throw InputError("node " + std::to_string(j) + " out of range");
    if (!is_nonneg_integer(lambda[j]))
      throw NotDominantIntegral("(h_" + g.labels()[j] + ", lambda) = " + to_string(lambda[j]) +
                                " is not a nonnegative integer");
    q[j] = lambda[j].get_num().get_si();
  }
  return q;
}

/// Breadth-first walk of W_J by length. `extend(w)` decides whether w's
/// successors are generated; `alive(level)` may stop the walk after a level
/// has been visited. Returns true if the walk was cut at max_length with a
/// nonempty frontier.
template <class Extend, class Alive, class Visit>
bool walk_group(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J, std::size_t max_length,
                Extend&& extend, Alive&& alive, Visit&& visit) {
  const auto q = integral_pairings_on(lambda, g, J);
  using Key = std::pair<std::vector<SignedOffset>, Offset>;
  std::vector<GroupElement> level{GroupElement::identity(g.size())};
  for (std::size_t len = 0;; ++len) {
    for (const auto& w : level) visit(w);
    if (!alive(level)) return false;
    std::map<Key, GroupElement> next;
    for (const auto& w : level) {
      if (!extend(w)) continue;
      for (auto j : J) {
        if (!w.simple_images[j].is_positive()) continue;
        GroupElement ws = w.times_simple(g, j, q[j]);
        if (ws.displacement.height() < w.displacement.height())
          throw Error("internal: displacement height decreased along " + std::to_string(ws.length()) + "-letter word");
        Key key{ws.simple_images, ws.displacement};
        next.try_emplace(std::move(key), std::move(ws));
      }
    }
    if (next.empty()) return false;
    if (len + 1 > max_length) return true;
    level.clear();
    for (auto& [k, w] : next) level.push_back(std::move(w));
  }
}

}  // namespace detail

/// Every w in W_J whose summand in the Weyl-Kac weight sum can reach height
/// <= H (min_summand_height <= H), in breadth-first order by length.
///
/// Successors are generated only while ht(d_w) + 1 <= H; since ht(d_w) is
/// nondecreasing along reduced words this prunes nothing reachable. With a
/// finite stabilizer that alone terminates. With an infinite stabilizer
/// (lambda vanishing on a non-finite part of J) the walk also stops at the
/// first level where every element has min_summand_height > H.
inline std::vector<GroupElement> enumerate_group(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J,
                                                 std::int64_t H, std::optional<std::size_t> cap = std::nullopt) {
  const bool finite_stab = stabilizer_is_finite(lambda, g, J);
  const std::size_t max_length = cap.value_or(default_length_cap(H));
  std::vector<GroupElement> out;
  bool cut = detail::walk_group(
      lambda, g, J, max_length, [&](const GroupElement& w) { return w.displacement.height() + 1 <= H; },
      [&](const std::vector<GroupElement>& level) {
        if (finite_stab) return true;
        for (const auto& w : level)
          if (w.min_summand_height() <= H) return true;
        return false;
      },
      [&](const GroupElement& w) {
        if (w.min_summand_height() <= H) out.push_back(w);
      });
  if (cut)
    throw CapExceeded("Weyl group enumeration reached the length cap " + std::to_string(max_length) +
                      " with a live frontier at height bound " + std::to_string(H));
  return out;
}

/// All elements of a finite W_J (throws CapExceeded if the walk does not close
/// within max_length letters).
inline std::vector<GroupElement> enumerate_finite_group(const HighestWeight& lambda, const CartanMatrix& g,
                                                        const NodeSet& J, std::size_t max_length = 256) {
  std::vector<GroupElement> out;
  bool cut = detail::walk_group(
      lambda, g, J, max_length, [](const GroupElement&) { return true; },
      [](const std::vector<GroupElement>&) { return true; }, [&](const GroupElement& w) { out.push_back(w); });
  if (cut) throw CapExceeded("Weyl group did not close within " + std::to_string(max_length) + " letters");
  return out;
}

/// Elements of W_J of length <= max_length.
inline std::vector<GroupElement> elements_up_to_length(const HighestWeight& lambda, const CartanMatrix& g,
                                                       const NodeSet& J, std::size_t max_length) {
  std::vector<GroupElement> out;
  detail::walk_group(
      lambda, g, J, max_length, [](const GroupElement&) { return true; },
      [](const std::vector<GroupElement>&) { return true; }, [&](const GroupElement& w) { out.push_back(w); });
  return out;
}

/// The W_J-orbit of lambda - c restricted to offsets of height <= H.
///
/// Breadth-first over simple reflections in J, dropping images with
/// height > H or outside the cone. Starting from a J-dominant weight every
/// orbit point is reached by a chain of height-increasing reflections, so
/// the window prune is exact.
inline std::set<Offset> orbit_truncated(const HighestWeight& lambda, const CartanMatrix& g, const NodeSet& J,
                                        const Offset& c, std::int64_t H) {
  std::set<Offset> seen;
  if (c.height() > H) return seen;
  std::queue<Offset> todo;
  seen.insert(c);
  todo.push(c);
  while (!todo.empty()) {
    Offset cur = todo.front();
    todo.pop();
    for (auto i : J) {
      auto img = reflect_weight(lambda, g, i, cur);
      if (!img || img->height() > H) continue;
      if (seen.insert(*img).second) todo.push(*img);
    }
  }
  return seen;
}

}  // namespace kmw

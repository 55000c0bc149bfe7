#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <set>

#include "kmw/cartan.hpp"
#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/weyl.hpp"

namespace kmw {

enum class RootClass { PositiveReal, PositiveImaginary, NotARoot };

inline const char* to_string(RootClass r) {
  switch (r) {
    case RootClass::PositiveReal: return "real";
    case RootClass::PositiveImaginary: return "imaginary";
    case RootClass::NotARoot: return "not-a-root";
  }
  return "?";
}

/// Classifies a nonzero beta = sum c_i alpha_i with c >= 0.
///
/// Descends by simple reflections s_i with (h_i, beta) > 0, each of which
/// lowers the height and preserves root status. A descent reaching a simple
/// root means beta is real; leaving the positive cone (other than from a
/// simple root) means beta is not a root. If no descent applies, beta lies in
/// {(h_i, beta) <= 0 for all i}, and it is an imaginary root exactly when its
/// support is connected.
inline RootClass classify_vector(const CartanMatrix& g, SignedOffset c) {
  if (c.size() != g.size()) throw InputError("classify_vector: rank mismatch");
  if (!c.is_positive()) throw InputError("classify_vector: expected a nonzero nonnegative vector, got " + c.str());
  for (;;) {
    if (c.height() == 1) return RootClass::PositiveReal;
    std::size_t step = g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.row_dot(i, c) > 0) {
        step = i;
        break;
      }
    if (step == g.size()) {
      return connected_components(g, c.support()).size() == 1 ? RootClass::PositiveImaginary : RootClass::NotARoot;
    }
    c = reflect(g, step, c);
    if (!c.is_positive()) return RootClass::NotARoot;
  }
}

/// Positive real roots of height <= H: simple roots closed under
/// height-bounded reflection. Every real root above a simple root descends to
/// one by height-decreasing reflections, so the window prune is exact.
inline std::set<SignedOffset> positive_real_up_to(const CartanMatrix& g, std::int64_t H) {
  std::set<SignedOffset> seen;
  std::queue<SignedOffset> todo;
  if (H < 1) return seen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto a = SignedOffset::unit(g.size(), i);
    seen.insert(a);
    todo.push(a);
  }
  while (!todo.empty()) {
    auto b = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto r = reflect(g, i, b);
      if (!r.is_positive() || r.height() > H) continue;
      if (seen.insert(r).second) todo.push(r);
    }
  }
  return seen;
}

/// Positive imaginary roots of height <= H, by exhaustive scan.
inline std::set<SignedOffset> positive_imaginary_up_to(const CartanMatrix& g, std::int64_t H) {
  std::set<SignedOffset> out;
  for_each_offset(g.size(), H, nullptr, [&](const Offset& c) {
    if (c.is_zero()) return;
    if (classify_vector(g, c) == RootClass::PositiveImaginary) out.insert(c);
  });
  return out;
}

/// All positive roots of a finite-type diagram.
inline std::set<SignedOffset> positive_roots_finite(const CartanMatrix& g) {
  if (!is_finite_type(g)) throw NotFiniteType("root system is not of finite type");
  // Heights of finite-type roots are bounded by the Coxeter number, well under 64
  // for the ranks this library handles.
  return positive_real_up_to(g, 64 * static_cast<std::int64_t>(g.size() + 1));
}

}  // namespace kmw

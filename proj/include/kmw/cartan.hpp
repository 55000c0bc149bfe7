#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kmw/errors.hpp"
#include "kmw/lattice.hpp"
#include "kmw/lp.hpp"
#include "kmw/rational.hpp"

namespace kmw {

/// Integer generalized Cartan matrix with node labels. Entry (i, j) is
/// a_ij = (h_i, alpha_j). Immutable after construction.
class CartanMatrix {
 public:
  CartanMatrix() = default;

  CartanMatrix(std::initializer_list<std::vector<int>> rows)
      : CartanMatrix(std::vector<std::vector<int>>(rows)) {}

  explicit CartanMatrix(std::vector<std::vector<int>> entries, std::vector<std::string> labels = {})
      : a_(std::move(entries)), labels_(std::move(labels)) {
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (a_[i].size() != n)
        throw InputError("Cartan matrix is not square (row " + std::to_string(i) + ")");
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i][i] != 2)
        throw InputError("GCM axiom violated: a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                         std::to_string(a_[i][i]) + ", expected 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0)
          throw InputError("GCM axiom violated: a[" + std::to_string(i) + "][" + std::to_string(j) +
                           "] = " + std::to_string(a_[i][j]) + " > 0");
        if ((a_[i][j] == 0) != (a_[j][i] == 0))
          throw InputError("GCM axiom violated: a[" + std::to_string(i) + "][" + std::to_string(j) +
                           "] = " + std::to_string(a_[i][j]) + " but a[" + std::to_string(j) + "][" +
                           std::to_string(i) + "] = " + std::to_string(a_[j][i]));
      }
    }
    if (labels_.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != n) {
      throw InputError("expected " + std::to_string(n) + " node labels, got " + std::to_string(labels_.size()));
    }
  }

  std::size_t size() const { return a_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }
  const std::vector<std::string>& labels() const { return labels_; }

  NodeSet nodes() const {
    NodeSet s;
    for (std::size_t i = 0; i < size(); ++i) s.insert(i);
    return s;
  }

  /// (A v)_i = (h_i, sum_j v_j alpha_j).
  std::int64_t row_dot(std::size_t i, const SignedOffset& v) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < size(); ++j) s += static_cast<std::int64_t>(a_[i][j]) * v[j];
    return s;
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::vector<std::vector<int>> a_;
  std::vector<std::string> labels_;
};

/// Builds a GCM from a parsed document of the form
/// {"cartan": [[...]], "labels": [...]} (labels optional).
inline CartanMatrix gcm_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("cartan")) throw InputError("document has no \"cartan\" field");
  const auto& m = doc.at("cartan");
  if (!m.is_array()) throw InputError("\"cartan\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : m) {
    if (!r.is_array()) throw InputError("\"cartan\" rows must be arrays");
    std::vector<int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InputError("Cartan entries must be integers, got " + x.dump());
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const auto& x : l) {
      if (!x.is_string()) throw InputError("node labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  return CartanMatrix(std::move(rows), std::move(labels));
}

/// Parses a JSON document containing at least a "cartan" matrix.
inline CartanMatrix parse_gcm(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
  return gcm_from_json(doc);
}

enum class DiagramType { Finite, Affine, Indefinite };

inline const char* to_string(DiagramType t) {
  switch (t) {
    case DiagramType::Finite: return "finite";
    case DiagramType::Affine: return "affine";
    case DiagramType::Indefinite: return "indefinite";
  }
  return "?";
}

struct Component {
  NodeSet nodes;
  DiagramType type;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Connected components of the Dynkin diagram restricted to `within`,
/// ordered by smallest node.
inline std::vector<NodeSet> connected_components(const CartanMatrix& g, const NodeSet& within) {
  std::vector<NodeSet> out;
  NodeSet seen;
  for (auto start : within) {
    if (seen.count(start)) continue;
    NodeSet comp;
    std::queue<std::size_t> todo;
    todo.push(start);
    seen.insert(start);
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      comp.insert(i);
      for (auto j : within)
        if (!seen.count(j) && g(i, j) != 0) {
          seen.insert(j);
          todo.push(j);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<NodeSet> connected_components(const CartanMatrix& g) {
  return connected_components(g, g.nodes());
}

namespace detail {

// Vinberg trichotomy for an indecomposable principal submatrix on `comp`:
// finite iff some u >= 1 has A u >= 1, affine iff some u >= 1 has A u = 0.
inline DiagramType classify_indecomposable(const CartanMatrix& g, const NodeSet& comp) {
  std::vector<std::size_t> idx(comp.begin(), comp.end());
  const std::size_t k = idx.size();

  // u = 1 + x, x >= 0.  Finite: A x - s = 1 - A 1 with s >= 0.
  lp::Matrix A(k, lp::Row(2 * k, Rational(0)));
  lp::Row b(k);
  for (std::size_t r = 0; r < k; ++r) {
    std::int64_t row_sum = 0;
    for (std::size_t c = 0; c < k; ++c) {
      A[r][c] = g(idx[r], idx[c]);
      row_sum += g(idx[r], idx[c]);
    }
    A[r][k + r] = -1;
    b[r] = 1 - row_sum;
  }
  if (lp::find_feasible(A, b)) return DiagramType::Finite;

  lp::Matrix A0(k, lp::Row(k, Rational(0)));
  lp::Row b0(k);
  for (std::size_t r = 0; r < k; ++r) {
    std::int64_t row_sum = 0;
    for (std::size_t c = 0; c < k; ++c) {
      A0[r][c] = g(idx[r], idx[c]);
      row_sum += g(idx[r], idx[c]);
    }
    b0[r] = -row_sum;
  }
  if (lp::find_feasible(A0, b0)) return DiagramType::Affine;
  return DiagramType::Indefinite;
}

}  // namespace detail

/// Types of the connected components of the subdiagram on `within`.
inline std::vector<Component> classify(const CartanMatrix& g, const NodeSet& within) {
  for (auto i : within)
    if (i >= g.size()) throw InputError("node " + std::to_string(i) + " out of range");
  std::vector<Component> out;
  for (auto& comp : connected_components(g, within)) {
    auto t = detail::classify_indecomposable(g, comp);
    out.push_back({std::move(comp), t});
  }
  return out;
}

inline std::vector<Component> classify(const CartanMatrix& g) { return classify(g, g.nodes()); }

/// True when every component of the subdiagram on `within` is of finite type
/// (vacuously true for the empty subdiagram).
inline bool is_finite_type(const CartanMatrix& g, const NodeSet& within) {
  for (const auto& c : classify(g, within))
    if (c.type != DiagramType::Finite) return false;
  return true;
}

inline bool is_finite_type(const CartanMatrix& g) { return is_finite_type(g, g.nodes()); }

/// Principal submatrix on J with inherited labels, nodes renumbered in order.
inline CartanMatrix subdiagram(const CartanMatrix& g, const NodeSet& J) {
  for (auto i : J)
    if (i >= g.size()) throw InputError("subdiagram: node " + std::to_string(i) + " is not a node");
  std::vector<std::size_t> idx(J.begin(), J.end());
  std::vector<std::vector<int>> rows;
  std::vector<std::string> labels;
  for (auto i : idx) {
    std::vector<int> row;
    for (auto j : idx) row.push_back(g(i, j));
    rows.push_back(std::move(row));
    labels.push_back(g.labels()[i]);
  }
  return CartanMatrix(std::move(rows), std::move(labels));
}

/// A positive diagonal d with d_i a_ij = d_j a_ji for all i, j, if one exists.
/// The first node of each component gets d = 1; d propagates along a spanning
/// tree and every remaining edge is checked.
inline std::optional<std::vector<Rational>> symmetrizer(const CartanMatrix& g) {
  const std::size_t n = g.size();
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : connected_components(g)) {
    auto root = *comp.begin();
    d[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    NodeSet seen{root};
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (auto j : comp) {
        if (i == j || g(i, j) == 0) continue;
        if (!seen.count(j)) {
          d[j] = d[i] * Rational(g(i, j)) / Rational(g(j, i));
          seen.insert(j);
          todo.push(j);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * g(i, j) != d[j] * g(j, i)) return std::nullopt;
  return d;
}

}  // namespace kmw

#pragma once

/// tau-rigid, tau-tilting and support tau-tilting modules over an enumerated
/// universe, Bongartz completion and TF-admissible orders.
///
/// Basic modules are handled as sorted sets of universe indices; orders as
/// sequences of universe indices.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/torsion.hpp"
#include "stratify/universe.hpp"

namespace stratify {

using IndexSet = std::vector<std::size_t>;
using Order = std::vector<std::size_t>;

inline IndexSet sorted_set(IndexSet s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError("summands are not pairwise non-isomorphic");
  return s;
}

/// Hom(M, tau M) = 0 for M the sum of the listed universe members.
inline bool is_tau_rigid(const Universe& u, const IndexSet& s) {
  for (auto i : s)
    for (auto j : s)
      if (u.hom_to_tau(i, j) != 0) return false;
  return true;
}

/// All nonempty basic tau-rigid modules, by increasing size then lexicographically.
inline std::vector<IndexSet> tau_rigid_sets(const Universe& u) {
  std::vector<IndexSet> out;
  std::vector<IndexSet> level{{}};
  const std::size_t n = static_cast<std::size_t>(u.algebra().vertex_count());
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<IndexSet> next;
    for (const auto& s : level) {
      const std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t k = start; k < u.size(); ++k) {
        IndexSet t = s;
        t.push_back(k);
        if (is_tau_rigid(u, t)) next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

/// Basic tau-rigid modules with as many summands as the algebra has simples.
inline std::vector<IndexSet> enumerate_tau_tilting(const Universe& u) {
  u.require_complete("tau-tilting enumeration");
  const std::size_t n = static_cast<std::size_t>(u.algebra().vertex_count());
  std::vector<IndexSet> out;
  for (auto& s : tau_rigid_sets(u))
    if (s.size() == n) out.push_back(std::move(s));
  return out;
}

/// A support tau-tilting pair (M, P): P is the sum of P(v) over `projective_vertices`.
struct SupportPair {
  IndexSet module;
  std::vector<int> projective_vertices;
};

/// Hom(P(v), M) = 0 exactly when M vanishes at v.
inline bool is_support_tau_tilting_pair(const Universe& u, const IndexSet& m, const std::vector<int>& vertices) {
  if (!is_tau_rigid(u, m)) return false;
  for (int v : vertices)
    for (auto i : m)
      if (u.module(i).dim(v) != 0) return false;
  return m.size() + vertices.size() == static_cast<std::size_t>(u.algebra().vertex_count());
}

inline std::vector<SupportPair> enumerate_support_tau_tilting(const Universe& u) {
  u.require_complete("support tau-tilting enumeration");
  const int n = u.algebra().vertex_count();
  std::vector<IndexSet> candidates{{}};
  for (auto& s : tau_rigid_sets(u)) candidates.push_back(std::move(s));
  std::vector<SupportPair> out;
  for (const auto& m : candidates) {
    std::vector<int> free;
    for (int v = 0; v < n; ++v) {
      bool zero = true;
      for (auto i : m) zero = zero && u.module(i).dim(v) == 0;
      if (zero) free.push_back(v);
    }
    const std::size_t need = static_cast<std::size_t>(n) - m.size();
    if (free.size() < need) continue;
    // Every subset of the vertices where M vanishes, of the required size.
    std::vector<bool> pick(free.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
    do {
      std::vector<int> verts;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (pick[k]) verts.push_back(free[k]);
      out.push_back({m, verts});
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

/// Bongartz completion: the Ext-projectives of ^perp(tau M) in the universe.
inline IndexSet bongartz_completion(const Universe& u, const IndexSet& m) {
  u.require_complete("Bongartz completion");
  if (!is_tau_rigid(u, m)) throw ValidationError("Bongartz completion of a module that is not tau-rigid");
  std::vector<std::size_t> t;
  for (std::size_t x = 0; x < u.size(); ++x) {
    bool ok = true;
    for (auto j : m) ok = ok && u.hom_to_tau(x, j) == 0;
    if (ok) t.push_back(x);
  }
  IndexSet out;
  for (auto x : t) {
    bool ext_projective = true;
    for (auto y : t) ext_projective = ext_projective && u.ext(x, y) == 0;
    if (ext_projective) out.push_back(x);
  }
  if (out.size() != static_cast<std::size_t>(u.algebra().vertex_count()))
    throw InvariantViolation("Bongartz completion has the wrong number of summands");
  for (auto i : m)
    if (!std::binary_search(out.begin(), out.end(), i))
      throw InvariantViolation("Bongartz completion does not contain the module");
  if (!is_tau_rigid(u, out)) throw InvariantViolation("Bongartz completion is not tau-rigid");
  return out;
}

/// Memoized membership "X_i in Fac(sum of a set)".
class FacCache {
 public:
  explicit FacCache(const Universe& u) : u_(&u) {}

  bool member(std::size_t i, IndexSet gens) {
    std::sort(gens.begin(), gens.end());
    auto key = std::make_pair(i, gens);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool r = !gens.empty() && in_fac(u_->sum(gens), u_->module(i));
    cache_.emplace(std::move(key), r);
    return r;
  }

 private:
  const Universe* u_;
  std::map<std::pair<std::size_t, IndexSet>, bool> cache_;
};

/// M_i not in Fac(M_{i+1} + ... + M_t) for every i.
inline bool is_tf_admissible(const Order& order, FacCache& fac) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    IndexSet tail(order.begin() + static_cast<std::ptrdiff_t>(i) + 1, order.end());
    if (fac.member(order[i], tail)) return false;
  }
  return true;
}

inline bool is_tf_admissible(const Universe& u, const Order& order) {
  FacCache fac(u);
  return is_tf_admissible(order, fac);
}

/// All TF-admissible orders of a basic tau-rigid module, in lexicographic order.
inline std::vector<Order> tf_admissible_orders(const IndexSet& module, FacCache& fac) {
  Order perm = sorted_set(module);
  std::vector<Order> out;
  if (perm.empty()) return out;
  do {
    if (is_tf_admissible(perm, fac)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (out.empty()) throw InvariantViolation("tau-rigid module without a TF-admissible order");
  return out;
}

inline std::vector<Order> tf_admissible_orders(const Universe& u, const IndexSet& module) {
  if (!is_tau_rigid(u, module)) throw ValidationError("TF-admissible orders of a module that is not tau-rigid");
  FacCache fac(u);
  return tf_admissible_orders(module, fac);
}

/// Extends a TF-admissible order of M to one of its Bongartz completion B,
/// with the complement first (first admissible arrangement in sorted order)
/// and M's summands last in the given order.
inline Order extend_order_to_bongartz(const Universe& u, const Order& order, const IndexSet& completion) {
  FacCache fac(u);
  if (!is_tf_admissible(order, fac)) throw ValidationError("order is not TF-admissible");
  IndexSet complement;
  for (auto x : completion)
    if (std::find(order.begin(), order.end(), x) == order.end()) complement.push_back(x);
  if (complement.size() + order.size() != completion.size()) throw ValidationError("completion does not contain the module");
  std::sort(complement.begin(), complement.end());
  do {
    Order full = complement;
    full.insert(full.end(), order.begin(), order.end());
    if (is_tf_admissible(full, fac)) return full;
  } while (std::next_permutation(complement.begin(), complement.end()));
  throw InvariantViolation("no TF-admissible arrangement of the Bongartz complement");
}

}  // namespace stratify

#pragma once

#include <map>
#include <string>

#include "stratify/stratify.hpp"

namespace stratify::testing {

inline std::string example_path(const std::string& name) { return std::string(STRATIFY_EXAMPLES) + "/" + name; }

inline const Algebra& cyclic(Scalar p = 2) {
  static std::map<Scalar, Algebra> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, load_algebra(example_path("cyclic3_rad3.alg"), p)).first;
  return it->second;
}

inline const Algebra& linear(Scalar p = 2) {
  static std::map<Scalar, Algebra> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, load_algebra(example_path("linear2.alg"), p)).first;
  return it->second;
}

inline const Universe& cyclic_universe(Scalar p = 2) {
  static std::map<Scalar, Universe> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, enumerate_indecomposables(cyclic(p))).first;
  return it->second;
}

inline const Universe& linear_universe(Scalar p = 2) {
  static std::map<Scalar, Universe> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, enumerate_indecomposables(linear(p))).first;
  return it->second;
}

/// Universe index by canonical name; aborts the test on an unknown name.
inline std::size_t idx(const Universe& u, const std::string& name) {
  auto i = u.find_name(name);
  if (!i) throw std::runtime_error("no module named " + name);
  return *i;
}

inline const Representation& mod(const Universe& u, const std::string& name) { return u.module(idx(u, name)); }

inline Order order_of(const Universe& u, std::initializer_list<const char*> names) {
  Order o;
  for (const char* n : names) o.push_back(idx(u, n));
  return o;
}

inline IndexSet set_of(const Universe& u, std::initializer_list<const char*> names) {
  IndexSet s = order_of(u, names);
  std::sort(s.begin(), s.end());
  return s;
}

inline Representation sum_of(const Universe& u, std::initializer_list<const char*> names) {
  return u.sum(order_of(u, names));
}

/// Label of a module as sorted summand names, e.g. "M12+P1".
inline std::string label(const Universe& u, const Representation& m) {
  if (m.is_zero()) return "0";
  return u.module_label(u.express(m));
}

/// The same module written in new bases: arrow a becomes g_t M_a g_s^{-1}.
inline Representation change_basis(const Representation& m, const std::vector<Matrix>& g) {
  std::vector<Matrix> maps;
  const auto& a = m.algebra();
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const auto ar = a.arrow(k);
    const auto gi = inverse(g[static_cast<std::size_t>(ar.source)]);
    maps.push_back(g[static_cast<std::size_t>(ar.target)] * m.map(k) * *gi);
  }
  return Representation(a, m.dims(), std::move(maps));
}

/// Deterministic invertible matrices: upper unitriangular with a full first row,
/// times a cyclic shift.
inline Matrix mixing_matrix(std::size_t n, Scalar p) {
  Matrix u = Matrix::identity(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, 1);
  Matrix s(n, n, p);
  for (std::size_t i = 0; i < n; ++i) s.set(i, (i + 1) % n, 1);
  return n == 0 ? u : u * s;
}

inline Representation mixed(const Representation& m) {
  std::vector<Matrix> g;
  for (int v = 0; v < m.vertex_count(); ++v) g.push_back(mixing_matrix(m.dim(v), m.characteristic()));
  return change_basis(m, g);
}

/// The cyclic fixture's rotation 1 -> 2 -> 3 -> 1 (a -> b -> c -> a).
inline Representation rotate(const Representation& m) {
  const auto& a = m.algebra();
  const int n = a.vertex_count();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dims[static_cast<std::size_t>((v + 1) % n)] = m.dim(v);
  std::vector<Matrix> maps(a.arrow_count());
  for (std::size_t k = 0; k < a.arrow_count(); ++k) maps[(k + 1) % a.arrow_count()] = m.map(k);
  return Representation(a, std::move(dims), std::move(maps));
}

}  // namespace stratify::testing

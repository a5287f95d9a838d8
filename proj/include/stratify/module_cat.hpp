#pragma once

/// The module category: Hom spaces, kernels, images, cokernels, direct sums,
/// isomorphism testing and Krull-Schmidt decomposition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/linalg.hpp"
#include "stratify/representation.hpp"

namespace stratify {

/// Bounds for the exhaustive searches over finite Hom spaces.
struct SearchCaps {
  std::uint64_t iso_elements = std::uint64_t{1} << 20;
  std::uint64_t endomorphism_elements = std::uint64_t{1} << 20;
};

inline SearchCaps& default_caps() {
  static SearchCaps caps;
  return caps;
}

/// p^d, saturating at `limit + 1`.
inline std::uint64_t bounded_power(Scalar p, std::size_t d, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < d; ++i) {
    v *= p;
    if (v > limit) return limit + 1;
  }
  return v;
}

/// Basis of Hom_A(M, N): the solutions of N_a f_s - f_t M_a = 0 for all arrows.
inline std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Algebra& a = m.algebra();
  const Scalar p = a.characteristic();
  const int nv = a.vertex_count();
  std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return {};

  std::size_t equations = 0;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Arrow ar = a.arrow(k);
    equations += n.dim(ar.target) * m.dim(ar.source);
  }
  Matrix sys(equations, unknowns, p);
  std::size_t row = 0;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Arrow ar = a.arrow(k);
    const auto s = static_cast<std::size_t>(ar.source);
    const auto t = static_cast<std::size_t>(ar.target);
    const Matrix& na = n.map(k);  // dim N_t x dim N_s
    const Matrix& ma = m.map(k);  // dim M_t x dim M_s
    const std::size_t ms = m.dim(ar.source), mt = m.dim(ar.target), ns = n.dim(ar.source);
    const std::size_t nt = n.dim(ar.target);
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        // (N_a f_s)(r, c) = sum_x N_a(r, x) f_s(x, c)
        for (std::size_t x = 0; x < ns; ++x) {
          if (na(r, x) != 0) sys.add_to(row, offset[s] + x * ms + c, na(r, x));
        }
        // (f_t M_a)(r, c) = sum_y f_t(r, y) M_a(y, c)
        for (std::size_t y = 0; y < mt; ++y) {
          if (ma(y, c) != 0) sys.add_to(row, offset[t] + r * mt + y, fp::neg(ma(y, c), p));
        }
      }
    }
  }
  std::vector<Morphism> out;
  for (const auto& v : nullspace_basis(sys)) {
    std::vector<Matrix> maps;
    for (int vert = 0; vert < nv; ++vert) {
      const auto vi = static_cast<std::size_t>(vert);
      Matrix f(n.dim(vert), m.dim(vert), p);
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) f.set(r, c, v[offset[vi] + r * f.cols() + c]);
      maps.push_back(std::move(f));
    }
    out.emplace_back(m, n, std::move(maps), Morphism::Unchecked{});
  }
  return out;
}

inline std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).size(); }

/// Linear combination sum c_i f_i of parallel morphisms.
inline Morphism combine(const std::vector<Morphism>& basis, const Vector& coefficients, const Representation& source,
                        const Representation& target) {
  Morphism out = Morphism::zero(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coefficients[i] != 0) out = out + basis[i].scaled(coefficients[i]);
  return out;
}

/// A submodule together with its inclusion.
struct Submodule {
  Representation module;
  Morphism inclusion;
};

/// A quotient module together with its projection.
struct Quotient {
  Representation module;
  Morphism projection;
};

/// Builds the submodule of `m` whose vertex spaces are spanned by the
/// (linearly independent) columns of `bases`. The spaces must be stable.
inline Submodule submodule_from_bases(const Representation& m, std::vector<Matrix> bases) {
  const Algebra& a = m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Arrow ar = a.arrow(k);
    const auto& bs = bases[static_cast<std::size_t>(ar.source)];
    const auto& bt = bases[static_cast<std::size_t>(ar.target)];
    auto x = solve(bt, m.map(k) * bs);
    if (!x) throw InvariantViolation("vertex spaces are not stable under arrow " + ar.name);
    maps.push_back(std::move(*x));
  }
  Representation sub(a, std::move(dims), std::move(maps));
  return {sub, Morphism(sub, m, std::move(bases), Morphism::Unchecked{})};
}

/// Smallest submodule containing the columns of `generators` at each vertex.
inline Submodule generated_submodule(const Representation& m, std::vector<Matrix> generators) {
  const Algebra& a = m.algebra();
  std::vector<Matrix> bases;
  for (auto& g : generators) bases.push_back(column_space_basis(g));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < a.arrow_count(); ++k) {
      const Arrow ar = a.arrow(k);
      const auto s = static_cast<std::size_t>(ar.source);
      const auto t = static_cast<std::size_t>(ar.target);
      if (bases[s].cols() == 0) continue;
      const Matrix grown = column_space_basis(hstack(bases[t], m.map(k) * bases[s]));
      if (grown.cols() != bases[t].cols()) {
        bases[t] = grown;
        changed = true;
      }
    }
  }
  return submodule_from_bases(m, std::move(bases));
}

inline Submodule zero_submodule(const Representation& m) {
  std::vector<Matrix> bases;
  for (int v = 0; v < m.vertex_count(); ++v) bases.emplace_back(m.dim(v), 0, m.characteristic());
  return submodule_from_bases(m, std::move(bases));
}

inline Submodule whole_submodule(const Representation& m) {
  std::vector<Matrix> bases;
  for (int v = 0; v < m.vertex_count(); ++v) bases.push_back(Matrix::identity(m.dim(v), m.characteristic()));
  return submodule_from_bases(m, std::move(bases));
}

/// Quotient of `m` by the subspaces spanned by `sub_bases`. Quotient
/// coordinates are those of the standard-basis complement.
inline Quotient quotient_by_bases(const Representation& m, const std::vector<Matrix>& sub_bases) {
  const Algebra& a = m.algebra();
  std::vector<Matrix> lift, proj;
  std::vector<std::size_t> dims;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto& b = sub_bases[static_cast<std::size_t>(v)];
    if (rank(b) != b.cols()) throw InvariantViolation("submodule basis is not independent");
    const Matrix c = complement_columns(b);
    const Matrix full = hstack(b, c);
    const Matrix inv = *inverse(full);
    proj.push_back(inv.block(b.cols(), 0, c.cols(), m.dim(v)));
    lift.push_back(c);
    dims.push_back(c.cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Arrow ar = a.arrow(k);
    maps.push_back(proj[static_cast<std::size_t>(ar.target)] * m.map(k) * lift[static_cast<std::size_t>(ar.source)]);
  }
  Representation q(a, std::move(dims), std::move(maps));
  return {q, Morphism(m, q, std::move(proj), Morphism::Unchecked{})};
}

/// M / sub, where `sub` is an injective morphism into M.
inline Quotient quotient(const Representation& m, const Morphism& sub) {
  if (!(sub.target().algebra() == m.algebra()) || sub.target().dims() != m.dims())
    throw ValidationError("submodule does not map into the module");
  if (!sub.is_injective()) throw ValidationError("quotient by a non-injective morphism");
  std::vector<Matrix> bases;
  for (int v = 0; v < m.vertex_count(); ++v) bases.push_back(sub.map(v));
  return quotient_by_bases(m, bases);
}

inline Submodule kernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < f.source().vertex_count(); ++v) bases.push_back(kernel_matrix(f.map(v)));
  return submodule_from_bases(f.source(), std::move(bases));
}

inline Submodule image(const Morphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < f.source().vertex_count(); ++v) bases.push_back(column_space_basis(f.map(v)));
  return submodule_from_bases(f.target(), std::move(bases));
}

inline Quotient cokernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < f.source().vertex_count(); ++v) bases.push_back(column_space_basis(f.map(v)));
  return quotient_by_bases(f.target(), bases);
}

struct ImageFactorization {
  Submodule kernel;
  Submodule image;
  Quotient cokernel;
};

inline ImageFactorization image_factorization(const Morphism& f) { return {kernel(f), image(f), cokernel(f)}; }

/// Sum of submodules given by their vertex bases.
inline std::vector<Matrix> sum_of_bases(const Representation& m, const std::vector<std::vector<Matrix>>& parts) {
  std::vector<Matrix> out;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix acc(m.dim(v), 0, m.characteristic());
    for (const auto& part : parts) acc = hstack(acc, part[static_cast<std::size_t>(v)]);
    out.push_back(column_space_basis(acc));
  }
  return out;
}

struct DirectSum {
  Representation module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

inline DirectSum direct_sum_with_maps(const Algebra& algebra, const std::vector<Representation>& parts) {
  const Scalar p = algebra.characteristic();
  const int nv = algebra.vertex_count();
  for (const auto& x : parts)
    if (!(x.algebra() == algebra)) throw ValidationError("direct sum of modules over different algebras");
  std::vector<std::size_t> dims(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<std::size_t>> offsets;
  for (const auto& x : parts) {
    offsets.push_back(dims);
    for (int v = 0; v < nv; ++v) dims[static_cast<std::size_t>(v)] += x.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < algebra.arrow_count(); ++k) {
    const Arrow ar = algebra.arrow(k);
    const auto s = static_cast<std::size_t>(ar.source);
    const auto t = static_cast<std::size_t>(ar.target);
    Matrix m(dims[t], dims[s], p);
    for (std::size_t i = 0; i < parts.size(); ++i) m.set_block(offsets[i][t], offsets[i][s], parts[i].map(k));
    maps.push_back(std::move(m));
  }
  Representation sum(algebra, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Matrix> inj, proj;
    for (int v = 0; v < nv; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      Matrix e(dims[vi], parts[i].dim(v), p);
      e.set_block(offsets[i][vi], 0, Matrix::identity(parts[i].dim(v), p));
      proj.push_back(e.transposed());
      inj.push_back(std::move(e));
    }
    out.injections.emplace_back(parts[i], sum, std::move(inj), Morphism::Unchecked{});
    out.projections.emplace_back(sum, parts[i], std::move(proj), Morphism::Unchecked{});
  }
  return out;
}

inline Representation direct_sum(const Algebra& algebra, const std::vector<Representation>& parts) {
  return direct_sum_with_maps(algebra, parts).module;
}

/// Radical: the submodule spanned by the images of all arrows.
inline Submodule radical(const Representation& m) {
  const Algebra& a = m.algebra();
  std::vector<Matrix> gens;
  for (int v = 0; v < m.vertex_count(); ++v) gens.emplace_back(m.dim(v), 0, m.characteristic());
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const auto t = static_cast<std::size_t>(a.arrow(k).target);
    gens[t] = hstack(gens[t], m.map(k));
  }
  return generated_submodule(m, std::move(gens));
}

inline Quotient top(const Representation& m) { return quotient(m, radical(m).inclusion); }

/// Socle: vectors killed by every arrow.
inline Submodule socle(const Representation& m) {
  const Algebra& a = m.algebra();
  std::vector<Matrix> bases;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix stacked(0, m.dim(v), m.characteristic());
    for (std::size_t k = 0; k < a.arrow_count(); ++k)
      if (a.arrow(k).source == v) stacked = vstack(stacked, m.map(k));
    bases.push_back(kernel_matrix(stacked));
  }
  return submodule_from_bases(m, std::move(bases));
}

/// Dimension vector of the top, i.e. multiplicities of P(i) in the projective cover.
inline std::vector<std::size_t> top_dims(const Representation& m) { return top(m).module.dims(); }

/// Stabilized power phi^k with k = dim M: its kernel and image split M (Fitting).
inline Morphism fitting_power(const Morphism& phi) {
  const std::size_t k = std::max<std::size_t>(1, phi.source().total_dim());
  std::vector<Matrix> maps;
  for (const auto& m : phi.maps()) maps.push_back(matrix_power(m, k));
  return Morphism(phi.source(), phi.target(), std::move(maps), Morphism::Unchecked{});
}

inline bool is_nilpotent(const Morphism& phi) { return fitting_power(phi).is_zero(); }

namespace detail {

/// Walks all coefficient vectors over F_p of length d in a fixed order.
inline bool for_each_coefficient_vector(Scalar p, std::size_t d, const std::function<bool(const Vector&)>& visit) {
  Vector c(d, 0);
  while (true) {
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < d) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

/// An endomorphism that is neither nilpotent nor invertible, if one is found.
inline std::optional<Morphism> find_splitting_endomorphism(const Representation& m, const std::vector<Morphism>& end,
                                                           const SearchCaps& caps) {
  const Scalar p = m.characteristic();
  auto splits = [](const Morphism& phi) {
    const Morphism f = fitting_power(phi);
    return !f.is_zero() && !f.is_isomorphism();
  };
  const Morphism id = Morphism::identity(m);
  const Scalar lambda_count = std::min<Scalar>(p, 16);
  auto try_shifts = [&](const Morphism& phi) -> std::optional<Morphism> {
    if (splits(phi)) return phi;
    for (Scalar l = 1; l < lambda_count; ++l) {
      Morphism shifted = phi + id.scaled(fp::neg(l, p));
      if (splits(shifted)) return shifted;
    }
    return std::nullopt;
  };
  for (const auto& e : end)
    if (auto s = try_shifts(e)) return s;
  for (std::size_t i = 0; i < end.size(); ++i) {
    for (std::size_t j = 0; j < end.size(); ++j) {
      if (auto s = try_shifts(end[i].then(end[j]))) return s;
      if (i < j)
        if (auto s = try_shifts(end[i] + end[j])) return s;
    }
  }
  std::mt19937_64 rng(0x5eedULL + end.size());
  std::uniform_int_distribution<Scalar> coef(0, p - 1);
  for (int trial = 0; trial < 64; ++trial) {
    Vector c(end.size());
    for (auto& x : c) x = coef(rng);
    if (auto s = try_shifts(combine(end, c, m, m))) return s;
  }
  const std::uint64_t total = bounded_power(p, end.size(), caps.endomorphism_elements);
  if (total > caps.endomorphism_elements) {
    throw InconclusiveError("endomorphism scan exceeds cap " + std::to_string(caps.endomorphism_elements) +
                            " (dim End = " + std::to_string(end.size()) + ")");
  }
  std::optional<Morphism> found;
  for_each_coefficient_vector(p, end.size(), [&](const Vector& c) {
    Morphism phi = combine(end, c, m, m);
    if (splits(phi)) {
      found = phi;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace detail

/// True when End(M) is local, i.e. M is indecomposable (M nonzero).
inline bool is_indecomposable(const Representation& m, const SearchCaps& caps = default_caps()) {
  if (m.is_zero()) return false;
  return !detail::find_splitting_endomorphism(m, hom_basis(m, m), caps).has_value();
}

/// Iso test between modules known to be indecomposable: exact because End is local.
inline bool indecomposables_isomorphic(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  const auto f = hom_basis(m, n);
  if (f.empty()) return false;
  for (const auto& x : f)
    if (x.is_isomorphism()) return true;
  const auto g = hom_basis(n, m);
  for (const auto& x : f)
    for (const auto& y : g)
      if (x.then(y).is_isomorphism()) return true;
  return false;
}

struct DecompositionReport {
  struct Entry {
    Representation module;
    std::size_t multiplicity = 0;
  };
  std::vector<Entry> summands;
  std::size_t rank() const { return summands.size(); }
};

/// Indecomposable summands of M (with repetition), split recursively by Fitting's lemma.
inline std::vector<Representation> indecomposable_summands(const Representation& m,
                                                           const SearchCaps& caps = default_caps()) {
  if (m.is_zero()) return {};
  const auto end = hom_basis(m, m);
  const auto phi = detail::find_splitting_endomorphism(m, end, caps);
  if (!phi) return {m};
  const Morphism f = fitting_power(*phi);
  auto left = indecomposable_summands(kernel(f).module, caps);
  auto right = indecomposable_summands(image(f).module, caps);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

/// Groups indecomposables into isomorphism classes, keeping first-seen order.
inline DecompositionReport group_summands(const std::vector<Representation>& parts) {
  DecompositionReport report;
  for (const auto& x : parts) {
    bool merged = false;
    for (auto& e : report.summands) {
      if (indecomposables_isomorphic(e.module, x)) {
        ++e.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) report.summands.push_back({x, 1});
  }
  return report;
}

inline DecompositionReport decompose(const Representation& m, const SearchCaps& caps = default_caps()) {
  return group_summands(indecomposable_summands(m, caps));
}

/// Isomorphism test: dimension and Hom-dimension prefilters, direct witnesses,
/// then an exhaustive scan of Hom(M, N) within the cap, falling back to
/// comparing Krull-Schmidt decompositions.
inline bool is_isomorphic(const Representation& m, const Representation& n, const SearchCaps& caps = default_caps()) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto f = hom_basis(m, n);
  const auto g = hom_basis(n, m);
  if (f.size() != g.size() || f.empty()) return false;
  const auto em = hom_basis(m, m).size();
  const auto en = hom_basis(n, n).size();
  if (em != en || em != f.size()) return false;
  for (const auto& x : f)
    if (x.is_isomorphism()) return true;
  for (const auto& x : f)
    for (const auto& y : g)
      if (x.then(y).is_isomorphism()) return true;
  const Scalar p = m.characteristic();
  if (bounded_power(p, f.size(), caps.iso_elements) <= caps.iso_elements) {
    return detail::for_each_coefficient_vector(p, f.size(), [&](const Vector& c) {
      return combine(f, c, m, n).is_isomorphism();
    });
  }
  const auto dm = decompose(m, caps);
  const auto dn = decompose(n, caps);
  if (dm.rank() != dn.rank()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& e : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dn.summands[j].multiplicity != e.multiplicity) continue;
      if (indecomposables_isomorphic(e.module, dn.summands[j].module)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

/// An isomorphism M -> N for indecomposable M, N, if they are isomorphic.
inline std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n,
                                                const SearchCaps& caps = default_caps()) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return Morphism::zero(m, n);
  const auto f = hom_basis(m, n);
  for (const auto& x : f)
    if (x.is_isomorphism()) return x;
  const auto g = hom_basis(n, m);
  for (const auto& x : f)
    for (const auto& y : g)
      if (x.then(y).is_isomorphism()) return x;
  const Scalar p = m.characteristic();
  if (bounded_power(p, f.size(), caps.iso_elements) > caps.iso_elements)
    throw InconclusiveError("isomorphism search exceeds cap " + std::to_string(caps.iso_elements));
  std::optional<Morphism> found;
  detail::for_each_coefficient_vector(p, f.size(), [&](const Vector& c) {
    Morphism h = combine(f, c, m, n);
    if (h.is_isomorphism()) {
      found = h;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace stratify

#pragma once

/// Projective covers and presentations, the transpose, the Auslander-Reiten
/// translations tau = D Tr and tau^- = Tr D, syzygies, and Ext^1.

#include <optional>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/linalg.hpp"
#include "stratify/module_cat.hpp"
#include "stratify/representation.hpp"

namespace stratify {

/// A direct sum of indecomposable projectives, one P(v) per entry of `vertices`.
struct ProjectiveSum {
  Representation module;
  std::vector<int> vertices;
  // offsets[s][k]: first coordinate of summand s at vertex k.
  std::vector<std::vector<std::size_t>> offsets;
};

inline ProjectiveSum projective_sum(const Algebra& algebra, std::vector<int> vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(projective(algebra, v));
  ProjectiveSum out{direct_sum(algebra, parts), std::move(vertices), {}};
  std::vector<std::size_t> running(static_cast<std::size_t>(algebra.vertex_count()), 0);
  for (const auto& x : parts) {
    out.offsets.push_back(running);
    for (int k = 0; k < algebra.vertex_count(); ++k) running[static_cast<std::size_t>(k)] += x.dim(k);
  }
  return out;
}

/// The morphism from a sum of projectives to M sending the idempotent of
/// summand s to `generators[s]` (a vector of M at vertex vertices[s]).
inline Morphism map_from_projectives(const ProjectiveSum& p, const Representation& m,
                                     const std::vector<Vector>& generators) {
  const Algebra& a = m.algebra();
  const Scalar ch = a.characteristic();
  std::vector<Matrix> maps;
  for (int k = 0; k < a.vertex_count(); ++k) maps.emplace_back(m.dim(k), p.module.dim(k), ch);
  for (std::size_t s = 0; s < p.vertices.size(); ++s) {
    const int i = p.vertices[s];
    for (int k = 0; k < a.vertex_count(); ++k) {
      const auto paths = a.paths(i, k);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const Vector col = m.path_matrix(paths[c]).apply(generators[s]);
        for (std::size_t r = 0; r < col.size(); ++r)
          maps[static_cast<std::size_t>(k)].set(r, p.offsets[s][static_cast<std::size_t>(k)] + c, col[r]);
      }
    }
  }
  return Morphism(p.module, m, std::move(maps));
}

/// Morphism between sums of projectives given by the images of idempotents:
/// images[s][b] are coordinates over paths(target vertex b, source vertex s).
inline Morphism map_between_projectives(const ProjectiveSum& from, const ProjectiveSum& to,
                                        const std::vector<std::vector<Vector>>& images) {
  std::vector<Vector> generators;
  const auto& a = to.module.algebra();
  for (std::size_t s = 0; s < from.vertices.size(); ++s) {
    const int i = from.vertices[s];
    Vector g(to.module.dim(i), 0);
    for (std::size_t b = 0; b < to.vertices.size(); ++b) {
      const auto& x = images[s][b];
      if (x.size() != a.path_count(to.vertices[b], i)) throw InvariantViolation("coefficient block has wrong length");
      for (std::size_t r = 0; r < x.size(); ++r) g[to.offsets[b][static_cast<std::size_t>(i)] + r] = x[r];
    }
    generators.push_back(std::move(g));
  }
  return map_from_projectives(from, to.module, generators);
}

struct ProjectiveCover {
  ProjectiveSum projective;
  Morphism cover;  // projective -> M, surjective
};

/// Projective cover: one P(i) per basis vector of a complement of rad(M) at i.
inline ProjectiveCover projective_cover(const Representation& m) {
  const Algebra& a = m.algebra();
  const Submodule rad = radical(m);
  std::vector<int> vertices;
  std::vector<Vector> generators;
  for (int i = 0; i < a.vertex_count(); ++i) {
    const Matrix c = complement_columns(rad.inclusion.map(i));
    for (std::size_t j = 0; j < c.cols(); ++j) {
      vertices.push_back(i);
      generators.push_back(c.column(j));
    }
  }
  ProjectiveSum p = projective_sum(a, vertices);
  Morphism cover = map_from_projectives(p, m, generators);
  if (!cover.is_surjective()) throw InvariantViolation("projective cover is not surjective");
  return {std::move(p), std::move(cover)};
}

/// Minimal projective presentation P1 -> P0 -> M -> 0.
struct ProjectivePresentation {
  Representation module;
  ProjectiveSum p0;
  ProjectiveSum p1;
  Morphism cover;        // P0 -> M
  Submodule syzygy;      // kernel of the cover, inside P0
  Morphism relations;    // P1 -> P0, image = syzygy
};

inline ProjectivePresentation min_proj_presentation(const Representation& m) {
  ProjectiveCover c0 = projective_cover(m);
  Submodule omega = kernel(c0.cover);
  ProjectiveCover c1 = projective_cover(omega.module);
  Morphism p1 = c1.cover.then(omega.inclusion);
  return {m, std::move(c0.projective), std::move(c1.projective), std::move(c0.cover), std::move(omega), std::move(p1)};
}

inline Representation syzygy(const Representation& m) { return kernel(projective_cover(m).cover).module; }

/// Tr M = coker(Hom(P0, A) -> Hom(P1, A)), a module over the opposite algebra.
/// Hom(P(i), A) is the projective P(i) of the opposite algebra; a component
/// P(i) -> P(j) given by x in paths(j, i) becomes P^op(j) -> P^op(i) with the
/// same coordinates, since opposite paths keep the order of the originals.
inline Representation transpose(const Representation& m) {
  const Algebra op = m.algebra().opposite();
  if (m.is_zero()) return Representation::zero(op);
  const auto pres = min_proj_presentation(m);
  const Algebra& a = m.algebra();
  ProjectiveSum from = projective_sum(op, pres.p0.vertices);
  ProjectiveSum to = projective_sum(op, pres.p1.vertices);
  if (to.vertices.empty()) return Representation::zero(op);
  std::vector<std::vector<Vector>> images(from.vertices.size(), std::vector<Vector>(to.vertices.size()));
  for (std::size_t b = 0; b < from.vertices.size(); ++b) {
    const int j = from.vertices[b];
    for (std::size_t s = 0; s < to.vertices.size(); ++s) {
      const int i = to.vertices[s];
      // Image of e_i (summand s of P1) in summand b of P0, at vertex i.
      const std::size_t col = pres.p1.offsets[s][static_cast<std::size_t>(i)];
      const std::size_t row0 = pres.p0.offsets[b][static_cast<std::size_t>(i)];
      const std::size_t len = a.path_count(j, i);
      Vector x(len, 0);
      for (std::size_t r = 0; r < len; ++r) x[r] = pres.relations.map(i)(row0 + r, col);
      images[b][s] = std::move(x);
    }
  }
  return cokernel(map_between_projectives(from, to, images)).module;
}

/// tau M = D Tr M.
inline Representation tau(const Representation& m) { return dual(transpose(m)); }

/// tau^- M = Tr D M.
inline Representation tau_inverse(const Representation& m) { return transpose(dual(m)); }

enum class Direction { forward, backward };

inline Representation ar_translate(const Representation& m, Direction d) {
  return d == Direction::forward ? tau(m) : tau_inverse(m);
}

/// Cosyzygy D Omega D M: cokernel of the injective envelope.
inline Representation cosyzygy(const Representation& m) { return dual(syzygy(dual(m))); }

/// Ext^1(M, N) as coker(Hom(P0, N) -> Hom(Omega M, N)).
struct Ext1 {
  std::size_t dim = 0;
  ProjectivePresentation presentation;
  Representation target;
  // Maps Omega M -> N whose classes form a basis of Ext^1(M, N).
  std::vector<Morphism> cocycles;
};

inline Ext1 ext1(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  auto pres = min_proj_presentation(m);
  Ext1 out{0, pres, n, {}};
  const auto h = hom_basis(pres.syzygy.module, n);
  if (h.empty()) return out;
  const auto g = hom_basis(pres.p0.module, n);
  const Scalar p = m.characteristic();
  const std::size_t len = h.front().coordinates().size();
  Matrix restricted(len, 0, p);
  for (const auto& x : g) {
    const Vector c = pres.syzygy.inclusion.then(x).coordinates();
    restricted = hstack(restricted, Matrix::from_columns(len, p, {c}));
  }
  std::size_t current = rank(restricted);
  Matrix acc = restricted;
  for (const auto& x : h) {
    Matrix next = hstack(acc, Matrix::from_columns(len, p, {x.coordinates()}));
    const std::size_t r = rank(next);
    if (r > current) {
      out.cocycles.push_back(x);
      acc = std::move(next);
      current = r;
    }
  }
  out.dim = out.cocycles.size();
  return out;
}

inline std::size_t ext1_dim(const Representation& m, const Representation& n) { return ext1(m, n).dim; }

/// Middle term of the extension 0 -> N -> E -> M -> 0 classified by the cocycle h:
/// the pushout (N + P0) / {(h(x), -x) : x in Omega M}.
inline Representation extension_middle(const Ext1& e, const Morphism& h) {
  const Algebra& a = e.target.algebra();
  const auto sum = direct_sum_with_maps(a, {e.target, e.presentation.p0.module});
  const Morphism into = h.then(sum.injections[0]) +
                        e.presentation.syzygy.inclusion.then(sum.injections[1]).scaled(fp::neg(1, a.characteristic()));
  return cokernel(into).module;
}

/// A non-split extension middle term, when Ext^1(M, N) is nonzero.
inline std::optional<Representation> ext1_witness(const Representation& m, const Representation& n) {
  const auto e = ext1(m, n);
  if (e.dim == 0) return std::nullopt;
  return extension_middle(e, e.cocycles.front());
}

/// Middle terms of every nonzero class of Ext^1(M, N), up to a cap on the class count.
inline std::vector<Representation> all_extension_middles(const Ext1& e, std::uint64_t cap = 4096) {
  std::vector<Representation> out;
  if (e.dim == 0) return out;
  const Scalar p = e.target.characteristic();
  if (bounded_power(p, e.dim, cap) > cap) throw InconclusiveError("too many extension classes to enumerate");
  detail::for_each_coefficient_vector(p, e.dim, [&](const Vector& c) {
    if (std::all_of(c.begin(), c.end(), [](Scalar x) { return x == 0; })) return false;
    out.push_back(extension_middle(e, combine(e.cocycles, c, e.presentation.syzygy.module, e.target)));
    return false;
  });
  return out;
}

inline bool is_projective(const Representation& m) {
  if (m.is_zero()) return true;
  return projective_cover(m).projective.module.total_dim() == m.total_dim();
}

inline bool is_injective(const Representation& m) { return is_projective(dual(m)); }

}  // namespace stratify

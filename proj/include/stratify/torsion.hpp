#pragma once

/// Trace and reject, Fac / Sub membership, the torsion pair (Fac M, M^perp)
/// of a tau-rigid module, perpendicular and Jasso subcategories, and the
/// smallest torsion class generated by a family.

#include <vector>

#include "stratify/errors.hpp"
#include "stratify/homology.hpp"
#include "stratify/module_cat.hpp"
#include "stratify/universe.hpp"

namespace stratify {

/// Tr_X(M): the sum of the images of all morphisms X -> M.
inline Submodule trace(const Representation& x, const Representation& m) {
  require_same_algebra(x, m);
  const auto basis = hom_basis(x, m);
  std::vector<std::vector<Matrix>> parts;
  for (const auto& f : basis) parts.push_back(f.maps());
  if (parts.empty()) return zero_submodule(m);
  return submodule_from_bases(m, sum_of_bases(m, parts));
}

/// Rej_X(M): the intersection of the kernels of all morphisms M -> X.
inline Submodule reject(const Representation& x, const Representation& m) {
  require_same_algebra(x, m);
  const auto basis = hom_basis(m, x);
  std::vector<Matrix> bases;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix stacked(0, m.dim(v), m.characteristic());
    for (const auto& f : basis) stacked = vstack(stacked, f.map(v));
    bases.push_back(kernel_matrix(stacked));
  }
  return submodule_from_bases(m, std::move(bases));
}

/// X in Fac(M): some M^n maps onto X.
inline bool in_fac(const Representation& m, const Representation& x) {
  return trace(m, x).module.total_dim() == x.total_dim();
}

/// X in Sub(M): X embeds in some M^n.
inline bool in_sub(const Representation& m, const Representation& x) { return reject(m, x).module.is_zero(); }

enum class Side { fac, sub };

inline bool fac_sub_membership(const Representation& m, const Representation& x, Side side) {
  return side == Side::fac ? in_fac(m, x) : in_sub(m, x);
}

inline bool is_tau_rigid(const Representation& m) { return m.is_zero() || hom_dim(m, tau(m)) == 0; }

/// X in M^perp: Hom(M, X) = 0.
inline bool in_right_perp(const Representation& m, const Representation& x) { return hom_dim(m, x) == 0; }

/// 0 -> t(X) -> X -> f(X) -> 0 for the torsion pair (Fac M, M^perp).
struct CanonicalSES {
  Submodule torsion;
  Quotient torsion_free;
};

/// The torsion pair (Fac G, G^perp) of a tau-rigid generator G.
class TorsionPair {
 public:
  explicit TorsionPair(Representation generator) : generator_(std::move(generator)) {
    if (!is_tau_rigid(generator_)) throw ValidationError("torsion pair generator is not tau-rigid");
  }

  const Representation& generator() const { return generator_; }

  CanonicalSES canonical_ses(const Representation& x) const {
    Submodule t = trace(generator_, x);
    Quotient f = quotient(x, t.inclusion);
    if (hom_dim(generator_, f.module) != 0) throw InvariantViolation("torsion-free quotient receives maps from the generator");
    return {std::move(t), std::move(f)};
  }

  Representation torsion_part(const Representation& x) const { return trace(generator_, x).module; }
  Representation torsion_free_part(const Representation& x) const { return canonical_ses(x).torsion_free.module; }
  bool in_torsion_class(const Representation& x) const { return in_fac(generator_, x); }
  bool in_torsion_free_class(const Representation& x) const { return in_right_perp(generator_, x); }

 private:
  Representation generator_;
};

inline CanonicalSES canonical_ses(const TorsionPair& pair, const Representation& x) { return pair.canonical_ses(x); }

/// X in J(M) = M^perp and ^perp(tau M), for tau-rigid M.
inline bool jasso_membership(const Representation& m, const Representation& x) {
  if (!is_tau_rigid(m)) throw ValidationError("Jasso subcategory of a module that is not tau-rigid");
  return hom_dim(m, x) == 0 && hom_dim(x, tau(m)) == 0;
}

/// Membership of Y in the smallest torsion class T(C) containing C: Y lies in
/// T(C) exactly when peeling off Tr_C repeatedly reaches zero.
inline bool in_smallest_torsion_class(const Representation& c, const Representation& y) {
  Representation cur = y;
  while (!cur.is_zero()) {
    const Submodule t = trace(c, cur);
    if (t.module.is_zero()) return false;
    cur = quotient(cur, t.inclusion).module;
  }
  return true;
}

/// Universe members (sorted indices) lying in the smallest torsion class
/// containing the seeds.
inline std::vector<std::size_t> smallest_torsion_class(const std::vector<Representation>& seeds, const Universe& u) {
  u.require_complete("smallest torsion class");
  const Representation c = direct_sum(u.algebra(), seeds);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (in_smallest_torsion_class(c, u.module(i))) out.push_back(i);
  return out;
}

/// Universe members in Fac(M).
inline std::vector<std::size_t> fac_in_universe(const Representation& m, const Universe& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (in_fac(m, u.module(i))) out.push_back(i);
  return out;
}

}  // namespace stratify

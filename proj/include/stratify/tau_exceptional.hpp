#pragma once

/// Objects M + P[1] of the category C(A), signed tau-rigidity, Jasso
/// subcategories of signed objects, and construction / verification of
/// signed tau-exceptional sequences.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/strat_systems.hpp"
#include "stratify/tau_tilting.hpp"
#include "stratify/torsion.hpp"
#include "stratify/universe.hpp"

namespace stratify {

/// M + P[1]: a module part and a projective part placed in degree one.
struct SignedObject {
  Representation module_part;
  Representation shifted_part;

  bool is_zero() const { return module_part.is_zero() && shifted_part.is_zero(); }
  bool has_shift() const { return !shifted_part.is_zero(); }
};

inline SignedObject unshifted(Representation m) {
  Representation zero = Representation::zero(m.algebra());
  return {std::move(m), std::move(zero)};
}

inline SignedObject shifted(const Algebra& a, Representation p) { return {Representation::zero(a), std::move(p)}; }

using SignedSequence = std::vector<SignedObject>;

struct SignedRigidity {
  bool tau_rigid = false;
  bool support_tau_tilting = false;
  std::string reason;
};

/// Number of pairwise non-isomorphic indecomposable summands.
inline std::size_t basic_rank(const Representation& m) { return m.is_zero() ? 0 : decompose(m).summands.size(); }

/// The vertices v with P(v) a summand of the projective p, with multiplicity.
inline std::vector<int> projective_vertices(const Representation& p) {
  std::vector<int> out;
  const auto t = top_dims(p);
  for (int v = 0; v < p.vertex_count(); ++v)
    for (std::size_t k = 0; k < t[static_cast<std::size_t>(v)]; ++k) out.push_back(v);
  return out;
}

inline SignedRigidity is_signed_tau_rigid(const SignedObject& obj) {
  require_same_algebra(obj.module_part, obj.shifted_part);
  SignedRigidity r;
  if (!obj.shifted_part.is_zero() && !is_projective(obj.shifted_part)) {
    r.reason = "shifted part is not projective";
    return r;
  }
  if (!is_tau_rigid(obj.module_part)) {
    r.reason = "module part is not tau-rigid";
    return r;
  }
  if (hom_dim(obj.shifted_part, obj.module_part) != 0) {
    r.reason = "Hom(P, M) is nonzero";
    return r;
  }
  r.tau_rigid = true;
  const std::size_t n = static_cast<std::size_t>(obj.module_part.vertex_count());
  r.support_tau_tilting = basic_rank(obj.module_part) + basic_rank(obj.shifted_part) == n;
  return r;
}

/// X in J(M + P[1]) = J(M) and P^perp.
inline bool signed_jasso_membership(const SignedObject& obj, const Representation& x) {
  const auto r = is_signed_tau_rigid(obj);
  if (!r.tau_rigid) throw ValidationError("Jasso subcategory of an object that is not tau-rigid: " + r.reason);
  if (x.is_zero()) return true;
  if (!obj.module_part.is_zero() && !jasso_membership(obj.module_part, x)) return false;
  return hom_dim(obj.shifted_part, x) == 0;
}

/// f(X) for the torsion pair (Fac T, T^perp) of a tau-rigid tail T.
inline Representation relative_torsion_free(const Representation& tail, const Representation& x) {
  require_same_algebra(tail, x);
  if (tail.is_zero()) return x;
  return TorsionPair(tail).torsion_free_part(x);
}

/// The unshifted signed sequence (Delta(1) + 0, ..., Delta(t) + 0) of a TF-admissible order.
inline SignedSequence delta_sequence(const Universe& u, const Order& order) {
  const auto s = build_delta(u, order);
  SignedSequence out;
  for (const auto& d : s.theta) out.push_back(unshifted(d));
  return out;
}

/// A universe subset M' witnessing that N is tau-rigid in J(M + P[1]):
/// (M + M', P) is a tau-rigid pair and f_M(M') is isomorphic to N.
inline std::optional<IndexSet> relative_tau_rigid_certificate(const Universe& u, const Representation& n,
                                                              const IndexSet& ambient,
                                                              const std::vector<int>& vertices = {}) {
  u.require_complete("relative tau-rigidity certificate");
  if (!is_tau_rigid(u, ambient)) throw ValidationError("ambient module is not tau-rigid");
  for (int v : vertices)
    for (auto i : ambient)
      if (u.module(i).dim(v) != 0) throw ValidationError("ambient pair is not tau-rigid");
  const Representation m = u.sum(ambient);
  if (n.is_zero()) return IndexSet{};
  if (!jasso_membership(m, n)) throw ValidationError("module is not in the Jasso subcategory of the ambient module");
  for (int v : vertices)
    if (n.dim(v) != 0) throw ValidationError("module is not in the Jasso subcategory of the ambient module");
  const auto target = u.express(n);
  const std::size_t n_vertices = static_cast<std::size_t>(u.algebra().vertex_count());
  const std::size_t room = n_vertices - std::min(n_vertices, ambient.size() + vertices.size());

  std::vector<std::size_t> candidates;
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (std::find(ambient.begin(), ambient.end(), x) != ambient.end()) continue;
    bool ok = u.hom_to_tau(x, x) == 0;
    for (auto i : ambient) ok = ok && u.hom_to_tau(x, i) == 0 && u.hom_to_tau(i, x) == 0;
    for (int v : vertices) ok = ok && u.module(x).dim(v) == 0;
    if (ok) candidates.push_back(x);
  }

  std::optional<IndexSet> found;
  std::vector<IndexSet> level{{}};
  for (std::size_t size = 1; size <= room && !found; ++size) {
    std::vector<IndexSet> next;
    for (const auto& s : level) {
      const std::size_t start = s.empty() ? 0 : static_cast<std::size_t>(
                                                    std::find(candidates.begin(), candidates.end(), s.back()) -
                                                    candidates.begin()) + 1;
      for (std::size_t k = start; k < candidates.size(); ++k) {
        IndexSet t = s;
        t.push_back(candidates[k]);
        if (!is_tau_rigid(u, t)) continue;
        next.push_back(t);
        if (!found && u.express(relative_torsion_free(m, u.sum(t))) == target) found = t;
      }
    }
    level = std::move(next);
  }
  return found;
}

struct SequenceReport {
  bool passed = true;
  /// certificates[k]: the ambient preimage M' of the entry at recursion depth k (top entry first).
  std::vector<IndexSet> certificates;
  std::vector<std::string> failures;
};

namespace detail {

inline std::string entry_label(std::size_t i) { return "entry " + std::to_string(i + 1); }

inline bool in_ambient_jasso(const Universe& u, const IndexSet& modules, const std::vector<int>& vertices,
                             const Representation& x) {
  if (x.is_zero()) return true;
  for (int v : vertices)
    if (x.dim(v) != 0) return false;
  if (modules.empty()) return true;
  return jasso_membership(u.sum(modules), x);
}

}  // namespace detail

/// Checks the recursive definition: the last entry is tau-rigid in C(A) and
/// the earlier entries form a signed tau-exceptional sequence in its Jasso
/// subcategory. Each level is evaluated ambiently: the reduced category at
/// depth d is J(M + P[1]) for the accumulated ambient pair, and an entry is
/// tau-rigid there when a universe certificate M' exists.
inline SequenceReport verify_signed_sequence(const SignedSequence& seq, const Universe& u) {
  u.require_complete("signed sequence verification");
  SequenceReport r;
  auto fail = [&](std::string msg) {
    r.passed = false;
    r.failures.push_back(std::move(msg));
  };
  if (seq.empty()) return r;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    require_same_algebra(seq[i].module_part, u.module(0));
    require_same_algebra(seq[i].shifted_part, u.module(0));
    const bool single = seq[i].module_part.is_zero() ? is_indecomposable(seq[i].shifted_part)
                                                      : seq[i].shifted_part.is_zero() && is_indecomposable(seq[i].module_part);
    if (!single) {
      fail(detail::entry_label(i) + " is not indecomposable");
      return r;
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i].has_shift()) throw ValidationError("unsupported: shifted entry below top level");

  const std::size_t t = seq.size();
  const SignedObject& top_entry = seq[t - 1];
  const auto rigid = is_signed_tau_rigid(top_entry);
  if (!rigid.tau_rigid) {
    fail(detail::entry_label(t - 1) + " is not tau-rigid: " + rigid.reason);
    return r;
  }
  IndexSet ambient = top_entry.module_part.is_zero() ? IndexSet{} : u.express(top_entry.module_part);
  std::vector<int> vertices = top_entry.shifted_part.is_zero() ? std::vector<int>{}
                                                                : projective_vertices(top_entry.shifted_part);
  r.certificates.push_back(ambient);

  for (std::size_t level = t - 1; level-- > 0;) {
    for (std::size_t i = 0; i <= level; ++i) {
      if (!detail::in_ambient_jasso(u, ambient, vertices, seq[i].module_part)) {
        fail(detail::entry_label(i) + " is not in the Jasso subcategory of entries " + std::to_string(level + 2) +
             ".." + std::to_string(t));
        return r;
      }
    }
    const auto cert = relative_tau_rigid_certificate(u, seq[level].module_part, ambient, vertices);
    if (!cert) {
      fail(detail::entry_label(level) + " is not tau-rigid in the Jasso subcategory of entries " +
           std::to_string(level + 2) + ".." + std::to_string(t));
      return r;
    }
    r.certificates.push_back(*cert);
    ambient.insert(ambient.end(), cert->begin(), cert->end());
    std::sort(ambient.begin(), ambient.end());
  }
  return r;
}

/// N_i for an ordered tuple (M_1, ..., M_t): starting from M_i, quotient by
/// the trace of N_t = M_t, then of N_{t-1}, ..., then of N_{i+1}. The result
/// is compared with the single ambient quotient f(M_i) by M_{i+1} + ... + M_t.
inline SignedSequence sequence_from_ordered(const std::vector<Representation>& tuple, const Universe& u) {
  if (tuple.empty()) throw ValidationError("empty tuple");
  const Representation whole = direct_sum(u.algebra(), tuple);
  if (!is_tau_rigid(whole)) throw ValidationError("tuple is not tau-rigid");
  const std::size_t t = tuple.size();
  std::vector<Representation> n(t, Representation::zero(u.algebra()));
  n[t - 1] = tuple[t - 1];
  for (std::size_t i = t - 1; i-- > 0;) {
    Representation x = tuple[i];
    for (std::size_t k = t; k-- > i + 1 && !x.is_zero();) x = quotient(x, trace(n[k], x).inclusion).module;
    if (x.is_zero())
      throw ValidationError("tuple is not TF-admissible: N_" + std::to_string(i + 1) + " is zero");
    std::vector<Representation> tail(tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1, tuple.end());
    const Representation ambient = relative_torsion_free(direct_sum(u.algebra(), tail), tuple[i]);
    if (!is_isomorphic(x, ambient)) throw InvariantViolation("nested and ambient torsion-free parts differ");
    n[i] = std::move(x);
  }
  if (n[t - 1].is_zero()) throw ValidationError("tuple is not TF-admissible: N_" + std::to_string(t) + " is zero");
  SignedSequence out;
  for (auto& x : n) out.push_back(unshifted(std::move(x)));
  return out;
}

}  // namespace stratify

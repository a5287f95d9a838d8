#pragma once

/// Stratifying systems induced by TF-admissible orders of tau-rigid modules,
/// their axioms, Ext-projective / Ext-injective triples, standard modules of
/// the algebra, and per-tau-tilting-module counts.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/filtration.hpp"
#include "stratify/homology.hpp"
#include "stratify/tau_tilting.hpp"
#include "stratify/torsion.hpp"
#include "stratify/universe.hpp"

namespace stratify {

/// Axiom check of an ordered family: indecomposability,
/// Hom(Theta(j), Theta(i)) = 0 for j > i and Ext^1(Theta(j), Theta(i)) = 0 for j >= i.
/// (The Ext condition is the one satisfied by the standard modules of the algebra.)
struct SSReport {
  bool passed = true;
  std::vector<bool> indecomposable;
  std::vector<std::vector<std::size_t>> hom;  // hom[j][i] = dim Hom(Theta(j), Theta(i))
  std::vector<std::vector<std::size_t>> ext;  // ext[j][i] = dim Ext^1(Theta(j), Theta(i))
  std::vector<std::string> failures;
};

inline SSReport verify_ss(const std::vector<Representation>& theta) {
  SSReport r;
  const std::size_t t = theta.size();
  r.hom.assign(t, std::vector<std::size_t>(t, 0));
  r.ext.assign(t, std::vector<std::size_t>(t, 0));
  for (std::size_t i = 0; i < t; ++i) {
    const bool ind = is_indecomposable(theta[i]);
    r.indecomposable.push_back(ind);
    if (!ind) {
      r.passed = false;
      r.failures.push_back("Theta(" + std::to_string(i + 1) + ") is not indecomposable");
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      r.hom[j][i] = hom_dim(theta[j], theta[i]);
      if (j > i && r.hom[j][i] != 0) {
        r.passed = false;
        r.failures.push_back("SS1: dim Hom(Theta(" + std::to_string(j + 1) + "), Theta(" + std::to_string(i + 1) +
                             ")) = " + std::to_string(r.hom[j][i]));
      }
      r.ext[j][i] = ext1_dim(theta[j], theta[i]);
      if (j >= i && r.ext[j][i] != 0) {
        r.passed = false;
        r.failures.push_back("SS2: dim Ext^1(Theta(" + std::to_string(j + 1) + "), Theta(" + std::to_string(i + 1) +
                             ")) = " + std::to_string(r.ext[j][i]));
      }
    }
  }
  return r;
}

/// The family Delta_M(i) = f_{i+1}(M_i) of a TF-admissible order, with the
/// canonical projections beta_i: M_i -> Delta(i) and the traces
/// Tr_{M_{i+1} + ... + M_t}(M_i) as their kernels.
struct StratifyingSystem {
  Order order;
  std::vector<Representation> theta;
  std::vector<std::size_t> theta_index;  // universe positions of the Delta(i)
  std::vector<Quotient> projections;
  std::vector<Submodule> traces;
  SSReport certificate;
};

inline Representation tail_sum(const Universe& u, const Order& order, std::size_t from) {
  return u.sum(IndexSet(order.begin() + static_cast<std::ptrdiff_t>(from), order.end()));
}

/// Torsion part of X for (Fac G, G^perp) computed as the reject of the
/// torsion-free universe members: an independent route to t(X).
inline Submodule torsion_part_by_reject(const Universe& u, const Representation& generator, const Representation& x) {
  std::vector<Representation> free;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (hom_dim(generator, u.module(k)) == 0) free.push_back(u.module(k));
  return reject(direct_sum(u.algebra(), free), x);
}

inline StratifyingSystem build_delta(const Universe& u, const Order& order) {
  FacCache fac(u);
  if (order.empty()) throw ValidationError("empty order");
  sorted_set(order);
  if (!is_tau_rigid(u, IndexSet(order.begin(), order.end()))) throw ValidationError("module is not tau-rigid");
  if (!is_tf_admissible(order, fac)) throw ValidationError("order is not TF-admissible");
  StratifyingSystem s;
  s.order = order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Representation& mi = u.module(order[i]);
    const Representation gen = tail_sum(u, order, i + 1);
    const TorsionPair pair(gen);
    CanonicalSES ses = pair.canonical_ses(mi);
    if (u.complete()) {
      const Submodule alt = torsion_part_by_reject(u, gen, mi);
      const Representation alt_delta = quotient(mi, alt.inclusion).module;
      if (!is_isomorphic(alt_delta, ses.torsion_free.module))
        throw InvariantViolation("torsion-free quotient and trace quotient disagree");
    }
    s.theta.push_back(ses.torsion_free.module);
    s.theta_index.push_back(u.require_locate(ses.torsion_free.module));
    s.projections.push_back(std::move(ses.torsion_free));
    s.traces.push_back(std::move(ses.torsion));
  }
  s.certificate = verify_ss(s.theta);
  if (!s.certificate.passed) throw InvariantViolation("induced family is not a stratifying system: " + s.certificate.failures.front());
  return s;
}

/// M in F(Delta_M), checked summand by summand.
inline bool is_tf_proper(const Universe& u, const Order& order, FiltrationCaps caps = {}) {
  const auto s = build_delta(u, order);
  FiltrationSearch search(s.theta, caps);
  for (auto i : order)
    if (!search.member(u.module(i))) return false;
  return true;
}

/// A triple (Theta, Q, <=) with Q(i) covering Theta(i); the kernels K(i) and
/// their filtrations are recorded when built by psi.
struct ProjectiveTriple {
  std::vector<Representation> theta;
  std::vector<Representation> q;
  std::vector<Submodule> kernels;
  std::vector<FiltrationWitness> kernel_witnesses;
};

/// A triple (Theta, Y, <=) with Theta(i) embedded in Y(i).
struct InjectiveTriple {
  std::vector<Representation> theta;
  std::vector<Representation> y;
};

struct PssReport {
  bool passed = true;
  /// Axiom 3 was checked only against the enumerated universe.
  bool universe_relative = true;
  std::vector<std::string> failures;
};

namespace detail {

inline std::string idx(std::size_t i) { return std::to_string(i + 1); }

inline std::vector<Representation> slice(const std::vector<Representation>& v, std::size_t from, std::size_t to) {
  return std::vector<Representation>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                     v.begin() + static_cast<std::ptrdiff_t>(to));
}

inline void check_hom_vanishing(const std::vector<Representation>& theta, PssReport& r, const char* tag) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i].is_zero()) {
      r.passed = false;
      r.failures.push_back(std::string(tag) + ": Theta(" + idx(i) + ") is zero");
    }
    for (std::size_t j = i + 1; j < theta.size(); ++j) {
      if (hom_dim(theta[j], theta[i]) != 0) {
        r.passed = false;
        r.failures.push_back(std::string(tag) + ": Hom(Theta(" + idx(j) + "), Theta(" + idx(i) + ")) != 0");
      }
    }
  }
}

/// Searches morphisms in `basis` accepted by `shape` whose (co)kernel lies in F(family).
inline bool exists_filtered_map(const std::vector<Morphism>& basis, const Representation& source,
                                const Representation& target, bool epi, const std::vector<Representation>& family,
                                const FiltrationCaps& caps) {
  if (basis.empty()) return false;
  if (projective_point_count(source.characteristic(), basis.size(), caps.hom_elements) > caps.hom_elements)
    throw InconclusiveError("morphism scan exceeds cap " + std::to_string(caps.hom_elements));
  FiltrationSearch search(family, caps);
  std::vector<Representation> tried;
  bool found = false;
  for_each_projective_point(basis, source, target, [&](const Morphism& f) {
    if (epi ? !f.is_surjective() : !f.is_injective()) return false;
    const Representation rest = epi ? kernel(f).module : cokernel(f).module;
    for (const auto& t : tried)
      if (t.dims() == rest.dims() && is_isomorphic(t, rest)) return false;
    tried.push_back(rest);
    found = search.member(rest);
    return found;
  });
  return found;
}

}  // namespace detail

enum class PssFlavor { ext_projective, ext_injective };

/// Ext-projective axioms: Hom vanishing, epimorphisms Q(i) -> Theta(i) with
/// kernel in F(Theta(j): j > i), and Ext^1(Q, X) = 0 over F(Theta) in the universe.
inline PssReport verify_epss(const Universe& u, const std::vector<Representation>& theta,
                             const std::vector<Representation>& q, FiltrationCaps caps = {}) {
  PssReport r;
  if (q.size() != theta.size()) throw ValidationError("triple families have different sizes");
  detail::check_hom_vanishing(theta, r, "EPSS1");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_indecomposable(q[i])) {
      r.passed = false;
      r.failures.push_back("Q(" + detail::idx(i) + ") is not indecomposable");
    }
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const auto family = detail::slice(theta, i + 1, theta.size());
    if (!detail::exists_filtered_map(hom_basis(q[i], theta[i]), q[i], theta[i], true, family, caps)) {
      r.passed = false;
      r.failures.push_back("EPSS2: no epimorphism Q(" + detail::idx(i) + ") -> Theta(" + detail::idx(i) +
                           ") with kernel in F(Theta(j): j > " + detail::idx(i) + ")");
    }
  }
  FiltrationSearch search(theta, caps);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!search.member(u.module(k))) continue;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (ext1_dim(q[i], u.module(k)) != 0) {
        r.passed = false;
        r.failures.push_back("EPSS3: Ext^1(Q(" + detail::idx(i) + "), " + u.name(k) + ") != 0");
      }
    }
  }
  return r;
}

/// Ext-injective axioms: Hom vanishing, monomorphisms Theta(i) -> Y(i) with
/// cokernel in F(Theta(j): j < i), and Ext^1(X, Y) = 0 over F(Theta) in the universe.
inline PssReport verify_eiss(const Universe& u, const std::vector<Representation>& theta,
                             const std::vector<Representation>& y, FiltrationCaps caps = {}) {
  PssReport r;
  if (y.size() != theta.size()) throw ValidationError("triple families have different sizes");
  detail::check_hom_vanishing(theta, r, "EISS1");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_indecomposable(y[i])) {
      r.passed = false;
      r.failures.push_back("Y(" + detail::idx(i) + ") is not indecomposable");
    }
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const auto family = detail::slice(theta, 0, i);
    if (!detail::exists_filtered_map(hom_basis(theta[i], y[i]), theta[i], y[i], false, family, caps)) {
      r.passed = false;
      r.failures.push_back("EISS2: no monomorphism Theta(" + detail::idx(i) + ") -> Y(" + detail::idx(i) +
                           ") with cokernel in F(Theta(j): j < " + detail::idx(i) + ")");
    }
  }
  FiltrationSearch search(theta, caps);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!search.member(u.module(k))) continue;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (ext1_dim(u.module(k), y[i]) != 0) {
        r.passed = false;
        r.failures.push_back("EISS3: Ext^1(" + u.name(k) + ", Y(" + detail::idx(i) + ")) != 0");
      }
    }
  }
  return r;
}

inline PssReport verify_pss(const Universe& u, const std::vector<Representation>& theta,
                            const std::vector<Representation>& partners, PssFlavor flavor, FiltrationCaps caps = {}) {
  PssReport r = flavor == PssFlavor::ext_projective ? verify_epss(u, theta, partners, caps)
                                                    : verify_eiss(u, theta, partners, caps);
  if (!u.complete() && r.passed) r.failures.push_back("universe incomplete: pass is relative to the enumerated modules");
  return r;
}

/// Psi: a TF-proper order gives the triple (Delta_M, {M_i}, <=) with
/// K(i) = Tr_{M_{i+1} + ... + M_t}(M_i) filtered by Delta(j), j > i.
inline ProjectiveTriple psi(const Universe& u, const Order& order, FiltrationCaps caps = {}) {
  const auto s = build_delta(u, order);
  ProjectiveTriple t;
  t.theta = s.theta;
  for (std::size_t i = 0; i < order.size(); ++i) {
    t.q.push_back(u.module(order[i]));
    t.kernels.push_back(s.traces[i]);
    const auto family = detail::slice(s.theta, i + 1, s.theta.size());
    auto w = filtration_membership(s.traces[i].module, family, caps);
    if (!w) throw ValidationError("order is not TF-proper: K(" + detail::idx(i) + ") has no filtration by later Delta");
    // Relabel against the full family.
    for (auto& l : w->labels) l += i + 1;
    t.kernel_witnesses.push_back(std::move(*w));
  }
  FiltrationSearch search(s.theta, caps);
  for (auto i : order)
    if (!search.member(u.module(i))) throw ValidationError("order is not TF-proper");
  return t;
}

/// Upsilon: the ordered tau-rigid module (Q(1), ..., Q(t)) of a triple whose
/// sum is tau-rigid and whose order is TF-admissible.
inline Order upsilon(const Universe& u, const ProjectiveTriple& t) {
  Order order;
  for (const auto& q : t.q) {
    auto i = u.locate(q);
    if (!i) throw ValidationError("Q(i) is not an enumerated indecomposable");
    order.push_back(*i);
  }
  sorted_set(order);
  if (!is_tau_rigid(u, IndexSet(order.begin(), order.end()))) throw ValidationError("sum of Q(i) is not tau-rigid");
  if (!is_tf_admissible(u, order)) throw ValidationError("Q(i) are not in a TF-admissible order");
  return order;
}

/// Standard modules for a linear order of the vertices (listed from smallest
/// to largest), and whether A is standardly stratified / quasi-hereditary.
struct StratificationProfile {
  std::vector<int> order;
  std::vector<Representation> standard_modules;  // indexed by vertex
  bool standardly_stratified = false;
  bool quasi_hereditary = false;
};

/// Every nonzero endomorphism is invertible (exhaustive over the finite End).
inline bool endomorphisms_form_division_ring(const Representation& m, std::uint64_t cap = std::uint64_t{1} << 20) {
  const auto end = hom_basis(m, m);
  if (bounded_power(m.characteristic(), end.size(), cap) > cap)
    throw InconclusiveError("endomorphism scan exceeds cap " + std::to_string(cap));
  const bool counterexample = detail::for_each_coefficient_vector(m.characteristic(), end.size(), [&](const Vector& c) {
    if (std::all_of(c.begin(), c.end(), [](Scalar x) { return x == 0; })) return false;
    return !combine(end, c, m, m).is_isomorphism();
  });
  return !counterexample;
}

inline StratificationProfile stratification_profile(const Algebra& a, const std::vector<int>& order,
                                                    FiltrationCaps caps = {}) {
  const int n = a.vertex_count();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(order.size()) != n) throw ValidationError("vertex order must list every vertex once");
  for (int v = 0; v < n; ++v)
    if (sorted[static_cast<std::size_t>(v)] != v) throw ValidationError("vertex order must list every vertex once");
  const auto p = projectives(a);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (indecomposables_isomorphic(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))
        throw ValidationError("algebra is not basic");
  StratificationProfile prof;
  prof.order = order;
  prof.standard_modules.resize(static_cast<std::size_t>(n), Representation::zero(a));
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<Representation> later;
    for (std::size_t l = k + 1; l < order.size(); ++l) later.push_back(p[static_cast<std::size_t>(order[l])]);
    const auto& pi = p[static_cast<std::size_t>(order[k])];
    const Submodule tr = trace(direct_sum(a, later), pi);
    prof.standard_modules[static_cast<std::size_t>(order[k])] = quotient(pi, tr.inclusion).module;
  }
  FiltrationSearch search(prof.standard_modules, caps);
  prof.standardly_stratified = std::all_of(p.begin(), p.end(), [&](const Representation& x) { return search.member(x); });
  prof.quasi_hereditary = prof.standardly_stratified &&
                          std::all_of(prof.standard_modules.begin(), prof.standard_modules.end(),
                                      [](const Representation& d) { return endomorphisms_form_division_ring(d); });
  return prof;
}

/// Per tau-tilting module: its TF-admissible orders, induced Delta families
/// and the four counts reported in the table.
struct TableRow {
  IndexSet module;
  std::vector<Order> orders;
  std::vector<Order> deltas;  // universe positions of Delta(1..n) per order
  std::vector<bool> tf_proper;
  std::size_t count_orders = 0;
  std::size_t count_ordered = 0;
  std::size_t count_unordered = 0;
  std::size_t count_tfepss = 0;
};

inline TableRow induced_systems_row(const Universe& u, const IndexSet& module, FacCache& fac, FiltrationCaps caps = {}) {
  TableRow row;
  row.module = module;
  row.orders = tf_admissible_orders(module, fac);
  std::set<Order> ordered, unordered;
  std::set<std::pair<Order, Order>> epss;
  for (const auto& o : row.orders) {
    const auto s = build_delta(u, o);
    row.deltas.push_back(s.theta_index);
    ordered.insert(s.theta_index);
    Order sorted = s.theta_index;
    std::sort(sorted.begin(), sorted.end());
    unordered.insert(sorted);
    FiltrationSearch search(s.theta, caps);
    bool proper = true;
    for (auto i : o) proper = proper && search.member(u.module(i));
    row.tf_proper.push_back(proper);
    if (proper) epss.insert({s.theta_index, o});
  }
  row.count_orders = row.orders.size();
  row.count_ordered = ordered.size();
  row.count_unordered = unordered.size();
  row.count_tfepss = epss.size();
  return row;
}

inline std::vector<TableRow> count_induced_systems(const Universe& u, FiltrationCaps caps = {}) {
  u.require_complete("counting induced stratifying systems");
  FacCache fac(u);
  std::vector<TableRow> rows;
  for (const auto& m : enumerate_tau_tilting(u)) rows.push_back(induced_systems_row(u, m, fac, caps));
  return rows;
}

}  // namespace stratify

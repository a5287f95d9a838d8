#pragma once

/// Membership in the filtration category F(Theta): a chain of submodules
/// whose successive quotients are isomorphic to members of Theta.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/module_cat.hpp"

namespace stratify {

struct FiltrationCaps {
  /// Largest Hom space (in elements) scanned for epimorphisms onto a member.
  std::uint64_t hom_elements = 4096;
};

/// 0 = X_0 c X_1 c ... c X_s = X with X_k / X_{k-1} isomorphic to theta[labels[k-1]].
struct FiltrationWitness {
  std::vector<Submodule> chain;  // X_1, ..., X_s as submodules of X
  std::vector<std::size_t> labels;
  std::size_t length() const { return labels.size(); }
};

/// Nonzero morphisms of the span of `basis`, one per line (first nonzero coefficient 1).
inline void for_each_projective_point(const std::vector<Morphism>& basis, const Representation& source,
                                      const Representation& target, const std::function<bool(const Morphism&)>& visit) {
  const std::size_t d = basis.size();
  const Scalar p = source.characteristic();
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t rest = d - lead - 1;
    const bool stop = detail::for_each_coefficient_vector(p, rest, [&](const Vector& tail) {
      Vector c(d, 0);
      c[lead] = 1;
      for (std::size_t k = 0; k < rest; ++k) c[lead + 1 + k] = tail[k];
      return visit(combine(basis, c, source, target));
    });
    if (stop) return;
  }
}

inline std::uint64_t projective_point_count(Scalar p, std::size_t d, std::uint64_t limit) {
  // (p^d - 1) / (p - 1) <= p^d
  return bounded_power(p, d, limit);
}

/// Searches filtrations by peeling epimorphisms X -> theta[j] off the top
/// and recursing on kernels. Kernels without a filtration are remembered up
/// to isomorphism. Absence is exact unless a Hom space exceeds the cap, in
/// which case an InconclusiveError is raised.
class FiltrationSearch {
 public:
  FiltrationSearch(std::vector<Representation> theta, FiltrationCaps caps = {})
      : theta_(std::move(theta)), caps_(caps) {}

  const std::vector<Representation>& theta() const { return theta_; }

  std::optional<FiltrationWitness> find(const Representation& x) {
    bool capped = false;
    auto r = search(x, capped);
    if (!r && capped)
      throw InconclusiveError("filtration search exceeds cap " + std::to_string(caps_.hom_elements));
    return r;
  }

  bool member(const Representation& x) { return find(x).has_value(); }

 private:
  bool dims_reachable(const std::vector<std::size_t>& dims) {
    if (std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) return true;
    if (reachable_.count(dims)) return true;
    if (unreachable_.count(dims)) return false;
    for (const auto& t : theta_) {
      if (t.is_zero()) continue;
      bool fits = true;
      std::vector<std::size_t> rest = dims;
      for (std::size_t v = 0; v < dims.size(); ++v) {
        if (t.dims()[v] > dims[v]) {
          fits = false;
          break;
        }
        rest[v] -= t.dims()[v];
      }
      if (fits && dims_reachable(rest)) {
        reachable_.insert(dims);
        return true;
      }
    }
    unreachable_.insert(dims);
    return false;
  }

  bool known_failure(const Representation& x) {
    for (const auto& f : failures_)
      if (f.dims() == x.dims() && is_isomorphic(f, x)) return true;
    return false;
  }

  std::optional<FiltrationWitness> search(const Representation& x, bool& capped) {
    if (x.is_zero()) return FiltrationWitness{};
    if (!dims_reachable(x.dims())) return std::nullopt;
    if (known_failure(x)) return std::nullopt;
    bool local_cap = false;
    for (std::size_t j = 0; j < theta_.size(); ++j) {
      const auto& t = theta_[j];
      if (t.is_zero()) continue;
      bool fits = true;
      for (int v = 0; v < x.vertex_count(); ++v) fits = fits && t.dim(v) <= x.dim(v);
      if (!fits) continue;
      const auto basis = hom_basis(x, t);
      if (basis.empty()) continue;
      if (projective_point_count(x.characteristic(), basis.size(), caps_.hom_elements) > caps_.hom_elements) {
        local_cap = true;
        continue;
      }
      std::vector<Representation> tried;
      std::optional<FiltrationWitness> result;
      for_each_projective_point(basis, x, t, [&](const Morphism& f) {
        if (!f.is_surjective()) return false;
        Submodule k = kernel(f);
        for (const auto& seen : tried)
          if (seen.dims() == k.module.dims() && is_isomorphic(seen, k.module)) return false;
        tried.push_back(k.module);
        bool sub_cap = false;
        auto inner = search(k.module, sub_cap);
        local_cap = local_cap || sub_cap;
        if (!inner) return false;
        FiltrationWitness w;
        for (const auto& s : inner->chain) w.chain.push_back({s.module, s.inclusion.then(k.inclusion)});
        w.labels = inner->labels;
        w.chain.push_back(whole_submodule(x));
        w.labels.push_back(j);
        result = std::move(w);
        return true;
      });
      if (result) return result;
    }
    if (local_cap) {
      capped = true;
    } else {
      failures_.push_back(x);
    }
    return std::nullopt;
  }

  std::vector<Representation> theta_;
  FiltrationCaps caps_;
  std::vector<Representation> failures_;
  std::set<std::vector<std::size_t>> reachable_, unreachable_;
};

inline std::optional<FiltrationWitness> filtration_membership(const Representation& x,
                                                              const std::vector<Representation>& theta,
                                                              FiltrationCaps caps = {}) {
  FiltrationSearch search(theta, caps);
  return search.find(x);
}

/// Checks that a witness is a chain of submodules with the labelled quotients.
inline bool check_filtration_witness(const Representation& x, const std::vector<Representation>& theta,
                                     const FiltrationWitness& w) {
  if (w.chain.size() != w.labels.size()) return false;
  if (w.chain.empty()) return x.is_zero();
  if (w.chain.back().module.total_dim() != x.total_dim()) return false;
  std::vector<Matrix> prev;
  for (int v = 0; v < x.vertex_count(); ++v) prev.emplace_back(x.dim(v), 0, x.characteristic());
  for (std::size_t k = 0; k < w.chain.size(); ++k) {
    const auto& inc = w.chain[k].inclusion;
    if (!inc.is_injective()) return false;
    for (int v = 0; v < x.vertex_count(); ++v) {
      const auto& pv = prev[static_cast<std::size_t>(v)];
      if (rank(hstack(inc.map(v), pv)) != inc.map(v).cols()) return false;  // previous step contained
    }
    // Quotient X_k / X_{k-1}: express X_{k-1} in the coordinates of X_k.
    std::vector<Matrix> inner;
    for (int v = 0; v < x.vertex_count(); ++v) {
      auto c = solve(inc.map(v), prev[static_cast<std::size_t>(v)]);
      if (!c) return false;
      inner.push_back(std::move(*c));
    }
    const Representation q = quotient_by_bases(w.chain[k].module, inner).module;
    if (w.labels[k] >= theta.size() || !is_isomorphic(q, theta[w.labels[k]])) return false;
    prev.clear();
    for (int v = 0; v < x.vertex_count(); ++v) prev.push_back(inc.map(v));
  }
  return true;
}

}  // namespace stratify

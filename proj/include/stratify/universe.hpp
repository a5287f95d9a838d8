#pragma once

/// Enumeration of indecomposable modules by closure, canonical naming, and
/// the precomputed Hom / tau tables that the tau-tilting layer reads.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/homology.hpp"
#include "stratify/module_cat.hpp"

namespace stratify {

struct EnumerationCaps {
  std::size_t dim_bound = 24;
  std::size_t iteration_bound = 16;
};

/// Layers of the radical series, top first; each layer lists its vertices
/// (0-based) with multiplicity.
inline std::vector<std::vector<int>> loewy_layers(const Representation& m) {
  std::vector<std::vector<int>> layers;
  Representation cur = m;
  while (!cur.is_zero()) {
    const Submodule rad = radical(cur);
    const Representation t = quotient(cur, rad.inclusion).module;
    std::vector<int> layer;
    for (int v = 0; v < t.vertex_count(); ++v)
      for (std::size_t k = 0; k < t.dim(v); ++k) layer.push_back(v);
    layers.push_back(std::move(layer));
    if (rad.module.total_dim() == cur.total_dim()) throw InvariantViolation("radical series does not terminate");
    cur = rad.module;
  }
  return layers;
}

inline std::string serialize_matrices(const Representation& m) {
  std::ostringstream os;
  for (const auto& a : m.maps()) {
    os << a.rows() << 'x' << a.cols() << ':';
    for (auto x : a.data()) os << x << ',';
    os << ';';
  }
  return os.str();
}

/// The enumerated indecomposables with canonical names and cached tables.
class Universe {
 public:
  Universe(Algebra algebra, std::vector<Representation> modules, bool complete)
      : algebra_(std::move(algebra)), modules_(std::move(modules)), complete_(complete) {
    sort_and_name();
    build_tables();
  }

  const Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return modules_.size(); }
  bool complete() const { return complete_; }
  const Representation& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<Representation>& modules() const { return modules_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const Representation& tau_of(std::size_t i) const { return tau_.at(i); }
  bool is_projective(std::size_t i) const { return projective_.at(i); }
  /// dim Hom(X_i, X_j).
  std::size_t hom(std::size_t i, std::size_t j) const { return hom_.at(i).at(j); }
  /// dim Hom(X_i, tau X_j).
  std::size_t hom_to_tau(std::size_t i, std::size_t j) const { return hom_tau_.at(i).at(j); }
  std::size_t ext(std::size_t i, std::size_t j) const { return ext_.at(i).at(j); }

  void require_complete(const char* what) const {
    if (!complete_) throw InconclusiveError(std::string(what) + " needs a complete universe of indecomposables");
  }

  std::optional<std::size_t> find_name(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  /// Universe index of an indecomposable module, if it is listed.
  std::optional<std::size_t> locate(const Representation& x) const {
    for (std::size_t i = 0; i < modules_.size(); ++i)
      if (modules_[i].dims() == x.dims() && indecomposables_isomorphic(modules_[i], x)) return i;
    return std::nullopt;
  }

  std::size_t require_locate(const Representation& x) const {
    auto i = locate(x);
    if (!i) {
      if (!complete_) throw InconclusiveError("module not found in an incomplete universe");
      throw InvariantViolation("indecomposable module missing from a complete universe");
    }
    return *i;
  }

  /// Universe indices of the indecomposable summands of x, with repetition, sorted.
  std::vector<std::size_t> express(const Representation& x) const {
    std::vector<std::size_t> out;
    for (const auto& s : indecomposable_summands(x)) out.push_back(require_locate(s));
    std::sort(out.begin(), out.end());
    return out;
  }

  Representation sum(const std::vector<std::size_t>& idx) const {
    std::vector<Representation> parts;
    for (auto i : idx) parts.push_back(modules_.at(i));
    return direct_sum(algebra_, parts);
  }

  std::string sum_name(const std::vector<std::size_t>& idx) const {
    if (idx.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) s += '+';
      s += names_.at(idx[k]);
    }
    return s;
  }

  /// A basic or non-basic module as a sum of names, larger summands first
  /// (e.g. P1+M12+S1).
  std::string module_label(const std::vector<std::size_t>& idx) const { return sum_name(display_order(idx)); }

  std::vector<std::size_t> display_order(std::vector<std::size_t> idx) const {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto da = modules_.at(a).total_dim(), db = modules_.at(b).total_dim();
      return da != db ? da > db : a < b;
    });
    return idx;
  }

  /// Universe index of the projective P(v).
  std::size_t projective_index(int v) const { return projective_index_.at(static_cast<std::size_t>(v)); }

 private:
  void sort_and_name() {
    struct Keyed {
      std::size_t total;
      std::vector<std::vector<int>> loewy;
      std::vector<std::size_t> dims;
      std::string serial;
      Representation module;
    };
    std::vector<Keyed> keyed;
    for (auto& m : modules_) keyed.push_back({m.total_dim(), loewy_layers(m), m.dims(), serialize_matrices(m), m});
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
      return std::tie(a.total, a.loewy, a.dims, a.serial) < std::tie(b.total, b.loewy, b.dims, b.serial);
    });
    modules_.clear();
    for (auto& k : keyed) modules_.push_back(k.module);

    const auto simples_ = simples(algebra_);
    const auto projectives_ = projectives(algebra_);
    const auto injectives_ = injectives(algebra_);
    const bool wide = algebra_.vertex_count() > 9;
    std::map<std::string, int> used;
    for (std::size_t i = 0; i < modules_.size(); ++i) {
      const auto& m = modules_[i];
      std::string n;
      for (int v = 0; v < algebra_.vertex_count() && n.empty(); ++v)
        if (indecomposables_isomorphic(m, simples_[static_cast<std::size_t>(v)])) n = "S" + std::to_string(v + 1);
      for (int v = 0; v < algebra_.vertex_count() && n.empty(); ++v)
        if (indecomposables_isomorphic(m, projectives_[static_cast<std::size_t>(v)])) n = "P" + std::to_string(v + 1);
      for (int v = 0; v < algebra_.vertex_count() && n.empty(); ++v)
        if (indecomposables_isomorphic(m, injectives_[static_cast<std::size_t>(v)])) n = "I" + std::to_string(v + 1);
      if (n.empty()) {
        n = "M";
        bool first = true;
        for (const auto& layer : keyed[i].loewy) {
          for (int v : layer) {
            if (wide && !first) n += '.';
            n += std::to_string(v + 1);
            first = false;
          }
        }
      }
      const int count = ++used[n];
      if (count > 1) n += "_" + std::to_string(count);
      names_.push_back(n);
    }
  }

  void build_tables() {
    const std::size_t k = modules_.size();
    for (const auto& m : modules_) {
      tau_.push_back(tau(m));
      projective_.push_back(stratify::is_projective(m));
    }
    hom_.assign(k, std::vector<std::size_t>(k, 0));
    hom_tau_.assign(k, std::vector<std::size_t>(k, 0));
    ext_.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        hom_[i][j] = hom_dim(modules_[i], modules_[j]);
        hom_tau_[i][j] = hom_dim(modules_[i], tau_[j]);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) ext_[i][j] = ext1_dim(modules_[i], modules_[j]);
    }
    const auto projectives_ = projectives(algebra_);
    for (const auto& p : projectives_) {
      auto idx = locate(p);
      projective_index_.push_back(idx ? *idx : static_cast<std::size_t>(-1));
    }
  }

  Algebra algebra_;
  std::vector<Representation> modules_;
  bool complete_;
  std::vector<std::string> names_;
  std::vector<Representation> tau_;
  std::vector<bool> projective_;
  std::vector<std::vector<std::size_t>> hom_, hom_tau_, ext_;
  std::vector<std::size_t> projective_index_;
};

/// Closure from simples, projectives and injectives under radicals, tops,
/// socle quotients, syzygies, cosyzygies, tau, tau^- and middle terms of
/// extensions Ext^1(X, tau X). Completeness is claimed only at a fixed point.
inline Universe enumerate_indecomposables(const Algebra& algebra, const EnumerationCaps& caps = {}) {
  if (caps.dim_bound == 0 || caps.iteration_bound == 0) throw ValidationError("enumeration caps must be positive");
  std::vector<Representation> found;
  bool truncated = false;
  auto add = [&](const Representation& x, std::vector<Representation>& fresh) {
    if (x.is_zero()) return;
    if (x.total_dim() > caps.dim_bound) {
      truncated = true;
      return;
    }
    for (const auto& s : indecomposable_summands(x)) {
      bool known = false;
      for (const auto& y : found)
        if (y.dims() == s.dims() && indecomposables_isomorphic(y, s)) {
          known = true;
          break;
        }
      if (!known) {
        found.push_back(s);
        fresh.push_back(s);
      }
    }
  };
  std::vector<Representation> frontier;
  for (const auto& x : simples(algebra)) add(x, frontier);
  for (const auto& x : projectives(algebra)) add(x, frontier);
  for (const auto& x : injectives(algebra)) add(x, frontier);
  for (std::size_t it = 0; it < caps.iteration_bound && !frontier.empty(); ++it) {
    std::vector<Representation> fresh;
    for (const auto& x : frontier) {
      add(radical(x).module, fresh);
      add(top(x).module, fresh);
      add(quotient(x, socle(x).inclusion).module, fresh);
      add(syzygy(x), fresh);
      add(cosyzygy(x), fresh);
      const Representation tx = tau(x);
      add(tx, fresh);
      add(tau_inverse(x), fresh);
      if (!tx.is_zero()) {
        if (x.total_dim() + tx.total_dim() > caps.dim_bound) {
          truncated = true;
        } else if (auto w = ext1_witness(x, tx)) {
          add(*w, fresh);
        }
      }
    }
    frontier = std::move(fresh);
  }
  return Universe(algebra, std::move(found), frontier.empty() && !truncated);
}

}  // namespace stratify

#pragma once

/// Finite-dimensional representations of a bound quiver and their morphisms.

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "stratify/algebra.hpp"
#include "stratify/errors.hpp"
#include "stratify/linalg.hpp"

namespace stratify {

/// A left A-module as a vector space per vertex and a matrix per arrow
/// (target dimension x source dimension). Cheap to copy.
class Representation {
 public:
  Representation(Algebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
      : algebra_(std::move(algebra)), data_(std::make_shared<Data>(Data{std::move(dims), std::move(maps)})) {
    validate();
  }

  static Representation zero(const Algebra& algebra) {
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < algebra.arrow_count(); ++k) maps.emplace_back(0, 0, algebra.characteristic());
    return Representation(algebra, std::vector<std::size_t>(static_cast<std::size_t>(algebra.vertex_count()), 0),
                          std::move(maps));
  }

  const Algebra& algebra() const { return algebra_; }
  Scalar characteristic() const { return algebra_.characteristic(); }
  int vertex_count() const { return algebra_.vertex_count(); }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t dim(int vertex) const { return data_->dims.at(static_cast<std::size_t>(vertex)); }
  std::size_t total_dim() const { return std::accumulate(data_->dims.begin(), data_->dims.end(), std::size_t{0}); }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(std::size_t arrow) const { return data_->maps.at(arrow); }
  const std::vector<Matrix>& maps() const { return data_->maps; }

  /// Matrix of a path: the product of its arrow matrices, first arrow rightmost.
  Matrix path_matrix(const Path& q) const {
    Matrix m = Matrix::identity(dim(q.source), characteristic());
    for (int k : q.arrows) m = map(static_cast<std::size_t>(k)) * m;
    return m;
  }

  /// Same vertex dimensions and identical matrices (not isomorphism).
  bool identical(const Representation& o) const {
    return algebra_ == o.algebra_ && dims() == o.dims() && maps() == o.maps();
  }

 private:
  struct Data {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
  };

  void validate() const {
    const auto n = static_cast<std::size_t>(algebra_.vertex_count());
    if (data_->dims.size() != n) throw ValidationError("dimension vector has wrong length");
    if (data_->maps.size() != algebra_.arrow_count()) throw ValidationError("wrong number of arrow matrices");
    for (std::size_t k = 0; k < data_->maps.size(); ++k) {
      const Arrow a = algebra_.arrow(k);
      const auto& m = data_->maps[k];
      if (m.characteristic() != characteristic()) throw ValidationError("arrow matrix over the wrong field");
      if (m.rows() != dim(a.target) || m.cols() != dim(a.source)) {
        throw ValidationError("matrix of arrow " + a.name + " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(dim(a.target)) + "x" +
                              std::to_string(dim(a.source)));
      }
    }
    const Scalar p = characteristic();
    for (const auto& rel : algebra_.validation_relations()) {
      if (dim(rel.source) == 0 || dim(rel.target) == 0) continue;
      Matrix sum(dim(rel.target), dim(rel.source), p);
      for (const auto& t : rel.terms) {
        sum = sum + path_matrix(Path{rel.source, rel.target, t.arrows}).scaled(t.coefficient);
      }
      if (!sum.is_zero()) {
        std::string name;
        for (const auto& t : rel.terms) {
          if (!name.empty()) name += " + ";
          name += algebra_.path_name(Path{rel.source, rel.target, t.arrows});
        }
        throw ValidationError("representation violates relation " + name);
      }
    }
  }

  Algebra algebra_;
  std::shared_ptr<const Data> data_;
};

/// A morphism of representations: one matrix per vertex, commuting with arrows.
class Morphism {
 public:
  Morphism(Representation source, Representation target, std::vector<Matrix> maps)
      : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    validate();
  }

  static Morphism zero(const Representation& source, const Representation& target) {
    std::vector<Matrix> maps;
    for (int v = 0; v < source.vertex_count(); ++v)
      maps.emplace_back(target.dim(v), source.dim(v), source.characteristic());
    return Morphism(source, target, std::move(maps));
  }

  static Morphism identity(const Representation& m) {
    std::vector<Matrix> maps;
    for (int v = 0; v < m.vertex_count(); ++v) maps.push_back(Matrix::identity(m.dim(v), m.characteristic()));
    return Morphism(m, m, std::move(maps));
  }

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& map(int vertex) const { return maps_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<Matrix>& maps() const { return maps_; }

  bool is_zero() const {
    return std::all_of(maps_.begin(), maps_.end(), [](const Matrix& m) { return m.is_zero(); });
  }
  bool is_injective() const {
    for (int v = 0; v < source_.vertex_count(); ++v)
      if (rank(map(v)) != source_.dim(v)) return false;
    return true;
  }
  bool is_surjective() const {
    for (int v = 0; v < source_.vertex_count(); ++v)
      if (rank(map(v)) != target_.dim(v)) return false;
    return true;
  }
  bool is_isomorphism() const {
    return source_.dims() == target_.dims() && is_injective();
  }

  /// `other` after `this`: the composite source -> other.target.
  Morphism then(const Morphism& other) const {
    if (!(target_.algebra() == other.source_.algebra()) || target_.dims() != other.source_.dims())
      throw InvariantViolation("composing non-composable morphisms");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(other.maps_[v] * maps_[v]);
    return Morphism(source_, other.target_, std::move(maps), Unchecked{});
  }

  Morphism operator+(const Morphism& o) const {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
    return Morphism(source_, target_, std::move(maps), Unchecked{});
  }

  Morphism scaled(Scalar c) const {
    std::vector<Matrix> maps;
    for (const auto& m : maps_) maps.push_back(m.scaled(c));
    return Morphism(source_, target_, std::move(maps), Unchecked{});
  }

  /// Flattened vertex matrices (vertex by vertex, row-major).
  Vector coordinates() const {
    Vector out;
    for (const auto& m : maps_) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
  }

  struct Unchecked {};
  Morphism(Representation source, Representation target, std::vector<Matrix> maps, Unchecked)
      : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {}

 private:
  void validate() const {
    if (!(source_.algebra() == target_.algebra())) throw ValidationError("morphism between modules over different algebras");
    if (maps_.size() != static_cast<std::size_t>(source_.vertex_count())) throw ValidationError("wrong number of vertex maps");
    for (int v = 0; v < source_.vertex_count(); ++v) {
      if (map(v).rows() != target_.dim(v) || map(v).cols() != source_.dim(v))
        throw ValidationError("vertex map has the wrong shape");
    }
    for (std::size_t k = 0; k < source_.algebra().arrow_count(); ++k) {
      const Arrow a = source_.algebra().arrow(k);
      if (!(target_.map(k) * map(a.source) == map(a.target) * source_.map(k)))
        throw ValidationError("vertex maps do not commute with arrow " + a.name);
    }
  }

  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

inline void require_same_algebra(const Representation& m, const Representation& n) {
  if (!(m.algebra() == n.algebra())) throw ValidationError("modules over different algebras");
}

/// Indecomposable projective P(i) = A e_i: vertex j carries the basis paths i -> j.
inline Representation projective(const Algebra& algebra, int vertex) {
  if (vertex < 0 || vertex >= algebra.vertex_count()) throw ValidationError("vertex out of range");
  const Scalar p = algebra.characteristic();
  std::vector<std::size_t> dims;
  for (int j = 0; j < algebra.vertex_count(); ++j) dims.push_back(algebra.path_count(vertex, j));
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < algebra.arrow_count(); ++k) {
    const Arrow a = algebra.arrow(k);
    const auto from = algebra.paths(vertex, a.source);
    Matrix m(dims[static_cast<std::size_t>(a.target)], from.size(), p);
    for (std::size_t c = 0; c < from.size(); ++c) {
      const Vector col = algebra.reduce(algebra.extend(from[c], static_cast<int>(k)));
      for (std::size_t r = 0; r < col.size(); ++r) m.set(r, c, col[r]);
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

inline Representation simple(const Algebra& algebra, int vertex) {
  if (vertex < 0 || vertex >= algebra.vertex_count()) throw ValidationError("vertex out of range");
  std::vector<std::size_t> dims(static_cast<std::size_t>(algebra.vertex_count()), 0);
  dims[static_cast<std::size_t>(vertex)] = 1;
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < algebra.arrow_count(); ++k) {
    const Arrow a = algebra.arrow(k);
    maps.emplace_back(dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)],
                      algebra.characteristic());
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

/// The duality D = Hom_k(-, k): a module over the opposite algebra with
/// transposed arrow matrices.
inline Representation dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transposed());
  return Representation(m.algebra().opposite(), m.dims(), std::move(maps));
}

/// D(f): D(target) -> D(source).
inline Morphism dual(const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& a : f.maps()) maps.push_back(a.transposed());
  return Morphism(dual(f.target()), dual(f.source()), std::move(maps));
}

/// Indecomposable injective I(i) = D(e_i A), the dual of P(i) over the opposite algebra.
inline Representation injective(const Algebra& algebra, int vertex) {
  return dual(projective(algebra.opposite(), vertex));
}

inline std::vector<Representation> projectives(const Algebra& algebra) {
  std::vector<Representation> out;
  for (int i = 0; i < algebra.vertex_count(); ++i) out.push_back(projective(algebra, i));
  return out;
}

inline std::vector<Representation> simples(const Algebra& algebra) {
  std::vector<Representation> out;
  for (int i = 0; i < algebra.vertex_count(); ++i) out.push_back(simple(algebra, i));
  return out;
}

inline std::vector<Representation> injectives(const Algebra& algebra) {
  std::vector<Representation> out;
  for (int i = 0; i < algebra.vertex_count(); ++i) out.push_back(injective(algebra, i));
  return out;
}

}  // namespace stratify

#pragma once

/// Bound quiver algebras A = kQ/I over a prime field.
///
/// Conventions: vertices are 0-based internally and 1-based in text. A path
/// `a*b` with a: 1->2 and b: 2->3 means "first a, then b". Representations
/// act on column vectors from the left, so the matrix of `a*b` is
/// M_b * M_a.
///
/// The ideal I is spanned by u*r*v for relations r and paths u, v, together
/// with all paths of length >= N (the nilpotency index). The path basis is
/// obtained by row-reducing the ideal per (source, target) block with the
/// largest paths eliminated first, so the surviving paths are the smallest
/// ones in (length, arrow-name lexicographic) order.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/linalg.hpp"

namespace stratify {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

/// A path in the quiver. A trivial path has no arrows and source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

struct PathTerm {
  Scalar coefficient = 1;
  std::vector<int> arrows;
};

/// A linear combination of parallel paths of length >= 2 lying in I.
struct Relation {
  int source = 0;
  int target = 0;
  std::vector<PathTerm> terms;
};

/// Raw algebra description before the path basis is computed.
struct AlgebraSpec {
  Scalar characteristic = 2;
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::optional<int> radical_power;
  int degree_cap = 12;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct AlgebraCore {
  AlgebraSpec spec;
  int nilpotency = 1;
  std::vector<Path> basis;
  // blocks[s][t]: indices into `basis` of the basis paths s -> t, ascending.
  std::vector<std::vector<std::vector<std::size_t>>> blocks;
  // Normal forms of every nontrivial path shorter than `nilpotency`,
  // as coordinates over blocks[source][target].
  std::map<std::vector<int>, Vector> normal_forms;
  // All paths of length exactly `nilpotency` (they vanish in A).
  std::vector<Path> vanishing_paths;
};

inline bool path_less(const std::vector<Arrow>& arrows, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const auto& na = arrows[static_cast<std::size_t>(a.arrows[i])].name;
    const auto& nb = arrows[static_cast<std::size_t>(b.arrows[i])].name;
    if (na != nb) return na < nb;
  }
  return false;
}

inline Path concat(const std::vector<Arrow>& arrows, const Path& a, const Path& b) {
  if (a.target != b.source) throw InvariantViolation("concatenating non-composable paths");
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  (void)arrows;
  return out;
}

/// All paths of length in [1, max_length], grouped by length.
inline std::vector<std::vector<Path>> paths_up_to(const AlgebraSpec& spec, std::size_t max_length) {
  std::vector<std::vector<Path>> by_length(max_length + 1);
  for (int v = 0; v < spec.vertex_count; ++v) by_length[0].push_back(Path{v, v, {}});
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const auto& p : by_length[len - 1]) {
      for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
        if (spec.arrows[k].source != p.target) continue;
        Path q = p;
        q.arrows.push_back(static_cast<int>(k));
        q.target = spec.arrows[k].target;
        by_length[len].push_back(std::move(q));
      }
    }
  }
  return by_length;
}

inline void validate_spec(const AlgebraSpec& spec) {
  require_prime(spec.characteristic);
  if (spec.vertex_count < 1) throw ValidationError("an algebra needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : spec.arrows) {
    if (a.source < 0 || a.source >= spec.vertex_count || a.target < 0 || a.target >= spec.vertex_count) {
      throw ValidationError("arrow " + a.name + " has an endpoint outside the vertex range");
    }
    if (!names.insert(a.name).second) throw ValidationError("duplicate arrow name " + a.name);
  }
  for (const auto& r : spec.relations) {
    if (r.terms.empty()) throw ValidationError("empty relation");
    for (const auto& t : r.terms) {
      if (t.arrows.size() < 2) throw ValidationError("relation paths must have length >= 2 (ideal not admissible)");
      int at = r.source;
      for (int k : t.arrows) {
        const auto& a = spec.arrows.at(static_cast<std::size_t>(k));
        if (a.source != at) throw ValidationError("relation path is not composable");
        at = a.target;
      }
      if (at != r.target) throw ValidationError("relation paths do not share source and target");
    }
  }
  if (spec.radical_power && *spec.radical_power < 2) {
    throw ValidationError("radical_power must be at least 2 (ideal not admissible)");
  }
  if (spec.degree_cap < 2) throw ValidationError("degree cap must be at least 2");
}

inline std::shared_ptr<const AlgebraCore> build_core(const AlgebraSpec& spec) {
  validate_spec(spec);
  const Scalar p = spec.characteristic;
  const int n = spec.vertex_count;
  const std::size_t truncation =
      spec.radical_power ? static_cast<std::size_t>(*spec.radical_power) : static_cast<std::size_t>(spec.degree_cap) + 1;

  const auto by_length = paths_up_to(spec, truncation - 1);

  // Per-block list of all paths shorter than the truncation, descending.
  std::vector<std::vector<std::vector<Path>>> block_paths(
      static_cast<std::size_t>(n), std::vector<std::vector<Path>>(static_cast<std::size_t>(n)));
  for (const auto& level : by_length)
    for (const auto& q : level)
      block_paths[static_cast<std::size_t>(q.source)][static_cast<std::size_t>(q.target)].push_back(q);
  for (auto& row : block_paths)
    for (auto& blk : row)
      std::sort(blk.begin(), blk.end(), [&](const Path& a, const Path& b) { return path_less(spec.arrows, b, a); });

  auto column_of = [&](const Path& q) -> std::size_t {
    const auto& blk = block_paths[static_cast<std::size_t>(q.source)][static_cast<std::size_t>(q.target)];
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (blk[i].arrows == q.arrows) return i;
    throw InvariantViolation("path missing from its block");
  };

  // Ideal generators u * r * v, truncated.
  std::vector<std::vector<std::vector<Vector>>> ideal_rows(
      static_cast<std::size_t>(n), std::vector<std::vector<Vector>>(static_cast<std::size_t>(n)));
  std::size_t min_term = truncation;
  for (const auto& r : spec.relations)
    for (const auto& t : r.terms) min_term = std::min(min_term, t.arrows.size());
  for (const auto& r : spec.relations) {
    std::size_t shortest = truncation;
    for (const auto& t : r.terms) shortest = std::min(shortest, t.arrows.size());
    for (std::size_t lu = 0; lu + shortest < truncation; ++lu) {
      for (const auto& u : by_length[lu]) {
        if (u.target != r.source) continue;
        for (std::size_t lv = 0; lu + shortest + lv < truncation; ++lv) {
          for (const auto& v : by_length[lv]) {
            if (v.source != r.target) continue;
            const auto s = static_cast<std::size_t>(u.source);
            const auto e = static_cast<std::size_t>(v.target);
            Vector row(block_paths[s][e].size(), 0);
            bool nonzero = false;
            for (const auto& term : r.terms) {
              if (lu + term.arrows.size() + lv >= truncation) continue;
              Path q{u.source, v.target, u.arrows};
              q.arrows.insert(q.arrows.end(), term.arrows.begin(), term.arrows.end());
              q.arrows.insert(q.arrows.end(), v.arrows.begin(), v.arrows.end());
              const auto c = column_of(q);
              row[c] = fp::add(row[c], term.coefficient, p);
              nonzero = true;
            }
            if (nonzero) ideal_rows[s][e].push_back(std::move(row));
          }
        }
      }
    }
  }

  auto core = std::make_shared<AlgebraCore>();
  core->spec = spec;
  core->blocks.assign(static_cast<std::size_t>(n), std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n)));

  // Row-reduce each block; pivot columns are eliminated paths.
  struct BlockReduction {
    std::vector<Path> kept;                       // ascending
    std::map<std::vector<int>, Vector> forms;     // coordinates over `kept`
  };
  std::vector<std::vector<BlockReduction>> reductions(static_cast<std::size_t>(n),
                                                      std::vector<BlockReduction>(static_cast<std::size_t>(n)));
  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    for (std::size_t e = 0; e < static_cast<std::size_t>(n); ++e) {
      const auto& cols = block_paths[s][e];
      const auto& rows = ideal_rows[s][e];
      Matrix m(rows.size(), cols.size(), p);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.set(i, j, rows[i][j]);
      const auto ech = rref(m);
      std::vector<int> pivot_row(cols.size(), -1);
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<int>(r);
      auto& red = reductions[s][e];
      std::vector<std::size_t> kept_cols;
      for (std::size_t j = cols.size(); j-- > 0;) {
        if (pivot_row[j] < 0) {
          red.kept.push_back(cols[j]);
          kept_cols.push_back(j);
        }
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        Vector form(kept_cols.size(), 0);
        if (pivot_row[j] < 0) {
          const auto pos = static_cast<std::size_t>(
              std::find(kept_cols.begin(), kept_cols.end(), j) - kept_cols.begin());
          form[pos] = 1 % p;
        } else {
          for (std::size_t k = 0; k < kept_cols.size(); ++k)
            form[k] = fp::neg(ech.reduced(static_cast<std::size_t>(pivot_row[j]), kept_cols[k]), p);
        }
        red.forms[cols[j].arrows] = std::move(form);
      }
    }
  }

  // Nilpotency index: the smallest N with every path of length N in I.
  int nilpotency = 0;
  if (spec.radical_power) {
    nilpotency = *spec.radical_power;
  } else {
    for (std::size_t len = 1; len < truncation && nilpotency == 0; ++len) {
      bool all_zero = true;
      for (const auto& q : by_length[len]) {
        const auto& red = reductions[static_cast<std::size_t>(q.source)][static_cast<std::size_t>(q.target)];
        const auto& f = red.forms.at(q.arrows);
        if (std::any_of(f.begin(), f.end(), [](Scalar x) { return x != 0; })) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) nilpotency = static_cast<int>(len);
    }
    if (nilpotency == 0) {
      throw ValidationError("ideal not admissible within degree cap " + std::to_string(spec.degree_cap));
    }
    nilpotency = std::max(nilpotency, 1);
  }
  core->nilpotency = nilpotency;

  // Assemble the global basis sorted by (length, names), then (source, target).
  std::vector<Path> all;
  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s)
    for (std::size_t e = 0; e < static_cast<std::size_t>(n); ++e)
      for (const auto& q : reductions[s][e].kept)
        if (static_cast<int>(q.length()) < nilpotency) all.push_back(q);
  std::stable_sort(all.begin(), all.end(), [&](const Path& a, const Path& b) {
    if (path_less(spec.arrows, a, b)) return true;
    if (path_less(spec.arrows, b, a)) return false;
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  core->basis = all;
  for (std::size_t i = 0; i < all.size(); ++i)
    core->blocks[static_cast<std::size_t>(all[i].source)][static_cast<std::size_t>(all[i].target)].push_back(i);

  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    for (std::size_t e = 0; e < static_cast<std::size_t>(n); ++e) {
      const auto& red = reductions[s][e];
      // Map kept-path positions to positions in the final block.
      std::vector<int> position(red.kept.size(), -1);
      const auto& blk = core->blocks[s][e];
      for (std::size_t k = 0; k < red.kept.size(); ++k)
        for (std::size_t b = 0; b < blk.size(); ++b)
          if (core->basis[blk[b]].arrows == red.kept[k].arrows) position[k] = static_cast<int>(b);
      for (const auto& [key, form] : red.forms) {
        if (key.empty() || static_cast<int>(key.size()) >= nilpotency) continue;
        Vector v(blk.size(), 0);
        for (std::size_t k = 0; k < form.size(); ++k) {
          if (form[k] == 0) continue;
          if (position[k] < 0) throw InvariantViolation("normal form uses a vanishing path");
          v[static_cast<std::size_t>(position[k])] = form[k];
        }
        core->normal_forms.emplace(key, std::move(v));
      }
    }
  }

  core->vanishing_paths = paths_up_to(spec, static_cast<std::size_t>(nilpotency)).back();
  return core;
}

}  // namespace detail

/// Handle to an immutable bound quiver algebra, or to its opposite algebra.
///
/// A and A^op share one core; the handle only flips the orientation of
/// arrows and paths. The opposite basis is the reversal of the basis of A in
/// the same order, so coordinates transfer between A and A^op unchanged.
class Algebra {
 public:
  static Algebra create(const AlgebraSpec& spec) { return Algebra(detail::build_core(spec), false); }

  Algebra opposite() const { return Algebra(core_, !opposite_); }
  bool is_opposite() const { return opposite_; }

  Scalar characteristic() const { return core_->spec.characteristic; }
  int vertex_count() const { return core_->spec.vertex_count; }
  std::size_t arrow_count() const { return core_->spec.arrows.size(); }
  int nilpotency_index() const { return core_->nilpotency; }
  std::size_t dimension() const { return core_->basis.size(); }
  const AlgebraSpec& spec() const { return core_->spec; }

  Arrow arrow(std::size_t k) const {
    Arrow a = core_->spec.arrows.at(k);
    if (opposite_) std::swap(a.source, a.target);
    return a;
  }

  int find_arrow(std::string_view name) const {
    const auto& arrows = core_->spec.arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].name == name) return static_cast<int>(k);
    return -1;
  }

  std::size_t path_count(int s, int t) const {
    const auto [cs, ct] = core_endpoints(s, t);
    return core_->blocks.at(static_cast<std::size_t>(cs)).at(static_cast<std::size_t>(ct)).size();
  }

  /// Basis paths from s to t in this orientation.
  std::vector<Path> paths(int s, int t) const {
    const auto [cs, ct] = core_endpoints(s, t);
    std::vector<Path> out;
    for (auto i : core_->blocks.at(static_cast<std::size_t>(cs)).at(static_cast<std::size_t>(ct)))
      out.push_back(orient(core_->basis[i]));
    return out;
  }

  std::vector<Path> basis() const {
    std::vector<Path> out;
    for (const auto& q : core_->basis) out.push_back(orient(q));
    return out;
  }

  /// Coordinates of a path (in this orientation) over paths(source, target).
  Vector reduce(const Path& q) const {
    check_path(q);
    const Path c = orient(q);
    const std::size_t size = path_count(q.source, q.target);
    if (c.length() == 0) {
      Vector v(size, 0);
      v.at(0) = 1 % characteristic();
      return v;
    }
    if (static_cast<int>(c.length()) >= core_->nilpotency) return Vector(size, 0);
    return core_->normal_forms.at(c.arrows);
  }

  /// Appends `arrow` to the end of `q`.
  Path extend(const Path& q, int arrow_index) const {
    const Arrow a = arrow(static_cast<std::size_t>(arrow_index));
    if (a.source != q.target) throw InvariantViolation("arrow does not start at the path's target");
    Path out = q;
    out.arrows.push_back(arrow_index);
    out.target = a.target;
    return out;
  }

  /// Prepends `arrow` to the start of `q`.
  Path prepend(int arrow_index, const Path& q) const {
    const Arrow a = arrow(static_cast<std::size_t>(arrow_index));
    if (a.target != q.source) throw InvariantViolation("arrow does not end at the path's source");
    Path out{a.source, q.target, {arrow_index}};
    out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
    return out;
  }

  /// Relations every representation must satisfy, in this orientation:
  /// the declared ones plus all paths of length N.
  std::vector<Relation> validation_relations() const {
    std::vector<Relation> out;
    for (const auto& r : core_->spec.relations) out.push_back(orient(r));
    for (const auto& q : core_->vanishing_paths) out.push_back(orient(Relation{q.source, q.target, {{1, q.arrows}}}));
    return out;
  }

  std::string path_name(const Path& q) const {
    if (q.length() == 0) return "e" + std::to_string(q.source + 1);
    std::string s;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      if (i) s += '*';
      s += core_->spec.arrows[static_cast<std::size_t>(q.arrows[i])].name;
    }
    return s;
  }

  bool operator==(const Algebra& o) const { return core_ == o.core_ && opposite_ == o.opposite_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  Algebra(std::shared_ptr<const detail::AlgebraCore> core, bool op) : core_(std::move(core)), opposite_(op) {}

  std::pair<int, int> core_endpoints(int s, int t) const { return opposite_ ? std::pair(t, s) : std::pair(s, t); }

  Path orient(const Path& q) const {
    if (!opposite_) return q;
    Path r{q.target, q.source, std::vector<int>(q.arrows.rbegin(), q.arrows.rend())};
    return r;
  }

  Relation orient(const Relation& rel) const {
    if (!opposite_) return rel;
    Relation r{rel.target, rel.source, {}};
    for (const auto& t : rel.terms) r.terms.push_back({t.coefficient, std::vector<int>(t.arrows.rbegin(), t.arrows.rend())});
    return r;
  }

  void check_path(const Path& q) const {
    if (q.source < 0 || q.source >= vertex_count() || q.target < 0 || q.target >= vertex_count())
      throw InvariantViolation("path endpoint out of range");
    int at = q.source;
    for (int k : q.arrows) {
      const Arrow a = arrow(static_cast<std::size_t>(k));
      if (a.source != at) throw InvariantViolation("path is not composable");
      at = a.target;
    }
    if (at != q.target) throw InvariantViolation("path target mismatch");
  }

  std::shared_ptr<const detail::AlgebraCore> core_;
  bool opposite_ = false;
};

namespace detail {

inline std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.emplace_back(line.substr(start, i - start), start + 1);
  }
  return out;
}

inline long long parse_integer(const std::string& tok, std::size_t line, std::size_t col, const char* what) {
  long long v = 0;
  std::string_view sv(tok);
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || ptr != sv.data() + sv.size() || sv.empty()) {
    throw ParseError(line, col, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return v;
}

}  // namespace detail

/// Parses the line-oriented algebra format:
///
///     field <p>
///     vertices <n>
///     arrow <name> <src> <tgt>
///     relation <coef> <path> [<coef> <path> ...]
///     radical_power <N>
///
/// `<path>` lists arrow names joined by `*` in composition order. Lines may
/// carry `#` comments. `field` defaults to 2.
inline AlgebraSpec parse_algebra_spec(std::string_view text) {
  AlgebraSpec spec;
  struct PendingRelation {
    std::size_t line;
    std::vector<std::pair<long long, std::pair<std::string, std::size_t>>> terms;
  };
  std::vector<PendingRelation> pending;
  bool saw_vertices = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0].first;
    auto need = [&](std::size_t count) {
      if (toks.size() != count) {
        throw ParseError(lineno, toks[0].second,
                         "'" + kw + "' expects " + std::to_string(count - 1) + " argument(s)");
      }
    };
    if (kw == "field") {
      need(2);
      const auto v = detail::parse_integer(toks[1].first, lineno, toks[1].second, "a prime");
      if (v < 2 || v > static_cast<long long>(kMaxCharacteristic) || !is_prime(static_cast<std::uint64_t>(v))) {
        throw ParseError(lineno, toks[1].second, "field characteristic " + toks[1].first + " is not prime");
      }
      spec.characteristic = static_cast<Scalar>(v);
    } else if (kw == "vertices") {
      need(2);
      const auto v = detail::parse_integer(toks[1].first, lineno, toks[1].second, "a vertex count");
      if (v < 1 || v > 1000) throw ParseError(lineno, toks[1].second, "vertex count out of range");
      spec.vertex_count = static_cast<int>(v);
      saw_vertices = true;
    } else if (kw == "arrow") {
      need(4);
      if (!saw_vertices) throw ParseError(lineno, toks[0].second, "'arrow' before 'vertices'");
      const auto s = detail::parse_integer(toks[2].first, lineno, toks[2].second, "a source vertex");
      const auto t = detail::parse_integer(toks[3].first, lineno, toks[3].second, "a target vertex");
      if (s < 1 || s > spec.vertex_count) throw ParseError(lineno, toks[2].second, "source vertex out of range");
      if (t < 1 || t > spec.vertex_count) throw ParseError(lineno, toks[3].second, "target vertex out of range");
      const auto& name = toks[1].first;
      if (name.find('*') != std::string::npos) throw ParseError(lineno, toks[1].second, "arrow names may not contain '*'");
      for (const auto& a : spec.arrows)
        if (a.name == name) throw ParseError(lineno, toks[1].second, "duplicate arrow name " + name);
      spec.arrows.push_back({name, static_cast<int>(s - 1), static_cast<int>(t - 1)});
    } else if (kw == "relation") {
      if (toks.size() < 3 || toks.size() % 2 == 0) {
        throw ParseError(lineno, toks[0].second, "'relation' expects <coef> <path> pairs");
      }
      PendingRelation rel{lineno, {}};
      for (std::size_t i = 1; i + 1 < toks.size(); i += 2) {
        const auto c = detail::parse_integer(toks[i].first, lineno, toks[i].second, "a coefficient");
        rel.terms.push_back({c, toks[i + 1]});
      }
      pending.push_back(std::move(rel));
    } else if (kw == "radical_power") {
      need(2);
      const auto v = detail::parse_integer(toks[1].first, lineno, toks[1].second, "a power");
      if (v < 2) throw ParseError(lineno, toks[1].second, "radical_power must be at least 2");
      spec.radical_power = static_cast<int>(v);
    } else {
      throw ParseError(lineno, toks[0].second, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_vertices) throw ParseError(lineno + 1, 1, "missing 'vertices' line");

  for (const auto& rel : pending) {
    Relation r;
    bool first = true;
    std::map<std::vector<int>, long long> combined;
    std::vector<std::vector<int>> order;
    for (const auto& [coef, tok] : rel.terms) {
      const auto& [text_path, col] = tok;
      std::vector<int> arrows;
      std::size_t start = 0;
      while (start <= text_path.size()) {
        const auto star = text_path.find('*', start);
        const auto name = text_path.substr(start, star == std::string::npos ? std::string::npos : star - start);
        int idx = -1;
        for (std::size_t k = 0; k < spec.arrows.size(); ++k)
          if (spec.arrows[k].name == name) idx = static_cast<int>(k);
        if (idx < 0) throw ParseError(rel.line, col, "unknown arrow '" + name + "'");
        arrows.push_back(idx);
        if (star == std::string::npos) break;
        start = star + 1;
      }
      for (std::size_t i = 1; i < arrows.size(); ++i) {
        if (spec.arrows[static_cast<std::size_t>(arrows[i - 1])].target !=
            spec.arrows[static_cast<std::size_t>(arrows[i])].source) {
          throw ParseError(rel.line, col, "path '" + text_path + "' is not composable");
        }
      }
      if (arrows.size() < 2) throw ParseError(rel.line, col, "relation paths must have length >= 2");
      const int s = spec.arrows[static_cast<std::size_t>(arrows.front())].source;
      const int t = spec.arrows[static_cast<std::size_t>(arrows.back())].target;
      if (first) {
        r.source = s;
        r.target = t;
        first = false;
      } else if (s != r.source || t != r.target) {
        throw ParseError(rel.line, col, "relation paths do not share source and target");
      }
      if (!combined.count(arrows)) order.push_back(arrows);
      combined[arrows] += coef;
    }
    for (const auto& a : order) {
      const Scalar c = fp::from_int(combined[a], spec.characteristic);
      if (c != 0) r.terms.push_back({c, a});
    }
    if (r.terms.empty()) throw ParseError(rel.line, 1, "relation vanishes over F_" + std::to_string(spec.characteristic));
    spec.relations.push_back(std::move(r));
  }
  return spec;
}

/// Reduces relation coefficients into a (possibly different) characteristic.
inline AlgebraSpec with_characteristic(AlgebraSpec spec, Scalar p) {
  require_prime(p);
  spec.characteristic = p;
  for (auto& r : spec.relations) {
    std::vector<PathTerm> kept;
    for (auto& t : r.terms) {
      t.coefficient %= p;
      if (t.coefficient != 0) kept.push_back(t);
    }
    if (kept.empty()) throw ValidationError("relation vanishes over F_" + std::to_string(p));
    r.terms = std::move(kept);
  }
  return spec;
}

inline Algebra parse_algebra(std::string_view text, std::optional<Scalar> field_override = std::nullopt,
                             int degree_cap = 12) {
  auto spec = parse_algebra_spec(text);
  spec.degree_cap = degree_cap;
  return Algebra::create(field_override ? with_characteristic(std::move(spec), *field_override) : spec);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Algebra load_algebra(const std::filesystem::path& path, std::optional<Scalar> field_override = std::nullopt,
                            int degree_cap = 12) {
  return parse_algebra(read_text_file(path), field_override, degree_cap);
}

}  // namespace stratify

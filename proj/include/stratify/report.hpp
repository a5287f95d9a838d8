#pragma once

/// Rendering of the induced-systems table (text, TSV, JSON), the audit
/// listing of orders and Delta families, and the comparison against a file
/// of expected counts.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/serialize.hpp"
#include "stratify/strat_systems.hpp"

namespace stratify {

enum class Format { text, tsv, json };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  throw ValidationError("unknown format '" + s + "' (expected text, tsv or json)");
}

struct ExpectedRow {
  IndexSet module;  // sorted universe indices
  std::size_t stratifying_systems = 0;
  std::size_t tfepss = 0;
};

/// Expected counts: {"rows": [{"module": [names], "stratifying_systems": n, "tfepss": n}, ...]}.
inline std::vector<ExpectedRow> parse_expected(const Universe& u, const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
    throw ValidationError("expected-values file needs a rows array");
  std::vector<ExpectedRow> out;
  for (const auto& r : j.at("rows")) {
    ExpectedRow e;
    if (!r.contains("module") || !r.at("module").is_array()) throw ValidationError("expected row needs a module list");
    for (const auto& n : r.at("module")) {
      if (!n.is_string()) throw ValidationError("module summands are given by name");
      const auto i = u.find_name(n.get<std::string>());
      if (!i) throw ValidationError("unknown module '" + n.get<std::string>() + "' in expected-values file");
      e.module.push_back(*i);
    }
    e.module = sorted_set(e.module);
    if (!r.contains("stratifying_systems") || !r.contains("tfepss") || !r.at("stratifying_systems").is_number_unsigned() ||
        !r.at("tfepss").is_number_unsigned())
      throw ValidationError("expected row needs non-negative stratifying_systems and tfepss counts");
    e.stratifying_systems = r.at("stratifying_systems").get<std::size_t>();
    e.tfepss = r.at("tfepss").get<std::size_t>();
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ExpectedRow> load_expected(const Universe& u, const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed expected-values file " + path.string() + ": " + e.what());
  }
  return parse_expected(u, j);
}

/// The bundled expected-values file next to an algebra file (x.alg -> x.expected.json), if present.
inline std::optional<std::filesystem::path> sibling_expected(const std::filesystem::path& algebra_file) {
  auto p = algebra_file;
  p.replace_extension(".expected.json");
  if (std::filesystem::exists(p)) return p;
  return std::nullopt;
}

struct RowMatch {
  bool ordered = false;
  bool unordered = false;
  bool tfepss = false;
  bool matched() const { return (ordered || unordered) && tfepss; }
};

struct TableReport {
  std::vector<TableRow> rows;
  std::vector<std::optional<ExpectedRow>> expected;
  std::vector<RowMatch> matches;
  bool has_expected = false;
  /// Expected rows that no computed row accounts for.
  std::vector<ExpectedRow> missing;

  bool all_matched() const {
    if (!has_expected || !missing.empty()) return false;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (!expected[k] || !matches[k].matched()) return false;
    return true;
  }
};

/// Rows follow the expected file when one is given (unlisted rows last, in
/// enumeration order); otherwise enumeration order.
inline TableReport build_table_report(const Universe& u, const std::optional<std::vector<ExpectedRow>>& expected,
                                      FiltrationCaps caps = {}) {
  auto rows = count_induced_systems(u, caps);
  TableReport rep;
  rep.has_expected = expected.has_value();
  std::vector<bool> used(rows.size(), false);
  if (expected) {
    for (const auto& e : *expected) {
      bool found = false;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!used[k] && rows[k].module == e.module) {
          used[k] = true;
          found = true;
          rep.rows.push_back(rows[k]);
          rep.expected.push_back(e);
          break;
        }
      }
      if (!found) rep.missing.push_back(e);
    }
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (used[k]) continue;
    rep.rows.push_back(rows[k]);
    rep.expected.push_back(std::nullopt);
  }
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    RowMatch m;
    if (const auto& e = rep.expected[k]) {
      m.ordered = rep.rows[k].count_ordered == e->stratifying_systems;
      m.unordered = rep.rows[k].count_unordered == e->stratifying_systems;
      m.tfepss = rep.rows[k].count_tfepss == e->tfepss;
    }
    rep.matches.push_back(m);
  }
  return rep;
}

namespace detail {

inline std::string order_label(const Universe& u, const Order& o) {
  std::string s = "(";
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (k) s += ", ";
    s += u.name(o[k]);
  }
  return s + ")";
}

inline std::string match_label(const TableReport& rep, std::size_t k) {
  if (!rep.expected[k]) return "-";
  const auto& m = rep.matches[k];
  if (!m.matched()) return "no";
  if (m.ordered && m.unordered) return "yes";
  return m.ordered ? "yes (ordered)" : "yes (unordered)";
}

inline std::string convention_label(const TableRow& r) {
  return r.count_ordered == r.count_unordered ? "" : "ordered/unordered differ";
}

}  // namespace detail

inline std::string render_table(const Universe& u, const TableReport& rep, Format format, bool audit) {
  std::ostringstream os;
  if (format == Format::json) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto& r = rep.rows[k];
      Json names = Json::array();
      const auto shown = u.display_order(r.module);
      for (auto i : shown) names.push_back(u.name(i));
      Json orders = Json::array(), deltas = Json::array();
      for (std::size_t o = 0; o < r.orders.size(); ++o) {
        Json oj = Json::array(), dj = Json::array();
        for (auto i : r.orders[o]) oj.push_back(u.name(i));
        for (auto i : r.deltas[o]) dj.push_back(u.name(i));
        orders.push_back(std::move(oj));
        deltas.push_back({{"delta", std::move(dj)}, {"tf_proper", static_cast<bool>(r.tf_proper[o])}});
      }
      Json row{{"module", std::move(names)},
               {"orders", std::move(orders)},
               {"delta_systems", std::move(deltas)},
               {"count_orders", r.count_orders},
               {"count_ordered", r.count_ordered},
               {"count_unordered", r.count_unordered},
               {"count_tfepss", r.count_tfepss}};
      if (const auto& e = rep.expected[k]) {
        row["expected"] = {{"stratifying_systems", e->stratifying_systems}, {"tfepss", e->tfepss}};
        row["match"] = {{"ordered", rep.matches[k].ordered},
                        {"unordered", rep.matches[k].unordered},
                        {"tfepss", rep.matches[k].tfepss},
                        {"matched", rep.matches[k].matched()}};
      }
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
    return os.str();
  }

  if (format == Format::tsv) {
    os << "module\tss_ordered\tss_unordered\ttf_orders\ttfepss";
    if (rep.has_expected) os << "\texpected_ss\texpected_tfepss\tmatch";
    os << "\tnote\n";
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto& r = rep.rows[k];
      os << u.module_label(r.module) << '\t' << r.count_ordered << '\t' << r.count_unordered << '\t' << r.count_orders
         << '\t' << r.count_tfepss;
      if (rep.has_expected) {
        if (const auto& e = rep.expected[k])
          os << '\t' << e->stratifying_systems << '\t' << e->tfepss;
        else
          os << "\t-\t-";
        os << '\t' << detail::match_label(rep, k);
      }
      os << '\t' << detail::convention_label(r) << '\n';
    }
  } else {
    os << "tau-tilting module      ss (ordered | unordered)   tfepss";
    if (rep.has_expected) os << "   expected   match";
    os << '\n';
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto& r = rep.rows[k];
      std::string label = u.module_label(r.module);
      label.resize(std::max<std::size_t>(label.size(), 24), ' ');
      std::ostringstream counts;
      counts << r.count_ordered << " | " << r.count_unordered;
      std::string c = counts.str();
      c.resize(std::max<std::size_t>(c.size(), 27), ' ');
      std::string t = std::to_string(r.count_tfepss);
      t.resize(std::max<std::size_t>(t.size(), 9), ' ');
      os << label << c << t;
      if (rep.has_expected) {
        std::string e = rep.expected[k] ? std::to_string(rep.expected[k]->stratifying_systems) + " | " +
                                              std::to_string(rep.expected[k]->tfepss)
                                        : "-";
        e.resize(std::max<std::size_t>(e.size(), 11), ' ');
        os << e << detail::match_label(rep, k);
      }
      const auto note = detail::convention_label(r);
      if (!note.empty()) os << "   [" << note << "]";
      os << '\n';
    }
  }
  for (const auto& e : rep.missing) os << "missing expected row: " << u.module_label(e.module) << '\n';
  if (rep.has_expected) os << (rep.all_matched() ? "all rows match\n" : "some rows do not match\n");

  if (audit) {
    for (const auto& r : rep.rows) {
      os << "\n# " << u.module_label(r.module) << ": " << r.count_orders << " TF-admissible orders\n";
      for (std::size_t o = 0; o < r.orders.size(); ++o) {
        os << "order " << detail::order_label(u, r.orders[o]) << " -> Delta " << detail::order_label(u, r.deltas[o])
           << (r.tf_proper[o] ? "  tf-proper" : "") << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace stratify

#pragma once

/// Command-line front end. dispatch() parses arguments, runs one subcommand
/// and maps errors to exit codes: 0 success, 1 invalid input, 2 a search cap
/// was hit, 3 an internal invariant failed.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/report.hpp"
#include "stratify/serialize.hpp"
#include "stratify/strat_systems.hpp"
#include "stratify/tau_exceptional.hpp"
#include "stratify/tau_tilting.hpp"
#include "stratify/universe.hpp"

namespace stratify {

struct RunConfig {
  std::string algebra_file;
  std::optional<unsigned> field_char;
  std::string format = "text";
  std::size_t dim_bound = 24;
  std::size_t iteration_bound = 16;
  std::uint64_t search_cap = std::uint64_t{1} << 20;
  std::uint64_t filtration_cap = 4096;
};

namespace cli {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string dims_label(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

inline std::string loewy_label(const std::vector<std::vector<int>>& layers) {
  std::string s;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (k) s += '/';
    for (int v : layers[k]) s += std::to_string(v + 1);
  }
  return s;
}

inline std::string json_label(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

class Session {
 public:
  explicit Session(RunConfig cfg) : cfg_(std::move(cfg)), format_(parse_format(cfg_.format)) {
    if (cfg_.dim_bound == 0 || cfg_.iteration_bound == 0 || cfg_.search_cap == 0 || cfg_.filtration_cap == 0)
      throw ValidationError("caps must be positive");
    if (cfg_.algebra_file.empty()) throw ValidationError("no algebra file given");
    std::optional<Scalar> p;
    if (cfg_.field_char) p = static_cast<Scalar>(*cfg_.field_char);
    algebra_ = load_algebra(cfg_.algebra_file, p);
    default_caps().iso_elements = cfg_.search_cap;
    default_caps().endomorphism_elements = cfg_.search_cap;
  }

  const RunConfig& config() const { return cfg_; }
  Format format() const { return format_; }
  const Algebra& algebra() const { return *algebra_; }
  FiltrationCaps filtration_caps() const { return {cfg_.filtration_cap}; }

  const Universe& universe() {
    if (!universe_) universe_ = enumerate_indecomposables(*algebra_, {cfg_.dim_bound, cfg_.iteration_bound});
    return *universe_;
  }

  Representation module(const std::string& spec) { return resolve_module(universe(), spec); }

  IndexSet module_indices(const std::string& spec) {
    const auto& u = universe();
    return u.express(module(spec));
  }

  Order order(const std::string& spec) {
    Order o;
    for (const auto& n : split_list(spec)) {
      const auto i = universe().find_name(n);
      if (!i) throw ValidationError("unknown module '" + n + "' in order");
      o.push_back(*i);
    }
    if (o.empty()) throw ValidationError("empty order");
    return o;
  }

  std::string label(const Representation& m) { return json_label(module_reference(universe(), m)); }

 private:
  RunConfig cfg_;
  Format format_;
  std::optional<Algebra> algebra_;
  std::optional<Universe> universe_;
};

inline void emit(std::ostream& out, const Session& s, const Json& j, const std::string& text) {
  if (s.format() == Format::json)
    out << j.dump(2) << '\n';
  else
    out << text;
}

inline void cmd_algebra_check(Session& s, std::ostream& out) {
  const auto& a = s.algebra();
  Json arrows = Json::array();
  std::ostringstream os;
  os << "characteristic " << a.characteristic() << '\n' << "vertices " << a.vertex_count() << '\n' << "arrows";
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const auto ar = a.arrow(k);
    arrows.push_back({{"name", ar.name}, {"source", ar.source + 1}, {"target", ar.target + 1}});
    os << ' ' << ar.name << ':' << ar.source + 1 << "->" << ar.target + 1;
  }
  Json basis = Json::array();
  os << "\ndimension " << a.dimension() << "\nnilpotency index " << a.nilpotency_index() << "\nbasis";
  for (const auto& q : a.basis()) {
    basis.push_back(a.path_name(q));
    os << ' ' << a.path_name(q);
  }
  os << "\nrelations hold in the path basis\n";
  emit(out, s,
       {{"characteristic", a.characteristic()},
        {"vertices", a.vertex_count()},
        {"arrows", arrows},
        {"dimension", a.dimension()},
        {"nilpotency_index", a.nilpotency_index()},
        {"basis", basis}},
       os.str());
}

inline void cmd_indec_list(Session& s, std::ostream& out) {
  const auto& u = s.universe();
  Json mods = Json::array();
  std::ostringstream os;
  if (s.format() == Format::tsv) os << "name\tdim_vector\tloewy\tprojective\tinjective\ttau\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& m = u.module(i);
    const auto layers = loewy_layers(m);
    const std::string tau_label = s.label(u.tau_of(i));
    const bool inj = is_injective(m);
    mods.push_back({{"name", u.name(i)},
                    {"dim_vector", m.dims()},
                    {"loewy", loewy_label(layers)},
                    {"projective", u.is_projective(i)},
                    {"injective", inj},
                    {"tau", tau_label},
                    {"module", module_to_json(m)}});
    if (s.format() == Format::tsv) {
      os << u.name(i) << '\t' << dims_label(m.dims()) << '\t' << loewy_label(layers) << '\t' << u.is_projective(i) << '\t'
         << inj << '\t' << tau_label << '\n';
    } else {
      std::string n = u.name(i);
      n.resize(std::max<std::size_t>(n.size(), 6), ' ');
      std::string d = dims_label(m.dims());
      d.resize(std::max<std::size_t>(d.size(), 12), ' ');
      std::string l = loewy_label(layers);
      l.resize(std::max<std::size_t>(l.size(), 8), ' ');
      os << n << d << l << (u.is_projective(i) ? "proj " : "     ") << (inj ? "inj  " : "     ") << "tau " << tau_label
         << '\n';
    }
  }
  if (s.format() != Format::tsv)
    os << u.size() << " indecomposables, " << (u.complete() ? "complete" : "incomplete (caps reached)") << '\n';
  emit(out, s, {{"complete", u.complete()}, {"modules", mods}}, os.str());
}

inline void cmd_hom(Session& s, std::ostream& out, const std::string& m_spec, const std::string& n_spec) {
  const auto m = s.module(m_spec), n = s.module(n_spec);
  const auto d = hom_dim(m, n);
  std::ostringstream os;
  os << "dim Hom(" << m_spec << ", " << n_spec << ") = " << d << '\n';
  emit(out, s, {{"source", m_spec}, {"target", n_spec}, {"dim", d}}, os.str());
}

inline void cmd_tau(Session& s, std::ostream& out, const std::string& spec, bool inverse) {
  const auto m = s.module(spec);
  const auto t = inverse ? tau_inverse(m) : tau(m);
  const auto ref = module_reference(s.universe(), t);
  emit(out, s, {{"module", spec}, {"inverse", inverse}, {"result", ref}, {"dim_vector", t.dims()}},
       json_label(ref) + '\n');
}

inline void cmd_tautilt_list(Session& s, std::ostream& out, bool support) {
  const auto& u = s.universe();
  Json list = Json::array();
  std::ostringstream os;
  if (!support) {
    const auto all = enumerate_tau_tilting(u);
    for (const auto& m : all) {
      list.push_back(u.module_label(m));
      os << u.module_label(m) << '\n';
    }
    if (s.format() == Format::text) os << all.size() << " tau-tilting modules\n";
  } else {
    const auto all = enumerate_support_tau_tilting(u);
    for (const auto& pair : all) {
      IndexSet p;
      for (int v : pair.projective_vertices) p.push_back(u.projective_index(v));
      const std::string ml = u.module_label(pair.module), pl = u.sum_name(p);
      list.push_back({{"module", ml}, {"shifted", pl}});
      os << ml << (s.format() == Format::tsv ? "\t" : " , ") << pl << '\n';
    }
    if (s.format() == Format::text) os << all.size() << " support tau-tilting pairs\n";
  }
  emit(out, s, list, os.str());
}

inline void cmd_bongartz(Session& s, std::ostream& out, const std::string& spec) {
  const auto& u = s.universe();
  const auto m = sorted_set(s.module_indices(spec));
  const auto b = bongartz_completion(u, m);
  emit(out, s, {{"module", u.module_label(m)}, {"completion", u.module_label(b)}}, u.module_label(b) + '\n');
}

inline void cmd_ss_build(Session& s, std::ostream& out, const std::string& order_spec,
                         const std::optional<std::string>& module_spec) {
  const auto& u = s.universe();
  const Order o = s.order(order_spec);
  if (module_spec && sorted_set(s.module_indices(*module_spec)) != sorted_set(o))
    throw ValidationError("order does not list the summands of the module");
  const auto sys = build_delta(u, o);
  const bool proper = is_tf_proper(u, o, s.filtration_caps());
  Json deltas = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < sys.theta.size(); ++i) {
    deltas.push_back(u.name(sys.theta_index[i]));
    os << "Delta(" << i + 1 << ") = " << u.name(sys.theta_index[i]) << '\n';
  }
  os << "stratifying system: " << (sys.certificate.passed ? "yes" : "no") << '\n';
  os << "TF-proper: " << (proper ? "yes" : "no") << '\n';
  Json j{{"order", split_list(order_spec)}, {"delta", deltas}, {"stratifying_system", sys.certificate.passed},
         {"tf_proper", proper}};
  if (proper) {
    const auto triple = psi(u, o, s.filtration_caps());
    const auto rep = verify_epss(u, triple.theta, triple.q, s.filtration_caps());
    Json q = Json::array();
    for (const auto& x : triple.q) q.push_back(s.label(x));
    j["epss"] = {{"q", q}, {"passed", rep.passed}};
    os << "Ext-projective stratifying system: " << (rep.passed ? "yes" : "no") << '\n';
  }
  emit(out, s, j, os.str());
}

inline void cmd_ss_enumerate(Session& s, std::ostream& out, const std::string& module_spec) {
  const auto& u = s.universe();
  FacCache fac(u);
  const auto m = sorted_set(s.module_indices(module_spec));
  if (!is_tau_rigid(u, m)) throw ValidationError("module is not tau-rigid");
  const auto row = induced_systems_row(u, m, fac, s.filtration_caps());
  Json list = Json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < row.orders.size(); ++k) {
    Json o = Json::array(), d = Json::array();
    for (auto i : row.orders[k]) o.push_back(u.name(i));
    for (auto i : row.deltas[k]) d.push_back(u.name(i));
    list.push_back({{"order", o}, {"delta", d}, {"tf_proper", static_cast<bool>(row.tf_proper[k])}});
    if (s.format() == Format::tsv)
      os << detail::order_label(u, row.orders[k]) << '\t' << detail::order_label(u, row.deltas[k]) << '\t'
         << row.tf_proper[k] << '\n';
    else
      os << "order " << detail::order_label(u, row.orders[k]) << " -> Delta " << detail::order_label(u, row.deltas[k])
         << (row.tf_proper[k] ? "  tf-proper" : "") << '\n';
  }
  if (s.format() == Format::text)
    os << row.count_orders << " orders, " << row.count_ordered << " stratifying systems (" << row.count_unordered
       << " as sets), " << row.count_tfepss << " tfepss\n";
  emit(out, s,
       {{"module", u.module_label(m)},
        {"systems", list},
        {"count_orders", row.count_orders},
        {"count_ordered", row.count_ordered},
        {"count_unordered", row.count_unordered},
        {"count_tfepss", row.count_tfepss}},
       os.str());
}

inline void cmd_ss_table(Session& s, std::ostream& out, const std::optional<std::string>& expected_file,
                         bool no_expected, bool audit) {
  const auto& u = s.universe();
  std::optional<std::vector<ExpectedRow>> expected;
  if (expected_file) {
    expected = load_expected(u, *expected_file);
  } else if (!no_expected) {
    if (auto p = sibling_expected(s.config().algebra_file)) expected = load_expected(u, *p);
  }
  const auto rep = build_table_report(u, expected, s.filtration_caps());
  out << render_table(u, rep, s.format(), audit);
}

inline std::vector<int> vertex_order(const std::string& spec, int n) {
  std::vector<int> o;
  for (const auto& t : split_list(spec)) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ValidationError("vertex order entries must be vertex numbers");
    }
    if (v < 1 || v > n) throw ValidationError("vertex " + t + " out of range");
    o.push_back(v - 1);
  }
  return o;
}

inline void cmd_profile(Session& s, std::ostream& out, const std::optional<std::string>& order_spec) {
  const auto& a = s.algebra();
  std::vector<std::vector<int>> orders;
  if (order_spec) {
    orders.push_back(vertex_order(*order_spec, a.vertex_count()));
  } else {
    std::vector<int> v(static_cast<std::size_t>(a.vertex_count()));
    for (int k = 0; k < a.vertex_count(); ++k) v[static_cast<std::size_t>(k)] = k;
    do orders.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }
  Json list = Json::array();
  std::ostringstream os;
  for (const auto& o : orders) {
    const auto prof = stratification_profile(a, o, s.filtration_caps());
    Json ord = Json::array(), std_mods = Json::array();
    std::string ol;
    for (int v : o) {
      ord.push_back(v + 1);
      ol += (ol.empty() ? "" : "<") + std::to_string(v + 1);
    }
    std::string ml;
    for (int v = 0; v < a.vertex_count(); ++v) {
      const auto lbl = s.label(prof.standard_modules[static_cast<std::size_t>(v)]);
      std_mods.push_back(lbl);
      ml += (v ? " " : "") + std::string("Delta(") + std::to_string(v + 1) + ")=" + lbl;
    }
    list.push_back({{"order", ord},
                    {"standard_modules", std_mods},
                    {"standardly_stratified", prof.standardly_stratified},
                    {"quasi_hereditary", prof.quasi_hereditary}});
    if (s.format() == Format::tsv)
      os << ol << '\t' << ml << '\t' << prof.standardly_stratified << '\t' << prof.quasi_hereditary << '\n';
    else
      os << "order " << ol << ": " << ml << "  standardly stratified: " << (prof.standardly_stratified ? "yes" : "no")
         << "  quasi-hereditary: " << (prof.quasi_hereditary ? "yes" : "no") << '\n';
  }
  emit(out, s, list, os.str());
}

inline std::string sequence_label(const Json& seq) {
  std::string s = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) s += ", ";
    s += json_label(seq[k].at("module"));
    s += seq[k].at("shifted").get<bool>() ? "[1]" : "";
  }
  return s + ")";
}

inline void cmd_exseq_build(Session& s, std::ostream& out, const std::string& order_spec, bool nested) {
  const auto& u = s.universe();
  const Order o = s.order(order_spec);
  SignedSequence seq;
  if (nested) {
    std::vector<Representation> tuple;
    for (auto i : o) tuple.push_back(u.module(i));
    seq = sequence_from_ordered(tuple, u);
  } else {
    seq = delta_sequence(u, o);
  }
  const auto rep = verify_signed_sequence(seq, u);
  const Json j = sequence_to_json(u, seq);
  if (s.format() == Format::json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << sequence_label(j) << '\n' << "signed tau-exceptional: " << (rep.passed ? "yes" : "no") << '\n';
}

inline void cmd_exseq_verify(Session& s, std::ostream& out, const std::string& spec) {
  const auto& u = s.universe();
  std::string text = spec;
  if (!text.empty() && text[0] == '@') text = read_text_file(text.substr(1));
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed sequence JSON: ") + e.what());
  }
  const auto seq = sequence_from_json(u, j);
  const auto rep = verify_signed_sequence(seq, u);
  Json certs = Json::array();
  for (const auto& c : rep.certificates) certs.push_back(u.module_label(c));
  std::ostringstream os;
  os << (rep.passed ? "pass" : "fail") << '\n';
  for (const auto& f : rep.failures) os << "  " << f << '\n';
  emit(out, s, {{"passed", rep.passed}, {"failures", rep.failures}, {"certificates", certs}}, os.str());
}

}  // namespace cli

/// Runs one command line (args exclude the program name). Output goes to
/// `out`, diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratifying systems and signed tau-exceptional sequences of bound quiver algebras", "stratify"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field-char", cfg.field_char, "Override the field characteristic (a prime)");
  app.add_option("--format", cfg.format, "Output format: text, tsv or json");
  app.add_option("--dim-bound", cfg.dim_bound, "Largest total dimension explored while enumerating indecomposables");
  app.add_option("--iteration-bound", cfg.iteration_bound, "Closure rounds while enumerating indecomposables");
  app.add_option("--search-cap", cfg.search_cap, "Largest Hom / End space scanned exhaustively (elements)");
  app.add_option("--filtration-cap", cfg.filtration_cap, "Largest Hom space scanned by filtration searches (elements)");

  std::function<void(cli::Session&)> action;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("algebra", cfg.algebra_file, "Algebra file")->required();
    return sub;
  };

  auto* algebra = app.add_subcommand("algebra", "Algebra files");
  algebra->require_subcommand(1);
  with_file(algebra->add_subcommand("check", "Parse and validate an algebra file"))
      ->callback([&] { action = [&](cli::Session& s) { cli::cmd_algebra_check(s, out); }; });

  auto* indec = app.add_subcommand("indec", "Indecomposable modules");
  indec->require_subcommand(1);
  with_file(indec->add_subcommand("list", "List the indecomposables with canonical names"))
      ->callback([&] { action = [&](cli::Session& s) { cli::cmd_indec_list(s, out); }; });

  std::string m_spec, n_spec;
  auto* hom = app.add_subcommand("hom", "Dimension of Hom(M, N)");
  hom->add_option("M", m_spec, "Source module")->required();
  hom->add_option("N", n_spec, "Target module")->required();
  with_file(hom)->callback([&] { action = [&](cli::Session& s) { cli::cmd_hom(s, out, m_spec, n_spec); }; });

  bool inverse = false;
  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
  tau_cmd->add_option("--module,-m", m_spec, "Module name, sum of names or inline JSON")->required();
  tau_cmd->add_flag("--inverse", inverse, "Apply the inverse translate");
  with_file(tau_cmd)->callback([&] { action = [&](cli::Session& s) { cli::cmd_tau(s, out, m_spec, inverse); }; });

  bool support = false;
  auto* tautilt = app.add_subcommand("tautilt", "tau-tilting modules");
  tautilt->require_subcommand(1);
  auto* tt_list = with_file(tautilt->add_subcommand("list", "List basic tau-tilting modules"));
  tt_list->add_flag("--support", support, "List support tau-tilting pairs (M, P) instead");
  tt_list->callback([&] { action = [&](cli::Session& s) { cli::cmd_tautilt_list(s, out, support); }; });

  auto* bongartz = app.add_subcommand("bongartz", "Bongartz completion of a tau-rigid module");
  bongartz->add_option("--module,-m", m_spec, "tau-rigid module")->required();
  with_file(bongartz)->callback([&] { action = [&](cli::Session& s) { cli::cmd_bongartz(s, out, m_spec); }; });

  std::string order_spec;
  std::optional<std::string> module_opt, expected_file, vertex_order_spec;
  bool audit = false, no_expected = false, nested = false;
  auto* ss = app.add_subcommand("ss", "Stratifying systems induced by tau-rigid modules");
  ss->require_subcommand(1);
  auto* ss_build = with_file(ss->add_subcommand("build", "Delta family of a TF-admissible order"));
  ss_build->add_option("--order,-o", order_spec, "Summands M_1,...,M_t in order")->required();
  ss_build->add_option("--module,-m", module_opt, "The module, checked against the order");
  ss_build->callback([&] { action = [&](cli::Session& s) { cli::cmd_ss_build(s, out, order_spec, module_opt); }; });
  auto* ss_enum = with_file(ss->add_subcommand("enumerate", "All TF-admissible orders of a tau-rigid module"));
  ss_enum->add_option("--module,-m", m_spec, "tau-rigid module")->required();
  ss_enum->callback([&] { action = [&](cli::Session& s) { cli::cmd_ss_enumerate(s, out, m_spec); }; });
  auto* ss_table = with_file(ss->add_subcommand("table", "Counts for every tau-tilting module"));
  ss_table->add_option("--expected", expected_file, "Expected-values file (default: <algebra>.expected.json if present)");
  ss_table->add_flag("--no-expected", no_expected, "Do not compare against expected values");
  ss_table->add_flag("--audit", audit, "List every order and Delta family");
  ss_table->callback([&] {
    action = [&](cli::Session& s) { cli::cmd_ss_table(s, out, expected_file, no_expected, audit); };
  });

  auto* profile = with_file(app.add_subcommand("profile", "Standard modules for vertex orders"));
  profile->add_option("--order,-o", vertex_order_spec, "Vertices from smallest to largest, e.g. 1,2,3 (default: all)");
  profile->callback([&] { action = [&](cli::Session& s) { cli::cmd_profile(s, out, vertex_order_spec); }; });

  std::string sequence_spec;
  auto* exseq = app.add_subcommand("exseq", "Signed tau-exceptional sequences");
  exseq->require_subcommand(1);
  auto* ex_build = with_file(exseq->add_subcommand("build", "Sequence of a TF-admissible order"));
  ex_build->add_option("--order,-o", order_spec, "Summands M_1,...,M_t in order")->required();
  ex_build->add_flag("--nested", nested, "Use iterated torsion-free quotients instead of the Delta family");
  ex_build->callback([&] { action = [&](cli::Session& s) { cli::cmd_exseq_build(s, out, order_spec, nested); }; });
  auto* ex_verify = with_file(exseq->add_subcommand("verify", "Check a sequence given as JSON"));
  ex_verify->add_option("--sequence,-s", sequence_spec, "JSON array, or @file")->required();
  ex_verify->callback([&] { action = [&](cli::Session& s) { cli::cmd_exseq_verify(s, out, sequence_spec); }; });

  // First word that is not an option or an option value names the command.
  for (std::size_t k = 0; k < args.size(); ++k) {
    const auto& a = args[k];
    if (a.rfind("-", 0) == 0) {
      if (a.find('=') == std::string::npos && a != "-h" && a != "--help") ++k;
      continue;
    }
    if (!app.get_subcommand_no_throw(a)) {
      err << "error: unknown command '" << a << "'\n";
      return 1;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    cli::Session session(cfg);
    action(session);
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace stratify

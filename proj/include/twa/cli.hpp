#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twa/structure.hpp"
#include "twa/terwilliger.hpp"
#include "twa/wreath.hpp"

namespace twa::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr std::size_t kDefaultMaxOrder = 64;
inline constexpr const char* kMaxOrderEnv = "TWA_MAX_ORDER";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

/// Usage or configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical order; a selected subset always runs in this order.
inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "axioms",       "ball-structure", "vanishing",   "triple-list", "triply-regular", "primary-module",
      "block-form",   "matrix-units",   "ag-forms",    "commutation", "f-family",       "decomposition"};
  return names;
}

inline const std::vector<std::string>& oracle_check_names() {
  static const std::vector<std::string> names = {"axioms", "triply-regular", "t0-consistency"};
  return names;
}

enum class Format { Json, Text };

struct RunConfig {
  std::vector<int> moduli;
  std::vector<std::size_t> base_points;  // empty: all
  std::size_t max_order = kDefaultMaxOrder;
  std::vector<std::string> checks;  // canonical order, nonempty
  std::string out;                  // empty: stdout
  Format format = Format::Json;
  bool timings = false;
};

// ---------------------------------------------------------------------------
// Parsing helpers

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ConfigError("empty item in list '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

inline long long parse_integer(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw ConfigError(std::string(what) + ": '" + s + "' is not an integer");
  return v;
}

inline std::vector<int> parse_moduli(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_csv(s)) {
    const long long v = parse_integer(item, "--moduli");
    if (v < 2 || v > 1'000'000) throw ConfigError("--moduli: every entry must be an integer >= 2, got " + item);
    out.push_back(static_cast<int>(v));
  }
  double order = 1;
  for (int v : out) order *= v;
  if (order > 1e12) throw ConfigError("--moduli: order " + std::to_string(order) + " is far beyond any usable limit");
  return out;
}

inline std::vector<std::size_t> parse_base_points(const std::string& s) {
  if (s == "all") return {};
  std::vector<std::size_t> out;
  for (const auto& item : split_csv(s)) {
    const long long v = parse_integer(item, "--base-points");
    if (v < 0) throw ConfigError("--base-points: negative vertex " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::string> parse_checks(const std::string& s, const std::vector<std::string>& known) {
  if (s == "all") return known;
  const auto requested = split_csv(s);
  for (const auto& r : requested)
    if (std::find(known.begin(), known.end(), r) == known.end()) throw ConfigError("--checks: unknown check '" + r + "'");
  std::vector<std::string> out;
  for (const auto& k : known)
    if (std::find(requested.begin(), requested.end(), k) != requested.end()) out.push_back(k);
  return out;
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ConfigError("--format: expected json or text, got '" + s + "'");
}

/// Flag value if given, else the environment variable, else the default.
inline std::size_t resolve_max_order(const std::optional<long long>& flag) {
  long long v = static_cast<long long>(kDefaultMaxOrder);
  if (flag) {
    v = *flag;
  } else if (const char* env = std::getenv(kMaxOrderEnv); env && *env) {
    v = parse_integer(env, kMaxOrderEnv);
  }
  if (v < 1) throw ConfigError("max order must be positive");
  return static_cast<std::size_t>(v);
}

inline void require_order(std::size_t order, std::size_t max_order, const std::string& what) {
  if (order > max_order) {
    throw ConfigError(what + " has order " + std::to_string(order) + ", above the limit " + std::to_string(max_order) +
                      " (raise with --max-order or " + kMaxOrderEnv + ")");
  }
}

// ---------------------------------------------------------------------------
// Reports

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string witness;
  double millis = 0;
};

inline nlohmann::ordered_json checks_json(const std::vector<CheckEntry>& checks, bool timings) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) o["witness"] = c.witness;
    if (timings) o["millis"] = c.millis;
    arr.push_back(std::move(o));
  }
  return arr;
}

inline void write_text_checks(std::ostream& out, const std::vector<CheckEntry>& checks, bool timings) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (timings) out << " (" << c.millis << " ms)";
    if (!c.witness.empty()) out << ": " << c.witness;
    out << '\n';
  }
}

inline bool all_passed(const std::vector<CheckEntry>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

inline void emit(const std::string& body, const std::string& path, std::ostream& stdout_stream) {
  if (path.empty()) {
    stdout_stream << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << body;
  if (!f) throw IoError("write to '" + path + "' failed");
}

template <typename Fn>
CheckEntry timed(const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  const auto stop = std::chrono::steady_clock::now();
  return {name, r.passed, r.witness, std::chrono::duration<double, std::milli>(stop - start).count()};
}

struct VerifyReport {
  Moduli moduli;
  std::vector<std::size_t> base_points;
  std::optional<std::size_t> dim_T;
  std::optional<std::size_t> one_dim_count;
  std::vector<CheckEntry> checks;
};

/// Runs the selected checks on the wreath product of cyclic schemes with the given moduli.
inline VerifyReport run_verify(const RunConfig& cfg) {
  if (cfg.checks.empty()) throw ConfigError("no checks selected");
  const Moduli m(cfg.moduli);
  require_order(m.order(), cfg.max_order, "moduli " + m.str());
  VerifyReport rep;
  rep.moduli = m;
  try {
    rep.base_points = resolve_base_points(m.order(), cfg.base_points);
  } catch (const std::out_of_range& e) {
    throw ConfigError(std::string("--base-points: ") + e.what());
  }
  const Scheme s = wreath_of_cyclics(m);

  auto per_point = [&](const std::string& name, const std::function<CheckResult(const WreathContext&)>& fn) {
    return timed(name, [&] {
      CheckResult total(name);
      for (std::size_t x : rep.base_points) {
        CheckResult r = fn(WreathContext(m, x));
        if (!r.passed) r.witness = "x=" + std::to_string(x) + ": " + r.witness;
        total.cases += r.cases;
        if (!r.passed) total.fail(r.witness);
      }
      return total;
    });
  };

  for (const auto& name : cfg.checks) {
    if (name == "axioms") {
      rep.checks.push_back(timed(name, [&] {
        CheckResult r(name);
        const AxiomReport a = verify_axioms(s);
        r.expect(a.all(), [&] { return a.first_failure(); });
        r.expect(is_commutative(s), [] { return std::string("scheme is not commutative"); });
        return r;
      }));
    } else if (name == "ball-structure") {
      rep.checks.push_back(timed(name, [&] { return check_ball_structure(m); }));
    } else if (name == "vanishing") {
      rep.checks.push_back(timed(name, [&] { return check_vanishing_criterion(m); }));
    } else if (name == "triple-list") {
      rep.checks.push_back(per_point(name, [&](const WreathContext& c) { return check_triple_list(m, c.base_point()); }));
    } else if (name == "triply-regular") {
      rep.checks.push_back(timed(name, [&] {
        CheckResult r(name);
        const auto t = check_triply_regular(s, rep.base_points);
        r.expect(t.triply_regular, [&] { return "not triply regular: " + t.witness; });
        r.expect(t.cross_checked && t.lemma_consistent,
                 [] { return std::string("triple regularity disagrees with dim T_0(x) = dim T(x)"); });
        return r;
      }));
    } else if (name == "primary-module") {
      rep.checks.push_back(per_point(name, [](const WreathContext& c) { return check_primary_module(c); }));
    } else if (name == "block-form") {
      rep.checks.push_back(per_point(name, [](const WreathContext& c) { return check_block_forms(c); }));
    } else if (name == "matrix-units") {
      rep.checks.push_back(per_point(name, [](const WreathContext& c) {
        const GFamily g = build_g_family(c);
        CheckResult r = check_matrix_units(g);
        const std::size_t k = c.num_classes();
        r.expect(g_family_rank(g) == k * k, [&] { return "G family is linearly dependent"; });
        return r;
      }));
    } else if (name == "ag-forms") {
      rep.checks.push_back(per_point(name, [](const WreathContext& c) { return check_ag_forms(c, build_g_family(c)).result; }));
    } else if (name == "commutation") {
      rep.checks.push_back(per_point(name, [](const WreathContext& c) { return check_commutation(c); }));
    } else if (name == "f-family") {
      rep.checks.push_back(per_point(name, [&](const WreathContext& c) {
        const FFamily f = build_f_family(c);
        CheckResult r = check_f_properties(c, f, build_g_family(c));
        const std::size_t expected = one_dimensional_count(m);
        r.expect(f.nonzero_count() == expected, [&] {
          return std::to_string(f.nonzero_count()) + " nonzero F, expected " + std::to_string(expected);
        });
        if (!rep.one_dim_count) rep.one_dim_count = f.nonzero_count();
        return r;
      }));
    } else if (name == "decomposition") {
      const auto start = std::chrono::steady_clock::now();
      DecompOptions opts{rep.base_points, cfg.max_order};
      const DecompReport d = decomposition_report(m, opts);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      rep.dim_T = d.dim_T;
      rep.one_dim_count = d.one_dim_count;
      CheckEntry summary{name, d.passed(), "", ms};
      for (const auto& v : d.verdicts)
        if (!v.passed && summary.witness.empty()) summary.witness = v.name + ": " + v.witness;
      rep.checks.push_back(summary);
      for (const auto& v : d.verdicts) rep.checks.push_back({name + "." + v.name, v.passed, v.witness, 0.0});
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["moduli"] = r.moduli.values();
  j["order"] = r.moduli.order();
  j["num_classes"] = r.moduli.num_classes();
  j["base_points"] = r.base_points;
  j["dim_T"] = r.dim_T ? nlohmann::ordered_json(*r.dim_T) : nlohmann::ordered_json(nullptr);
  j["dim_formula"] = dimension_formula(r.moduli);
  j["matrix_block"] = matrix_block_size(r.moduli);
  j["one_dim_count"] = r.one_dim_count ? nlohmann::ordered_json(*r.one_dim_count) : nlohmann::ordered_json(nullptr);
  j["checks"] = checks_json(r.checks, timings);
  j["version"] = kVersion;
  return j;
}

inline std::string render(const VerifyReport& r, Format f, bool timings) {
  if (f == Format::Json) return to_json(r, timings).dump(2) + "\n";
  std::ostringstream out;
  out << "moduli " << r.moduli.str() << ", order " << r.moduli.order() << ", classes " << r.moduli.num_classes()
      << '\n';
  out << "dim T: " << (r.dim_T ? std::to_string(*r.dim_T) : std::string("not computed")) << ", formula "
      << dimension_formula(r.moduli) << " = " << matrix_block_size(r.moduli) << "^2 + "
      << one_dimensional_count(r.moduli) << '\n';
  write_text_checks(out, r.checks, timings);
  return out.str();
}

struct OracleReport {
  std::string source;
  Scheme scheme;
  std::vector<std::size_t> base_points;
  bool commutative = false;
  std::optional<bool> triply_regular;
  std::vector<BasePointDims> dims;
  std::vector<CheckEntry> checks;
};

/// Generic checks on an ingested class table.
inline OracleReport run_oracle(const Scheme& s, const std::string& source, const RunConfig& cfg) {
  if (cfg.checks.empty()) throw ConfigError("no checks selected");
  require_order(s.order(), cfg.max_order, "scheme '" + source + "'");
  OracleReport rep{source, s, {}, false, std::nullopt, {}, {}};
  try {
    rep.base_points = resolve_base_points(s.order(), cfg.base_points);
  } catch (const std::out_of_range& e) {
    throw ConfigError(std::string("--base-points: ") + e.what());
  }
  const AxiomReport axioms = verify_axioms(s);
  rep.commutative = axioms.all() && is_commutative(s);

  auto selected = [&](const std::string& n) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), n) != cfg.checks.end();
  };
  if (selected("axioms")) {
    rep.checks.push_back(timed("axioms", [&] {
      CheckResult r("axioms");
      r.expect(axioms.all(), [&] { return axioms.first_failure(); });
      return r;
    }));
  }

  std::optional<TriplyRegularReport> tr;
  if ((selected("triply-regular") || selected("t0-consistency")) && s.in_range()) {
    const auto start = std::chrono::steady_clock::now();
    tr = check_triply_regular(s, rep.base_points);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.triply_regular = tr->triply_regular;
    rep.dims = tr->dims;
    if (selected("triply-regular")) rep.checks.push_back({"triply-regular", tr->triply_regular, tr->witness, ms});
    if (selected("t0-consistency") && tr->cross_checked) {
      rep.checks.push_back({"t0-consistency", tr->lemma_consistent,
                            tr->lemma_consistent ? "" : "triple regularity disagrees with dim T_0(x) = dim T(x)", 0.0});
    }
  } else if (selected("triply-regular")) {
    rep.checks.push_back({"triply-regular", false, "class table out of range", 0.0});
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const OracleReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["order"] = r.scheme.order();
  j["num_classes"] = r.scheme.num_classes();
  j["base_points"] = r.base_points;
  j["commutative"] = r.commutative;
  j["triply_regular"] =
      r.triply_regular ? nlohmann::ordered_json(*r.triply_regular) : nlohmann::ordered_json(nullptr);
  std::optional<std::size_t> common;
  bool uniform = !r.dims.empty();
  auto dims = nlohmann::ordered_json::array();
  for (const auto& d : r.dims) {
    if (!common) common = d.dim_t;
    uniform = uniform && *common == d.dim_t;
    dims.push_back({{"base_point", d.base_point}, {"dim_T0", d.dim_t0}, {"dim_T", d.dim_t}});
  }
  j["dim_T"] = uniform ? nlohmann::ordered_json(*common) : nlohmann::ordered_json(nullptr);
  j["dims"] = dims;
  j["checks"] = checks_json(r.checks, timings);
  j["version"] = kVersion;
  return j;
}

inline std::string render(const OracleReport& r, Format f, bool timings) {
  if (f == Format::Json) return to_json(r, timings).dump(2) + "\n";
  std::ostringstream out;
  out << "scheme " << r.source << ", order " << r.scheme.order() << ", classes " << r.scheme.num_classes()
      << (r.commutative ? ", commutative" : "") << '\n';
  for (const auto& d : r.dims)
    out << "x=" << d.base_point << ": dim T_0 = " << d.dim_t0 << ", dim T = " << d.dim_t << '\n';
  write_text_checks(out, r.checks, timings);
  return out.str();
}

// ---------------------------------------------------------------------------
// Matrix dumps

inline nlohmann::ordered_json entry_json(const CycloNum& v) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(c.get_str());
  return {{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

/// Every entry is written in Q(zeta_conductor), so one matrix shares one basis.
inline nlohmann::ordered_json matrix_json(const std::string& name, const ExactMatrix& m, std::uint32_t conductor = 1) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_json(m(r, c).promoted(conductor)));
    rows.push_back(std::move(row));
  }
  return {{"name", name}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

/// A_i, E_i^*(x), every G and every F at base point x, entries as exact
/// cyclotomic coefficient lists.
inline nlohmann::ordered_json matrix_dump(const Moduli& m, std::size_t x) {
  const WreathContext ctx(m, x);
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ctx.num_classes(); ++i)
    mats.push_back(matrix_json("A_" + m.unflat(i).str(), ctx.adjacency(i).cast<CycloNum>()));
  for (std::size_t i = 0; i < ctx.num_classes(); ++i)
    mats.push_back(matrix_json("E*_" + m.unflat(i).str(), ctx.dual(i).cast<CycloNum>()));
  const GFamily g = build_g_family(ctx);
  for (std::size_t a = 0; a < g.size; ++a)
    for (std::size_t b = 0; b < g.size; ++b)
      mats.push_back(
          matrix_json("G_{" + m.unflat(a).str() + m.unflat(b).str() + "}", g.at(a, b).cast<CycloNum>()));
  const FFamily f = build_f_family(ctx);
  for (const auto& member : f.members)
    mats.push_back(matrix_json("F_{" + member.outer.str() + member.inner.str() + "}", member.matrix, f.conductor));
  nlohmann::ordered_json j;
  j["moduli"] = m.values();
  j["base_point"] = x;
  j["matrices"] = mats;
  j["version"] = kVersion;
  return j;
}

// ---------------------------------------------------------------------------
// Entry point

/// Parses argv and runs one subcommand. Returns the process exit code:
/// 0 every check passed, 1 some check failed, 2 usage/config/parse error,
/// 3 I/O or internal error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Terwilliger algebra verifier for wreath products of cyclic schemes", "twa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string moduli_s, base_s = "all", checks_s = "all", out_path, format_s = "json", scheme_path, dump_path;
  std::optional<long long> max_order_flag;
  bool timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--base-points", base_s, "all, or comma-separated vertices");
    sub->add_option("--out", out_path, "Output path (default: stdout)");
    sub->add_option("--max-order", max_order_flag, "Largest accepted scheme order (default 64)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Verify structural claims for C_{p1} wr ... wr C_{pd}");
  verify->add_option("--moduli", moduli_s, "Comma-separated cyclic orders, innermost first")->required();
  add_common(verify);
  verify->add_option("--checks", checks_s, "all, or comma-separated check names");
  verify->add_option("--format", format_s, "json or text");
  verify->add_flag("--timings", timings, "Include per-check wall time (makes output nondeterministic)");

  CLI::App* oracle = app.add_subcommand("oracle", "Generic checks on a class table file");
  oracle->add_option("scheme", scheme_path, "Class table file ('order d' header then order^2 classes)")->required();
  add_common(oracle);
  oracle->add_option("--checks", checks_s, "all, or comma-separated check names");
  oracle->add_option("--format", format_s, "json or text");
  oracle->add_flag("--timings", timings, "Include per-check wall time");

  CLI::App* exporter = app.add_subcommand("export", "Write the class table, optionally with matrix dumps");
  exporter->add_option("--moduli", moduli_s, "Comma-separated cyclic orders, innermost first")->required();
  add_common(exporter);
  exporter->add_option("--matrices", dump_path, "Also write exact matrix dumps (JSON) to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    RunConfig cfg;
    cfg.base_points = parse_base_points(base_s);
    cfg.max_order = resolve_max_order(max_order_flag);
    cfg.out = out_path;
    cfg.format = parse_format(format_s);
    cfg.timings = timings;

    if (verify->parsed()) {
      cfg.moduli = parse_moduli(moduli_s);
      cfg.checks = parse_checks(checks_s, verify_check_names());
      const VerifyReport rep = run_verify(cfg);
      emit(render(rep, cfg.format, cfg.timings), cfg.out, out);
      return all_passed(rep.checks) ? kPass : kCheckFailed;
    }
    if (oracle->parsed()) {
      cfg.checks = parse_checks(checks_s, oracle_check_names());
      std::ifstream in(scheme_path);
      if (!in) throw IoError("cannot open '" + scheme_path + "'");
      const Scheme s = read_scheme(in);
      const OracleReport rep = run_oracle(s, scheme_path, cfg);
      emit(render(rep, cfg.format, cfg.timings), cfg.out, out);
      return all_passed(rep.checks) ? kPass : kCheckFailed;
    }
    // export
    cfg.moduli = parse_moduli(moduli_s);
    const Moduli m(cfg.moduli);
    require_order(m.order(), cfg.max_order, "moduli " + m.str());
    std::ostringstream table;
    write_scheme(table, wreath_of_cyclics(m));
    emit(table.str(), cfg.out, out);
    if (!dump_path.empty()) {
      const auto points = resolve_base_points(m.order(), cfg.base_points);
      emit(matrix_dump(m, points.front()).dump(1) + "\n", dump_path, out);
    }
    return kPass;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace twa::cli

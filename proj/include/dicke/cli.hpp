// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run_cli() does all the work so tests can drive it
// with string streams; tools/dicke_cli.cpp only forwards argv.
//
// Exit codes: 0 ok, 2 usage or domain error, 3 missing data, 4 property
// violation.

#ifndef DICKE_CLI_HPP
#define DICKE_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/antisym.hpp"
#include "dicke/basis.hpp"
#include "dicke/coefficients.hpp"
#include "dicke/csv.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/figures.hpp"
#include "dicke/ladder.hpp"
#include "dicke/spin.hpp"
#include "dicke/svg.hpp"
#include "dicke/tables.hpp"

namespace dicke {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitMissingData = 3, kExitProperty = 4 };

enum class OutputFormat { kCsv, kJson };

/// Parsed command line, shared by every subcommand.
struct RunConfig {
  std::string command;
  std::string spin = "1";
  int n = 0;
  std::string m;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::string> output_path;
  std::optional<double> tolerance;

  // command-specific
  bool diff_closed_form = false;
  bool exact = false;
  bool printed_prefactors = false;
  bool pair_subspace = false;
  bool sweep = false;
  std::string state;
  std::string data_dir = kDefaultDataDir;
  std::string out_dir = ".";
  std::string in_path;
  unsigned threads = 0;  // 0: hardware concurrency
};

using Json = nlohmann::ordered_json;

/// Worker count: the request (or hardware concurrency) capped by DICKE_THREADS.
inline unsigned resolve_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DICKE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) throw DomainError("DICKE_THREADS must be a positive integer");
    n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace detail {

inline Magnetization require_m(const RunConfig& cfg) {
  if (cfg.m.empty()) throw DomainError("--m is required");
  return Magnetization::parse(cfg.m);
}

inline void require_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw DomainError("--n must be a positive integer");
}

inline std::vector<std::string> counts_fields(const OccupationVector& occ) {
  std::vector<std::string> f;
  for (int c : occ.counts()) f.push_back(std::to_string(c));
  return f;
}

inline std::string rational_str(const BigRational& r) { return r.str(); }

inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.output_path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + *cfg.output_path);
  f << text;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path.string());
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

inline int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg);
  const SpinSpecies species = SpinSpecies::parse(cfg.spin);
  const Magnetization m = require_m(cfg);
  const auto basis = enumerate_basis(species, cfg.n, m);
  const long formula = basis_count_formula(species, cfg.n, m);
  err << "basis size " << basis.size() << ", count formula " << formula << "\n";
  if (cfg.format == OutputFormat::kJson) {
    Json j{{"spin", species.name()}, {"n", cfg.n}, {"m", m.str()}, {"levels", species.level_labels()},
           {"size", basis.size()}, {"count_formula", formula}, {"basis", Json::array()}};
    for (const auto& occ : basis) j["basis"].push_back(occ.counts());
    emit(cfg, out, dump(j));
  } else {
    std::string text = join_csv(species.level_labels()) + "\n";
    for (const auto& occ : basis) text += join_csv(counts_fields(occ)) + "\n";
    emit(cfg, out, text);
  }
  return kExitOk;
}

inline std::string expansion_csv(const DickeExpansion& x, const std::vector<std::string>* squares) {
  CsvRow header = x.species.level_labels();
  header.push_back("coefficient");
  if (squares) header.push_back("coefficient_squared");
  std::string text = join_csv(header) + "\n";
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    CsvRow row = counts_fields(x.terms[i].occupation);
    row.push_back(format_double17(x.terms[i].amplitude));
    if (squares) row.push_back((*squares)[i]);
    text += join_csv(row) + "\n";
  }
  return text;
}

inline Json expansion_json(const DickeExpansion& x, const std::vector<std::string>* squares) {
  Json j{{"spin", x.species.name()}, {"n", x.n_particles}, {"m", x.m.str()},
         {"levels", x.species.level_labels()}, {"terms", Json::array()}};
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    Json t{{"counts", x.terms[i].occupation.counts()}, {"coefficient", x.terms[i].amplitude}};
    if (squares) t["coefficient_squared"] = (*squares)[i];
    j["terms"].push_back(t);
  }
  return j;
}

inline int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg);
  const SpinSpecies species = SpinSpecies::parse(cfg.spin);
  const Magnetization m = require_m(cfg);
  const DickeExpansion x = dicke_expansion(species, cfg.n, m);
  std::vector<std::string> squares;
  for (const auto& t : x.terms)
    squares.push_back(rational_str(closed_form_coefficient_squared(species, cfg.n, m, t.occupation)));
  const auto* sq = cfg.exact ? &squares : nullptr;
  emit(cfg, out, cfg.format == OutputFormat::kJson ? dump(expansion_json(x, sq)) : expansion_csv(x, sq));
  return kExitOk;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg);
  const SpinSpecies species = SpinSpecies::parse(cfg.spin);
  const Magnetization m = require_m(cfg);
  const DickeExpansion x = oracle_expansion(species, cfg.n, m);
  std::vector<std::string> squares;
  std::size_t exact_mismatches = 0;
  if (cfg.exact) {
    const ExactExpansion e = oracle_expansion_exact(species, cfg.n, m);
    for (const auto& t : x.terms) {
      const auto it = std::find_if(e.terms.begin(), e.terms.end(),
                                   [&](const ExactTerm& et) { return et.occupation == t.occupation; });
      squares.push_back(it == e.terms.end() ? "0" : rational_str(it->amplitude_squared));
    }
    for (const auto& et : e.terms)
      if (et.amplitude_squared != closed_form_coefficient_squared(species, cfg.n, m, et.occupation))
        ++exact_mismatches;
  }
  double deviation = 0.0;
  if (cfg.diff_closed_form) {
    const DickeExpansion c = dicke_expansion(species, cfg.n, m);
    for (const auto& t : c.terms) deviation = std::max(deviation, std::abs(t.amplitude - x.amplitude(t.occupation)));
    for (const auto& t : x.terms) deviation = std::max(deviation, std::abs(t.amplitude - c.amplitude(t.occupation)));
    err << "max deviation vs closed form: " << format_double17(deviation) << "\n";
    if (cfg.exact) err << "exact squared amplitudes differing from closed form: " << exact_mismatches << "\n";
  }
  const auto* sq = cfg.exact ? &squares : nullptr;
  if (cfg.format == OutputFormat::kJson) {
    Json j = expansion_json(x, sq);
    if (cfg.diff_closed_form) {
      j["max_deviation"] = deviation;
      if (cfg.exact) j["exact_mismatches"] = exact_mismatches;
    }
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out, expansion_csv(x, sq));
  }
  const double tol = cfg.tolerance.value_or(1e-10);
  if (cfg.diff_closed_form && (deviation > tol || exact_mismatches)) {
    err << "oracle and closed form disagree beyond " << format_double17(tol) << "\n";
    return kExitProperty;
  }
  return kExitOk;
}

inline int cmd_verify_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.data_dir = cfg.data_dir;
  opt.printed_prefactors = cfg.printed_prefactors;
  if (cfg.tolerance) opt.tolerance = *cfg.tolerance;
  const auto reports = verify_tables(opt);
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (cfg.format == OutputFormat::kJson) {
    Json j{{"tolerance", opt.tolerance}, {"printed_prefactors", opt.printed_prefactors},
           {"pass", all}, {"tables", Json::array()}};
    for (const auto& r : reports) {
      Json t{{"table", r.id}, {"rows", r.rows}, {"raw_mismatches", r.raw_mismatches},
             {"raw_max_deviation", r.raw_max_deviation}, {"max_deviation_closed_form", r.max_deviation_closed_form},
             {"max_deviation_oracle", r.max_deviation_oracle}, {"basis_coverage", r.basis_coverage},
             {"errata", Json::array()}, {"problems", r.problems}, {"verdict", r.pass ? "PASS" : "FAIL"}};
      for (const auto& e : r.errata)
        t["errata"].push_back({{"m", e.erratum.m}, {"kind", e.erratum.kind}, {"verified", e.verified},
                               {"evidence", e.evidence}});
      j["tables"].push_back(t);
    }
    emit(cfg, out, dump(j));
  } else {
    std::string text =
        "table,rows,errata,raw_mismatches,max_dev_closed_form,max_dev_oracle,verdict\n";
    for (const auto& r : reports) {
      std::size_t verified = 0;
      for (const auto& e : r.errata) verified += e.verified;
      text += join_csv({r.id, std::to_string(r.rows), std::to_string(verified) + "/" + std::to_string(r.errata.size()),
                        std::to_string(r.raw_mismatches), format_double17(r.max_deviation_closed_form),
                        format_double17(r.max_deviation_oracle), r.pass ? "PASS" : "FAIL"}) +
              "\n";
    }
    emit(cfg, out, text);
  }
  for (const auto& r : reports)
    for (const auto& p : r.problems) err << r.id << ": " << p << "\n";
  return all ? kExitOk : kExitProperty;
}

inline int cmd_antisym(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SpinSpecies species = SpinSpecies::parse(cfg.spin);
  if (cfg.pair_subspace) {
    const auto rows = verify_pair_subspace(species);
    std::string text = "M,residual,best_overlap\n";
    Json j = Json::array();
    double worst = 0.0;
    for (const auto& r : rows) {
      worst = std::max(worst, r.residual);
      text += join_csv({format_half_integer(r.twice_m), format_double17(r.residual), format_double17(r.best_overlap)}) + "\n";
      j.push_back({{"m", format_half_integer(r.twice_m)}, {"residual", r.residual}, {"best_overlap", r.best_overlap}});
    }
    emit(cfg, out, cfg.format == OutputFormat::kJson ? dump(j) : text);
    err << "largest residual outside the elementary pair span: " << format_double17(worst) << "\n";
    return kExitOk;
  }
  auto states = enumerate_all_antisym(species);
  if (cfg.n) {
    if (cfg.n < 2 || cfg.n > species.levels()) throw DomainError("--n must lie between 2 and 2s+1");
    std::erase_if(states, [&](const FirstQuantizedState& s) { return s.n_particles != cfg.n; });
  }
  err << states.size() << " antisymmetric states (formula " << antisym_count(species) << " over all n)\n";
  if (cfg.format == OutputFormat::kJson) {
    Json j{{"spin", species.name()}, {"count", states.size()}, {"states", Json::array()}};
    for (const auto& s : states) {
      Json terms = Json::array();
      for (const auto& t : s.terms) {
        std::vector<std::string> ms;
        for (int tm : t.assignment) ms.push_back(format_half_integer(tm));
        terms.push_back({{"assignment", ms}, {"amplitude", t.amplitude}});
      }
      j["states"].push_back({{"particles", s.n_particles}, {"terms", terms}});
    }
    emit(cfg, out, dump(j));
  } else {
    std::string text = "state,particles,assignment,amplitude\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& t : states[i].terms) {
        std::string a;
        for (std::size_t k = 0; k < t.assignment.size(); ++k)
          a += (k ? "," : "") + format_half_integer(t.assignment[k]);
        text += join_csv({std::to_string(i + 1), std::to_string(states[i].n_particles), a,
                          format_double17(t.amplitude)}) +
                "\n";
      }
    }
    emit(cfg, out, text);
  }
  return kExitOk;
}

inline int cmd_negativity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.state.empty()) throw DomainError("--state is required");
  if (cfg.state == "dicke" || cfg.state == "equal") {
    require_n(cfg);
    const StateFamily family = cfg.state == "dicke" ? StateFamily::kDicke : StateFamily::kEqual;
    if (cfg.sweep == !cfg.m.empty()) throw DomainError("give exactly one of --m and --sweep");
    if (cfg.sweep) {
      const auto pts = negativity_sweep(family, cfg.n, Magnetization::from_twice(-2 * cfg.n),
                                        Magnetization::from_twice(2 * cfg.n), resolve_threads(cfg.threads));
      if (cfg.format == OutputFormat::kJson) {
        Json j = Json::array();
        for (const auto& p : pts) j.push_back({{"m", p.m.str()}, {"negativity", p.negativity}});
        emit(cfg, out, dump(j));
      } else {
        std::string text = "M,negativity\n";
        for (const auto& p : pts) text += p.m.str() + "," + format_fixed(p.negativity, 6) + "\n";
        emit(cfg, out, text);
      }
      return kExitOk;
    }
    const Magnetization m = require_m(cfg);
    const SpinSpecies spin1(2);
    const DickeExpansion x = family == StateFamily::kDicke ? dicke_expansion(spin1, cfg.n, m)
                                                            : equal_probability_expansion(spin1, cfg.n, m);
    const NegativityReport r = negativity(dicke_two_particle_rdm(x));
    if (cfg.format == OutputFormat::kJson) {
      Json j{{"state", cfg.state}, {"n", cfg.n}, {"m", m.str()}, {"negativity", r.value},
             {"negative_eigenvalues", r.negative_eigenvalues}};
      if (r.blocks) {
        j["blocks"] = Json::array();
        for (const auto& b : *r.blocks)
          j["blocks"].push_back({{"block", b.label}, {"eigenvalues", b.eigenvalues}, {"negativity", b.negativity}});
      }
      emit(cfg, out, dump(j));
    } else {
      emit(cfg, out, format_fixed(r.value, 6) + "\n");
    }
    return kExitOk;
  }

  if (cfg.n || !cfg.m.empty() || cfg.sweep) throw DomainError("--n, --m and --sweep apply only to dicke and equal");
  std::string name = cfg.state;
  double c1 = 0.0, c2 = 0.0;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    const std::string args = name.substr(colon + 1);
    name.resize(colon);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw DomainError("psi1 takes two coefficients, e.g. psi1:0.6,0.8");
    try {
      c1 = std::stod(args.substr(0, comma));
      c2 = std::stod(args.substr(comma + 1));
    } catch (const std::exception&) {
      throw DomainError("cannot parse psi1 coefficients '" + args + "'");
    }
  }
  const NamedState which = parse_named_state(name);
  if (which == NamedState::kPsi1 && cfg.state.find(':') == std::string::npos)
    throw DomainError("psi1 takes two coefficients, e.g. psi1:0.6,0.8");
  const PureState psi = named_two_qutrit_state(which, c1, c2);
  const NegativityReport r = negativity(density_of(psi));
  const double schmidt = schmidt_negativity_oracle(psi);
  err << "Schmidt oracle: " << format_double17(schmidt) << "\n";
  if (cfg.format == OutputFormat::kJson) {
    emit(cfg, out, dump(Json{{"state", cfg.state}, {"negativity", r.value}, {"schmidt_oracle", schmidt},
                             {"negative_eigenvalues", r.negative_eigenvalues}}));
  } else {
    emit(cfg, out, format_fixed(r.value, 6) + "\n");
  }
  if (std::abs(schmidt - r.value) > cfg.tolerance.value_or(1e-10)) {
    err << "partial-transpose and Schmidt values disagree\n";
    return kExitProperty;
  }
  return kExitOk;
}

inline int cmd_figures(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const unsigned threads = resolve_threads(cfg.threads);
  const DickeCurves curves = dicke_curves(threads);
  std::vector<ComparisonCurve> comparisons;
  for (int n : comparison_particle_numbers()) comparisons.push_back(comparison_curve(n, threads));

  std::vector<std::string> problems = check_dicke_shape(curves);
  for (const auto& c : comparisons) {
    auto p = check_comparison_shape(c);
    problems.insert(problems.end(), p.begin(), p.end());
  }
  if (!problems.empty()) {
    for (const auto& p : problems) err << "shape check failed: " << p << "\n";
    return kExitProperty;
  }

  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "fig1.csv", dicke_curves_csv(curves));
  write_file(dir / "fig1.svg", dicke_curves_svg(curves));
  for (const auto& c : comparisons) {
    const std::string stem = "fig2_n" + std::to_string(c.n);
    write_file(dir / (stem + ".csv"), comparison_csv(c));
    write_file(dir / (stem + ".svg"), comparison_svg(c));
  }
  out << "wrote fig1.csv, fig1.svg";
  for (const auto& c : comparisons) out << ", fig2_n" << c.n << ".csv, fig2_n" << c.n << ".svg";
  out << " to " << dir.string() << "\n";
  return kExitOk;
}

inline int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  if (cfg.in_path.empty()) throw DomainError("--in is required");
  if (!cfg.output_path) throw DomainError("--out is required");
  const auto series = series_from_csv(read_csv(cfg.in_path));
  const std::string svg = render_svg(series, "M", "negativity");
  write_file(*cfg.output_path, svg);
  out << "wrote " << *cfg.output_path << "\n";
  return kExitOk;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dicke states in the occupation-number representation", "dicke"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string format = "csv";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };
  auto add_sector = [&](CLI::App* sub, bool need_m) {
    sub->add_option("--spin", cfg.spin, "1/2, 1, 3/2 or 2")->capture_default_str();
    sub->add_option("--n", cfg.n, "particle count")->required();
    auto* m = sub->add_option("--m", cfg.m, "magnetization, e.g. -1 or 7/2");
    if (need_m) m->required();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output_path, "write to a file"); };
  auto positive = CLI::PositiveNumber;

  auto* basis = app.add_subcommand("basis", "occupation basis of one M sector");
  add_sector(basis, true);
  add_format(basis);
  add_output(basis);

  auto* expand = app.add_subcommand("expand", "closed-form expansion of |J,M>");
  add_sector(expand, true);
  expand->add_flag("--exact", cfg.exact, "add exact squared coefficients");
  add_format(expand);
  add_output(expand);

  auto* oracle = app.add_subcommand("oracle", "expansion by repeated lowering from |J,J>");
  add_sector(oracle, true);
  oracle->add_flag("--diff-closed-form", cfg.diff_closed_form, "report the deviation from the closed form");
  oracle->add_flag("--exact", cfg.exact, "also run the exact rational recursion");
  oracle->add_option("--tolerance", cfg.tolerance, "allowed deviation")->check(positive);
  add_format(oracle);
  add_output(oracle);

  auto* tables = app.add_subcommand("verify-tables", "replay the golden coefficient tables");
  tables->add_option("--data-dir", cfg.data_dir, "directory holding table*.csv and errata.csv")->capture_default_str();
  tables->add_flag("--printed-prefactors", cfg.printed_prefactors, "use the literal printed prefactors");
  tables->add_option("--tolerance", cfg.tolerance, "allowed deviation")->check(positive);
  add_format(tables);
  add_output(tables);

  auto* antisym = app.add_subcommand("antisym", "elementary antisymmetric states");
  antisym->add_option("--spin", cfg.spin, "1/2, 1, 3/2 or 2")->required();
  antisym->add_option("--n", cfg.n, "only states with this many particles");
  antisym->add_flag("--pair-subspace", cfg.pair_subspace, "project the J=2s-1 pair multiplet onto the pair states");
  add_format(antisym);
  add_output(antisym);

  auto* neg = app.add_subcommand("negativity", "negativity of a two-qutrit state or a spin-1 family");
  neg->add_option("--state", cfg.state, "bg|psie|psi2|bsplus|bsminus|psi1:c1,c2|dicke|equal")->required();
  neg->add_option("--n", cfg.n, "particle count (dicke, equal)");
  auto* neg_m = neg->add_option("--m", cfg.m, "magnetization (dicke, equal)");
  neg->add_flag("--sweep", cfg.sweep, "all M from -J to J")->excludes(neg_m);
  neg->add_option("--threads", cfg.threads, "worker threads")->check(positive);
  neg->add_option("--tolerance", cfg.tolerance, "allowed oracle disagreement")->check(positive);
  add_format(neg);
  add_output(neg);

  auto* figures = app.add_subcommand("figures", "negativity curves as CSV and SVG");
  figures->add_option("--out-dir", cfg.out_dir, "output directory")->capture_default_str();
  figures->add_option("--threads", cfg.threads, "worker threads")->check(positive);

  auto* plot = app.add_subcommand("plot", "render a CSV series file as SVG");
  plot->add_option("--in", cfg.in_path, "input CSV")->required();
  plot->add_option("--out", cfg.output_path, "output SVG")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  try {
    if (*basis) return detail::cmd_basis(cfg, out, err);
    if (*expand) return detail::cmd_expand(cfg, out);
    if (*oracle) return detail::cmd_oracle(cfg, out, err);
    if (*tables) return detail::cmd_verify_tables(cfg, out, err);
    if (*antisym) return detail::cmd_antisym(cfg, out, err);
    if (*neg) return detail::cmd_negativity(cfg, out, err);
    if (*figures) return detail::cmd_figures(cfg, out, err);
    if (*plot) return detail::cmd_plot(cfg, out);
  } catch (const MissingData& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingData;
  } catch (const PropertyViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitProperty;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dicke

#endif  // DICKE_CLI_HPP

#include "lowzero/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "lowzero/bounds.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/fredholm.hpp"
#include "lowzero/grid_function.hpp"
#include "lowzero/kernels.hpp"

namespace lowzero::cli {

namespace {

using nlohmann::json;

constexpr double kGapTolerance = 1e-6;

std::string format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "?";
}

// shortest round-trip decimal, used everywhere except text tables
std::string full_repr(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string rounded(double v, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

json config_json(const RunConfig& cfg) {
  json j{{"grid_n", cfg.grid_n},
         {"format", format_name(cfg.format)},
         {"precision", cfg.precision}};
  if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
  return j;
}

void emit_json(std::ostream& out, const RunConfig& cfg, const std::string& command,
               json results, json provenance) {
  json j{{"command", command},
         {"config", config_json(cfg)},
         {"results", std::move(results)},
         {"provenance", std::move(provenance)}};
  out << j.dump(2) << '\n';
}

std::string level_name(Level level) {
  switch (level) {
    case Level::OneLevelSupport2: return "one2";
    case Level::OneLevelSupport3: return "one3";
    case Level::TwoLevel: return "two";
  }
  return "?";
}

Level parse_level(const std::string& s) {
  if (s == "one2") return Level::OneLevelSupport2;
  if (s == "one3") return Level::OneLevelSupport3;
  if (s == "two") return Level::TwoLevel;
  throw std::invalid_argument("unknown level '" + s + "'");
}

SymmetryGroup require_group(const std::string& name) {
  auto g = parse_group(name);
  if (!g)
    throw std::invalid_argument("unknown group '" + name +
                                "' (expected so-even, so-odd, o, u, sp)");
  return *g;
}

// --- commands -------------------------------------------------------------

struct Table1Row {
  SymmetryGroup group;
  double naive, optimal, numeric, gap;
};

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  std::vector<Table1Row> rows;
  for (SymmetryGroup g : kAllGroups) {
    const BoundReport analytic = optimal_value(g);
    const BoundReport numeric = nystrom_value(g, cfg.grid_n);
    rows.push_back({g, analytic.naive_value, analytic.optimal_value,
                    numeric.optimal_value,
                    std::abs(analytic.optimal_value - numeric.optimal_value)});
  }

  switch (cfg.format) {
    case Format::Csv:
      out << "group,naive,optimal,numeric,gap\n";
      for (const auto& r : rows)
        out << group_name(r.group) << ',' << full_repr(r.naive) << ','
            << full_repr(r.optimal) << ',' << full_repr(r.numeric) << ','
            << full_repr(r.gap) << '\n';
      break;
    case Format::Json: {
      json results = json::array();
      for (const auto& r : rows)
        results.push_back({{"group", group_name(r.group)},
                           {"naive", r.naive},
                           {"optimal", r.optimal},
                           {"numeric", r.numeric},
                           {"gap", r.gap}});
      emit_json(out, cfg, "table1", results,
                {{"naive", "functional at the trivial test function"},
                 {"optimal", "closed-form c_G / <1, g>"},
                 {"numeric", "nystrom check at grid_n nodes"},
                 {"gap_tolerance", kGapTolerance}});
      break;
    }
    case Format::Text:
      out << std::left << std::setw(9) << "group" << std::setw(14) << "naive"
          << std::setw(14) << "optimal" << std::setw(14) << "numeric"
          << "gap\n";
      for (const auto& r : rows)
        out << std::left << std::setw(9) << group_name(r.group) << std::setw(14)
            << rounded(r.naive, cfg.precision) << std::setw(14)
            << rounded(r.optimal, cfg.precision) << std::setw(14)
            << rounded(r.numeric, cfg.precision) << rounded(r.gap, 3) << '\n';
      break;
  }

  for (const auto& r : rows)
    if (!(r.gap <= kGapTolerance)) return 1;
  return 0;
}

int cmd_vanishing(SymmetryGroup g, std::int64_t rank, Level level, const RunConfig& cfg,
                  std::ostream& out) {
  const double bound = upper_bound_order(g, rank, level);

  std::string constant_desc;
  double constant_value = 0.0;
  double divisor = 0.0;
  if (level == Level::TwoLevel) {
    constant_desc = "two-level optimal value";
    constant_value = optimal_value(g).optimal_value;
    const std::int64_t effective =
        rank_parity(g) == RankParity::Any ? std::max<std::int64_t>(rank, 3) : rank;
    divisor = static_cast<double>(central_point_coefficient(effective));
  } else {
    const int support = level == Level::OneLevelSupport2 ? 2 : 3;
    constant_desc = "one-level optimal value (support " + std::to_string(support) + ")";
    constant_value = reference_one_level(g, support);
    divisor = static_cast<double>(rank);
  }

  switch (cfg.format) {
    case Format::Csv:
      out << "group,rank,level,bound\n"
          << group_name(g) << ',' << rank << ',' << level_name(level) << ','
          << full_repr(bound) << '\n';
      break;
    case Format::Json:
      emit_json(out, cfg, "vanishing",
                {{"group", group_name(g)},
                 {"rank", rank},
                 {"level", level_name(level)},
                 {"bound", bound}},
                {{"constant", constant_desc},
                 {"constant_value", constant_value},
                 {"divisor", divisor}});
      break;
    case Format::Text:
      out << "Prob(order >= " << rank << ") <= " << rounded(bound, cfg.precision)
          << "  [" << group_name(g) << ", " << level_name(level) << "]\n"
          << "using " << constant_desc << " " << rounded(constant_value, cfg.precision)
          << " / " << rounded(divisor, cfg.precision) << '\n';
      break;
  }
  return 0;
}

int cmd_lower_bound(SymmetryGroup g, int k, Level level, const RunConfig& cfg,
                    std::ostream& out) {
  const double bound = lower_bound_low_rank(g, k, level);

  std::string covered;
  switch (rank_parity(g)) {
    case RankParity::Even: covered = "even ranks 0.." + std::to_string(2 * k); break;
    case RankParity::Odd: covered = "odd ranks 1.." + std::to_string(2 * k + 1); break;
    case RankParity::Any: covered = "ranks 0..2"; break;
  }

  switch (cfg.format) {
    case Format::Csv:
      out << "group,k,level,bound\n"
          << group_name(g) << ',' << k << ',' << level_name(level) << ','
          << full_repr(bound) << '\n';
      break;
    case Format::Json:
      emit_json(out, cfg, "lower-bound",
                {{"group", group_name(g)},
                 {"k", k},
                 {"level", level_name(level)},
                 {"bound", bound}},
                {{"covers", covered}});
      break;
    case Format::Text:
      out << "Prob(" << covered << ") >= " << rounded(bound, cfg.precision) << "  ["
          << group_name(g) << ", " << level_name(level) << "]\n";
      break;
  }
  return 0;
}

int cmd_iterate(SymmetryGroup g, int terms, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const IteratedWeight iw = build_iterated_weight(g, cfg.grid_n);
  const NeumannResult res = neumann_iterate(iw.weight.kernel, terms);
  const double c = iw.weight.c_const;
  const double final_bound = c / res.partial_sums.back();

  if (!res.certified)
    err << "warning: contraction norm_sq = " << rounded(res.norm_sq, 6)
        << " >= 1; truncation error is not certified\n";

  switch (cfg.format) {
    case Format::Csv:
      out << "term,partial_sum,bound\n";
      for (std::size_t n = 0; n < res.partial_sums.size(); ++n)
        out << n << ',' << full_repr(res.partial_sums[n]) << ','
            << full_repr(c / res.partial_sums[n]) << '\n';
      break;
    case Format::Json: {
      json steps = json::array();
      for (std::size_t n = 0; n < res.partial_sums.size(); ++n)
        steps.push_back({{"term", n},
                         {"partial_sum", res.partial_sums[n]},
                         {"bound", c / res.partial_sums[n]}});
      emit_json(out, cfg, "iterate",
                {{"group", group_name(g)},
                 {"c_const", c},
                 {"norm_sq", res.norm_sq},
                 {"certified", res.certified},
                 {"terms_alternating_nonneg", res.terms_alternating_nonneg},
                 {"steps", steps},
                 {"final_bound", final_bound}},
                {{"kernel", "weight built from phi_hat = g * g~ of the closed-form solution"},
                 {"certificate", "iint m(x-y)^2 dx dy < 1"}});
      break;
    }
    case Format::Text:
      out << "group      " << group_name(g) << '\n'
          << "c constant " << rounded(c, cfg.precision) << '\n'
          << "norm_sq    " << rounded(res.norm_sq, cfg.precision)
          << (res.certified ? "  (certified contraction)" : "  (NOT a contraction)")
          << '\n'
          << "signed terms nonnegative: "
          << (res.terms_alternating_nonneg ? "yes" : "no") << '\n';
      out << std::left << std::setw(6) << "term" << std::setw(16) << "partial_sum"
          << "bound\n";
      for (std::size_t n = 0; n < res.partial_sums.size(); ++n)
        out << std::left << std::setw(6) << n << std::setw(16)
            << rounded(res.partial_sums[n], cfg.precision)
            << rounded(c / res.partial_sums[n], cfg.precision) << '\n';
      out << "final bound " << rounded(final_bound, cfg.precision) << '\n';
      break;
  }
  return 0;
}

int cmd_dump(const std::string& what, SymmetryGroup g, const RunConfig& cfg,
             std::ostream& out) {
  std::vector<std::pair<double, double>> points;
  if (what == "g") {
    const TrigSolution sol = solve_quadratic(quadratic_coefficients(g));
    const double h = 1.0 / (cfg.grid_n - 1);
    points.reserve(static_cast<std::size_t>(cfg.grid_n));
    for (int i = 0; i < cfg.grid_n; ++i) {
      const double x = -0.5 + i * h;
      points.emplace_back(x, sol(x));
    }
  } else if (what == "phi-hat") {
    const IteratedWeight iw = build_iterated_weight(g, cfg.grid_n);
    for (int i = 0; i < iw.phi_hat.size(); ++i)
      points.emplace_back(iw.phi_hat.node(i), iw.phi_hat[i]);
  } else if (what == "kernel") {
    const GridFunction kernel =
        sample_kernel(quadratic_coefficients(g), 2 * cfg.grid_n - 1);
    for (int i = 0; i < kernel.size(); ++i)
      points.emplace_back(kernel.node(i), kernel[i]);
  } else {
    throw std::invalid_argument("dump: unknown object '" + what + "'");
  }

  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (auto [x, v] : points) rows.push_back({{"x", x}, {"value", v}});
    emit_json(out, cfg, "dump", {{"group", group_name(g)}, {"what", what}, {"points", rows}},
              {{"object", what}});
  } else {
    out << "x,value\n";
    for (auto [x, v] : points)
      out << full_repr(x) << ',' << full_repr(v) << '\n';
  }
  return 0;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"optimal 2-level test functions and vanishing bounds for the classical compact groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_str = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--grid-n", cfg.grid_n, "odd quadrature node count >= 41")
        ->check(CLI::Range(41, 100001));
    sub->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--precision", cfg.precision, "printed significant digits")
        ->check(CLI::Range(3, 17));
    sub->add_option("--out", cfg.out_path, "write results to this file");
  };

  std::string group_str;
  std::int64_t rank = 0;
  int k = 0;
  bool k_given = false;
  std::string level_str = "two";
  int terms = 5;
  std::string what;

  CLI::App* table1 = app.add_subcommand("table1", "naive vs optimal 2-level values");
  add_common(table1);

  CLI::App* vanishing =
      app.add_subcommand("vanishing", "upper bound on vanishing to a given order");
  vanishing->add_option("--group", group_str)->required();
  vanishing->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  vanishing->add_option("--level", level_str)->check(CLI::IsMember({"one2", "one3", "two"}));
  add_common(vanishing);

  CLI::App* lower =
      app.add_subcommand("lower-bound", "lower bound on the proportion of low rank");
  lower->add_option("--group", group_str)->required();
  lower->add_option("--k", k)->check(CLI::PositiveNumber);
  lower->add_option("--level", level_str)->check(CLI::IsMember({"one2", "one3", "two"}));
  add_common(lower);

  CLI::App* iterate = app.add_subcommand("iterate", "Neumann iteration on the rebuilt weight");
  iterate->add_option("--group", group_str)->required();
  iterate->add_option("--terms", terms)->check(CLI::PositiveNumber);
  add_common(iterate);

  CLI::App* dump = app.add_subcommand("dump", "export g, phi-hat or the kernel as CSV");
  dump->add_option("what", what)->required()->check(CLI::IsMember({"g", "phi-hat", "kernel"}));
  dump->add_option("--group", group_str)->required();
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  k_given = lower->count("--k") > 0;

  if (cfg.grid_n % 2 == 0) {
    err << "error: --grid-n must be odd\n";
    return 2;
  }
  cfg.format = format_str == "csv" ? Format::Csv
              : format_str == "json" ? Format::Json
                                     : Format::Text;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return 1;
    }
    sink = &file;
  }

  int rc = 0;
  if (table1->parsed()) {
    rc = cmd_table1(cfg, *sink);
  } else if (vanishing->parsed()) {
    rc = cmd_vanishing(require_group(group_str), rank, parse_level(level_str), cfg, *sink);
  } else if (lower->parsed()) {
    const SymmetryGroup g = require_group(group_str);
    if (!k_given) k = rank_parity(g) == RankParity::Any ? 2 : 1;
    rc = cmd_lower_bound(g, k, parse_level(level_str), cfg, *sink);
  } else if (iterate->parsed()) {
    rc = cmd_iterate(require_group(group_str), terms, cfg, *sink, err);
  } else if (dump->parsed()) {
    rc = cmd_dump(what, require_group(group_str), cfg, *sink);
  }

  if (sink == &file) {
    file.flush();
    if (!file) {
      err << "error: write to '" << cfg.out_path << "' failed\n";
      return 1;
    }
  }
  return rc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lowzero::cli

// nekbounds: classify matrices, report inverse infinity-norm bounds,
// reproduce comparison tables, and export mu-sweep plot data.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nek/bounds.hpp"
#include "nek/errors.hpp"
#include "nek/io.hpp"
#include "nek/nekrasov.hpp"
#include "nek/oracle.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;         // usage, I/O and parse failures
constexpr int kExitInapplicable = 2;  // the mathematics does not apply

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

const char* verdict_name(nek::Verdict v) {
  switch (v) {
    case nek::Verdict::Sdd:
      return "SDD";
    case nek::Verdict::NekrasovNotSdd:
      return "NEKRASOV_NOT_SDD";
    default:
      return "NOT_NEKRASOV";
  }
}

const char* case_name(nek::OptimalCase c) {
  return c == nek::OptimalCase::StrictImprovement ? "strict_improvement"
                                                  : "equals_baseline";
}

std::string join4(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += fmt4(xs[i]);
  }
  return out;
}

std::string basename_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::optional<nek::SquareMatrix> try_load(const std::string& path) {
  try {
    return nek::load_matrix_file(path);
  } catch (const nek::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", path.c_str(), e.what());
    return std::nullopt;
  }
}

double dominance_margin(const nek::SquareMatrix& a,
                        const nek::NekrasovProfile& p) {
  double margin = a.abs_at(0, 0) - p.h[0];
  for (std::size_t i = 1; i < p.n; ++i) {
    margin = std::min(margin, a.abs_at(i, i) - p.h[i]);
  }
  return margin;
}

int run_classify(const std::string& path, bool as_json) {
  const auto a = try_load(path);
  if (!a) {
    return kExitUsage;
  }
  const nek::NekrasovProfile p = nek::classify(*a);
  const bool have = p.has_quantities();

  if (as_json) {
    json j;
    j["file"] = path;
    j["n"] = p.n;
    j["verdict"] = verdict_name(p.verdict);
    j["r"] = p.r;
    j["h"] = p.h;
    j["z"] = p.z;
    j["h_ratio"] = p.h_ratio;
    j["margin"] = have ? json(dominance_margin(*a, p)) : json(nullptr);
    j["witness_row"] = p.witness ? json(*p.witness + 1) : json(nullptr);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("file: %s\n", path.c_str());
    std::printf("n: %zu\n", p.n);
    std::printf("verdict: %s\n", verdict_name(p.verdict));
    std::printf("r: %s\n", join4(p.r).c_str());
    std::printf("h: %s\n", have ? join4(p.h).c_str() : "--");
    std::printf("z: %s\n", have ? join4(p.z).c_str() : "--");
    std::printf("h/|a_ii|: %s\n", have ? join4(p.h_ratio).c_str() : "--");
    std::printf("margin: %s\n",
                have ? fmt4(dominance_margin(*a, p)).c_str() : "--");
    if (p.witness) {
      std::printf("witness: row %zu\n", *p.witness + 1);
    }
  }
  return p.is_nekrasov() ? kExitOk : kExitInapplicable;
}

int run_bounds(const std::string& path, std::optional<double> mu,
               bool with_oracle, bool as_json) {
  const auto a = try_load(path);
  if (!a) {
    return kExitUsage;
  }
  const nek::NekrasovProfile p = nek::classify(*a);
  const nek::BoundReport report = nek::full_report(*a, mu);

  std::optional<nek::ExactNorm> exact;
  if (with_oracle) {
    exact = nek::exact_inverse_inf_norm(*a);
    if (exact->near_singular()) {
      std::fprintf(stderr,
                   "warning: pivot growth %.3g is extreme; the exact norm "
                   "may be inaccurate\n",
                   exact->pivot_growth);
    }
  }
  if (mu && !report.param_ratio) {
    std::fprintf(stderr,
                 "note: mu = %s is not admissible (threshold %s); "
                 "parametrized bounds omitted\n",
                 fmtg(*mu).c_str(), fmtg(p.r[0] / a->abs_at(0, 0)).c_str());
  }

  if (as_json) {
    json j;
    j["file"] = path;
    j["n"] = a->dim();
    j["verdict"] = verdict_name(p.verdict);
    if (exact) {
      j["exact"] = {{"value", exact->value},
                    {"pivot_growth", exact->pivot_growth}};
    } else {
      j["exact"] = nullptr;
    }
    j["varah"] = report.varah ? json(*report.varah) : json(nullptr);
    j["baseline_ratio"] = report.baseline_ratio;
    j["baseline_diff"] = report.baseline_diff;
    j["param_ratio"] = report.param_ratio
                           ? json{{"mu", report.param_ratio->mu},
                                  {"value", report.param_ratio->value}}
                           : json(nullptr);
    j["param_diff"] = report.param_diff
                          ? json{{"mu", report.param_diff->mu},
                                 {"value", report.param_diff->value}}
                          : json(nullptr);
    j["optimal_ratio"] =
        report.optimal_ratio
            ? json{{"mu_star", report.optimal_ratio->mu_star},
                   {"value", report.optimal_ratio->value},
                   {"case", case_name(report.optimal_ratio->case_tag)}}
            : json(nullptr);
    j["optimal_diff"] =
        report.optimal_diff
            ? json{{"mu_star", report.optimal_diff->mu_star},
                   {"value", report.optimal_diff->value},
                   {"case", case_name(report.optimal_diff->case_tag)}}
            : json(nullptr);
    j["margin"] = report.margin;
    std::printf("%s\n", j.dump(2).c_str());
    return kExitOk;
  }

  std::printf("file: %s\n", path.c_str());
  std::printf("n: %zu\n", a->dim());
  std::printf("verdict: %s\n", verdict_name(p.verdict));
  if (exact) {
    std::printf("exact: %s (pivot growth %s)\n", fmt4(exact->value).c_str(),
                fmt4(exact->pivot_growth).c_str());
  }
  std::printf("varah: %s\n",
              report.varah ? fmt4(*report.varah).c_str() : "--");
  std::printf("baseline-ratio: %s\n", fmt4(report.baseline_ratio).c_str());
  std::printf("baseline-diff: %s\n", fmt4(report.baseline_diff).c_str());
  if (report.param_ratio) {
    std::printf("param-ratio (mu=%s): %s\n",
                fmt4(report.param_ratio->mu).c_str(),
                fmt4(report.param_ratio->value).c_str());
    std::printf("param-diff (mu=%s): %s\n",
                fmt4(report.param_diff->mu).c_str(),
                fmt4(report.param_diff->value).c_str());
  }
  if (report.optimal_ratio) {
    std::printf("optimal-ratio: %s (mu* = %s, %s)\n",
                fmt4(report.optimal_ratio->value).c_str(),
                fmt4(report.optimal_ratio->mu_star).c_str(),
                case_name(report.optimal_ratio->case_tag));
    std::printf("optimal-diff: %s (mu* = %s, %s)\n",
                fmt4(report.optimal_diff->value).c_str(),
                fmt4(report.optimal_diff->mu_star).c_str(),
                case_name(report.optimal_diff->case_tag));
  }
  std::printf("margin: %s\n", fmt4(report.margin).c_str());
  return kExitOk;
}

int run_table(const std::vector<std::string>& paths) {
  struct Column {
    std::string name;
    std::optional<double> exact, varah, b1, o1, b2, o2;
  };
  std::vector<Column> columns;
  for (const auto& path : paths) {
    const auto a = try_load(path);
    if (!a) {
      return kExitUsage;  // abort on the failing path
    }
    Column col;
    col.name = basename_of(path);
    try {
      col.exact = nek::exact_inverse_inf_norm(*a).value;
    } catch (const nek::SingularMatrix&) {
    }
    const nek::NekrasovProfile p = nek::classify(*a);
    if (p.is_nekrasov()) {
      if (p.verdict == nek::Verdict::Sdd) {
        col.varah = nek::varah_bound(*a);
      }
      col.b1 = nek::bound_baseline_ratio(*a);
      col.b2 = nek::bound_baseline_diff(*a);
      if (a->dim() >= 2) {
        col.o1 = nek::optimal_mu_ratio(*a).value;
        col.o2 = nek::optimal_mu_diff(*a).value;
      }
    }
    columns.push_back(std::move(col));
  }

  int width = 8;
  for (const auto& col : columns) {
    width = std::max(width, static_cast<int>(col.name.size()));
  }

  const auto cell = [](const std::optional<double>& v) {
    return v ? fmt4(*v) : std::string("--");
  };
  const auto print_row = [&](const char* label, auto get) {
    std::printf("%-14s", label);
    for (const auto& col : columns) {
      std::printf("  %*s", width, get(col).c_str());
    }
    std::printf("\n");
  };

  print_row("matrix", [&](const Column& c) { return c.name; });
  print_row("exact", [&](const Column& c) { return cell(c.exact); });
  print_row("varah", [&](const Column& c) { return cell(c.varah); });
  print_row("baseline-ratio", [&](const Column& c) { return cell(c.b1); });
  print_row("optimal-ratio", [&](const Column& c) { return cell(c.o1); });
  print_row("baseline-diff", [&](const Column& c) { return cell(c.b2); });
  print_row("optimal-diff", [&](const Column& c) { return cell(c.o2); });
  return kExitOk;
}

int run_sweep(const std::string& path, double mu_min, double mu_max,
              double step, bool as_json) {
  const auto a = try_load(path);
  if (!a) {
    return kExitUsage;
  }
  const nek::MuSweep sweep = nek::mu_sweep(*a, mu_min, mu_max, step);
  const double b1 = nek::bound_baseline_ratio(*a);
  const double b2 = nek::bound_baseline_diff(*a);

  if (as_json) {
    json rows = json::array();
    for (const auto& row : sweep.rows) {
      rows.push_back({{"mu", row.mu},
                      {"bound_ratio", row.bound_ratio},
                      {"bound_diff", row.bound_diff}});
    }
    json j;
    j["file"] = path;
    j["mu_min"] = sweep.mu_min;
    j["mu_max"] = sweep.mu_max;
    j["step"] = sweep.step;
    j["baseline_ratio"] = b1;
    j["baseline_diff"] = b2;
    j["rows"] = rows;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("mu,bound_ratio,bound_diff,baseline_ratio,baseline_diff\n");
    for (const auto& row : sweep.rows) {
      std::printf("%s,%s,%s,%s,%s\n", fmtg(row.mu).c_str(),
                  fmtg(row.bound_ratio).c_str(), fmtg(row.bound_diff).c_str(),
                  fmtg(b1).c_str(), fmtg(b2).c_str());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse infinity-norm bounds for Nekrasov matrices"};
  app.require_subcommand(1);

  std::string classify_file;
  std::string classify_format = "text";
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify a matrix and print its dominance profile");
  classify_cmd->add_option("file", classify_file, "matrix file")->required();
  classify_cmd->add_option("--format", classify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string bounds_file;
  std::string bounds_format = "text";
  std::optional<double> bounds_mu;
  bool bounds_oracle = false;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Print every applicable bound on ||A^-1||_inf");
  bounds_cmd->add_option("file", bounds_file, "matrix file")->required();
  bounds_cmd->add_option("--mu", bounds_mu,
                         "also evaluate the parametrized bounds at this mu");
  bounds_cmd->add_flag("--oracle", bounds_oracle,
                       "also compute the exact norm by LU factorization");
  bounds_cmd->add_option("--format", bounds_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> table_files;
  auto* table_cmd = app.add_subcommand(
      "table", "Bound comparison table for several matrices");
  table_cmd->add_option("files", table_files, "matrix files")
      ->required()
      ->expected(-1);

  std::string sweep_file;
  std::string sweep_format = "csv";
  double sweep_min = 0.5;
  double sweep_max = 2.0;
  double sweep_step = 0.01;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate the parametrized bounds over a mu grid");
  sweep_cmd->add_option("file", sweep_file, "matrix file")->required();
  sweep_cmd->add_option("--mu-min", sweep_min, "grid start (default 0.5)");
  sweep_cmd->add_option("--mu-max", sweep_max, "grid end (default 2.0)");
  sweep_cmd->add_option("--step", sweep_step, "grid step (default 0.01)");
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      return run_classify(classify_file, classify_format == "json");
    }
    if (bounds_cmd->parsed()) {
      return run_bounds(bounds_file, bounds_mu, bounds_oracle,
                        bounds_format == "json");
    }
    if (table_cmd->parsed()) {
      return run_table(table_files);
    }
    return run_sweep(sweep_file, sweep_min, sweep_max, sweep_step,
                     sweep_format == "json");
  } catch (const nek::NotNekrasov& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::NotSdd& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::MuOutOfRange& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::EmptyGrid& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::ZeroDiagonal& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::SingularMatrix& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const nek::DimensionTooSmall& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInapplicable;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}

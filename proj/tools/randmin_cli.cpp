// Command-line front end for the randmin library.

#include "randmin/closed_form.hpp"
#include "randmin/exact_enum.hpp"
#include "randmin/montecarlo.hpp"
#include "randmin/oracle.hpp"
#include "randmin/report.hpp"
#include "randmin/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace randmin;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kCap = 3 };

enum class Format { text, csv, json };

struct Global {
  Format format = Format::text;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::string output;
  double log_base = 0.0;  // 0: use sigma
};

struct Triple {
  int sigma = 2;
  int k = 2;
  int w = 2;
  Params params() const { return Params::make(sigma, k, w); }
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("--sigma,-s", t.sigma, "alphabet size")->capture_default_str();
  cmd->add_option("-k", t.k, "k-mer length")->capture_default_str();
  cmd->add_option("-w", t.w, "k-mers per window")->capture_default_str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit_report(const Global& g, const DensityReport& r) {
  Output out(g.output);
  switch (g.format) {
    case Format::json: out.os() << r.to_json().dump() << '\n'; break;
    case Format::csv: out.os() << DensityReport::csv_header() << '\n' << r.to_csv_row() << '\n'; break;
    case Format::text: out.os() << r.to_text(); break;
  }
}

/// Emits rows of a uniform record set: CSV with a header, JSON lines, or
/// aligned text.
void emit_rows(const Global& g, const std::vector<std::string>& columns, const std::vector<json>& rows) {
  Output out(g.output);
  auto cell = [](const json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_float(v.get<double>());
    return v.dump();
  };
  if (g.format == Format::json) {
    for (const auto& r : rows) out.os() << r.dump() << '\n';
    return;
  }
  const char sep = g.format == Format::csv ? ',' : '\t';
  for (std::size_t i = 0; i < columns.size(); ++i) out.os() << (i ? std::string(1, sep) : "") << columns[i];
  out.os() << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out.os() << (i ? std::string(1, sep) : "") << (r.contains(columns[i]) ? cell(r[columns[i]]) : "");
    }
    out.os() << '\n';
  }
}

json rational_cell(const BigRational& q) { return to_string(q); }

// ---- exact / closed-form ---------------------------------------------------

int cmd_exact(const Global& g, const Triple& t, const std::string& algo, std::uint64_t cap) {
  const Params p = t.params();
  const auto t0 = std::chrono::steady_clock::now();
  BigRational dr;
  if (algo == "naive") {
    dr = exact_density_naive(p, {cap, g.threads});
  } else {
    dr = exact_density_fast(p, parse_engine(algo), {cap, g.threads});
  }
  emit_report(g, DensityReport::from_density(p, dr, algo, seconds_since(t0)));
  return kOk;
}

int cmd_closed_form(const Global& g, const Triple& t) {
  const Params p = t.params();
  const auto t0 = std::chrono::steady_clock::now();
  const BigRational dr = density_closed_form(p);
  emit_report(g, DensityReport::from_density(p, dr, "closed-form", seconds_since(t0)));
  return kOk;
}

// ---- delta / prim / crossing -----------------------------------------------

int cmd_delta(const Global& g, int sigma, int w_lo, int w_hi) {
  if (w_hi < w_lo) w_hi = w_lo;
  std::vector<json> rows;
  for (int w = w_lo; w <= w_hi; ++w) {
    const BigRational d = delta(sigma, w);
    json row{{"sigma", sigma}, {"w", w}, {"delta", rational_cell(d)}, {"delta_float", to_double(d)}};
    if (w <= 10) {
      const BigRational pub = published_delta_polynomial(sigma, w);
      row["published"] = rational_cell(pub);
      row["matches_published"] = d == pub;
    }
    rows.push_back(std::move(row));
  }
  emit_rows(g, {"sigma", "w", "delta", "delta_float", "published", "matches_published"}, rows);
  return kOk;
}

int cmd_prim(const Global& g, int sigma, int p_max) {
  const PrimTable table(sigma, p_max);
  std::vector<json> rows;
  for (int p = 1; p <= p_max; ++p) {
    const BigInt m = prim_mobius(sigma, p);
    rows.push_back({{"sigma", sigma}, {"p", p}, {"prim", to_string(table[p])}, {"mobius_agrees", m == table[p]}});
  }
  emit_rows(g, {"sigma", "p", "prim", "mobius_agrees"}, rows);
  return kOk;
}

int cmd_crossing(const Global& g, int sigma, int w_cap) {
  const CrossingReport r = find_crossing(sigma, w_cap);
  json row{{"sigma", r.sigma},
           {"w_cap", r.w_cap},
           {"first_negative", r.first_negative ? json(*r.first_negative) : json(nullptr)},
           {"sign_changes", r.sign_changes},
           {"single_change", r.single_change()}};
  if (g.format == Format::text) {
    Output out(g.output);
    out.os() << (r.first_negative ? std::to_string(*r.first_negative) : std::string("none")) << '\n'
             << "sign changes of Dev on [1, " << w_cap << "]: " << r.sign_changes << '\n';
    return kOk;
  }
  emit_rows(g, {"sigma", "w_cap", "first_negative", "sign_changes", "single_change"}, {row});
  return kOk;
}

// ---- table / plot ------------------------------------------------------------

int cmd_table(const Global& g, int sigma, int k_min, int k_max) {
  if (k_min < 2 || k_max < k_min) throw InvalidParams("table needs 2 <= k_min <= k_max");
  const double base = g.log_base > 0 ? g.log_base : sigma;
  const std::vector<BigRational> dev = deviation_series(sigma, k_max);
  // DFR - 2 = (w+1) Dev(w) / sigma^(w+k)
  auto excess = [&](int k, int w) -> BigRational {
    return dev[static_cast<std::size_t>(w - 1)] * BigRational(w + 1) /
           BigRational(big_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(w + k)));
  };

  if (g.format == Format::text) {
    Output out(g.output);
    out.os() << "log_" << format_float(base) << "|DFR - 2|, sigma=" << sigma << " (* marks DFR < 2)\n" << std::setw(4) << "k\\w";
    for (int w = 2; w <= k_max; ++w) out.os() << std::setw(8) << w;
    out.os() << '\n';
    for (int k = k_min; k <= k_max; ++k) {
      out.os() << std::setw(4) << k;
      for (int w = 2; w <= k; ++w) {
        const BigRational e = excess(k, w);
        const auto v = log_abs_base(e, base);
        std::ostringstream cell;
        if (v) cell << std::fixed << std::setprecision(1) << *v << (sgn(e) < 0 ? "*" : "");
        else cell << "0";
        out.os() << std::setw(8) << cell.str();
      }
      out.os() << '\n';
    }
    return kOk;
  }

  std::vector<json> rows;
  for (int k = k_min; k <= k_max; ++k) {
    for (int w = 2; w <= k; ++w) {
      const BigRational e = excess(k, w);
      const auto v = log_abs_base(e, base);
      rows.push_back({{"sigma", sigma},
                      {"k", k},
                      {"w", w},
                      {"log_abs_dfr_minus_2", v ? json(*v) : json(nullptr)},
                      {"sign", sign_label(e + BigRational(2))},
                      {"dfr_minus_2", to_double(e)}});
    }
  }
  emit_rows(g, {"sigma", "k", "w", "log_abs_dfr_minus_2", "sign", "dfr_minus_2"}, rows);
  return kOk;
}

int cmd_plot(const Global& g, int sigma, int k, int w_max, std::uint64_t exact_cap, std::uint64_t mc_n, int mc_reps) {
  if (w_max < 1) throw InvalidParams("plot needs w_max >= 1");
  std::vector<json> rows;
  const double floor_curve = std::pow(static_cast<double>(sigma), -k);
  for (int w = 1; w <= w_max; ++w) {
    const Params p = Params::make(sigma, k, w);
    json row{{"w", w},
             {"curve_2_over_w_plus_1", 2.0 / (w + 1)},
             {"curve_sigma_minus_k", floor_curve},
             {"bigw_upper_bound", bigw_upper_bound(p)}};
    bool have_exact = false;
    if (w <= k) {
      row["dr_closed_form"] = to_double(density_closed_form(p));
      have_exact = true;
    }
    const auto contexts = checked_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(w + k));
    if (contexts && *contexts <= exact_cap) {
      row["dr_exact"] = to_double(exact_density_fast(p, Engine::dict, {exact_cap, g.threads}));
      have_exact = true;
    }
    if (!have_exact) {
      const std::uint64_t n = std::max<std::uint64_t>(mc_n, 10 * static_cast<std::uint64_t>(w + k));
      const McEstimate e = mc_density(p, {n, mc_reps, g.seed, g.threads});
      row["dr_mc"] = e.mean;
      row["dr_mc_std_error"] = e.std_error;
    }
    rows.push_back(std::move(row));
  }
  emit_rows(g,
            {"w", "curve_2_over_w_plus_1", "curve_sigma_minus_k", "dr_closed_form", "dr_exact", "dr_mc",
             "dr_mc_std_error", "bigw_upper_bound"},
            rows);
  return kOk;
}

// ---- mc / bigw-bound ---------------------------------------------------------

int cmd_mc(const Global& g, const Triple& t, std::uint64_t n, int reps, const std::string& estimator) {
  const Params p = t.params();
  const McOptions opts{n, reps, g.seed, g.threads};
  McEstimate e;
  if (estimator == "markup") {
    e = mc_density(p, opts);
  } else if (estimator == "gamechanger") {
    e = mc_gamechanger_density(p, opts);
  } else if (estimator == "context") {
    e = mc_context_density(p, opts);
  } else {
    throw InvalidParams("unknown estimator '" + estimator + "' (expected markup, gamechanger or context)");
  }
  json row{{"sigma", p.sigma}, {"k", p.k},         {"w", p.w},
           {"n", n},           {"estimator", estimator}, {"mean", e.mean},
           {"std_error", e.std_error}, {"replicates", e.replicates}, {"total_windows", e.total_windows},
           {"seed", e.seed}};
  if (g.format == Format::text) {
    Output out(g.output);
    out.os() << to_string(p) << " estimator=" << estimator << " n=" << n << '\n'
             << "mean = " << format_float(e.mean) << " +- " << format_float(e.std_error) << " (" << e.replicates
             << " replicates, seed " << e.seed << ")\n";
    return kOk;
  }
  emit_rows(g, {"sigma", "k", "w", "n", "estimator", "mean", "std_error", "replicates", "total_windows", "seed"}, {row});
  return kOk;
}

int cmd_bigw_bound(const Global& g, const Triple& t) {
  const Params p = t.params();
  const double bound = bigw_upper_bound(p);
  json row{{"sigma", p.sigma},
           {"k", p.k},
           {"w", p.w},
           {"bound", bound},
           {"sigma_minus_k", std::pow(static_cast<double>(p.sigma), -p.k)},
           {"bigw_window", bigw_window(p.sigma, p.k)}};
  if (g.format == Format::text) {
    Output out(g.output);
    out.os() << format_float(bound) << '\n';
    return kOk;
  }
  emit_rows(g, {"sigma", "k", "w", "bound", "sigma_minus_k", "bigw_window"}, {row});
  return kOk;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const Global& g, const std::vector<std::string>& suites, VerifyOptions opts) {
  opts.threads = g.threads;
  opts.seed = g.seed;
  bool all = true;
  Output out(g.output);
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, opts);
    all = all && r.passed();
    if (g.format == Format::text) {
      out.os() << r.to_text();
    } else if (g.format == Format::json) {
      out.os() << r.to_json().dump() << '\n';
    } else {
      out.os() << "suite,property,passed,checked,counterexample,note\n";
      for (const auto& prop : r.properties) {
        out.os() << r.suite << ",\"" << prop.name << "\"," << (prop.passed ? "true" : "false") << ',' << prop.checked
                 << ",\"" << prop.counterexample << "\",\"" << prop.note << "\"\n";
      }
    }
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected density of random minimizer orders: exact enumeration, closed forms and sampling."};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", g.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--seed", g.seed, "seed for sampling commands");
  app.add_option("-o,--output", g.output, "write output to this file");
  app.add_option("--log-base", g.log_base, "log base for table cells (default sigma)")->check(CLI::PositiveNumber);

  std::uint64_t cap = kDefaultEnumerationCap;
  std::function<int()> action;

  Triple exact_t;
  std::string algo = "dict";
  auto* exact = app.add_subcommand("exact", "exact DR by enumerating all contexts");
  add_triple(exact, exact_t);
  exact->add_option("--algo", algo, "naive, dict or weiner")->check(CLI::IsMember({"naive", "dict", "weiner"}))->capture_default_str();
  exact->add_option("--cap", cap, "largest sigma^(w+k) to enumerate")->capture_default_str();
  exact->callback([&] { action = [&] { return cmd_exact(g, exact_t, algo, cap); }; });

  Triple cf_t;
  auto* cf = app.add_subcommand("closed-form", "exact DR from the closed form (w <= k)");
  add_triple(cf, cf_t);
  cf->callback([&] { action = [&] { return cmd_closed_form(g, cf_t); }; });

  int d_sigma = 2, d_w = 1, d_w_max = 0;
  auto* dcmd = app.add_subcommand("delta", "Delta(w) = Dev(w+1) - Dev(w)");
  dcmd->add_option("--sigma,-s", d_sigma)->capture_default_str();
  dcmd->add_option("-w", d_w, "first w")->capture_default_str();
  dcmd->add_option("--w-max", d_w_max, "last w (default: same as -w)");
  dcmd->callback([&] { action = [&] { return cmd_delta(g, d_sigma, d_w, d_w_max); }; });

  int p_sigma = 2, p_max = 12;
  auto* prim = app.add_subcommand("prim", "number of primitive words of each length");
  prim->add_option("--sigma,-s", p_sigma)->capture_default_str();
  prim->add_option("--p-max", p_max)->capture_default_str();
  prim->callback([&] { action = [&] { return cmd_prim(g, p_sigma, p_max); }; });

  int t_sigma = 2, t_k_min = 2, t_k_max = 23;
  auto* table = app.add_subcommand("table", "log|DFR - 2| for 2 <= w <= k <= k_max");
  table->add_option("--sigma,-s", t_sigma)->capture_default_str();
  table->add_option("--k-min", t_k_min)->capture_default_str();
  table->add_option("--k-max", t_k_max)->capture_default_str();
  table->callback([&] { action = [&] { return cmd_table(g, t_sigma, t_k_min, t_k_max); }; });

  int pl_sigma = 2, pl_k = 5, pl_w_max = 100, pl_reps = 8;
  std::uint64_t pl_exact_cap = std::uint64_t{1} << 22, pl_n = 1'000'000;
  auto* plot = app.add_subcommand("plot", "density curves against w for a fixed k");
  plot->add_option("--sigma,-s", pl_sigma)->capture_default_str();
  plot->add_option("-k", pl_k)->capture_default_str();
  plot->add_option("--w-max", pl_w_max)->capture_default_str();
  plot->add_option("--exact-cap", pl_exact_cap, "enumerate when sigma^(w+k) is at most this")->capture_default_str();
  plot->add_option("-n", pl_n, "string length for sampled points")->capture_default_str();
  plot->add_option("--replicates", pl_reps)->capture_default_str();
  plot->callback([&] { action = [&] { return cmd_plot(g, pl_sigma, pl_k, pl_w_max, pl_exact_cap, pl_n, pl_reps); }; });

  Triple mc_t;
  std::uint64_t mc_n = 1'000'000;
  int mc_reps = 16;
  std::string estimator = "markup";
  auto* mc = app.add_subcommand("mc", "sampled density of a random order");
  add_triple(mc, mc_t);
  mc->add_option("-n", mc_n, "string length per replicate")->capture_default_str();
  mc->add_option("--replicates", mc_reps)->capture_default_str();
  mc->add_option("--estimator", estimator, "markup, gamechanger or context")->capture_default_str();
  mc->callback([&] { action = [&] { return cmd_mc(g, mc_t, mc_n, mc_reps, estimator); }; });

  std::vector<std::string> suites;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suites, "suite name(s), or 'all'")->required();
  verify->add_option("--sigma,-s", vo.sigma)->capture_default_str();
  verify->add_option("-k", vo.k)->capture_default_str();
  verify->add_option("-w", vo.w)->capture_default_str();
  verify->add_option("--max-total", vo.max_total, "largest k+w for exhaustive checks")->capture_default_str();
  verify->add_option("--max-length", vo.max_length, "longest string for run uniqueness")->capture_default_str();
  verify->add_option("--w-max", vo.w_max)->capture_default_str();
  verify->add_option("--w-cap", vo.w_cap)->capture_default_str();
  verify->add_option("-n", vo.n, "string length for sampled checks")->capture_default_str();
  verify->add_option("--trials", vo.trials)->capture_default_str();
  verify->add_option("--cap", vo.cap)->capture_default_str();
  verify->callback([&] {
    action = [&] {
      std::vector<std::string> chosen = suites;
      if (chosen.size() == 1 && chosen[0] == "all") chosen = suite_names();
      return cmd_verify(g, chosen, vo);
    };
  });

  int c_sigma = 2, c_w_cap = 200;
  auto* crossing = app.add_subcommand("crossing", "smallest w >= 2 with DFR < 2");
  crossing->add_option("--sigma,-s", c_sigma)->capture_default_str();
  crossing->add_option("--w-cap", c_w_cap)->capture_default_str();
  crossing->callback([&] { action = [&] { return cmd_crossing(g, c_sigma, c_w_cap); }; });

  Triple b_t;
  auto* bigw = app.add_subcommand("bigw-bound", "upper bound on DR for large w");
  add_triple(bigw, b_t);
  bigw->callback([&] { action = [&] { return cmd_bigw_bound(g, b_t); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return action();
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

// p2e: coefficient tables, point evaluation, accuracy sweeps, and benchmarks
// for the ellipse normal-projection series.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "p2e/coeff_generator.hpp"
#include "p2e/coeff_tensor.hpp"
#include "p2e/oracle.hpp"
#include "p2e/series_eval.hpp"

namespace {

using p2e::Bounds;
using p2e::CoeffGenerator;
using p2e::CoeffTensor;
using p2e::DenseTensor;
using p2e::EllipseParams;
using p2e::Evaluator;
using p2e::Form;
using p2e::Quantity;
using p2e::QueryPoint;
using p2e::Rational;
using p2e::Truncation;

volatile double g_sink = 0.0;

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Bounds parse_bounds_arg(const std::string& s) {
  Bounds b;
  char trail;
  if (std::sscanf(s.c_str(), "%d,%d,%d%c", &b.n, &b.k, &b.l, &trail) != 3)
    throw CLI::ValidationError("bounds", "expected N,K,L, got '" + s + "'");
  return b;
}

QueryPoint parse_point_arg(const std::string& s) {
  QueryPoint p;
  char trail;
  if (std::sscanf(s.c_str(), "%lf,%lf%c", &p.u, &p.v, &trail) != 2)
    throw CLI::ValidationError("point", "expected u,v, got '" + s + "'");
  return p;
}

// Enum parsing on the flag surface reports as usage, not as a runtime failure.
Quantity quantity_arg(const std::string& s) {
  try {
    return p2e::parse_quantity(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("quantity", e.what());
  }
}

Form form_arg(const std::string& s) {
  try {
    return p2e::parse_form(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("form", e.what());
  }
}

std::filesystem::path cache_file(const std::string& dir, Quantity q, Form f) {
  return std::filesystem::path(dir) / (p2e::quantity_name(q) + "_" + p2e::form_name(f) + ".txt");
}

bool covers(const Bounds& outer, const Bounds& inner) {
  return outer.n >= inner.n && outer.k >= inner.k && outer.l >= inner.l;
}

// Returns a tensor covering `b`, from the cache directory when one is there.
// A cached tensor smaller than the request is an error, not a silent regen:
// the cache is the declared source of truth once named.
CoeffTensor obtain_tensor(CoeffGenerator& gen, Quantity q, Form f, Bounds b, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    auto path = cache_file(cache_dir, q, f);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot read cache file " + path.string());
      CoeffTensor t = p2e::read_cache(in);
      if (!covers(t.bounds(), b))
        throw std::runtime_error("truncation beyond cache: " + path.string() + " holds N=" + std::to_string(t.bounds().n) +
                                 " K=" + std::to_string(t.bounds().k) + " L=" + std::to_string(t.bounds().l));
      return t;
    }
    CoeffTensor t = gen.tensor(q, f, b);
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path.string());
    p2e::write_cache(t, out);
    return t;
  }
  return gen.tensor(q, f, b);
}

Evaluator::TensorSet build_tensor_set(CoeffGenerator& gen, Bounds b, const std::string& cache_dir) {
  auto dense = [&](Quantity q, Form f) { return DenseTensor(obtain_tensor(gen, q, f, b, cache_dir)); };
  return Evaluator::TensorSet{dense(Quantity::phi, Form::sinpow),  dense(Quantity::h, Form::sinpow),
                              dense(Quantity::sin, Form::sinpow),  dense(Quantity::cos, Form::sinpow),
                              dense(Quantity::phi, Form::fourier), dense(Quantity::h, Form::fourier),
                              dense(Quantity::sin, Form::fourier), dense(Quantity::cos, Form::fourier)};
}

// Writes either to a file or, for "-", to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int upper_l(Quantity q, Form f, int n, int k, int bound_l) {
  int lmax = p2e::window_lmax(q, f, n, k);
  return lmax < 0 ? bound_l : std::min(lmax, bound_l);
}

void write_table_csv(const CoeffTensor& t, std::ostream& out) {
  const Bounds& b = t.bounds();
  out << "n,k,l,value\n";
  for (int n = p2e::window_nmin(t.quantity(), t.form()); n <= b.n; ++n)
    for (int k = p2e::window_kmin(t.quantity(), t.form()); k <= b.k; ++k)
      for (int l = p2e::window_lmin(t.quantity(), t.form(), n, k); l <= upper_l(t.quantity(), t.form(), n, k, b.l); ++l)
        out << n << "," << k << "," << l << "," << t.get(n, k, l).to_string() << "\n";
}

void write_table_tex(const CoeffTensor& t, std::ostream& out) {
  const Bounds& b = t.bounds();
  out << "\\begin{tabular}{ c c |";
  for (int l = 1; l <= b.l; ++l) out << " l";
  out << " }\n$n$ & $k\\setminus l$";
  for (int l = 1; l <= b.l; ++l) out << " & $e^{2\\cdot" << l << "}$";
  out << " \\\\ \\hline\n";
  int nmin = p2e::window_nmin(t.quantity(), t.form());
  int kmin = p2e::window_kmin(t.quantity(), t.form());
  for (int n = nmin; n <= b.n; ++n) {
    for (int k = kmin; k <= b.k; ++k) {
      out << (k == kmin ? std::to_string(n) : std::string()) << " & $\\rho^{-" << k << "}$";
      for (int l = 1; l <= b.l; ++l) {
        out << " & ";
        if (!t.contains_index(n, k, l)) {
          out << "$\\times$";
        } else {
          Rational v = t.get(n, k, l);
          std::string s = v.to_string();
          out << (s[0] == '-' ? "$" + s + "$" : "$\\phantom{-}" + s + "$");
        }
      }
      out << " \\\\\n";
    }
    if (n < b.n) out << "\\hline\n";
  }
  out << "\\end{tabular}\n";
}

struct GridArgs {
  std::vector<double> psi, varrho, e2;
  std::vector<std::string> trunc_raw;
};

void add_grid_options(CLI::App* cmd, GridArgs& g) {
  cmd->add_option("--grid-psi", g.psi, "polar angles psi in radians")->delimiter(',')->required();
  cmd->add_option("--grid-varrho", g.varrho, "values of a/rho")->delimiter(',')->required();
  cmd->add_option("--grid-e2", g.e2, "values of e^2")->delimiter(',')->required();
  cmd->add_option("--trunc", g.trunc_raw, "truncations N,K,L (repeatable, ';' separated)")->delimiter(';')->required();
}

std::vector<Truncation> parse_trunc_list(const std::vector<std::string>& raw) {
  std::vector<Truncation> out;
  for (const auto& s : raw) {
    Bounds b = parse_bounds_arg(s);
    out.push_back({b.n, b.k, b.l});
  }
  if (out.empty()) throw CLI::ValidationError("trunc", "at least one truncation required");
  return out;
}

Bounds envelope(const std::vector<Truncation>& list) {
  Bounds b{0, 0, 1};
  for (const auto& t : list) {
    b.n = std::max(b.n, t.n);
    b.k = std::max(b.k, t.k);
    b.l = std::max(b.l, t.l);
  }
  return b;
}

double series_value(const Evaluator& ev, Quantity q, const QueryPoint& pt, const EllipseParams& ell, Truncation tr,
                    Form form) {
  switch (q) {
    case Quantity::phi: return ev.eval_phi(pt, ell, tr, form);
    case Quantity::h: return ev.eval_h(pt, ell, tr, form);
    case Quantity::sin:
      return form == Form::sinpow ? ev.eval_sincos_joint(pt, ell, tr).first : ev.project(pt, ell, tr, form).sin_phi;
    case Quantity::cos:
      return form == Form::sinpow ? ev.eval_sincos_joint(pt, ell, tr).second : ev.project(pt, ell, tr, form).cos_phi;
  }
  throw std::logic_error("unreachable quantity");
}

double oracle_value(Quantity q, const p2e::OracleResult& o) {
  switch (q) {
    case Quantity::phi: return o.phi_star;
    case Quantity::h: return o.h_star;
    case Quantity::sin: return std::sin(o.phi_star);
    case Quantity::cos: return std::cos(o.phi_star);
  }
  throw std::logic_error("unreachable quantity");
}

int run_gen_tables(const std::string& quantity, const std::string& form, const std::string& bounds,
                   const std::string& format, const std::string& out_path) {
  Quantity q = quantity_arg(quantity);
  Form f = form_arg(form);
  Bounds b = parse_bounds_arg(bounds);
  CoeffGenerator gen;
  CoeffTensor t = gen.tensor(q, f, b);
  OutputTarget out(out_path);
  if (format == "csv")
    write_table_csv(t, out.stream());
  else if (format == "tex")
    write_table_tex(t, out.stream());
  else if (format == "cache")
    p2e::write_cache(t, out.stream());
  else
    throw CLI::ValidationError("format", "expected csv, tex or cache");
  return 0;
}

int run_eval(double a, double e2, const std::string& point, const std::string& bounds, const std::string& form,
             bool with_oracle, const std::string& cache_dir) {
  QueryPoint pt = parse_point_arg(point);
  EllipseParams ell{a, e2};
  Bounds b = parse_bounds_arg(bounds);
  Truncation tr{b.n, b.k, b.l};
  Form f = form_arg(form);
  CoeffGenerator gen;
  Evaluator ev(build_tensor_set(gen, b, cache_dir));
  p2e::EvalResult r = ev.project(pt, ell, tr, f);
  std::cout << "phi=" << g17(r.phi) << "\nh=" << g17(r.h) << "\nsin_phi=" << g17(r.sin_phi)
            << "\ncos_phi=" << g17(r.cos_phi) << "\nguard_ratio=" << g17(r.guard_ratio)
            << "\nconverged_hint=" << (r.converged_hint ? 1 : 0) << "\n";
  if (with_oracle) {
    p2e::OracleResult o = p2e::solve_phi(pt, ell);
    std::cout << "oracle_phi=" << g17(o.phi_star) << "\noracle_h=" << g17(o.h_star)
              << "\ndelta_phi=" << g17(r.phi - o.phi_star) << "\ndelta_h=" << g17(r.h - o.h_star)
              << "\ndelta_sin=" << g17(r.sin_phi - std::sin(o.phi_star))
              << "\ndelta_cos=" << g17(r.cos_phi - std::cos(o.phi_star)) << "\n";
  }
  return 0;
}

int run_sweep(const GridArgs& grid, const std::string& quantity, const std::string& form, double a,
              const std::string& out_path, const std::string& cache_dir) {
  Quantity q = quantity_arg(quantity);
  Form f = form_arg(form);
  auto truncs = parse_trunc_list(grid.trunc_raw);
  CoeffGenerator gen;
  Evaluator ev(build_tensor_set(gen, envelope(truncs), cache_dir));
  OutputTarget out(out_path);
  std::ostringstream rows;
  rows << "psi,varrho,e2,N,K,L,series,oracle,abs_err,rel_err,guard_ratio,converged_hint,oracle_ok\n";
  for (double psi : grid.psi)
    for (double varrho : grid.varrho)
      for (double e2 : grid.e2)
        for (const auto& tr : truncs) {
          double rho = a / varrho;
          QueryPoint pt{rho * std::cos(psi), rho * std::sin(psi)};
          EllipseParams ell{a, e2};
          p2e::EvalResult r = ev.project(pt, ell, tr, f);
          double series = series_value(ev, q, pt, ell, tr, f);
          double oracle = std::numeric_limits<double>::quiet_NaN();
          bool ok = true;
          try {
            oracle = oracle_value(q, p2e::solve_phi(pt, ell));
          } catch (const std::exception&) {
            ok = false;
          }
          double abs_err = ok ? std::fabs(series - oracle) : std::numeric_limits<double>::quiet_NaN();
          double rel_err = ok ? (oracle != 0.0 ? abs_err / std::fabs(oracle) : abs_err) : abs_err;
          rows << g17(psi) << "," << g17(varrho) << "," << g17(e2) << "," << tr.n << "," << tr.k << "," << tr.l << ","
               << g17(series) << "," << g17(oracle) << "," << g17(abs_err) << "," << g17(rel_err) << ","
               << g17(r.guard_ratio) << "," << (r.converged_hint ? 1 : 0) << "," << (ok ? 1 : 0) << "\n";
        }
  out.stream() << rows.str();
  return 0;
}

int run_bench(const GridArgs& grid, const std::string& quantity, const std::string& form, double a, int repetitions,
              const std::string& out_path, const std::string& cache_dir) {
  Quantity q = quantity_arg(quantity);
  std::vector<Form> forms;
  if (form == "all")
    forms = {Form::sinpow, Form::fourier};
  else
    forms = {form_arg(form)};
  auto truncs = parse_trunc_list(grid.trunc_raw);
  OutputTarget out(out_path);
  out.stream() << "quantity,form,N,K,L,repetitions,mean_ns,median_ns,adds,muls,trig,max_err,mean_err\n";
  if (repetitions <= 0) {
    std::cout << "empty report (repetitions=" << repetitions << ")\n";
    return 0;
  }
  CoeffGenerator gen;
  Evaluator ev(build_tensor_set(gen, envelope(truncs), cache_dir));

  std::vector<QueryPoint> pts;
  std::vector<EllipseParams> ells;
  for (double psi : grid.psi)
    for (double varrho : grid.varrho)
      for (double e2 : grid.e2) {
        double rho = a / varrho;
        pts.push_back({rho * std::cos(psi), rho * std::sin(psi)});
        ells.push_back({a, e2});
      }

  auto time_pass = [&](auto&& fn) {
    std::vector<double> per_eval(repetitions);
    for (int r = 0; r < repetitions; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      double acc = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) acc += fn(pts[i], ells[i]);
      g_sink = acc;
      auto t1 = std::chrono::steady_clock::now();
      per_eval[r] = std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(pts.size());
    }
    std::sort(per_eval.begin(), per_eval.end());
    double mean = std::accumulate(per_eval.begin(), per_eval.end(), 0.0) / repetitions;
    double median = per_eval[repetitions / 2];
    return std::pair<double, double>{mean, median};
  };

  struct Row {
    std::string form;
    Truncation tr;
    double mean, median, max_err, mean_err;
    p2e::OpCount ops;
  };
  std::vector<Row> report;
  for (Form f : forms)
    for (const auto& tr : truncs) {
      auto [mean, median] =
          time_pass([&](const QueryPoint& pt, const EllipseParams& ell) { return series_value(ev, q, pt, ell, tr, f); });
      double max_err = 0.0, sum_err = 0.0;
      int solved = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        try {
          double err = std::fabs(series_value(ev, q, pts[i], ells[i], tr, f) - oracle_value(q, p2e::solve_phi(pts[i], ells[i])));
          max_err = std::max(max_err, err);
          sum_err += err;
          ++solved;
        } catch (const std::exception&) {
        }
      }
      p2e::OpCount ops = f == Form::sinpow ? p2e::sinpow_op_count(tr) : p2e::fourier_op_count(tr);
      report.push_back({p2e::form_name(f), tr, mean, median, max_err, solved ? sum_err / solved : 0.0, ops});
    }
  auto [omean, omedian] =
      time_pass([&](const QueryPoint& pt, const EllipseParams& ell) { return p2e::solve_phi(pt, ell).phi_star; });
  report.push_back({"oracle", {0, 0, 0}, omean, omedian, 0.0, 0.0, {0, 0, 0}});

  for (const auto& r : report)
    out.stream() << p2e::quantity_name(q) << "," << r.form << "," << r.tr.n << "," << r.tr.k << "," << r.tr.l << ","
                 << repetitions << "," << g17(r.mean) << "," << g17(r.median) << "," << r.ops.adds << "," << r.ops.muls
                 << "," << r.ops.trig << "," << g17(r.max_err) << "," << g17(r.mean_err) << "\n";
  std::cout << "time-to-accuracy (" << p2e::quantity_name(q) << ", " << pts.size() << " points, " << repetitions
            << " repetitions):\n";
  for (const auto& r : report) {
    std::printf("  %-8s (%d,%d,%d)  mean %9.1f ns  median %9.1f ns", r.form.c_str(), r.tr.n, r.tr.k, r.tr.l, r.mean,
                r.median);
    if (r.form != "oracle") std::printf("  max_err %.3e", r.max_err);
    std::printf("\n");
  }
  return 0;
}

struct GoldenRow {
  int n, k, l;
  std::string value;
};

std::vector<GoldenRow> read_golden_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing golden file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "n,k,l,value")
    throw std::runtime_error("bad golden header in " + path.string());
  std::vector<GoldenRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    GoldenRow r;
    char value[128];
    if (std::sscanf(line.c_str(), "%d,%d,%d,%127s", &r.n, &r.k, &r.l, value) != 4)
      throw std::runtime_error("bad golden row '" + line + "' in " + path.string());
    r.value = value;
    rows.push_back(r);
  }
  return rows;
}

int run_verify_tables(const std::string& tables_dir) {
  const std::pair<Quantity, Form> families[] = {
      {Quantity::phi, Form::fourier}, {Quantity::phi, Form::sinpow}, {Quantity::h, Form::fourier},
      {Quantity::h, Form::sinpow},    {Quantity::sin, Form::fourier}, {Quantity::sin, Form::sinpow},
      {Quantity::cos, Form::fourier}, {Quantity::cos, Form::sinpow}};
  CoeffGenerator gen;
  int mismatches = 0;
  long total_cells = 0;
  for (auto [q, f] : families) {
    auto path = std::filesystem::path(tables_dir) / (p2e::quantity_name(q) + "_" + p2e::form_name(f) + ".csv");
    auto rows = read_golden_csv(path);
    Bounds b{0, 0, 0};
    for (const auto& r : rows) {
      b.n = std::max(b.n, r.n);
      b.k = std::max(b.k, r.k);
      b.l = std::max(b.l, r.l);
    }
    CoeffTensor t = gen.tensor(q, f, b);
    int family_mismatches = 0;
    for (const auto& r : rows) {
      if (r.value == "x") {
        if (t.contains_index(r.n, r.k, r.l)) {
          std::cout << "mismatch " << p2e::quantity_name(q) << " " << p2e::form_name(f) << " (" << r.n << "," << r.k
                    << "," << r.l << "): expected structurally absent, generator has "
                    << t.get(r.n, r.k, r.l).to_string() << "\n";
          ++family_mismatches;
        }
        continue;
      }
      Rational want = Rational::from_string(r.value);
      if (!t.contains_index(r.n, r.k, r.l)) {
        std::cout << "mismatch " << p2e::quantity_name(q) << " " << p2e::form_name(f) << " (" << r.n << "," << r.k
                  << "," << r.l << "): expected " << r.value << ", generator window excludes the index\n";
        ++family_mismatches;
        continue;
      }
      if (t.get(r.n, r.k, r.l) != want) {
        std::cout << "mismatch " << p2e::quantity_name(q) << " " << p2e::form_name(f) << " (" << r.n << "," << r.k
                  << "," << r.l << "): expected " << r.value << ", got " << t.get(r.n, r.k, r.l).to_string() << "\n";
        ++family_mismatches;
      }
    }
    total_cells += static_cast<long>(rows.size());
    mismatches += family_mismatches;
    std::cout << p2e::quantity_name(q) << " " << p2e::form_name(f) << ": " << rows.size() << " cells, "
              << family_mismatches << " mismatches\n";
  }
  std::cout << (mismatches == 0 ? "all tables verified" : "verification FAILED") << ": 8 families, " << total_cells
            << " cells, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal projection onto an ellipse: series coefficients, evaluation, and verification"};
  app.require_subcommand(1);

  std::string quantity = "phi", form = "sinpow", bounds = "8,8,9", format = "csv", out_path = "-";
  std::string point, cache_dir, tables_dir;
  double a = 1.0, e2 = 0.0;
  bool with_oracle = false;
  int repetitions = 100;
  GridArgs grid;

  auto* gen_cmd = app.add_subcommand("gen-tables", "emit one coefficient table");
  gen_cmd->add_option("--quantity", quantity, "phi, h, sin or cos")->required();
  gen_cmd->add_option("--form", form, "sinpow or fourier")->required();
  gen_cmd->add_option("--bounds", bounds, "index bounds N,K,L")->required();
  gen_cmd->add_option("--format", format, "csv, tex or cache");
  gen_cmd->add_option("-o,--out", out_path, "output file, - for stdout");

  auto* eval_cmd = app.add_subcommand("eval", "project one point");
  eval_cmd->add_option("--a", a, "semi-major axis")->required();
  eval_cmd->add_option("--e2", e2, "eccentricity squared")->required();
  eval_cmd->add_option("--point", point, "query point u,v")->required();
  eval_cmd->add_option("--bounds", bounds, "truncation N,K,L");
  eval_cmd->add_option("--form", form, "sinpow or fourier");
  eval_cmd->add_flag("--oracle", with_oracle, "also run the iterative solver and print deltas");
  eval_cmd->add_option("--cache", cache_dir, "coefficient cache directory");

  auto* sweep_cmd = app.add_subcommand("sweep", "accuracy sweep over a grid, CSV output");
  add_grid_options(sweep_cmd, grid);
  sweep_cmd->add_option("--quantity", quantity, "phi, h, sin or cos");
  sweep_cmd->add_option("--form", form, "sinpow or fourier");
  sweep_cmd->add_option("--a", a, "semi-major axis");
  sweep_cmd->add_option("-o,--out", out_path, "output file, - for stdout");
  sweep_cmd->add_option("--cache", cache_dir, "coefficient cache directory");

  auto* bench_cmd = app.add_subcommand("bench", "timing and accuracy report");
  add_grid_options(bench_cmd, grid);
  bench_cmd->add_option("--quantity", quantity, "phi, h, sin or cos");
  bench_cmd->add_option("--form", form, "sinpow, fourier or all");
  bench_cmd->add_option("--a", a, "semi-major axis");
  bench_cmd->add_option("--repetitions", repetitions, "timing repetitions, 0 for an empty report");
  bench_cmd->add_option("-o,--out", out_path, "output file, - for stdout");
  bench_cmd->add_option("--cache", cache_dir, "coefficient cache directory");

  auto* verify_cmd = app.add_subcommand("verify-tables", "regenerate and diff the golden tables");
  verify_cmd->add_option("--tables", tables_dir, "directory with the golden CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen_tables(quantity, form, bounds, format, out_path);
    if (eval_cmd->parsed()) return run_eval(a, e2, point, bounds, form, with_oracle, cache_dir);
    if (sweep_cmd->parsed()) return run_sweep(grid, quantity, form, a, out_path, cache_dir);
    if (bench_cmd->parsed()) return run_bench(grid, quantity, form, a, repetitions, out_path, cache_dir);
    if (verify_cmd->parsed()) return run_verify_tables(tables_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

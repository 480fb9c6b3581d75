#include "nsbf/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "nsbf/green.hpp"
#include "nsbf/scattering.hpp"

namespace nsbf {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const RunConfig& cfg, const std::string& name, const std::string& header) {
    std::filesystem::create_directories(cfg.out);
    path_ = (std::filesystem::path(cfg.out) / (name + ".csv")).string();
    file_.open(path_, std::ios::out | std::ios::trunc);
    if (!file_) throw DomainError("cannot open output file " + path_);
    file_ << "# config-hash=" << config_hash(cfg) << "\n" << header << "\n";
  }

  template <typename... Fields>
  void row(const Fields&... fields) {
    std::string line;
    ((line += (line.empty() ? "" : ",") + cell(fields)), ...);
    file_ << line << "\n";
    ++rows_;
  }

  std::string finish() {
    file_.close();
    if (!file_) throw DomainError("failed writing " + path_);
    return path_;
  }

  std::size_t rows() const { return rows_; }

 private:
  static std::string cell(double v) { return num(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }
  static std::string cell(std::string_view v) { return std::string(v); }

  std::string path_;
  std::ofstream file_;
  std::size_t rows_ = 0;
};

std::vector<double> sweep_grid(const RunConfig& cfg, bool positive_only) {
  const auto count = static_cast<long long>(std::floor((cfg.sweep_max - cfg.sweep_min) / cfg.sweep_step + 1e-9)) + 1;
  if (count > 10'000'000) throw DomainError("sweep has more than 1e7 points; increase sweep-step");
  std::vector<double> w;
  for (long long k = 0; k < count; ++k) {
    const double v = cfg.sweep_min + static_cast<double>(k) * cfg.sweep_step;
    if (positive_only && !(v > 0.0)) continue;
    w.push_back(v);
  }
  if (w.empty()) throw DomainError("sweep contains no admissible frequencies");
  return w;
}

std::vector<std::pair<double, double>> probe_pairs(const RunConfig& cfg) {
  const std::size_t n = std::max(cfg.x.size(), cfg.y.size());
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < n; ++k)
    out.emplace_back(cfg.x[cfg.x.size() == 1 ? 0 : k], cfg.y[cfg.y.size() == 1 ? 0 : k]);
  return out;
}

BoundStateOptions bound_options(const RunConfig& cfg) {
  BoundStateOptions o;
  o.kappa_max = cfg.kappa_max;
  o.tolerance = cfg.bound_tol;
  return o;
}

std::string run_scatter(const RunConfig& cfg, const Pipeline& pl) {
  const ScatteringData sd = scattering_sweep(pl.model, sweep_grid(cfg, false));
  CsvWriter csv(cfg, "scatter", "omega,re_a,im_a,re_b,im_b,unitarity_defect");
  for (std::size_t k = 0; k < sd.omega.size(); ++k)
    csv.row(sd.omega[k], sd.a[k].real(), sd.a[k].imag(), sd.b[k].real(), sd.b[k].imag(), sd.unitarity_defect[k]);
  return csv.finish();
}

std::string run_green(const RunConfig& cfg, const Pipeline& pl) {
  const auto variants = cfg.variants();
  const bool spectral = std::any_of(variants.begin(), variants.end(),
                                    [](GreenVariant v) { return v != GreenVariant::Jost; });
  std::vector<BoundState> states = find_bound_states(pl.model, pl.potential, bound_options(cfg));
  const NearZero nz = a_near_zero(pl.seed);
  std::string header = "x,y,re_lambda,im_lambda,variant,re_G,im_G";
  if (pl.barrier) header += ",abs_err_vs_oracle";
  CsvWriter csv(cfg, "green", header);
  const Grid& grid = pl.model.grid;
  for (const Complex lambda : cfg.lambda) {
    for (const auto& [x, y] : probe_pairs(cfg)) {
      const double xs = grid.node(grid.nearest_node(x)), ys = grid.node(grid.nearest_node(y));
      Eigen::Array3cd spec = Eigen::Array3cd::Zero();
      if (spectral)
        spec = green_spectral_sweep(pl.model, nz, states, xs, ys, lambda, {cfg.omega_max}, cfg.omega_step).front();
      std::optional<Complex> reference;
      if (pl.barrier) reference = oracle_green(*pl.barrier, xs, ys, lambda);
      for (GreenVariant v : variants) {
        Complex G;
        switch (v) {
          case GreenVariant::Jost: G = green_jost(pl.model, xs, ys, lambda, states); break;
          case GreenVariant::Plain: G = spec[0]; break;
          case GreenVariant::Head1: G = spec[1]; break;
          case GreenVariant::Head2: G = spec[2]; break;
        }
        if (reference)
          csv.row(xs, ys, lambda.real(), lambda.imag(), variant_name(v), G.real(), G.imag(), std::abs(G - *reference));
        else
          csv.row(xs, ys, lambda.real(), lambda.imag(), variant_name(v), G.real(), G.imag());
      }
    }
  }
  return csv.finish();
}

std::string run_spectrum(const RunConfig& cfg, const Pipeline& pl) {
  const auto states = find_bound_states(pl.model, pl.potential, bound_options(cfg));
  CsvWriter csv(cfg, "spectrum", "j,kappa,lambda,norm_defect");
  for (std::size_t j = 0; j < states.size(); ++j)
    csv.row(j + 1, states[j].kappa, states[j].lambda, states[j].norm_defect);
  return csv.finish();
}

std::string run_nsbf_check(const RunConfig& cfg, const Pipeline& pl) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CsvWriter csv(cfg, "nsbf-check", "omega,max_err_c,max_err_s,wronskian_defect");
  const Grid& grid = pl.model.grid;
  for (double w : {0.0, 0.5, 1.0, 2.0, 10.0, 100.0, 1e3, 1e4}) {
    double ec = pl.barrier ? 0.0 : nan, es = ec, wd = 0.0;
    for (Index i = 0; i < grid.size(); ++i) {
      const Solutions v = eval_solutions(pl.model, i, w);
      if (pl.barrier) {
        const OracleSolutions r = oracle_solutions(*pl.barrier, grid.node(i), w, pl.model.h);
        ec = std::max(ec, std::abs(v.c - r.c));
        es = std::max(es, std::abs(v.s - r.s));
      }
      if (w != 0.0) wd = std::max(wd, std::abs((v.c * v.ds - v.dc * v.s) / w - 1.0));
    }
    csv.row(w, ec, es, w == 0.0 ? nan : wd);
  }
  return csv.finish();
}

std::string run_integrand(const RunConfig& cfg, const Pipeline& pl) {
  const auto pairs = probe_pairs(cfg);
  const std::vector<double> w = sweep_grid(cfg, true);
  const auto rows = integrand_diag(pl.model, a_near_zero(pl.seed), pairs.front().first, pairs.front().second,
                                   cfg.lambda.front(), w);
  CsvWriter csv(cfg, "integrand", "omega,abs_I1,abs_I2,abs_I3");
  for (std::size_t k = 0; k < w.size(); ++k) csv.row(w[k], rows[k][0], rows[k][1], rows[k][2]);
  return csv.finish();
}

}  // namespace

Pipeline build_pipeline(const RunConfig& cfg) {
  std::optional<BarrierSpec> barrier;
  Potential potential = [&] {
    if (cfg.potential == "table") {
      PotentialTable table = read_potential_csv(cfg.table);
      const Grid grid(table.x.back(), cfg.grid_M);
      return make_potential({PotentialKind::Sampled, 0.0, std::move(table)}, grid);
    }
    barrier = BarrierSpec{cfg.C, cfg.d};
    return square_barrier(cfg.C, Grid(cfg.d, cfg.grid_M));
  }();
  SeedSolution seed = build_seed(potential, cfg.seed);
  FormalPowers powers = build_formal_powers(seed, cfg.K);
  NsbfOptions options;
  options.wronskian_tolerance = cfg.wronskian_tol;
  NsbfModel model = build_nsbf(powers, seed, potential, cfg.N, options);
  return Pipeline{std::move(potential), std::move(seed), std::move(powers), std::move(model), barrier};
}

std::string run(const RunConfig& cfg, std::ostream& log) {
  const Pipeline pl = build_pipeline(cfg);
  if (std::isfinite(pl.model.wronskian_defect))
    log << "model: M=" << pl.model.grid.size() << " K=" << cfg.K << " N=" << cfg.N
        << " wronskian_defect=" << num(pl.model.wronskian_defect) << "\n";
  std::string path;
  switch (cfg.command) {
    case Command::Scatter: path = run_scatter(cfg, pl); break;
    case Command::Green: path = run_green(cfg, pl); break;
    case Command::Spectrum: path = run_spectrum(cfg, pl); break;
    case Command::NsbfCheck: path = run_nsbf_check(cfg, pl); break;
    case Command::Integrand: path = run_integrand(cfg, pl); break;
  }
  log << "wrote " << path << "\n";
  return path;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    run(parse_config(args), out);
    return 0;
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalFault& e) {
    err << "numerical fault: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical fault: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nsbf

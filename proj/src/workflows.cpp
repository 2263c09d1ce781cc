#include "frictionless/workflows.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "frictionless/errors.hpp"
#include "frictionless/output.hpp"

namespace fs = std::filesystem;

namespace frictionless {

namespace {

void echo_config(const RunConfig& cfg, const fs::path& out) {
  write_file_atomic(out / "config.resolved", cfg.to_text());
}

std::string pad(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", i);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t\r");
    const auto b = item.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string{} : item.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

std::vector<fs::path> cmd_design(const RunConfig& cfg, const fs::path& out) {
  echo_config(cfg, out);
  std::vector<fs::path> written;
  for (auto regime : cfg.regimes)
    for (auto ansatz : cfg.ansaetze) {
      const auto traj = design_trajectory(cfg.design_spec(regime, ansatz));
      const auto path = out / ("trajectory_" + std::string(to_string(regime)) + "_" +
                               std::string(to_string(ansatz)) + ".csv");
      write_file_atomic(path, trajectory_csv(traj));
      written.push_back(path);
    }
  return written;
}

double OmegaTable::operator()(double time) const {
  if (time <= t.front()) return omegaSq.front();
  if (time >= t.back()) return omegaSq.back();
  const auto it = std::upper_bound(t.begin(), t.end(), time);
  const auto i = static_cast<std::size_t>(it - t.begin());
  const double w = (time - t[i - 1]) / (t[i] - t[i - 1]);
  return (1.0 - w) * omegaSq[i - 1] + w * omegaSq[i];
}

OmegaTable load_omega_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read omega table '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("omega table is empty");
  const auto header = split_csv_line(line);
  const auto col = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ConfigError("omega table lacks a '" + name + "' column");
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto ct = col("t_s");
  const auto cw = col("omega_sq_rad2_s2");
  OmegaTable table;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() <= std::max(ct, cw)) throw ConfigError("omega table row " + std::to_string(row) + " is short");
    double t = 0, w = 0;
    auto parse = [&](const std::string& s, double& v) {
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("omega table row " + std::to_string(row) + ": bad number '" + s + "'");
    };
    parse(cells[ct], t);
    parse(cells[cw], w);
    if (!table.t.empty() && !(t > table.t.back()))
      throw ConfigError("omega table times must be strictly increasing");
    table.t.push_back(t);
    table.omegaSq.push_back(w);
  }
  if (table.t.size() < 2) throw ConfigError("omega table needs at least two rows");
  return table;
}

void cmd_simulate(const RunConfig& cfg, const fs::path& out) {
  if (cfg.regimes.size() != 1 || cfg.ansaetze.size() != 1 || cfg.gTilde.size() != 1)
    throw ConfigError("simulate needs exactly one regime, one ansatz and one g_tilde value");
  const auto spec = cfg.design_spec(cfg.regimes.front(), cfg.ansaetze.front());
  const int dim = dimension(spec.regime);
  if (dim > 2) throw ConfigError("simulate supports 1D and 2D regimes only");
  echo_config(cfg, out);

  const double w0 = spec.omega0;
  const double g0 = cfg.gTilde.front();
  const auto settings = cfg.settings(dim);
  const DesignSpec ds = to_dimensionless(spec);
  const auto traj = design_trajectory(ds);

  PropagationPlan plan;
  plan.backend = settings.backend;
  plan.dt = ds.tF / static_cast<double>(settings.steps);
  plan.tEnd = ds.tF;
  std::string source = "designed";
  if (!cfg.omegaTable.empty()) {
    const auto table = load_omega_table(cfg.omegaTable);
    plan.omegaSqOfT = [table, w0](double t) { return table(t / w0) / (w0 * w0); };
    plan.gOfT = [g0](double) { return g0; };
    plan.tEnd = table.t.back() * w0;
    plan.dt = plan.tEnd / static_cast<double>(settings.steps);
    source = "table:" + cfg.omegaTable;
  } else {
    const auto g_of_t = coupling_schedule(traj, g0);
    plan.omegaSqOfT = [traj](double t) { return held_omega_squared(traj, t); };
    plan.gOfT = [g_of_t](double t) { return g_of_t(t); };
  }
  plan.recordEvery = settings.records > 0 ? std::max<std::size_t>(1, settings.steps / settings.records) : 0;

  auto gs = settings.groundState;
  gs.backend = settings.backend;
  const auto initial = ground_state_imaginary_time(settings.grid, 1.0, plan.gOfT(0.0), gs);

  std::ostringstream meta;
  meta << "workflow: simulate\n"
       << "trajectory_source: " << source << '\n'
       << "regime: " << to_string(spec.regime) << '\n'
       << "ansatz: " << to_string(spec.ansatz) << '\n'
       << "g_tilde: " << format_double(g0) << '\n'
       << "time_unit: s (1/omega0 = " << format_double(1.0 / w0) << " s)\n"
       << "length_unit: oscillator length of the initial trap\n"
       << "energy_unit: hbar*omega0\n"
       << "grid_dimension: " << settings.grid.dimension << '\n'
       << "grid_points: " << settings.grid.pointsPerAxis << '\n'
       << "grid_extent: " << format_double(settings.grid.extent) << '\n'
       << "dt: " << format_double(plan.dt) << '\n'
       << "mu_initial: " << format_double(initial.mu) << '\n';
  write_file_atomic(out / "run.meta", meta.str() + "status: running\n");

  std::ostringstream trace;
  trace << "t_s,norm,r2,kinetic,potential,interaction,energy,mu\n";
  std::size_t index = 0;
  auto observe = [&](double t, const Wavefunction& psi) {
    const auto o = observables_for_trap(psi, plan.omegaSqOfT(t), plan.gOfT(t), settings.backend);
    trace << format_double(t / w0) << ',' << format_double(o.norm) << ',' << format_double(o.r2) << ','
          << format_double(o.kinetic) << ',' << format_double(o.potential) << ','
          << format_double(o.interaction) << ',' << format_double(o.energy) << ',' << format_double(o.mu)
          << '\n';
    write_file_atomic(out / "snapshots" / ("snapshot_" + pad(index++) + ".csv"), snapshot_csv(t / w0, psi));
  };

  try {
    propagate(initial.psi0, plan, observe);
  } catch (const std::exception& e) {
    write_file_atomic(out / "observables.csv", trace.str());
    write_file_atomic(out / "run.meta", meta.str() + "status: failed\nerror: " + e.what() + '\n');
    throw;
  }
  write_file_atomic(out / "observables.csv", trace.str());
  write_file_atomic(out / "run.meta", meta.str() + "status: completed\n");
}

ValidationReport cmd_validate(const RunConfig& cfg, const fs::path& out) {
  if (cfg.regimes.size() != 1 || cfg.ansaetze.size() != 1 || cfg.gTilde.size() != 1)
    throw ConfigError("validate needs exactly one regime, one ansatz and one g_tilde value");
  const auto spec = cfg.design_spec(cfg.regimes.front(), cfg.ansaetze.front());
  const int dim = dimension(spec.regime);
  if (dim > 2) throw ConfigError("validate supports 1D and 2D regimes only");
  echo_config(cfg, out);

  auto report = run_frictionless_check(spec, cfg.gTilde.front(), cfg.settings(dim));
  const double tF = spec.tF;
  write_file_atomic(out / "report.txt", report.to_text());
  write_file_atomic(out / "final_designed.csv", snapshot_csv(tF, report.designedFinal));
  write_file_atomic(out / "final_scaling_prediction.csv", snapshot_csv(tF, report.scalingPrediction));
  write_file_atomic(out / "final_target.csv", snapshot_csv(tF, report.target));
  if (cfg.settings(dim).runBaseline)
    write_file_atomic(out / "final_baseline.csv", snapshot_csv(tF, report.baselineFinal));
  return report;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg, unsigned jobs) {
  struct Job {
    Regime regime;
    Ansatz ansatz;
    double g;
  };
  std::vector<Job> work;
  for (auto r : cfg.regimes) {
    if (dimension(r) > 2) continue;
    for (auto a : cfg.ansaetze)
      for (double g : cfg.gTilde) work.push_back({r, a, g});
  }

  std::vector<SweepRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        const auto& j = work[i];
        auto settings = cfg.settings(dimension(j.regime));
        settings.holdPeriods = 0.0;
        const auto report = run_frictionless_check(cfg.design_spec(j.regime, j.ansatz), j.g, settings);
        rows[i] = {j.regime, j.ansatz, j.g, report.fidelityToTarget, report.baselineFidelity,
                   report.minOmegaSq};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = work.size();
        return;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "regime,ansatz,g_tilde,fidelity_designed,fidelity_baseline,min_omega_sq\n";
  for (const auto& r : rows)
    os << to_string(r.regime) << ',' << to_string(r.ansatz) << ',' << format_double(r.gTilde) << ','
       << format_double(r.fidelityDesigned) << ',' << format_double(r.fidelityBaseline) << ','
       << format_double(r.minOmegaSq) << '\n';
  return os.str();
}

fs::path cmd_sweep(const RunConfig& cfg, const fs::path& out, unsigned jobs) {
  echo_config(cfg, out);
  const auto path = out / "summary.csv";
  write_file_atomic(path, sweep_csv(run_sweep(cfg, jobs)));
  return path;
}

}  // namespace frictionless

#include "frictionless/output.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "frictionless/errors.hpp"

namespace frictionless {

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string trajectory_csv(const ScalingTrajectory& traj) {
  std::ostringstream os;
  os << "t_s,b,bdot,bddot,omega_sq_rad2_s2,tau_s,g_over_g0\n";
  const auto& t = traj.time_grid();
  const auto& tau = traj.tau_table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << format_double(t[i]) << ',' << format_double(traj.b(t[i])) << ','
       << format_double(traj.bdot(t[i])) << ',' << format_double(traj.bddot(t[i])) << ','
       << format_double(omega_squared(traj, t[i])) << ',' << format_double(tau[i]) << ','
       << format_double(coupling_ratio(traj, t[i])) << '\n';
  }
  return os.str();
}

std::string snapshot_csv(double t_seconds, const Wavefunction& psi) {
  const auto& grid = psi.grid();
  const auto x = grid.axis();
  const auto n = grid.pointsPerAxis;
  const auto& a = psi.amplitudes();
  const std::string ts = format_double(t_seconds);
  std::ostringstream os;
  os << (grid.dimension == 1 ? "t_s,x,re_psi,im_psi,density\n" : "t_s,x,y,re_psi,im_psi,density\n");
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    os << ts << ',';
    if (grid.dimension == 1) {
      os << format_double(x[idx]) << ',';
    } else {
      os << format_double(x[idx / n]) << ',' << format_double(x[idx % n]) << ',';
    }
    os << format_double(a[idx].real()) << ',' << format_double(a[idx].imag()) << ','
       << format_double(std::norm(a[idx])) << '\n';
  }
  return os.str();
}

}  // namespace frictionless

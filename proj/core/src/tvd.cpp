#include "euler1d/tvd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace euler1d {

namespace {

double limiter_phi(Limiter lim, double theta) {
  switch (lim) {
    case Limiter::van_leer: return (theta + std::abs(theta)) / (1.0 + std::abs(theta));
    case Limiter::minmod: return std::max(0.0, std::min(1.0, theta));
  }
  return 0.0;
}

void check_cfg(const TvdConfig& cfg) {
  if (cfg.nx < 8) throw Error(Errc::bad_params, "TvdConfig: nx must be >= 8");
  if (!(cfg.dt > 0.0) || !(cfg.T >= 0.0) || !(cfg.x_max > cfg.x_min)) {
    throw Error(Errc::bad_params, "TvdConfig: need dt > 0, T >= 0, x_max > x_min");
  }
}

bool want_snapshot(const TvdConfig& cfg, double t_prev, double t_now) {
  for (double ts : cfg.save_times) {
    if (ts > t_prev && ts <= t_now + 1e-12) return true;
  }
  return false;
}

}  // namespace

GridField make_scalar_field(const std::vector<double>& x, const std::vector<double>& v,
                            std::string name) {
  if (x.size() != v.size()) throw Error(Errc::bad_params, "make_scalar_field: size mismatch");
  GridField f;
  f.x = x;
  f.names = {std::move(name)};
  f.rows = {v};
  return f;
}

GridField make_state_field(const std::vector<double>& x,
                           const std::function<State(double)>& fn) {
  GridField f;
  f.x = x;
  f.names = {"rho", "u", "S"};
  f.rows.assign(3, std::vector<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const State s = fn(x[i]);
    f.rows[0][i] = s.rho;
    f.rows[1][i] = s.u;
    f.rows[2][i] = s.S;
  }
  return f;
}

double total_variation(const GridField& field, std::size_t row) {
  if (row >= field.rows.size()) throw Error(Errc::bad_params, "total_variation: bad row");
  const auto& v = field.rows[row];
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) tv += std::abs(v[i + 1] - v[i]);
  return tv;
}

std::vector<GridField> advance_scalar(const TvdConfig& cfg, const ScalarClosure& lambda,
                                      const ScalarClosure& rhs, const GridField& v0) {
  check_cfg(cfg);
  if (v0.rows.size() != 1 || v0.x.size() != static_cast<std::size_t>(cfg.nx)) {
    throw Error(Errc::bad_params, "advance_scalar: v0 must have one row on the config grid");
  }
  const int n = cfg.nx;
  const double dx = (cfg.x_max - cfg.x_min) / (n - 1);
  const int ng = 2;  // ghost nodes per side

  std::vector<double> v(n + 2 * ng), vn(n + 2 * ng);
  for (int i = 0; i < n; ++i) v[ng + i] = v0.rows[0][i];

  auto fill_ghosts = [&](std::vector<double>& a) {
    for (int g = 0; g < ng; ++g) {
      a[g] = (cfg.boundary == BoundaryKind::outflow) ? a[ng] : v0.rows[0].front();
      a[n + ng + g] = (cfg.boundary == BoundaryKind::outflow) ? a[n + ng - 1] : v0.rows[0].back();
    }
  };

  std::vector<GridField> frames;
  auto snapshot = [&](double t) {
    GridField f;
    f.time = t;
    f.x = v0.x;
    f.names = v0.names;
    f.rows = {std::vector<double>(v.begin() + ng, v.begin() + ng + n)};
    frames.push_back(std::move(f));
  };
  snapshot(0.0);

  double t = 0.0;
  const long nsteps = static_cast<long>(std::llround(cfg.T / cfg.dt));
  std::vector<double> speed(n + 2 * ng - 1), wave(n + 2 * ng - 1), corr(n + 2 * ng - 1);

  for (long step = 0; step < nsteps; ++step) {
    fill_ghosts(v);
    const double nu = cfg.dt / dx;

    double max_speed = 0.0;
    for (int i = 0; i + 1 < n + 2 * ng; ++i) {
      speed[i] = 0.5 * (lambda(v[i]) + lambda(v[i + 1]));
      wave[i] = v[i + 1] - v[i];
      max_speed = std::max(max_speed, std::abs(speed[i]));
      if (!std::isfinite(speed[i]) || !std::isfinite(wave[i])) {
        throw Error(Errc::non_finite, "advance_scalar: state not finite");
      }
    }
    if (max_speed * nu > 1.0) {
      throw Error(Errc::cfl_violation, "advance_scalar: CFL number exceeds 1");
    }

    // limited second-order correction fluxes
    for (int i = 0; i + 1 < n + 2 * ng; ++i) {
      double theta = 0.0;
      if (wave[i] != 0.0) {
        const int up = speed[i] >= 0.0 ? i - 1 : i + 1;
        theta = (up >= 0 && up + 1 < n + 2 * ng) ? wave[up] / wave[i] : 1.0;
      }
      const double phi = limiter_phi(cfg.limiter, theta);
      corr[i] = 0.5 * std::abs(speed[i]) * (1.0 - nu * std::abs(speed[i])) * phi * wave[i];
    }

    for (int i = ng; i < n + ng; ++i) {
      const double apdq = std::max(speed[i - 1], 0.0) * wave[i - 1];  // right-going, from i-1/2
      const double amdq = std::min(speed[i], 0.0) * wave[i];          // left-going, from i+1/2
      vn[i] = v[i] - nu * (apdq + amdq) - nu * (corr[i] - corr[i - 1]);
      // explicit midpoint source
      const double mid = vn[i] + 0.5 * cfg.dt * rhs(vn[i]);
      vn[i] += cfg.dt * rhs(mid);
      if (!std::isfinite(vn[i])) throw Error(Errc::non_finite, "advance_scalar: blow-up");
    }
    std::swap(v, vn);
    const double t_prev = t;
    t = (step + 1) * cfg.dt;
    if (cfg.record_steps || want_snapshot(cfg, t_prev, t)) snapshot(t);
  }
  if (frames.back().time < t - 1e-12) snapshot(t);
  return frames;
}

std::vector<GridField> advance_system(const TvdConfig& cfg, const PressureLaw& law,
                                      const SourceTerm& f, const GridField& U0) {
  check_cfg(cfg);
  if (U0.rows.size() != 3 || U0.x.size() != static_cast<std::size_t>(cfg.nx)) {
    throw Error(Errc::bad_params, "advance_system: U0 must carry rho,u,S on the config grid");
  }
  const int n = cfg.nx;
  const double dx = (cfg.x_max - cfg.x_min) / (n - 1);
  const int ng = 2;
  const int m = n + 2 * ng;

  std::vector<std::array<double, 3>> U(m), Un(m);
  for (int i = 0; i < n; ++i) U[ng + i] = {U0.rows[0][i], U0.rows[1][i], U0.rows[2][i]};

  auto fill_ghosts = [&]() {
    for (int g = 0; g < ng; ++g) {
      U[g] = (cfg.boundary == BoundaryKind::outflow)
                 ? U[ng]
                 : std::array<double, 3>{U0.rows[0].front(), U0.rows[1].front(),
                                         U0.rows[2].front()};
      U[n + ng + g] = (cfg.boundary == BoundaryKind::outflow)
                          ? U[n + ng - 1]
                          : std::array<double, 3>{U0.rows[0].back(), U0.rows[1].back(),
                                                  U0.rows[2].back()};
    }
  };

  std::vector<GridField> frames;
  auto snapshot = [&](double t) {
    GridField fr;
    fr.time = t;
    fr.x = U0.x;
    fr.names = {"rho", "u", "S"};
    fr.rows.assign(3, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
      fr.rows[0][i] = U[ng + i][0];
      fr.rows[1][i] = U[ng + i][1];
      fr.rows[2][i] = U[ng + i][2];
    }
    frames.push_back(std::move(fr));
  };
  snapshot(0.0);

  struct Iface {
    std::array<double, 3> lam;
    std::array<std::array<double, 3>, 3> right;
    std::array<double, 3> alpha;  // wave strengths
  };
  std::vector<Iface> ifc(m - 1);
  std::vector<std::array<double, 3>> corr(m - 1);

  double t = 0.0;
  const long nsteps = static_cast<long>(std::llround(cfg.T / cfg.dt));
  for (long step = 0; step < nsteps; ++step) {
    fill_ghosts();
    const double nu = cfg.dt / dx;

    double max_speed = 0.0;
    for (int i = 0; i + 1 < m; ++i) {
      State mid{0.5 * (U[i][0] + U[i + 1][0]), 0.5 * (U[i][1] + U[i + 1][1]),
                0.5 * (U[i][2] + U[i + 1][2])};
      if (!(mid.rho > 0.0)) throw Error(Errc::vacuum_formed, "advance_system: rho <= 0");
      const EigenStructure es = eigen(law, mid);
      ifc[i].lam = es.lambda;
      ifc[i].right = es.right;
      for (int p = 0; p < 3; ++p) {
        const auto& l = es.left[p];
        ifc[i].alpha[p] = l[0] * (U[i + 1][0] - U[i][0]) + l[1] * (U[i + 1][1] - U[i][1]) +
                          l[2] * (U[i + 1][2] - U[i][2]);
        max_speed = std::max(max_speed, std::abs(es.lambda[p]));
      }
    }
    if (max_speed * nu > 1.0) {
      throw Error(Errc::cfl_violation, "advance_system: CFL number exceeds 1");
    }

    for (int i = 0; i + 1 < m; ++i) {
      for (int p = 0; p < 3; ++p) {
        double theta = 0.0;
        if (ifc[i].alpha[p] != 0.0) {
          const int up = ifc[i].lam[p] >= 0.0 ? i - 1 : i + 1;
          theta = (up >= 0 && up + 1 < m) ? ifc[up].alpha[p] / ifc[i].alpha[p] : 1.0;
        }
        const double phi = limiter_phi(cfg.limiter, theta);
        const double a = std::abs(ifc[i].lam[p]);
        const double mag = 0.5 * a * (1.0 - nu * a) * phi * ifc[i].alpha[p];
        for (int c = 0; c < 3; ++c) {
          corr[i][c] = (p == 0 ? 0.0 : corr[i][c]) + mag * ifc[i].right[p][c];
        }
      }
    }

    for (int i = ng; i < n + ng; ++i) {
      std::array<double, 3> upd = U[i];
      for (int p = 0; p < 3; ++p) {
        const double sl = ifc[i - 1].lam[p], sr = ifc[i].lam[p];
        const double ap = std::max(sl, 0.0) * ifc[i - 1].alpha[p];
        const double am = std::min(sr, 0.0) * ifc[i].alpha[p];
        for (int c = 0; c < 3; ++c) {
          upd[c] -= nu * (ap * ifc[i - 1].right[p][c] + am * ifc[i].right[p][c]);
        }
      }
      for (int c = 0; c < 3; ++c) upd[c] -= nu * (corr[i][c] - corr[i - 1][c]);
      // pointwise momentum source, explicit midpoint
      const double f0 = f.f(upd[0], upd[1], upd[2]);
      const double umid = upd[1] + 0.5 * cfg.dt * f0;
      upd[1] += cfg.dt * f.f(upd[0], umid, upd[2]);
      if (!(upd[0] > 0.0)) throw Error(Errc::vacuum_formed, "advance_system: rho <= 0");
      for (double c : upd) {
        if (!std::isfinite(c)) throw Error(Errc::non_finite, "advance_system: blow-up");
      }
      Un[i] = upd;
    }
    for (int i = ng; i < n + ng; ++i) U[i] = Un[i];
    const double t_prev = t;
    t = (step + 1) * cfg.dt;
    if (want_snapshot(cfg, t_prev, t)) snapshot(t);
  }
  if (frames.back().time < t - 1e-12) snapshot(t);
  return frames;
}

namespace {

void put17(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_state_csv(std::ostream& os, const GridField& field, const PressureLaw& law) {
  if (field.rows.size() != 3) {
    throw Error(Errc::bad_params, "write_state_csv: field must carry rho,u,S");
  }
  os << "x,rho,u,S,p,c\n";
  for (std::size_t i = 0; i < field.x.size(); ++i) {
    const State s{field.rows[0][i], field.rows[1][i], field.rows[2][i]};
    put17(os, field.x[i]);
    os << ',';
    put17(os, s.rho);
    os << ',';
    put17(os, s.u);
    os << ',';
    put17(os, s.S);
    os << ',';
    put17(os, pressure(law, s));
    os << ',';
    put17(os, sound_speed(law, s));
    os << '\n';
  }
}

void write_field_csv(std::ostream& os, const GridField& field) {
  os << "x";
  for (const auto& n : field.names) os << ',' << n;
  os << '\n';
  for (std::size_t i = 0; i < field.x.size(); ++i) {
    put17(os, field.x[i]);
    for (const auto& row : field.rows) {
      os << ',';
      put17(os, row[i]);
    }
    os << '\n';
  }
}

}  // namespace euler1d

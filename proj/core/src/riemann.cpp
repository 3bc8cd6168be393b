#include "euler1d/riemann.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace euler1d {

// ---------------------------------------------------------------------------
// WaveSystem / IdealCcc
// ---------------------------------------------------------------------------

State WaveSystem::state_of(double R1, double R2, double v) const {
  return from_char(law, CharField{R1, R2, v, tag});
}

double WaveSystem::lambdaN(double R1, double R2, double v) const {
  return lambda_of(law, state_of(R1, R2, v), tag);
}

double WaveSystem::h_rhs(double R1, double R2, double v) const {
  const State s = state_of(R1, R2, v);
  const EigenStructure es = eigen(law, s);
  const int j = v_index(tag);
  const int Nidx = tag == SpeedTag::lambda3 ? 2 : 1;
  const auto idx = constraint_indices(tag);
  const double fv = source(s);
  double acc = (j == 1) ? fv : 0.0;  // B = (0, f, 0)
  for (int b = 0; b < 2; ++b) {
    acc += (es.lambda[Nidx] - es.lambda[idx[b]]) * q_alpha(b, s) * es.right[idx[b]][j];
  }
  return acc;
}

std::array<double, 2> WaveSystem::H_vec(double R1, double R2, double v) const {
  const State s = state_of(R1, R2, v);
  const EigenStructure es = eigen(law, s);
  const auto sg = sigma_matrix(law, s, tag);
  const int Nidx = tag == SpeedTag::lambda3 ? 2 : 1;
  const auto idx = constraint_indices(tag);
  const double fv = source(s);
  std::array<double, 2> H{0.0, 0.0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double lB = es.left[idx[b]][1] * fv;
      H[a] += sg[a][b] * lB + (es.lambda[Nidx] - es.lambda[idx[b]]) * sg[a][b] * q_alpha(b, s);
    }
  }
  return H;
}

double IdealCcc::equilibrium_entropy() const {
  if (k0 == 0.0) throw Error(Errc::bad_params, "IdealCcc: k0 must be nonzero");
  return s_hat + cv * std::log(k2 * k2 / (4.0 * gamma * k0 * k0));
}

double IdealCcc::u_on_curve(double rho) const {
  return -k1 / k0 + k2 * std::pow(rho, 0.5 * (gamma - 1.0)) / (k0 * (gamma - 1.0));
}

double IdealCcc::f(double rho, double u, double) const {
  return k2 / (1.0 - gamma) * std::pow(rho, gamma) +
         (k0 * u + k1) * std::pow(rho, 0.5 * (gamma + 1.0));
}

WaveSystem make_ccc_system(const IdealCcc& p) {
  if (!(p.gamma > 1.0) || p.k0 == 0.0) {
    throw Error(Errc::bad_params, "make_ccc_system: gamma > 1 and k0 != 0 required");
  }
  WaveSystem ws;
  ws.law = p.gas();
  ws.tag = SpeedTag::lambda3;
  ws.source = {[p](double rho, double u, double S) { return p.f(rho, u, S); },
               "k2/(1-gamma) rho^gamma + (k0 u + k1) rho^((gamma+1)/2)"};
  ws.q_a = [p](const State& s) { return p.f(s.rho, s.u, s.S); };
  const IdealGas gas = p.gas();
  ws.q_b = [p, gas](const State& s) {
    const double A = gas.A(s.S);
    // q2 = rho F(S), F = (k2 - 2 k0 sqrt(gamma A)) / A'(S)
    return s.rho * (p.k2 - 2.0 * p.k0 * std::sqrt(p.gamma * A)) * p.cv / A;
  };
  return ws;
}

// ---------------------------------------------------------------------------
// solve_rp
// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const char* hypothesis) {
  if (!ok) {
    throw Error(Errc::inadmissible_data, std::string("hypothesis violated: ") + hypothesis);
  }
}

struct FanMachine {
  WaveSystem sys;
  double R1, R2;
  Profile v0;

  // integrate (v_hat, x) from the origin up to time t for label a
  std::array<double, 2> at(double t, double a) const {
    const double va = v0(a);
    if (t == 0.0) return {va, 0.0};
    OdeConfig oc;
    oc.tol = 1e-12;
    const Trajectory tr = ode_solve(
        [this](double, const std::vector<double>& y, std::vector<double>& d) {
          d[0] = sys.h_rhs(R1, R2, y[0]);
          d[1] = sys.lambdaN(R1, R2, y[0]);
        },
        {va, 0.0}, 0.0, t, oc);
    return {tr.eval(t, 0), tr.eval(t, 1)};
  }
};

}  // namespace

RPSolution solve_rp(const RPInput& in) {
  const WaveSystem& sys = in.sys;
  const double tol = 1e-10;

  require(std::abs(sys.source(in.left)) <= tol && std::abs(sys.source(in.right)) <= tol,
          "source equilibrium");
  require(std::abs(sys.q_alpha(0, in.left)) <= tol && std::abs(sys.q_alpha(1, in.left)) <= tol &&
              std::abs(sys.q_alpha(0, in.right)) <= tol &&
              std::abs(sys.q_alpha(1, in.right)) <= tol,
          "constraint equilibrium");

  const CharField cl = to_char(sys.law, in.left, sys.tag);
  const CharField cr = to_char(sys.law, in.right, sys.tag);
  require(std::abs(cl.R1 - cr.R1) <= tol * std::max(1.0, std::abs(cl.R1)) &&
              std::abs(cl.R2 - cr.R2) <= tol * std::max(1.0, std::abs(cl.R2)),
          "riemann invariant match");

  const double lam_L = lambda_of(sys.law, in.left, sys.tag);
  const double lam_R = lambda_of(sys.law, in.right, sys.tag);
  const double vscale = std::max({1.0, std::abs(cl.v), std::abs(cr.v)});
  const bool degenerate = std::abs(cl.v - cr.v) <= 1e-12 * vscale;
  require(degenerate || lam_L < lam_R, "lambda ordering");

  Profile v0 = in.v0 ? *in.v0 : Profile::linear(cl.v, cr.v - cl.v);
  {
    const double ptol = 1e-9 * vscale;
    require(std::abs(v0(0.0) - cl.v) <= ptol && std::abs(v0(1.0) - cr.v) <= ptol,
            "fan datum endpoints");
    for (int i = 0; i < 33; ++i) {
      const auto H = sys.H_vec(cl.R1, cl.R2, v0(i / 32.0));
      require(std::abs(H[0]) <= 1e-9 && std::abs(H[1]) <= 1e-9, "fan source (ch)");
    }
  }

  RPSolution out;
  out.left = in.left;
  out.right = in.right;
  out.lambda_L = lam_L;
  out.lambda_R = lam_R;
  out.R1 = cl.R1;
  out.R2 = cl.R2;
  out.tag = sys.tag;
  out.degenerate = degenerate;

  auto fan = std::make_shared<FanMachine>(FanMachine{sys, cl.R1, cl.R2, v0});
  out.fan_x = [fan](double t, double a) { return fan->at(t, a)[1]; };
  out.fan_v = [fan](double t, double a) { return fan->at(t, a)[0]; };

  const State left = in.left, right = in.right;
  const double R1 = cl.R1, R2 = cl.R2;
  const WaveSystem sys_copy = sys;
  if (degenerate) {
    out.eval = [left](double, double) { return left; };
    return out;
  }
  out.eval = [fan, left, right, lam_L, lam_R, R1, R2, sys_copy](double x, double t) -> State {
    if (t <= 0.0) return x < 0.0 ? left : right;
    if (x <= lam_L * t) return left;
    if (x >= lam_R * t) return right;
    RootConfig rc;
    rc.abs_tol = 1e-13 * std::max(1.0, std::abs(x));
    rc.max_expansions = 0;
    const double a = find_root([&](double aa) { return fan->at(t, aa)[1] - x; }, 0.0, 1.0, rc);
    const double v = fan->at(t, a)[0];
    return sys_copy.state_of(R1, R2, v);
  };
  return out;
}

std::vector<State> rarefaction_curve(const WaveSystem& sys, const State& left,
                                     std::span<const double> rhos) {
  if (sys.tag != SpeedTag::lambda3) {
    throw Error(Errc::bad_params, "rarefaction_curve: defined for the lambda3 family");
  }
  const CharField cl = to_char(sys.law, left, sys.tag);
  std::vector<State> out;
  out.reserve(rhos.size());
  for (double rho : rhos) {
    State s{rho, 0.0, cl.R2};
    s.u = cl.R1 + char_integral(sys.law, s);  // R1 = u - int c/rho drho
    (void)sound_speed(sys.law, s);            // hyperbolicity guard
    out.push_back(s);
  }
  return out;
}

RPSolution explicit_ideal_rp(const IdealCcc& p, double rho_L, double rho_R) {
  if (!(p.gamma > 1.0) || p.k0 == 0.0 || p.k2 == 0.0) {
    throw Error(Errc::bad_params, "explicit_ideal_rp: gamma > 1, k0 != 0, k2 != 0 required");
  }
  require(p.k2 / p.k0 > 0.0, "lambda ordering");
  require(rho_L <= rho_R, "lambda ordering");
  const double S_eq = p.equilibrium_entropy();
  const IdealGas gas = p.gas();
  const PressureLaw law = gas;

  const State left{rho_L, p.u_on_curve(rho_L), S_eq};
  const State right{rho_R, p.u_on_curve(rho_R), S_eq};
  const double lam_L = left.u + sound_speed(law, left);
  const double lam_R = right.u + sound_speed(law, right);

  RPSolution out;
  out.left = left;
  out.right = right;
  out.lambda_L = lam_L;
  out.lambda_R = lam_R;
  out.R1 = -p.k1 / p.k0;
  out.R2 = S_eq;
  out.tag = SpeedTag::lambda3;
  out.degenerate = rho_L == rho_R;

  const double g = p.gamma, k0 = p.k0, k1 = p.k1, k2 = p.k2;
  auto fan_u = [g, k0, k1](double x, double t) {
    return (2.0 * x / t - (g - 1.0) * k1 / k0) / (g + 1.0);
  };
  auto rho_of_u = [g, k0, k2, left](double u) {
    const double half = std::pow(left.rho, 0.5 * (g - 1.0)) + k0 * (g - 1.0) * (u - left.u) / k2;
    return std::pow(half, 2.0 / (g - 1.0));
  };
  auto lambda_of_u = [g, k0, k1](double u) {
    // lambda = u + c with c = (gamma-1)(u + k1/k0)/2 on the curve
    return u + 0.5 * (g - 1.0) * (u + k1 / k0);
  };

  out.eval = [left, right, lam_L, lam_R, fan_u, rho_of_u, S_eq](double x, double t) -> State {
    if (t <= 0.0) return x < 0.0 ? left : right;
    if (x <= lam_L * t) return left;
    if (x >= lam_R * t) return right;
    const double u = fan_u(x, t);
    return State{rho_of_u(u), u, S_eq};
  };
  const double vL = left.u, vR = right.u;
  out.fan_v = [vL, vR](double, double a) { return vL + a * (vR - vL); };
  out.fan_x = [vL, vR, lambda_of_u](double t, double a) {
    return lambda_of_u(vL + a * (vR - vL)) * t;
  };
  return out;
}

RPSolution contact_rp(const RPInput& in) {
  const WaveSystem& sys = in.sys;
  const bool exceptional =
      sys.tag == SpeedTag::lambda2 || !std::holds_alternative<IdealGas>(sys.law);
  require(exceptional, "exceptional speed");

  const double lam_L = lambda_of(sys.law, in.left, sys.tag);
  const double lam_R = lambda_of(sys.law, in.right, sys.tag);
  const double scale = std::max({1.0, std::abs(lam_L), std::abs(lam_R)});
  require(std::abs(lam_L - lam_R) <= 1e-10 * scale, "lambda match");

  const CharField cl = to_char(sys.law, in.left, sys.tag);
  const CharField cr = to_char(sys.law, in.right, sys.tag);
  require(std::abs(cl.R1 - cr.R1) <= 1e-10 * std::max(1.0, std::abs(cl.R1)) &&
              std::abs(cl.R2 - cr.R2) <= 1e-10 * std::max(1.0, std::abs(cl.R2)),
          "riemann invariant match");

  RPSolution out;
  out.left = in.left;
  out.right = in.right;
  out.lambda_L = lam_L;
  out.lambda_R = lam_L;
  out.R1 = cl.R1;
  out.R2 = cl.R2;
  out.tag = sys.tag;
  const State left = in.left, right = in.right;
  const double lam = lam_L;
  out.eval = [left, right, lam](double x, double t) { return x < lam * t ? left : right; };
  out.fan_x = [lam](double t, double) { return lam * t; };
  const double vL = cl.v;
  out.fan_v = [vL](double, double) { return vL; };
  return out;
}

// ---------------------------------------------------------------------------
// equilibrium subsystem and the subcharacteristic condition
// ---------------------------------------------------------------------------

EquilibriumSubsystem equilibrium_subsystem(const WaveSystem& sys) {
  const SourceTerm f = sys.source;
  auto u_hat = [f](double rho, double S) {
    RootConfig rc;
    rc.abs_tol = 1e-14;
    try {
      return find_root([&](double u) { return f.f(rho, u, S); }, -1.0, 1.0, rc);
    } catch (const Error& e) {
      if (e.code() == Errc::no_bracket) {
        throw Error(Errc::no_equilibrium, "equilibrium_subsystem: f has no zero in u");
      }
      throw;
    }
  };
  auto u_hat_rho = [u_hat](double rho, double S) {
    const double h = 1e-6 * std::max(1.0, std::abs(rho));
    return (u_hat(rho + h, S) - u_hat(rho - h, S)) / (2.0 * h);
  };
  return EquilibriumSubsystem{u_hat, u_hat_rho, true};
}

EquilibriumSubsystem equilibrium_subsystem(const IdealCcc& p) {
  if (p.k0 == 0.0) throw Error(Errc::bad_params, "equilibrium_subsystem: k0 must be nonzero");
  const double g = p.gamma, k0 = p.k0, k1 = p.k1, k2 = p.k2;
  return EquilibriumSubsystem{
      [g, k0, k1, k2](double rho, double) {
        return -k1 / k0 + k2 * std::pow(rho, 0.5 * (g - 1.0)) / (k0 * (g - 1.0));
      },
      [g, k0, k2](double rho, double) { return k2 * std::pow(rho, 0.5 * (g - 3.0)) / (2.0 * k0); },
      true};
}

SubcharReport subcharacteristic_check(const EquilibriumSubsystem& sub, const PressureLaw& law,
                                      std::span<const State> states) {
  SubcharReport rep;
  rep.pass = true;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (const State& s : states) {
    SubcharRow row;
    row.s = s;
    row.c = sound_speed(law, s);
    row.rho_u_rho = s.rho * sub.u_hat_rho(s.rho, s.S);
    row.margin = row.c - row.rho_u_rho;
    row.pass = row.margin >= -1e-12;
    rep.min_margin = std::min(rep.min_margin, row.margin);
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<double> asymptotic_compare(const RPSolution& rp, const EquilibriumSubsystem& sub,
                                       std::span<const double> times, double x_lo, double x_hi,
                                       int nx) {
  if (nx < 2) throw Error(Errc::bad_params, "asymptotic_compare: nx must be >= 2");
  const double S0 = rp.left.S;
  const double rho_L = rp.left.rho, rho_R = rp.right.rho;
  const double mu_L = sub.mu2(rho_L, S0), mu_R = sub.mu2(rho_R, S0);
  const double dx = (x_hi - x_lo) / (nx - 1);

  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    double l1 = 0.0;
    for (int i = 0; i < nx; ++i) {
      const double x = x_lo + i * dx;
      const double rho_full = rp.eval(x, t).rho;
      double rho_sub;
      if (t <= 0.0) {
        rho_sub = x < 0.0 ? rho_L : rho_R;
      } else if (x <= mu_L * t) {
        rho_sub = rho_L;
      } else if (x >= mu_R * t) {
        rho_sub = rho_R;
      } else {
        RootConfig rc;
        rc.abs_tol = 1e-13 * std::max(1.0, rho_R);
        rc.max_expansions = 0;
        rho_sub = find_root([&](double r) { return sub.mu2(r, S0) - x / t; }, rho_L, rho_R, rc);
      }
      l1 += std::abs(rho_full - rho_sub) * dx;
    }
    out.push_back(l1);
  }
  return out;
}

}  // namespace euler1d

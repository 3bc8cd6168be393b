#include <cmath>

#include "families_impl.hpp"

namespace euler1d::detail {

namespace {

Profile profile_from_fn(std::function<double(double)> f) {
  auto fd = [f](double x) { return fd_derivative(f, x, 1e-6 * std::max(1.0, std::abs(x))); };
  return Profile::callable(std::move(f), std::move(fd));
}

std::function<double(double)> crossing_witness_fn(std::function<double(double, double)> x_of,
                                                  double xi, double delta) {
  return [x_of = std::move(x_of), xi, delta](double t) {
    return (x_of(xi + delta, t) - x_of(xi - delta, t)) / (2.0 * delta);
  };
}

// ---------------------------------------------------------------------------
// L2_I: F1 = F2 = 0; profiles ride dx/dt = u0 unchanged.
// ---------------------------------------------------------------------------

struct L2IImpl final : FamilyImpl {
  L2IParams p;

  double xi_of(double x, double t) const override {
    check_time(t);
    const double xi = x - p.u0 * t;
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    return State{prho0(xi), p.u0, pS0(xi)};
  }

  SourceTerm source() const override { return p.f; }

  double q_alpha(int, const State& s) const override { return p.f(s); }
};

// ---------------------------------------------------------------------------
// L2_II: F1 = 0, u spatially uniform and damped by F2.
// ---------------------------------------------------------------------------

struct L2IiImpl final : FamilyImpl {
  L2IiParams p;
  Trajectory traj{{0.0}, {{0.0, 0.0}}, {{0.0, 0.0}}};  // (u_hat, X = int u_hat dt)

  double xi_of(double x, double t) const override {
    check_time(t);
    const double xi = x - traj.eval(t, 1);
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    return State{prho0(xi), traj.eval(t, 0), pS0(xi)};
  }

  SourceTerm source() const override {
    const auto F2 = p.F2;
    const auto psi = p.psi;
    const PressureLaw law = plaw;
    return {[F2, psi, law](double rho, double u, double S) {
              const double pval = pressure(law, State{rho, u, S});
              return -F2(u) + psi(pval, S) / rho;
            },
            "-F2(u) + psi(p, S)/rho"};
  }

  double q_alpha(int, const State& s) const override {
    return p.psi(pressure(plaw, s), s.S) / s.rho;
  }
};

// ---------------------------------------------------------------------------
// L2_III: F2 = 0, ideal gas, density relaxes along straight characteristics.
// ---------------------------------------------------------------------------

struct L2IiiImpl final : FamilyImpl {
  L2IiiParams p;
  IdealGas gas;

  double x_of_xi(double xi, double t) const { return pu0(xi) * t + xi; }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double r0 = prho0(xi);
    const double atil = std::pow(gas.A(pS0(xi)), -1.0 / p.gamma);
    return State{r0 * atil / (r0 * t + atil), pu0(xi), pS0(xi)};
  }

  SourceTerm source() const override {
    const auto pi0 = p.pi0;
    const double g = p.gamma;
    return {[pi0, g](double rho, double u, double) { return pi0(u) * std::pow(rho, g + 1.0); },
            "pi0(u) rho^(gamma+1)"};
  }

  double F1_of(const State& s) const {
    const double pv = pressure(plaw, s);
    return p.gamma * std::pow(pv, 1.0 + 1.0 / p.gamma);
  }

  double q_alpha(int alpha, const State& s) const override {
    const double f = source()(s);
    const double corr = F1_of(s) / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? f - corr : f + corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm&) const override {
    const PressureLaw law = plaw;
    const IdealGas g = gas;
    const double gamma = p.gamma;
    out.push_back({"phi-structure", [law, g, gamma](const State& s) {
                     const double pv = pressure(law, s);
                     const double lhs = gamma * std::pow(pv, 1.0 + 1.0 / gamma);
                     const double rhs = s.rho * s.rho * pressure_rho(law, s) *
                                        std::pow(g.A(s.S), 1.0 / gamma);
                     return lhs - rhs;
                   }});
  }
};

// ---------------------------------------------------------------------------
// L2_IV case 1: k1 = 0, u = -k0 x, exponentially stretched labels.
// ---------------------------------------------------------------------------

struct L2Iv1Impl final : FamilyImpl {
  L2Iv1Params p;
  IdealGas gas;

  double xi_of(double x, double t) const override {
    check_time(t);
    const double xi = x * std::exp(p.k0 * t);
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    return State{prho0(xi) * std::exp(p.k0 * t), -p.k0 * x, pS0(xi)};
  }

  SourceTerm source() const override {
    const double k0 = p.k0, mu0 = p.mu0, g = p.gamma;
    return {[k0, mu0, g](double rho, double u, double) {
              return -k0 * u + mu0 * std::pow(u, -(g + 1.0)) / rho;
            },
            "-k0 u + mu0 u^-(gamma+1) / rho"};
  }

  double q_alpha(int alpha, const State& s) const override {
    const double mu = p.mu0 * std::pow(s.u, -(p.gamma + 1.0));
    const double pv = pressure(plaw, s);
    const double corr = p.k0 * p.gamma * pv / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? mu / s.rho + corr : mu / s.rho - corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const double k0 = p.k0, mu0 = p.mu0, g = p.gamma;
    out.push_back({"mu-structure", [k0, mu0, g, f](const State& s) {
                     return s.rho * (f(s) + k0 * s.u) - mu0 * std::pow(s.u, -(g + 1.0));
                   }});
  }
};

// ---------------------------------------------------------------------------
// L2_IV case 2: mu = 0, linear damping f = -k0 u - k1.
// ---------------------------------------------------------------------------

struct L2Iv2Impl final : FamilyImpl {
  L2Iv2Params p;
  IdealGas gas;
  double u_hat0 = 0.0;  // initial velocity slope
  double q_hat = 0.0;   // rho0 A0^(1/gamma), constant by (kj)

  double xi_of(double x, double t) const override {
    check_time(t);
    const double E = std::expm1(-p.k0 * t);
    const double den = p.k0 * (p.k0 - u_hat0 * E);
    if (den == 0.0) throw Error(Errc::out_of_validity, "L2_IV_2: label map degenerate");
    const double xi = (p.k0 * (p.k0 * x + p.k1 * t) + p.k1 * E) / den;
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double den = p.k0 + p.k1 * q_hat * std::expm1(p.k0 * t);
    if (!(den * p.k0 > 0.0)) {
      throw Error(Errc::out_of_validity, "L2_IV_2: density denominator vanished");
    }
    State s;
    s.rho = p.k0 * prho0(xi) * std::exp(p.k0 * t) / den;
    s.u = -p.k1 / p.k0 + (pu0(xi) + p.k1 / p.k0) * std::exp(-p.k0 * t);
    s.S = pS0(xi);
    return s;
  }

  SourceTerm source() const override {
    const double k0 = p.k0, k1 = p.k1;
    return {[k0, k1](double, double u, double) { return -k0 * u - k1; }, "-k0 u - k1"};
  }

  double F1_of(const State& s) const {
    const double pv = pressure(plaw, s);
    return p.gamma * (-p.k0 * pv + p.k1 * std::pow(pv, 1.0 + 1.0 / p.gamma));
  }

  double q_alpha(int alpha, const State& s) const override {
    const double corr = F1_of(s) / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? -corr : corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm&) const override {
    const PressureLaw law = plaw;
    const IdealGas g = gas;
    const double gamma = p.gamma, k0 = p.k0, k1 = p.k1;
    out.push_back({"h-structure", [law, g, gamma, k0, k1](const State& s) {
                     const double pv = pressure(law, s);
                     const double lhs = gamma * (-k0 * pv + k1 * std::pow(pv, 1.0 + 1.0 / gamma));
                     const double rhs = s.rho * pressure_rho(law, s) *
                                        (-k0 + s.rho * k1 * std::pow(g.A(s.S), 1.0 / gamma));
                     return lhs - rhs;
                   }});
  }
};

// ---------------------------------------------------------------------------
// L2_IV Von Karman variant: mu = 0, p spatially uniform and decaying.
// ---------------------------------------------------------------------------

struct L2IvVkImpl final : FamilyImpl {
  L2IvVkParams p;

  double x_of_xi(double xi, double t) const {
    const double E = std::expm1(-p.k0 * t);
    return xi - p.k1 / p.k0 * t - (pu0(xi) + p.k1 / p.k0) * E / p.k0;
  }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double S = pS0(xi);
    const double a = p.a(S);
    const double den = p.b(S) - p.c0 * std::exp(-p.k0 * t);
    if (!(den > 0.0)) throw Error(Errc::out_of_validity, "L2_IV_VK: density denominator vanished");
    State s;
    s.rho = a * a / den;
    s.u = -p.k1 / p.k0 + (pu0(xi) + p.k1 / p.k0) * std::exp(-p.k0 * t);
    s.S = S;
    return s;
  }

  SourceTerm source() const override {
    const double k0 = p.k0, k1 = p.k1;
    return {[k0, k1](double, double u, double) { return -(k0 * u + k1); }, "-(k0 u + k1)"};
  }

  double q_alpha(int alpha, const State& s) const override {
    const double corr = p.k0 * pressure(plaw, s) / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? -corr : corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm&) const override {
    const PressureLaw law = plaw;
    const EntropyFn a = p.a, b = p.b;
    const double k0 = p.k0;
    out.push_back({"h-structure", [law, a, b, k0](const State& s) {
                     const double av = a(s.S);
                     const double lhs = k0 * pressure(law, s);
                     const double rhs = s.rho * pressure_rho(law, s) *
                                        (-k0 + s.rho * k0 * b(s.S) / (av * av));
                     return lhs - rhs;
                   }});
  }
};

// ---------------------------------------------------------------------------
// L2_V: p = k0 x frozen in time, velocity amplified exponentially.
// ---------------------------------------------------------------------------

struct L2VImpl final : FamilyImpl {
  L2VParams p;

  double growth(double t) const {  // (e^{k0 k1 t} - 1)/(k0 k1)
    const double w = p.k0 * p.k1;
    return w == 0.0 ? t : std::expm1(w * t) / w;
  }

  double x_of_xi(double xi, double t) const { return xi + pu0(xi) * growth(t); }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double S = pS0(xi);
    const double a = p.a(S);
    const double den = p.b(S) - p.k0 * x;  // b(S) - p with p = k0 x
    if (!(den > 0.0)) throw Error(Errc::out_of_validity, "L2_V: density denominator vanished");
    return State{a * a / den, pu0(xi) * std::exp(p.k0 * p.k1 * t), S};
  }

  SourceTerm source() const override {
    const double k0 = p.k0, k1 = p.k1;
    return {[k0, k1](double rho, double u, double) { return k0 * k1 * u + k0 / rho; },
            "k0 k1 u + k0/rho"};
  }

  double q_alpha(int alpha, const State& s) const override {
    const double base = p.k0 / s.rho;
    const double corr = p.k0 * s.u / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? base + corr : base - corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm&) const override {
    const PressureLaw law = plaw;
    const EntropyFn a = p.a;
    out.push_back({"gh-structure", [law, a](const State& s) {
                     const double av = a(s.S);
                     return s.rho * pressure_rho(law, s) * (s.rho / (av * av)) - 1.0;
                   }});
  }
};

// ---------------------------------------------------------------------------
// L2_V, Chaplygin specialization: u0 = c_hat x, everything closed form.
// ---------------------------------------------------------------------------

struct L2VChImpl final : FamilyImpl {
  L2VChParams p;

  double D_of(double t) const { return p.k0 * p.k1 + p.c_hat * std::expm1(p.k0 * p.k1 * t); }

  double xi_of(double x, double t) const override {
    check_time(t);
    const double D = D_of(t);
    if (!(D / (p.k0 * p.k1) > 0.0)) {
      throw Error(Errc::out_of_validity, "L2_V_CH: label map degenerate");
    }
    const double xi = p.k0 * p.k1 * x / D;
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double pv = p.k0 * x;
    if (!(pv < 0.0)) throw Error(Errc::out_of_validity, "L2_V_CH: requires k0 x < 0");
    State s;
    s.rho = -p.a0 * p.a0 / pv;
    s.u = p.c_hat * p.k0 * p.k1 * x * std::exp(p.k0 * p.k1 * t) / D_of(t);
    s.S = pS0(xi);
    return s;
  }

  SourceTerm source() const override {
    const double k0 = p.k0, k1 = p.k1;
    return {[k0, k1](double rho, double u, double) { return k0 * k1 * u + k0 / rho; },
            "k0 k1 u + k0/rho"};
  }

  double q_alpha(int alpha, const State& s) const override {
    const double base = p.k0 / s.rho;
    const double corr = p.k0 * s.u / (s.rho * sound_speed(plaw, s));
    return alpha == 0 ? base + corr : base - corr;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm&) const override {
    const PressureLaw law = plaw;
    const double a0 = p.a0;
    out.push_back({"gh-structure", [law, a0](const State& s) {
                     return s.rho * pressure_rho(law, s) * (s.rho / (a0 * a0)) - 1.0;
                   }});
  }
};

void base_setup2(FamilyImpl& impl, FamilyId id, PressureLaw law, const InitialData& init) {
  impl.fid = id;
  impl.plaw = std::move(law);
  impl.stag = SpeedTag::lambda2;
  impl.x_lo = init.x_lo;
  impl.x_hi = init.x_hi;
  impl.t_cap = init.t_max;
  if (!(init.x_lo < init.x_hi)) {
    throw Error(Errc::bad_params, "InitialData: x_lo must be < x_hi");
  }
}

}  // namespace

std::shared_ptr<const FamilyImpl> build_l2_i(const L2IParams& p, const InitialData& init) {
  auto impl = std::make_shared<L2IImpl>();
  base_setup2(*impl, FamilyId::l2_i, p.law, init);
  impl->p = p;
  if (!init.rho0 || !init.S0) throw Error(Errc::bad_params, "L2_I: rho0 and S0 profiles required");
  impl->prho0 = *init.rho0;
  impl->pS0 = *init.S0;
  impl->pu0 = Profile::constant(p.u0);
  impl->t_star = kInf;
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_ii(const L2IiParams& p, const InitialData& init) {
  if (!p.F2 || !p.psi) throw Error(Errc::bad_params, "L2_II: F2 and psi closures required");
  auto impl = std::make_shared<L2IiImpl>();
  base_setup2(*impl, FamilyId::l2_ii, p.law, init);
  impl->p = p;
  if (!init.rho0 || !init.S0) throw Error(Errc::bad_params, "L2_II: rho0 and S0 profiles required");
  impl->prho0 = *init.rho0;
  impl->pS0 = *init.S0;
  impl->pu0 = Profile::constant(p.u0);

  OdeConfig oc;
  oc.tol = 1e-13;
  const auto F2 = p.F2;
  impl->traj = ode_solve(
      [F2](double, const std::vector<double>& y, std::vector<double>& d) {
        d[0] = -F2(y[0]);
        d[1] = y[0];
      },
      {p.u0, 0.0}, 0.0, init.t_max, oc);
  impl->t_star = init.t_max;
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_iii(const L2IiiParams& p, const InitialData& init) {
  if (!(p.gamma > 1.0) || !p.pi0) throw Error(Errc::bad_params, "L2_III: gamma > 1 and pi0 required");
  auto impl = std::make_shared<L2IiiImpl>();
  impl->gas = IdealGas{p.gamma, p.cv, p.s_hat};
  base_setup2(*impl, FamilyId::l2_iii, impl->gas, init);
  impl->p = p;
  if (!init.rho0 || !init.S0) {
    throw Error(Errc::bad_params, "L2_III: rho0 and S0 profiles required");
  }
  impl->prho0 = *init.rho0;
  impl->pS0 = *init.S0;
  if (init.u0) {
    impl->pu0 = *init.u0;
  } else {
    // initial-data relation u0' = A(S0)^(1/gamma) rho0
    const Profile rho0 = impl->prho0, S0 = impl->pS0;
    const IdealGas g = impl->gas;
    const double gamma = p.gamma;
    impl->pu0 = Profile::from_ode(
        [rho0, S0, g, gamma](double x, double) {
          return std::pow(g.A(S0(x)), 1.0 / gamma) * rho0(x);
        },
        init.anchor_x, init.anchor_value, init.x_lo, init.x_hi);
  }

  auto self = impl.get();
  const double margin = 1e-3 * (init.x_hi - init.x_lo);
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness_fn(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + margin, init.x_hi - margin, init.t_max, 256);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_iv_1(const L2Iv1Params& p, const InitialData& init) {
  if (!(p.gamma > 1.0) || p.k0 == 0.0) {
    throw Error(Errc::bad_params, "L2_IV_1: gamma > 1 and k0 != 0 required");
  }
  auto impl = std::make_shared<L2Iv1Impl>();
  impl->gas = IdealGas{p.gamma, p.cv, p.s_hat};
  base_setup2(*impl, FamilyId::l2_iv_1, impl->gas, init);
  impl->p = p;
  if (!init.rho0) throw Error(Errc::bad_params, "L2_IV_1: rho0 profile required");
  impl->prho0 = *init.rho0;
  impl->pu0 = Profile::linear(0.0, -p.k0);

  const Profile rho0 = impl->prho0;
  const IdealGas g = impl->gas;
  const double k0 = p.k0, mu0 = p.mu0, gamma = p.gamma;
  impl->pS0 = profile_from_fn([rho0, g, k0, mu0, gamma](double x) {
    const double aval = mu0 / (gamma * k0) * std::pow(-k0 * x * rho0(x), -gamma);
    return g.S_from_A(aval);
  });
  for (double x : {init.x_lo, 0.5 * (init.x_lo + init.x_hi), init.x_hi}) {
    if (!(-p.k0 * x > 0.0) || !(p.mu0 / (p.gamma * p.k0) > 0.0)) {
      throw Error(Errc::bad_params, "L2_IV_1: need -k0 x > 0 on the domain and mu0/k0 > 0");
    }
  }
  impl->t_star = kInf;
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_iv_2(const L2Iv2Params& p, const InitialData& init) {
  if (!(p.gamma > 1.0) || p.k0 == 0.0) {
    throw Error(Errc::bad_params, "L2_IV_2: gamma > 1 and k0 != 0 required");
  }
  auto impl = std::make_shared<L2Iv2Impl>();
  impl->gas = IdealGas{p.gamma, p.cv, p.s_hat};
  base_setup2(*impl, FamilyId::l2_iv_2, impl->gas, init);
  impl->p = p;
  if (!init.rho0) throw Error(Errc::bad_params, "L2_IV_2: rho0 profile required");
  impl->prho0 = *init.rho0;

  const double cp = p.gamma * p.cv;
  impl->q_hat = std::exp(-p.s_hat / cp);
  impl->u_hat0 = -p.k0 + p.k1 * impl->q_hat;
  impl->pu0 = Profile::linear(0.0, impl->u_hat0);
  const Profile rho0 = impl->prho0;
  impl->pS0 = profile_from_fn([rho0, cp](double x) { return -cp * std::log(rho0(x)); });

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self](double t) {
          return (self->p.k0 + self->p.k1 * self->q_hat * std::expm1(self->p.k0 * t)) /
                 self->p.k0;
        });
        w.push_back([self](double t) {
          return (self->p.k0 - self->u_hat0 * std::expm1(-self->p.k0 * t)) / self->p.k0;
        });
        return w;
      },
      init.x_lo, init.x_hi, init.t_max, 2);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_iv_vk(const L2IvVkParams& p, const InitialData& init) {
  if (p.k0 == 0.0) throw Error(Errc::bad_params, "L2_IV_VK: k0 != 0 required");
  auto impl = std::make_shared<L2IvVkImpl>();
  base_setup2(*impl, FamilyId::l2_iv_vk, VonKarman{p.a, p.b}, init);
  impl->p = p;
  if (!init.S0) throw Error(Errc::bad_params, "L2_IV_VK: S0 profile required");
  impl->pS0 = *init.S0;

  const Profile S0 = impl->pS0;
  const EntropyFn a = p.a, b = p.b;
  const double k0 = p.k0, c0 = p.c0;
  impl->prho0 = init.rho0 ? *init.rho0 : profile_from_fn([S0, a, b, c0](double x) {
    const double av = a(S0(x));
    return av * av / (b(S0(x)) - c0);
  });
  const Profile rho0 = impl->prho0;
  if (init.u0) {
    impl->pu0 = *init.u0;
  } else {
    impl->pu0 = Profile::from_ode(
        [S0, a, rho0, k0, c0](double x, double) {
          const double av = a(S0(x));
          return k0 * c0 * rho0(x) / (av * av);
        },
        init.anchor_x, init.anchor_value, init.x_lo, init.x_hi);
  }

  auto self = impl.get();
  const double margin = 1e-3 * (init.x_hi - init.x_lo);
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi](double t) {
          return self->p.b(self->pS0(xi)) - self->p.c0 * std::exp(-self->p.k0 * t);
        });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness_fn(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + margin, init.x_hi - margin, init.t_max, 256);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_v(const L2VParams& p, const InitialData& init) {
  if (p.k0 == 0.0) throw Error(Errc::bad_params, "L2_V: k0 != 0 required");
  auto impl = std::make_shared<L2VImpl>();
  base_setup2(*impl, FamilyId::l2_v, VonKarman{p.a, p.b}, init);
  impl->p = p;
  if (!init.S0) throw Error(Errc::bad_params, "L2_V: S0 profile required");
  impl->pS0 = *init.S0;

  const Profile S0 = impl->pS0;
  const EntropyFn a = p.a, b = p.b;
  const double k0 = p.k0;
  impl->prho0 = init.rho0 ? *init.rho0 : profile_from_fn([S0, a, b, k0](double x) {
    const double av = a(S0(x));
    const double den = b(S0(x)) - k0 * x;
    return av * av / den;
  });
  if (init.u0) {
    impl->pu0 = *init.u0;
  } else {
    // (b3): u0' = k0 u0 / (k0 x - b(S0))
    impl->pu0 = Profile::from_ode(
        [S0, b, k0](double x, double u) { return k0 * u / (k0 * x - b(S0(x))); }, init.anchor_x,
        init.anchor_value, init.x_lo, init.x_hi);
  }
  for (double x : {init.x_lo, 0.5 * (init.x_lo + init.x_hi), init.x_hi}) {
    if (!(b(S0(x)) - k0 * x > 0.0)) {
      throw Error(Errc::bad_params, "L2_V: b(S0) - k0 x must stay positive on the domain");
    }
  }

  auto self = impl.get();
  const double margin = 1e-3 * (init.x_hi - init.x_lo);
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi](double t) {
          return self->p.b(self->pS0(xi)) - self->p.k0 * self->x_of_xi(xi, t);
        });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness_fn(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + margin, init.x_hi - margin, init.t_max, 256);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_l2_v_ch(const L2VChParams& p, const InitialData& init) {
  if (!(p.a0 > 0.0) || p.k0 == 0.0 || p.k1 == 0.0) {
    throw Error(Errc::bad_params, "L2_V_CH: a0 > 0 and k0, k1 != 0 required");
  }
  auto impl = std::make_shared<L2VChImpl>();
  base_setup2(*impl, FamilyId::l2_v_ch, Chaplygin{p.a0}, init);
  impl->p = p;
  for (double x : {init.x_lo, init.x_hi}) {
    if (!(p.k0 * x < 0.0)) {
      throw Error(Errc::bad_params, "L2_V_CH: k0 x must stay negative on the domain");
    }
  }
  impl->pS0 = init.S0 ? *init.S0 : Profile::constant(0.0);
  const double a0 = p.a0, k0 = p.k0, c_hat = p.c_hat;
  impl->prho0 = profile_from_fn([a0, k0](double x) { return -a0 * a0 / (k0 * x); });
  impl->pu0 = Profile::linear(0.0, c_hat);

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self](double t) { return self->D_of(t) / (self->p.k0 * self->p.k1); });
        return w;
      },
      init.x_lo, init.x_hi, init.t_max, 2);
  return impl;
}

}  // namespace euler1d::detail

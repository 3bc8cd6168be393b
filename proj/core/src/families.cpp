#include "euler1d/families.hpp"

#include <algorithm>
#include <cmath>

#include "families_impl.hpp"

namespace euler1d {

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::ig_i: return "IG_I";
    case FamilyId::ig_ii: return "IG_II";
    case FamilyId::vk_a: return "VK_A";
    case FamilyId::ch_psi: return "CH_PSI";
    case FamilyId::ch_m0: return "CH_M0";
    case FamilyId::l2_i: return "L2_I";
    case FamilyId::l2_ii: return "L2_II";
    case FamilyId::l2_iii: return "L2_III";
    case FamilyId::l2_iv_1: return "L2_IV_1";
    case FamilyId::l2_iv_2: return "L2_IV_2";
    case FamilyId::l2_iv_vk: return "L2_IV_VK";
    case FamilyId::l2_v: return "L2_V";
    case FamilyId::l2_v_ch: return "L2_V_CH";
    case FamilyId::simple_wave: return "SIMPLE";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(FamilyId::simple_wave); ++i) {
    const auto id = static_cast<FamilyId>(i);
    if (name == family_name(id)) return id;
  }
  return std::nullopt;
}

namespace detail {

void FamilyImpl::check_time(double t) const {
  if (!(t >= 0.0) || !(t < t_star)) {
    throw Error(Errc::out_of_validity,
                std::string(family_name(fid)) + ": t outside [0, t*), t* = " +
                    std::to_string(t_star));
  }
}

void FamilyImpl::check_xi(double xi) const {
  const double pad = 1e-9 * std::max(1.0, x_hi - x_lo);
  if (xi < x_lo - pad || xi > x_hi + pad) {
    throw Error(Errc::no_bracket,
                std::string(family_name(fid)) + ": x outside the range swept by characteristics");
  }
}

double FamilyImpl::solve_xi(const std::function<double(double)>& x_of_xi, double x) const {
  RootConfig rc;
  rc.abs_tol = 1e-14 * std::max(1.0, std::abs(x));
  rc.max_iter = 300;
  rc.max_expansions = 0;
  auto g = [&](double xi) { return x_of_xi(xi) - x; };

  thread_local const FamilyImpl* warm_impl = nullptr;
  thread_local double warm_root = 0.0;
  if (warm_impl == this) {
    const double w = 1e-3 * (x_hi - x_lo);
    const double a = std::max(x_lo, warm_root - w);
    const double b = std::min(x_hi, warm_root + w);
    if (a < b && g(a) * g(b) <= 0.0) {
      const double r = find_root(g, a, b, rc);
      warm_root = r;
      return r;
    }
  }
  const double r = find_root(g, x_lo, x_hi, rc);
  warm_impl = this;
  warm_root = r;
  return r;
}

void FamilyImpl::add_identities(std::vector<StructuralIdentity>&, const SourceTerm&) const {}

double scan_horizon(const WitnessFactory& factory, double x_lo, double x_hi, double t_cap,
                    int n_xi, int n_t) {
  auto safe = [](const std::function<double(double)>& w, double t) {
    try {
      const double v = w(t);
      return std::isfinite(v) ? v : -1.0;
    } catch (const Error&) {
      return -1.0;  // breakdown counts as a crossing
    }
  };
  double earliest = kInf;
  for (int i = 0; i < n_xi; ++i) {
    const double xi = x_lo + (x_hi - x_lo) * (i + 0.5) / n_xi;
    for (const auto& w : factory(xi)) {
      if (!(safe(w, 0.0) > 0.0)) return 0.0;
      double t_prev = 0.0;
      for (int j = 1; j <= n_t; ++j) {
        const double t_stop = std::min(t_cap, earliest);
        if (t_prev >= t_stop) break;
        const double t = std::min(t_cap * j / n_t, t_stop);
        const double wv = safe(w, t);
        if (!(wv > 0.0)) {
          double a = t_prev, b = t;
          for (int k = 0; k < 80 && (b - a) > 1e-14 * std::max(1.0, b); ++k) {
            const double m = 0.5 * (a + b);
            (safe(w, m) > 0.0 ? a : b) = m;
          }
          earliest = std::min(earliest, 0.5 * (a + b));
          break;
        }
        t_prev = t;
      }
    }
  }
  return earliest;
}

namespace {

Profile profile_from_fn(std::function<double(double)> f) {
  auto fd = [f](double x) { return fd_derivative(f, x, 1e-6 * std::max(1.0, std::abs(x))); };
  return Profile::callable(std::move(f), std::move(fd));
}

// (qq2)-style identity: f = rho F (p_S/rho - c J_S) + rho c G
StructuralIdentity qq2_identity(PressureLaw law, std::function<double(const State&)> F,
                                std::function<double(const State&)> G, SourceTerm f_test) {
  return {"qq2-source-structure", [law = std::move(law), F = std::move(F), G = std::move(G),
                                   f_test = std::move(f_test)](const State& s) {
            const double c = sound_speed(law, s);
            const double ps = pressure_S(law, s);
            const double js = char_integral_S(law, s);
            return f_test(s) - (s.rho * F(s) * (ps / s.rho - c * js) + s.rho * c * G(s));
          }};
}

// ---------------------------------------------------------------------------
// IG_I: ideal gas, k0 = k1 = 0. u rides the label, A(S) grows in t.
// ---------------------------------------------------------------------------

struct IgIImpl final : FamilyImpl {
  IgIParams p;
  IdealGas gas;
  double m_exp;   // (gamma+1)/(gamma-1)
  double c2;      // growth constant of A(S)

  double x_of_xi(double xi, double t) const {
    return (0.5 * (p.gamma + 1.0) * pu0(xi) - 0.5 * (p.gamma - 1.0) * p.c1) * t + xi;
  }

  double a_power(double xi, double t) const {
    const double A0 = gas.A(pS0(xi));
    return c2 * std::pow(pu0(xi) - p.c1, m_exp) * t +
           std::pow(A0, p.gamma / (p.gamma - 1.0));
  }

  State state_at(double xi, double t) const {
    const double uu = pu0(xi);
    const double ap = a_power(xi, t);
    if (!(ap > 0.0)) throw Error(Errc::out_of_validity, "IG_I: entropy function collapsed");
    const double Aval = std::pow(ap, (p.gamma - 1.0) / p.gamma);
    State s;
    s.u = uu;
    s.S = gas.S_from_A(Aval);
    s.rho = std::pow(0.5 * (p.gamma - 1.0) * (uu - p.c1) / std::sqrt(p.gamma * Aval),
                     2.0 / (p.gamma - 1.0));
    return s;
  }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override { return state_at(xi_of(x, t), t); }

  SourceTerm source() const override {
    const double k2 = p.k2, g = p.gamma;
    return {[k2, g](double rho, double, double) { return k2 / (1.0 - g) * std::pow(rho, g); },
            "k2/(1-gamma) rho^gamma"};
  }

  double q_alpha(int alpha, const State& s) const override {
    if (alpha == 0) return source()(s);
    return s.rho * p.k2 * p.cv / gas.A(s.S);
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const double k2 = p.k2, cv = p.cv;
    const IdealGas g = gas;
    out.push_back(qq2_identity(
        plaw, [k2, cv, g](const State& s) { return k2 * cv / g.A(s.S); },
        [](const State&) { return 0.0; }, f));
  }
};

// ---------------------------------------------------------------------------
// IG_II: ideal gas, k0 = k2 = 0. Uniform entropy, density blows up at t*.
// ---------------------------------------------------------------------------

struct IgIiImpl final : FamilyImpl {
  IgIiParams p;
  IdealGas gas;
  double A0, sq;  // A(S0), sqrt(gamma A0)

  double beta(double xi) const { return p.k1 * prho0(xi) / sq; }

  double c_integral(double xi, double t) const {
    const double r0 = prho0(xi);
    if (p.k1 == 0.0) return sq * std::pow(r0, 0.5 * (p.gamma - 1.0)) * t;
    const double arg = 1.0 - beta(xi) * t;
    if (!(arg > 0.0)) throw Error(Errc::out_of_validity, "IG_II: density denominator vanished");
    if (p.gamma == 3.0) return -(3.0 * A0 / p.k1) * std::log(arg);
    const double e = 0.5 * (3.0 - p.gamma);
    return -(2.0 * p.gamma * A0 / (p.k1 * (3.0 - p.gamma))) *
           std::pow(r0, 0.5 * (p.gamma - 3.0)) * (std::pow(arg, e) - 1.0);
  }

  double x_of_xi(double xi, double t) const { return pu0(xi) * t + c_integral(xi, t) + xi; }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double arg = 1.0 - beta(xi) * t;
    if (!(arg > 0.0)) throw Error(Errc::out_of_validity, "IG_II: density denominator vanished");
    return State{prho0(xi) / arg, pu0(xi), p.S0};
  }

  SourceTerm source() const override {
    const double k1 = p.k1, g = p.gamma;
    return {[k1, g](double rho, double, double) { return k1 * std::pow(rho, 0.5 * (g + 1.0)); },
            "k1 rho^((gamma+1)/2)"};
  }

  double q_alpha(int alpha, const State& s) const override {
    return alpha == 0 ? source()(s) : 0.0;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const double k1 = p.k1, g = p.gamma;
    const IdealGas gg = gas;
    out.push_back(qq2_identity(
        plaw, [](const State&) { return 0.0; },
        [k1, g, gg](const State& s) { return k1 / std::sqrt(g * gg.A(s.S)); }, f));
  }
};

// ---------------------------------------------------------------------------
// VK_A: Von Karman with a'(S) != 0; nested time integrals solved as a
// two-component ODE per characteristic label.
// ---------------------------------------------------------------------------

struct VkAImpl final : FamilyImpl {
  VkAParams p;

  double a_of_t(double xi, double t) const {
    const double a0 = p.a(pS0(xi));
    if (p.c0 != 0.0) return std::exp(p.c0 * t) * (a0 + p.c1 / p.c0) - p.c1 / p.c0;
    return a0 + p.c1 * t;
  }

  double S_of(double xi, double t) const { return p.a.invert(a_of_t(xi, t)); }

  double H_of(double S) const {
    const double a = p.a(S);
    return (p.c0 * a + p.c1) * p.b.deriv(S) / (a * p.a.deriv(S));
  }

  // y = (htilde, X): htilde' = H(S(xi,t)) e^{c0 t}, X' = htilde e^{-c0 t}
  Trajectory label_traj(double xi, double t_hi) const {
    OdeConfig oc;
    oc.tol = 1e-13;
    return ode_solve(
        [this, xi](double t, const std::vector<double>& y, std::vector<double>& d) {
          d[0] = H_of(S_of(xi, t)) * std::exp(p.c0 * t);
          d[1] = y[0] * std::exp(-p.c0 * t);
        },
        {0.0, 0.0}, 0.0, t_hi, oc);
  }

  double R10(double xi) const { return pu0(xi) + p.a(pS0(xi)) / prho0(xi); }

  double x_of_xi(double xi, double t, const Trajectory& tr) const {
    const double X = tr.eval(t, 1);
    const double edge = (p.c0 != 0.0)
                            ? -R10(xi) / p.c0 * (std::exp(-p.c0 * t) - 1.0)
                            : R10(xi) * t;
    return edge + X + xi;
  }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t, label_traj(xi, t)); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const Trajectory tr = label_traj(xi, t);
    const double den = std::exp(-p.c0 * t) * (tr.eval(t, 0) + R10(xi)) - pu0(xi);
    if (!(den > 0.0)) throw Error(Errc::out_of_validity, "VK_A: density denominator vanished");
    const double aval = a_of_t(xi, t);
    return State{aval / den, pu0(xi), p.a.invert(aval)};
  }

  SourceTerm source() const override {
    const double c0 = p.c0, c1 = p.c1;
    return {[c0, c1](double rho, double u, double) { return c0 * u - c1 / rho; },
            "c0 u - c1/rho"};
  }

  double q_alpha(int alpha, const State& s) const override {
    if (alpha == 0) return source()(s);
    const double a = p.a(s.S);
    return s.rho * (p.c0 * a + p.c1) / (a * p.a.deriv(s.S));
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const EntropyFn a = p.a, b = p.b;
    const double c0 = p.c0, c1 = p.c1;
    const PressureLaw law = plaw;
    auto F = [a, c0, c1](const State& s) {
      return (c0 * a(s.S) + c1) / (a(s.S) * a.deriv(s.S));
    };
    auto G = [a, b, c0, c1, law](const State& s) {
      const double av = a(s.S);
      const double R1 = s.u - char_integral(law, s);
      return c0 * R1 / av - (c0 * av + c1) * b.deriv(s.S) / (av * av * a.deriv(s.S));
    };
    out.push_back(qq2_identity(plaw, F, G, f));
  }
};

// ---------------------------------------------------------------------------
// CH_PSI: Chaplygin with f = c0 (R1)^2, F = (c0/a0) R1 R2.
// ---------------------------------------------------------------------------

struct ChPsiImpl final : FamilyImpl {
  ChPsiParams p;

  double R10(double xi) const { return pu0(xi) + p.a0 / prho0(xi); }

  double x_of_xi(double xi, double t) const {
    const double r = R10(xi);
    if (p.c0 == 0.0) return r * t + xi;
    const double L = 1.0 + p.c0 * t * r;
    if (!(L > 0.0)) throw Error(Errc::out_of_validity, "CH_PSI: characteristic map collapsed");
    return std::log(L) / p.c0 + xi;
  }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double r = R10(xi);
    const double L = 1.0 + p.c0 * t * r;
    if (!(L > 0.0)) throw Error(Errc::out_of_validity, "CH_PSI: characteristic map collapsed");
    const double R1t = r / L;
    const double den = R1t - pu0(xi);
    if (!(den > 0.0)) throw Error(Errc::out_of_validity, "CH_PSI: density denominator vanished");
    return State{p.a0 / den, pu0(xi), pS0(xi) * L};
  }

  SourceTerm source() const override {
    const double c0 = p.c0, a0 = p.a0;
    return {[c0, a0](double rho, double u, double) {
              const double r1 = u + a0 / rho;
              return c0 * r1 * r1;
            },
            "c0 (u + a0/rho)^2"};
  }

  double q_alpha(int alpha, const State& s) const override {
    const double r1 = s.u + p.a0 / s.rho;
    if (alpha == 0) return p.c0 * r1 * r1;
    return s.rho * (p.c0 / p.a0) * r1 * s.S;
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const double c0 = p.c0, a0 = p.a0;
    auto F = [c0, a0](const State& s) { return (c0 / a0) * (s.u + a0 / s.rho) * s.S; };
    auto G = [c0, a0](const State& s) {
      const double r1 = s.u + a0 / s.rho;
      return c0 * r1 * r1 / a0;
    };
    out.push_back(qq2_identity(plaw, F, G, f));
  }
};

// ---------------------------------------------------------------------------
// CH_M0: Chaplygin solution with labels xi = x + m0 t and z-characteristics.
// ---------------------------------------------------------------------------

struct ChM0Impl final : FamilyImpl {
  ChM0Params p;

  // value-captured so SourceTerm closures stay valid on their own
  std::function<double(double)> W_of;   // int d xi / (psi + m0) from the domain midpoint
  std::function<double(double)> g1_of;  // G1(R1) = psi'(psi^{-1}(R1))

  double xi_of(double x, double t) const override {
    check_time(t);
    const double xi = x + p.m0 * t;
    check_xi(xi);
    return xi;
  }

  State eval(double x, double t) const override {
    const double xi = xi_of(x, t);
    const double w = p.psi(xi) + p.m0;
    const double z = t - W_of(xi);
    const double phiv = p.phi(z);
    const double den = w * (1.0 - phiv);
    if (!(den > 0.0)) throw Error(Errc::out_of_validity, "CH_M0: density denominator vanished");
    return State{p.a0 / den, phiv * w - p.m0, p.S0};
  }

  SourceTerm source() const override {
    const double a0 = p.a0, m0 = p.m0;
    auto g1 = g1_of;
    return {[a0, m0, g1](double rho, double u, double) {
              return (u - a0 / rho + m0) * g1(u + a0 / rho);
            },
            "(u - a0/rho + m0) G1(u + a0/rho)"};
  }

  double q_alpha(int alpha, const State& s) const override {
    if (alpha == 1) return 0.0;
    const double c = p.a0 / s.rho;
    return -c * g1_of(s.u + p.a0 / s.rho);
  }

  void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const override {
    const double a0 = p.a0, m0 = p.m0;
    auto g1 = g1_of;
    out.push_back({"case-iii-source-form", [a0, m0, g1, f](const State& s) {
                     const double c = a0 / s.rho;
                     return f(s) - (s.u - c + m0) * g1(s.u + a0 / s.rho);
                   }});
  }
};

// ---------------------------------------------------------------------------
// SIMPLE: classical simple wave, R^alpha frozen, v carried along straight
// characteristics.
// ---------------------------------------------------------------------------

struct SimpleImpl final : FamilyImpl {
  SimpleParams p;
  Profile v0;

  State state_of_label(double xi) const {
    return from_char(plaw, CharField{p.r1, p.r2, v0(xi), SpeedTag::lambda3});
  }

  double lambda_of_label(double xi) const {
    const State s = state_of_label(xi);
    return s.u + sound_speed(plaw, s);
  }

  double x_of_xi(double xi, double t) const { return xi + lambda_of_label(xi) * t; }

  double xi_of(double x, double t) const override {
    check_time(t);
    return solve_xi([&](double xi) { return x_of_xi(xi, t); }, x);
  }

  State eval(double x, double t) const override { return state_of_label(xi_of(x, t)); }

  SourceTerm source() const override {
    return {[](double, double, double) { return 0.0; }, "0"};
  }

  double q_alpha(int, const State&) const override { return 0.0; }
};

}  // namespace

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

namespace {

void base_setup(FamilyImpl& impl, FamilyId id, PressureLaw law, SpeedTag tag,
                const InitialData& init) {
  impl.fid = id;
  impl.plaw = std::move(law);
  impl.stag = tag;
  impl.x_lo = init.x_lo;
  impl.x_hi = init.x_hi;
  impl.t_cap = init.t_max;
  if (!(init.x_lo < init.x_hi)) {
    throw Error(Errc::bad_params, "InitialData: x_lo must be < x_hi");
  }
}

/// Characteristic-crossing witness: d x(xi,t) / d xi through a central
/// difference across neighbouring labels.
std::function<double(double)> crossing_witness(std::function<double(double, double)> x_of,
                                               double xi, double delta) {
  return [x_of = std::move(x_of), xi, delta](double t) {
    return (x_of(xi + delta, t) - x_of(xi - delta, t)) / (2.0 * delta);
  };
}

}  // namespace

std::shared_ptr<const FamilyImpl> build_ig_i(const IgIParams& p, const InitialData& init) {
  if (!(p.gamma > 1.0) || !(p.cv > 0.0)) {
    throw Error(Errc::bad_params, "IG_I: gamma must be > 1 and cv > 0");
  }
  auto impl = std::make_shared<IgIImpl>();
  base_setup(*impl, FamilyId::ig_i, IdealGas{p.gamma, p.cv, p.s_hat}, SpeedTag::lambda3, init);
  impl->p = p;
  impl->gas = IdealGas{p.gamma, p.cv, p.s_hat};
  impl->m_exp = (p.gamma + 1.0) / (p.gamma - 1.0);
  impl->c2 = p.k2 * std::pow(p.gamma, (p.gamma - 2.0) / (p.gamma - 1.0)) / (p.gamma - 1.0) *
             std::pow(0.5 * (p.gamma - 1.0), impl->m_exp);

  if (!init.u0 || !init.S0) throw Error(Errc::bad_params, "IG_I: u0 and S0 profiles required");
  impl->pu0 = *init.u0;
  impl->pS0 = *init.S0;
  // (cccc)_2 pins rho0 once u0 and S0 are fixed
  const IgIParams pp = p;
  const IdealGas gas = impl->gas;
  Profile u0 = impl->pu0, S0 = impl->pS0;
  impl->prho0 = init.rho0 ? *init.rho0
                          : profile_from_fn([pp, gas, u0, S0](double x) {
                              return std::pow(0.5 * (pp.gamma - 1.0) * (u0(x) - pp.c1) /
                                                  std::sqrt(pp.gamma * gas.A(S0(x))),
                                              2.0 / (pp.gamma - 1.0));
                            });
  for (double x : {init.x_lo, 0.5 * (init.x_lo + init.x_hi), init.x_hi}) {
    if (!(impl->pu0(x) - p.c1 > 0.0)) {
      throw Error(Errc::bad_params, "IG_I: u0 - c1 must stay positive on the domain");
    }
  }

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi](double t) { return self->a_power(xi, t); });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + 1e-3 * (init.x_hi - init.x_lo),
      init.x_hi - 1e-3 * (init.x_hi - init.x_lo), init.t_max);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_ig_ii(const IgIiParams& p, const InitialData& init) {
  if (!(p.gamma > 1.0) || !(p.cv > 0.0)) {
    throw Error(Errc::bad_params, "IG_II: gamma must be > 1 and cv > 0");
  }
  auto impl = std::make_shared<IgIiImpl>();
  base_setup(*impl, FamilyId::ig_ii, IdealGas{p.gamma, p.cv, p.s_hat}, SpeedTag::lambda3, init);
  impl->p = p;
  impl->gas = IdealGas{p.gamma, p.cv, p.s_hat};
  impl->A0 = impl->gas.A(p.S0);
  impl->sq = std::sqrt(p.gamma * impl->A0);
  impl->pS0 = Profile::constant(p.S0);

  if (!init.rho0) throw Error(Errc::bad_params, "IG_II: rho0 profile required");
  impl->prho0 = *init.rho0;
  if (init.u0) {
    impl->pu0 = *init.u0;
  } else {
    // integrate the initial-data relation
    // u0' = sqrt(gamma A0) rho0^((gamma-3)/2) rho0' - k1 rho0 / sqrt(gamma A0)
    const Profile rho0 = impl->prho0;
    const double sq = impl->sq, k1 = p.k1, g = p.gamma;
    impl->pu0 = Profile::from_ode(
        [rho0, sq, k1, g](double x, double) {
          return sq * std::pow(rho0(x), 0.5 * (g - 3.0)) * rho0.deriv(x) - k1 * rho0(x) / sq;
        },
        init.anchor_x, init.anchor_value, init.x_lo, init.x_hi);
  }

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi](double t) { return 1.0 - self->beta(xi) * t; });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + 1e-3 * (init.x_hi - init.x_lo),
      init.x_hi - 1e-3 * (init.x_hi - init.x_lo), init.t_max);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_vk_a(const VkAParams& p, const InitialData& init) {
  auto impl = std::make_shared<VkAImpl>();
  base_setup(*impl, FamilyId::vk_a, VonKarman{p.a, p.b}, SpeedTag::lambda3, init);
  impl->p = p;
  if (!init.S0) throw Error(Errc::bad_params, "VK_A: S0 profile required");
  impl->pS0 = *init.S0;

  const Profile S0 = impl->pS0;
  const EntropyFn a = p.a, b = p.b;
  const double c0 = p.c0, c1 = p.c1;
  if (init.rho0) {
    impl->prho0 = *init.rho0;
  } else {
    // l^2 constraint S0' = rho0 (c0 a + c1)/(a a') solved for rho0
    impl->prho0 = profile_from_fn([S0, a, c0, c1](double x) {
      const double s = S0(x);
      return S0.deriv(x) * a(s) * a.deriv(s) / (c0 * a(s) + c1);
    });
  }
  const Profile rho0 = impl->prho0;
  for (double x : {init.x_lo, 0.5 * (init.x_lo + init.x_hi), init.x_hi}) {
    if (!(rho0(x) > 0.0) || !(a(S0(x)) > 0.0)) {
      throw Error(Errc::bad_params, "VK_A: rho0 and a(S0) must stay positive");
    }
  }
  if (init.u0) {
    impl->pu0 = *init.u0;
  } else {
    // l^1 constraint solved as a linear ODE for u0
    const PressureLaw law = impl->plaw;
    impl->pu0 = Profile::from_ode(
        [rho0, S0, law, c0, c1](double x, double u) {
          const State s{rho0(x), u, S0(x)};
          const double c = sound_speed(law, s);
          const double f = c0 * u - c1 / s.rho;
          return (c * c / s.rho * rho0.deriv(x) + pressure_S(law, s) / s.rho * S0.deriv(x) - f) /
                 c;
        },
        init.anchor_x, init.anchor_value, init.x_lo, init.x_hi);
  }

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double xi) {
        auto tr = std::make_shared<Trajectory>(self->label_traj(xi, self->t_cap));
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi, tr](double t) {
          return std::exp(-self->p.c0 * t) * (tr->eval(t, 0) + self->R10(xi)) - self->pu0(xi);
        });
        w.push_back([self, xi](double t) { return self->a_of_t(xi, t); });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        auto trp = std::make_shared<Trajectory>(self->label_traj(xi + delta, self->t_cap));
        auto trm = std::make_shared<Trajectory>(self->label_traj(xi - delta, self->t_cap));
        w.push_back([self, xi, delta, trp, trm](double t) {
          return (self->x_of_xi(xi + delta, t, *trp) - self->x_of_xi(xi - delta, t, *trm)) /
                 (2.0 * delta);
        });
        return w;
      },
      init.x_lo + 1e-3 * (init.x_hi - init.x_lo),
      init.x_hi - 1e-3 * (init.x_hi - init.x_lo), init.t_max, 256);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_ch_psi(const ChPsiParams& p, const InitialData& init) {
  if (!(p.a0 > 0.0)) throw Error(Errc::bad_params, "CH_PSI: a0 must be positive");
  auto impl = std::make_shared<ChPsiImpl>();
  base_setup(*impl, FamilyId::ch_psi, Chaplygin{p.a0}, SpeedTag::lambda3, init);
  impl->p = p;
  if (!init.rho0 || !init.u0 || !init.S0) {
    throw Error(Errc::bad_params, "CH_PSI: rho0, u0 and S0 profiles required");
  }
  impl->prho0 = *init.rho0;
  impl->pu0 = *init.u0;
  impl->pS0 = *init.S0;

  auto self = impl.get();
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([self, xi](double t) { return 1.0 + self->p.c0 * t * self->R10(xi); });
        w.push_back([self, xi](double t) {
          const double L = 1.0 + self->p.c0 * t * self->R10(xi);
          return L > 0.0 ? self->R10(xi) / L - self->pu0(xi) : -1.0;
        });
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + 1e-3 * (init.x_hi - init.x_lo),
      init.x_hi - 1e-3 * (init.x_hi - init.x_lo), init.t_max);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_ch_m0(const ChM0Params& p, const InitialData& init) {
  if (!(p.a0 > 0.0)) throw Error(Errc::bad_params, "CH_M0: a0 must be positive");
  auto impl = std::make_shared<ChM0Impl>();
  base_setup(*impl, FamilyId::ch_m0, Chaplygin{p.a0}, SpeedTag::lambda3, init);
  impl->p = p;
  impl->pS0 = Profile::constant(p.S0);

  const Profile psi = p.psi, phi = p.phi;
  const double m0 = p.m0, a0 = p.a0, S0 = p.S0;
  const double x_lo = init.x_lo, x_hi = init.x_hi, x_mid = 0.5 * (init.x_lo + init.x_hi);
  impl->W_of = [psi, m0, x_mid](double xi) {
    QuadConfig qc;
    qc.rel_tol = 1e-13;
    return quad([&](double s) { return 1.0 / (psi(s) + m0); }, x_mid, xi, qc);
  };
  impl->g1_of = [psi, x_lo, x_hi](double r1) {
    RootConfig rc;
    rc.abs_tol = 1e-13 * std::max(1.0, std::abs(r1));
    rc.max_expansions = 0;
    const double xi = find_root([&](double s) { return psi(s) - r1; }, x_lo, x_hi, rc);
    return psi.deriv(xi);
  };

  // realized initial data: xi = x and z0 = -W(x) at t = 0
  auto W = impl->W_of;
  impl->prho0 = profile_from_fn([psi, phi, W, m0, a0](double x) {
    return a0 / ((psi(x) + m0) * (1.0 - phi(-W(x))));
  });
  impl->pu0 = profile_from_fn([psi, phi, W, m0](double x) {
    return phi(-W(x)) * (psi(x) + m0) - m0;
  });
  (void)S0;

  const double margin = 1e-3 * (init.x_hi - init.x_lo);
  impl->t_star = scan_horizon(
      [psi, phi, W, m0](double xi) {
        std::vector<std::function<double(double)>> w;
        w.push_back([psi, phi, W, m0, xi](double t) {
          return (psi(xi) + m0) * (1.0 - phi(t - W(xi)));
        });
        return w;
      },
      init.x_lo + margin, init.x_hi - margin, init.t_max);
  return impl;
}

std::shared_ptr<const FamilyImpl> build_simple(const SimpleParams& p, const InitialData& init) {
  auto impl = std::make_shared<SimpleImpl>();
  base_setup(*impl, FamilyId::simple_wave, p.law, SpeedTag::lambda3, init);
  impl->p = p;
  if (!init.v0) throw Error(Errc::bad_params, "SIMPLE: v0 profile required");
  impl->v0 = *init.v0;

  const PressureLaw law = impl->plaw;
  const Profile v0 = impl->v0;
  const double r1 = p.r1, r2 = p.r2;
  impl->prho0 = profile_from_fn([law, v0, r1, r2](double x) {
    return from_char(law, CharField{r1, r2, v0(x), SpeedTag::lambda3}).rho;
  });
  impl->pu0 = impl->v0;
  impl->pS0 = Profile::constant(p.r2);

  auto self = impl.get();
  const double margin = 1e-3 * (init.x_hi - init.x_lo);
  impl->t_star = scan_horizon(
      [self](double xi) {
        std::vector<std::function<double(double)>> w;
        const double delta = 1e-4 * (self->x_hi - self->x_lo);
        w.push_back(crossing_witness(
            [self](double q, double t) { return self->x_of_xi(q, t); }, xi, delta));
        return w;
      },
      init.x_lo + margin, init.x_hi - margin, init.t_max, 512);
  return impl;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FamilySolution facade
// ---------------------------------------------------------------------------

FamilySolution::FamilySolution(std::shared_ptr<const detail::FamilyImpl> impl)
    : impl_(std::move(impl)) {}

FamilyId FamilySolution::id() const { return impl_->fid; }
const PressureLaw& FamilySolution::law() const { return impl_->plaw; }
SpeedTag FamilySolution::tag() const { return impl_->stag; }
double FamilySolution::time_horizon() const { return impl_->t_star; }
std::pair<double, double> FamilySolution::x_domain() const { return {impl_->x_lo, impl_->x_hi}; }

State FamilySolution::evaluate(double x, double t) const {
  State s = impl_->eval(x, t);
  validate_state(s);
  return s;
}

double FamilySolution::wave_variable(double x, double t) const { return impl_->xi_of(x, t); }
SourceTerm FamilySolution::source() const { return impl_->source(); }

double FamilySolution::q_constraint(int alpha, const State& s) const {
  if (alpha != 0 && alpha != 1) throw Error(Errc::bad_params, "q_constraint: alpha must be 0 or 1");
  return impl_->q_alpha(alpha, s);
}

const Profile& FamilySolution::rho0() const { return impl_->prho0; }
const Profile& FamilySolution::u0() const { return impl_->pu0; }
const Profile& FamilySolution::S0() const { return impl_->pS0; }

std::vector<StructuralIdentity> FamilySolution::structural_identities(
    const SourceTerm* f_test) const {
  const SourceTerm own = impl_->source();
  const SourceTerm test = f_test ? *f_test : own;
  std::vector<StructuralIdentity> out;
  out.push_back({"source-form", [own, test](const State& s) { return test(s) - own(s); }});
  impl_->add_identities(out, test);
  return out;
}

WaveSystem FamilySolution::wave_system() const {
  WaveSystem ws;
  ws.law = impl_->plaw;
  ws.tag = impl_->stag;
  auto impl = impl_;
  ws.q_a = [impl](const State& s) { return impl->q_alpha(0, s); };
  ws.q_b = [impl](const State& s) { return impl->q_alpha(1, s); };
  ws.source = impl_->source();
  return ws;
}

FamilySolution make_family(const FamilyParams& params, const InitialData& init) {
  using namespace detail;
  auto impl = std::visit(
      [&](const auto& p) -> std::shared_ptr<const FamilyImpl> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IgIParams>) return build_ig_i(p, init);
        else if constexpr (std::is_same_v<T, IgIiParams>) return build_ig_ii(p, init);
        else if constexpr (std::is_same_v<T, VkAParams>) return build_vk_a(p, init);
        else if constexpr (std::is_same_v<T, ChPsiParams>) return build_ch_psi(p, init);
        else if constexpr (std::is_same_v<T, ChM0Params>) return build_ch_m0(p, init);
        else if constexpr (std::is_same_v<T, L2IParams>) return build_l2_i(p, init);
        else if constexpr (std::is_same_v<T, L2IiParams>) return build_l2_ii(p, init);
        else if constexpr (std::is_same_v<T, L2IiiParams>) return build_l2_iii(p, init);
        else if constexpr (std::is_same_v<T, L2Iv1Params>) return build_l2_iv_1(p, init);
        else if constexpr (std::is_same_v<T, L2Iv2Params>) return build_l2_iv_2(p, init);
        else if constexpr (std::is_same_v<T, L2IvVkParams>) return build_l2_iv_vk(p, init);
        else if constexpr (std::is_same_v<T, L2VParams>) return build_l2_v(p, init);
        else if constexpr (std::is_same_v<T, L2VChParams>) return build_l2_v_ch(p, init);
        else return build_simple(p, init);
      },
      params);
  return FamilySolution(std::move(impl));
}

}  // namespace euler1d

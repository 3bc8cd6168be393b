#include "euler1d/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

namespace euler1d {

namespace {

constexpr double kRatioFloor = 3e-9;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Accum {
  double max_abs = 0.0;
  double sum_sq = 0.0;
  long n = 0;
  void add(double r) {
    max_abs = std::max(max_abs, std::abs(r));
    sum_sq += r * r;
    ++n;
  }
  double rms() const { return n ? std::sqrt(sum_sq / n) : 0.0; }
};

}  // namespace

std::string ResidualReport::to_text() const {
  std::ostringstream os;
  os << "check " << check << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& e : entries) {
    os << "  " << e.equation << "  max=" << fmt17(e.max_resid) << "  l2=" << fmt17(e.l2_resid);
    if (e.h > 0) os << "  h=" << fmt17(e.h);
    if (e.has_ratio) os << "  ratio=" << fmt17(e.ratio);
    os << "  " << (e.pass ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

void ResidualReport::write_csv(std::ostream& os) const {
  os << "check,equation,max_resid,l2_resid,h,ratio,pass\n";
  for (const auto& e : entries) {
    os << check << ',' << e.equation << ',' << fmt17(e.max_resid) << ',' << fmt17(e.l2_resid)
       << ',' << fmt17(e.h) << ',' << (e.has_ratio ? fmt17(e.ratio) : std::string("nan")) << ','
       << (e.pass ? "1" : "0") << "\n";
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(0.5 * (lo + hi));
    return out;
  }
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

SampleGrid SampleGrid::from_fixture(const Fixture& fx) {
  SampleGrid g;
  g.x_lo = fx.x_lo;
  g.x_hi = fx.x_hi;
  g.t_lo = fx.t_lo;
  g.t_hi = fx.t_hi;
  return g;
}

ResidualReport check_initial_constraints(const InitialDataSpec& spec, std::span<const double> xs,
                                         double tol) {
  const auto idx = constraint_indices(spec.tag);
  Accum acc[2];
  for (double x : xs) {
    const State s{spec.rho0(x), spec.u0(x), spec.S0(x)};
    const double ds[3] = {spec.rho0.deriv(x), spec.u0.deriv(x), spec.S0.deriv(x)};
    const EigenStructure es = eigen(spec.law, s);
    for (int a = 0; a < 2; ++a) {
      const auto& l = es.left[idx[a]];
      const double lhs = l[0] * ds[0] + l[1] * ds[1] + l[2] * ds[2];
      acc[a].add(lhs - spec.q(a, s));
    }
  }
  ResidualReport rep;
  rep.check = std::string("initial-constraints ") + spec.label;
  rep.pass = true;
  for (int a = 0; a < 2; ++a) {
    ResidualEntry e;
    e.equation =
        (a == 0) ? "l-alpha-1" : (spec.tag == SpeedTag::lambda3 ? "l-alpha-2" : "l-alpha-3");
    e.max_resid = acc[a].max_abs;
    e.l2_resid = acc[a].rms();
    e.pass = acc[a].max_abs <= tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

ResidualReport check_initial_constraints(const FamilySolution& fs, std::span<const double> xs,
                                         double tol) {
  InitialDataSpec spec;
  spec.law = fs.law();
  spec.tag = fs.tag();
  spec.rho0 = fs.rho0();
  spec.u0 = fs.u0();
  spec.S0 = fs.S0();
  spec.q = [&fs](int a, const State& s) { return fs.q_constraint(a, s); };
  spec.label = family_name(fs.id());
  return check_initial_constraints(spec, xs, tol);
}

namespace {

std::vector<std::pair<double, double>> grid_samples(const SampleGrid& g) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(g.nx) * g.nt + g.n_random);
  for (double x : linspace(g.x_lo, g.x_hi, g.nx)) {
    for (double t : linspace(g.t_lo, g.t_hi, g.nt)) pts.emplace_back(x, t);
  }
  std::mt19937 rng(g.seed);
  std::uniform_real_distribution<double> ux(g.x_lo, g.x_hi), ut(g.t_lo, g.t_hi);
  for (int i = 0; i < g.n_random; ++i) {
    const double x = ux(rng), t = ut(rng);
    pts.emplace_back(x, t);
  }
  return pts;
}

}  // namespace

ResidualReport pde_residual(const FamilySolution& fs, const SampleGrid& grid, double h,
                            double tol) {
  const auto pts = grid_samples(grid);
  const SourceTerm f = fs.source();
  const PressureLaw& law = fs.law();

  Accum acc[2][3];  // [h-level][equation]
  const double hs[2] = {h, 0.5 * h};
  for (int k = 0; k < 2; ++k) {
    const double hk = hs[k];
    for (auto [x, t] : pts) {
      const State c = fs.evaluate(x, t);
      const State xp = fs.evaluate(x + hk, t);
      const State xm = fs.evaluate(x - hk, t);
      const State tp = fs.evaluate(x, t + hk);
      const State tm = fs.evaluate(x, t - hk);
      const double rho_x = (xp.rho - xm.rho) / (2 * hk), rho_t = (tp.rho - tm.rho) / (2 * hk);
      const double u_x = (xp.u - xm.u) / (2 * hk), u_t = (tp.u - tm.u) / (2 * hk);
      const double S_x = (xp.S - xm.S) / (2 * hk), S_t = (tp.S - tm.S) / (2 * hk);
      const double c2 = pressure_rho(law, c);
      const double ps = pressure_S(law, c);
      acc[k][0].add(rho_t + c.u * rho_x + c.rho * u_x);
      acc[k][1].add(u_t + c.u * u_x + c2 / c.rho * rho_x + ps / c.rho * S_x - f(c));
      acc[k][2].add(S_t + c.u * S_x);
    }
  }

  ResidualReport rep;
  rep.check = std::string("pde-residual ") + family_name(fs.id());
  rep.pass = true;
  const char* names[3] = {"mass", "momentum", "entropy"};
  for (int e = 0; e < 3; ++e) {
    ResidualEntry en;
    en.equation = names[e];
    en.max_resid = acc[0][e].max_abs;
    en.l2_resid = acc[0][e].rms();
    en.h = h;
    const double l2h = acc[0][e].rms(), l2h2 = acc[1][e].rms();
    en.has_ratio = l2h2 > kRatioFloor;
    en.ratio = en.has_ratio ? l2h / l2h2 : 0.0;
    en.pass = en.max_resid <= tol && (!en.has_ratio || (en.ratio >= 3.5 && en.ratio <= 4.5));
    rep.pass = rep.pass && en.pass;
    rep.entries.push_back(en);
  }
  return rep;
}

namespace {

struct CompatCtx {
  const CompatFunctions& cf;
  std::array<int, 2> idx;
  int j;  // component index of v in U

  State U(double R1, double R2, double v) const {
    return from_char(cf.law, CharField{R1, R2, v, cf.tag});
  }

  double q(int beta, double R1, double R2, double v) const {
    return beta == 0 ? cf.q1(R1, R2, v) : cf.q2(R1, R2, v);
  }

  double w(int alpha, double R1, double R2, double v) const {
    const State s = U(R1, R2, v);
    const auto sg = sigma_matrix(cf.law, s, cf.tag);
    return sg[alpha][0] * q(0, R1, R2, v) + sg[alpha][1] * q(1, R1, R2, v);
  }

  double z(int alpha, double R1, double R2, double v) const {
    const State s = U(R1, R2, v);
    const auto sg = sigma_matrix(cf.law, s, cf.tag);
    const EigenStructure es = eigen(cf.law, s);
    const double fv = cf.f(s);
    double acc = 0.0;
    for (int b = 0; b < 2; ++b) {
      const double lB = es.left[idx[b]][1] * fv;
      acc += sg[alpha][b] * (lB - es.lambda[idx[b]] * q(b, R1, R2, v));
    }
    return acc;
  }

  double sigma_lB(int alpha, double R1, double R2, double v) const {
    const State s = U(R1, R2, v);
    const auto sg = sigma_matrix(cf.law, s, cf.tag);
    const EigenStructure es = eigen(cf.law, s);
    const double fv = cf.f(s);
    return sg[alpha][0] * es.left[idx[0]][1] * fv + sg[alpha][1] * es.left[idx[1]][1] * fv;
  }
};

double fd3(const std::function<double(double, double, double)>& g, double R1, double R2, double v,
           int comp) {
  double x[3] = {R1, R2, v};
  const double h = 1e-5 * std::max(1.0, std::abs(x[comp]));
  double xp[3] = {R1, R2, v}, xm[3] = {R1, R2, v};
  xp[comp] += h;
  xm[comp] -= h;
  return (g(xp[0], xp[1], xp[2]) - g(xm[0], xm[1], xm[2])) / (2 * h);
}

}  // namespace

ResidualReport verify_compatibility(const CompatFunctions& cf, std::span<const CharField> samples,
                                    double tol) {
  CompatCtx ctx{cf, constraint_indices(cf.tag), v_index(cf.tag)};
  const int Nidx = cf.tag == SpeedTag::lambda3 ? 2 : 1;

  Accum acc_c1[2], acc_c2[2];
  for (const CharField& cfld : samples) {
    const double R1 = cfld.R1, R2 = cfld.R2, v = cfld.v;
    const State s = ctx.U(R1, R2, v);
    const auto sg = sigma_matrix(cf.law, s, cf.tag);
    const EigenStructure es = eigen(cf.law, s);
    const double lamN = es.lambda[Nidx];
    const double B_j = (cf.tag == SpeedTag::lambda3) ? cf.f(s) : 0.0;

    // (c1)
    for (int a = 0; a < 2; ++a) {
      double lhs = 0.0, rhs = 0.0;
      for (int b = 0; b < 2; ++b) {
        const double lam_b = es.lambda[ctx.idx[b]];
        const double dq_dv = fd3([&](double r1, double r2, double vv) { return ctx.q(b, r1, r2, vv); },
                                 R1, R2, v, 2);
        lhs += (lam_b - lamN) * sg[a][b] * dq_dv;
        const double dsg_dv =
            fd3([&](double r1, double r2, double vv) {
              const State ss = ctx.U(r1, r2, vv);
              return sigma_matrix(cf.law, ss, cf.tag)[a][b];
            },
                R1, R2, v, 2);
        const double dlam_dv = fd3(
            [&](double r1, double r2, double vv) {
              return eigen(cf.law, ctx.U(r1, r2, vv)).lambda[ctx.idx[b]];
            },
            R1, R2, v, 2);
        rhs += ((lamN - lam_b) * dsg_dv - sg[a][b] * dlam_dv) * ctx.q(b, R1, R2, v);
      }
      rhs += fd3([&](double r1, double r2, double vv) { return ctx.sigma_lB(a, r1, r2, vv); }, R1,
                 R2, v, 2);
      acc_c1[a].add(lhs - rhs);
    }

    // (c2)
    double qd = 0.0;  // (lambda^N - lambda^gamma) q^gamma d^gamma_j
    for (int b = 0; b < 2; ++b) {
      qd += (lamN - es.lambda[ctx.idx[b]]) * ctx.q(b, R1, R2, v) * es.right[ctx.idx[b]][ctx.j];
    }
    for (int a = 0; a < 2; ++a) {
      double resid = 0.0;
      for (int g = 0; g < 2; ++g) {
        const double dw_dRg =
            fd3([&](double r1, double r2, double vv) { return ctx.w(a, r1, r2, vv); }, R1, R2, v, g);
        const double dz_dRg =
            fd3([&](double r1, double r2, double vv) { return ctx.z(a, r1, r2, vv); }, R1, R2, v, g);
        resid += dw_dRg * ctx.z(g, R1, R2, v) - dz_dRg * ctx.w(g, R1, R2, v);
      }
      const double dw_dv =
          fd3([&](double r1, double r2, double vv) { return ctx.w(a, r1, r2, vv); }, R1, R2, v, 2);
      resid += dw_dv * (B_j + qd);
      acc_c2[a].add(resid);
    }
  }

  ResidualReport rep;
  rep.check = "compatibility";
  rep.pass = true;
  const char* names[4] = {"c1-alpha1", "c1-alpha2", "c2-alpha1", "c2-alpha2"};
  const Accum* accs[4] = {&acc_c1[0], &acc_c1[1], &acc_c2[0], &acc_c2[1]};
  for (int i = 0; i < 4; ++i) {
    ResidualEntry e;
    e.equation = names[i];
    e.max_resid = accs[i]->max_abs;
    e.l2_resid = accs[i]->rms();
    e.pass = e.max_resid <= tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

ResidualReport verify_structural(const FamilySolution& fs, const SampleGrid& grid, double tol,
                                 const SourceTerm* f_test) {
  const auto identities = fs.structural_identities(f_test);
  const auto pts = grid_samples(grid);
  ResidualReport rep;
  rep.check = std::string("structural ") + family_name(fs.id());
  rep.pass = true;
  for (const auto& ident : identities) {
    Accum acc;
    for (auto [x, t] : pts) acc.add(ident.residual(fs.evaluate(x, t)));
    ResidualEntry e;
    e.equation = ident.name;
    e.max_resid = acc.max_abs;
    e.l2_resid = acc.rms();
    e.pass = acc.max_abs <= tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace euler1d

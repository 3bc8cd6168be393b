#include "euler1d/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "euler1d/constraints.hpp"
#include "euler1d/riemann.hpp"
#include "euler1d/tvd.hpp"

namespace euler1d {

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double num_at(const std::vector<std::string>& tk, std::size_t i, const std::string& what) {
  if (i >= tk.size()) throw Error(Errc::bad_params, what + ": missing argument");
  try {
    return std::stod(tk[i]);
  } catch (const std::exception&) {
    throw Error(Errc::bad_params, what + ": bad number " + tk[i]);
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Profile profile_from_spec(const std::string& spec) {
  const auto tk = tokens(spec);
  if (tk.empty()) throw Error(Errc::bad_params, "profile: empty spec");
  const std::string& kind = tk[0];
  if (kind == "constant") return Profile::constant(num_at(tk, 1, "profile constant"));
  if (kind == "linear") {
    return Profile::linear(num_at(tk, 1, "profile linear"), num_at(tk, 2, "profile linear"));
  }
  if (kind == "poly") {
    std::vector<double> c;
    for (std::size_t i = 1; i < tk.size(); ++i) c.push_back(num_at(tk, i, "profile poly"));
    return Profile::poly(std::move(c));
  }
  if (kind == "exp") {
    return Profile::exponential(num_at(tk, 1, "profile exp"), num_at(tk, 2, "profile exp"),
                                num_at(tk, 3, "profile exp"));
  }
  if (kind == "tanh") {
    return Profile::tanh_ramp(num_at(tk, 1, "profile tanh"), num_at(tk, 2, "profile tanh"),
                              num_at(tk, 3, "profile tanh"), num_at(tk, 4, "profile tanh"));
  }
  throw Error(Errc::bad_params, "profile: unknown kind " + kind);
}

EntropyFn entropy_from_spec(const std::string& spec) {
  const auto tk = tokens(spec);
  if (tk.empty()) throw Error(Errc::bad_params, "entropy function: empty spec");
  const std::string& kind = tk[0];
  if (kind == "constant") return EntropyFn::constant(num_at(tk, 1, "entropy constant"));
  if (kind == "linear") {
    return EntropyFn::linear(num_at(tk, 1, "entropy linear"), num_at(tk, 2, "entropy linear"));
  }
  if (kind == "exp") {
    return EntropyFn::exponential(num_at(tk, 1, "entropy exp"), num_at(tk, 2, "entropy exp"),
                                  num_at(tk, 3, "entropy exp"));
  }
  throw Error(Errc::bad_params, "entropy function: unknown kind " + kind);
}

namespace {

InitialData init_from_config(const Config& cfg) {
  InitialData init;
  init.x_lo = cfg.get_num_or("family", "x_lo", -1.0);
  init.x_hi = cfg.get_num_or("family", "x_hi", 1.0);
  init.t_max = cfg.get_num_or("family", "t_max", 2.0);
  init.anchor_x = cfg.get_num_or("family", "anchor_x", 0.0);
  init.anchor_value = cfg.get_num_or("family", "anchor_value", 0.0);
  if (cfg.has("family", "rho0")) init.rho0 = profile_from_spec(cfg.get_str("family", "rho0"));
  if (cfg.has("family", "u0")) init.u0 = profile_from_spec(cfg.get_str("family", "u0"));
  if (cfg.has("family", "S0")) init.S0 = profile_from_spec(cfg.get_str("family", "S0"));
  if (cfg.has("family", "v0")) init.v0 = profile_from_spec(cfg.get_str("family", "v0"));
  return init;
}

PressureLaw law_from_config(const Config& cfg, const std::string& section) {
  const std::string kind = cfg.get_str_or(section, "law", "ideal");
  if (kind == "ideal") {
    return IdealGas{cfg.get_num_or(section, "gamma", 2.0), cfg.get_num_or(section, "cv", 1.0),
                    cfg.get_num_or(section, "s_hat", 0.0)};
  }
  if (kind == "vonkarman") {
    return VonKarman{entropy_from_spec(cfg.get_str(section, "a")),
                     entropy_from_spec(cfg.get_str(section, "b"))};
  }
  if (kind == "chaplygin") return Chaplygin{cfg.get_num_or(section, "a0", 1.0)};
  throw Error(Errc::bad_params, "config: unknown pressure law " + kind);
}

FamilyParams params_from_config(const Config& cfg, FamilyId id) {
  auto num = [&](const char* k) { return cfg.get_num("family", k); };
  auto num_or = [&](const char* k, double d) { return cfg.get_num_or("family", k, d); };
  switch (id) {
    case FamilyId::ig_i:
      return IgIParams{num_or("gamma", 2.0), num_or("cv", 1.0), num_or("s_hat", 0.0), num("k2"),
                       num_or("c1", 0.0)};
    case FamilyId::ig_ii:
      return IgIiParams{num_or("gamma", 2.0), num_or("cv", 1.0), num_or("s_hat", 0.0), num("k1"),
                        num_or("S0_const", 0.0)};
    case FamilyId::vk_a:
      return VkAParams{entropy_from_spec(cfg.get_str("family", "a")),
                       entropy_from_spec(cfg.get_str("family", "b")), num("c0"), num("c1")};
    case FamilyId::ch_psi:
      return ChPsiParams{num_or("a0", 1.0), num("c0")};
    case FamilyId::ch_m0: {
      ChM0Params p;
      p.a0 = num_or("a0", 1.0);
      p.m0 = num("m0");
      p.S0 = num_or("S0_const", 0.0);
      p.psi = profile_from_spec(cfg.get_str("family", "psi"));
      p.phi = profile_from_spec(cfg.get_str("family", "phi"));
      return p;
    }
    case FamilyId::l2_i: {
      L2IParams p;
      p.law = law_from_config(cfg, "family");
      p.u0 = num("u0_const");
      // power-law source f = coef rho^expo
      const double coef = num("f_coef"), expo = num("f_expo");
      p.f = {[coef, expo](double rho, double, double) { return coef * std::pow(rho, expo); },
             "coef rho^expo"};
      return p;
    }
    case FamilyId::l2_ii: {
      L2IiParams p;
      p.law = law_from_config(cfg, "family");
      p.u0 = num("u0_const");
      const double k = num("F2_slope");
      p.F2 = [k](double u) { return k * u; };
      const double c = num("psi_coef"), e = num("psi_expo");
      const PressureLaw law = p.law;
      p.psi = [c, e, law](double pv, double S) {
        // psi as a power of the density implied by (p, S)
        const State s = from_char(law, CharField{pv, 0.0, S, SpeedTag::lambda2});
        return c * std::pow(s.rho, e);
      };
      return p;
    }
    case FamilyId::l2_iii: {
      L2IiiParams p;
      p.gamma = num_or("gamma", 2.0);
      p.cv = num_or("cv", 1.0);
      p.s_hat = num_or("s_hat", 0.0);
      const auto coeffs = cfg.get_nums("family", "pi0_poly");
      p.pi0 = [coeffs](double u) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
        return acc;
      };
      return p;
    }
    case FamilyId::l2_iv_1:
      return L2Iv1Params{num_or("gamma", 2.0), num_or("cv", 1.0), num_or("s_hat", 0.0), num("k0"),
                         num("mu0")};
    case FamilyId::l2_iv_2:
      return L2Iv2Params{num_or("gamma", 2.0), num_or("cv", 1.0), num_or("s_hat", 0.0), num("k0"),
                         num("k1")};
    case FamilyId::l2_iv_vk:
      return L2IvVkParams{entropy_from_spec(cfg.get_str("family", "a")),
                          entropy_from_spec(cfg.get_str("family", "b")), num("k0"), num("k1"),
                          num("c0")};
    case FamilyId::l2_v:
      return L2VParams{entropy_from_spec(cfg.get_str("family", "a")),
                       entropy_from_spec(cfg.get_str("family", "b")), num("k0"), num("k1")};
    case FamilyId::l2_v_ch:
      return L2VChParams{num_or("a0", 1.0), num("k0"), num("k1"), num("c_hat")};
    case FamilyId::simple_wave: {
      SimpleParams p;
      p.law = law_from_config(cfg, "family");
      p.r1 = num("r1");
      p.r2 = num_or("r2", 0.0);
      return p;
    }
  }
  throw Error(Errc::bad_params, "config: unhandled family id");
}

}  // namespace

FamilyBundle family_from_config(const Config& cfg) {
  const std::string name = cfg.get_str("family", "id");
  const auto id = family_from_name(name);
  if (!id) throw Error(Errc::bad_params, "config: unknown family id " + name);

  if (cfg.get_str_or("family", "fixture", "") == "default") {
    Fixture fx = default_fixture(*id);
    return FamilyBundle{make_family(fx.params, fx.init), std::move(fx)};
  }
  Fixture fx;
  fx.params = params_from_config(cfg, *id);
  fx.init = init_from_config(cfg);
  fx.x_lo = cfg.get_num_or("family", "box_x_lo", fx.init.x_lo + 0.15 * (fx.init.x_hi - fx.init.x_lo));
  fx.x_hi = cfg.get_num_or("family", "box_x_hi", fx.init.x_hi - 0.15 * (fx.init.x_hi - fx.init.x_lo));
  fx.t_lo = cfg.get_num_or("family", "box_t_lo", 0.02);
  fx.t_hi = cfg.get_num_or("family", "box_t_hi", 0.2);
  return FamilyBundle{make_family(fx.params, fx.init), std::move(fx)};
}

namespace {

std::ofstream open_out(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open output file " + (dir / name).string());
  return out;
}

int run_exact(const Scenario& sc, std::ostream& log) {
  FamilyBundle fb = family_from_config(sc.cfg);
  const FamilySolution& fs = fb.fs;
  const std::string prefix = sc.cfg.get_str_or("output", "prefix", "exact");

  // constraint gate on the realized initial data
  const auto [dom_lo, dom_hi] = fs.x_domain();
  const double pad = 1e-3 * (dom_hi - dom_lo);
  const auto xs = linspace(dom_lo + pad, dom_hi - pad, 201);
  const auto rep = check_initial_constraints(fs, xs);
  if (!rep.pass) {
    log << rep.to_text();
    log << "error: initial data violates the family constraints\n";
    return kExitConstraint;
  }

  const double gx_lo = sc.cfg.get_num_or("grid", "x_lo", fb.fixture.x_lo);
  const double gx_hi = sc.cfg.get_num_or("grid", "x_hi", fb.fixture.x_hi);
  const int nx = static_cast<int>(sc.cfg.get_int_or("grid", "nx", 201));
  const auto times = sc.cfg.get_nums_or("grid", "times", {fb.fixture.t_hi});
  if (nx < 2 || !(gx_lo < gx_hi) || times.empty()) {
    throw Error(Errc::bad_params, "exact: invalid [grid] section");
  }

  const auto nodes = linspace(gx_lo, gx_hi, nx);
  int idx = 0;
  for (double t : times) {
    if (!(t < fs.time_horizon())) {
      log << "error: t = " << t << " is outside the validity horizon t* = " << fs.time_horizon()
          << "\n";
      return kExitValidity;
    }
    GridField field = make_state_field(nodes, [&](double x) { return fs.evaluate(x, t); });
    field.time = t;
    auto out = open_out(sc.out_dir, prefix + "_t" + std::to_string(idx) + ".csv");
    write_state_csv(out, field, fs.law());
    ++idx;
  }
  log << "wrote " << times.size() << " snapshot(s) for " << family_name(fs.id()) << "\n";
  return kExitOk;
}

IdealCcc ccc_from_config(const Config& cfg) {
  IdealCcc p;
  p.gamma = cfg.get_num_or("rp", "gamma", 2.0);
  p.cv = cfg.get_num_or("rp", "cv", 1.0);
  p.s_hat = cfg.get_num_or("rp", "s_hat", 0.0);
  p.k0 = cfg.get_num_or("rp", "k0", 1.0);
  p.k1 = cfg.get_num_or("rp", "k1", 0.0);
  p.k2 = cfg.get_num("rp", "k2");
  return p;
}

int run_rp(const Scenario& sc, std::ostream& log) {
  const IdealCcc p = ccc_from_config(sc.cfg);
  const double rho_L = sc.cfg.get_num("rp", "rho_l");
  const double rho_R = sc.cfg.get_num("rp", "rho_r");
  const std::string prefix = sc.cfg.get_str_or("output", "prefix", "rp");

  const double S_eq = p.equilibrium_entropy();
  const State left{rho_L, p.u_on_curve(rho_L), S_eq};
  const State right{rho_R, p.u_on_curve(rho_R), S_eq};
  RPInput in{left, right, make_ccc_system(p), std::nullopt};
  const RPSolution sol = solve_rp(in);
  const RPSolution ref = explicit_ideal_rp(p, rho_L, rho_R);

  const double gx_lo = sc.cfg.get_num_or("grid", "x_lo", -2.0);
  const double gx_hi = sc.cfg.get_num_or("grid", "x_hi", 2.0);
  const int nx = static_cast<int>(sc.cfg.get_int_or("grid", "nx", 201));
  const auto times = sc.cfg.get_nums_or("grid", "times", {0.1});
  const auto nodes = linspace(gx_lo, gx_hi, nx);

  double cross_max = 0.0;
  int idx = 0;
  for (double t : times) {
    GridField field = make_state_field(nodes, [&](double x) { return sol.eval(x, t); });
    field.time = t;
    for (double x : nodes) {
      cross_max = std::max(cross_max, std::abs(sol.eval(x, t).u - ref.eval(x, t).u));
    }
    auto out = open_out(sc.out_dir, prefix + "_t" + std::to_string(idx) + ".csv");
    write_state_csv(out, field, in.sys.law);
    ++idx;
  }

  auto meta = open_out(sc.out_dir, prefix + "_meta.txt");
  meta << "admissible: yes\n";
  meta << "lambda_L: " << fmt17(sol.lambda_L) << "\n";
  meta << "lambda_R: " << fmt17(sol.lambda_R) << "\n";
  meta << "R1: " << fmt17(sol.R1) << "\n";
  meta << "R2: " << fmt17(sol.R2) << "\n";
  meta << "u_L: " << fmt17(left.u) << "\nu_R: " << fmt17(right.u) << "\n";
  meta << "explicit_cross_check_max_du: " << fmt17(cross_max) << "\n";
  log << "rp solved, lambda_L = " << sol.lambda_L << ", lambda_R = " << sol.lambda_R
      << ", cross-check max |du| = " << cross_max << "\n";
  return kExitOk;
}

int run_verify(const Scenario& sc, std::ostream& log) {
  FamilyBundle fb = family_from_config(sc.cfg);
  const FamilySolution& fs = fb.fs;
  const std::string prefix = sc.cfg.get_str_or("output", "prefix", "verify");

  const int nx_init = static_cast<int>(sc.cfg.get_int_or("verify", "nx_init", 201));
  if (nx_init < 1) throw Error(Errc::bad_params, "verify: nx_init must be >= 1");

  SampleGrid grid = SampleGrid::from_fixture(fb.fixture);
  grid.nx = static_cast<int>(sc.cfg.get_int_or("verify", "nx", grid.nx));
  grid.nt = static_cast<int>(sc.cfg.get_int_or("verify", "nt", grid.nt));
  grid.n_random = static_cast<int>(sc.cfg.get_int_or("verify", "n_random", grid.n_random));
  grid.seed = sc.seed;
  if (grid.nx < 1 || grid.nt < 1 || grid.n_random < 0 ||
      (grid.nx * grid.nt + grid.n_random) == 0) {
    throw Error(Errc::bad_params, "verify: empty sample set");
  }

  const auto [dom_lo, dom_hi] = fs.x_domain();
  const double pad = 1e-3 * (dom_hi - dom_lo);
  const auto xs = linspace(dom_lo + pad, dom_hi - pad, nx_init);

  const double perturb = sc.cfg.get_num_or("verify", "perturb_u0", 0.0);
  ResidualReport init_rep;
  if (perturb == 0.0) {
    init_rep = check_initial_constraints(fs, xs);
  } else {
    // bump the velocity profile and re-check: must fail for nonzero bumps
    InitialDataSpec spec;
    spec.law = fs.law();
    spec.tag = fs.tag();
    spec.rho0 = fs.rho0();
    spec.S0 = fs.S0();
    const Profile base = fs.u0();
    const double xc = 0.5 * (dom_lo + dom_hi), w = 0.1 * (dom_hi - dom_lo);
    spec.u0 = Profile::callable(
        [base, perturb, xc, w](double x) {
          const double z = (x - xc) / w;
          return base(x) + perturb * std::exp(-z * z);
        },
        [base, perturb, xc, w](double x) {
          const double z = (x - xc) / w;
          return base.deriv(x) - perturb * 2.0 * z / w * std::exp(-z * z);
        });
    spec.q = [&fs](int a, const State& s) { return fs.q_constraint(a, s); };
    spec.label = std::string(family_name(fs.id())) + " (perturbed)";
    init_rep = check_initial_constraints(spec, xs);
  }

  const auto pde_rep = pde_residual(fs, grid);
  const auto struct_rep = verify_structural(fs, grid);

  auto txt = open_out(sc.out_dir, prefix + "_report.txt");
  txt << init_rep.to_text() << pde_rep.to_text() << struct_rep.to_text();
  auto csv = open_out(sc.out_dir, prefix + "_report.csv");
  csv << "check,equation,max_resid,l2_resid,h,ratio,pass\n";
  const std::array<const ResidualReport*, 3> reps{&init_rep, &pde_rep, &struct_rep};
  for (const ResidualReport* rep : reps) {
    std::ostringstream ss;
    rep->write_csv(ss);
    const std::string body = ss.str();
    csv << body.substr(body.find('\n') + 1);  // strip the repeated header
  }

  const bool all_pass = init_rep.pass && pde_rep.pass && struct_rep.pass;
  log << init_rep.to_text() << pde_rep.to_text() << struct_rep.to_text();
  log << (all_pass ? "verify: ALL PASS\n" : "verify: FAIL\n");
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_tvd_compare(const Scenario& sc, std::ostream& log) {
  const IdealCcc p = ccc_from_config(sc.cfg);
  const double rho_L = sc.cfg.get_num("rp", "rho_l");
  const double rho_R = sc.cfg.get_num("rp", "rho_r");
  const std::string prefix = sc.cfg.get_str_or("output", "prefix", "tvd");

  const RPSolution ref = explicit_ideal_rp(p, rho_L, rho_R);
  const WaveSystem sys = make_ccc_system(p);
  const double R1 = ref.R1, R2 = ref.R2;

  TvdConfig base;
  base.x_min = sc.cfg.get_num_or("tvd", "x_min", -2.0);
  base.x_max = sc.cfg.get_num_or("tvd", "x_max", 2.0);
  base.nx = static_cast<int>(sc.cfg.get_int_or("tvd", "nx", 101));
  base.dt = sc.cfg.get_num_or("tvd", "dt", 1e-3);
  base.T = sc.cfg.get_num_or("tvd", "T", 0.1);
  base.boundary = BoundaryKind::fixed;
  const int levels = static_cast<int>(sc.cfg.get_int_or("tvd", "refinements", 3));
  const std::string lim = sc.cfg.get_str_or("tvd", "limiter", "van-leer");
  base.limiter = (lim == "minmod") ? Limiter::minmod : Limiter::van_leer;

  auto lambda_fn = [sys, R1, R2](double v) { return sys.lambdaN(R1, R2, v); };
  auto rhs_fn = [sys, R1, R2](double v) { return sys.h_rhs(R1, R2, v); };

  auto err_csv = open_out(sc.out_dir, prefix + "_errors.csv");
  err_csv << "level,nx,dx,dt,l1_error,ratio\n";

  double prev = 0.0;
  TvdConfig cfg = base;
  for (int lvl = 0; lvl < levels; ++lvl) {
    const auto nodes = linspace(cfg.x_min, cfg.x_max, cfg.nx);
    std::vector<double> v0(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      v0[i] = nodes[i] < 0.0 ? ref.left.u : ref.right.u;
    }
    const auto frames = advance_scalar(cfg, lambda_fn, rhs_fn, make_scalar_field(nodes, v0, "u"));
    const auto& fin = frames.back();
    const double dx = (cfg.x_max - cfg.x_min) / (cfg.nx - 1);
    double l1 = 0.0;
    for (std::size_t i = 0; i < fin.x.size(); ++i) {
      l1 += std::abs(fin.rows[0][i] - ref.eval(fin.x[i], fin.time).u) * dx;
    }
    err_csv << lvl << ',' << cfg.nx << ',' << fmt17(dx) << ',' << fmt17(cfg.dt) << ','
            << fmt17(l1) << ',' << (lvl ? fmt17(prev / l1) : std::string("nan")) << '\n';
    log << "level " << lvl << ": nx = " << cfg.nx << ", L1 = " << l1
        << (lvl ? (", ratio = " + std::to_string(prev / l1)) : std::string()) << "\n";

    auto snap = open_out(sc.out_dir, prefix + "_level" + std::to_string(lvl) + ".csv");
    snap << "x,u_tvd,u_exact\n";
    for (std::size_t i = 0; i < fin.x.size(); ++i) {
      snap << fmt17(fin.x[i]) << ',' << fmt17(fin.rows[0][i]) << ','
           << fmt17(ref.eval(fin.x[i], fin.time).u) << '\n';
    }

    prev = l1;
    cfg.nx = 2 * (cfg.nx - 1) + 1;
    cfg.dt *= 0.5;
  }
  return kExitOk;
}

int run_subchar(const Scenario& sc, std::ostream& log) {
  const IdealCcc p = ccc_from_config(sc.cfg);
  const double rho_L = sc.cfg.get_num("rp", "rho_l");
  const double rho_R = sc.cfg.get_num("rp", "rho_r");
  const std::string prefix = sc.cfg.get_str_or("output", "prefix", "subchar");

  const RPSolution rp = explicit_ideal_rp(p, rho_L, rho_R);
  const EquilibriumSubsystem sub = equilibrium_subsystem(p);
  const WaveSystem sys = make_ccc_system(p);

  const int n_rho = static_cast<int>(sc.cfg.get_int_or("subchar", "n_rho", 41));
  const auto rhos = linspace(rho_L, rho_R, n_rho);
  const auto curve = rarefaction_curve(sys, rp.left, rhos);
  const auto rep = subcharacteristic_check(sub, sys.law, curve);

  const auto times = sc.cfg.get_nums_or("subchar", "times", {0.05, 0.1});
  const double x_lo = sc.cfg.get_num_or("subchar", "x_lo", -2.0);
  const double x_hi = sc.cfg.get_num_or("subchar", "x_hi", 2.0);
  const int nx = static_cast<int>(sc.cfg.get_int_or("subchar", "nx", 401));
  const auto dists = asymptotic_compare(rp, sub, times, x_lo, x_hi, nx);

  auto csv = open_out(sc.out_dir, prefix + "_margins.csv");
  csv << "rho,c,rho_u_rho,margin,pass\n";
  for (const auto& row : rep.rows) {
    csv << fmt17(row.s.rho) << ',' << fmt17(row.c) << ',' << fmt17(row.rho_u_rho) << ','
        << fmt17(row.margin) << ',' << (row.pass ? '1' : '0') << '\n';
  }
  auto dcsv = open_out(sc.out_dir, prefix + "_asymptotic.csv");
  dcsv << "t,l1_distance\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    dcsv << fmt17(times[i]) << ',' << fmt17(dists[i]) << '\n';
  }

  log << "subcharacteristic margin min = " << rep.min_margin << ", "
      << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    log << "asymptotic L1 at t = " << times[i] << ": " << dists[i] << "\n";
  }
  return rep.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_scenario(const Scenario& sc, std::ostream& log) {
  try {
    switch (sc.kind) {
      case ScenarioKind::exact: return run_exact(sc, log);
      case ScenarioKind::rp: return run_rp(sc, log);
      case ScenarioKind::verify: return run_verify(sc, log);
      case ScenarioKind::tvd_compare: return run_tvd_compare(sc, log);
      case ScenarioKind::subchar: return run_subchar(sc, log);
    }
    log << "error: unknown scenario kind\n";
    return kExitConfig;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::constraint_violation: return kExitConstraint;
      case Errc::out_of_validity: return kExitValidity;
      case Errc::inadmissible_data: return kExitInadmissible;
      default: return kExitConfig;
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace euler1d

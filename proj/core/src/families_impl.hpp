#pragma once

#include <cmath>
#include <limits>

#include "euler1d/families.hpp"

namespace euler1d::detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FamilyImpl {
  FamilyId fid{};
  PressureLaw plaw;
  SpeedTag stag = SpeedTag::lambda3;
  Profile prho0, pu0, pS0;
  double x_lo = -1.0, x_hi = 1.0;
  double t_star = kInf;
  double t_cap = 10.0;

  virtual ~FamilyImpl() = default;
  virtual State eval(double x, double t) const = 0;
  virtual double xi_of(double x, double t) const = 0;
  virtual SourceTerm source() const = 0;
  virtual double q_alpha(int alpha, const State& s) const = 0;
  virtual void add_identities(std::vector<StructuralIdentity>& out, const SourceTerm& f) const;

  void check_time(double t) const;
  void check_xi(double xi) const;
  double solve_xi(const std::function<double(double)>& x_of_xi, double x) const;
};

/// Per-label breakdown witnesses: factory(xi) returns closures in t that
/// must stay strictly positive on the validity domain (denominators,
/// the characteristic-map Jacobian, ...).
using WitnessFactory =
    std::function<std::vector<std::function<double(double)>>(double xi)>;

/// Earliest zero crossing of any witness over [0, t_cap], sampled on an
/// xi grid and refined by bisection; +inf when everything stays positive.
double scan_horizon(const WitnessFactory& factory, double x_lo, double x_hi, double t_cap,
                    int n_xi = 1024, int n_t = 128);

// builders implemented in families.cpp / families_lambda2.cpp
std::shared_ptr<const FamilyImpl> build_ig_i(const IgIParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_ig_ii(const IgIiParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_vk_a(const VkAParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_ch_psi(const ChPsiParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_ch_m0(const ChM0Params&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_simple(const SimpleParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_i(const L2IParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_ii(const L2IiParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_iii(const L2IiiParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_iv_1(const L2Iv1Params&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_iv_2(const L2Iv2Params&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_iv_vk(const L2IvVkParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_v(const L2VParams&, const InitialData&);
std::shared_ptr<const FamilyImpl> build_l2_v_ch(const L2VChParams&, const InitialData&);

}  // namespace euler1d::detail

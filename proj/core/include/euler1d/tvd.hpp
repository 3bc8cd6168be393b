#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "euler1d/wave_system.hpp"

namespace euler1d {

enum class Limiter { van_leer, minmod };
enum class BoundaryKind { outflow, fixed };

struct TvdConfig {
  double x_min = -1.0, x_max = 1.0;
  int nx = 101;  // grid nodes
  double dt = 1e-3;
  double T = 0.1;
  Limiter limiter = Limiter::van_leer;
  BoundaryKind boundary = BoundaryKind::outflow;
  std::vector<double> save_times;  // extra snapshots; initial and final always kept
  bool record_steps = false;       // keep every step (scalar runs only)
};

/// Nodal field: one row per variable on a shared x grid.
struct GridField {
  double time = 0.0;
  std::vector<double> x;
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;

  std::size_t size() const { return x.size(); }
};

GridField make_scalar_field(const std::vector<double>& x, const std::vector<double>& v,
                            std::string name = "v");
GridField make_state_field(const std::vector<double>& x,
                           const std::function<State(double)>& f);

using ScalarClosure = std::function<double(double)>;

/// High-resolution limited upwind update for v_t + lambda(v) v_x = rhs(v),
/// in fluctuation (non-conservative) form. Returns the requested
/// snapshots in time order.
std::vector<GridField> advance_scalar(const TvdConfig& cfg, const ScalarClosure& lambda,
                                      const ScalarClosure& rhs, const GridField& v0);

/// Same scheme applied per characteristic field to the quasilinear
/// system in primitive variables (rho, u, S) with the momentum source.
std::vector<GridField> advance_system(const TvdConfig& cfg, const PressureLaw& law,
                                      const SourceTerm& f, const GridField& U0);

double total_variation(const GridField& field, std::size_t row = 0);

/// Snapshot CSV: x,rho,u,S,p,c with 17 significant digits.
void write_state_csv(std::ostream& os, const GridField& field, const PressureLaw& law);

/// Generic CSV with the field's own rows.
void write_field_csv(std::ostream& os, const GridField& field);

}  // namespace euler1d

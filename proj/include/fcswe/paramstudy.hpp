#pragma once

#include "fcswe/scenario.hpp"

namespace fcswe {

/// Moving-seafloor sources parameterized by the ground-wave speed multiple n:
/// c_eqk = n sqrt(g H0). The displacement accumulates from the closed-form
/// velocity by the trapezoid rule at the solver's step times.
struct EqkParams {
  double g = 9.81;
  double depth = 4000.0;        // H0 (m)
  double amp_1d = 0.2;          // A (m/s)
  double amp_2d = 0.167;        // A (m/s)
  double reg_eps = 0.5;         // dimensionless regularization
  double sigma_1d = 3000.0;     // pulse width (m)
  double sigma_2d = 4240.0;     // pulse width (m)
  double decay_len = 20000.0;   // L (m)
  double half_domain = 100000.0;  // domain half width (m)
  double teqk_sigma_margin = 4.0;  // t_eqk = (r_max + margin sigma) / c_eqk

  double c_eqk(unsigned n) const { return n * std::sqrt(g * depth); }
  double t_eqk_1d(unsigned n) const {
    return (half_domain + teqk_sigma_margin * sigma_1d) / c_eqk(n);
  }
  double t_eqk_2d(unsigned n) const {
    return (half_domain * std::sqrt(2.0) + teqk_sigma_margin * sigma_2d) / c_eqk(n);
  }
};

double eqk_rate_1d(const EqkParams& p, unsigned n, double x, double t);
double eqk_rate_1d_dx(const EqkParams& p, unsigned n, double x, double t);
double eqk_rate_2d(const EqkParams& p, unsigned n, double x, double y, double t);
double eqk_rate_2d_dx(const EqkParams& p, unsigned n, double x, double y, double t);
double eqk_rate_2d_dy(const EqkParams& p, unsigned n, double x, double y, double t);

/// Final displacement (the time integral of the velocity over all time);
/// independent of the speed multiple.
double eqk_static_displacement_1d(const EqkParams& p, double x);
double eqk_static_displacement_2d(const EqkParams& p, double x, double y);

std::unique_ptr<Source1D> eqk_source_1d(const EqkParams& p, unsigned n, const Grid1D& grid);
std::unique_ptr<Source2D> eqk_source_2d(const EqkParams& p, unsigned n, const Grid2D& grid);

/// Scenario builders for the earthquake-speed study. Dynamic runs carry the
/// moving source; static variants apply the final displacement to the free
/// surface instantaneously (at t = 0 or at t = t_eqk).
Scenario1D eqk_scenario_1d(const EqkParams& p, unsigned n, SourceVariant variant);
Scenario2D eqk_scenario_2d(const EqkParams& p, unsigned n, SourceVariant variant);

struct StudyCell {
  unsigned n = 0;
  SourceVariant variant = SourceVariant::Dynamic;
  double amplitude = 0.0;     // max eta at the coast probe (m)
  double arrival = 0.0;       // time of the probe maximum (s)
  double wall_seconds = 0.0;
};

struct StudyTables {
  int dim = 1;
  std::vector<StudyCell> cells;

  const StudyCell* find(unsigned n, SourceVariant v) const;
  /// Percent amplitude change of the static variant against dynamic.
  double static_deficit_percent(unsigned n) const;
};

/// Station series recorded along the coastline (2D study).
struct StationSeries {
  double y_km = 0.0;
  ProbeSeries series;
};

struct ParamStudyResult {
  StudyTables tables;
  std::vector<StationSeries> stations;  // 2D only, dynamic runs
};

ParamStudyResult run_param_study(int dim, const std::vector<unsigned>& n_list,
                                 const std::vector<SourceVariant>& variants, Backend backend,
                                 const FCOperatorSet* ops, const EqkParams& p = {});

const char* variant_name(SourceVariant v);

}  // namespace fcswe

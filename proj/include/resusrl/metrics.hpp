#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace resusrl {

// Controller quality over one evaluation run. pe_series_pct holds the raw
// signed performance error of every control-step sample.
struct MetricsReport {
  double mdpe_pct = 0.0;
  double mdape_pct = 0.0;
  double rmse_l = 0.0;
  std::vector<double> pe_series_pct;
  std::size_t n = 0;
  std::string scenario_id;
};

// Signed deviation from target in percent.
double performance_error(double bv_ml, double bv_target_ml);

// Median with the even-length convention (mean of the two middle order
// statistics). Throws MetricsError on an empty series.
double median(std::vector<double> values);

double mdpe(const std::vector<double>& pe_series_pct);
double mdape(const std::vector<double>& pe_series_pct);

// Root mean square deviation from target, reported in liters.
double rmse_liters(const std::vector<double>& bv_series_ml, double bv_target_ml);

MetricsReport compute_metrics(const std::vector<double>& bv_series_ml,
                              double bv_target_ml, std::string scenario_id);

} // namespace resusrl

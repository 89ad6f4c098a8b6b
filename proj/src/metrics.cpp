#include "resusrl/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "resusrl/errors.hpp"

namespace resusrl {

double performance_error(double bv_ml, double bv_target_ml) {
  return (bv_ml - bv_target_ml) / bv_target_ml * 100.0;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw MetricsError("median of an empty series");
  }
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) {
    return upper;
  }
  // even length: the lower middle is the max of the left partition
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

double mdpe(const std::vector<double>& pe_series_pct) {
  return median(pe_series_pct);
}

double mdape(const std::vector<double>& pe_series_pct) {
  std::vector<double> abs_pe(pe_series_pct.size());
  for (std::size_t i = 0; i < pe_series_pct.size(); ++i) {
    abs_pe[i] = std::fabs(pe_series_pct[i]);
  }
  return median(std::move(abs_pe));
}

double rmse_liters(const std::vector<double>& bv_series_ml, double bv_target_ml) {
  if (bv_series_ml.empty()) {
    throw MetricsError("rmse of an empty series");
  }
  double sum_sq = 0.0;
  for (const double bv : bv_series_ml) {
    const double dev_l = (bv - bv_target_ml) / 1000.0;
    sum_sq += dev_l * dev_l;
  }
  return std::sqrt(sum_sq / static_cast<double>(bv_series_ml.size()));
}

MetricsReport compute_metrics(const std::vector<double>& bv_series_ml,
                              double bv_target_ml, std::string scenario_id) {
  MetricsReport report;
  report.pe_series_pct.reserve(bv_series_ml.size());
  for (const double bv : bv_series_ml) {
    report.pe_series_pct.push_back(performance_error(bv, bv_target_ml));
  }
  report.n = report.pe_series_pct.size();
  report.mdpe_pct = mdpe(report.pe_series_pct);
  report.mdape_pct = mdape(report.pe_series_pct);
  report.rmse_l = rmse_liters(bv_series_ml, bv_target_ml);
  report.scenario_id = std::move(scenario_id);
  return report;
}

} // namespace resusrl

#include "mloc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mloc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double single_slope_db(double exponent, double distance_m) {
  return 10.0 * exponent * std::log10(distance_m);
}

// Continuous dual slope: exponent_primary up to the breakpoint, then
// exponent_secondary beyond it.
double dual_slope_db(const PathLossParams& p, double distance_m) {
  if (distance_m <= p.breakpoint_m) return single_slope_db(p.exponent_primary, distance_m);
  return single_slope_db(p.exponent_primary, p.breakpoint_m) +
         10.0 * p.exponent_secondary * std::log10(distance_m / p.breakpoint_m);
}

}  // namespace

const char* to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::LogDistance: return "log_distance";
    case ModelFamily::SingleSlopeLosNlos: return "single_slope_los_nlos";
    case ModelFamily::DualSlopeNlos: return "dual_slope_nlos";
    case ModelFamily::DualSlopeLosNlos: return "dual_slope_los_nlos";
    case ModelFamily::FreqDependentExponent: return "freq_dependent_exponent";
  }
  throw std::invalid_argument("unknown model family value");
}

ModelFamily model_family_from_string(const std::string& name) {
  if (name == "log_distance") return ModelFamily::LogDistance;
  if (name == "single_slope_los_nlos") return ModelFamily::SingleSlopeLosNlos;
  if (name == "dual_slope_nlos") return ModelFamily::DualSlopeNlos;
  if (name == "dual_slope_los_nlos") return ModelFamily::DualSlopeLosNlos;
  if (name == "freq_dependent_exponent") return ModelFamily::FreqDependentExponent;
  throw std::invalid_argument("unknown model family: " + name);
}

void PathLossParams::validate() const {
  if (!(frequency_mhz > 0.0)) throw std::invalid_argument("frequency_mhz must be > 0");
  if (!(exponent_primary > 0.0)) throw std::invalid_argument("exponent_primary must be > 0");
  if (uses_breakpoint() && !(breakpoint_m > 0.0))
    throw std::invalid_argument("breakpoint_m must be > 0 for dual-slope families");
  if (sigma_los_db < 0.0 || sigma_nlos_db < 0.0)
    throw std::invalid_argument("shadowing sigmas must be >= 0");
  if (family == ModelFamily::FreqDependentExponent && !(freq_ref_mhz > 0.0))
    throw std::invalid_argument("freq_ref_mhz must be > 0");
}

double LosProbability::operator()(double distance_m) const {
  double p = 0.0;
  switch (kind) {
    case Kind::Constant:
      p = constant;
      break;
    case Kind::Table: {
      if (table.empty()) throw std::invalid_argument("LOS probability table is empty");
      if (distance_m <= table.front().first) {
        p = table.front().second;
      } else if (distance_m >= table.back().first) {
        p = table.back().second;
      } else {
        for (std::size_t i = 1; i < table.size(); ++i) {
          if (distance_m <= table[i].first) {
            const auto& [d0, p0] = table[i - 1];
            const auto& [d1, p1] = table[i];
            const double t = (distance_m - d0) / (d1 - d0);
            p = p0 + t * (p1 - p0);
            break;
          }
        }
      }
      break;
    }
    case Kind::InhOffice:
      // 3GPP indoor-office LOS probability curve.
      if (distance_m <= 5.0) {
        p = 1.0;
      } else if (distance_m <= 49.0) {
        p = std::exp(-(distance_m - 5.0) / 70.8);
      } else {
        p = std::exp(-(distance_m - 49.0) / 211.7) * 0.54;
      }
      break;
  }
  return std::clamp(p, 0.0, 1.0);
}

void Environment::validate() const {
  if (!(area_width_m > 0.0) || !(area_height_m > 0.0))
    throw std::invalid_argument("environment area must be positive");
  if (ap_positions.empty()) throw std::invalid_argument("environment needs at least one AP");
  for (const Vec2& ap : ap_positions) {
    if (!contains(ap)) throw std::invalid_argument("AP position outside area rectangle");
  }
  params.validate();
}

double path_loss_db(const PathLossParams& params, double distance_m, bool is_los,
                    double shadowing_db) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("path_loss_db: distance must be > 0");
  const double d = std::max(distance_m, kMinDistanceM);

  double slope_db = 0.0;
  switch (params.family) {
    case ModelFamily::LogDistance:
      slope_db = single_slope_db(params.exponent_primary, d);
      break;
    case ModelFamily::SingleSlopeLosNlos:
      slope_db = single_slope_db(is_los ? params.exponent_primary : params.exponent_secondary, d);
      break;
    case ModelFamily::DualSlopeNlos:
      slope_db = dual_slope_db(params, d);
      break;
    case ModelFamily::DualSlopeLosNlos:
      slope_db = is_los ? single_slope_db(params.exponent_primary, d) : dual_slope_db(params, d);
      break;
    case ModelFamily::FreqDependentExponent: {
      const double n = params.exponent_primary +
                       params.exponent_freq_slope *
                           std::log10(params.frequency_mhz / params.freq_ref_mhz);
      slope_db = single_slope_db(n, d);
      break;
    }
    default:
      throw std::runtime_error("path_loss_db: unknown model family");
  }

  const double lambda_m = kSpeedOfLightMps / (params.frequency_mhz * 1e6);
  const double reference_db = 20.0 * std::log10(4.0 * kPi / lambda_m);
  return slope_db - params.antenna_gain_db + reference_db + shadowing_db;
}

bool sample_los(const Environment& env, double distance_m, Rng& rng) {
  if (distance_m < 0.0) throw std::invalid_argument("sample_los: distance must be >= 0");
  const double p = env.los_probability(distance_m);
  return rng.uniform() < p;
}

RssSample measure_rss(const Environment& env, const Vec2& position, Rng& rng) {
  if (!env.contains(position))
    throw std::invalid_argument("measure_rss: position outside environment area");

  RssSample sample;
  sample.position = position;
  sample.rss_dbm.reserve(env.ap_positions.size());
  sample.los_flags.reserve(env.ap_positions.size());
  for (const Vec2& ap : env.ap_positions) {
    const double d = std::max(distance(position, ap), kMinDistanceM);
    const bool los = sample_los(env, d, rng);
    const double sigma = los ? env.params.sigma_los_db : env.params.sigma_nlos_db;
    const double shadowing = rng.normal(0.0, sigma);
    sample.rss_dbm.push_back(env.params.transmit_power_dbm -
                             path_loss_db(env.params, d, los, shadowing));
    sample.los_flags.push_back(los);
  }
  return sample;
}

std::vector<Vec2> scatter_access_points(double area_width_m, double area_height_m, int count,
                                        Rng& rng) {
  if (count < 1) throw std::invalid_argument("AP count must be >= 1");
  std::vector<Vec2> aps;
  aps.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    aps.push_back({rng.uniform(0.0, area_width_m), rng.uniform(0.0, area_height_m)});
  }
  return aps;
}

}  // namespace mloc

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mloc/geometry.hpp"
#include "mloc/rng.hpp"

namespace mloc {

class Rng;

enum class ModelFamily {
  LogDistance,            // single slope, LOS/NLOS indistinct
  SingleSlopeLosNlos,     // LOS slope exponent_primary, NLOS slope exponent_secondary
  DualSlopeNlos,          // dual slope on every link (NLOS-dominated site)
  DualSlopeLosNlos,       // LOS single slope, NLOS dual slope
  FreqDependentExponent,  // n(f) = exponent_primary + exponent_freq_slope*log10(f/f_ref)
};

const char* to_string(ModelFamily family);
ModelFamily model_family_from_string(const std::string& name);

struct PathLossParams {
  ModelFamily family = ModelFamily::LogDistance;
  double transmit_power_dbm = 20.0;
  double exponent_primary = 2.0;
  double exponent_secondary = 0.0;  // second slope / NLOS slope where applicable
  double breakpoint_m = 0.0;        // slope-change distance, dual-slope families
  double antenna_gain_db = 0.0;
  double frequency_mhz = 2440.0;
  double exponent_freq_slope = 0.0;  // FreqDependentExponent only
  double freq_ref_mhz = 1000.0;      // FreqDependentExponent only
  double sigma_los_db = 3.0;
  double sigma_nlos_db = 3.0;

  bool uses_breakpoint() const {
    return family == ModelFamily::DualSlopeNlos || family == ModelFamily::DualSlopeLosNlos;
  }
  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

// Distance -> LOS probability, clamped to [0, 1].
struct LosProbability {
  enum class Kind { Constant, Table, InhOffice };

  Kind kind = Kind::Constant;
  double constant = 1.0;
  // Piecewise-linear (distance_m, probability) knots, ascending distance.
  std::vector<std::pair<double, double>> table;

  double operator()(double distance_m) const;

  static LosProbability always_los() { return LosProbability{}; }
  static LosProbability never_los() { return LosProbability{Kind::Constant, 0.0, {}}; }
  static LosProbability inh_office() { return LosProbability{Kind::InhOffice, 0.0, {}}; }
};

struct Environment {
  std::string env_id;
  double area_width_m = 20.0;
  double area_height_m = 20.0;
  std::vector<Vec2> ap_positions;
  PathLossParams params;
  LosProbability los_probability;
  std::uint64_t rng_seed = 0;

  bool contains(const Vec2& p) const {
    return p.x >= 0.0 && p.x <= area_width_m && p.y >= 0.0 && p.y <= area_height_m;
  }
  std::size_t num_aps() const { return ap_positions.size(); }
  void validate() const;
};

struct RssSample {
  Vec2 position;
  std::vector<double> rss_dbm;   // one entry per AP
  std::vector<bool> los_flags;   // one entry per AP
};

// Distances below this are clamped before the log term (an RP may sit on top
// of an AP).
inline constexpr double kMinDistanceM = 0.1;
inline constexpr double kSpeedOfLightMps = 299792458.0;

// P_t - P_r in dB for one link. shadowing_db is the pre-sampled Gaussian
// term, making this a pure function.
double path_loss_db(const PathLossParams& params, double distance_m, bool is_los,
                    double shadowing_db);

// Bernoulli draw with probability env.los_probability(distance_m).
bool sample_los(const Environment& env, double distance_m, Rng& rng);

// One RSS vector at `position`: per AP, sample the LOS state, draw shadowing
// with the matching sigma and apply the path-loss model.
RssSample measure_rss(const Environment& env, const Vec2& position, Rng& rng);

// Uniformly scatter `count` APs inside the area (used when a preset gives an
// AP count instead of coordinates).
std::vector<Vec2> scatter_access_points(double area_width_m, double area_height_m, int count,
                                        Rng& rng);

}  // namespace mloc

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mloc/propagation.hpp"

namespace mloc {

struct ReferencePoint {
  int rp_id = 0;
  Vec2 position;
  std::vector<double> rss_mean;          // per-AP mean RSS in dBm
  std::vector<RssSample> raw_samples;    // kept only when requested
};

struct FingerprintDatabase {
  std::string env_id;
  std::vector<ReferencePoint> rps;

  std::size_t num_aps() const { return rps.empty() ? 0 : rps.front().rss_mean.size(); }
  void validate() const;
};

// Evenly spaced nx-by-ny grid inset by `margin_m` from the area border.
struct GridSpec {
  int nx = 1;
  int ny = 1;
  double margin_m = 1.0;
};

using RpLayout = std::variant<GridSpec, std::vector<Vec2>>;

std::vector<Vec2> layout_positions(const RpLayout& layout, const Environment& env);

FingerprintDatabase build_database(const Environment& env, const RpLayout& layout,
                                   int samples_per_rp, Rng& rng, bool keep_raw = false);

// K nearest RPs in signal space, ascending distance, ties by ascending rp_id.
struct RssFingerprint {
  std::vector<double> neighbor_distances;
  std::vector<Vec2> neighbor_positions;
  std::vector<int> neighbor_rp_ids;
};

RssFingerprint rss_fingerprint(const FingerprintDatabase& db, std::span<const double> observation,
                               int k);

// Per-component affine feature scaling: out[i] = (in[i] - offset[i]) / scale[i].
// Fit once on training-environment features, then frozen.
struct Normalizer {
  std::vector<double> offset;
  std::vector<double> scale;

  static Normalizer identity(std::size_t dim);
  // Midrange/half-range fit; maps the fitted rows into [-1, 1] per component.
  static Normalizer fit(const std::vector<std::vector<double>>& rows);

  std::vector<double> apply(std::span<const double> raw) const;
  std::size_t dim() const { return offset.size(); }
};

// Flattens [dist_1, x_1, y_1, ..., dist_K, x_K, y_K] and applies the scaling.
std::vector<double> to_feature_vector(const RssFingerprint& fp, const Normalizer& normalizer);

// Raw (identity-scaled) layout of the same vector, used when fitting a Normalizer.
std::vector<double> raw_feature_vector(const RssFingerprint& fp);

// ---- CSI fingerprints ----

struct CsiImage {
  static constexpr int kSubcarriers = 52;
  static constexpr int kPackets = 50;
  static constexpr int kChannels = 3;
  static constexpr int kTotal = kSubcarriers * kPackets * kChannels;

  std::vector<double> amplitudes;  // [subcarrier][packet][channel], row-major

  CsiImage() : amplitudes(kTotal, 0.0) {}
  double& at(int s, int p, int c) { return amplitudes[(s * kPackets + p) * kChannels + c]; }
  double at(int s, int p, int c) const { return amplitudes[(s * kPackets + p) * kChannels + c]; }
  void validate() const;
};

struct Histogram {
  std::vector<double> bins;
  bool normalized = false;

  double total_mass() const;
};

// Amplitude histogram of one channel over the corpus range [lo, hi], counts
// normalized to sum 1. A degenerate range (hi <= lo) collapses to a single bin.
Histogram csi_channel_histogram(const CsiImage& img, int channel, int bins, double lo, double hi);

// All channels, concatenated; rescaled so the total mass is 1.
Histogram csi_histogram(const CsiImage& img, int bins, double lo, double hi);

// 1 - sum_j min(a_j, b_j) / min(|a|, |b|), in [0, 1].
double histogram_intersection_distance(const Histogram& a, const Histogram& b);

// Desk-scale synthetic CSI: per channel a small multipath set, amplitude
// |sum_k gain_k * exp(j(2*pi*f_s*tau_k + phi_k))| plus Gaussian measurement noise.
struct MultipathComponent {
  double gain = 1.0;
  double delay_ns = 0.0;
  double phase_rad = 0.0;
};

struct CsiSynthSpec {
  std::array<std::vector<MultipathComponent>, CsiImage::kChannels> paths;
  double subcarrier_spacing_mhz = 0.3125;
  double noise_std = 0.05;
};

CsiImage synth_csi_image(const CsiSynthSpec& spec, Rng& rng);

// ---- File formats ----

// CSV with header env_id,rp_id,x_m,y_m,ap_0_dbm,...,ap_{A-1}_dbm.
void save_database_csv(const FingerprintDatabase& db, const std::filesystem::path& path);
FingerprintDatabase load_database_csv(const std::filesystem::path& path);

// Flat CSV of 7800 amplitudes plus a JSON sidecar (shape + corpus min/max).
void save_csi_csv(const CsiImage& img, const std::filesystem::path& path, double corpus_min,
                  double corpus_max);
CsiImage load_csi_csv(const std::filesystem::path& path, double* corpus_min = nullptr,
                      double* corpus_max = nullptr);

}  // namespace mloc

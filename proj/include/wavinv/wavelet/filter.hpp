// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavinv/error.hpp"

namespace wavinv {

enum class WaveletFamily { Haar, Daubechies };

/// Orthonormal two-scale filter. `order` is the number of vanishing
/// moments; Daubechies(order) has 2*order taps, Haar is Daubechies(1).
class WaveletFilter {
 public:
  static WaveletFilter haar() { return WaveletFilter(WaveletFamily::Haar, 1); }
  static WaveletFilter daubechies(int order) {
    return WaveletFilter(WaveletFamily::Daubechies, order);
  }

  /// Parses "haar", "db1" .. "db10".
  static WaveletFilter from_name(const std::string& name) {
    if (name == "haar") return haar();
    if (name.size() > 2 && name.rfind("db", 0) == 0) {
      std::size_t used = 0;
      int order = 0;
      try {
        order = std::stoi(name.substr(2), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == name.size() - 2) return daubechies(order);
    }
    detail::fail("WaveletFilter", "unknown filter name '" + name + "'");
  }

  WaveletFamily family() const noexcept { return family_; }
  int order() const noexcept { return order_; }
  std::size_t support() const noexcept { return lowpass_.size(); }
  std::span<const double> lowpass() const noexcept { return lowpass_; }
  std::span<const double> highpass() const noexcept { return highpass_; }

  std::string name() const {
    return family_ == WaveletFamily::Haar ? std::string("haar") : "db" + std::to_string(order_);
  }

  /// Largest deviation from Σ h_n h_{n-2m} = δ_{m,0} and Σ h_n = √2.
  double orthonormality_defect() const {
    const auto n = static_cast<long>(lowpass_.size());
    double worst = std::abs(sum(lowpass_) - std::sqrt(2.0));
    for (long m = 0; 2 * m < n; ++m) {
      double acc = 0.0;
      for (long i = 2 * m; i < n; ++i) acc += lowpass_[i] * lowpass_[i - 2 * m];
      worst = std::max(worst, std::abs(acc - (m == 0 ? 1.0 : 0.0)));
    }
    return worst;
  }

 private:
  WaveletFilter(WaveletFamily family, int order) : family_(family), order_(order) {
    lowpass_ = daubechies_taps(order);
    // Quadrature mirror: g_i = (-1)^i h_{L-1-i}.
    const std::size_t len = lowpass_.size();
    highpass_.resize(len);
    for (std::size_t i = 0; i < len; ++i)
      highpass_[i] = (i % 2 == 0 ? 1.0 : -1.0) * lowpass_[len - 1 - i];
  }

  static double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }

  // Extremal-phase Daubechies lowpass filters (reconstruction orientation).
  static std::vector<double> daubechies_taps(int order) {
    switch (order) {
      case 1:
        return {0.7071067811865476, 0.7071067811865476};
      case 2:
        return {0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
                -0.12940952255126037};
      case 3:
        return {0.33267055295008263, 0.8068915093110925, 0.45987750211849154,
                -0.13501102001025458, -0.08544127388202666, 0.03522629188570953};
      case 4:
        return {0.2303778133088965,    0.7148465705529157,   0.6308807679298589,
                -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
                0.0328830116668852,    -0.010597401785069032};
      case 5:
        return {0.16010239797419293,  0.6038292697971896,    0.7243085284377729,
                0.13842814590132074,  -0.24229488706638203,  -0.032244869584638375,
                0.07757149384004572,  -0.006241490212798274, -0.012580751999081999,
                0.0033357252854737712};
      case 6:
        return {0.11154074335010947,  0.49462389039845306,   0.7511339080210954,
                0.31525035170919763,  -0.22626469396543983,  -0.12976686756726194,
                0.09750160558732304,  0.027522865530305727,  -0.03158203931748603,
                0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796};
      case 7:
        return {0.07785205408500918,    0.3965393194819173,    0.7291320908462351,
                0.4697822874051931,     -0.14390600392856498,  -0.22403618499387498,
                0.07130921926683026,    0.08061260915108308,   -0.03802993693501441,
                -0.01657454163066688,   0.01255099855609984,   0.0004295779729213665,
                -0.0018016407040474908, 0.00035371379997452024};
      case 8:
        return {0.05441584224310401,    0.31287159091429995,    0.6756307362972898,
                0.5853546836542067,     -0.015829105256349306,  -0.2840155429615469,
                0.0004724845739132828,  0.12874742662047847,    -0.017369301001807547,
                -0.044088253930794755,  0.013981027917398282,   0.008746094047405777,
                -0.004870352993451574,  -0.00039174037337694705, 0.0006754494064505693,
                -0.00011747678412476953};
      case 9:
        return {0.038077947363878345,   0.24383467461259034,    0.6048231236901112,
                0.6572880780513005,     0.13319738582500756,    -0.2932737832791749,
                -0.09684078322297646,   0.14854074933810638,    0.03072568147933338,
                -0.06763282906132997,   0.00025094711483145197, 0.022361662123679096,
                -0.004723204757751397,  -0.00428150368246343,   0.0018476468830562265,
                0.00023038576352319597, -0.0002519631889427101, 3.93473203162716e-05};
      case 10:
        return {0.026670057900555554,  0.1881768000776915,     0.5272011889317256,
                0.6884590394536035,    0.2811723436605775,     -0.24984642432731538,
                -0.19594627437737705,  0.12736934033579325,    0.09305736460357235,
                -0.07139414716639708,  -0.029457536821875813,  0.033212674059341,
                0.0036065535669561697, -0.010733175483330575,  0.001395351747052901,
                0.001992405295185056,  -0.0006858566949597116, -0.00011646685512928545,
                9.358867032006959e-05, -1.3264202894521244e-05};
      default:
        detail::fail("WaveletFilter", "Daubechies order must be in 1..10, got " +
                                          std::to_string(order));
    }
  }

  WaveletFamily family_;
  int order_;
  std::vector<double> lowpass_;
  std::vector<double> highpass_;
};

}  // namespace wavinv

// Generated by generate_reference.py -- do not edit by hand.
// Reference values computed with mpmath (40+ significant digits).
#pragma once

namespace invosc_ref {

struct DensityRef { int n; double rho, e_tilde, value; };

inline constexpr DensityRef kDensity[] = {
  {0, 1.0, 0.0, 0.8346268416740732},
  {0, 1.0, 0.7, 0.2443116639161014},
  {0, 1.0, -0.7, 0.2443116639161014},
  {0, 1.0, 2.3, 0.010174995625440095},
  {0, 1.0, -2.3, 0.010174995625440095},
  {1, 1.0, 1.3, 0.15945414199354935},
  {2, 1.0, 0.5, 0.1937834924970186},
  {3, 1.0, 2.0, 0.18043331059615286},
  {4, 1.0, 1.0, 0.020898576590983618},
  {5, 1.0, 2.0, 0.05638540956129777},
  {8, 2.0, 3.0, 0.09332744626382981},
  {8, 0.5, -3.0, 0.09332744626382981},
  {8, 1.0, 6.5, 0.09076828186057981},
  {10, 0.5, -5.0, 0.043932941159911094},
  {10, 2.0, 5.0, 0.043932941159911094},
  {15, 2.0, 4.5, 0.0406928722155376},
  {12, 1.0, 10.0, 0.07084879739647867},
  {15, 1.0, 13.0, 0.05924915849501133},
  {6, 1.0, 26.0, 5.511435519186777e-12},
};

inline constexpr double kP0AtZeroRho1 = 0.8346268416740732;
inline constexpr double kGammaQuarter = 3.625609908221908;

}  // namespace invosc_ref

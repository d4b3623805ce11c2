// Copyright 2026 The cylwig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

// Sign and phase conventions used throughout the library. Everything below is
// the single source of truth; other modules import these definitions instead
// of restating them. The prose version lives in docs/CONVENTIONS.md.
//
//  * OAM ladder |l>, l in Z. Angle representation <phi|l> = e^{i l phi} / sqrt(2 pi),
//    so the angular momentum operator acts as -i d/dphi (hbar = 1).
//  * Ladder-lowering unitary E = e^{-i phihat}: E|l> = |l - 1>.
//  * Displacement D(l, phi) = e^{i alpha(l, phi)} E^{-l} e^{-i phi Lhat}, i.e.
//    <m|D(l, phi)|n> = e^{i alpha(l, phi)} e^{-i phi n} delta_{m, n+l}.
//  * Gauge choices for alpha, constrained by the pairing rule
//    alpha(l, phi) + alpha(-l, -phi) = -l phi, which is what makes
//    D^dagger(l, phi) = D(-l, -phi):
//      - Symmetric: alpha = -l phi / 2, satisfies the rule exactly.
//      - Zero: alpha = 0, carries the pairing defect l phi, so
//        D^dagger(l, phi) = e^{-i l phi} D(-l, -phi).
//  * Free rotor propagator U_t = exp(-i t Lhat^2 / 2); states evolve as
//    rho -> U_t rho U_t^dagger.
//  * Tomographic inversion, frozen against the forward coefficient map:
//      rho(l, phi) = e^{-i alpha(l, phi)} e^{-i l phi / 2}
//                    * fourier_coefficient(omega(., t = -phi / l), l),  l != 0,
//    with omega(., t) the angle density after evolving for time t. The extra
//    half-phase e^{-i l phi / 2} is the same half-odd harmonic that appears in
//    the phase-point kernel; without it the inversion lands on a gauge other
//    than the one the forward map used.

namespace cylwig {

enum class AlphaConvention { Zero, Symmetric };

inline double alpha_phase(AlphaConvention conv, int l, double phi) {
  return conv == AlphaConvention::Zero ? 0.0 : -0.5 * l * phi;
}

/// alpha(l, phi) + alpha(-l, -phi) + l*phi. Zero for the Symmetric gauge;
/// l*phi for the Zero gauge.
inline double alpha_pairing_defect(AlphaConvention conv, int l, double phi) {
  return alpha_phase(conv, l, phi) + alpha_phase(conv, -l, -phi) + l * phi;
}

inline std::string to_string(AlphaConvention conv) {
  return conv == AlphaConvention::Zero ? "zero" : "symmetric";
}

inline AlphaConvention alpha_convention_from_string(const std::string& name) {
  if (name == "zero") return AlphaConvention::Zero;
  if (name == "symmetric") return AlphaConvention::Symmetric;
  throw std::invalid_argument("unknown alpha convention: " + name);
}

}  // namespace cylwig

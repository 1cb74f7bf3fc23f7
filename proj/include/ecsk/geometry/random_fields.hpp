#pragma once
// Seeded random polynomial fields, used as randomized inputs for identity
// checks and for measuring fixed constants.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ecsk/geometry/fields.hpp"
#include "ecsk/geometry/lorentz.hpp"

namespace ecsk::geometry {

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

// Coordinates (x, y, z, t), each on [-1, 1].
Chart unit_box_chart();

// DSL text of a polynomial of total degree <= `degree` in the chart's
// coordinates, coefficients uniform in [-scale, scale].
std::string random_polynomial(std::mt19937_64& rng, const Chart& chart, int degree, double scale);

struct RandomFieldText {
  std::vector<std::string> tetrad;      // 16 entries, a * 4 + mu
  std::vector<std::string> connection;  // 24 entries, pair * 4 + mu
};

// Tetrad delta^a_mu plus a small quadratic perturbation (well conditioned on
// the unit box); connection a cubic polynomial per component.
RandomFieldText random_field_text(std::uint64_t seed, const Chart& chart, double tetrad_scale = 0.08,
                                  double connection_scale = 0.3);

TetradField random_tetrad(std::uint64_t seed, const Chart& chart);
SpinConnectionField random_connection(std::uint64_t seed, const Chart& chart);

// A form of the given shape (internally antisymmetric) with independent
// cubic polynomial components.
FormEvaluator random_form(std::uint64_t seed, const Chart& chart, int degree, int rank,
                          forms::Variance variance = forms::Variance::Upper, double scale = 0.5);

// Product of three rotations and three boosts whose parameters are bounded
// trigonometric functions of the coordinates.
LorentzField random_lorentz_field(std::uint64_t seed, const Chart& chart);

}  // namespace ecsk::geometry

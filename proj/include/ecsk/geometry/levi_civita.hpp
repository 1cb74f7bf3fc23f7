#pragma once

#include "ecsk/geometry/fields.hpp"

namespace ecsk::geometry {

// The torsion-free spin connection of a tetrad, from the 24 x 24 linear
// system theta^a_{mu nu} = 0 solved in jet arithmetic. The result has one
// jet order less than `e`.
MixedForm<Jet> levi_civita_at(const MixedForm<Jet>& e);

// Pointwise evaluator; a request for order K evaluates the tetrad at K + 1.
FormEvaluator levi_civita_connection(FormEvaluator tetrad);

}  // namespace ecsk::geometry

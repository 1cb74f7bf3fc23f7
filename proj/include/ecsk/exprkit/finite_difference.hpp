#pragma once

#include "ecsk/exprkit/expression.hpp"

namespace ecsk::exprkit {

// Central-difference estimate of every partial up to `order`, packed as a
// jet. A k-th partial uses the tensor-product stencil with spacing
// step * 10^(k-1), so each order sits near its own error optimum. Throws
// DomainError if any stencil point leaves the chart.
Jet finite_difference_oracle(const Expression& expr, const Point& x, int order, double step);

}  // namespace ecsk::exprkit

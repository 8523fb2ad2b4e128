#pragma once

#include <functional>

#include "painleve/precision.hpp"

namespace painleve {

struct QuadResult {
    Real value;
    Real error_estimate;
    int levels;
};

/// Tanh-sinh quadrature of f over the finite interval [a, b], refined until
/// the level-to-level difference drops below target_abs_err. Signals
/// PrecisionError if the target is not met within the level cap.
QuadResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const PrecisionContext& ctx, const Real& target_abs_err);

}  // namespace painleve

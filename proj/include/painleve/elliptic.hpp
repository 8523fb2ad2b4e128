#pragma once

#include "painleve/precision.hpp"

namespace painleve {

/// Elliptic modulus k in [0, 1] with the complementary modulus cached at
/// construction (k' computed once; avoids cancellation for k near 1).
struct Modulus {
    Real k;
    Real kprime;
};

Modulus make_modulus(const Real& k);

struct JacobiTriple {
    Real sn, cn, dn;
};

/// sn, cn, dn at argument u, modulus k, by the descending Landen (AGM)
/// transformation with backward amplitude recurrence. Degenerate moduli take
/// the closed trigonometric (k = 0) and hyperbolic (k = 1) forms.
JacobiTriple jacobi(const Real& u, const Modulus& k, const PrecisionContext& ctx);

/// Complete elliptic integral of the first kind, K(k) = pi / (2 AGM(1, k')).
/// k = 1 signals divergence (DomainError).
Real complete_K(const Modulus& k, const PrecisionContext& ctx);

}  // namespace painleve

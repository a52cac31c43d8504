// geometry.hpp - collective damping rate from the interatomic geometry

#pragma once

#include "phasespec/errors.hpp"

namespace phasespec {

struct AtomPairGeometry {
    double kr12{1.0};      // dimensionless separation k*r12, > 0
    double cos_theta{0.0}; // dipole orientation against the interatomic axis
};

// Gamma12/Gamma as a damped oscillatory function of the separation.
// Ranges over [-1, 1]; -> 1 as kr12 -> 0 and -> 0 as kr12 -> infinity.
double collective_damping(const AtomPairGeometry& geom);

} // namespace phasespec

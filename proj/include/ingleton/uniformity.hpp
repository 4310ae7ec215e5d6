#pragma once

#include "ingleton/distribution.hpp"

namespace ingleton::entropy {

/// Where a uniformity ratio is attained. For the mass ratio, `target` is the
/// sub-joint and `given` is empty; `high`/`low` are the atoms of X_target with
/// the largest and smallest mass. For the fiber ratio, `high`/`low` are atoms
/// of X_given whose fibers in X_{target} have the most and fewest points.
struct UniformityWitness {
    VarSet target;
    VarSet given;
    Tuple high;
    Tuple low;
    mpq_class ratio = 1;
};

struct UniformityReport {
    mpq_class delta_uniform = 1;  // max over sub-joints of max/min atom mass
    mpq_class delta_regular = 1;  // max over disjoint (I,J) of max/min fiber cardinality
    UniformityWitness uniform_witness;
    UniformityWitness regular_witness;

    /// Smallest delta for which the tuple is delta-uniform as a collection.
    mpq_class delta() const { return delta_uniform > delta_regular ? delta_uniform : delta_regular; }
};

/// Exact scan over all nonempty sub-joints and all ordered pairs of disjoint
/// nonempty index sets. Errors: ArityGuard (arity > 5).
UniformityReport uniformity_report(const JointDistribution& dist);

/// max/min atom mass of X_vars.
mpq_class mass_ratio(const JointDistribution& dist, VarSet vars);

}  // namespace ingleton::entropy

#pragma once

#include <optional>

#include "ingleton/distribution.hpp"

namespace ingleton::entropy {

/// Float slack used wherever entropic quantities are compared.
inline constexpr double kTolerance = 1e-9;

/// H(X_I | X_J) in bits, summed as sum p(i,j) log2(p(j)/p(i,j)) with
/// compensated summation. J may be empty.
/// Errors: EmptyIndexSet, OverlappingSets, IndexOutOfRange.
double entropy(const JointDistribution& dist, VarSet i, VarSet j = {});

/// I(X_I : X_J | X_K) = H(I|K) - H(I|JK). Returned unclamped.
double mutual_information(const JointDistribution& dist, VarSet i, VarSet j, VarSet k = {});

/// Zeroes information values within the tolerance of 0; for reporting only.
double clamp_reported(double value);

struct IngletonRoles {
    VarSet x, y, a, b;
};

/// Ing(X,Y,A,B | U) = I(X:Y|AU) + I(X:Y|BU) + I(A:B|U) - I(X:Y|U).
/// Errors: OverlappingSets when roles (and U) are not pairwise disjoint.
double ingleton(const JointDistribution& dist, const IngletonRoles& roles, VarSet u = {});

/// L(X,Y | Z) = (H(X|YZ) + H(Y|XZ)) / 2. Both defining forms are evaluated
/// and must agree to the tolerance (NumericalFailure otherwise).
double ell_metric(const JointDistribution& dist, VarSet x, VarSet y, VarSet z = {});

}  // namespace ingleton::entropy

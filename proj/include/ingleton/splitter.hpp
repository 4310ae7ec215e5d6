#pragma once

#include <span>
#include <vector>

#include "ingleton/distribution.hpp"

namespace ingleton::splitter {

/// A partition of the atoms of a distribution into quasi-uniform parts plus a
/// low-mass tail. Atom indices refer to `dist.atoms()` of the split input.
struct SplitResult {
    std::vector<std::vector<std::size_t>> parts;  // empty parts dropped
    std::vector<std::size_t> tail;
    /// i_j = first sorted position whose mass is <= 2^-j, for j = 0..k0.
    std::vector<std::size_t> level_indices;
    std::size_t k0 = 0;
    /// Dyadic level j that each part descends from.
    std::vector<std::size_t> part_levels;
    std::vector<mpq_class> part_weights;
    mpq_class tail_weight = 0;
    /// Max/min atom mass inside each part (single split), or the measured
    /// delta-uniformity of the conditioned tuple (tuple split).
    std::vector<mpq_class> achieved_delta;
    double source_entropy = 0.0;     // H of the flattened joint, bits
    double partition_entropy = 0.0;  // H(U) or H(V), tail included
};

/// Outcome of re-checking the single-split guarantees on a result.
struct SingleSplitAudit {
    bool is_partition = false;     // H(U|X) = 0
    bool small_tail = false;       // P[tail] * H(X) <= 1
    bool entropy_bound = false;    // H(U) <= 2 log2 H(X) + 1, when H(X) >= 2
    bool entropy_bound_applies = false;
    bool two_uniform = false;      // every part has mass ratio <= 2
    bool small_parts = false;      // |part| <= 2^(H(X)^2)

    bool passed() const { return is_partition && small_tail && entropy_bound && two_uniform && small_parts; }
};

/// Dyadic split of the (flattened) distribution: atoms sorted by descending
/// mass, ties by ascending atom index, cut at the thresholds 2^-j for
/// j < k0 = max(1, ceil(H^2)); everything at or below 2^-k0 is the tail.
/// The guarantees are audited before returning (TheoremViolation if not).
/// Errors: ZeroEntropyInput.
SplitResult split_single(const entropy::JointDistribution& dist);

SingleSplitAudit audit_single_split(const entropy::JointDistribution& dist, const SplitResult& split);

/// Partition of a multidimensional point set into parts that are each
/// d-regular: for all disjoint nonempty I, J the number of distinct
/// I-extensions of a J-projection varies by at most a factor d.
struct RegularPartition {
    std::vector<std::vector<std::size_t>> parts;  // indices into the input support
    std::vector<mpq_class> achieved_d;            // measured regularity of each part
    std::size_t pass_count = 0;                   // refinement steps taken
};

/// Iterative dyadic fiber bucketing: while some part has a pair (I,J) whose
/// fiber-size ratio exceeds d_target, split that part by floor(log2 fiber
/// size). Every returned part is audited.
/// Errors: DimensionGuard (dimension > 4), SizeGuard (|S| > 2^16),
/// InvalidArgument (d_target < 2, ragged or repeated points).
RegularPartition regularize(std::span<const entropy::Tuple> support, double d_target = 2.0);

/// Exact max fiber-size ratio of a point set (1 for a single point).
mpq_class measure_regularity(std::span<const entropy::Tuple> points);

struct TupleSplitAudit {
    bool small_tail = false;         // P[v_inf] * H <= 1
    bool parts_quasi_uniform = false;  // achieved delta <= 2 d_target on every part
    bool weights_sum_to_one = false;

    bool passed() const { return small_tail && parts_quasi_uniform && weights_sum_to_one; }
};

/// Single split of the flattened joint, then each non-tail part refined by
/// `regularize` on its support. Arity at most 4.
/// Errors: ZeroEntropyInput, DimensionGuard, SizeGuard.
SplitResult split_tuple(const entropy::JointDistribution& dist, double d_target = 2.0);

TupleSplitAudit audit_tuple_split(const entropy::JointDistribution& dist, const SplitResult& split,
                                  double d_target = 2.0);

}  // namespace ingleton::splitter

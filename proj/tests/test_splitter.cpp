#include "doctest.h"

#include <cmath>
#include <set>

#include "ingleton/entropy.hpp"
#include "ingleton/sampling.hpp"
#include "ingleton/splitter.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ingleton;
using namespace ingleton::splitter;
using entropy::JointDistribution;
using entropy::Tuple;

namespace {

JointDistribution from_masses(const std::vector<long>& weights, long total) {
    std::vector<entropy::Atom> atoms;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        mpq_class m(weights[i], total);
        m.canonicalize();
        atoms.push_back({{static_cast<entropy::Symbol>(i)}, m});
    }
    const std::size_t sizes[] = {weights.size()};
    return JointDistribution::with_sizes(sizes, std::move(atoms));
}

}  // namespace

TEST_CASE("worked example (0.4, 0.3, 0.2, 0.1)") {
    const auto d = from_masses({4, 3, 2, 1}, 10);
    const auto s = split_single(d);
    CHECK(s.k0 == 4);
    CHECK(s.parts == std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}});
    CHECK(s.part_weights == std::vector<mpq_class>{mpq_class(7, 10), mpq_class(1, 5), mpq_class(1, 10)});
    CHECK(s.tail.empty());
    CHECK(s.tail_weight == 0);
    CHECK(s.achieved_delta[0] == mpq_class(4, 3));
    CHECK(audit_single_split(d, s).passed());
}

TEST_CASE("split of a uniform distribution is a single part") {
    const auto d = from_masses(std::vector<long>(16, 1), 16);
    const auto s = split_single(d);
    REQUIRE(s.parts.size() == 1);
    CHECK(s.parts[0].size() == 16);
    CHECK(s.part_levels[0] == 4);
    CHECK(s.partition_entropy == doctest::Approx(0.0));
}

TEST_CASE("heavy tail goes to the tail part") {
    // masses 1/2, 1/4, ..., 2^-20, 2^-20
    std::vector<long> w;
    for (int i = 1; i <= 20; ++i) w.push_back(1L << (20 - i));
    w.push_back(1);
    const auto d = from_masses(w, 1L << 20);
    const auto s = split_single(d);
    CHECK(s.source_entropy == doctest::Approx(2.0 - std::ldexp(1.0, -19)).epsilon(1e-6));
    CHECK(s.k0 == 4);
    CHECK(s.tail.size() == w.size() - 3);
    CHECK(audit_single_split(d, s).passed());
}

TEST_CASE("point mass has no split") {
    const auto d = from_masses({1}, 1);
    CHECK(kind_of([&] { split_single(d); }) == ErrorKind::ZeroEntropyInput);
}

TEST_CASE("random single splits pass every assertion") {
    sampling::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto d = sampling::random_distribution(rng, 2, 30, 400, 1000);
        const auto s = split_single(d);
        CHECK(audit_single_split(d, s).passed());
        mpq_class total = s.tail_weight;
        for (const auto& w : s.part_weights) total += w;
        CHECK(total == 1);
    }
}

TEST_CASE("regularize: small example and guards") {
    const std::vector<Tuple> s{{0, 0}, {0, 1}, {1, 0}};
    const auto r = regularize(s, 2.0);
    CHECK(r.parts.size() <= 2);
    for (const auto& d : r.achieved_d) CHECK(d <= 2);
    CHECK(measure_regularity(s) == 2);

    const std::vector<Tuple> five{{0, 0, 0, 0, 0}};
    CHECK(kind_of([&] { regularize(five); }) == ErrorKind::DimensionGuard);
    CHECK(kind_of([&] { regularize(s, 1.5); }) == ErrorKind::InvalidArgument);
    const std::vector<Tuple> dup{{0, 0}, {0, 0}};
    CHECK(kind_of([&] { regularize(dup); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("regularize is within a factor 4 of the optimal part count") {
    sampling::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 12));
        std::set<std::pair<int, int>> pts;
        while (pts.size() < n) pts.insert({int(rng.below(5)), int(rng.below(5))});
        const std::vector<std::pair<int, int>> v(pts.begin(), pts.end());
        std::vector<Tuple> tuples;
        for (auto [a, b] : v) tuples.push_back({std::uint32_t(a), std::uint32_t(b)});
        const auto r = regularize(tuples, 2.0);
        const auto best = oracle::min_regular_parts(v, 2.0);
        CHECK(r.parts.size() <= 4 * best);
        CHECK(r.parts.size() <= tuples.size());
        // each part regular by the oracle's own count
        for (const auto& part : r.parts) {
            std::uint32_t mask = 0;
            for (auto k : part) mask |= 1u << k;
            CHECK(oracle::fiber_ratio_2d(v, mask, false) <= 2.0);
            CHECK(oracle::fiber_ratio_2d(v, mask, true) <= 2.0);
        }
    }
}

TEST_CASE("tuple split") {
    sampling::Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const auto d = sampling::random_distribution(rng, 4, 3, 64);
        const auto s = split_tuple(d);
        CHECK(audit_tuple_split(d, s).passed());
        std::vector<int> seen(d.atoms().size(), 0);
        for (const auto& p : s.parts) {
            for (auto i : p) ++seen[i];
        }
        for (auto i : s.tail) ++seen[i];
        for (int c : seen) CHECK(c == 1);
    }
}

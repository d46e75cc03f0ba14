#include "harmolight/monoid.hpp"

#include "harmolight/graphs.hpp"
#include "harmolight/survey.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace harmolight;

namespace {

MonoidProfile profile_of(const char* text) {
    return monoid_profile(harmonic_matrix(parse_graph(text)));
}

} // namespace

TEST_CASE("monoid profile on the reference graphs") {
    const auto empty = profile_of("n=3\n");
    CHECK(empty.tail_k == 1);
    CHECK(empty.period_m == 1);
    CHECK(empty.dim_T == 3);
    CHECK(empty.dim_L == 0);

    const auto k3 = profile_of("Bw");
    CHECK(k3.tail_k == 1);
    CHECK(k3.period_m == 1);
    CHECK(k3.dim_T == 1);
    CHECK(k3.dim_L == 2);

    const auto p3 = profile_of("Bg");
    CHECK(p3.tail_k == 1);
    CHECK(p3.period_m == 2);
    CHECK(p3.dim_T == 1);
    CHECK(p3.dim_L == 2);

    const auto k2 = profile_of("A_");
    CHECK(k2.tail_k == 2);
    CHECK(k2.period_m == 1);
    CHECK(k2.dim_T == 2);
    CHECK(k2.dim_L == 0);
}

TEST_CASE("projection on the reference graphs") {
    const BitMatrix ak2 = harmonic_matrix(parse_graph("A_"));
    CHECK(projection(ak2, monoid_profile(ak2)) == BitMatrix(2));

    const BitMatrix ak3 = harmonic_matrix(parse_graph("Bw"));
    CHECK(projection(ak3, monoid_profile(ak3)) == ak3);

    // An invertible matrix has an empty tail and the identity projection.
    BitMatrix inv(2);
    inv.set(0, 1, true);
    inv.set(1, 0, true);
    CHECK(projection(inv, monoid_profile(inv)) == BitMatrix::identity(2));
}

TEST_CASE("decompose splits dimensions") {
    const auto k2 = decompose(harmonic_matrix(parse_graph("A_")));
    CHECK(k2.dim_T == 2);
    CHECK(k2.dim_L == 0);
    CHECK(k2.loop_basis.empty());

    const auto k3 = decompose(harmonic_matrix(parse_graph("Bw")));
    CHECK(k3.dim_T == 1);
    CHECK(k3.dim_L == 2);

    const auto p3 = decompose(harmonic_matrix(parse_graph("Bg")));
    CHECK(p3.dim_T == 1);
    CHECK(p3.dim_L == 2);
    CHECK(p3.loop_basis.size() == 2);
}

TEST_CASE("projection properties over all graphs up to 5 vertices") {
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : GraphEnumeration(n)) {
            const BitMatrix a = harmonic_matrix(g);
            const auto profile = monoid_profile(a);
            const BitMatrix pi = projection(a, profile);

            REQUIRE(pi * pi == pi);
            REQUIRE(pi.is_symmetric());
            REQUIRE(profile.dim_T + profile.dim_L == static_cast<std::size_t>(n));
            REQUIRE(profile.dim_L % 2 == 0);
            REQUIRE(profile.period_m >= 1);

            // Same idempotent from the smallest exponent and from the
            // tail-times-period exponent.
            REQUIRE(pow(a, profile.tail_k * profile.period_m) == pi);

            // Nilpotent on Ker(pi): random kernel combinations die within
            // tail_k steps.
            const auto basis = kernel_basis(pi);
            REQUIRE(basis.size() == profile.dim_T);
            const BitMatrix a_tail = pow(a, profile.tail_k);
            for (int trial = 0; trial < 50; ++trial) {
                BitVector x(g.vertex_count());
                for (const auto& b : basis)
                    if (rng() & 1)
                        x ^= b;
                REQUIRE((a_tail * x).is_zero());
            }

            // Automorphism on Im(pi): the images of an L-basis stay independent.
            const auto loop_basis = column_space_basis(pi);
            REQUIRE(loop_basis.size() == profile.dim_L);
            std::vector<BitVector> images;
            images.reserve(loop_basis.size());
            for (const auto& b : loop_basis)
                images.push_back(a * b);
            REQUIRE(rank_of_rows(images) == profile.dim_L);
        }
    }
}

TEST_CASE("period search cap is enforced") {
    const BitMatrix a = harmonic_matrix(parse_graph("Bg")); // period 2
    CHECK_THROWS_AS(monoid_profile(a, 1), std::runtime_error);
    CHECK(monoid_profile(a, 2).period_m == 2);
}

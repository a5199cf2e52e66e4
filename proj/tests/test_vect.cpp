#include <random>

#include "catch_amalgamated.hpp"

#include "tqft/error.hpp"
#include "tqft/homology.hpp"
#include "tqft/vect.hpp"

using namespace tqft;

TEST_CASE("space_of signed point configurations")
{
    using enum Orientation;
    REQUIRE(space_of({Positive}, 2).dimension == 2);
    REQUIRE(space_of({}, 2).dimension == 1);
    REQUIRE(space_of({Positive, Negative}, 3).dimension == 9);
    REQUIRE_THROWS_AS(space_of({Positive}, 0), std::invalid_argument);
}

TEST_CASE("cup and cap")
{
    RationalMatrix expected(4, 1);
    expected << 1, 0, 0, 1;
    REQUIRE(cup(2) == expected);
    REQUIRE(cap(2) == expected.transpose());
    REQUIRE(cup(1) == RationalMatrix::Ones(1, 1));
    REQUIRE(cap(1) == RationalMatrix::Ones(1, 1));

    const auto c3 = cup(3);
    for (Eigen::Index i = 0; i < 9; ++i)
        REQUIRE(c3(i, 0) == ((i == 0 || i == 4 || i == 8) ? 1 : 0));
}

TEST_CASE("circle invariant equals the dimension")
{
    REQUIRE(circle_invariant(2) == 2);
    REQUIRE(circle_invariant(1) == 1);
    REQUIRE(circle_invariant(5) == 5);
    REQUIRE(circle_invariant<long long>(8) == 8);
}

TEST_CASE("circle invariant is multiplicative over disjoint circles")
{
    for (Eigen::Index n = 1; n <= 4; ++n) {
        RationalMatrix cups = cup(n);
        RationalMatrix caps = cap(n);
        Rational expected = n;
        for (int k = 2; k <= 3; ++k) {
            cups = tensor(cups, cup(n));
            caps = tensor(caps, cap(n));
            expected *= n;
            REQUIRE((caps * cups)(0, 0) == expected);
        }
    }
}

TEST_CASE("snake identity")
{
    for (Eigen::Index n = 1; n <= 8; ++n)
        REQUIRE(snake(n) == RationalMatrix::Identity(n, n));
}

TEST_CASE("trace closure")
{
    REQUIRE(trace_closure(RationalMatrix::Identity(4, 4)) == 4);
    using enum Orientation;
    const auto v = space_of({Positive, Negative, Positive}, 3);
    REQUIRE(trace_closure(RationalMatrix::Identity(v.dimension, v.dimension)) == 27);

    // cup o cap on n = 2 has a one wherever both indices lie in {0, 3}.
    const RationalMatrix z = cup(2) * cap(2);
    RationalMatrix expected = RationalMatrix::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1;
    REQUIRE(z == expected);
    REQUIRE(trace_closure(z) == 2);

    try {
        trace_closure(cup(2));
        FAIL("expected an exception");
    }
    catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NotSquare);
    }
}

TEST_CASE("surjective idempotents are the identity")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-4, 4);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + trial % 5;
        RationalMatrix a(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                a(i, j) = entry(rng);
        if (exact_rank<Rational>(a) != n)
            continue;
        // a * D * a^-1 with D a 0/1 diagonal is idempotent; full rank only when D = I.
        RationalMatrix d = RationalMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            d(i, i) = (trial + i) % 3 == 0 ? 0 : 1;
        const RationalMatrix p = a * d * a.inverse();
        REQUIRE(p * p == p);
        if (is_surjective_idempotent(p)) {
            REQUIRE(p == RationalMatrix::Identity(n, n));
            ++checked;
        }
        else {
            REQUIRE(exact_rank<Rational>(p) < n);
        }
        REQUIRE(is_surjective_idempotent<Rational>(RationalMatrix::Identity(n, n)));
    }
    REQUIRE(checked > 0);
}

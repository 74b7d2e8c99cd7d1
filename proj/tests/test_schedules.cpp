#include <doctest.h>

#include <cmath>

#include "lamstat/schedules.hpp"

using namespace lamstat;

TEST_CASE("validate_lambda accepts the identity ramp") {
    const auto s = LambdaSchedule::validate({1, 2, 3, 4, 5}, "ramp");
    CHECK(s.size() == 5);
    CHECK(s.lambda(3) == 3.0);
    CHECK(s.name() == "ramp");
}

TEST_CASE("validate_lambda accepts flat steps") {
    const auto s = LambdaSchedule::validate({1, 1, 2, 2, 3, 3});
    CHECK(s.size() == 6);
    CHECK(s.lambda(6) == 3.0);
}

TEST_CASE("validate_lambda rejects bad inputs") {
    SUBCASE("jump larger than one") {
        try {
            LambdaSchedule::validate({1, 3, 4});
            FAIL("expected JumpTooBig");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::JumpTooBig);
            CHECK(e.index() == 1);
        }
    }
    SUBCASE("first not one") {
        try {
            LambdaSchedule::validate({2, 3});
            FAIL("expected FirstNotOne");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::FirstNotOne);
        }
    }
    SUBCASE("decreasing") {
        try {
            LambdaSchedule::validate({1, 0.5});
            FAIL("expected Decreasing");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Decreasing);
            CHECK(e.index() == 1);
        }
    }
    SUBCASE("non-positive entry") {
        try {
            LambdaSchedule::validate({1, 1, -1});
            FAIL("expected NonPositive");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPositive);
            CHECK(e.index() == 3);
        }
    }
    CHECK_THROWS_AS(LambdaSchedule::validate({}), Error);
}

TEST_CASE("window follows I_n = [n - lambda_n + 1, n]") {
    const auto identity = LambdaSchedule::identity(10);
    CHECK(identity.window(7).lo == 1);
    CHECK(identity.window(7).hi == 7);
    CHECK(identity.window(1).lo == 1);
    CHECK(identity.window(1).hi == 1);

    const auto flat = LambdaSchedule::validate({1, 1, 2, 2});
    CHECK(flat.window(4).lo == 3);
    CHECK(flat.window(4).hi == 4);

    // real-valued lambda: smallest integer above n - lambda_n + 1
    const auto real = LambdaSchedule::validate({1, 1.5, 2, 2.5});
    CHECK(real.window(2).lo == 2);
    CHECK(real.window(2).hi == 2);
    CHECK(real.window(4).lo == 3); // ceil(4 - 2.5 + 1) = 3

    CHECK_THROWS_AS(identity.window(11), Error);
    CHECK_THROWS_AS(identity.window(0), Error);
}

TEST_CASE("window counts stay within the lambda bound for all built-ins") {
    for (const char* id : {"identity", "floor-sqrt", "log2"}) {
        const auto s = LambdaSchedule::built_in(id, 200);
        for (std::size_t n = 1; n <= 200; ++n) {
            const IndexWindow w = s.window(n);
            const double lam = s.lambda(n);
            CHECK(w.lo >= 1);
            CHECK(w.lo <= w.hi);
            CHECK(w.hi == n);
            CHECK(w.count() >= 1);
            CHECK(static_cast<double>(w.count()) <= std::ceil(lam));
            // every member k satisfies n - lambda_n + 1 <= k <= n, and lo is smallest
            CHECK(static_cast<double>(w.lo) >= static_cast<double>(n) - lam + 1.0);
            if (w.lo > 1) {
                CHECK(static_cast<double>(w.lo - 1) < static_cast<double>(n) - lam + 1.0);
            }
        }
    }
}

TEST_CASE("identity schedule windows cover the full prefix") {
    const auto s = LambdaSchedule::identity(64);
    for (std::size_t n = 1; n <= 64; ++n) {
        CHECK(s.window(n).lo == 1);
        CHECK(s.window(n).hi == n);
    }
}

TEST_CASE("re-validation is idempotent") {
    const auto s = LambdaSchedule::built_in("floor-sqrt", 120);
    const auto again = LambdaSchedule::validate(s.values(), s.name());
    CHECK(again.values() == s.values());
    CHECK(again.growth_warning() == s.growth_warning());
    CHECK(again.name() == s.name());
}

TEST_CASE("growth warning flags flat schedules, not the built-ins") {
    std::vector<double> flat(50, 1.0);
    const auto s = LambdaSchedule::validate(std::move(flat), "flat");
    CHECK(s.growth_warning());

    CHECK_FALSE(LambdaSchedule::identity(50).growth_warning());
    CHECK_FALSE(LambdaSchedule::built_in("floor-sqrt", 50).growth_warning());
    CHECK_FALSE(LambdaSchedule::built_in("log2", 50).growth_warning());
}

TEST_CASE("built_in rejects unknown ids") {
    CHECK_THROWS_AS(LambdaSchedule::built_in("cubic", 10), Error);
}

TEST_CASE("validate_lacunary computes lengths, ratios and the regular flag") {
    const auto s = LacunarySchedule::validate({0, 2, 4, 8, 16});
    CHECK(s.window_count() == 4);
    CHECK(s.length(1) == 2);
    CHECK(s.length(3) == 4);
    CHECK(s.length(4) == 8);
    CHECK(s.ratio(2) == 2.0);
    CHECK(s.ratio(4) == 2.0);
    CHECK(s.regular_flag());
    CHECK(s.max_index() == 16);

    CHECK(s.window(1).lo == 1);
    CHECK(s.window(1).hi == 2);
    CHECK(s.window(4).lo == 9);
    CHECK(s.window(4).hi == 16);
}

TEST_CASE("regular flag follows the min observed ratio against the margin") {
    // consecutive-integer cuts: min q_r = R/(R-1), approaching 1
    std::vector<std::size_t> ramp;
    for (std::size_t k = 0; k <= 12; ++k) ramp.push_back(k);

    const auto strict = LacunarySchedule::validate(ramp, 0.0);
    CHECK(strict.regular_flag()); // 12/11 > 1

    const auto margined = LacunarySchedule::validate(ramp, 0.1);
    CHECK_FALSE(margined.regular_flag()); // 12/11 < 1.1
    CHECK(margined.regularity_margin() == 0.1);
}

TEST_CASE("validate_lacunary rejects bad cut lists") {
    try {
        LacunarySchedule::validate({0, 3, 2});
        FAIL("expected NotIncreasing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIncreasing);
        CHECK(e.index() == 2);
    }
    try {
        LacunarySchedule::validate({1, 2, 3});
        FAIL("expected FirstNotZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FirstNotZero);
    }
    CHECK_THROWS_AS(LacunarySchedule::validate({}), Error);
    CHECK_THROWS_AS(LacunarySchedule::validate({0}), Error);
}

TEST_CASE("doubling builds powers-of-two cuts") {
    const auto s = LacunarySchedule::doubling(4);
    CHECK(s.cuts() == std::vector<std::size_t>{0, 2, 4, 8, 16});
}

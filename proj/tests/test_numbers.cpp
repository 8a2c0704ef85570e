#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raney/numbers.hpp"

#include <set>
#include <stdexcept>

using namespace raney;

TEST_CASE("binomial basics") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(48, 8) == 377348994);
}

TEST_CASE("binomial stays exact past 64 bits") {
    CHECK(binomial(100, 50) == ExactNat("100891344545564193334812497256"));
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("raney closed form anchor values") {
    CHECK(raney_closed(4, 2, 1) == 2);
    CHECK(raney_closed(4, 1, 1) == 1);
    CHECK(raney_closed(2, 1, 3) == 5);  // cross-checked by coral enumeration
    for (std::uint32_t p = 1; p <= 5; ++p) {
        for (std::uint32_t r = 1; r <= 5; ++r) {
            CHECK(raney_closed(p, r, 0) == 1);
        }
    }
    CHECK_THROWS_AS(raney_closed(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(raney_closed(1, 0, 1), std::invalid_argument);
}

TEST_CASE("second closed form") {
    CHECK(raney_closed_alt(4, 2, 1) == 2);
    CHECK(raney_closed_alt(2, 2, 2) == 5);
    CHECK(raney_closed_alt(1, 1, 5) == 1);
    CHECK_THROWS_AS(raney_closed_alt(2, 2, 0), std::invalid_argument);
    for (std::uint32_t p = 1; p <= 5; ++p) {
        for (std::uint32_t r = 1; r <= 5; ++r) {
            for (std::uint32_t k = 1; k <= 8; ++k) {
                CHECK(raney_closed_alt(p, r, k) == raney_closed(p, r, k));
            }
        }
    }
}

TEST_CASE("p-Catalan numbers") {
    CHECK(p_catalan(2, 3) == 5);
    CHECK(p_catalan(4, 1) == 1);
    CHECK(p_catalan(3, 3) == 12);
    for (std::uint32_t p = 1; p <= 5; ++p) {
        CHECK(p_catalan(p, 0) == 1);
        for (std::uint32_t k = 0; k <= 8; ++k) {
            CHECK(p_catalan(p, k) == raney_closed(p, 1, k));
        }
    }
}

TEST_CASE("composition sum route") {
    CHECK(raney_composition_sum(2, 2, 2) == 5);  // C(2,2) + C(2,1)*C(2,1)
    CHECK(raney_composition_sum(4, 2, 1) == 2);
    for (std::uint32_t p = 1; p <= 4; ++p) {
        for (std::uint32_t r = 1; r <= 4; ++r) {
            CHECK(raney_composition_sum(p, r, 0) == 1);
        }
    }
}

TEST_CASE("convolution route") {
    CHECK(raney_convolution(2, 2, 2) == 5);  // 2 + 1 + 2
    CHECK(raney_convolution(1, 3, 2) == 6);
    for (std::uint32_t p = 1; p <= 4; ++p) {
        for (std::uint32_t k = 0; k <= 8; ++k) {
            CHECK(raney_convolution(p, 1, k) == p_catalan(p, k));
        }
    }
}

TEST_CASE("all four routes agree") {
    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t r = 1; r <= 3; ++r) {
            for (std::uint32_t k = 0; k <= 6; ++k) {
                const ExactNat closed = raney_closed(p, r, k);
                CHECK(closed == raney_composition_sum(p, r, k));
                CHECK(closed == raney_convolution(p, r, k));
                if (k >= 1) {
                    CHECK(closed == raney_closed_alt(p, r, k));
                }
            }
        }
    }
}

TEST_CASE("Catalan specialization satisfies the recurrence") {
    for (std::uint32_t n = 0; n <= 12; ++n) {
        ExactNat sum = 0;
        for (std::uint32_t i = 0; i <= n; ++i) {
            sum += raney_closed(2, 1, i) * raney_closed(2, 1, n - i);
        }
        CHECK(sum == raney_closed(2, 1, n + 1));
    }
}

TEST_CASE("weak composition closed form") {
    for (std::uint32_t r = 1; r <= 6; ++r) {
        for (std::uint32_t k = 0; k <= 10; ++k) {
            CHECK(raney_closed(1, r, k) == binomial(std::uint64_t{k} + r - 1, k));
        }
    }
}

TEST_CASE("composition stream") {
    const auto two = compositions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].parts == std::vector<std::uint32_t>{1, 1});
    CHECK(two[1].parts == std::vector<std::uint32_t>{2});

    const auto zero = compositions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].parts.empty());

    CHECK(compositions(4).size() == 8);

    for (std::uint32_t k = 1; k <= 10; ++k) {
        const auto all = compositions(k);
        CHECK(all.size() == (std::size_t{1} << (k - 1)));
        std::set<std::vector<std::uint32_t>> seen;
        for (const Composition& c : all) {
            CHECK(c.total() == k);
            CHECK(seen.insert(c.parts).second);
        }
    }
}

TEST_CASE("weak composition stream") {
    const auto two_two = weak_compositions(2, 2);
    REQUIRE(two_two.size() == 3);
    CHECK(two_two[0].parts == std::vector<std::uint32_t>{0, 2});
    CHECK(two_two[1].parts == std::vector<std::uint32_t>{1, 1});
    CHECK(two_two[2].parts == std::vector<std::uint32_t>{2, 0});

    const auto zero = weak_compositions(0, 3);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].parts == std::vector<std::uint32_t>{0, 0, 0});

    CHECK(weak_compositions(3, 3).size() == 10);
    CHECK_THROWS_AS(weak_compositions(2, 0), std::invalid_argument);

    for (std::uint32_t r = 1; r <= 5; ++r) {
        for (std::uint32_t k = 0; k <= 8; ++k) {
            const auto all = weak_compositions(k, r);
            CHECK(ExactNat(all.size()) ==
                  binomial(std::uint64_t{k} + r - 1,
                           static_cast<std::int64_t>(r) - 1));
            std::set<std::vector<std::uint32_t>> seen;
            for (const WeakComposition& c : all) {
                CHECK(c.parts.size() == r);
                CHECK(c.total() == k);
                CHECK(seen.insert(c.parts).second);
            }
        }
    }
}

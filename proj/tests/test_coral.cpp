#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raney/coral.hpp"
#include "raney/error.hpp"

#include <map>
#include <set>
#include <thread>

using namespace raney;

namespace {

std::vector<CanonicalCode> codes_of(const std::vector<CoralDiagram>& diagrams) {
    std::vector<CanonicalCode> out;
    for (const CoralDiagram& d : diagrams) {
        out.push_back(d.code);
    }
    return out;
}

}  // namespace

TEST_CASE("k = 0 yields exactly the bare base") {
    for (const auto& family :
         {enumerate_coral_tiered(2, 2, 0), enumerate_coral_tuple(2, 2, 0)}) {
        REQUIRE(family.size() == 1);
        CHECK(family[0].code == CanonicalCode{3, 0, 0, 0});
        CHECK(is_valid_coral(family[0]));
    }
}

TEST_CASE("one star lands on either eligible base edge") {
    const auto family = enumerate_coral_tuple(2, 2, 1);
    REQUIRE(family.size() == 2);
    CHECK(family[0].code == CanonicalCode{3, 0, 0, 2, 0, 0});
    CHECK(family[1].code == CanonicalCode{3, 0, 2, 0, 0, 0});
}

TEST_CASE("the five (2,2) diagrams with two stars") {
    const std::vector<CanonicalCode> expected{
        {3, 0, 0, 2, 0, 2, 0, 0},
        {3, 0, 0, 2, 2, 0, 0, 0},
        {3, 0, 2, 0, 0, 2, 0, 0},
        {3, 0, 2, 0, 2, 0, 0, 0},
        {3, 0, 2, 2, 0, 0, 0, 0},
    };
    CHECK(codes_of(enumerate_coral_tuple(2, 2, 2)) == expected);
    CHECK(codes_of(enumerate_coral_tiered(2, 2, 2)) == expected);
}

TEST_CASE("three stars give 14 diagrams including the worked example") {
    const auto family = enumerate_coral_tiered(2, 2, 3);
    CHECK(family.size() == 14);
    const CanonicalCode worked{3, 0, 2, 0, 2, 0, 0, 2, 0, 0};
    bool found = false;
    for (const CoralDiagram& d : family) {
        found = found || d.code == worked;
    }
    CHECK(found);
}

TEST_CASE("paper-scale anchor: two (4,2) diagrams with one star") {
    CHECK(enumerate_coral_tuple(4, 2, 1).size() == 2);
    CHECK(enumerate_coral_tiered(4, 2, 1).size() == 2);
    CHECK(count_coral(4, 2, 1) == 2);
}

TEST_CASE("both routes agree and match the closed form") {
    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t r = 1; r <= 3; ++r) {
            for (std::uint32_t k = 0; k <= 4; ++k) {
                const auto tiered = enumerate_coral_tiered(p, r, k);
                const auto tuple = enumerate_coral_tuple(p, r, k);
                CHECK(codes_of(tiered) == codes_of(tuple));
                CHECK(ExactNat(tiered.size()) == raney_closed(p, r, k));
                for (const CoralDiagram& d : tiered) {
                    CHECK(is_valid_coral(d));
                    CHECK(d.tree().leaf_count() ==
                          std::size_t{r} + 1 + std::size_t{k} * (p - 1));
                }
            }
        }
    }
}

TEST_CASE("tier profile counts reproduce the composition summands") {
    // For (2,2,3): profiles (1,1,1) -> 8, (1,2) -> 2, (2,1) -> 4, (3) -> 0.
    std::map<std::vector<std::uint32_t>, std::size_t> by_tier;
    for_each_coral_tiered(2, 2, 3,
                          [&](const Composition& tiers, const CoralDiagram&) {
                              ++by_tier[tiers.parts];
                          });
    CHECK(by_tier[{1, 1, 1}] == 8);
    CHECK(by_tier[{1, 2}] == 2);
    CHECK(by_tier[{2, 1}] == 4);
    CHECK(by_tier.count({3}) == 0);
    std::size_t total = 0;
    for (const auto& [parts, count] : by_tier) {
        total += count;
    }
    CHECK(total == 14);
}

TEST_CASE("edge subdivision maps (p,p,k) onto (p,1,k+1)") {
    // Bare (2,2) base -> the unique (2,1) diagram with one star.
    const CoralDiagram bare{2, 2, 0, {3, 0, 0, 0}};
    const CoralDiagram mapped = subdivide_leftmost_edge(bare);
    CHECK(mapped.p == 2);
    CHECK(mapped.r == 1);
    CHECK(mapped.k == 1);
    CHECK(mapped.code == CanonicalCode{2, 0, 2, 0, 0});
    CHECK(is_valid_coral(mapped));
    const auto singleton = enumerate_coral_tuple(2, 1, 1);
    REQUIRE(singleton.size() == 1);
    CHECK(singleton[0].code == mapped.code);

    for (std::uint32_t p = 1; p <= 3; ++p) {
        for (std::uint32_t k = 0; k <= 3; ++k) {
            std::set<CanonicalCode> image;
            for (const CoralDiagram& d : enumerate_coral_tuple(p, p, k)) {
                CHECK(image.insert(subdivide_leftmost_edge(d).code).second);
            }
            std::set<CanonicalCode> target;
            for (const CoralDiagram& d : enumerate_coral_tuple(p, 1, k + 1)) {
                target.insert(d.code);
            }
            CHECK(image == target);
        }
    }

    const CoralDiagram mismatched{2, 3, 0, {4, 0, 0, 0, 0}};
    CHECK_THROWS_AS(subdivide_leftmost_edge(mismatched),
                    ParameterMismatchError);
}

TEST_CASE("chain read-off is the weak composition") {
    const CoralDiagram bare{1, 3, 0, {4, 0, 0, 0, 0}};
    CHECK(chain_weak_composition(bare).parts ==
          std::vector<std::uint32_t>{0, 0, 0});

    // Chains of lengths 1, 0, 1.
    const CoralDiagram two_chains{1, 3, 2, {4, 0, 1, 0, 0, 1, 0}};
    REQUIRE(is_valid_coral(two_chains));
    CHECK(chain_weak_composition(two_chains).parts ==
          std::vector<std::uint32_t>{1, 0, 1});

    // The six (1,3) diagrams with two stars hit each weak composition once.
    std::set<std::vector<std::uint32_t>> image;
    for (const CoralDiagram& d : enumerate_coral_tuple(1, 3, 2)) {
        CHECK(image.insert(chain_weak_composition(d).parts).second);
    }
    std::set<std::vector<std::uint32_t>> target;
    for (const WeakComposition& w : weak_compositions(2, 3)) {
        target.insert(w.parts);
    }
    CHECK(image == target);

    const CoralDiagram wrong_p{2, 2, 0, {3, 0, 0, 0}};
    CHECK_THROWS_AS(chain_weak_composition(wrong_p), ParameterMismatchError);
}

TEST_CASE("record lines round trip") {
    for (const CoralDiagram& d : enumerate_coral_tuple(2, 2, 2)) {
        const std::string line = record_line(d);
        CHECK(coral_from_record(line) == d);
        CHECK(record_line(coral_from_record(line)) == line);
    }
    CHECK(record_line(CoralDiagram{2, 2, 0, {3, 0, 0, 0}}) == "2 2 0 3,0,0,0");
    CHECK_THROWS_AS(coral_from_record("2 2"), MalformedCodeError);
    CHECK_THROWS_AS(coral_from_record("2 2 0 3,0,0,0 junk"),
                    MalformedCodeError);
    // Structurally valid tree, but the reserved leftmost edge grew a star.
    CHECK_THROWS_AS(coral_from_record("2 2 1 3,2,0,0,0,0"),
                    MalformedCodeError);
}

TEST_CASE("enumeration is safe from concurrent threads") {
    const auto reference = enumerate_coral_tuple(2, 2, 4);
    std::vector<std::thread> workers;
    std::vector<std::vector<CoralDiagram>> results(4);
    for (std::size_t i = 0; i < results.size(); ++i) {
        workers.emplace_back([&results, i] {
            results[i] = i % 2 == 0 ? enumerate_coral_tuple(2, 2, 4)
                                    : enumerate_coral_tiered(2, 2, 4);
        });
    }
    for (std::thread& worker : workers) {
        worker.join();
    }
    for (const auto& result : results) {
        CHECK(codes_of(result) == codes_of(reference));
    }
}

TEST_CASE("coral validation rejects malformed diagrams") {
    CHECK(!is_valid_coral(CoralDiagram{2, 2, 0, {2, 0, 0}}));   // root arity
    CHECK(!is_valid_coral(CoralDiagram{2, 2, 1, {3, 2, 0, 0, 0, 0}}));
    CHECK(is_valid_coral(CoralDiagram{2, 2, 1, {3, 0, 0, 2, 0, 0}}));
    CHECK(!is_valid_coral(CoralDiagram{2, 2, 2, {3, 0, 0, 2, 0, 0}}));  // k
    CHECK(!is_valid_coral(CoralDiagram{2, 2, 1, {3, 0, 0, 3, 0, 0, 0}}));
}

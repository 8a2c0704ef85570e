// Exercises the shared library strictly through the C API surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raney.h"

#include <string>
#include <vector>

namespace {

std::string take(char* value) {
    REQUIRE(value != nullptr);
    std::string out = value;
    raney_string_free(value);
    return out;
}

}  // namespace

TEST_CASE("version and error strings are always available") {
    CHECK(std::string(raney_version()).rfind("raney ", 0) == 0);
    CHECK(raney_last_error() != nullptr);
}

TEST_CASE("numbers come back as decimal strings") {
    char* out = nullptr;
    REQUIRE(raney_binomial(6, 2, &out) == RANEY_OK);
    CHECK(take(out) == "15");

    REQUIRE(raney_number(4, 2, 1, &out) == RANEY_OK);
    CHECK(take(out) == "2");
    REQUIRE(raney_number(4, 2, 4, &out) == RANEY_OK);
    CHECK(take(out) == "340");

    REQUIRE(raney_number_alt(2, 2, 2, &out) == RANEY_OK);
    CHECK(take(out) == "5");

    REQUIRE(raney_p_catalan(2, 3, &out) == RANEY_OK);
    CHECK(take(out) == "5");

    REQUIRE(raney_number_composition_sum(2, 2, 2, &out) == RANEY_OK);
    CHECK(take(out) == "5");

    REQUIRE(raney_number_convolution(1, 3, 2, &out) == RANEY_OK);
    CHECK(take(out) == "6");

    REQUIRE(raney_binomial(100, 50, &out) == RANEY_OK);
    CHECK(take(out) == "100891344545564193334812497256");
}

TEST_CASE("argument errors are reported, not thrown") {
    char* out = nullptr;
    CHECK(raney_number(0, 1, 1, &out) == RANEY_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(raney_last_error()).find("p") != std::string::npos);
    CHECK(raney_number_alt(2, 2, 0, &out) == RANEY_ERROR_INVALID_ARGUMENT);
    CHECK(raney_number(2, 1, 1, nullptr) == RANEY_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("coral enumeration handle") {
    raney_corals* corals = nullptr;
    REQUIRE(raney_corals_enumerate(2, 2, 2, 1000000, RANEY_CORAL_TUPLE,
                                   &corals) == RANEY_OK);
    REQUIRE(corals != nullptr);
    CHECK(raney_corals_count(corals) == 5);

    const std::vector<std::string> expected = {
        "2 2 2 3,0,0,2,0,2,0,0", "2 2 2 3,0,0,2,2,0,0,0",
        "2 2 2 3,0,2,0,0,2,0,0", "2 2 2 3,0,2,0,2,0,0,0",
        "2 2 2 3,0,2,2,0,0,0,0"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        char* line = nullptr;
        REQUIRE(raney_corals_record(corals, i, &line) == RANEY_OK);
        CHECK(take(line) == expected[i]);
    }

    char* dot = nullptr;
    REQUIRE(raney_corals_dot(corals, 0, &dot) == RANEY_OK);
    CHECK(take(dot).find("graph coral") == 0);

    char* line = nullptr;
    CHECK(raney_corals_record(corals, 99, &line) ==
          RANEY_ERROR_INVALID_ARGUMENT);
    raney_corals_free(corals);

    // Both methods agree record for record.
    raney_corals* tiered = nullptr;
    REQUIRE(raney_corals_enumerate(2, 2, 2, 1000000, RANEY_CORAL_TIERED,
                                   &tiered) == RANEY_OK);
    CHECK(raney_corals_count(tiered) == 5);
    raney_corals_free(tiered);
}

TEST_CASE("size cap refuses large enumerations") {
    raney_corals* corals = nullptr;
    CHECK(raney_corals_enumerate(2, 2, 12, 1000, RANEY_CORAL_TUPLE, &corals) ==
          RANEY_ERROR_SIZE_LIMIT);
    CHECK(std::string(raney_last_error()).find("742900") != std::string::npos);

    char* out = nullptr;
    CHECK(raney_count_coral(2, 2, 12, 1000, &out) == RANEY_ERROR_SIZE_LIMIT);
    REQUIRE(raney_count_coral(2, 2, 3, 1000, &out) == RANEY_OK);
    CHECK(take(out) == "14");
}

TEST_CASE("coral bijections over the C surface") {
    char* out = nullptr;
    REQUIRE(raney_coral_subdivide(2, "3,0,0,0", &out) == RANEY_OK);
    CHECK(take(out) == "2,0,2,0,0");

    REQUIRE(raney_coral_chain_parts(3, "4,0,1,0,0,1,0", &out) == RANEY_OK);
    CHECK(take(out) == "1,0,1");

    CHECK(raney_coral_subdivide(2, "2,0,0", &out) ==
          RANEY_ERROR_MALFORMED_CODE);
    CHECK(raney_coral_subdivide(2, "3,0", &out) == RANEY_ERROR_MALFORMED_CODE);
    CHECK(raney_coral_chain_parts(3, "3,0,0,0", &out) ==
          RANEY_ERROR_MALFORMED_CODE);
}

TEST_CASE("web enumeration handles") {
    raney_webs* webs = nullptr;
    REQUIRE(raney_webs_sourcesink(2, 1, 1000000, &webs) == RANEY_OK);
    CHECK(raney_webs_count(webs) == 2);
    char* line = nullptr;
    REQUIRE(raney_webs_record(webs, 0, &line) == RANEY_OK);
    CHECK(take(line) == "4 2 1 3,0,0,2,2,0,0,2,0,0 ++++++ -+++-++-++");
    char* dot = nullptr;
    REQUIRE(raney_webs_dot(webs, 0, &dot) == RANEY_OK);
    CHECK(take(dot).find("digraph web") == 0);
    raney_webs_free(webs);

    raney_webs* minus = nullptr;
    REQUIRE(raney_webs_minus(1, 1000000, &minus) == RANEY_OK);
    CHECK(raney_webs_count(minus) == 1);
    REQUIRE(raney_webs_record(minus, 0, &line) == RANEY_OK);
    CHECK(take(line) == "4 1 1 3,0,2,0,0,2,0,0 -++++ +--++-++");
    raney_webs_free(minus);

    CHECK(raney_webs_sourcesink(1, 1, 1000000, &webs) ==
          RANEY_ERROR_INVALID_ARGUMENT);
    CHECK(raney_webs_minus(3, 100, &minus) == RANEY_ERROR_SIZE_LIMIT);
}

TEST_CASE("orientation over the C surface") {
    int matched = -1;
    char* classes = nullptr;
    REQUIRE(raney_orient_with_word("3,0,0,0", "+++", &matched, &classes) ==
            RANEY_OK);
    CHECK(matched == 1);
    CHECK(take(classes) == "-+++");

    matched = -1;
    REQUIRE(raney_orient_with_word("3,0,0,0", "++-", &matched, &classes) ==
            RANEY_OK);
    CHECK(matched == 0);

    CHECK(raney_orient_with_word("3,0", "++", &matched, &classes) ==
          RANEY_ERROR_MALFORMED_CODE);
    CHECK(raney_orient_with_word("3,0,0,0", "++", &matched, &classes) ==
          RANEY_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("filter count over the C surface") {
    char* out = nullptr;
    REQUIRE(raney_sourcesink_filter_count(2, 1, 1000000, &out) == RANEY_OK);
    CHECK(take(out) == "2");
    CHECK(raney_sourcesink_filter_count(2, 4, 1000, &out) ==
          RANEY_ERROR_SIZE_LIMIT);
}

TEST_CASE("verification through the C surface") {
    char* report = nullptr;
    int all_passed = 0;
    // Small identity ranges and a low cap: the heavy filter checks skip,
    // everything else must pass.
    REQUIRE(raney_verify(3, 3, 4, 20000, &report, &all_passed) == RANEY_OK);
    const std::string text = take(report);
    CHECK(all_passed == 1);
    CHECK(text.find("PASS raney-identities") != std::string::npos);
    CHECK(text.find("PASS sourcesink-oracle-agreement") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("suites passed") != std::string::npos);

    CHECK(raney_verify(0, 1, 1, 1000, &report, &all_passed) ==
          RANEY_ERROR_INVALID_ARGUMENT);
}

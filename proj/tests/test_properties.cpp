#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

TEST_CASE("property suite over 500 random ideals") {
    const auto t = props::run_suite();
    REQUIRE(t.ideals == 500);
    for (const auto& f : t.failures) UNSCOPED_INFO(f);
    for (int f = 0; f < props::kFamilies; ++f) {
        INFO(props::kFamilyNames[static_cast<std::size_t>(f)]);
        CHECK(t.checks[static_cast<std::size_t>(f)] > 0);
        CHECK(t.violations[static_cast<std::size_t>(f)] == 0);
    }
}

TEST_CASE("denser and sparser ideals keep the theorem relations") {
    props::Tally t;
    props::Checker c(t);
    for (double density : {0.2, 0.8})
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            lhreg::RandomIdealSampler s(8, 1 + seed % 6, 900 + seed, density);
            c.run(s.next());
        }
    for (const auto& f : t.failures) UNSCOPED_INFO(f);
    CHECK(t.total_violations() == 0);
}

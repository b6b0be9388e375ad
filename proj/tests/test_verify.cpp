#include <doctest.h>

#include "ternop/verify.hpp"

using namespace ternop;

TEST_CASE("suite registry")
{
    const auto &names = suite_names();
    CHECK(names.size() == 16);
    CHECK(names.back() == "all");
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), std::invalid_argument);
}

TEST_CASE("reports are deterministic without timing")
{
    VerifyOptions o;
    o.max_n = 3;
    o.seed = 42;
    const auto a = run_suite("operad-axioms", o), b = run_suite("operad-axioms", o);
    CHECK(a.passed());
    CHECK(a.failures() == 0);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_text() == b.to_text());
    CHECK(!a.to_json().contains("duration_seconds"));

    o.timing = true;
    CHECK(run_suite("dimension", o).to_json().contains("duration_seconds"));
}

TEST_CASE("small suites pass")
{
    VerifyOptions o;
    o.max_n = 3;
    for (const char *s : {"groebner-confluence", "dimension", "q-basis", "theta-characterization", "periodicity",
                          "charpoly", "series-identity"}) {
        CAPTURE(s);
        CHECK(run_suite(s, o).passed());
    }
}

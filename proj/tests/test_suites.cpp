#include <catch2/catch_amalgamated.hpp>

#include "cayley/suites.hpp"

using namespace cayley;

TEST_CASE("every named suite passes on a small budget") {
    SampleSpec spec{7, 20, 6};
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        SuiteReport r = run_suite(name, spec);
        CHECK(r.passed());
        CHECK(r.passes == r.samples);
        CHECK_FALSE(r.counterexample.has_value());
        CHECK(r.samples > 0);
        CHECK(r.suite == name);
        CHECK(r.seed == 7);
    }
}

TEST_CASE("reports are deterministic in everything but timing") {
    SampleSpec spec{99, 15, 5};
    SuiteReport a = run_suite("identify", spec);
    SuiteReport b = run_suite("identify", spec);
    CHECK(a.samples == b.samples);
    CHECK(a.passes == b.passes);
    CHECK(a.notes == b.notes);

    SuiteReport c = run_suite("dual-link", spec);
    SuiteReport d = run_suite("dual-link", spec);
    CHECK(c.notes == d.notes);
    CHECK_FALSE(c.notes.empty());  // frame-dependent constants are reported
}

TEST_CASE("dual-link notes carry the recovered frame constants") {
    SampleSpec spec{5, 4, 5};
    SuiteReport r = run_suite("dual-link", spec);
    REQUIRE_FALSE(r.notes.empty());
    bool found_ratio = false;
    for (const std::string& note : r.notes)
        if (note.find("alpha'/alpha = -2/3") != std::string::npos) found_ratio = true;
    CHECK(found_ratio);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_MATCHES(run_suite("nonsense", SampleSpec{}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.kind() == errc::invalid_parameter;
                         }));
}

TEST_CASE("the all-suite union preserves order and conjunction") {
    SampleSpec spec{3, 5, 5};
    auto reports = run_all_suites(spec);
    auto names = suite_names();
    REQUIRE(reports.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(reports[i].suite == names[i]);
        CHECK(reports[i].passed());
    }
}

TEST_CASE("theorem1 grid covers the special values on both sides") {
    auto pairs = detail::classification_pairs();
    bool saw_mirrored = false, saw_32 = false, saw_73 = false, saw_52 = false;
    for (const auto& [p, q] : pairs) {
        if (p.beta + q.beta == 3 && p.beta != q.beta) saw_mirrored = true;
        if (p.beta == Rational(3, 2) && q.beta == Rational(3, 2)) saw_32 = true;
        if (p.beta == Rational(7, 3) && q.beta == Rational(7, 3)) saw_73 = true;
        if (p.beta == Rational(5, 2) && q.beta == Rational(5, 2)) saw_52 = true;
    }
    CHECK(saw_mirrored);
    CHECK(saw_32);
    CHECK(saw_73);
    CHECK(saw_52);
}

#include "doctest.h"

#include "baire/back_and_forth.hpp"
#include "baire/counterexamples.hpp"

using namespace baire;

TEST_CASE("the run starts from the first enumerated pair") {
    const Alphabet two = Alphabet::finite(2);
    const EventuallyConstantDense A(two, 0);
    const EventuallyConstantDense B(two, 1);
    const BackAndForth run(A, B);
    REQUIRE(run.current().size() == 1);
    CHECK(run.current().pairs()[0].first == Point({}, 0));
    CHECK(run.current().pairs()[0].second == Point({}, 1));

    const BackAndForth same(A, A);
    CHECK(same.current().pairs()[0].first == same.current().pairs()[0].second);
}

TEST_CASE("repeating enumerations are rejected") {
    const Alphabet two = Alphabet::finite(2);
    const Point p({1}, 0);
    const FiniteSampleOracle degenerate(two, {Point({}, 0), p, p});
    const EventuallyConstantDense B(two, 1);
    BackAndForth run(degenerate, B);
    CHECK_THROWS_AS(run.run_to(2), std::invalid_argument);
}

TEST_CASE("forth matches the agreement depth exactly") {
    const Alphabet two = Alphabet::finite(2);
    const EventuallyConstantDense A(two, 0);
    const EventuallyConstantDense B(two, 1);
    BackAndForth run(A, B);
    const Point a({0, 0, 1}, 0);  // agrees with 000... to depth 2
    run.forth(a);
    const Point b = *run.current().image_of(a);
    CHECK(distance(b, Point({}, 1)) == LogDistance::exponent(2));
    CHECK(check_isometry(run.current()).ok);

    CHECK_THROWS_AS(run.forth(a), std::invalid_argument);
}

TEST_CASE("forth avoids the image letters of every deepest-agreeing point") {
    // two domain points agree with the new point to depth exactly 1 and
    // their images use letters 0 and 1 there, so the partner must take 2
    const Alphabet three = Alphabet::finite(3);
    const Point x0({}, 0);          // 0,0,0,...
    const Point x1({0, 1}, 0);      // 0,1,0,...
    const Point a({0, 2}, 0);       // 0,2,0,...
    const Point y0({1}, 0);         // 1,0,0,...
    const Point y1({1, 1}, 0);      // 1,1,0,...
    const Point target({1, 2}, 0);  // 1,2,0,...
    const FiniteSampleOracle A(three, {x0, x1, a});
    const FiniteSampleOracle B(three, {y0, y1, target});
    BackAndForth run(A, B);
    run.forth(x1);
    REQUIRE(run.current().image_of(x1) == y1);
    run.forth(a);
    const Point chosen = *run.current().image_of(a);
    CHECK(chosen == target);
    CHECK(chosen.at(1) == 2);
    CHECK(check_isometry(run.current()).ok);
}

TEST_CASE("back mirrors forth through the inverse") {
    const Alphabet two = Alphabet::finite(2);
    const EventuallyConstantDense A(two, 0);
    const EventuallyConstantDense B(two, 1);
    BackAndForth run(A, B);
    const Point b({1, 1, 0}, 1);  // agrees with 111... to depth 2
    run.back(b);
    REQUIRE(run.current().size() == 2);
    CHECK(run.current().contains_range(b));
    CHECK(check_isometry(run.current()).ok);
    // the preimage splits from 000... at the same depth
    const Point preimage = run.current().pairs()[1].first;
    CHECK(distance(preimage, Point({}, 0)) == LogDistance::exponent(2));

    CHECK_THROWS_AS(run.back(b), std::invalid_argument);
}

TEST_CASE("runs cover both enumerations and stay isometric") {
    const Alphabet two = Alphabet::finite(2);
    for (std::uint64_t seed : {0ULL, 5ULL, 9ULL}) {
        const EventuallyConstantDense A(two, 0, seed);
        const EventuallyConstantDense B(two, 1, seed + 1);
        std::vector<BnfStep> transcript;
        const PartialMap result = bnf_run(A, B, 60, &transcript);
        CHECK(check_isometry(result).ok);
        CHECK(result.size() >= 61);
        CHECK(result.size() <= 122);
        for (std::size_t i = 0; i <= 60; ++i) {
            CHECK(result.contains_domain(A.enumerate(i)));
            CHECK(result.contains_range(B.enumerate(i)));
        }
        // every recorded step landed in the final map on the right side
        for (const BnfStep& step : transcript) {
            if (step.direction == BnfStep::Direction::Forth)
                CHECK(result.image_of(step.scheduled) == step.partner);
            else
                CHECK(result.image_of(step.partner) == step.scheduled);
        }
    }
}

TEST_CASE("a run of zero steps is the seed pair") {
    const EventuallyConstantDense A(Alphabet::countable(), 0);
    const EventuallyConstantDense B(Alphabet::countable(), 1);
    const PartialMap result = bnf_run(A, B, 0);
    CHECK(result.size() == 1);
}

TEST_CASE("states extend monotonically") {
    const EventuallyConstantDense A(Alphabet::countable(), 0, 3);
    const EventuallyConstantDense B(Alphabet::countable(), 0, 4);
    BackAndForth run(A, B);
    run.run_to(5);
    const PartialMap snapshot = run.current();
    run.run_to(12);
    CHECK(snapshot.submap_of(run.current()));
    CHECK(check_isometry(run.current()).ok);
}

TEST_CASE("opposite-parity samples cannot sustain a run") {
    // single-cell families: within each, first differences have one parity,
    // so the very first forth step has no matching partner
    const auto odd = gen_family(ParityKind::Odd, {{}}, 6, Alphabet::countable(), 21);
    const auto even = gen_family(ParityKind::Even, {{}}, 6, Alphabet::countable(), 22);
    const FiniteSampleOracle A(Alphabet::countable(), odd.cells[0].points);
    const FiniteSampleOracle B(Alphabet::countable(), even.cells[0].points);
    BackAndForth run(A, B);
    bool failed = false;
    std::size_t failed_at = 0;
    try {
        run.run_to(5);
    } catch (const OracleExhaustedError&) {
        failed = true;
        failed_at = run.step();
    } catch (const NoFreshLetterError&) {
        failed = true;
        failed_at = run.step();
    }
    CHECK(failed);
    CHECK(failed_at <= 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "citax/axioms.hpp"

using namespace citax;

namespace {

const IndicatorSpec kHcp10 = IndicatorSpec::hcp(Threshold(10));
const IndicatorSpec kHcp2 = IndicatorSpec::hcp(Threshold(2));

}  // namespace

TEST_CASE("rank outcomes") {
    CHECK(rank_outcome(2, 1) == RankOutcome::AHigher);
    CHECK(rank_outcome(1, 2) == RankOutcome::BHigher);
    CHECK(rank_outcome(3, 3) == RankOutcome::Tie);
    CHECK(compare(kHcp10, {10, 0}, {5, 5}) == RankOutcome::AHigher);
    CHECK(compare(kHcp10, {5, 5}, {10, 0}) == RankOutcome::BHigher);
    CHECK(compare(IndicatorSpec::total_citations(), {10, 0}, {5, 5}) == RankOutcome::Tie);
}

TEST_CASE("doubling reverses the two-scientist HCP ranking") {
    const CitationRecord v{10, 0};
    const CitationRecord w{5, 5};
    const auto report = check_improvement_consistency(
        kHcp10, v, w, RelativeImprovement{Ratio{2, 1}, RoundingMode::Strict});
    REQUIRE(report.has_value());
    CHECK(report->property == ConsistencyProperty::RelativeImprovement);
    CHECK(report->indicator == kHcp10);
    CHECK(report->severity == Severity::StrictReversal);
    const auto& evidence = std::get<ImprovementEvidence>(report->evidence);
    CHECK(evidence.record_a == v);
    CHECK(evidence.record_b == w);
    CHECK(evidence.before == ValuePair{1, 0});
    CHECK(evidence.after == ValuePair{1, 2});
    CHECK_FALSE(evidence.inexact_rounding);
}

TEST_CASE("adding five citations per paper reverses the same pair") {
    const auto report =
        check_improvement_consistency(kHcp10, {10, 0}, {5, 5}, AbsoluteImprovement{5});
    REQUIRE(report.has_value());
    CHECK(report->property == ConsistencyProperty::AbsoluteImprovement);
    CHECK(report->severity == Severity::StrictReversal);
    const auto& evidence = std::get<ImprovementEvidence>(report->evidence);
    CHECK(evidence.before == ValuePair{1, 0});
    CHECK(evidence.after == ValuePair{1, 2});
}

TEST_CASE("the h index reverses under doubling and under +2") {
    const IndicatorSpec h = IndicatorSpec::h_index();
    const CitationRecord p{3, 3, 3, 0};
    const CitationRecord q{3, 2, 2, 2};

    const auto doubled = check_improvement_consistency(
        h, p, q, RelativeImprovement{Ratio{2, 1}, RoundingMode::Strict});
    REQUIRE(doubled.has_value());
    CHECK(doubled->severity == Severity::StrictReversal);
    CHECK(std::get<ImprovementEvidence>(doubled->evidence).before == ValuePair{3, 2});
    CHECK(std::get<ImprovementEvidence>(doubled->evidence).after == ValuePair{3, 4});

    const auto plus_two = check_improvement_consistency(h, p, q, AbsoluteImprovement{2});
    REQUIRE(plus_two.has_value());
    CHECK(plus_two->severity == Severity::StrictReversal);
    CHECK(std::get<ImprovementEvidence>(plus_two->evidence).after == ValuePair{3, 4});
}

TEST_CASE("preserved orderings yield no report") {
    // Total citations are linear in the record, so an exact relative
    // improvement can never change that ranking.
    CHECK_FALSE(check_improvement_consistency(IndicatorSpec::total_citations(), {10, 0}, {5, 5},
                                              RelativeImprovement{Ratio{2, 1},
                                                                  RoundingMode::Strict})
                    .has_value());
    CHECK_FALSE(check_improvement_consistency(IndicatorSpec::paper_count(), {10, 0}, {5, 5},
                                              AbsoluteImprovement{5})
                    .has_value());
    // Same HCP pair under a harmless threshold.
    CHECK_FALSE(check_improvement_consistency(IndicatorSpec::hcp(Threshold(1)), {10, 2}, {5, 5},
                                              AbsoluteImprovement{5})
                    .has_value());
    // Identity improvements change nothing.
    CHECK_FALSE(check_improvement_consistency(kHcp10, {10, 0}, {5, 5},
                                              RelativeImprovement{Ratio{1, 1},
                                                                  RoundingMode::Strict})
                    .has_value());
    CHECK_FALSE(
        check_improvement_consistency(kHcp10, {10, 0}, {5, 5}, AbsoluteImprovement{0})
            .has_value());
}

TEST_CASE("an order collapsing to a tie is a weakening") {
    // Threshold 2: [2] beats [1]; after +1 both papers qualify.
    const auto report = check_improvement_consistency(kHcp2, {2}, {1}, AbsoluteImprovement{1});
    REQUIRE(report.has_value());
    CHECK(report->severity == Severity::Weakening);
    const auto& evidence = std::get<ImprovementEvidence>(report->evidence);
    CHECK(evidence.before == ValuePair{1, 0});
    CHECK(evidence.after == ValuePair{1, 1});
}

TEST_CASE("a tie turning strict is a weakening") {
    // Threshold 2: both start with zero qualifying papers.
    const auto report =
        check_improvement_consistency(kHcp2, {1, 1}, {0, 0}, AbsoluteImprovement{1});
    REQUIRE(report.has_value());
    CHECK(report->severity == Severity::Weakening);
    const auto& evidence = std::get<ImprovementEvidence>(report->evidence);
    CHECK(evidence.before == ValuePair{0, 0});
    CHECK(evidence.after == ValuePair{2, 0});
}

TEST_CASE("floor rounding marks reports as inexact when a remainder was dropped") {
    // Threshold 3: [3,0] beats [2,2]; times 3/2 rounded down gives [4,0]
    // against [3,3], reversing the order. 3*3/2 is not an integer.
    const IndicatorSpec hcp3 = IndicatorSpec::hcp(Threshold(3));
    const auto floored = check_improvement_consistency(
        hcp3, {3, 0}, {2, 2}, RelativeImprovement{Ratio{3, 2}, RoundingMode::Floor});
    REQUIRE(floored.has_value());
    CHECK(floored->severity == Severity::StrictReversal);
    CHECK(std::get<ImprovementEvidence>(floored->evidence).inexact_rounding);
    CHECK(std::get<ImprovementEvidence>(floored->evidence).after == ValuePair{1, 2});

    // The same inputs under strict rounding refuse to round.
    CHECK_THROWS_AS(check_improvement_consistency(
                        hcp3, {3, 0}, {2, 2},
                        RelativeImprovement{Ratio{3, 2}, RoundingMode::Strict}),
                    std::invalid_argument);

    // An exact floor application keeps the flag clear.
    const auto exact = check_improvement_consistency(
        kHcp10, {10, 0}, {5, 5}, RelativeImprovement{Ratio{2, 1}, RoundingMode::Floor});
    REQUIRE(exact.has_value());
    CHECK_FALSE(std::get<ImprovementEvidence>(exact->evidence).inexact_rounding);
}

TEST_CASE("aggregation reversal on the three-scientist yearly example") {
    const TimePartitionedRecord s{{{5, 5, 5, 5}, {5, 5, 5, 5}}};
    const TimePartitionedRecord t{{{10, 5, 5, 0}, {5, 10, 5, 0}}};
    const TimePartitionedRecord u{{{10, 10, 0, 0}, {10, 10, 0, 0}}};

    const auto ts = check_aggregation_consistency(kHcp10, t, s);
    REQUIRE(ts.has_value());
    CHECK(ts->property == ConsistencyProperty::Aggregation);
    CHECK(ts->severity == Severity::StrictReversal);
    {
        const auto& evidence = std::get<AggregationEvidence>(ts->evidence);
        CHECK(evidence.per_period == std::vector<ValuePair>{{1, 0}, {1, 0}});
        CHECK(evidence.aggregated == ValuePair{3, 4});
    }

    const auto us = check_aggregation_consistency(kHcp10, u, s);
    REQUIRE(us.has_value());
    CHECK(std::get<AggregationEvidence>(us->evidence).per_period ==
          std::vector<ValuePair>{{2, 0}, {2, 0}});
    CHECK(std::get<AggregationEvidence>(us->evidence).aggregated == ValuePair{2, 4});

    const auto ut = check_aggregation_consistency(kHcp10, u, t);
    REQUIRE(ut.has_value());
    CHECK(std::get<AggregationEvidence>(ut->evidence).per_period ==
          std::vector<ValuePair>{{2, 1}, {2, 1}});
    CHECK(std::get<AggregationEvidence>(ut->evidence).aggregated == ValuePair{2, 3});
}

TEST_CASE("two identical years double the simple pair and reverse it") {
    const TimePartitionedRecord v{{{10, 0}, {10, 0}}};
    const TimePartitionedRecord w{{{5, 5}, {5, 5}}};
    const auto report = check_aggregation_consistency(kHcp10, v, w);
    REQUIRE(report.has_value());
    CHECK(report->severity == Severity::StrictReversal);
    const auto& evidence = std::get<AggregationEvidence>(report->evidence);
    CHECK(evidence.per_period == std::vector<ValuePair>{{1, 0}, {1, 0}});
    CHECK(evidence.aggregated == ValuePair{1, 2});
}

TEST_CASE("aggregation premise fails vacuously on ties or mixed winners") {
    // A tie in one period breaks the premise.
    CHECK_FALSE(check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{2}, {2}}},
                                              TimePartitionedRecord{{{2}, {0}}})
                    .has_value());
    // Different winners per period break it too.
    CHECK_FALSE(check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{2}, {0}}},
                                              TimePartitionedRecord{{{0}, {2}}})
                    .has_value());
    // Identical records tie everywhere.
    CHECK_FALSE(check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{2}, {2}}},
                                              TimePartitionedRecord{{{2}, {2}}})
                    .has_value());
}

TEST_CASE("an aggregated tie after strict per-period wins is a weakening") {
    // Threshold 2: [2] wins both years; the aggregates [4] and [2] both
    // have exactly one qualifying paper.
    const auto report = check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{2}, {2}}},
                                                      TimePartitionedRecord{{{1}, {1}}});
    REQUIRE(report.has_value());
    CHECK(report->severity == Severity::Weakening);
    const auto& evidence = std::get<AggregationEvidence>(report->evidence);
    CHECK(evidence.per_period == std::vector<ValuePair>{{1, 0}, {1, 0}});
    CHECK(evidence.aggregated == ValuePair{1, 1});
}

TEST_CASE("aggregation rejects mismatched period structures") {
    CHECK_THROWS_WITH_AS(
        check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{1}, {1}}},
                                      TimePartitionedRecord{{{1}, {1}, {1}}}),
        "period structures differ", std::invalid_argument);
    CHECK_THROWS_WITH_AS(check_aggregation_consistency(kHcp2, TimePartitionedRecord{{{1}}},
                                                       TimePartitionedRecord{{{1}}}),
                         "need at least two periods", std::invalid_argument);
}

TEST_CASE("swapping sides mirrors all stored values and is an involution") {
    const auto report = check_improvement_consistency(
        kHcp10, {5, 5}, {10, 0}, RelativeImprovement{Ratio{2, 1}, RoundingMode::Strict});
    REQUIRE(report.has_value());
    const ViolationReport swapped = swapped_sides(*report);
    {
        const auto& evidence = std::get<ImprovementEvidence>(swapped.evidence);
        CHECK(evidence.record_a == CitationRecord{10, 0});
        CHECK(evidence.record_b == CitationRecord{5, 5});
        CHECK(evidence.before == ValuePair{1, 0});
        CHECK(evidence.after == ValuePair{1, 2});
    }
    CHECK(swapped_sides(swapped) == *report);

    const auto agg = check_aggregation_consistency(kHcp10, TimePartitionedRecord{{{5, 5}, {5, 5}}},
                                                   TimePartitionedRecord{{{10, 0}, {10, 0}}});
    REQUIRE(agg.has_value());
    const auto& mirrored = std::get<AggregationEvidence>(swapped_sides(*agg).evidence);
    CHECK(mirrored.per_period == std::vector<ValuePair>{{1, 0}, {1, 0}});
    CHECK(mirrored.aggregated == ValuePair{1, 2});
    CHECK(swapped_sides(swapped_sides(*agg)) == *agg);
}

TEST_CASE("orientation puts the initially better scientist first") {
    // Called with the initially-worse record first, the oriented report
    // swaps; called the other way it is returned unchanged.
    const auto backwards = check_improvement_consistency(
        kHcp10, {5, 5}, {10, 0}, RelativeImprovement{Ratio{2, 1}, RoundingMode::Strict});
    REQUIRE(backwards.has_value());
    const ViolationReport oriented = oriented_by_before(*backwards);
    CHECK(std::get<ImprovementEvidence>(oriented.evidence).record_a == CitationRecord{10, 0});
    CHECK(std::get<ImprovementEvidence>(oriented.evidence).before == ValuePair{1, 0});

    const auto forwards = check_improvement_consistency(
        kHcp10, {10, 0}, {5, 5}, RelativeImprovement{Ratio{2, 1}, RoundingMode::Strict});
    REQUIRE(forwards.has_value());
    CHECK(oriented_by_before(*forwards) == *forwards);
    CHECK(oriented == *forwards);

    // A tie-to-strict weakening keeps its call order.
    const auto tie_first =
        check_improvement_consistency(kHcp2, {1, 1}, {0, 0}, AbsoluteImprovement{1});
    REQUIRE(tie_first.has_value());
    CHECK(oriented_by_before(*tie_first) == *tie_first);

    const auto agg = check_aggregation_consistency(kHcp10, TimePartitionedRecord{{{5, 5}, {5, 5}}},
                                                   TimePartitionedRecord{{{10, 0}, {10, 0}}});
    REQUIRE(agg.has_value());
    const ViolationReport oriented_agg = oriented_by_before(*agg);
    const auto& evidence = std::get<AggregationEvidence>(oriented_agg.evidence);
    CHECK(evidence.record_a == TimePartitionedRecord{{{10, 0}, {10, 0}}});
    CHECK(evidence.per_period == std::vector<ValuePair>{{1, 0}, {1, 0}});
    CHECK(evidence.aggregated == ValuePair{1, 2});
}

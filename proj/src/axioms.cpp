#include "citax/axioms.hpp"

#include <algorithm>

namespace citax {

namespace {

bool is_strict(RankOutcome outcome) { return outcome != RankOutcome::Tie; }

RankOutcome opposite(RankOutcome outcome) {
    switch (outcome) {
        case RankOutcome::AHigher: return RankOutcome::BHigher;
        case RankOutcome::BHigher: return RankOutcome::AHigher;
        case RankOutcome::Tie: return RankOutcome::Tie;
    }
    throw std::logic_error("unknown rank outcome");
}

}  // namespace

RankOutcome rank_outcome(Count value_a, Count value_b) {
    if (value_a > value_b) return RankOutcome::AHigher;
    if (value_a < value_b) return RankOutcome::BHigher;
    return RankOutcome::Tie;
}

RankOutcome compare(const IndicatorSpec& spec, const CitationRecord& a,
                    const CitationRecord& b) {
    return rank_outcome(evaluate(spec, a), evaluate(spec, b));
}

std::optional<ViolationReport> check_improvement_consistency(const IndicatorSpec& spec,
                                                             const CitationRecord& a,
                                                             const CitationRecord& b,
                                                             const Improvement& improvement) {
    const ValuePair before{evaluate(spec, a), evaluate(spec, b)};
    const CitationRecord improved_a = apply_improvement(improvement, a);
    const CitationRecord improved_b = apply_improvement(improvement, b);
    const ValuePair after{evaluate(spec, improved_a), evaluate(spec, improved_b)};

    const RankOutcome outcome_before = rank_outcome(before.a, before.b);
    const RankOutcome outcome_after = rank_outcome(after.a, after.b);
    if (outcome_before == outcome_after) {
        return std::nullopt;
    }

    const bool strict_reversal =
        is_strict(outcome_before) && outcome_after == opposite(outcome_before);

    ImprovementEvidence evidence{a, b, improvement, before, after, false};
    ConsistencyProperty property = ConsistencyProperty::AbsoluteImprovement;
    if (const auto* relative = std::get_if<RelativeImprovement>(&improvement)) {
        property = ConsistencyProperty::RelativeImprovement;
        if (relative->rounding == RoundingMode::Floor) {
            evidence.inexact_rounding = !relative_is_exact(a, relative->factor) ||
                                        !relative_is_exact(b, relative->factor);
        }
    }

    return ViolationReport{
        property,
        spec,
        strict_reversal ? Severity::StrictReversal : Severity::Weakening,
        std::move(evidence),
    };
}

std::optional<ViolationReport> check_aggregation_consistency(const IndicatorSpec& spec,
                                                             const TimePartitionedRecord& a,
                                                             const TimePartitionedRecord& b) {
    if (a.periods.size() != b.periods.size()) {
        throw std::invalid_argument("period structures differ");
    }
    if (a.periods.size() < 2) {
        throw std::invalid_argument("need at least two periods");
    }

    std::vector<ValuePair> per_period;
    per_period.reserve(a.periods.size());
    for (std::size_t k = 0; k < a.periods.size(); ++k) {
        per_period.push_back(
            ValuePair{evaluate(spec, a.periods[k]), evaluate(spec, b.periods[k])});
    }

    // Premise: the same scientist strictly ahead in every period.
    const RankOutcome first = rank_outcome(per_period.front().a, per_period.front().b);
    if (!is_strict(first)) {
        return std::nullopt;
    }
    for (const ValuePair& values : per_period) {
        if (rank_outcome(values.a, values.b) != first) {
            return std::nullopt;
        }
    }

    const ValuePair aggregated{evaluate(spec, aggregate_periods(a)),
                               evaluate(spec, aggregate_periods(b))};
    const RankOutcome outcome_after = rank_outcome(aggregated.a, aggregated.b);
    if (outcome_after == first) {
        return std::nullopt;
    }

    return ViolationReport{
        ConsistencyProperty::Aggregation,
        spec,
        outcome_after == RankOutcome::Tie ? Severity::Weakening : Severity::StrictReversal,
        AggregationEvidence{a, b, std::move(per_period), aggregated},
    };
}

ViolationReport swapped_sides(ViolationReport report) {
    if (auto* improvement = std::get_if<ImprovementEvidence>(&report.evidence)) {
        std::swap(improvement->record_a, improvement->record_b);
        std::swap(improvement->before.a, improvement->before.b);
        std::swap(improvement->after.a, improvement->after.b);
    } else {
        auto& aggregation = std::get<AggregationEvidence>(report.evidence);
        std::swap(aggregation.record_a, aggregation.record_b);
        for (ValuePair& values : aggregation.per_period) {
            std::swap(values.a, values.b);
        }
        std::swap(aggregation.aggregated.a, aggregation.aggregated.b);
    }
    return report;
}

ViolationReport oriented_by_before(ViolationReport report) {
    bool b_was_ahead = false;
    if (const auto* improvement = std::get_if<ImprovementEvidence>(&report.evidence)) {
        b_was_ahead = improvement->before.b > improvement->before.a;
    } else {
        const auto& aggregation = std::get<AggregationEvidence>(report.evidence);
        b_was_ahead = aggregation.per_period.front().b > aggregation.per_period.front().a;
    }
    return b_was_ahead ? swapped_sides(std::move(report)) : report;
}

}  // namespace citax

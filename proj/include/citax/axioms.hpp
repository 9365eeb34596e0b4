#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "citax/core.hpp"
#include "citax/transforms.hpp"

namespace citax {

enum class RankOutcome {
    AHigher,
    Tie,
    BHigher,
};

enum class ConsistencyProperty {
    RelativeImprovement,
    AbsoluteImprovement,
    Aggregation,
};

/// StrictReversal: strict order before, strict opposite order after.
/// Weakening: strict order collapses to a tie, or a tie becomes strict.
enum class Severity {
    StrictReversal,
    Weakening,
};

struct ValuePair {
    Count a = 0;
    Count b = 0;

    friend bool operator==(const ValuePair&, const ValuePair&) = default;
};

struct ImprovementEvidence {
    CitationRecord record_a;
    CitationRecord record_b;
    Improvement improvement;
    ValuePair before;
    ValuePair after;
    /// Set when Floor rounding actually discarded a remainder on either
    /// record, i.e. the "same relative improvement" premise is approximate.
    bool inexact_rounding = false;

    friend bool operator==(const ImprovementEvidence&, const ImprovementEvidence&) = default;
};

struct AggregationEvidence {
    TimePartitionedRecord record_a;
    TimePartitionedRecord record_b;
    std::vector<ValuePair> per_period;
    ValuePair aggregated;

    friend bool operator==(const AggregationEvidence&, const AggregationEvidence&) = default;
};

/// Evidence that an axiom is violated; all stored values are recomputable
/// from the stored records and transformation.
struct ViolationReport {
    ConsistencyProperty property;
    IndicatorSpec indicator;
    Severity severity;
    std::variant<ImprovementEvidence, AggregationEvidence> evidence;

    friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

RankOutcome rank_outcome(Count value_a, Count value_b);

/// Higher indicator value = better performance.
RankOutcome compare(const IndicatorSpec& spec, const CitationRecord& a,
                    const CitationRecord& b);

/// Applies the same improvement to both records and reports when the rank
/// outcome changes. Strict relative improvements propagate "inexact relative
/// improvement" errors; Floor ones set the inexact_rounding flag instead.
std::optional<ViolationReport> check_improvement_consistency(const IndicatorSpec& spec,
                                                             const CitationRecord& a,
                                                             const CitationRecord& b,
                                                             const Improvement& improvement);

/// The axiom's premise requires one scientist strictly ahead in every single
/// period; anything else (ties, mixed directions) satisfies it vacuously and
/// yields no report. With the premise met, an aggregated tie is a Weakening
/// and an aggregated opposite order a StrictReversal. Throws
/// std::invalid_argument "period structures differ" on period-count mismatch.
std::optional<ViolationReport> check_aggregation_consistency(const IndicatorSpec& spec,
                                                             const TimePartitionedRecord& a,
                                                             const TimePartitionedRecord& b);

/// Swaps the roles of a and b in a report (records, value pairs).
ViolationReport swapped_sides(ViolationReport report);

/// Reports read most naturally with the initially better scientist first;
/// returns the report with sides swapped if needed to achieve that. Reports
/// whose premise starts from a tie are returned unchanged.
ViolationReport oriented_by_before(ViolationReport report);

}  // namespace citax

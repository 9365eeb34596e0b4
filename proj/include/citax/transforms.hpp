#pragma once

#include <variant>
#include <vector>

#include "citax/core.hpp"

namespace citax {

/// Strict mode rejects any multiplication that does not land on an integer;
/// Floor rounds down. Floor can never inflate an HCP count, which is why the
/// counterexample search uses it for arbitrary factor grids.
enum class RoundingMode {
    Floor,
    Strict,
};

/// Multiplies every citation count by factor num/den. Improvements only:
/// the factor must be >= 1.
struct RelativeImprovement {
    Ratio factor;
    RoundingMode rounding = RoundingMode::Strict;

    friend bool operator==(const RelativeImprovement&, const RelativeImprovement&) = default;
};

/// Adds the same non-negative increment to every citation count.
struct AbsoluteImprovement {
    Count delta = 0;

    friend bool operator==(const AbsoluteImprovement&, const AbsoluteImprovement&) = default;
};

using Improvement = std::variant<RelativeImprovement, AbsoluteImprovement>;

/// Per-period citation counts for one fixed set of papers: position k in
/// every period refers to the same paper. Well-formed instances have at
/// least two periods, all of equal length.
struct TimePartitionedRecord {
    std::vector<CitationRecord> periods;

    friend bool operator==(const TimePartitionedRecord&, const TimePartitionedRecord&) = default;
};

/// Throws std::invalid_argument "inexact relative improvement ..." naming the
/// first offending paper under Strict rounding, and if num/den < 1.
CitationRecord relative_improvement(const CitationRecord& record, Ratio factor,
                                    RoundingMode rounding);

CitationRecord absolute_improvement(const CitationRecord& record, Count delta);

CitationRecord apply_improvement(const Improvement& improvement, const CitationRecord& record);

/// True when every count times factor.num is divisible by factor.den, i.e.
/// Floor and Strict agree on this record.
bool relative_is_exact(const CitationRecord& record, Ratio factor);

/// Position-wise sum across all periods. Throws std::invalid_argument
/// "periods cover different papers" on ragged periods and rejects records
/// with fewer than two periods.
CitationRecord aggregate_periods(const TimePartitionedRecord& record);

/// Concatenates extra counts onto the record.
CitationRecord pad_record(CitationRecord record, const CitationRecord& extra);

}  // namespace citax

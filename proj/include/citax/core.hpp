#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace citax {

using Count = std::uint64_t;

/// Per-paper citation counts; the position identifies the paper. Order carries
/// no meaning for any indicator, so [10,0] and [0,10] describe the same
/// scientist. An empty record (no publications) is legal.
using CitationRecord = std::vector<Count>;

/// Minimum citation count for a paper to count as highly cited. A paper with
/// exactly `value` citations is highly cited (the comparison is >=).
class Threshold {
public:
    explicit Threshold(Count value) : value_(value) {
        if (value_ == 0) {
            throw std::invalid_argument("threshold must be at least 1");
        }
    }

    Count value() const noexcept { return value_; }

    friend bool operator==(const Threshold&, const Threshold&) = default;
    friend auto operator<=>(const Threshold&, const Threshold&) = default;

private:
    Count value_;
};

/// Exact rational with unsigned integer parts. Relative improvement factors
/// and reference-set percentiles both stay in integer arithmetic end to end;
/// no floating point is involved anywhere in indicator evaluation.
struct Ratio {
    Count num = 1;
    Count den = 1;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

enum class IndicatorKind {
    HcpCount,
    HIndex,
    TotalCitations,
    PaperCount,
};

/// An indicator to evaluate. Only HcpCount carries a threshold.
class IndicatorSpec {
public:
    static IndicatorSpec hcp(Threshold threshold) {
        return IndicatorSpec(IndicatorKind::HcpCount, threshold.value());
    }
    static IndicatorSpec h_index() { return IndicatorSpec(IndicatorKind::HIndex, 0); }
    static IndicatorSpec total_citations() {
        return IndicatorSpec(IndicatorKind::TotalCitations, 0);
    }
    static IndicatorSpec paper_count() {
        return IndicatorSpec(IndicatorKind::PaperCount, 0);
    }

    IndicatorKind kind() const noexcept { return kind_; }

    /// Valid only for HcpCount.
    Threshold threshold() const {
        if (kind_ != IndicatorKind::HcpCount) {
            throw std::logic_error("indicator carries no threshold");
        }
        return Threshold(threshold_);
    }

    bool operator==(const IndicatorSpec&) const = default;

private:
    IndicatorSpec(IndicatorKind kind, Count threshold)
        : kind_(kind), threshold_(threshold) {}

    IndicatorKind kind_;
    Count threshold_;
};

/// Number of entries at or above the threshold. A paper with exactly
/// threshold citations counts.
Count hcp_count(const CitationRecord& record, Threshold threshold);

/// Largest h such that at least h papers have at least h citations each.
Count h_index(const CitationRecord& record);

Count total_citations(const CitationRecord& record);

Count paper_count(const CitationRecord& record);

/// Dispatches to the matching dedicated indicator.
Count evaluate(const IndicatorSpec& spec, const CitationRecord& record);

/// Smallest threshold t such that at most top_fraction of the reference
/// entries are >= t. Guarantees at most floor(top_fraction * |reference|)
/// entries meet or exceed the result. top_fraction must lie strictly in
/// (0,1); throws std::invalid_argument on an empty reference set.
Threshold calibrate_threshold(const std::vector<Count>& reference, Ratio top_fraction);

/// Non-increasing copy, the unique representative of a record's
/// permutation class.
CitationRecord canonicalized(CitationRecord record);

bool is_canonical(const CitationRecord& record);

/// "[10,0]" style rendering used in messages and machine output.
std::string format_record(const CitationRecord& record);

std::string indicator_token(IndicatorKind kind);

}  // namespace citax

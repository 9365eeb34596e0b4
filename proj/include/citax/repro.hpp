#pragma once

#include <string>
#include <vector>

#include "citax/axioms.hpp"
#include "citax/document.hpp"

namespace citax {

/// One evaluation column of a fixture: the unmodified records, a uniform
/// improvement applied to them, a single period, or the aggregate of all
/// periods.
struct Scenario {
    enum class Kind { Original, Transform, Period, Aggregate };

    std::string label;
    Kind kind = Kind::Original;
    Improvement improvement = AbsoluteImprovement{0};  // Transform only
    std::size_t period = 0;                            // Period only

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// A ranking column: one expected rank sequence shared by one or more
/// scenarios (scenarios that provably yield the same values are merged, and
/// the merge itself is checked).
struct RankColumn {
    std::string label;
    std::vector<std::size_t> scenarios;  // indices into Fixture::scenarios

    friend bool operator==(const RankColumn&, const RankColumn&) = default;
};

/// A machine-checkable fixture: scientists, scenarios, the indicator, and
/// the expected value for every scientist/scenario cell, plus optional
/// expected rank sequences.
struct Fixture {
    std::string name;
    std::string title;
    IndicatorSpec indicator = IndicatorSpec::h_index();
    bool partitioned = false;
    std::vector<std::string> labels;
    std::vector<CitationRecord> records;              // when !partitioned
    std::vector<TimePartitionedRecord> partitions;    // when partitioned
    std::vector<Scenario> scenarios;
    std::vector<std::vector<Count>> expected;         // [scientist][scenario]
    std::vector<RankColumn> rank_columns;             // optional
    std::vector<std::vector<std::size_t>> expected_ranks;  // [scientist][rank column]
};

struct CellResult {
    std::string scientist;
    std::string scenario;
    Count expected = 0;
    Count computed = 0;
    bool pass = false;
};

struct RankResult {
    std::string scientist;
    std::string scenario;
    std::size_t expected = 0;
    std::size_t computed = 0;
    bool pass = false;
};

struct FixtureReport {
    std::string fixture;
    std::vector<CellResult> cells;
    std::vector<RankResult> ranks;
    std::string error;  // transform failure; indicates a transcription bug

    bool passed() const;
};

/// The seven built-in example tables (T1..T7). Expansion of grouped citation
/// distributions is verified at construction time.
std::vector<Fixture> builtin_fixtures();

/// Computes every cell with Strict rounding and diffs it against the
/// fixture's expectations; rank columns are recomputed from the computed
/// values, and every scenario merged into a column must agree.
FixtureReport run_fixture(const Fixture& fixture);

/// The fixture's records in the document ingestion format (threshold
/// embedded for HCP fixtures).
RecordDocument to_document(const Fixture& fixture);

}  // namespace citax

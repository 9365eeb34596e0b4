#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "citax/axioms.hpp"

namespace citax {

/// Bounds for the exhaustive counterexample search. All grids are explicit
/// finite lists. Relative improvements are applied with Floor rounding during
/// the search so that every grid point is applicable to every record.
struct SearchBounds {
    std::size_t max_papers = 2;
    Count max_citations = 10;
    /// Improvement grid; entries are matched against the selected properties
    /// (Relative entries feed RelativeImprovement checks and so on).
    std::vector<Improvement> improvements;
    /// Thresholds to sweep when searching the HCP indicator; ignored otherwise.
    std::vector<Threshold> thresholds;
    std::set<ConsistencyProperty> properties;
    /// Aggregation only: period counts 2..max_periods are searched.
    std::size_t max_periods = 2;
    /// Weakenings are excluded from results unless requested.
    bool include_weakenings = false;
};

struct CounterexampleSize {
    std::size_t papers = 0;     // across both records
    Count citations = 0;        // across both records (and all periods)

    friend bool operator==(const CounterexampleSize&, const CounterexampleSize&) = default;
    friend auto operator<=>(const CounterexampleSize&, const CounterexampleSize&) = default;
};

struct Counterexample {
    ViolationReport report;
    CounterexampleSize size;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Every non-increasing record of length 0..max_papers with entries in
/// 0..max_citations, exactly once, ordered by length then lexicographically.
std::vector<CitationRecord> enumerate_records(std::size_t max_papers, Count max_citations);

/// Canonical records of exactly the given length, in lexicographic order.
std::vector<CitationRecord> records_of_length(std::size_t papers, Count max_citations);

/// Canonical time-partitioned records with exactly `papers` papers and
/// `periods` periods: papers are identified with their per-period citation
/// vectors and stored in non-increasing lexicographic vector order, the
/// unique representative under paper permutation.
std::vector<TimePartitionedRecord> partitioned_records_of_length(std::size_t papers,
                                                                 Count max_citations,
                                                                 std::size_t periods);

/// Exhaustive scan over all canonical record pairs and grid improvements
/// within bounds. Pairs always share a paper count (and, for aggregation, a
/// period count); each unordered pair is visited once and the checker catches
/// reversals in either direction. Results are sorted by size then canonical
/// order and are deterministic for fixed bounds regardless of the execution
/// schedule. OpenMP-parallel when available.
std::vector<Counterexample> find_counterexamples(IndicatorKind kind, const SearchBounds& bounds);

/// Single-threaded reference implementation with the same contract; kept as
/// the comparison baseline for the parallel kernel.
std::vector<Counterexample> find_counterexamples_serial(IndicatorKind kind,
                                                        const SearchBounds& bounds);

/// Pareto-minimal entries under (total papers, total citations), keeping
/// input order. Incomparable and equal sizes are all retained.
std::vector<Counterexample> minimal_counterexamples(const std::vector<Counterexample>& results);

/// The deterministic result order: size, property, indicator, records,
/// improvement.
bool counterexample_less(const Counterexample& lhs, const Counterexample& rhs);

}  // namespace citax

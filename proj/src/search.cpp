#include "citax/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace citax {

namespace {

void emit_records(std::size_t remaining, Count cap, CitationRecord& current,
                  std::vector<CitationRecord>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (Count c = 0; c <= cap; ++c) {
        current.push_back(c);
        emit_records(remaining - 1, c, current, out);
        current.pop_back();
    }
}

using PaperVector = std::vector<Count>;  // one paper's counts across periods

std::vector<PaperVector> paper_vectors(Count max_citations, std::size_t periods) {
    std::vector<PaperVector> universe;
    PaperVector odometer(periods, 0);
    while (true) {
        universe.push_back(odometer);
        std::size_t pos = periods;
        while (pos > 0) {
            --pos;
            if (odometer[pos] < max_citations) {
                ++odometer[pos];
                std::fill(odometer.begin() + pos + 1, odometer.end(), Count{0});
                break;
            }
            if (pos == 0) return universe;
        }
    }
}

void emit_paper_sets(std::size_t remaining, std::size_t cap_index,
                     const std::vector<PaperVector>& universe,
                     std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = 0; i <= cap_index; ++i) {
        current.push_back(i);
        emit_paper_sets(remaining - 1, i, universe, current, out);
        current.pop_back();
    }
}

struct SearchPlan {
    std::vector<IndicatorSpec> specs;
    std::vector<Improvement> improvements;  // filtered grid, relatives coerced to Floor
    bool aggregation = false;
};

SearchPlan make_plan(IndicatorKind kind, const SearchBounds& bounds) {
    if (bounds.max_papers == 0) {
        throw std::invalid_argument("max papers must be positive");
    }
    if (bounds.properties.empty()) {
        throw std::invalid_argument("no properties selected");
    }

    SearchPlan plan;
    if (kind == IndicatorKind::HcpCount) {
        if (bounds.thresholds.empty()) {
            throw std::invalid_argument("no thresholds for hcp search");
        }
        for (Threshold threshold : bounds.thresholds) {
            plan.specs.push_back(IndicatorSpec::hcp(threshold));
        }
    } else if (kind == IndicatorKind::HIndex) {
        plan.specs.push_back(IndicatorSpec::h_index());
    } else if (kind == IndicatorKind::TotalCitations) {
        plan.specs.push_back(IndicatorSpec::total_citations());
    } else {
        plan.specs.push_back(IndicatorSpec::paper_count());
    }

    const bool want_relative =
        bounds.properties.count(ConsistencyProperty::RelativeImprovement) > 0;
    const bool want_absolute =
        bounds.properties.count(ConsistencyProperty::AbsoluteImprovement) > 0;
    plan.aggregation = bounds.properties.count(ConsistencyProperty::Aggregation) > 0;

    for (const Improvement& improvement : bounds.improvements) {
        if (const auto* relative = std::get_if<RelativeImprovement>(&improvement)) {
            if (want_relative) {
                plan.improvements.push_back(
                    RelativeImprovement{relative->factor, RoundingMode::Floor});
            }
        } else if (want_absolute) {
            plan.improvements.push_back(improvement);
        }
    }
    if ((want_relative || want_absolute) && plan.improvements.empty()) {
        throw std::invalid_argument("empty improvement grid");
    }
    if (plan.aggregation && bounds.max_periods < 2) {
        throw std::invalid_argument("max periods must be at least 2");
    }
    return plan;
}

Count partitioned_citations(const TimePartitionedRecord& record) {
    Count sum = 0;
    for (const CitationRecord& period : record.periods) {
        sum += total_citations(period);
    }
    return sum;
}

void check_improvement_pair(const IndicatorSpec& spec, const CitationRecord& a,
                            const CitationRecord& b,
                            const std::vector<Improvement>& improvements,
                            bool include_weakenings, std::vector<Counterexample>& out) {
    for (const Improvement& improvement : improvements) {
        auto report = check_improvement_consistency(spec, a, b, improvement);
        if (!report) continue;
        if (report->severity == Severity::Weakening && !include_weakenings) continue;
        out.push_back(Counterexample{
            oriented_by_before(std::move(*report)),
            CounterexampleSize{a.size() + b.size(), total_citations(a) + total_citations(b)},
        });
    }
}

void check_aggregation_pair(const IndicatorSpec& spec, const TimePartitionedRecord& a,
                            const TimePartitionedRecord& b, bool include_weakenings,
                            std::vector<Counterexample>& out) {
    auto report = check_aggregation_consistency(spec, a, b);
    if (!report) return;
    if (report->severity == Severity::Weakening && !include_weakenings) return;
    out.push_back(Counterexample{
        oriented_by_before(std::move(*report)),
        CounterexampleSize{a.periods.front().size() + b.periods.front().size(),
                           partitioned_citations(a) + partitioned_citations(b)},
    });
}

// Ordering key; std::vector supplies the lexicographic comparison.
struct SortKey {
    std::size_t papers;
    Count citations;
    int property;
    int kind;
    Count threshold;
    std::size_t periods;
    std::vector<Count> flat_a;
    std::vector<Count> flat_b;
    int improvement_tag;
    Count improvement_num;
    Count improvement_den;
    int severity;

    friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

SortKey sort_key(const Counterexample& cx) {
    SortKey key{};
    key.papers = cx.size.papers;
    key.citations = cx.size.citations;
    key.property = static_cast<int>(cx.report.property);
    key.kind = static_cast<int>(cx.report.indicator.kind());
    key.threshold = cx.report.indicator.kind() == IndicatorKind::HcpCount
                        ? cx.report.indicator.threshold().value()
                        : 0;
    key.severity = static_cast<int>(cx.report.severity);

    if (const auto* improvement = std::get_if<ImprovementEvidence>(&cx.report.evidence)) {
        key.periods = 0;
        key.flat_a = improvement->record_a;
        key.flat_b = improvement->record_b;
        if (const auto* relative = std::get_if<RelativeImprovement>(&improvement->improvement)) {
            key.improvement_tag = 0;
            key.improvement_num = relative->factor.num;
            key.improvement_den = relative->factor.den;
        } else {
            key.improvement_tag = 1;
            key.improvement_num = std::get<AbsoluteImprovement>(improvement->improvement).delta;
            key.improvement_den = 0;
        }
    } else {
        const auto& aggregation = std::get<AggregationEvidence>(cx.report.evidence);
        key.periods = aggregation.record_a.periods.size();
        for (const CitationRecord& period : aggregation.record_a.periods) {
            key.flat_a.insert(key.flat_a.end(), period.begin(), period.end());
        }
        for (const CitationRecord& period : aggregation.record_b.periods) {
            key.flat_b.insert(key.flat_b.end(), period.begin(), period.end());
        }
        key.improvement_tag = 2;
        key.improvement_num = 0;
        key.improvement_den = 0;
    }
    return key;
}

void sort_canonically(std::vector<Counterexample>& results) {
    std::vector<std::pair<SortKey, std::size_t>> decorated;
    decorated.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        decorated.emplace_back(sort_key(results[i]), i);
    }
    std::sort(decorated.begin(), decorated.end());
    std::vector<Counterexample> sorted;
    sorted.reserve(results.size());
    for (const auto& [key, index] : decorated) {
        sorted.push_back(std::move(results[index]));
    }
    results = std::move(sorted);
}

void scan_improvements_serial(const SearchPlan& plan, const SearchBounds& bounds,
                              std::vector<Counterexample>& out) {
    for (const IndicatorSpec& spec : plan.specs) {
        for (std::size_t papers = 0; papers <= bounds.max_papers; ++papers) {
            const auto records = records_of_length(papers, bounds.max_citations);
            for (std::size_t i = 0; i < records.size(); ++i) {
                for (std::size_t j = i + 1; j < records.size(); ++j) {
                    check_improvement_pair(spec, records[i], records[j], plan.improvements,
                                           bounds.include_weakenings, out);
                }
            }
        }
    }
}

void scan_aggregation_serial(const SearchPlan& plan, const SearchBounds& bounds,
                             std::vector<Counterexample>& out) {
    for (const IndicatorSpec& spec : plan.specs) {
        for (std::size_t periods = 2; periods <= bounds.max_periods; ++periods) {
            for (std::size_t papers = 0; papers <= bounds.max_papers; ++papers) {
                const auto records =
                    partitioned_records_of_length(papers, bounds.max_citations, periods);
                for (std::size_t i = 0; i < records.size(); ++i) {
                    for (std::size_t j = i + 1; j < records.size(); ++j) {
                        check_aggregation_pair(spec, records[i], records[j],
                                               bounds.include_weakenings, out);
                    }
                }
            }
        }
    }
}

void scan_improvements_parallel(const SearchPlan& plan, const SearchBounds& bounds,
                                std::vector<Counterexample>& out) {
    for (const IndicatorSpec& spec : plan.specs) {
        for (std::size_t papers = 0; papers <= bounds.max_papers; ++papers) {
            const auto records = records_of_length(papers, bounds.max_citations);
            const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel
            {
                std::vector<Counterexample> local;
#pragma omp for schedule(dynamic, 16) nowait
                for (std::ptrdiff_t i = 0; i < n; ++i) {
                    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
                        check_improvement_pair(spec, records[i], records[j], plan.improvements,
                                               bounds.include_weakenings, local);
                    }
                }
#pragma omp critical(citax_search_merge)
                out.insert(out.end(), std::make_move_iterator(local.begin()),
                           std::make_move_iterator(local.end()));
            }
        }
    }
}

void scan_aggregation_parallel(const SearchPlan& plan, const SearchBounds& bounds,
                               std::vector<Counterexample>& out) {
    for (const IndicatorSpec& spec : plan.specs) {
        for (std::size_t periods = 2; periods <= bounds.max_periods; ++periods) {
            for (std::size_t papers = 0; papers <= bounds.max_papers; ++papers) {
                const auto records =
                    partitioned_records_of_length(papers, bounds.max_citations, periods);
                const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel
                {
                    std::vector<Counterexample> local;
#pragma omp for schedule(dynamic, 16) nowait
                    for (std::ptrdiff_t i = 0; i < n; ++i) {
                        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
                            check_aggregation_pair(spec, records[i], records[j],
                                                   bounds.include_weakenings, local);
                        }
                    }
#pragma omp critical(citax_search_merge)
                    out.insert(out.end(), std::make_move_iterator(local.begin()),
                               std::make_move_iterator(local.end()));
                }
            }
        }
    }
}

}  // namespace

std::vector<CitationRecord> records_of_length(std::size_t papers, Count max_citations) {
    std::vector<CitationRecord> out;
    CitationRecord current;
    current.reserve(papers);
    emit_records(papers, max_citations, current, out);
    return out;
}

std::vector<CitationRecord> enumerate_records(std::size_t max_papers, Count max_citations) {
    std::vector<CitationRecord> out;
    for (std::size_t papers = 0; papers <= max_papers; ++papers) {
        auto block = records_of_length(papers, max_citations);
        out.insert(out.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
    }
    return out;
}

std::vector<TimePartitionedRecord> partitioned_records_of_length(std::size_t papers,
                                                                 Count max_citations,
                                                                 std::size_t periods) {
    if (periods < 2) {
        throw std::invalid_argument("need at least two periods");
    }
    const auto universe = paper_vectors(max_citations, periods);

    std::vector<std::vector<std::size_t>> paper_sets;
    std::vector<std::size_t> current;
    current.reserve(papers);
    emit_paper_sets(papers, universe.size() - 1, universe, current, paper_sets);

    std::vector<TimePartitionedRecord> out;
    out.reserve(paper_sets.size());
    for (const auto& paper_set : paper_sets) {
        TimePartitionedRecord record;
        record.periods.assign(periods, CitationRecord(papers, 0));
        for (std::size_t paper = 0; paper < papers; ++paper) {
            const PaperVector& vec = universe[paper_set[paper]];
            for (std::size_t period = 0; period < periods; ++period) {
                record.periods[period][paper] = vec[period];
            }
        }
        out.push_back(std::move(record));
    }
    return out;
}

std::vector<Counterexample> find_counterexamples_serial(IndicatorKind kind,
                                                        const SearchBounds& bounds) {
    const SearchPlan plan = make_plan(kind, bounds);
    std::vector<Counterexample> out;
    if (!plan.improvements.empty()) {
        scan_improvements_serial(plan, bounds, out);
    }
    if (plan.aggregation) {
        scan_aggregation_serial(plan, bounds, out);
    }
    sort_canonically(out);
    return out;
}

std::vector<Counterexample> find_counterexamples(IndicatorKind kind, const SearchBounds& bounds) {
    const SearchPlan plan = make_plan(kind, bounds);
    std::vector<Counterexample> out;
    if (!plan.improvements.empty()) {
        scan_improvements_parallel(plan, bounds, out);
    }
    if (plan.aggregation) {
        scan_aggregation_parallel(plan, bounds, out);
    }
    sort_canonically(out);
    return out;
}

std::vector<Counterexample> minimal_counterexamples(const std::vector<Counterexample>& results) {
    // Pareto frontier over the (papers, citations) sizes actually present.
    std::map<std::size_t, Count> min_citations_by_papers;
    for (const Counterexample& cx : results) {
        auto [it, inserted] =
            min_citations_by_papers.try_emplace(cx.size.papers, cx.size.citations);
        if (!inserted && cx.size.citations < it->second) {
            it->second = cx.size.citations;
        }
    }

    std::vector<Counterexample> kept;
    for (const Counterexample& cx : results) {
        bool dominated = cx.size.citations > min_citations_by_papers[cx.size.papers];
        for (auto it = min_citations_by_papers.begin();
             !dominated && it != min_citations_by_papers.end() && it->first < cx.size.papers;
             ++it) {
            if (it->second <= cx.size.citations) {
                dominated = true;
            }
        }
        if (!dominated) {
            kept.push_back(cx);
        }
    }
    return kept;
}

bool counterexample_less(const Counterexample& lhs, const Counterexample& rhs) {
    return sort_key(lhs) < sort_key(rhs);
}

}  // namespace citax

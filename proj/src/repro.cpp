#include "citax/repro.hpp"

#include <algorithm>
#include <stdexcept>

namespace citax {

namespace {

Scenario original() { return Scenario{"O", Scenario::Kind::Original, AbsoluteImprovement{0}, 0}; }

Scenario relative(std::string label, Count num, Count den) {
    return Scenario{std::move(label), Scenario::Kind::Transform,
                    RelativeImprovement{Ratio{num, den}, RoundingMode::Strict}, 0};
}

Scenario absolute(std::string label, Count delta) {
    return Scenario{std::move(label), Scenario::Kind::Transform, AbsoluteImprovement{delta}, 0};
}

Scenario period(std::string label, std::size_t index) {
    return Scenario{std::move(label), Scenario::Kind::Period, AbsoluteImprovement{0}, index};
}

Scenario aggregate() {
    return Scenario{"both", Scenario::Kind::Aggregate, AbsoluteImprovement{0}, 0};
}

// Expands (value, multiplicity) groups into an explicit record and verifies
// the expansion against the claimed totals.
CitationRecord expand_groups(const std::vector<std::pair<Count, std::size_t>>& groups,
                             Count expected_papers, Count expected_citations) {
    CitationRecord record;
    for (const auto& [value, multiplicity] : groups) {
        record.insert(record.end(), multiplicity, value);
    }
    if (paper_count(record) != expected_papers || total_citations(record) != expected_citations) {
        throw std::logic_error("fixture group expansion mismatch");
    }
    return record;
}

Fixture table1() {
    Fixture f;
    f.name = "T1";
    f.title = "two scientists, HCP count under doubling and +5";
    f.indicator = IndicatorSpec::hcp(Threshold(10));
    f.labels = {"V", "W"};
    f.records = {{10, 0}, {5, 5}};
    f.scenarios = {original(), relative("R", 2, 1), absolute("A", 5)};
    f.expected = {{1, 1, 1}, {0, 2, 2}};
    return f;
}

Fixture table2() {
    Fixture f;
    f.name = "T2";
    f.title = "per-group citation values under all improvements";
    f.indicator = IndicatorSpec::total_citations();
    f.labels = {"E", "G", "M", "B", "P"};
    f.records = {{15}, {12}, {9}, {6}, {3}};
    f.scenarios = {original(), relative("R1", 4, 3), relative("R2", 5, 3), absolute("A1", 3),
                   absolute("A2", 6)};
    f.expected = {{15, 20, 25, 18, 21},
                  {12, 16, 20, 15, 18},
                  {9, 12, 15, 12, 15},
                  {6, 8, 10, 9, 12},
                  {3, 4, 5, 6, 9}};
    return f;
}

Fixture table3() {
    Fixture f;
    f.name = "T3";
    f.title = "three scientists, HCP count and rank under all improvements";
    f.indicator = IndicatorSpec::hcp(Threshold(10));
    f.labels = {"X", "Y", "Z"};
    // Group values excellent..poor = 15/12/9/6/3; every scientist has 12
    // papers and 108 citations in total.
    f.records = {
        expand_groups({{12, 4}, {9, 4}, {6, 4}}, 12, 108),
        expand_groups({{15, 1}, {12, 2}, {9, 6}, {6, 2}, {3, 1}}, 12, 108),
        expand_groups({{15, 2}, {9, 8}, {3, 2}}, 12, 108),
    };
    f.scenarios = {original(), relative("R1", 4, 3), relative("R2", 5, 3), absolute("A1", 3),
                   absolute("A2", 6)};
    f.expected = {{4, 8, 12, 8, 12}, {3, 9, 11, 9, 11}, {2, 10, 10, 10, 10}};
    f.rank_columns = {RankColumn{"O", {0}}, RankColumn{"R1/A1", {1, 3}},
                      RankColumn{"R2/A2", {2, 4}}};
    f.expected_ranks = {{1, 3, 1}, {2, 2, 2}, {3, 1, 3}};
    return f;
}

Fixture table4() {
    Fixture f;
    f.name = "T4";
    f.title = "two scientists, h-index under doubling and +2";
    f.indicator = IndicatorSpec::h_index();
    f.labels = {"P", "Q"};
    f.records = {{3, 3, 3, 0}, {3, 2, 2, 2}};
    f.scenarios = {original(), relative("R", 2, 1), absolute("A", 2)};
    f.expected = {{3, 3, 3}, {2, 4, 4}};
    return f;
}

Fixture table5() {
    Fixture f;
    f.name = "T5";
    f.title = "two scientists, HCP count per year and aggregated";
    f.indicator = IndicatorSpec::hcp(Threshold(10));
    f.partitioned = true;
    f.labels = {"V", "W"};
    f.partitions = {
        TimePartitionedRecord{{{10, 0}, {10, 0}}},
        TimePartitionedRecord{{{5, 5}, {5, 5}}},
    };
    f.scenarios = {period("year1", 0), period("year2", 1), aggregate()};
    f.expected = {{1, 1, 1}, {0, 0, 2}};
    return f;
}

Fixture table6() {
    Fixture f;
    f.name = "T6";
    f.title = "three scientists, HCP count per year and aggregated";
    f.indicator = IndicatorSpec::hcp(Threshold(10));
    f.partitioned = true;
    f.labels = {"S", "T", "U"};
    f.partitions = {
        TimePartitionedRecord{{{5, 5, 5, 5}, {5, 5, 5, 5}}},
        TimePartitionedRecord{{{10, 5, 5, 0}, {5, 10, 5, 0}}},
        TimePartitionedRecord{{{10, 10, 0, 0}, {10, 10, 0, 0}}},
    };
    f.scenarios = {period("year1", 0), period("year2", 1), aggregate()};
    f.expected = {{0, 0, 4}, {1, 1, 3}, {2, 2, 2}};
    return f;
}

Fixture table7() {
    Fixture f;
    f.name = "T7";
    f.title = "two scientists, h-index per year and aggregated";
    f.indicator = IndicatorSpec::h_index();
    f.partitioned = true;
    f.labels = {"P", "Q"};
    f.partitions = {
        TimePartitionedRecord{{{3, 3, 3, 0}, {3, 3, 3, 0}}},
        TimePartitionedRecord{{{3, 2, 2, 2}, {3, 2, 2, 2}}},
    };
    f.scenarios = {period("year1", 0), period("year2", 1), aggregate()};
    f.expected = {{3, 3, 3}, {2, 2, 4}};
    return f;
}

Count scenario_value(const Fixture& fixture, std::size_t scientist, const Scenario& scenario) {
    switch (scenario.kind) {
        case Scenario::Kind::Original:
            return evaluate(fixture.indicator, fixture.records[scientist]);
        case Scenario::Kind::Transform:
            return evaluate(fixture.indicator,
                            apply_improvement(scenario.improvement, fixture.records[scientist]));
        case Scenario::Kind::Period:
            return evaluate(fixture.indicator,
                            fixture.partitions[scientist].periods[scenario.period]);
        case Scenario::Kind::Aggregate:
            return evaluate(fixture.indicator,
                            aggregate_periods(fixture.partitions[scientist]));
    }
    throw std::logic_error("unknown scenario kind");
}

}  // namespace

bool FixtureReport::passed() const {
    if (!error.empty()) return false;
    return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.pass; }) &&
           std::all_of(ranks.begin(), ranks.end(), [](const RankResult& r) { return r.pass; });
}

std::vector<Fixture> builtin_fixtures() {
    return {table1(), table2(), table3(), table4(), table5(), table6(), table7()};
}

FixtureReport run_fixture(const Fixture& fixture) {
    FixtureReport report;
    report.fixture = fixture.name;

    const std::size_t scientists = fixture.labels.size();
    const std::size_t scenarios = fixture.scenarios.size();

    std::vector<std::vector<Count>> computed(scientists, std::vector<Count>(scenarios, 0));
    try {
        for (std::size_t s = 0; s < scientists; ++s) {
            for (std::size_t c = 0; c < scenarios; ++c) {
                computed[s][c] = scenario_value(fixture, s, fixture.scenarios[c]);
            }
        }
    } catch (const std::exception& e) {
        report.error = e.what();
        return report;
    }

    for (std::size_t s = 0; s < scientists; ++s) {
        for (std::size_t c = 0; c < scenarios; ++c) {
            report.cells.push_back(CellResult{
                fixture.labels[s],
                fixture.scenarios[c].label,
                fixture.expected[s][c],
                computed[s][c],
                computed[s][c] == fixture.expected[s][c],
            });
        }
    }

    // Competition rank within one scenario: 1 + number of strictly better
    // scientists.
    auto rank_of = [&](std::size_t s, std::size_t c) {
        std::size_t rank = 1;
        for (std::size_t t = 0; t < scientists; ++t) {
            if (computed[t][c] > computed[s][c]) ++rank;
        }
        return rank;
    };

    for (std::size_t column = 0; column < fixture.rank_columns.size(); ++column) {
        const RankColumn& rc = fixture.rank_columns[column];
        for (std::size_t s = 0; s < scientists; ++s) {
            const std::size_t rank = rank_of(s, rc.scenarios.front());
            bool agree = true;
            for (std::size_t c : rc.scenarios) {
                agree = agree && rank_of(s, c) == rank;
            }
            report.ranks.push_back(RankResult{
                fixture.labels[s],
                rc.label,
                fixture.expected_ranks[s][column],
                rank,
                agree && rank == fixture.expected_ranks[s][column],
            });
        }
    }
    return report;
}

RecordDocument to_document(const Fixture& fixture) {
    RecordDocument document;
    if (fixture.indicator.kind() == IndicatorKind::HcpCount) {
        document.threshold = fixture.indicator.threshold().value();
    }
    for (std::size_t s = 0; s < fixture.labels.size(); ++s) {
        ScientistEntry entry;
        entry.name = fixture.labels[s];
        if (fixture.partitioned) {
            entry.partitioned = true;
            entry.periods = fixture.partitions[s].periods;
        } else {
            entry.partitioned = false;
            entry.periods = {fixture.records[s]};
        }
        document.scientists.push_back(std::move(entry));
    }
    return document;
}

}  // namespace citax

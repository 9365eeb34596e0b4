#include "citax/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "citax/axioms.hpp"
#include "citax/core.hpp"
#include "citax/document.hpp"
#include "citax/repro.hpp"
#include "citax/search.hpp"
#include "citax/transforms.hpp"

namespace citax {

namespace {

using nlohmann::json;

enum class Format { Table, Records };

Format resolve_format(const std::string& flag, bool out_is_terminal) {
    if (flag == "table") return Format::Table;
    if (flag == "records") return Format::Records;
    return out_is_terminal ? Format::Table : Format::Records;
}

/// Two-space separated columns sized to their longest cell.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

/// Command-line relative factors are integer fractions ("4/3"), never
/// decimals; a bare integer means a whole-number factor.
Ratio parse_ratio(const std::string& text) {
    auto part = [&](const std::string& digits) -> Count {
        if (digits.empty() || digits.size() > 18 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](unsigned char ch) { return std::isdigit(ch); })) {
            throw std::invalid_argument("invalid relative factor '" + text +
                                        "' (expected an integer fraction like 4/3)");
        }
        return std::stoull(digits);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Ratio{part(text), 1};
    }
    return Ratio{part(text.substr(0, slash)), part(text.substr(slash + 1))};
}

IndicatorKind kind_from_token(const std::string& token) {
    if (token == "hcp") return IndicatorKind::HcpCount;
    if (token == "h") return IndicatorKind::HIndex;
    if (token == "total-citations") return IndicatorKind::TotalCitations;
    if (token == "paper-count") return IndicatorKind::PaperCount;
    throw std::invalid_argument("unknown indicator '" + token + "'");
}

IndicatorSpec make_spec(IndicatorKind kind, std::optional<Count> threshold) {
    switch (kind) {
        case IndicatorKind::HcpCount:
            if (!threshold) {
                throw std::invalid_argument(
                    "indicator 'hcp' needs a threshold (--threshold or a document threshold)");
            }
            return IndicatorSpec::hcp(Threshold(*threshold));
        case IndicatorKind::HIndex:
            return IndicatorSpec::h_index();
        case IndicatorKind::TotalCitations:
            return IndicatorSpec::total_citations();
        case IndicatorKind::PaperCount:
            return IndicatorSpec::paper_count();
    }
    throw std::logic_error("unknown indicator kind");
}

std::string property_token(ConsistencyProperty property) {
    switch (property) {
        case ConsistencyProperty::RelativeImprovement: return "relative";
        case ConsistencyProperty::AbsoluteImprovement: return "absolute";
        case ConsistencyProperty::Aggregation: return "aggregation";
    }
    throw std::logic_error("unknown property");
}

ConsistencyProperty property_from_token(const std::string& token) {
    if (token == "relative") return ConsistencyProperty::RelativeImprovement;
    if (token == "absolute") return ConsistencyProperty::AbsoluteImprovement;
    if (token == "aggregation") return ConsistencyProperty::Aggregation;
    throw std::invalid_argument("unknown property '" + token + "'");
}

std::string severity_token(Severity severity) {
    return severity == Severity::StrictReversal ? "strict-reversal" : "weakening";
}

std::string ratio_label(Ratio ratio) {
    return std::to_string(ratio.num) + "/" + std::to_string(ratio.den);
}

std::string improvement_label(const Improvement& improvement) {
    if (const auto* rel = std::get_if<RelativeImprovement>(&improvement)) {
        return "relative " + ratio_label(rel->factor);
    }
    return "absolute " + std::to_string(std::get<AbsoluteImprovement>(improvement).delta);
}

json improvement_json(const Improvement& improvement) {
    json j;
    if (const auto* rel = std::get_if<RelativeImprovement>(&improvement)) {
        j["type"] = "relative";
        j["factor"] = ratio_label(rel->factor);
        j["rounding"] = rel->rounding == RoundingMode::Floor ? "floor" : "strict";
    } else {
        j["type"] = "absolute";
        j["delta"] = std::get<AbsoluteImprovement>(improvement).delta;
    }
    return j;
}

json value_pair_json(const ValuePair& values) { return json::array({values.a, values.b}); }

json report_json(const ViolationReport& report) {
    json j;
    j["property"] = property_token(report.property);
    j["indicator"] = indicator_token(report.indicator.kind());
    if (report.indicator.kind() == IndicatorKind::HcpCount) {
        j["threshold"] = report.indicator.threshold().value();
    }
    j["severity"] = severity_token(report.severity);
    if (const auto* evidence = std::get_if<ImprovementEvidence>(&report.evidence)) {
        j["record_a"] = evidence->record_a;
        j["record_b"] = evidence->record_b;
        j["improvement"] = improvement_json(evidence->improvement);
        j["before"] = value_pair_json(evidence->before);
        j["after"] = value_pair_json(evidence->after);
        j["inexact_rounding"] = evidence->inexact_rounding;
    } else {
        const auto& aggregation = std::get<AggregationEvidence>(report.evidence);
        j["periods_a"] = aggregation.record_a.periods;
        j["periods_b"] = aggregation.record_b.periods;
        json per_period = json::array();
        for (const ValuePair& values : aggregation.per_period) {
            per_period.push_back(value_pair_json(values));
        }
        j["per_period"] = per_period;
        j["aggregated"] = value_pair_json(aggregation.aggregated);
    }
    return j;
}

std::string format_partitions(const TimePartitionedRecord& record) {
    std::string text = "[";
    for (std::size_t k = 0; k < record.periods.size(); ++k) {
        if (k > 0) text += ",";
        text += format_record(record.periods[k]);
    }
    return text + "]";
}

/// "1>0" / "1=1" / "0<2": values with their order spelled out.
std::string format_pair(const ValuePair& values) {
    const char* sign = values.a > values.b ? ">" : values.a < values.b ? "<" : "=";
    return std::to_string(values.a) + sign + std::to_string(values.b);
}

std::string format_per_period(const std::vector<ValuePair>& per_period) {
    std::string text;
    for (std::size_t k = 0; k < per_period.size(); ++k) {
        if (k > 0) text += ",";
        text += format_pair(per_period[k]);
    }
    return text;
}

// ---------------------------------------------------------------------------
// compute

int cmd_compute(const std::string& input, IndicatorKind kind, std::optional<Count> threshold_flag,
                Format format, std::ostream& out) {
    const RecordDocument document = load_document(input);
    const std::optional<Count> threshold = threshold_flag ? threshold_flag : document.threshold;
    const IndicatorSpec spec = make_spec(kind, threshold);

    std::size_t period_count = 0;
    for (const ScientistEntry& scientist : document.scientists) {
        if (scientist.partitioned) {
            period_count = std::max(period_count, scientist.periods.size());
        }
    }

    if (format == Format::Records) {
        for (const ScientistEntry& scientist : document.scientists) {
            json j;
            j["name"] = scientist.name;
            if (scientist.partitioned) {
                json periods = json::array();
                for (const CitationRecord& period : scientist.periods) {
                    periods.push_back(evaluate(spec, period));
                }
                j["periods"] = periods;
                j["value"] = evaluate(spec, aggregate_periods(scientist.partitions()));
            } else {
                j["value"] = evaluate(spec, scientist.flat());
            }
            out << j.dump() << '\n';
        }
        return 0;
    }

    std::vector<std::string> header{"name"};
    if (period_count > 0) {
        for (std::size_t k = 0; k < period_count; ++k) {
            header.push_back("period " + std::to_string(k + 1));
        }
        header.push_back("aggregate");
    } else {
        header.push_back("value");
    }

    std::vector<std::vector<std::string>> rows;
    for (const ScientistEntry& scientist : document.scientists) {
        std::vector<std::string> row{scientist.name};
        if (scientist.partitioned) {
            for (const CitationRecord& period : scientist.periods) {
                row.push_back(std::to_string(evaluate(spec, period)));
            }
            row.resize(1 + period_count, "-");
            row.push_back(std::to_string(evaluate(spec, aggregate_periods(scientist.partitions()))));
        } else {
            row.resize(1 + period_count, "-");
            row.push_back(std::to_string(evaluate(spec, scientist.flat())));
        }
        rows.push_back(std::move(row));
    }
    print_table(out, header, rows);
    return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckRow {
    std::string name_a;
    std::string name_b;
    std::string status;  // preserved | vacuous | weakening | strict-reversal
    std::optional<ViolationReport> report;
    // Display values, oriented like the report when one exists.
    std::vector<ValuePair> before;  // one entry, or one per period
    ValuePair after;
};

int check_improvements(const RecordDocument& document, const IndicatorSpec& spec,
                       ConsistencyProperty property, const std::vector<Improvement>& improvements,
                       Format format, std::ostream& out) {
    for (const ScientistEntry& scientist : document.scientists) {
        if (scientist.partitioned) {
            throw DocumentError("improvement checks require flat records (scientist '" +
                                scientist.name + "' has periods)");
        }
    }

    bool any_reversal = false;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < document.scientists.size(); ++i) {
        for (std::size_t j = i + 1; j < document.scientists.size(); ++j) {
            const ScientistEntry& a = document.scientists[i];
            const ScientistEntry& b = document.scientists[j];
            for (const Improvement& improvement : improvements) {
                ValuePair before{evaluate(spec, a.flat()), evaluate(spec, b.flat())};
                ValuePair after{evaluate(spec, apply_improvement(improvement, a.flat())),
                                evaluate(spec, apply_improvement(improvement, b.flat()))};
                std::optional<ViolationReport> report =
                    check_improvement_consistency(spec, a.flat(), b.flat(), improvement);

                std::string name_a = a.name;
                std::string name_b = b.name;
                std::string status = "preserved";
                bool inexact = false;
                if (report) {
                    any_reversal = any_reversal || report->severity == Severity::StrictReversal;
                    status = severity_token(report->severity);
                    inexact = std::get<ImprovementEvidence>(report->evidence).inexact_rounding;
                    if (before.b > before.a) {
                        std::swap(name_a, name_b);
                        std::swap(before.a, before.b);
                        std::swap(after.a, after.b);
                        *report = swapped_sides(std::move(*report));
                    }
                }

                if (format == Format::Records) {
                    json j;
                    j["a"] = name_a;
                    j["b"] = name_b;
                    j["status"] = status;
                    j["property"] = property_token(property);
                    j["indicator"] = indicator_token(spec.kind());
                    if (spec.kind() == IndicatorKind::HcpCount) {
                        j["threshold"] = spec.threshold().value();
                    }
                    j["improvement"] = improvement_json(improvement);
                    j["before"] = value_pair_json(before);
                    j["after"] = value_pair_json(after);
                    j["inexact_rounding"] = inexact;
                    out << j.dump() << '\n';
                } else {
                    rows.push_back({"(" + name_a + "," + name_b + ")",
                                    improvement_label(improvement), format_pair(before),
                                    format_pair(after),
                                    inexact ? status + " (inexact rounding)" : status});
                }
            }
        }
    }

    if (format == Format::Table) {
        print_table(out, {"pair", "improvement", "before", "after", "status"}, rows);
    }
    return any_reversal ? 1 : 0;
}

int check_aggregation(const RecordDocument& document, const IndicatorSpec& spec, Format format,
                      std::ostream& out) {
    for (const ScientistEntry& scientist : document.scientists) {
        if (!scientist.partitioned) {
            throw DocumentError("aggregation checks require per-period records (scientist '" +
                                scientist.name + "' is flat)");
        }
    }

    bool any_reversal = false;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < document.scientists.size(); ++i) {
        for (std::size_t j = i + 1; j < document.scientists.size(); ++j) {
            const ScientistEntry& a = document.scientists[i];
            const ScientistEntry& b = document.scientists[j];

            std::vector<ValuePair> per_period;
            for (std::size_t k = 0; k < a.periods.size(); ++k) {
                per_period.push_back(
                    ValuePair{evaluate(spec, a.periods[k]), evaluate(spec, b.periods[k])});
            }
            ValuePair aggregated{evaluate(spec, aggregate_periods(a.partitions())),
                                 evaluate(spec, aggregate_periods(b.partitions()))};

            std::optional<ViolationReport> report =
                check_aggregation_consistency(spec, a.partitions(), b.partitions());

            const bool premise_held =
                std::all_of(per_period.begin(), per_period.end(),
                            [](const ValuePair& v) { return v.a > v.b; }) ||
                std::all_of(per_period.begin(), per_period.end(),
                            [](const ValuePair& v) { return v.b > v.a; });

            std::string name_a = a.name;
            std::string name_b = b.name;
            std::string status = premise_held ? "preserved" : "vacuous";
            if (report) {
                any_reversal = any_reversal || report->severity == Severity::StrictReversal;
                status = severity_token(report->severity);
                if (per_period.front().b > per_period.front().a) {
                    std::swap(name_a, name_b);
                    for (ValuePair& values : per_period) std::swap(values.a, values.b);
                    std::swap(aggregated.a, aggregated.b);
                    *report = swapped_sides(std::move(*report));
                }
            }

            if (format == Format::Records) {
                json j;
                j["a"] = name_a;
                j["b"] = name_b;
                j["status"] = status;
                j["property"] = "aggregation";
                j["indicator"] = indicator_token(spec.kind());
                if (spec.kind() == IndicatorKind::HcpCount) {
                    j["threshold"] = spec.threshold().value();
                }
                json periods = json::array();
                for (const ValuePair& values : per_period) {
                    periods.push_back(value_pair_json(values));
                }
                j["per_period"] = periods;
                j["aggregated"] = value_pair_json(aggregated);
                out << j.dump() << '\n';
            } else {
                rows.push_back({"(" + name_a + "," + name_b + ")", "aggregation",
                                format_per_period(per_period), format_pair(aggregated), status});
            }
        }
    }

    if (format == Format::Table) {
        print_table(out, {"pair", "improvement", "before", "after", "status"}, rows);
    }
    return any_reversal ? 1 : 0;
}

int cmd_check(const std::string& input, IndicatorKind kind, std::optional<Count> threshold_flag,
              const std::string& property_token_text, const std::vector<std::string>& relatives,
              const std::vector<Count>& absolutes, RoundingMode rounding, Format format,
              std::ostream& out) {
    const RecordDocument document = load_document(input);
    const std::optional<Count> threshold = threshold_flag ? threshold_flag : document.threshold;
    const IndicatorSpec spec = make_spec(kind, threshold);
    const ConsistencyProperty property = property_from_token(property_token_text);

    if (property == ConsistencyProperty::Aggregation) {
        if (!relatives.empty() || !absolutes.empty()) {
            throw std::invalid_argument("--relative/--absolute are not valid with aggregation");
        }
        return check_aggregation(document, spec, format, out);
    }

    std::vector<Improvement> improvements;
    if (property == ConsistencyProperty::RelativeImprovement) {
        if (!absolutes.empty()) {
            throw std::invalid_argument("--absolute is only valid with --property absolute");
        }
        if (relatives.empty()) {
            throw std::invalid_argument("no relative factors given (use --relative p/q)");
        }
        for (const std::string& text : relatives) {
            improvements.push_back(RelativeImprovement{parse_ratio(text), rounding});
        }
    } else {
        if (!relatives.empty()) {
            throw std::invalid_argument("--relative is only valid with --property relative");
        }
        if (absolutes.empty()) {
            throw std::invalid_argument("no absolute deltas given (use --absolute d)");
        }
        for (Count delta : absolutes) {
            improvements.push_back(AbsoluteImprovement{delta});
        }
    }
    return check_improvements(document, spec, property, improvements, format, out);
}

// ---------------------------------------------------------------------------
// search

int cmd_search(IndicatorKind kind, const std::vector<Count>& thresholds, std::size_t max_papers,
               Count max_citations, const std::vector<std::string>& relatives,
               const std::vector<Count>& absolutes, const std::vector<std::string>& properties,
               std::size_t max_periods, bool include_weakenings, bool minimal_only, bool serial,
               Format format, std::ostream& out) {
    SearchBounds bounds;
    bounds.max_papers = max_papers;
    bounds.max_citations = max_citations;
    bounds.max_periods = max_periods;
    bounds.include_weakenings = include_weakenings;
    for (const std::string& text : relatives) {
        bounds.improvements.push_back(RelativeImprovement{parse_ratio(text), RoundingMode::Floor});
    }
    for (Count delta : absolutes) {
        bounds.improvements.push_back(AbsoluteImprovement{delta});
    }
    for (Count value : thresholds) {
        bounds.thresholds.push_back(Threshold(value));
    }
    if (properties.empty()) {
        // Default to the properties the improvement grid can exercise;
        // aggregation runs only when requested explicitly.
        if (!relatives.empty()) bounds.properties.insert(ConsistencyProperty::RelativeImprovement);
        if (!absolutes.empty()) bounds.properties.insert(ConsistencyProperty::AbsoluteImprovement);
    } else {
        for (const std::string& token : properties) {
            bounds.properties.insert(property_from_token(token));
        }
    }

    std::vector<Counterexample> results =
        serial ? find_counterexamples_serial(kind, bounds) : find_counterexamples(kind, bounds);
    if (minimal_only) {
        results = minimal_counterexamples(results);
    }

    if (format == Format::Records) {
        for (const Counterexample& cx : results) {
            json j = report_json(cx.report);
            j["papers"] = cx.size.papers;
            j["citations"] = cx.size.citations;
            out << j.dump() << '\n';
        }
        return results.empty() ? 0 : 1;
    }

    std::vector<std::vector<std::string>> rows;
    for (const Counterexample& cx : results) {
        std::vector<std::string> row{std::to_string(cx.size.papers),
                                     std::to_string(cx.size.citations),
                                     indicator_token(cx.report.indicator.kind())};
        if (cx.report.indicator.kind() == IndicatorKind::HcpCount) {
            row.back() += "(" + std::to_string(cx.report.indicator.threshold().value()) + ")";
        }
        if (const auto* evidence = std::get_if<ImprovementEvidence>(&cx.report.evidence)) {
            row.push_back(improvement_label(evidence->improvement));
            row.push_back(format_record(evidence->record_a) + " vs " +
                          format_record(evidence->record_b));
            row.push_back(format_pair(evidence->before));
            row.push_back(format_pair(evidence->after));
            row.push_back(evidence->inexact_rounding
                              ? severity_token(cx.report.severity) + " (inexact rounding)"
                              : severity_token(cx.report.severity));
        } else {
            const auto& aggregation = std::get<AggregationEvidence>(cx.report.evidence);
            row.push_back("aggregation");
            row.push_back(format_partitions(aggregation.record_a) + " vs " +
                          format_partitions(aggregation.record_b));
            row.push_back(format_per_period(aggregation.per_period));
            row.push_back(format_pair(aggregation.aggregated));
            row.push_back(severity_token(cx.report.severity));
        }
        rows.push_back(std::move(row));
    }
    if (!rows.empty()) {
        print_table(out, {"papers", "citations", "indicator", "improvement", "records", "before",
                          "after", "severity"},
                    rows);
    }
    out << (results.empty() ? std::string("no counterexamples within bounds")
                            : std::to_string(results.size()) + " counterexample" +
                                  (results.size() == 1 ? "" : "s"))
        << '\n';
    return results.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// repro

int cmd_repro(const std::string& selector, Format format, std::ostream& out) {
    std::vector<Fixture> fixtures = builtin_fixtures();
    if (selector != "all") {
        auto it = std::find_if(fixtures.begin(), fixtures.end(),
                               [&](const Fixture& f) { return f.name == selector; });
        if (it == fixtures.end()) {
            throw std::invalid_argument("unknown fixture '" + selector + "' (expected T1..T7 or all)");
        }
        fixtures = {*it};
    }

    bool all_passed = true;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> failure_lines;
    std::size_t passed_count = 0;

    for (const Fixture& fixture : fixtures) {
        const FixtureReport report = run_fixture(fixture);
        all_passed = all_passed && report.passed();
        passed_count += report.passed() ? 1 : 0;

        if (format == Format::Records) {
            json j;
            j["fixture"] = report.fixture;
            j["title"] = fixture.title;
            j["passed"] = report.passed();
            j["value_cells"] = report.cells.size();
            j["rank_cells"] = report.ranks.size();
            json failures = json::array();
            for (const CellResult& cell : report.cells) {
                if (cell.pass) continue;
                failures.push_back({{"kind", "value"},
                                    {"scientist", cell.scientist},
                                    {"scenario", cell.scenario},
                                    {"expected", cell.expected},
                                    {"computed", cell.computed}});
            }
            for (const RankResult& rank : report.ranks) {
                if (rank.pass) continue;
                failures.push_back({{"kind", "rank"},
                                    {"scientist", rank.scientist},
                                    {"scenario", rank.scenario},
                                    {"expected", rank.expected},
                                    {"computed", rank.computed}});
            }
            j["failures"] = failures;
            if (!report.error.empty()) j["error"] = report.error;
            out << j.dump() << '\n';
            continue;
        }

        std::string cells_text = std::to_string(report.cells.size()) + " value";
        if (!report.ranks.empty()) {
            cells_text += " + " + std::to_string(report.ranks.size()) + " rank";
        }
        cells_text += (report.cells.size() + report.ranks.size() == 1) ? " cell" : " cells";
        rows.push_back({report.fixture, report.passed() ? "pass" : "FAIL", cells_text,
                        fixture.title});

        if (!report.error.empty()) {
            failure_lines.push_back(report.fixture + ": error: " + report.error);
        }
        for (const CellResult& cell : report.cells) {
            if (cell.pass) continue;
            failure_lines.push_back(report.fixture + ": value " + cell.scientist + "/" +
                                    cell.scenario + " expected " + std::to_string(cell.expected) +
                                    " got " + std::to_string(cell.computed));
        }
        for (const RankResult& rank : report.ranks) {
            if (rank.pass) continue;
            failure_lines.push_back(report.fixture + ": rank " + rank.scientist + "/" +
                                    rank.scenario + " expected " + std::to_string(rank.expected) +
                                    " got " + std::to_string(rank.computed));
        }
    }

    if (format == Format::Table) {
        print_table(out, {"fixture", "status", "cells", "description"}, rows);
        for (const std::string& line : failure_lines) out << line << '\n';
        out << passed_count << "/" << fixtures.size() << " fixtures passed\n";
    }
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// export-fixtures

int cmd_export_fixtures(const std::string& out_dir, std::ostream& out) {
    std::filesystem::create_directories(out_dir);
    const std::vector<Fixture> fixtures = builtin_fixtures();
    for (const Fixture& fixture : fixtures) {
        const std::string path =
            (std::filesystem::path(out_dir) / (fixture.name + ".json")).string();
        std::ofstream file(path);
        if (!file) {
            throw DocumentError("cannot write '" + path + "'");
        }
        file << serialize_document(to_document(fixture));
    }
    out << "wrote " << fixtures.size() << " fixture documents to " << out_dir << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_terminal) {
    CLI::App app{"Citation-indicator consistency toolkit: evaluates indicators over citation"
                 " records, checks ranking-consistency properties, and searches bounded record"
                 " spaces for counterexamples."};
    app.name("citax");
    app.require_subcommand(1);

    static const std::vector<std::string> kIndicators{"hcp", "h", "total-citations",
                                                      "paper-count"};
    static const std::vector<std::string> kProperties{"relative", "absolute", "aggregation"};
    static const std::vector<std::string> kFormats{"table", "records"};

    int exit_code = 0;

    // compute -----------------------------------------------------------
    std::string compute_input;
    std::string compute_indicator;
    Count compute_threshold = 0;
    std::string compute_format;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate an indicator for every scientist");
    compute->add_option("input", compute_input, "record document (JSON)")->required();
    compute->add_option("--indicator", compute_indicator, "indicator to evaluate")
        ->required()
        ->check(CLI::IsMember(kIndicators));
    CLI::Option* compute_threshold_opt = compute->add_option(
        "--threshold", compute_threshold, "HCP threshold (overrides the document value)");
    compute->add_option("--format", compute_format, "output format")
        ->check(CLI::IsMember(kFormats));
    compute->callback([&] {
        exit_code = cmd_compute(compute_input, kind_from_token(compute_indicator),
                                compute_threshold_opt->count() > 0
                                    ? std::optional<Count>(compute_threshold)
                                    : std::nullopt,
                                resolve_format(compute_format, out_is_terminal), out);
    });

    // check ---------------------------------------------------------------
    std::string check_input;
    std::string check_indicator;
    std::string check_property;
    Count check_threshold = 0;
    std::vector<std::string> check_relatives;
    std::vector<Count> check_absolutes;
    std::string check_rounding = "strict";
    std::string check_format;
    CLI::App* check =
        app.add_subcommand("check", "Check a consistency property over all scientist pairs");
    check->add_option("input", check_input, "record document (JSON)")->required();
    check->add_option("--indicator", check_indicator, "indicator to rank by")
        ->required()
        ->check(CLI::IsMember(kIndicators));
    check->add_option("--property", check_property, "consistency property to check")
        ->required()
        ->check(CLI::IsMember(kProperties));
    CLI::Option* check_threshold_opt = check->add_option(
        "--threshold", check_threshold, "HCP threshold (overrides the document value)");
    check->add_option("--relative", check_relatives,
                      "relative improvement factor p/q (repeatable)")
        ->allow_extra_args(false);
    check->add_option("--absolute", check_absolutes, "absolute improvement delta (repeatable)")
        ->allow_extra_args(false);
    check->add_option("--rounding", check_rounding,
                      "how to treat inexact relative improvements: reject (strict) or round down")
        ->check(CLI::IsMember({"strict", "floor"}));
    check->add_option("--format", check_format, "output format")->check(CLI::IsMember(kFormats));
    check->callback([&] {
        exit_code = cmd_check(check_input, kind_from_token(check_indicator),
                              check_threshold_opt->count() > 0
                                  ? std::optional<Count>(check_threshold)
                                  : std::nullopt,
                              check_property, check_relatives, check_absolutes,
                              check_rounding == "floor" ? RoundingMode::Floor
                                                        : RoundingMode::Strict,
                              resolve_format(check_format, out_is_terminal), out);
    });

    // search --------------------------------------------------------------
    std::string search_indicator;
    std::vector<Count> search_thresholds;
    std::size_t search_max_papers = 0;
    Count search_max_citations = 0;
    std::vector<std::string> search_relatives;
    std::vector<Count> search_absolutes;
    std::vector<std::string> search_properties;
    std::size_t search_max_periods = 2;
    bool search_include_weakenings = false;
    bool search_minimal = false;
    bool search_serial = false;
    std::string search_format;
    CLI::App* search = app.add_subcommand(
        "search", "Exhaustively search bounded record spaces for counterexamples");
    search->add_option("--indicator", search_indicator, "indicator to search")
        ->required()
        ->check(CLI::IsMember(kIndicators));
    search->add_option("--threshold", search_thresholds, "HCP threshold to sweep (repeatable)")
        ->allow_extra_args(false);
    search->add_option("--max-papers", search_max_papers, "largest record length")->required();
    search->add_option("--max-citations", search_max_citations, "largest per-paper citation count")
        ->required();
    search->add_option("--relative", search_relatives,
                       "relative improvement factor p/q (repeatable, floor rounding)")
        ->allow_extra_args(false);
    search->add_option("--absolute", search_absolutes, "absolute improvement delta (repeatable)")
        ->allow_extra_args(false);
    search->add_option("--property", search_properties,
                       "property to search (repeatable; default: inferred from the improvements)")
        ->allow_extra_args(false)
        ->check(CLI::IsMember(kProperties));
    search->add_option("--max-periods", search_max_periods,
                       "largest period count for aggregation searches");
    search->add_flag("--include-weakenings", search_include_weakenings,
                     "also report order collapses to and from ties");
    search->add_flag("--minimal", search_minimal,
                     "keep only size-minimal counterexamples (papers, then citations)");
    search->add_flag("--serial", search_serial, "use the single-threaded reference search");
    search->add_option("--format", search_format, "output format")->check(CLI::IsMember(kFormats));
    search->callback([&] {
        exit_code = cmd_search(kind_from_token(search_indicator), search_thresholds,
                               search_max_papers, search_max_citations, search_relatives,
                               search_absolutes, search_properties, search_max_periods,
                               search_include_weakenings, search_minimal, search_serial,
                               resolve_format(search_format, out_is_terminal), out);
    });

    // repro ---------------------------------------------------------------
    std::string repro_selector = "all";
    std::string repro_format;
    CLI::App* repro =
        app.add_subcommand("repro", "Re-derive the built-in example tables and diff every cell");
    repro->add_option("selector", repro_selector, "fixture name T1..T7, or all");
    repro->add_option("--format", repro_format, "output format")->check(CLI::IsMember(kFormats));
    repro->callback([&] {
        exit_code = cmd_repro(repro_selector, resolve_format(repro_format, out_is_terminal), out);
    });

    // export-fixtures -------------------------------------------------------
    std::string export_dir;
    CLI::App* export_fixtures = app.add_subcommand(
        "export-fixtures", "Write the built-in fixtures as record documents");
    export_fixtures->add_option("--out", export_dir, "output directory")->required();
    export_fixtures->callback([&] { exit_code = cmd_export_fixtures(export_dir, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help requests to out and errors to err; collapse its
        // exit codes onto the 0/2 contract.
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace citax

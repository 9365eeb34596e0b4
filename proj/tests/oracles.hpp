#pragma once

// Independent reference implementations used to cross-check the library.
// Everything in namespace oracle is written directly from the definitions in
// the most literal style possible and shares no logic with the code under
// test: plain loops, full tuple enumeration, no canonicalization, no pruning.
// The *_key helpers at the bottom translate both oracle findings and library
// results into one normalized string form so result sets can be compared.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "citax/axioms.hpp"
#include "citax/core.hpp"
#include "citax/search.hpp"
#include "citax/transforms.hpp"

namespace oracle {

using Count = citax::Count;
using Record = std::vector<Count>;

// ---------------------------------------------------------------------------
// Indicators, from their definitions.

inline Count hcp(const Record& record, Count threshold) {
    Count n = 0;
    for (Count c : record) {
        if (c >= threshold) ++n;
    }
    return n;
}

inline Count h_index(const Record& record) {
    // Largest h such that at least h papers have at least h citations each,
    // checked candidate by candidate.
    Count best = 0;
    for (Count h = 1; h <= record.size(); ++h) {
        Count have = 0;
        for (Count c : record) {
            if (c >= h) ++have;
        }
        if (have >= h) best = h;
    }
    return best;
}

inline Count total(const Record& record) {
    Count sum = 0;
    for (Count c : record) sum += c;
    return sum;
}

inline Count papers(const Record& record) { return record.size(); }

inline Count evaluate(citax::IndicatorKind kind, const Record& record, Count threshold) {
    switch (kind) {
        case citax::IndicatorKind::HcpCount: return hcp(record, threshold);
        case citax::IndicatorKind::HIndex: return h_index(record);
        case citax::IndicatorKind::TotalCitations: return total(record);
        case citax::IndicatorKind::PaperCount: return papers(record);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Threshold calibration: smallest t admitting at most floor(num*n/den)
// entries, found by scanning t upward.

inline Count calibrate(const std::vector<Count>& reference, Count num, Count den) {
    const Count allowed = num * reference.size() / den;
    for (Count t = 1;; ++t) {
        Count at_or_above = 0;
        for (Count c : reference) {
            if (c >= t) ++at_or_above;
        }
        if (at_or_above <= allowed) return t;
    }
}

// ---------------------------------------------------------------------------
// Closed-form enumeration cardinality: records of length 0..max_papers with
// entries 0..max_citations, up to paper order, number
// sum_{k=0}^{P} C(C + k, k).

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

inline std::uint64_t multiset_count(std::size_t max_papers, Count max_citations) {
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k <= max_papers; ++k) {
        sum += binomial(max_citations + k, k);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Improvements, from their definitions.

inline Record improve_relative_floor(const Record& record, Count num, Count den) {
    Record out;
    for (Count c : record) out.push_back(c * num / den);
    return out;
}

inline Record improve_absolute(const Record& record, Count delta) {
    Record out;
    for (Count c : record) out.push_back(c + delta);
    return out;
}

// ---------------------------------------------------------------------------
// Full tuple enumeration (every ordering, not just canonical forms).

inline std::vector<Record> all_tuples(std::size_t length, Count max_citations) {
    std::vector<Record> out;
    Record current(length, 0);
    while (true) {
        out.push_back(current);
        std::size_t i = 0;
        while (i < length && current[i] == max_citations) {
            current[i] = 0;
            ++i;
        }
        if (i == length) break;
        ++current[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalized keys. A counterexample is identified by the property, the
// indicator (with threshold), the improvement, the unordered pair of records
// up to paper permutation, and its severity; before/after values are
// recomputable and deliberately left out.

inline std::string record_key(Record record) {
    std::sort(record.begin(), record.end(), std::greater<>());
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < record.size(); ++i) {
        if (i > 0) out << ',';
        out << record[i];
    }
    out << ']';
    return out.str();
}

inline std::string pair_key(const Record& a, const Record& b) {
    std::string ka = record_key(a);
    std::string kb = record_key(b);
    if (kb < ka) std::swap(ka, kb);
    return ka + "|" + kb;
}

// record_key sorts, which must not happen to per-paper period vectors; render
// verbatim instead.
inline std::string vector_key(const Record& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    out << ']';
    return out.str();
}

inline std::string papers_major_key(std::vector<Record> papers_major) {
    std::sort(papers_major.begin(), papers_major.end(), std::greater<std::vector<Count>>());
    std::string out = "[";
    for (std::size_t p = 0; p < papers_major.size(); ++p) {
        if (p > 0) out += ",";
        out += vector_key(papers_major[p]);
    }
    return out + "]";
}

inline std::string partitioned_pair_key(const std::vector<Record>& papers_major_a,
                                        const std::vector<Record>& papers_major_b) {
    std::string ka = papers_major_key(papers_major_a);
    std::string kb = papers_major_key(papers_major_b);
    if (kb < ka) std::swap(ka, kb);
    return ka + "|" + kb;
}

inline std::string indicator_key(citax::IndicatorKind kind, Count threshold) {
    switch (kind) {
        case citax::IndicatorKind::HcpCount: return "hcp(" + std::to_string(threshold) + ")";
        case citax::IndicatorKind::HIndex: return "h";
        case citax::IndicatorKind::TotalCitations: return "total";
        case citax::IndicatorKind::PaperCount: return "papers";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Brute-force violation finders. Double loop over every tuple pair of equal
// length; -1/0/1 order comparison before and after.

inline int order_of(Count a, Count b) { return a < b ? -1 : a > b ? 1 : 0; }

struct BruteImprovement {
    bool relative = true;
    Count num = 1;
    Count den = 1;
    Count delta = 0;

    std::string key() const {
        return relative ? "rel " + std::to_string(num) + "/" + std::to_string(den)
                        : "abs " + std::to_string(delta);
    }
    Record apply(const Record& record) const {
        return relative ? improve_relative_floor(record, num, den)
                        : improve_absolute(record, delta);
    }
};

/// All improvement-consistency violations within bounds, as normalized keys.
/// thresholds is ignored unless kind is HcpCount (pass {0} then).
inline std::set<std::string> brute_improvement_violations(
    citax::IndicatorKind kind, const std::vector<Count>& thresholds, std::size_t max_papers,
    Count max_citations, const std::vector<BruteImprovement>& improvements,
    bool include_weakenings) {
    std::set<std::string> keys;
    const std::vector<Count> threshold_grid =
        kind == citax::IndicatorKind::HcpCount ? thresholds : std::vector<Count>{0};
    for (std::size_t length = 0; length <= max_papers; ++length) {
        const std::vector<Record> tuples = all_tuples(length, max_citations);
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                for (Count threshold : threshold_grid) {
                    const int before =
                        order_of(evaluate(kind, tuples[i], threshold),
                                 evaluate(kind, tuples[j], threshold));
                    for (const BruteImprovement& improvement : improvements) {
                        const int after =
                            order_of(evaluate(kind, improvement.apply(tuples[i]), threshold),
                                     evaluate(kind, improvement.apply(tuples[j]), threshold));
                        if (before == after) continue;
                        const bool strict = before != 0 && after != 0;  // implies opposite signs
                        if (!strict && !include_weakenings) continue;
                        const std::string property = improvement.relative ? "relative" : "absolute";
                        keys.insert(property + "|" + indicator_key(kind, threshold) + "|" +
                                    improvement.key() + "|" + pair_key(tuples[i], tuples[j]) +
                                    "|" + (strict ? "strict" : "weak"));
                    }
                }
            }
        }
    }
    return keys;
}

/// All aggregation-consistency violations within bounds, as normalized keys.
/// A scientist with `length` papers over `periods` periods is a flat tuple of
/// length*periods counts read paper by paper.
inline std::set<std::string> brute_aggregation_violations(citax::IndicatorKind kind,
                                                          const std::vector<Count>& thresholds,
                                                          std::size_t max_papers,
                                                          Count max_citations,
                                                          std::size_t max_periods,
                                                          bool include_weakenings) {
    std::set<std::string> keys;
    const std::vector<Count> threshold_grid =
        kind == citax::IndicatorKind::HcpCount ? thresholds : std::vector<Count>{0};

    auto papers_major = [](const Record& flat, std::size_t length, std::size_t periods) {
        std::vector<Record> papers(length, Record(periods, 0));
        for (std::size_t p = 0; p < length; ++p) {
            for (std::size_t k = 0; k < periods; ++k) {
                papers[p][k] = flat[p * periods + k];
            }
        }
        return papers;
    };
    auto period_slice = [](const std::vector<Record>& papers, std::size_t k) {
        Record out;
        for (const Record& paper : papers) out.push_back(paper[k]);
        return out;
    };
    auto aggregate = [](const std::vector<Record>& papers) {
        Record out;
        for (const Record& paper : papers) {
            Count sum = 0;
            for (Count c : paper) sum += c;
            out.push_back(sum);
        }
        return out;
    };

    for (std::size_t periods = 2; periods <= max_periods; ++periods) {
        for (std::size_t length = 0; length <= max_papers; ++length) {
            const std::vector<Record> tuples = all_tuples(length * periods, max_citations);
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                const auto papers_a = papers_major(tuples[i], length, periods);
                for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                    const auto papers_b = papers_major(tuples[j], length, periods);
                    for (Count threshold : threshold_grid) {
                        int direction = 0;  // sign every period must share
                        bool premise = true;
                        for (std::size_t k = 0; k < periods && premise; ++k) {
                            const int sign =
                                order_of(evaluate(kind, period_slice(papers_a, k), threshold),
                                         evaluate(kind, period_slice(papers_b, k), threshold));
                            if (sign == 0) premise = false;
                            if (direction == 0) direction = sign;
                            premise = premise && sign == direction;
                        }
                        if (!premise || direction == 0) continue;
                        const int after = order_of(evaluate(kind, aggregate(papers_a), threshold),
                                                   evaluate(kind, aggregate(papers_b), threshold));
                        if (after == direction) continue;
                        const bool strict = after != 0;
                        if (!strict && !include_weakenings) continue;
                        keys.insert("aggregation|" + indicator_key(kind, threshold) + "|" +
                                    std::to_string(periods) + "p|" +
                                    partitioned_pair_key(papers_a, papers_b) + "|" +
                                    (strict ? "strict" : "weak"));
                    }
                }
            }
        }
    }
    return keys;
}

// ---------------------------------------------------------------------------
// Library-result translation into the same key space.

inline std::string counterexample_key(const citax::Counterexample& cx) {
    const citax::ViolationReport& report = cx.report;
    const Count threshold = report.indicator.kind() == citax::IndicatorKind::HcpCount
                                ? report.indicator.threshold().value()
                                : 0;
    const std::string severity =
        report.severity == citax::Severity::StrictReversal ? "strict" : "weak";

    if (const auto* evidence = std::get_if<citax::ImprovementEvidence>(&report.evidence)) {
        BruteImprovement improvement;
        if (const auto* rel = std::get_if<citax::RelativeImprovement>(&evidence->improvement)) {
            improvement = BruteImprovement{true, rel->factor.num, rel->factor.den, 0};
        } else {
            improvement = BruteImprovement{
                false, 1, 1, std::get<citax::AbsoluteImprovement>(evidence->improvement).delta};
        }
        const std::string property = improvement.relative ? "relative" : "absolute";
        return property + "|" + indicator_key(report.indicator.kind(), threshold) + "|" +
               improvement.key() + "|" + pair_key(evidence->record_a, evidence->record_b) + "|" +
               severity;
    }

    const auto& evidence = std::get<citax::AggregationEvidence>(report.evidence);
    auto to_papers_major = [](const citax::TimePartitionedRecord& record) {
        const std::size_t periods = record.periods.size();
        const std::size_t length = periods == 0 ? 0 : record.periods.front().size();
        std::vector<Record> papers(length, Record(periods, 0));
        for (std::size_t k = 0; k < periods; ++k) {
            for (std::size_t p = 0; p < length; ++p) {
                papers[p][k] = record.periods[k][p];
            }
        }
        return papers;
    };
    return "aggregation|" + indicator_key(report.indicator.kind(), threshold) + "|" +
           std::to_string(evidence.record_a.periods.size()) + "p|" +
           partitioned_pair_key(to_papers_major(evidence.record_a),
                                to_papers_major(evidence.record_b)) +
           "|" + severity;
}

inline std::set<std::string> counterexample_keys(const std::vector<citax::Counterexample>& results) {
    std::set<std::string> keys;
    for (const citax::Counterexample& cx : results) {
        keys.insert(counterexample_key(cx));
    }
    return keys;
}

}  // namespace oracle

#include "citax/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace citax {

Count hcp_count(const CitationRecord& record, Threshold threshold) {
    return static_cast<Count>(std::count_if(
        record.begin(), record.end(),
        [&](Count c) { return c >= threshold.value(); }));
}

Count h_index(const CitationRecord& record) {
    CitationRecord sorted = canonicalized(record);
    Count h = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= i + 1) {
            h = i + 1;
        } else {
            break;
        }
    }
    return h;
}

Count total_citations(const CitationRecord& record) {
    return std::accumulate(record.begin(), record.end(), Count{0});
}

Count paper_count(const CitationRecord& record) {
    return static_cast<Count>(record.size());
}

Count evaluate(const IndicatorSpec& spec, const CitationRecord& record) {
    switch (spec.kind()) {
        case IndicatorKind::HcpCount:
            return hcp_count(record, spec.threshold());
        case IndicatorKind::HIndex:
            return h_index(record);
        case IndicatorKind::TotalCitations:
            return total_citations(record);
        case IndicatorKind::PaperCount:
            return paper_count(record);
    }
    throw std::logic_error("unknown indicator kind");
}

Threshold calibrate_threshold(const std::vector<Count>& reference, Ratio top_fraction) {
    if (reference.empty()) {
        throw std::invalid_argument("empty reference set");
    }
    if (top_fraction.den == 0 || top_fraction.num == 0 ||
        top_fraction.num >= top_fraction.den) {
        throw std::invalid_argument("top fraction must lie strictly in (0,1)");
    }
    const auto n = static_cast<Count>(reference.size());

    // #{ref >= t} <= (num/den)*n  <=>  #{ref >= t} <= floor(num*n/den),
    // exactly, because the left side is an integer.
    const Count allowed = static_cast<Count>(
        (static_cast<unsigned __int128>(top_fraction.num) * n) / top_fraction.den);

    std::vector<Count> sorted = reference;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    // Entries at positions 0..allowed are all >= sorted[allowed], so any
    // t <= sorted[allowed] keeps more than `allowed` entries at-or-above.
    // t = sorted[allowed] + 1 is therefore the smallest admissible value.
    return Threshold(sorted[allowed] + 1);
}

CitationRecord canonicalized(CitationRecord record) {
    std::sort(record.begin(), record.end(), std::greater<>());
    return record;
}

bool is_canonical(const CitationRecord& record) {
    return std::is_sorted(record.begin(), record.end(), std::greater<>());
}

std::string format_record(const CitationRecord& record) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < record.size(); ++i) {
        if (i > 0) out << ',';
        out << record[i];
    }
    out << ']';
    return out.str();
}

std::string indicator_token(IndicatorKind kind) {
    switch (kind) {
        case IndicatorKind::HcpCount: return "hcp";
        case IndicatorKind::HIndex: return "h";
        case IndicatorKind::TotalCitations: return "total-citations";
        case IndicatorKind::PaperCount: return "paper-count";
    }
    throw std::logic_error("unknown indicator kind");
}

}  // namespace citax

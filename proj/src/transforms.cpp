#include "citax/transforms.hpp"

#include <limits>
#include <string>

namespace citax {

namespace {

void validate_factor(Ratio factor) {
    if (factor.den == 0) {
        throw std::invalid_argument("relative factor denominator must be positive");
    }
    if (factor.num < factor.den) {
        throw std::invalid_argument("relative factor must be at least 1");
    }
}

Count scaled(Count c, Ratio factor, RoundingMode rounding, std::size_t index) {
    if (factor.num != 0 && c > std::numeric_limits<Count>::max() / factor.num) {
        throw std::overflow_error("citation count overflow in relative improvement");
    }
    const Count numerator = c * factor.num;
    if (rounding == RoundingMode::Strict && numerator % factor.den != 0) {
        throw std::invalid_argument("inexact relative improvement at paper " +
                                    std::to_string(index));
    }
    return numerator / factor.den;
}

}  // namespace

CitationRecord relative_improvement(const CitationRecord& record, Ratio factor,
                                    RoundingMode rounding) {
    validate_factor(factor);
    CitationRecord result;
    result.reserve(record.size());
    for (std::size_t i = 0; i < record.size(); ++i) {
        result.push_back(scaled(record[i], factor, rounding, i));
    }
    return result;
}

CitationRecord absolute_improvement(const CitationRecord& record, Count delta) {
    CitationRecord result;
    result.reserve(record.size());
    for (Count c : record) {
        if (c > std::numeric_limits<Count>::max() - delta) {
            throw std::overflow_error("citation count overflow in absolute improvement");
        }
        result.push_back(c + delta);
    }
    return result;
}

CitationRecord apply_improvement(const Improvement& improvement, const CitationRecord& record) {
    return std::visit(
        [&](const auto& imp) -> CitationRecord {
            using T = std::decay_t<decltype(imp)>;
            if constexpr (std::is_same_v<T, RelativeImprovement>) {
                return relative_improvement(record, imp.factor, imp.rounding);
            } else {
                return absolute_improvement(record, imp.delta);
            }
        },
        improvement);
}

bool relative_is_exact(const CitationRecord& record, Ratio factor) {
    validate_factor(factor);
    for (Count c : record) {
        if ((c * factor.num) % factor.den != 0) {
            return false;
        }
    }
    return true;
}

CitationRecord aggregate_periods(const TimePartitionedRecord& record) {
    if (record.periods.size() < 2) {
        throw std::invalid_argument("need at least two periods");
    }
    const std::size_t papers = record.periods.front().size();
    CitationRecord sum(papers, 0);
    for (const CitationRecord& period : record.periods) {
        if (period.size() != papers) {
            throw std::invalid_argument("periods cover different papers");
        }
        for (std::size_t i = 0; i < papers; ++i) {
            sum[i] += period[i];
        }
    }
    return sum;
}

CitationRecord pad_record(CitationRecord record, const CitationRecord& extra) {
    record.insert(record.end(), extra.begin(), extra.end());
    return record;
}

}  // namespace citax

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "citax/core.hpp"
#include "citax/transforms.hpp"

namespace citax {

/// Raised for malformed record documents; the message names the offending
/// field (e.g. "scientists[1].papers: negative citation count").
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One scientist's citation data: either a flat record or per-period records.
struct ScientistEntry {
    std::string name;
    bool partitioned = false;
    /// Exactly one element for flat entries; >= 2 for partitioned ones.
    std::vector<CitationRecord> periods;

    const CitationRecord& flat() const { return periods.front(); }

    TimePartitionedRecord partitions() const { return TimePartitionedRecord{periods}; }

    friend bool operator==(const ScientistEntry&, const ScientistEntry&) = default;
};

/// The single ingestion format shared by user data and exported fixtures:
/// a JSON object with an optional "threshold" and a "scientists" array whose
/// "papers" entries are either flat count lists or lists of equal-length
/// per-period count lists. All partitioned scientists must agree on the
/// number of periods.
struct RecordDocument {
    std::optional<Count> threshold;
    std::vector<ScientistEntry> scientists;

    friend bool operator==(const RecordDocument&, const RecordDocument&) = default;
};

RecordDocument parse_document(const std::string& text);

RecordDocument load_document(const std::string& path);

std::string serialize_document(const RecordDocument& document);

}  // namespace citax

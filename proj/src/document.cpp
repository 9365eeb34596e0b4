#include "citax/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace citax {

namespace {

using nlohmann::json;

Count parse_count(const json& value, const std::string& where) {
    if (value.is_number_integer() && value.get<std::int64_t>() < 0) {
        throw DocumentError(where + ": negative citation count");
    }
    if (!value.is_number_unsigned()) {
        throw DocumentError(where + ": expected a non-negative integer");
    }
    return value.get<Count>();
}

CitationRecord parse_flat_record(const json& papers, const std::string& where) {
    CitationRecord record;
    record.reserve(papers.size());
    for (std::size_t i = 0; i < papers.size(); ++i) {
        record.push_back(parse_count(papers[i], where + "[" + std::to_string(i) + "]"));
    }
    return record;
}

ScientistEntry parse_scientist(const json& entry, std::size_t index) {
    const std::string where = "scientists[" + std::to_string(index) + "]";
    if (!entry.is_object()) {
        throw DocumentError(where + ": expected an object");
    }
    for (const auto& [key, value] : entry.items()) {
        if (key != "name" && key != "papers") {
            throw DocumentError(where + ": unknown field '" + key + "'");
        }
    }
    if (!entry.contains("name") || !entry["name"].is_string() ||
        entry["name"].get<std::string>().empty()) {
        throw DocumentError(where + ".name: expected a non-empty string");
    }
    if (!entry.contains("papers") || !entry["papers"].is_array()) {
        throw DocumentError(where + ".papers: expected an array");
    }

    ScientistEntry scientist;
    scientist.name = entry["name"].get<std::string>();
    const json& papers = entry["papers"];

    bool has_periods = false;
    bool has_counts = false;
    for (const json& element : papers) {
        (element.is_array() ? has_periods : has_counts) = true;
    }
    if (has_periods && has_counts) {
        throw DocumentError(where + ".papers: mix of counts and period lists");
    }

    if (has_periods) {
        scientist.partitioned = true;
        if (papers.size() < 2) {
            throw DocumentError(where + ".papers: need at least two periods");
        }
        for (std::size_t k = 0; k < papers.size(); ++k) {
            const std::string period_where =
                where + ".papers[" + std::to_string(k) + "]";
            scientist.periods.push_back(parse_flat_record(papers[k], period_where));
            if (scientist.periods.back().size() != scientist.periods.front().size()) {
                throw DocumentError(period_where + ": period length differs from period 0");
            }
        }
    } else {
        scientist.partitioned = false;
        scientist.periods.push_back(parse_flat_record(papers, where + ".papers"));
    }
    return scientist;
}

}  // namespace

RecordDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw DocumentError("document root must be an object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "threshold" && key != "scientists") {
            throw DocumentError("unknown field '" + key + "'");
        }
    }

    RecordDocument document;
    if (root.contains("threshold")) {
        const json& threshold = root["threshold"];
        if (!threshold.is_number_unsigned() || threshold.get<Count>() == 0) {
            throw DocumentError("threshold: must be a positive integer");
        }
        document.threshold = threshold.get<Count>();
    }

    if (!root.contains("scientists") || !root["scientists"].is_array()) {
        throw DocumentError("scientists: expected an array");
    }

    std::set<std::string> names;
    std::optional<std::size_t> period_count;
    const json& scientists = root["scientists"];
    for (std::size_t i = 0; i < scientists.size(); ++i) {
        ScientistEntry scientist = parse_scientist(scientists[i], i);
        if (!names.insert(scientist.name).second) {
            throw DocumentError("scientists[" + std::to_string(i) + "].name: duplicate scientist '" +
                                scientist.name + "'");
        }
        if (scientist.partitioned) {
            if (period_count && *period_count != scientist.periods.size()) {
                throw DocumentError("scientists[" + std::to_string(i) +
                                    "].papers: period count differs from earlier scientists");
            }
            period_count = scientist.periods.size();
        }
        document.scientists.push_back(std::move(scientist));
    }
    return document;
}

RecordDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DocumentError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string serialize_document(const RecordDocument& document) {
    json root = json::object();
    if (document.threshold) {
        root["threshold"] = *document.threshold;
    }
    root["scientists"] = json::array();
    for (const ScientistEntry& scientist : document.scientists) {
        json entry;
        entry["name"] = scientist.name;
        if (scientist.partitioned) {
            entry["papers"] = scientist.periods;
        } else {
            entry["papers"] = scientist.flat();
        }
        root["scientists"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

}  // namespace citax

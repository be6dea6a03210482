#ifndef GRASSHODGE_OUTPUT_HPP
#define GRASSHODGE_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasshodge/bwb.hpp"
#include "grasshodge/partition.hpp"

namespace grasshodge {

/// One nonzero table cell; dim is kept as a decimal string so arbitrary
/// precision survives serialization.
struct DocEntry {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string dim;
};

/// Machine-readable result document.  Serialization is deterministic:
/// object keys are sorted and entries are ordered by (j, i).
struct OutputDocument {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t t = 0;
    std::string command;
    std::string version;
    std::vector<DocEntry> entries;
    std::vector<Partition> witnesses;
};

OutputDocument make_document(std::int64_t k, std::int64_t n, std::int64_t t,
                             std::string command);

/// Sorted (j, i) entries of the nonzero cells of a table.
std::vector<DocEntry> table_entries(const HodgeTable& table);

nlohmann::json to_json(const OutputDocument& doc);
std::string to_json_string(const OutputDocument& doc);

/// Parses a serialized document back; inverse of to_json_string.
OutputDocument from_json_string(const std::string& text);

/// "i,j,dim" lines with a one-line header, sorted by (j, i).
std::string table_csv(const HodgeTable& table);

/// A plain tabular grid, rows i from high to low, columns j ascending.
std::string table_tex(const HodgeTable& table);

} // namespace grasshodge

#endif

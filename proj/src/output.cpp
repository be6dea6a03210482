#include "grasshodge/output.hpp"

#include <algorithm>

#include "grasshodge/version.hpp"

namespace grasshodge {

OutputDocument make_document(std::int64_t k, std::int64_t n, std::int64_t t,
                             std::string command) {
    OutputDocument doc;
    doc.k = k;
    doc.n = n;
    doc.t = t;
    doc.command = std::move(command);
    doc.version = kVersion;
    return doc;
}

std::vector<DocEntry> table_entries(const HodgeTable& table) {
    std::vector<DocEntry> entries;
    entries.reserve(table.entries.size());
    for (const auto& [cell, dim] : table.entries) {
        entries.push_back({cell.first, cell.second, dim.str()});
    }
    std::sort(entries.begin(), entries.end(),
              [](const DocEntry& a, const DocEntry& b) {
                  return std::pair(a.j, a.i) < std::pair(b.j, b.i);
              });
    return entries;
}

nlohmann::json to_json(const OutputDocument& doc) {
    nlohmann::json out;
    out["meta"] = {{"k", doc.k},
                   {"n", doc.n},
                   {"t", doc.t},
                   {"command", doc.command},
                   {"version", doc.version}};
    out["entries"] = nlohmann::json::array();
    for (const DocEntry& e : doc.entries) {
        out["entries"].push_back({{"i", e.i}, {"j", e.j}, {"dim", e.dim}});
    }
    out["witnesses"] = nlohmann::json::array();
    for (const Partition& w : doc.witnesses) {
        out["witnesses"].push_back(w.parts());
    }
    return out;
}

std::string to_json_string(const OutputDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

OutputDocument from_json_string(const std::string& text) {
    const nlohmann::json in = nlohmann::json::parse(text);
    OutputDocument doc;
    doc.k = in.at("meta").at("k").get<std::int64_t>();
    doc.n = in.at("meta").at("n").get<std::int64_t>();
    doc.t = in.at("meta").at("t").get<std::int64_t>();
    doc.command = in.at("meta").at("command").get<std::string>();
    doc.version = in.at("meta").at("version").get<std::string>();
    for (const auto& e : in.at("entries")) {
        doc.entries.push_back({e.at("i").get<std::int64_t>(),
                               e.at("j").get<std::int64_t>(),
                               e.at("dim").get<std::string>()});
    }
    for (const auto& w : in.at("witnesses")) {
        doc.witnesses.emplace_back(w.get<std::vector<std::int64_t>>());
    }
    return doc;
}

std::string table_csv(const HodgeTable& table) {
    std::string out = "i,j,dim\n";
    for (const DocEntry& e : table_entries(table)) {
        out += std::to_string(e.i) + "," + std::to_string(e.j) + "," + e.dim + "\n";
    }
    return out;
}

std::string table_tex(const HodgeTable& table) {
    const std::int64_t bigN = table.k * (table.n - table.k);
    std::string out = "\\begin{tabular}{r|";
    for (std::int64_t j = 0; j <= bigN; ++j) out += "c";
    out += "}\n$i \\backslash j$";
    for (std::int64_t j = 0; j <= bigN; ++j) {
        out += " & " + std::to_string(j);
    }
    out += " \\\\\n\\hline\n";
    for (std::int64_t i = bigN; i >= 0; --i) {
        out += std::to_string(i);
        for (std::int64_t j = 0; j <= bigN; ++j) {
            const BigInt dim = table.dim(i, j);
            out += " & ";
            if (dim != 0) out += dim.str();
        }
        out += " \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

} // namespace grasshodge

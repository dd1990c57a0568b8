#pragma once

// Report types shared by the identity registry and the command line tool.
// Emission is deterministic: object keys are sorted and rationals use the
// canonical p/q form, so identical runs produce identical bytes.

#include "vermaforge/series.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace vermaforge::report {

using Json = nlohmann::json;

struct VerificationReport {
    std::string id;
    std::map<std::string, long> params;
    int order = 0;
    std::vector<qseries::CoeffRow> rows;
    bool pass = false;
    std::string note;

    Json to_json() const {
        Json j;
        j["id"] = id;
        Json p = Json::object();
        for (const auto& [k, v] : params) p[k] = v;
        j["params"] = p;
        j["order"] = order;
        j["pass"] = pass;
        if (!note.empty()) j["note"] = note;
        Json rs = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["k"] = r.k;
            row["lhs"] = r.lhs;
            row["rhs"] = r.rhs;
            row["match"] = r.match;
            rs.push_back(row);
        }
        j["rows"] = rs;
        return j;
    }

    std::string to_tsv() const {
        std::string out = "k\tlhs\trhs\tmatch\n";
        for (const auto& r : rows) {
            out += std::to_string(r.k);
            out += "\t" + r.lhs + "\t" + r.rhs + "\t";
            out += r.match ? "true" : "false";
            out += "\n";
        }
        return out;
    }
};

struct Summary {
    std::vector<VerificationReport> reports;
    bool pass = true;

    Json to_json() const {
        Json j;
        Json rs = Json::array();
        for (const auto& r : reports) {
            Json e;
            e["id"] = r.id;
            Json p = Json::object();
            for (const auto& [k, v] : r.params) p[k] = v;
            e["params"] = p;
            e["order"] = r.order;
            e["pass"] = r.pass;
            if (!r.note.empty()) e["note"] = r.note;
            rs.push_back(e);
        }
        j["results"] = rs;
        j["pass"] = pass;
        return j;
    }
};

}  // namespace vermaforge::report

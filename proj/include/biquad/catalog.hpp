#pragma once

// JSON Lines catalog of produced identities: one record per line,
// append-friendly, every field textual so values survive any integer width.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "biquad/compose.hpp"
#include "biquad/numeric.hpp"

namespace biquad {

struct IdentityRecord {
    int n = 0;                              // terms per side
    std::string h;                          // reduced rational
    std::vector<std::string> decomposition; // signed "weight*num/den^4" terms
    std::string point_x, point_y;           // generator the identity came from
    int multiple = 1;                       // which multiple of it
    std::vector<std::string> left, right;   // decimal integers
    bool cancelled = false;
    bool weighted = false;
    std::vector<std::string> left_weights, right_weights;  // present iff weighted
};

inline nlohmann::json to_json(const IdentityRecord& r) {
    nlohmann::json j{
        {"n", r.n},
        {"h", r.h},
        {"decomposition", r.decomposition},
        {"point", {{"X", r.point_x}, {"Y", r.point_y}, {"multiple", r.multiple}}},
        {"left", r.left},
        {"right", r.right},
        {"flags", {{"cancelled", r.cancelled}, {"weighted", r.weighted}}},
    };
    if (r.weighted) {
        j["weights"] = {{"left", r.left_weights}, {"right", r.right_weights}};
    }
    return j;
}

inline IdentityRecord record_from_json(const nlohmann::json& j) {
    IdentityRecord r;
    try {
        r.n = j.at("n").get<int>();
        r.h = j.at("h").get<std::string>();
        r.decomposition = j.at("decomposition").get<std::vector<std::string>>();
        r.point_x = j.at("point").at("X").get<std::string>();
        r.point_y = j.at("point").at("Y").get<std::string>();
        r.multiple = j.at("point").at("multiple").get<int>();
        r.left = j.at("left").get<std::vector<std::string>>();
        r.right = j.at("right").get<std::vector<std::string>>();
        r.cancelled = j.at("flags").at("cancelled").get<bool>();
        r.weighted = j.at("flags").at("weighted").get<bool>();
        if (r.weighted) {
            r.left_weights = j.at("weights").at("left").get<std::vector<std::string>>();
            r.right_weights = j.at("weights").at("right").get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog record: ") + e.what());
    }
    return r;
}

inline IdentityRecord make_record(const Identity& id, const Rational& h, const Decomposition& dec,
                                  const Point& generator, int multiple, bool cancelled) {
    IdentityRecord r;
    r.n = static_cast<int>(id.left.size());
    r.h = h.str();
    r.decomposition = dec.term_strings();
    r.point_x = generator.x().str();
    r.point_y = generator.y().str();
    r.multiple = multiple;
    for (const auto& v : id.left) r.left.push_back(v.str());
    for (const auto& v : id.right) r.right.push_back(v.str());
    r.cancelled = cancelled;
    r.weighted = id.weighted();
    if (r.weighted) {
        for (const auto& w : id.left_weights) r.left_weights.push_back(w.str());
        for (const auto& w : id.right_weights) r.right_weights.push_back(w.str());
    }
    return r;
}

// Re-runs the exact checks on a loaded record.
inline Verdict verify_record(const IdentityRecord& r) {
    auto parse_list = [](const std::vector<std::string>& in) {
        std::vector<BigInt> out;
        for (const auto& s : in) {
            const Rational v = Rational::parse(s);
            if (!v.is_integer()) throw ParseError("catalog term not an integer: " + s);
            out.push_back(v.num());
        }
        return out;
    };
    const auto left = parse_list(r.left);
    const auto right = parse_list(r.right);
    if (r.weighted)
        return verify_identity(left, right, parse_list(r.left_weights),
                               parse_list(r.right_weights));
    return verify_identity(left, right);
}

inline void append_record(const std::string& path, const IdentityRecord& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw DataError("cannot open catalog for append: " + path);
    out << to_json(r).dump() << "\n";
}

// Whole-file read; throws ParseError naming the offending line.
inline std::vector<IdentityRecord> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open catalog: " + path);
    std::vector<IdentityRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw ParseError("catalog line " + std::to_string(lineno) + ": invalid JSON");
        try {
            records.push_back(record_from_json(j));
        } catch (const ParseError& e) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace biquad

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/classify.hpp"
#include "hurwitz/constellation.hpp"
#include "hurwitz/search.hpp"

namespace hurwitz {

using Json = nlohmann::json;

// Schema version stamped on every object this library emits. Readers reject
// anything else, so stored artifacts never change meaning silently.
inline constexpr int kJsonFormat = 1;

inline void require_format(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_number_integer() ||
        j["format"].get<int>() != kJsonFormat)
        throw std::invalid_argument(std::string(what) + ": missing or unsupported format tag");
}

// Permutations travel as cycle lists with 1-based points. Fixed points are
// implicit; the owning object carries the degree.
inline Json perm_to_json(const Perm& p) {
    Json arr = Json::array();
    for (const auto& c : p.cycles(false)) {
        Json cy = Json::array();
        for (int x : c) cy.push_back(x + 1);
        arr.push_back(std::move(cy));
    }
    return arr;
}

inline Perm perm_from_json(long degree, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation: expected an array of cycles");
    std::vector<std::vector<int>> cycles;
    for (const auto& cy : j) {
        if (!cy.is_array()) throw std::invalid_argument("permutation: cycle is not an array");
        std::vector<int> c;
        for (const auto& v : cy) {
            if (!v.is_number_integer())
                throw std::invalid_argument("permutation: cycle entry is not an integer");
            long x = v.get<long>();
            if (x < 1 || x > degree)
                throw std::invalid_argument("permutation: cycle entry out of range");
            c.push_back(static_cast<int>(x - 1));
        }
        cycles.push_back(std::move(c));
    }
    return Perm::from_cycles(static_cast<int>(degree), cycles);
}

inline void to_json(Json& j, const OrbifoldSignature& sig) {
    j = Json{{"genus", sig.genus}, {"cone_orders", sig.cone_orders}};
}

inline void from_json(const Json& j, OrbifoldSignature& sig) {
    sig = OrbifoldSignature::make(j.at("genus").get<int>(),
                                  j.at("cone_orders").get<std::vector<int>>());
}

inline void to_json(Json& j, const TableRow& row) {
    j = Json{{"format", kJsonFormat},
             {"signature", row.signature},
             {"degree", row.degree},
             {"profiles", row.profiles},
             {"free_branch", row.free_branch}};
}

inline void from_json(const Json& j, TableRow& row) {
    require_format(j, "table row");
    row.signature = j.at("signature").get<OrbifoldSignature>();
    row.degree = j.at("degree").get<long>();
    row.profiles = j.at("profiles").get<std::vector<std::vector<int>>>();
    row.free_branch = j.at("free_branch").get<long>();
}

inline void to_json(Json& j, const Constellation& c) {
    Json handles = Json::array();
    for (const auto& [a, b] : c.handles)
        handles.push_back(Json{{"a", perm_to_json(a)}, {"b", perm_to_json(b)}});
    Json slots = Json::array();
    for (const auto& s : c.slots) slots.push_back(perm_to_json(s));
    j = Json{{"format", kJsonFormat},
             {"degree", c.degree},
             {"base_genus", c.base_genus},
             {"handles", std::move(handles)},
             {"slots", std::move(slots)}};
    if (!c.labels.empty()) j["labels"] = c.labels;
}

// Parses the shape only; callers decide when to run validate(). A "genus"
// field, if present, is advisory output and is ignored here.
inline void from_json(const Json& j, Constellation& c) {
    require_format(j, "constellation");
    c = Constellation{};
    c.degree = j.at("degree").get<long>();
    if (c.degree < 1) throw std::invalid_argument("constellation: degree must be positive");
    c.base_genus = j.at("base_genus").get<int>();
    for (const auto& h : j.at("handles"))
        c.handles.emplace_back(perm_from_json(c.degree, h.at("a")),
                               perm_from_json(c.degree, h.at("b")));
    for (const auto& s : j.at("slots")) c.slots.push_back(perm_from_json(c.degree, s));
    if (j.contains("labels")) c.labels = j["labels"].get<std::vector<std::string>>();
}

inline Json classification_document(const std::string& which, const std::vector<TableRow>& rows) {
    return Json{{"format", kJsonFormat}, {"case", which}, {"rows", rows}};
}

inline const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Ok: return "ok";
        case SearchStatus::Infeasible: return "infeasible";
        default: return "resource-limit";
    }
}

inline Json search_document(const SearchSpec& spec, const SearchResult& res) {
    Json witnesses = Json::array();
    for (const auto& w : res.witnesses) {
        Json jw = w;
        jw["genus"] = w.genus();
        witnesses.push_back(std::move(jw));
    }
    return Json{{"format", kJsonFormat},
                {"degree", spec.degree},
                {"base_genus", spec.base_genus},
                {"partitions", spec.partitions},
                {"status", status_name(res.status)},
                {"exhaustive", res.exhaustive},
                {"cover_genus", res.cover_genus},
                {"witness_count", res.witnesses.size()},
                {"witnesses", std::move(witnesses)},
                {"message", res.message}};
}

// Reloads every constellation in a search document and revalidates it, so a
// cached or hand-edited file can never smuggle in a broken cover. Returns
// the witnesses on success, throws on any defect.
inline std::vector<Constellation> revalidated_witnesses(const Json& doc) {
    require_format(doc, "search document");
    std::vector<Constellation> out;
    for (const auto& jw : doc.at("witnesses")) {
        Constellation c = jw.get<Constellation>();
        c.validate();
        if (jw.contains("genus") && jw["genus"].get<int>() != c.genus())
            throw std::invalid_argument("stored genus disagrees with the tuple");
        out.push_back(std::move(c));
    }
    return out;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return Json::parse(in);
}

}  // namespace hurwitz

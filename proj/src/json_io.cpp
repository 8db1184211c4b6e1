#include "lrckit/json_io.hpp"

#include <stdexcept>

namespace lrc {

namespace {

std::uint32_t get_u32(const ordered_json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw std::invalid_argument(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<std::uint32_t>();
}

Matrix matrix_from_json(const ordered_json &j, const char *key, std::uint32_t q) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing matrix \"") + key + "\"");
    const auto &rows = j[key];
    Matrix m;
    m.rows = rows.size();
    m.cols = m.rows ? rows[0].size() : 0;
    m.a.reserve(m.rows * m.cols);
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != m.cols)
            throw std::invalid_argument(std::string("ragged matrix \"") + key + "\"");
        for (const auto &x : row) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= q)
                throw std::invalid_argument(std::string("matrix \"") + key + "\" entry out of field range");
            m.a.push_back(x.get<Elem>());
        }
    }
    return m;
}

ordered_json matrix_rows(const Matrix &m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

ordered_json family_to_json(const BlockFamily &fam) {
    ordered_json j;
    j["ground_size"] = fam.ground_size;
    j["blocks"] = fam.blocks;
    return j;
}

BlockFamily family_from_json(const ordered_json &j) {
    BlockFamily fam;
    fam.ground_size = get_u32(j, "ground_size");
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("missing \"blocks\" array");
    for (const auto &b : j["blocks"]) {
        if (!b.is_array())
            throw std::invalid_argument("block must be an array of point indices");
        std::vector<std::uint32_t> block;
        for (const auto &p : b) {
            if (!p.is_number_unsigned())
                throw std::invalid_argument("block point must be a nonnegative integer");
            block.push_back(p.get<std::uint32_t>());
        }
        fam.blocks.push_back(std::move(block));
    }
    validate(fam);
    return fam;
}

ordered_json code_to_json(const LrcCode &code) {
    ordered_json j;
    j["q"] = code.field.order();
    j["p"] = code.field.characteristic();
    j["m"] = code.field.degree();
    j["r"] = code.r;
    j["delta"] = code.delta;
    j["v"] = code.v;
    j["w"] = code.w;
    j["alphas"] = code.plan.alphas;
    j["sets"] = code.plan.sets;
    j["G"] = matrix_rows(code.G);
    j["H"] = matrix_rows(code.H);
    j["repair_sets"] = code.repair_sets;
    j["claimed_d"] = code.claimed_d;
    return j;
}

LrcCode code_from_json(const ordered_json &j) {
    LrcCode code;
    const std::uint32_t p = get_u32(j, "p");
    const std::uint32_t m = get_u32(j, "m");
    const std::uint32_t q = get_u32(j, "q");
    code.field = Field(p, m);
    if (code.field.order() != q)
        throw std::invalid_argument("q does not equal p^m");
    code.r = get_u32(j, "r");
    code.delta = get_u32(j, "delta");
    code.v = get_u32(j, "v");
    code.w = get_u32(j, "w");
    code.claimed_d = get_u32(j, "claimed_d");
    if (j.contains("alphas") && j["alphas"].is_array())
        for (const auto &a : j["alphas"]) {
            if (!a.is_number_unsigned() || a.get<std::uint64_t>() >= q)
                throw std::invalid_argument("alpha out of field range");
            code.plan.alphas.push_back(a.get<Elem>());
        }
    else
        throw std::invalid_argument("missing \"alphas\" array");
    if (j.contains("sets") && j["sets"].is_array())
        for (const auto &s : j["sets"]) {
            if (!s.is_array())
                throw std::invalid_argument("evaluation set must be an array");
            std::vector<Elem> set;
            for (const auto &x : s) {
                if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= q)
                    throw std::invalid_argument("evaluation point out of field range");
                set.push_back(x.get<Elem>());
            }
            code.plan.sets.push_back(std::move(set));
        }
    else
        throw std::invalid_argument("missing \"sets\" array");
    code.G = matrix_from_json(j, "G", q);
    code.H = matrix_from_json(j, "H", q);
    if (!j.contains("repair_sets") || !j["repair_sets"].is_array())
        throw std::invalid_argument("missing \"repair_sets\" array");
    for (const auto &s : j["repair_sets"]) {
        if (!s.is_array())
            throw std::invalid_argument("repair set must be an array");
        std::vector<std::uint32_t> set;
        for (const auto &x : s) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= code.G.cols)
                throw std::invalid_argument("repair-set coordinate out of range");
            set.push_back(x.get<std::uint32_t>());
        }
        code.repair_sets.push_back(std::move(set));
    }
    if (code.H.cols != code.G.cols || code.G.rows + code.H.rows != code.G.cols)
        throw std::invalid_argument("generator/parity shapes are inconsistent");
    return code;
}

ordered_json matrix_to_json(std::uint32_t q, const Matrix &m) {
    ordered_json j;
    j["q"] = q;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["data"] = matrix_rows(m);
    return j;
}

std::string dump_pretty(const ordered_json &j) { return j.dump(2) + "\n"; }

} // namespace lrc

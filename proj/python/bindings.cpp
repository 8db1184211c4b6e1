#include "lrckit/bounds.hpp"
#include "lrckit/code.hpp"
#include "lrckit/designs.hpp"
#include "lrckit/json_io.hpp"
#include "lrckit/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

namespace py = pybind11;
using namespace lrc;

namespace {

Matrix matrix_from_rows(const Field &f, const std::vector<std::vector<Elem>> &rows) {
    Matrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows[0].size();
    for (const auto &row : rows) {
        if (row.size() != m.cols)
            throw std::invalid_argument("ragged matrix");
        for (Elem x : row) {
            if (x >= f.order())
                throw std::invalid_argument("entry outside the field");
            m.a.push_back(x);
        }
    }
    return m;
}

std::vector<std::vector<Elem>> matrix_rows(const Matrix &m) {
    std::vector<std::vector<Elem>> rows(m.rows, std::vector<Elem>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

BlockFamily family_from_args(std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks) {
    BlockFamily fam{ground_size, blocks};
    validate(fam);
    return fam;
}

LrcCode construct_from_blocks(std::uint32_t q, std::uint32_t r, std::uint32_t delta, std::uint32_t v, std::uint32_t w,
                              std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks) {
    Field f(q);
    LrcParams params{q, r, delta, v, w};
    return construct(f, params, plan_from_design(f, params, family_from_args(ground_size, blocks)));
}

py::dict certificate_dict(const OptimalityCertificate &cert) {
    py::dict d;
    d["d"] = cert.d;
    d["bound"] = cert.bound;
    d["optimal"] = cert.optimal;
    d["distance_exact"] = cert.distance_exact;
    return d;
}

std::vector<Elem> repair_or_throw(RepairResult res) {
    if (!res.ok)
        throw std::runtime_error(res.reason);
    return std::move(res.word);
}

ErasurePattern pattern_from(std::vector<std::uint32_t> erased) {
    std::sort(erased.begin(), erased.end());
    return ErasurePattern{std::move(erased)};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "locally repairable codes with length beyond the field size: "
              "exact construction, certification, repair, and bounds";

    py::class_<Field>(m, "Field")
        .def(py::init<std::uint64_t>(), py::arg("q"))
        .def_property_readonly("q", &Field::order)
        .def_property_readonly("p", &Field::characteristic)
        .def_property_readonly("m", &Field::degree)
        .def_property_readonly("modulus", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("div", &Field::div)
        .def("pow", &Field::pow);

    py::class_<LrcCode>(m, "Code")
        .def_property_readonly("n", &LrcCode::length)
        .def_property_readonly("k", &LrcCode::dimension)
        .def_property_readonly("q", [](const LrcCode &c) { return c.field.order(); })
        .def_readonly("r", &LrcCode::r)
        .def_readonly("delta", &LrcCode::delta)
        .def_readonly("v", &LrcCode::v)
        .def_readonly("w", &LrcCode::w)
        .def_readonly("claimed_d", &LrcCode::claimed_d)
        .def_readonly("repair_sets", &LrcCode::repair_sets)
        .def_property_readonly("alphas", [](const LrcCode &c) { return c.plan.alphas; })
        .def_property_readonly("sets", [](const LrcCode &c) { return c.plan.sets; })
        .def_property_readonly("generator", [](const LrcCode &c) { return matrix_rows(c.G); })
        .def_property_readonly("parity", [](const LrcCode &c) { return matrix_rows(c.H); })
        .def("to_json", [](const LrcCode &c) { return dump_pretty(code_to_json(c)); })
        .def_static("from_json",
                    [](const std::string &text) { return code_from_json(ordered_json::parse(text)); })
        .def("__repr__", [](const LrcCode &c) {
            return "Code([" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "] over GF(" +
                   std::to_string(c.field.order()) + "), r=" + std::to_string(c.r) +
                   ", delta=" + std::to_string(c.delta) + ")";
        });

    m.def("construct_identical",
          [](std::uint32_t q, std::uint32_t r, std::uint32_t delta, std::uint32_t v, std::uint32_t w) {
              Field f(q);
              LrcParams params{q, r, delta, v, w};
              return construct(f, params, identical_plan(f, params));
          },
          py::arg("q"), py::arg("r"), py::arg("delta"), py::arg("v"), py::arg("w"),
          "Construction with all evaluation sets equal to the smallest field elements.");
    m.def("construct_from_design", &construct_from_blocks, py::arg("q"), py::arg("r"), py::arg("delta"), py::arg("v"),
          py::arg("w"), py::arg("ground_size"), py::arg("blocks"),
          "Construction with evaluation sets taken from a block family (point j -> field element j).");
    m.def("replicated_rs_fixture",
          [](std::uint32_t q, std::uint32_t points, std::uint32_t copies) {
              return replicated_rs_fixture(Field(q), points, copies);
          },
          py::arg("q"), py::arg("points"), py::arg("copies"));

    m.def("encode", &encode, py::arg("code"), py::arg("info"));
    m.def("local_repair",
          [](const LrcCode &code, const std::vector<Elem> &word, std::vector<std::uint32_t> erased) {
              return repair_or_throw(local_repair(code, word, pattern_from(std::move(erased))));
          },
          py::arg("code"), py::arg("word"), py::arg("erased"));
    m.def("global_decode",
          [](const LrcCode &code, const std::vector<Elem> &word, std::vector<std::uint32_t> erased) {
              return repair_or_throw(global_decode(code, word, pattern_from(std::move(erased))));
          },
          py::arg("code"), py::arg("word"), py::arg("erased"));

    m.def("certify", [](const LrcCode &code, unsigned threads) { return certificate_dict(certify_optimal(code, threads)); },
          py::arg("code"), py::arg("threads") = 1);
    m.def("check_locality", [](const LrcCode &code) { return check_locality(code).pass; });
    m.def("check_mds_partition", [](const LrcCode &code) { return check_mds_partition(code).pass; });
    m.def("min_distance",
          [](std::uint32_t q, const std::vector<std::vector<Elem>> &g, std::uint32_t cap, unsigned threads) {
              Field f(q);
              DistanceResult res = min_distance(f, matrix_from_rows(f, g), cap, threads);
              py::dict d;
              d["exact"] = res.exact;
              d["d"] = res.d;
              return d;
          },
          py::arg("q"), py::arg("generator"), py::arg("cap"), py::arg("threads") = 1);

    m.def("delta_reduce", &delta_reduce, py::arg("code"));
    m.def("m2_reduce", [](const LrcCode &code) { return matrix_rows(m2_reduce(code)); }, py::arg("code"));
    m.def("puncture_reduce", &puncture_reduce, py::arg("code"), py::arg("certified_d"));

    m.def("singleton_bound", &bounds::singleton_bound, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"));
    m.def("is_optimal", &bounds::is_optimal, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("d"));
    m.def("length_bound_delta2", &bounds::length_bound_delta2, py::arg("q"), py::arg("r"), py::arg("d"));
    m.def("length_bound_delta_gt2", &bounds::length_bound_delta_gt2, py::arg("q"), py::arg("r"), py::arg("delta"),
          py::arg("d"), py::arg("k"));
    m.def("combined_bound", &bounds::combined_bound, py::arg("q"), py::arg("r"), py::arg("delta"), py::arg("d"),
          py::arg("k"));
    m.def("reduction_distance_floor", &bounds::reduction_distance_floor, py::arg("d"), py::arg("delta"));
    m.def("johnson_bound", &johnson_bound, py::arg("n1"), py::arg("block"), py::arg("tau_plus_1"));
    m.def("next_prime_power", &next_prime_power, py::arg("n"));

    m.def("sunflower",
          [](std::size_t w, std::size_t petal, std::size_t core) {
              BlockFamily fam = sunflower(w, petal, core);
              return py::make_tuple(fam.ground_size, fam.blocks);
          },
          py::arg("w"), py::arg("petal"), py::arg("core"));
    m.def("steiner_triple_bose",
          [](std::uint32_t n1) {
              BlockFamily fam = steiner_triple_bose(n1);
              return py::make_tuple(fam.ground_size, fam.blocks);
          },
          py::arg("n1"));
    m.def("affine_plane_lines",
          [](std::uint32_t p) {
              BlockFamily fam = affine_plane_lines(p);
              return py::make_tuple(fam.ground_size, fam.blocks);
          },
          py::arg("p"));
    m.def("overlap",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks) {
              return overlap(family_from_args(ground_size, blocks));
          },
          py::arg("ground_size"), py::arg("blocks"));
    m.def("check_mu_condition",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks, std::size_t mu,
             std::size_t delta) { return check_mu_condition(family_from_args(ground_size, blocks), mu, delta).pass; },
          py::arg("ground_size"), py::arg("blocks"), py::arg("mu"), py::arg("delta"));
    m.def("check_uibf",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks, std::size_t s,
             std::size_t t, std::size_t delta) {
              return check_uibf(family_from_args(ground_size, blocks), s, t, delta).pass;
          },
          py::arg("ground_size"), py::arg("blocks"), py::arg("s"), py::arg("t"), py::arg("delta"));
    m.def("check_packing",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks,
             std::size_t tau_plus_1) { return check_packing(family_from_args(ground_size, blocks), tau_plus_1).pass; },
          py::arg("ground_size"), py::arg("blocks"), py::arg("tau_plus_1"));
    m.def("check_ecf",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks) {
              return check_ecf(family_from_args(ground_size, blocks));
          },
          py::arg("ground_size"), py::arg("blocks"));
    m.def("prune_to_ecf",
          [](std::uint32_t ground_size, const std::vector<std::vector<std::uint32_t>> &blocks) {
              BlockFamily fam = prune_to_ecf(family_from_args(ground_size, blocks));
              return fam.blocks;
          },
          py::arg("ground_size"), py::arg("blocks"));
}

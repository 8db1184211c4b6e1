// lrckit command line: constructs locally repairable codes over GF(q) whose
// length can exceed the field size, certifies their optimality exactly, and
// evaluates the associated length/distance bounds. JSON in, JSON out,
// deterministic for fixed inputs and seed.

#include "lrckit/bounds.hpp"
#include "lrckit/code.hpp"
#include "lrckit/designs.hpp"
#include "lrckit/json_io.hpp"
#include "lrckit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using lrc::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1; // not optimal / not decodable / check failed
constexpr int kExitBadInput = 2;      // malformed JSON, bad parameters

void emit(const ordered_json &j, const std::string &out_path) {
    const std::string text = lrc::dump_pretty(j);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw std::invalid_argument("cannot open output file " + out_path);
    os << text;
}

ordered_json load_json(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::invalid_argument("cannot open " + path);
    ordered_json j;
    try {
        is >> j;
    } catch (const std::exception &e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<lrc::Elem> parse_info(const std::string &text, std::uint32_t q) {
    std::vector<lrc::Elem> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const unsigned long value = std::stoul(tok);
        if (value >= q)
            throw std::invalid_argument("symbol " + tok + " outside GF(" + std::to_string(q) + ")");
        out.push_back(static_cast<lrc::Elem>(value));
    }
    return out;
}

// Comma-separated word with `_` marking erasures.
std::pair<std::vector<lrc::Elem>, lrc::ErasurePattern> parse_word(const std::string &text, std::uint32_t q) {
    std::vector<lrc::Elem> word;
    lrc::ErasurePattern pattern;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "_") {
            pattern.erased.push_back(static_cast<std::uint32_t>(word.size()));
            word.push_back(0);
        } else {
            const unsigned long value = std::stoul(tok);
            if (value >= q)
                throw std::invalid_argument("symbol " + tok + " outside GF(" + std::to_string(q) + ")");
            word.push_back(static_cast<lrc::Elem>(value));
        }
    }
    return {std::move(word), std::move(pattern)};
}

std::string join_word(const std::vector<lrc::Elem> &word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i)
        s += (i ? "," : "") + std::to_string(word[i]);
    return s;
}

lrc::BlockFamily design_for(const std::string &kind, const lrc::LrcParams &params) {
    const std::size_t bs = params.set_size();
    const std::uint32_t spare = params.r - params.v;
    if (kind == "identical") {
        lrc::BlockFamily fam;
        fam.ground_size = static_cast<std::uint32_t>(bs);
        std::vector<std::uint32_t> block(bs);
        for (std::size_t i = 0; i < bs; ++i)
            block[i] = static_cast<std::uint32_t>(i);
        fam.blocks.assign(params.w, block);
        return fam;
    }
    if (kind == "sunflower")
        return lrc::sunflower(params.w, params.r, params.delta - 1);
    if (kind == "affine-plane") {
        // lines have p points, so p is pinned to the repair-set size
        const std::uint32_t p = static_cast<std::uint32_t>(bs);
        if (!lrc::is_prime(p))
            throw std::invalid_argument("affine-plane design needs r+delta-1 prime, got " + std::to_string(p));
        if (static_cast<std::uint64_t>(p) * p + spare > params.q)
            throw std::invalid_argument("field too small for the affine-plane design");
        return lrc::affine_plane_lines(p);
    }
    if (kind == "sts") {
        if (bs != 3)
            throw std::invalid_argument("sts design needs r+delta-1 = 3");
        if (params.q < 3 + spare)
            throw std::invalid_argument("field too small for a Steiner triple system");
        std::uint64_t n1 = params.q - spare;
        while (n1 % 6 != 3)
            --n1;
        return lrc::steiner_triple_bose(static_cast<std::uint32_t>(n1));
    }
    if (kind.rfind("file:", 0) == 0)
        return lrc::family_from_json(load_json(kind.substr(5)));
    throw std::invalid_argument("unknown design kind " + kind);
}

int run(int argc, char **argv) {
    CLI::App app{"optimal locally repairable codes with length beyond the field size"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after a subcommand too
    std::uint64_t seed = 0;
    unsigned threads = 1;
    app.add_option("--seed", seed, "seed for randomized trials (reserved; all subcommands are deterministic)");
    app.add_option("--threads", threads, "worker threads for distance certification")->check(CLI::Range(1u, 256u));

    // construct
    auto *construct = app.add_subcommand("construct", "build a code from parameters and a design");
    lrc::LrcParams params;
    std::string design_kind = "identical", out_path;
    std::optional<std::uint32_t> w_opt;
    construct->add_option("--q", params.q, "field order")->required();
    construct->add_option("--r", params.r, "locality")->required();
    construct->add_option("--delta", params.delta, "local distance")->required();
    construct->add_option("--v", params.v, "information symbols in the last repair set")->required();
    construct->add_option("--w", w_opt, "number of repair sets (defaults to the whole design)");
    construct->add_option("--design", design_kind, "identical|sunflower|affine-plane|sts|file:PATH");
    construct->add_option("--out", out_path, "output path for the code JSON (default stdout)");

    // bounds
    auto *bounds_cmd = app.add_subcommand("bounds", "evaluate the applicable length/distance bounds");
    std::uint64_t bq = 0, br = 0, bdelta = 0, bk = 0;
    std::optional<std::uint64_t> bd;
    bounds_cmd->add_option("--q", bq)->required();
    bounds_cmd->add_option("--r", br)->required();
    bounds_cmd->add_option("--delta", bdelta)->required();
    bounds_cmd->add_option("--k", bk)->required();
    bounds_cmd->add_option("--d", bd);

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "certify distance, locality, and optimality of a code");
    std::string verify_path;
    verify_cmd->add_option("code", verify_path, "code JSON file")->required();

    // encode
    auto *encode_cmd = app.add_subcommand("encode", "map an information vector to a codeword");
    std::string encode_path, info_text;
    encode_cmd->add_option("code", encode_path)->required();
    encode_cmd->add_option("--info", info_text, "comma-separated information symbols")->required();

    // decode
    auto *decode_cmd = app.add_subcommand("decode", "repair erasures (local first, then global)");
    std::string decode_path, word_text;
    decode_cmd->add_option("code", decode_path)->required();
    decode_cmd->add_option("--word", word_text, "comma-separated word, _ for erasures")->required();

    // reduce
    auto *reduce_cmd = app.add_subcommand("reduce", "apply a code transformation");
    std::string reduce_path, reduce_mode, reduce_out;
    reduce_cmd->add_option("code", reduce_path)->required();
    reduce_cmd->add_option("--mode", reduce_mode, "delta|puncture|m2")->required();
    reduce_cmd->add_option("--out", reduce_out, "output path (default stdout)");

    // designs
    auto *designs_cmd = app.add_subcommand("designs", "emit or check block families");
    std::string kind;
    std::uint32_t dw = 0, petal = 0, core = 0, n1 = 0, dp = 0;
    std::string designs_out;
    designs_cmd->add_option("--kind", kind, "sunflower|sts|affine-plane");
    designs_cmd->add_option("--w", dw, "sunflower: number of blocks");
    designs_cmd->add_option("--petal", petal, "sunflower: petal size");
    designs_cmd->add_option("--core", core, "sunflower: core size");
    designs_cmd->add_option("--n1", n1, "sts: number of points (3 mod 6)");
    designs_cmd->add_option("--p", dp, "affine-plane: prime order");
    designs_cmd->add_option("--out", designs_out, "output path (default stdout)");

    auto *check_cmd = designs_cmd->add_subcommand("check", "run condition checkers on a family");
    std::string check_in;
    std::optional<std::uint32_t> mu, cdelta, packing_tau1;
    std::optional<std::vector<std::uint32_t>> uibf_st;
    bool check_ecf_flag = false;
    check_cmd->add_option("--in", check_in, "family JSON file")->required();
    check_cmd->add_option("--mu", mu, "check the mu-wise intersection condition");
    check_cmd->add_option("--delta", cdelta, "delta for the mu/uibf checks");
    check_cmd->add_option("--uibf", uibf_st, "s t for the union-intersection check")->expected(2);
    check_cmd->add_option("--packing", packing_tau1, "tau+1 for the packing check");
    check_cmd->add_flag("--ecf", check_ecf_flag, "check the essential covering property");

    CLI11_PARSE(app, argc, argv);

    if (*construct) {
        lrc::BlockFamily fam = design_for(design_kind, [&] {
            lrc::LrcParams p0 = params;
            p0.w = w_opt.value_or(1); // placeholder until the family size is known
            return p0;
        }());
        params.w = w_opt.value_or(static_cast<std::uint32_t>(fam.blocks.size()));
        if (design_kind == "identical" || design_kind == "sunflower") {
            if (!w_opt)
                throw std::invalid_argument("--w is required for identical and sunflower designs");
            fam = design_for(design_kind, params);
        }
        lrc::Field f(params.q);
        lrc::EvaluationPlan plan = lrc::plan_from_design(f, params, fam);
        lrc::LrcCode code = lrc::construct(f, params, plan);
        emit(lrc::code_to_json(code), out_path);
        return kExitOk;
    }

    if (*bounds_cmd) {
        ordered_json j;
        j["inputs"] = {{"q", bq}, {"r", br}, {"delta", bdelta}, {"k", bk}};
        if (bd)
            j["inputs"]["d"] = *bd;
        j["bounds"] = ordered_json::array();
        for (const auto &rep : lrc::bounds::evaluate_all(bq, br, bdelta, bk, bd)) {
            ordered_json entry;
            entry["name"] = rep.name;
            entry["applicable"] = rep.applicable;
            if (rep.applicable)
                entry["value"] = rep.value;
            entry["notes"] = rep.notes;
            j["bounds"].push_back(std::move(entry));
        }
        emit(j, "");
        return kExitOk;
    }

    if (*verify_cmd) {
        lrc::LrcCode code = lrc::code_from_json(load_json(verify_path));
        ordered_json cert;
        cert["n"] = code.length();
        cert["k"] = code.dimension();
        cert["q"] = code.field.order();
        cert["r"] = code.r;
        cert["delta"] = code.delta;
        bool valid = true;
        if (lrc::rank(code.field, code.G) != code.G.rows) {
            cert["error"] = "generator is rank deficient";
            valid = false;
        } else if (lrc::mat_mul(code.field, code.G, lrc::transpose(code.H)) != lrc::Matrix(code.G.rows, code.H.rows)) {
            cert["error"] = "G H^T != 0";
            valid = false;
        }
        if (valid) {
            lrc::OptimalityCertificate oc = lrc::certify_optimal(code, threads);
            lrc::LocalityReport loc = lrc::check_locality(code);
            lrc::MdsPartitionReport mds = lrc::check_mds_partition(code);
            cert["d"] = oc.d;
            cert["distance_exact"] = oc.distance_exact;
            cert["singleton_bound"] = oc.bound;
            cert["optimal"] = oc.optimal;
            cert["locality_ok"] = loc.pass;
            cert["mds_partition_ok"] = mds.pass;
            if (!mds.pass)
                cert["mds_partition_detail"] = mds.detail;
            emit(cert, "");
            return oc.optimal && loc.pass ? kExitOk : kExitDomainFailure;
        }
        emit(cert, "");
        return kExitDomainFailure;
    }

    if (*encode_cmd) {
        lrc::LrcCode code = lrc::code_from_json(load_json(encode_path));
        std::cout << join_word(lrc::encode(code, parse_info(info_text, code.field.order()))) << "\n";
        return kExitOk;
    }

    if (*decode_cmd) {
        lrc::LrcCode code = lrc::code_from_json(load_json(decode_path));
        auto [word, pattern] = parse_word(word_text, code.field.order());
        lrc::RepairResult res = lrc::local_repair(code, word, pattern);
        if (!res.ok) {
            std::cerr << "local repair unavailable (" << res.reason << "); trying global decode\n";
            res = lrc::global_decode(code, word, pattern);
        }
        if (!res.ok) {
            std::cerr << "decode failed: " << res.reason << "\n";
            return kExitDomainFailure;
        }
        std::cout << join_word(res.word) << "\n";
        return kExitOk;
    }

    if (*reduce_cmd) {
        lrc::LrcCode code = lrc::code_from_json(load_json(reduce_path));
        if (reduce_mode == "delta") {
            emit(lrc::code_to_json(lrc::delta_reduce(code)), reduce_out);
        } else if (reduce_mode == "puncture") {
            lrc::OptimalityCertificate oc = lrc::certify_optimal(code, threads);
            if (!oc.optimal) {
                std::cerr << "puncture reduction needs an optimal code (d = " << oc.d << ", bound = " << oc.bound
                          << ")\n";
                return kExitDomainFailure;
            }
            emit(lrc::code_to_json(lrc::puncture_reduce(code, oc.d)), reduce_out);
        } else if (reduce_mode == "m2") {
            emit(lrc::matrix_to_json(code.field.order(), lrc::m2_reduce(code)), reduce_out);
        } else {
            throw std::invalid_argument("unknown reduce mode " + reduce_mode);
        }
        return kExitOk;
    }

    if (*designs_cmd) {
        if (*check_cmd) {
            lrc::BlockFamily fam = lrc::family_from_json(load_json(check_in));
            ordered_json j;
            j["ground_size"] = fam.ground_size;
            j["blocks"] = fam.blocks.size();
            j["overlap"] = lrc::overlap(fam);
            bool all_pass = true;
            if (mu) {
                if (!cdelta)
                    throw std::invalid_argument("--mu needs --delta");
                auto rep = lrc::check_mu_condition(fam, *mu, *cdelta);
                j["mu_condition"] = {{"mu", *mu}, {"delta", *cdelta}, {"pass", rep.pass}};
                if (!rep.pass) {
                    j["mu_condition"]["witness"] = rep.subset;
                    j["mu_condition"]["offender"] = rep.offender;
                    j["mu_condition"]["detail"] = rep.detail;
                }
                all_pass = all_pass && rep.pass;
            }
            if (uibf_st) {
                if (!cdelta)
                    throw std::invalid_argument("--uibf needs --delta");
                auto rep = lrc::check_uibf(fam, (*uibf_st)[0], (*uibf_st)[1], *cdelta);
                j["uibf"] = {{"s", (*uibf_st)[0]}, {"t", (*uibf_st)[1]}, {"delta", *cdelta}, {"pass", rep.pass}};
                if (!rep.pass)
                    j["uibf"]["detail"] = rep.detail;
                all_pass = all_pass && rep.pass;
            }
            if (packing_tau1) {
                auto rep = lrc::check_packing(fam, *packing_tau1);
                j["packing"] = {{"tau_plus_1", *packing_tau1}, {"pass", rep.pass}};
                if (!rep.pass)
                    j["packing"]["detail"] = rep.detail;
                all_pass = all_pass && rep.pass;
            }
            if (check_ecf_flag) {
                bool pass = lrc::check_ecf(fam);
                j["ecf"] = {{"pass", pass}};
                all_pass = all_pass && pass;
            }
            emit(j, "");
            return all_pass ? kExitOk : kExitDomainFailure;
        }
        lrc::BlockFamily fam;
        if (kind == "sunflower")
            fam = lrc::sunflower(dw, petal, core);
        else if (kind == "sts")
            fam = lrc::steiner_triple_bose(n1);
        else if (kind == "affine-plane")
            fam = lrc::affine_plane_lines(dp);
        else
            throw std::invalid_argument("unknown design kind " + kind);
        emit(lrc::family_to_json(fam), designs_out);
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

#include "lrckit/verify.hpp"

#include "lrckit/bounds.hpp"
#include "lrckit/polynomial.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace lrc;

namespace {

LrcCode identical_sets_code() {
    Field f(7);
    LrcParams params{7, 3, 3, 1, 5};
    return construct(f, params, identical_plan(f, params));
}

// Weight-enumeration oracle, independent of the column-subset search: walks
// all q^k information vectors and tracks the minimum codeword weight.
std::uint32_t brute_force_distance(const Field &f, const Matrix &g) {
    const std::size_t k = g.rows, n = g.cols;
    std::vector<Elem> info(k, 0);
    std::uint32_t best = static_cast<std::uint32_t>(n) + 1;
    while (true) {
        std::size_t pos = 0;
        while (pos < k && info[pos] + 1 == f.order())
            info[pos++] = 0;
        if (pos == k)
            break;
        ++info[pos];
        std::vector<Elem> word(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (info[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], f.mul(info[i], g.at(i, j)));
        }
        std::uint32_t weight = 0;
        for (Elem x : word)
            weight += x != 0;
        best = std::min(best, weight);
    }
    return best;
}

Matrix random_full_rank(const Field &f, std::size_t k, std::size_t n, std::mt19937 &rng) {
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    while (true) {
        Matrix g(k, n);
        for (auto &x : g.a)
            x = pick(rng);
        if (rank(f, g) == k)
            return g;
    }
}

} // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("min distance examples") {
    Field f(7);
    SUBCASE("repetition pair code has two equal parity columns") {
        Matrix g(2, 4);
        g.at(0, 0) = g.at(0, 1) = 1;
        g.at(1, 2) = g.at(1, 3) = 1;
        DistanceResult d = min_distance(f, g, 4);
        CHECK(d.exact);
        CHECK(d.d == 2);
    }
    SUBCASE("identity code") {
        DistanceResult d = min_distance(f, Matrix::identity(4), 4);
        CHECK(d.exact);
        CHECK(d.d == 1);
    }
    SUBCASE("rank-deficient generators are rejected") {
        Matrix g(2, 3);
        g.at(0, 0) = 1;
        g.at(1, 0) = 1;
        CHECK_THROWS_AS(min_distance(f, g, 3), std::invalid_argument);
    }
    SUBCASE("cap stops the search") {
        LrcCode code = identical_sets_code();
        DistanceResult d = min_distance(code.field, code.G, 3);
        CHECK_FALSE(d.exact);
        CHECK(d.d == 3);
    }
}

TEST_CASE("oracle equivalence on random small codes") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 20) {
        const std::uint32_t q = (done % 3 == 0) ? 5 : (done % 3 == 1) ? 3 : 2;
        const std::size_t k = 2 + done % 4;
        const std::size_t n = k + 2 + done % 5;
        Field f(q);
        std::uint64_t words = 1;
        for (std::size_t i = 0; i < k; ++i)
            words *= q;
        if (words > 1'000'000)
            continue;
        Matrix g = random_full_rank(f, k, n, rng);
        std::uint32_t expected = brute_force_distance(f, g);
        DistanceResult got = min_distance(f, g, static_cast<std::uint32_t>(n));
        CHECK(got.exact);
        CHECK(got.d == expected);
        ++done;
    }
}

TEST_CASE("multithreaded search matches single-threaded") {
    LrcCode code = identical_sets_code();
    DistanceResult solo = min_distance(code.field, code.G, 6, 1);
    DistanceResult quad = min_distance(code.field, code.G, 6, 4);
    CHECK(solo.exact == quad.exact);
    CHECK(solo.d == quad.d);
}

TEST_CASE("locality check") {
    LrcCode code = identical_sets_code();
    LocalityReport rep = check_locality(code);
    CHECK(rep.pass);
    for (const auto &set : rep.sets) {
        CHECK(set.rank == 3);
        CHECK(set.local_distance == 3); // each block is exactly distance delta
    }
    SUBCASE("zeroed block column fails with a witness") {
        LrcCode broken = code;
        for (std::size_t i = 0; i < broken.G.rows; ++i)
            broken.G.at(i, 7) = 0; // inside repair set 1
        LocalityReport bad = check_locality(broken);
        CHECK_FALSE(bad.pass);
        CHECK_FALSE(bad.sets[1].pass);
        CHECK(bad.sets[0].pass);
    }
    SUBCASE("an MDS code with a single repair set passes with r=k delta=d") {
        Field f(7);
        LrcParams params{7, 3, 3, 3, 1};
        LrcCode mds = construct(f, params, identical_plan(f, params));
        CHECK(check_locality(mds).pass);
    }
}

TEST_CASE("mds partition check") {
    LrcCode code = identical_sets_code();
    CHECK(check_mds_partition(code).pass);

    SUBCASE("overlapping sets fail") {
        LrcCode broken = code;
        broken.repair_sets[0][0] = 5;
        MdsPartitionReport rep = check_mds_partition(broken);
        CHECK_FALSE(rep.pass);
        CHECK(rep.detail.find("partition") != std::string::npos);
    }
    SUBCASE("rank below r fails") {
        LrcCode broken = code;
        for (std::size_t i = 0; i < broken.G.rows; ++i) {
            // make column 1 a copy of column 0 and column 2 zero inside set 0:
            // the local rank drops below r
            broken.G.at(i, 1) = broken.G.at(i, 0);
            broken.G.at(i, 2) = 0;
            broken.G.at(i, 3) = broken.G.at(i, 0);
            broken.G.at(i, 4) = 0;
        }
        MdsPartitionReport rep = check_mds_partition(broken);
        CHECK_FALSE(rep.pass);
    }
}

TEST_CASE("optimality certificates") {
    SUBCASE("[25,13] identical-sets code") {
        OptimalityCertificate cert = certify_optimal(identical_sets_code());
        CHECK(cert.d == 5);
        CHECK(cert.bound == 5);
        CHECK(cert.optimal);
    }
    SUBCASE("[15,9] sunflower code") {
        Field f(13);
        LrcParams params{13, 2, 2, 1, 5};
        LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(5, 2, 1)));
        OptimalityCertificate cert = certify_optimal(code);
        CHECK(cert.d == 3);
        CHECK(cert.bound == 3);
        CHECK(cert.optimal);
    }
    SUBCASE("replicated fixture") {
        Field f(7);
        OptimalityCertificate cert = certify_optimal(replicated_rs_fixture(f, 4, 2));
        CHECK(cert.d == 6);
        CHECK(cert.bound == 6);
        CHECK(cert.optimal);
    }
    SUBCASE("certified distance never beats the singleton bound on constructions") {
        for (std::uint32_t v = 1; v <= 2; ++v) {
            Field f(13);
            LrcParams params{13, 2, 2, v, 4};
            LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(4, 2, 1)));
            OptimalityCertificate cert = certify_optimal(code);
            CHECK(static_cast<std::int64_t>(cert.d) <= cert.bound);
        }
    }
}

TEST_CASE("extension-field construction certifies end to end") {
    Field f(9);
    LrcParams params{9, 2, 2, 1, 3};
    LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(3, 2, 1)));
    CHECK(code.length() == 9);
    CHECK(code.dimension() == 5);
    OptimalityCertificate cert = certify_optimal(code);
    CHECK(cert.d == 3);
    CHECK(cert.optimal);
    CHECK(check_locality(code).pass);
    CHECK(check_mds_partition(code).pass);

    // repair round-trips over the extension field
    std::mt19937 rng(55);
    std::uniform_int_distribution<Elem> pick(0, 8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> info(code.dimension());
        for (auto &x : info)
            x = pick(rng);
        std::vector<Elem> word = encode(code, info);
        std::vector<Elem> damaged = word;
        damaged[4] = 0;
        RepairResult local = local_repair(code, damaged, {{4}});
        REQUIRE(local.ok);
        CHECK(local.word == word);
        damaged = word;
        damaged[0] = 0;
        damaged[8] = 0;
        RepairResult global = global_decode(code, damaged, {{0, 8}});
        REQUIRE(global.ok);
        CHECK(global.word == word);
    }
}

TEST_CASE("affine-plane code has an explicit weight-5 codeword") {
    // the exhaustive search bounds d from below; this witness pins d <= 5:
    // a polynomial vanishing at all three alphas contributes zero check sums,
    // so it extends by zero polynomials everywhere else
    Field f(29);
    BlockFamily lines = affine_plane_lines(5);
    LrcParams params{29, 4, 2, 1, 30};
    EvaluationPlan plan = plan_from_design(f, params, lines);
    LrcCode code = construct(f, params, plan);

    Polynomial vanishing = poly_from_roots(f, plan.alphas);
    std::vector<Elem> info(code.dimension(), 0);
    for (std::uint32_t t = 0; t < 4; ++t)
        info[t] = poly_eval(f, vanishing, plan.sets[0][t]);
    std::vector<Elem> word = encode(code, info);
    std::size_t weight = 0;
    for (Elem x : word)
        weight += x != 0;
    CHECK(weight == 5);
    for (std::size_t c = 5; c < word.size(); ++c)
        CHECK(word[c] == 0); // support lies inside the first repair set
}

TEST_CASE("construction invariants across a parameter grid") {
    std::mt19937 rng(909);
    struct Instance {
        std::uint32_t q, r, delta, v, w;
    };
    for (Instance inst : std::initializer_list<Instance>{
             {11, 2, 2, 1, 3}, {11, 2, 3, 2, 2}, {13, 3, 2, 2, 3}, {17, 3, 3, 1, 3},
             {17, 2, 4, 2, 3}, {19, 4, 2, 3, 3}, {8, 2, 2, 1, 2},  {27, 3, 2, 1, 6}}) {
        CAPTURE(inst.q);
        CAPTURE(inst.r);
        CAPTURE(inst.delta);
        CAPTURE(inst.v);
        CAPTURE(inst.w);
        Field f(inst.q);
        LrcParams params{inst.q, inst.r, inst.delta, inst.v, inst.w};
        LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(inst.w, inst.r, inst.delta - 1)));
        CHECK(code.length() == params.n());
        CHECK(code.dimension() == params.k());
        CHECK(rank(f, code.G) == params.k());
        CHECK(mat_mul(f, code.G, transpose(code.H)) == Matrix(code.G.rows, code.H.rows));
        CHECK(check_mds_partition(code).pass);
        CHECK(check_locality(code).pass);
        // sunflower plans satisfy the intersection condition, so the codes
        // meet the distance bound whenever mu*delta >= r-v is reachable
        OptimalityCertificate cert = certify_optimal(code);
        CHECK(static_cast<std::int64_t>(cert.d) <= cert.bound);
        if (inst.w * inst.delta >= inst.r - inst.v)
            CHECK(cert.optimal);
        std::uniform_int_distribution<Elem> pick(0, inst.q - 1);
        std::vector<Elem> info(code.dimension());
        for (auto &x : info)
            x = pick(rng);
        std::vector<Elem> word = encode(code, info);
        for (Elem s : global_checksums(code, word, rng))
            CHECK(s == 0);
    }
}

TEST_CASE("every construction output has the MDS-partition property") {
    for (std::uint32_t v : {1u, 2u}) {
        for (std::uint32_t w : {2u, 4u}) {
            Field f(13);
            LrcParams params{13, 2, 2, v, w};
            LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(w, 2, 1)));
            CAPTURE(v);
            CAPTURE(w);
            CHECK(check_mds_partition(code).pass);
        }
    }
    Field f(7);
    LrcParams params{7, 3, 3, 2, 3};
    LrcCode code = construct(f, params, identical_plan(f, params));
    CHECK(check_mds_partition(code).pass);
}

TEST_CASE("the mu condition certifies optimality") {
    // whenever the plan's family passes the mu condition with mu*delta >= r-v,
    // the construction certifies optimal
    Field f(13);
    LrcParams params{13, 2, 2, 1, 5};
    BlockFamily fam = sunflower(5, 2, 1);
    REQUIRE(check_mu_condition(fam, 1, 2).pass); // mu=1, mu*delta = 2 >= r-v = 1
    LrcCode code = construct(f, params, plan_from_design(f, params, fam));
    CHECK(certify_optimal(code).optimal);
}

TEST_SUITE_END();

#include "lrckit/code.hpp"

#include "lrckit/json_io.hpp"
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

LrcCode sunflower_code() {
    Field f(13);
    LrcParams params{13, 2, 2, 1, 5};
    return construct(f, params, plan_from_design(f, params, sunflower(5, 2, 1)));
}

std::vector<Elem> random_info(const LrcCode &code, std::mt19937 &rng) {
    std::uniform_int_distribution<Elem> pick(0, code.field.order() - 1);
    std::vector<Elem> info(code.dimension());
    for (auto &x : info)
        x = pick(rng);
    return info;
}

} // namespace

TEST_SUITE_BEGIN("code");

TEST_CASE("repetition degenerate case r=1 delta=2") {
    for (std::uint32_t q : {4u, 7u}) {
        Field f(q);
        LrcParams params{q, 1, 2, 1, 2};
        LrcCode code = construct(f, params, plan_from_design(f, params, sunflower(2, 1, 1)));
        CHECK(code.length() == 4);
        CHECK(code.dimension() == 2);
        CHECK(encode(code, {3 % q, 1}) == std::vector<Elem>{3 % q, 3 % q, 1, 1});
        CHECK(encode(code, {0, 0}) == std::vector<Elem>{0, 0, 0, 0});
    }
}

TEST_CASE("identical plan mirrors the smallest field elements") {
    Field f(7);
    LrcParams params{7, 3, 3, 1, 5};
    EvaluationPlan plan = identical_plan(f, params);
    CHECK(plan.alphas == std::vector<Elem>{5, 6});
    for (const auto &set : plan.sets)
        CHECK(set == std::vector<Elem>{0, 1, 2, 3, 4});
}

TEST_CASE("identical-sets instance dimensions") {
    LrcCode code = identical_sets_code();
    CHECK(code.length() == 25);
    CHECK(code.dimension() == 13);
    CHECK(code.claimed_d == 5);
    CHECK(rank(code.field, code.G) == 13);
    CHECK(mat_mul(code.field, code.G, transpose(code.H)) == Matrix(13, 12));
    // unit vector encodes to the matching row of G
    std::vector<Elem> e1(13, 0);
    e1[0] = 1;
    std::vector<Elem> row(code.G.a.begin(), code.G.a.begin() + 25);
    CHECK(encode(code, e1) == row);
}

TEST_CASE("sunflower instance exceeds the field size") {
    LrcCode code = sunflower_code();
    CHECK(code.length() == 15);
    CHECK(code.dimension() == 9);
    CHECK(code.length() > code.field.order());
}

TEST_CASE("construct validates plans") {
    Field f(7);
    LrcParams params{7, 3, 3, 1, 5};
    EvaluationPlan plan = identical_plan(f, params);
    SUBCASE("alpha inside an evaluation set") {
        plan.alphas[0] = 0;
        CHECK_THROWS_WITH_AS(construct(f, params, plan), doctest::Contains("alpha"), std::invalid_argument);
    }
    SUBCASE("duplicate point") {
        plan.sets[2][1] = plan.sets[2][0];
        CHECK_THROWS_AS(construct(f, params, plan), std::invalid_argument);
    }
    SUBCASE("wrong set count") {
        plan.sets.pop_back();
        CHECK_THROWS_AS(construct(f, params, plan), std::invalid_argument);
    }
    SUBCASE("field mismatch") {
        Field f13(13);
        CHECK_THROWS_AS(construct(f13, params, plan), std::invalid_argument);
    }
}

TEST_CASE("encode is linear") {
    std::mt19937 rng(101);
    LrcCode code = sunflower_code();
    const Field &f = code.field;
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> u = random_info(code, rng), v = random_info(code, rng);
        Elem a = pick(rng), b = pick(rng);
        std::vector<Elem> combo(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            combo[i] = f.add(f.mul(a, u[i]), f.mul(b, v[i]));
        std::vector<Elem> lhs = encode(code, combo);
        std::vector<Elem> eu = encode(code, u), ev = encode(code, v);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            CHECK(lhs[i] == f.add(f.mul(a, eu[i]), f.mul(b, ev[i])));
    }
}

TEST_CASE("global check sums vanish on codewords") {
    std::mt19937 rng(202);
    for (LrcCode code : {identical_sets_code(), sunflower_code()}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Elem> word = encode(code, random_info(code, rng));
            for (Elem s : global_checksums(code, word, rng))
                CHECK(s == 0);
        }
        // a corrupted word fails the recomputation
        std::vector<Elem> word = encode(code, random_info(code, rng));
        word[3] = code.field.add(word[3], 1);
        bool all_zero = true;
        for (int attempt = 0; attempt < 5 && all_zero; ++attempt)
            for (Elem s : global_checksums(code, word, rng))
                all_zero = all_zero && s == 0;
        CHECK_FALSE(all_zero);
    }
}

TEST_CASE("local repair") {
    std::mt19937 rng(303);
    LrcCode code = identical_sets_code();
    std::vector<Elem> word = encode(code, random_info(code, rng));

    SUBCASE("single erasure in the repetition example") {
        Field f(7);
        LrcParams params{7, 1, 2, 1, 2};
        LrcCode rep = construct(f, params, plan_from_design(f, params, sunflower(2, 1, 1)));
        std::vector<Elem> w = encode(rep, {3, 5});
        std::vector<Elem> damaged = w;
        damaged[0] = 0;
        RepairResult res = local_repair(rep, damaged, {{0}});
        CHECK(res.ok);
        CHECK(res.word == w);
    }
    SUBCASE("two erasures inside one repair set") {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::uint32_t> set_pick(0, 4);
            std::uint32_t si = set_pick(rng);
            std::vector<std::uint32_t> coords = code.repair_sets[si];
            std::shuffle(coords.begin(), coords.end(), rng);
            ErasurePattern pattern;
            pattern.erased = {coords[0], coords[1]};
            std::sort(pattern.erased.begin(), pattern.erased.end());
            std::vector<Elem> damaged = word;
            for (std::uint32_t e : pattern.erased)
                damaged[e] = 0;
            RepairResult res = local_repair(code, damaged, pattern);
            REQUIRE(res.ok);
            CHECK(res.word == word);
        }
    }
    SUBCASE("delta erasures in one set are rejected") {
        ErasurePattern pattern{{0, 1, 2}};
        std::vector<Elem> damaged = word;
        RepairResult res = local_repair(code, damaged, pattern);
        CHECK_FALSE(res.ok);
        CHECK(res.reason.find("global_decode") != std::string::npos);
    }
}

TEST_CASE("global decode") {
    std::mt19937 rng(404);
    LrcCode code = identical_sets_code();
    std::vector<Elem> word = encode(code, random_info(code, rng));

    SUBCASE("zero erasures is the identity on codewords") {
        RepairResult res = global_decode(code, word, {});
        CHECK(res.ok);
        CHECK(res.word == word);
    }
    SUBCASE("any d-1 = 4 erasures decode") {
        std::vector<std::uint32_t> all(25);
        std::iota(all.begin(), all.end(), 0u);
        for (int trial = 0; trial < 200; ++trial) {
            std::shuffle(all.begin(), all.end(), rng);
            ErasurePattern pattern;
            pattern.erased.assign(all.begin(), all.begin() + 4);
            std::sort(pattern.erased.begin(), pattern.erased.end());
            std::vector<Elem> damaged = word;
            for (std::uint32_t e : pattern.erased)
                damaged[e] = 0;
            RepairResult res = global_decode(code, damaged, pattern);
            REQUIRE(res.ok);
            CHECK(res.word == word);
        }
    }
    SUBCASE("erasing everything fails with a rank deficiency") {
        std::vector<std::uint32_t> all(25);
        std::iota(all.begin(), all.end(), 0u);
        RepairResult res = global_decode(code, std::vector<Elem>(25, 0), {all});
        CHECK_FALSE(res.ok);
        CHECK(res.rank_deficiency == 13);
    }
    SUBCASE("erasing v coordinates of any single repair set always decodes") {
        // the surviving sets determine v symbols of the remaining one
        for (std::uint32_t si = 0; si < 5; ++si) {
            ErasurePattern pattern{{code.repair_sets[si][2]}};
            std::vector<Elem> damaged = word;
            damaged[pattern.erased[0]] = 0;
            RepairResult res = global_decode(code, damaged, pattern);
            REQUIRE(res.ok);
            CHECK(res.word == word);
        }
        // same property on a v = 2 instance
        Field f17(17);
        LrcParams params{17, 3, 2, 2, 4};
        LrcCode v2 = construct(f17, params, plan_from_design(f17, params, sunflower(4, 3, 1)));
        std::vector<Elem> w2 = encode(v2, std::vector<Elem>(v2.dimension(), 2));
        for (std::uint32_t si = 0; si < 4; ++si) {
            ErasurePattern pattern{{v2.repair_sets[si][0], v2.repair_sets[si][3]}};
            std::vector<Elem> damaged = w2;
            for (std::uint32_t e : pattern.erased)
                damaged[e] = 0;
            RepairResult res = global_decode(v2, damaged, pattern);
            REQUIRE(res.ok);
            CHECK(res.word == w2);
        }
    }
    SUBCASE("local and global agree where both apply") {
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<std::uint32_t> pick(0, 24);
            std::uint32_t a = pick(rng), b = pick(rng);
            if (a == b)
                continue;
            ErasurePattern pattern{{std::min(a, b), std::max(a, b)}};
            std::vector<Elem> damaged = word;
            for (std::uint32_t e : pattern.erased)
                damaged[e] = 0;
            RepairResult local = local_repair(code, damaged, pattern);
            RepairResult global = global_decode(code, damaged, pattern);
            if (local.ok && global.ok)
                CHECK(local.word == global.word);
        }
    }
}

TEST_CASE("replicated fixture") {
    Field f(7);
    CHECK_THROWS_AS(replicated_rs_fixture(f, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(replicated_rs_fixture(f, 8, 2), std::invalid_argument); // q > points fails

    LrcCode code = replicated_rs_fixture(f, 4, 2);
    CHECK(code.length() == 8);
    CHECK(code.dimension() == 2);
    CHECK(code.claimed_d == 6);
    // exhaustive weight enumeration over the 49 codewords
    std::size_t min_weight = 99;
    for (Elem a = 0; a < 7; ++a)
        for (Elem b = 0; b < 7; ++b) {
            if (a == 0 && b == 0)
                continue;
            std::vector<Elem> word = encode(code, {a, b});
            std::size_t weight = 0;
            for (Elem x : word)
                weight += x != 0;
            min_weight = std::min(min_weight, weight);
        }
    CHECK(min_weight == 6);

    LrcCode nine = replicated_rs_fixture(f, 3, 3);
    CHECK(nine.length() == 9);
    CHECK(nine.claimed_d == 6);
}

TEST_CASE("code json round trip") {
    LrcCode code = sunflower_code();
    ordered_json j = code_to_json(code);
    LrcCode back = code_from_json(j);
    CHECK(back.G == code.G);
    CHECK(back.H == code.H);
    CHECK(back.repair_sets == code.repair_sets);
    CHECK(back.plan.alphas == code.plan.alphas);
    CHECK(back.plan.sets == code.plan.sets);
    CHECK(back.claimed_d == code.claimed_d);
    CHECK(code_to_json(back) == j);
}

TEST_SUITE_END();

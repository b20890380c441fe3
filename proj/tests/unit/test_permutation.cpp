#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "snrep/errors.hpp"
#include "snrep/numeric.hpp"
#include "snrep/permutation.hpp"

#include <map>

using namespace snrep;

TEST_CASE("construction validates bijections") {
    CHECK_NOTHROW(Permutation({1, 0, 2}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({-1, 0, 1}), PreconditionError);
}

TEST_CASE("identity fixes everything") {
    const Permutation e = Permutation::identity(5);
    CHECK(e.n() == 5);
    CHECK(e.fixed_points() == 5);
    CHECK(e.cycle_type() == CycleType{1, 1, 1, 1, 1});
    for (int i = 0; i < 5; ++i) {
        CHECK(e(i) == i);
    }
}

TEST_CASE("after applies the right factor first") {
    // p = (0 1), q = (1 2) in image notation.
    const Permutation p({1, 0, 2});
    const Permutation q({0, 2, 1});
    const Permutation pq = p.after(q);
    // (p.after(q))(1) = p(q(1)) = p(2) = 2.
    CHECK(pq(1) == 2);
    CHECK(pq(2) == 0);
    CHECK(pq(0) == 1);
    // A transposition times a different transposition is a 3-cycle.
    CHECK(pq.cycle_type() == CycleType{3});
    CHECK(p.after(q) != q.after(p));
}

TEST_CASE("composition against the elementwise oracle") {
    for (const auto& pi : testing::all_perm_images(4)) {
        for (const auto& qi : testing::all_perm_images(4)) {
            const Permutation composed = Permutation(pi).after(Permutation(qi));
            for (int i = 0; i < 4; ++i) {
                CHECK(composed(i) == pi[static_cast<size_t>(qi[static_cast<size_t>(i)])]);
            }
        }
    }
}

TEST_CASE("cycle_type matches the cycle-tracing oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& images : testing::all_perm_images(n)) {
            const Permutation p(images);
            CHECK(p.cycle_type().parts() == testing::cycle_type_of(images));
            CHECK(p.fixed_points() == p.cycle_type().fixed_point_count());
        }
    }
}

TEST_CASE("all_permutations enumerates exactly n! distinct elements") {
    for (int n = 1; n <= 6; ++n) {
        const auto perms = all_permutations(n);
        CHECK(BigInt(perms.size()) == factorial(n));
        const auto oracle = testing::all_perm_images(n);
        REQUIRE(perms.size() == oracle.size());
        for (size_t i = 0; i < perms.size(); ++i) {
            CHECK(perms[i].images() == oracle[i]);
        }
    }
}

TEST_CASE("all_permutations guard") {
    CHECK_THROWS_AS(all_permutations(10), ResourceGuardError);
}

TEST_CASE("class sizes observed in the full group match the formula") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::vector<int>, long> counts;
        for (const auto& images : testing::all_perm_images(n)) {
            ++counts[testing::cycle_type_of(images)];
        }
        for (const auto& [parts, count] : counts) {
            CHECK(class_size(CycleType(std::vector<int>(parts))) == count);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "latkit/builders.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/verify.hpp"

using namespace latkit;

TEST_CASE("lattice counts up to isomorphism") {
    CHECK(count_lattices(1) == 1);
    CHECK(count_lattices(2) == 1);
    CHECK(count_lattices(3) == 1);
    CHECK(count_lattices(4) == 2);
    CHECK(count_lattices(5) == 5);
    CHECK(count_lattices(6) == 15);
    CHECK(count_lattices(7) == 53);
}

TEST_CASE("reference generator agrees through size 5") {
    for (int n = 1; n <= 5; ++n) {
        auto ref = verify::detail::naive_enumerate(n);
        CHECK(ref.size() == count_lattices(n));
    }
}

TEST_CASE("the five-element catalog contains M3 and N5") {
    bool found_m3 = false, found_n5 = false;
    enumerate_lattices(5, [&](const Lattice& L) {
        found_m3 = found_m3 || is_isomorphic(L, m3()).has_value();
        found_n5 = found_n5 || is_isomorphic(L, n5()).has_value();
        return true;
    });
    CHECK(found_m3);
    CHECK(found_n5);
}

TEST_CASE("size two is the two-chain") {
    enumerate_lattices(2, [&](const Lattice& L) {
        CHECK(is_isomorphic(L, two()).has_value());
        return true;
    });
}

TEST_CASE("emitted lattices survive re-validation from their cover pairs") {
    for (int n = 1; n <= 6; ++n)
        enumerate_lattices(n, [&](const Lattice& L) {
            Lattice re = Lattice::from_cover_indices(L.name(), L.labels(), L.cover_pairs());
            REQUIRE(re.cover_pairs() == L.cover_pairs());
            for (int x = 0; x < L.size(); ++x)
                for (int y = 0; y < L.size(); ++y) REQUIRE(re.leq(x, y) == L.leq(x, y));
            return true;
        });
}

TEST_CASE("generation order is deterministic and canonically named") {
    auto fingerprint = [](const Lattice& L) {
        std::string s = L.name();
        for (auto [lo, hi] : L.cover_pairs())
            s += "|" + std::to_string(lo) + "<" + std::to_string(hi);
        return s;
    };
    std::vector<std::string> first, second;
    enumerate_lattices(5, [&](const Lattice& L) {
        first.push_back(fingerprint(L));
        return true;
    });
    enumerate_lattices(5, [&](const Lattice& L) {
        second.push_back(fingerprint(L));
        return true;
    });
    CHECK(first == second);
    REQUIRE(first.size() == 5);
    CHECK(first[0].substr(0, 6) == "lat5_0");
}

TEST_CASE("catalog filtering") {
    SECTION("modular five-element lattices exclude N5") {
        Catalog cat(5, 5);
        auto mod = cat.filtered(make_predicate("modular")).to_vector();
        CHECK(mod.size() == 4);
        for (const Lattice& L : mod) CHECK_FALSE(is_isomorphic(L, n5()).has_value());
        bool has_m3 = false;
        for (const Lattice& L : mod) has_m3 = has_m3 || is_isomorphic(L, m3()).has_value();
        CHECK(has_m3);
    }
    SECTION("three distributive five-element lattices") {
        Catalog cat(5, 5);
        CHECK(cat.filtered(make_predicate("distributive")).count() == 3);
    }
    SECTION("a constant-true filter keeps both four-element lattices") {
        Catalog cat(4, 4);
        CHECK(cat.filtered([](const Lattice&) { return true; }).count() == 2);
    }
    SECTION("early stop works") {
        int seen = 0;
        Catalog cat(1, 7);
        cat.for_each([&](const Lattice&) { return ++seen < 3; });
        CHECK(seen == 3);
    }
    SECTION("named predicates") {
        CHECK_NOTHROW(make_predicate("sdj", 2));
        CHECK_NOTHROW(make_predicate("SI"));
        CHECK_NOTHROW(make_predicate("join-semidistributive"));
        CHECK_THROWS_AS(make_predicate("frobnicate"), UnknownPredicateError);
        CHECK_THROWS_AS(make_predicate("n-distributive"), UnknownPredicateError);  // missing n
        CHECK_THROWS_AS(make_predicate("sdj"), UnknownPredicateError);
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(count_lattices(0), SizeGuardError);
    CHECK_THROWS_AS(count_lattices(9), SizeGuardError);
    CHECK_NOTHROW(enumerate_lattices(8, [](const Lattice&) { return false; }));
}

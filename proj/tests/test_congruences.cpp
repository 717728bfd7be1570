#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "latkit/builders.hpp"
#include "latkit/congruence.hpp"
#include "latkit/enumerate.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("principal congruences") {
    SECTION("M3 collapses entirely from any nontrivial pair") {
        Lattice M = m3();
        Congruence c = principal_congruence(M, M.bottom(), M.index_of("a"));
        CHECK(c.is_full());
    }
    SECTION("N5: con(a,c) only merges the doubleton") {
        Lattice N = n5();
        Congruence c = principal_congruence(N, N.index_of("a"), N.index_of("c"));
        CHECK(congruence_to_string(N, c) == "{0}{a,c}{b}{1}");
    }
    SECTION("diagonal pair gives the identity congruence") {
        Lattice N = n5();
        CHECK(principal_congruence(N, 2, 2).is_identity());
    }
    SECTION("compatible and least among compatible partitions containing the pair") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                auto parts = oracle::all_congruence_partitions(L);
                for (int x = 0; x < L.size(); ++x)
                    for (int y = x + 1; y < L.size(); ++y) {
                        Congruence c = principal_congruence(L, x, y);
                        std::vector<int> raw(L.size());
                        for (int i = 0; i < L.size(); ++i) raw[i] = c.block_of(i);
                        REQUIRE(oracle::compatible_partition(L, raw));
                        for (const auto& p : parts) {
                            if (p[x] != p[y]) continue;
                            // c <= p as partitions
                            for (int i = 0; i < L.size(); ++i)
                                for (int j = i + 1; j < L.size(); ++j)
                                    if (c.same(i, j)) REQUIRE(p[i] == p[j]);
                        }
                    }
                return true;
            });
    }
}

TEST_CASE("the congruence lattice") {
    SECTION("counts on the stock lattices") {
        CHECK(all_congruences(m3()).size() == 2);
        CHECK(all_congruences(n5()).size() == 5);
        CHECK(all_congruences(boolean_lattice(2)).size() == 4);
        CHECK(all_congruences(chain(4)).size() == 8);
    }
    SECTION("matches the brute-force partition scan") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                auto all = all_congruences(L);
                auto parts = oracle::all_congruence_partitions(L);
                REQUIRE(all.size() == parts.size());
                for (const auto& p : parts) {
                    Congruence c(p);
                    CHECK(std::find(all.begin(), all.end(), c) != all.end());
                }
                return true;
            });
    }
    SECTION("size guard") {
        CHECK_THROWS_AS(all_congruences(chain(41)), SizeGuardError);
        CHECK_NOTHROW(all_congruences(chain(41), 64));
    }
}

TEST_CASE("subdirect irreducibility") {
    SECTION("M3 is simple, so subdirectly irreducible with full monolith") {
        auto v = is_subdirectly_irreducible(m3());
        REQUIRE(v.subdirectly_irreducible);
        CHECK(v.monolith.is_full());
    }
    SECTION("N5 is subdirectly irreducible with monolith con(a,c)") {
        Lattice N = n5();
        auto v = is_subdirectly_irreducible(N);
        REQUIRE(v.subdirectly_irreducible);
        CHECK(v.monolith == principal_congruence(N, N.index_of("a"), N.index_of("c")));
    }
    SECTION("products are not subdirectly irreducible") {
        CHECK_FALSE(is_subdirectly_irreducible(boolean_lattice(2)).subdirectly_irreducible);
        CHECK_FALSE(is_subdirectly_irreducible(chain(3)).subdirectly_irreducible);
    }
    SECTION("agrees with the definition via the full congruence lattice") {
        for (int n = 2; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                auto all = all_congruences(L);
                // count minimal nonzero congruences
                int minimal = 0;
                Congruence mono;
                for (const auto& c : all) {
                    if (c.is_identity()) continue;
                    bool is_min = true;
                    for (const auto& d : all)
                        if (!d.is_identity() && !(d == c) && d.leq(c)) { is_min = false; break; }
                    if (is_min) {
                        ++minimal;
                        mono = c;
                    }
                }
                auto v = is_subdirectly_irreducible(L);
                REQUIRE(v.subdirectly_irreducible == (minimal == 1));
                if (v.subdirectly_irreducible) REQUIRE(v.monolith == mono);
                return true;
            });
    }
}

TEST_CASE("quotients") {
    Lattice N = n5();
    SECTION("by the identity: isomorphic to the original") {
        Lattice Q = quotient(N, identity_congruence(N));
        CHECK(is_isomorphic(Q, N).has_value());
    }
    SECTION("by the full congruence: one element") {
        CHECK(quotient(N, full_congruence(N)).size() == 1);
    }
    SECTION("N5 / con(a,c) is the 2x2 diamond") {
        Congruence c = principal_congruence(N, N.index_of("a"), N.index_of("c"));
        Lattice Q = quotient(N, c);
        REQUIRE(Q.size() == 4);
        CHECK(is_isomorphic(Q, boolean_lattice(2)).has_value());
    }
    SECTION("quotients never gain congruences") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                auto all = all_congruences(L);
                for (const auto& theta : all)
                    CHECK(all_congruences(quotient(L, theta)).size() <= all.size());
                return true;
            });
    }
}

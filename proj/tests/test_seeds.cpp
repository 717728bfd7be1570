#include <catch2/catch_amalgamated.hpp>

#include "latkit/builders.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/identities.hpp"
#include "latkit/seeds.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("span and projection") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b"), c = M.index_of("c");
    SECTION("span of two atoms") {
        SubJoinSemilattice S = span(M, ElemSet::of({a, b}));
        CHECK(S.carrier() == ElemSet::of({M.bottom(), a, b, M.top()}));
        CHECK(S.proj(c) == M.bottom());
        CHECK(S.proj(a) == a);
        CHECK(S.proj(M.top()) == M.top());
    }
    SECTION("span of all join-irreducibles is everything") {
        CHECK(span(M, M.join_irreducibles()).carrier() == M.universe());
    }
    SECTION("empty span is the zero ideal") {
        SubJoinSemilattice S = span(M, ElemSet{});
        CHECK(S.carrier() == ElemSet::single(M.bottom()));
        CHECK(S.proj(M.top()) == M.bottom());
    }
    SECTION("relative meet is the largest carrier element below both") {
        SubJoinSemilattice S = span(M, ElemSet::of({a, b}));
        CHECK(S.rel_meet(a, b) == M.bottom());
        CHECK(S.rel_meet(M.top(), a) == a);
    }
    SECTION("exported lattice: the 2x2 diamond on {0,a,b,1}") {
        SubJoinSemilattice S = span(M, ElemSet::of({a, b}));
        Lattice E = S.export_lattice();
        REQUIRE(E.size() == 4);
        CHECK(is_isomorphic(E, boolean_lattice(2)).has_value());
        CHECK(E.labels() == std::vector<std::string>{"0", "a", "b", "1"});
    }
}

TEST_CASE("relative term evaluation") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b"), c = M.index_of("c");
    SECTION("projected argument collapses to zero") {
        SubJoinSemilattice S = span(M, ElemSet::of({a, b}));
        CHECK(S.eval_relative(parse_term("x & (y | z)"), {{"x", c}, {"y", a}, {"z", b}}) ==
              M.bottom());
    }
    SECTION("joins stay in the carrier") {
        SubJoinSemilattice S = span(M, ElemSet::single(a));
        CHECK(S.eval_relative(parse_term("y | z"), {{"y", a}, {"z", a}}) == a);
    }
    SECTION("with the full carrier, relative = ambient") {
        for (const Lattice& L : {m3(), n5()}) {
            SubJoinSemilattice S = span(L, L.join_irreducibles());
            for (const char* src : {"x & (y | z)", "x | (y & z)", "y & (x | (z & (x | y)))"}) {
                Term t = parse_term(src);
                for (int x = 0; x < L.size(); ++x)
                    for (int y = 0; y < L.size(); ++y)
                        for (int z = 0; z < L.size(); ++z) {
                            Assignment asg{{"x", x}, {"y", y}, {"z", z}};
                            REQUIRE(S.eval_relative(t, asg) == eval(L, t, asg));
                        }
            }
        }
    }
    SECTION("monotone in the carrier on all chains P inside Q inside J(M3)") {
        Lattice L = m3();
        std::vector<int> ji;
        for (int x : L.join_irreducibles()) ji.push_back(x);
        Term t = parse_term("x & (y | z)");
        for (std::uint64_t qm = 0; qm < (1u << ji.size()); ++qm)
            for (std::uint64_t pm = 0; pm < (1u << ji.size()); ++pm) {
                if ((pm & qm) != pm) continue;
                ElemSet P, Q;
                for (std::size_t i = 0; i < ji.size(); ++i) {
                    if (pm & (1u << i)) P.add(ji[i]);
                    if (qm & (1u << i)) Q.add(ji[i]);
                }
                SubJoinSemilattice SP = span(L, P), SQ = span(L, Q);
                for (int x = 0; x < L.size(); ++x)
                    for (int y = 0; y < L.size(); ++y)
                        for (int z = 0; z < L.size(); ++z) {
                            Assignment asg{{"x", x}, {"y", y}, {"z", z}};
                            REQUIRE(L.leq(SP.eval_relative(t, asg), SQ.eval_relative(t, asg)));
                        }
            }
    }
    SECTION("unbound variable") {
        SubJoinSemilattice S = span(M, ElemSet::single(a));
        CHECK_THROWS_AS(S.eval_relative(parse_term("q"), {}), UnboundVariableError);
    }
}

TEST_CASE("join density") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b");
    SECTION("two atoms are not join-dense in M3") {
        auto v = is_join_dense(M, ElemSet::of({a, b}));
        REQUIRE_FALSE(v.holds);
        CHECK(v.witness == M.index_of("c"));
    }
    SECTION("join-irreducibles and the full set are join-dense") {
        CHECK(is_join_dense(M, M.join_irreducibles()).holds);
        CHECK(is_join_dense(M, M.universe()).holds);
    }
    SECTION("agrees with the two-element criterion on all subsets") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L.size()); ++mask) {
                    ElemSet sigma{mask};
                    CHECK(is_join_dense(L, sigma).holds ==
                          oracle::join_dense_two_elem(L, sigma));
                }
                return true;
            });
    }
}

TEST_CASE("seed hierarchy") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b"), c = M.index_of("c");
    SECTION("two atoms of M3 are not a pre-seed; frozen counterexample") {
        auto v = is_pre_seed(M, ElemSet::of({a, b}));
        REQUIRE_FALSE(v.holds);
        CHECK(v.p == a);
        CHECK(v.cover == ElemSet::of({b, c}));
    }
    SECTION("the join-irreducibles of M3 form a seed") {
        CHECK(is_seed(M, M.join_irreducibles()).holds);
        CHECK(is_quasi_seed(M, M.join_irreducibles()).holds);
        CHECK(is_pre_seed(M, M.join_irreducibles()).holds);
    }
    SECTION("quasi-seeds must sit inside the join-irreducibles") {
        auto v = is_quasi_seed(M, ElemSet::single(M.top()));
        REQUIRE_FALSE(v.holds);
    }
    SECTION("every small lattice is strongly spatial") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                CHECK(is_strongly_spatial(L).holds);
                return true;
            });
    }
    SECTION("J(L) is a quasi-seed in every small lattice") {
        for (int n = 1; n <= 6; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                CHECK(is_quasi_seed(L, L.join_irreducibles()).holds);
                return true;
            });
    }
    SECTION("seed implies quasi-seed implies pre-seed on all subsets") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                ElemSet nonzero = L.universe().without(L.bottom());
                std::vector<int> pool;
                for (int x : nonzero) pool.push_back(x);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
                    ElemSet sigma;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (mask & (std::uint64_t{1} << i)) sigma.add(pool[i]);
                    const bool se = is_seed(L, sigma).holds;
                    const bool qs = is_quasi_seed(L, sigma).holds;
                    const bool ps = is_pre_seed(L, sigma).holds;
                    if (se) CHECK(qs);
                    if (qs) CHECK(ps);
                }
                return true;
            });
    }
}

TEST_CASE("projection homomorphism criterion") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b"), c = M.index_of("c");
    SECTION("fails for two atoms of M3 at the frozen pair") {
        auto v = galois_pi_is_homomorphism(M, ElemSet::of({a, b}));
        REQUIRE_FALSE(v.holds);
        CHECK(v.join_law);
        CHECK(v.a == a);
        CHECK(v.b == c);
    }
    SECTION("holds when the span is everything") {
        CHECK(galois_pi_is_homomorphism(M, M.join_irreducibles()).holds);
    }
    SECTION("meet preservation holds for spans inside chains") {
        Lattice C = chain(4);
        for (std::uint64_t mask = 0; mask < (1u << 4); ++mask) {
            SubJoinSemilattice S = span(C, ElemSet{mask});
            for (int x = 0; x < C.size(); ++x)
                for (int y = 0; y < C.size(); ++y)
                    CHECK(S.proj(C.meet(x, y)) == S.rel_meet(S.proj(x), S.proj(y)));
        }
    }
    SECTION("equivalent to the pre-seed property on every subset") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                ElemSet nonzero = L.universe().without(L.bottom());
                std::vector<int> pool;
                for (int x : nonzero) pool.push_back(x);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
                    ElemSet sigma;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (mask & (std::uint64_t{1} << i)) sigma.add(pool[i]);
                    CHECK(is_pre_seed(L, sigma).holds ==
                          galois_pi_is_homomorphism(L, sigma).holds);
                }
                return true;
            });
    }
}

TEST_CASE("spans of join-irreducible subsets inherit 2-distributivity (M3)") {
    Lattice L = m3();
    REQUIRE(is_n_distributive_by_covers(L, 2).valid);
    std::vector<int> ji;
    for (int x : L.join_irreducibles()) ji.push_back(x);
    for (std::uint64_t mask = 0; mask < (1u << ji.size()); ++mask) {
        ElemSet P;
        for (std::size_t i = 0; i < ji.size(); ++i)
            if (mask & (1u << i)) P.add(ji[i]);
        Lattice S = span(L, P).export_lattice();
        CHECK(is_n_distributive(S, 2).valid);
    }
}

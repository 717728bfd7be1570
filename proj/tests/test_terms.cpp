#include <catch2/catch_amalgamated.hpp>

#include "latkit/builders.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/identities.hpp"
#include "latkit/refute.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("parser") {
    SECTION("meet binds tighter than join") {
        Term t = parse_term("x & (y | z)");
        CHECK(t.equals(Term::meet(Term::var("x"), Term::join(Term::var("y"), Term::var("z")))));
        CHECK(t.to_string() == "x & (y | z)");
        CHECK(parse_term("x & y | z").to_string() == "x & y | z");  // (x&y)|z
        CHECK(parse_term("x & y | z")
                  .equals(Term::join(Term::meet(Term::var("x"), Term::var("y")), Term::var("z"))));
    }
    SECTION("left association") {
        Term t = parse_term("x | y | z");
        CHECK(t.equals(Term::join(Term::join(Term::var("x"), Term::var("y")), Term::var("z"))));
        CHECK(t.to_string() == "x | y | z");
    }
    SECTION("identifiers") {
        CHECK(parse_term("foo_1 & y0").vars() == std::vector<std::string>{"foo_1", "y0"});
    }
    SECTION("printer round-trips structure") {
        for (const char* src : {"x", "x & y & z", "x | (y | z)", "(x | y) & (x | z)",
                                "y & (x | (z & (x | y)))"}) {
            Term t = parse_term(src);
            CHECK(parse_term(t.to_string()).equals(t));
        }
    }
    SECTION("errors carry the token position") {
        try {
            parse_term("x & & y");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.token_index == 3);
        }
        CHECK_THROWS_AS(parse_term(""), ParseError);
        CHECK_THROWS_AS(parse_term("(x | y"), ParseError);
        CHECK_THROWS_AS(parse_term("x y"), ParseError);
        CHECK_THROWS_AS(parse_term("X"), ParseError);
    }
}

TEST_CASE("evaluation") {
    Lattice M = m3();
    const int a = M.index_of("a"), b = M.index_of("b");
    CHECK(eval(M, parse_term("x | y"), {{"x", a}, {"y", b}}) == M.top());
    for (int e = 0; e < M.size(); ++e)
        CHECK(eval(M, parse_term("x & x"), {{"x", e}}) == e);

    Lattice N = n5();
    CHECK(eval(N, parse_term("y & (x | z)"),
               {{"x", N.index_of("b")}, {"y", N.index_of("c")}, {"z", N.index_of("a")}}) ==
          N.index_of("c"));

    CHECK_THROWS_AS(eval(M, parse_term("x | q"), {{"x", a}}), UnboundVariableError);
}

TEST_CASE("identity checking") {
    Lattice M = m3();
    SECTION("M3 is not distributive; canonical witness is the atom triple") {
        Verdict v = holds_identity(M, parse_term("x & (y | z)"), parse_term("(x & y) | (x & z)"));
        REQUIRE_FALSE(v.valid);
        Assignment expect{{"x", M.index_of("a")}, {"y", M.index_of("b")}, {"z", M.index_of("c")}};
        CHECK(v.counterexample == expect);
    }
    SECTION("syntactic identity is always valid") {
        CHECK(holds_identity(M, parse_term("x & (y | z)"), parse_term("x & (y | z)")).valid);
    }
    SECTION("chains are distributive") {
        CHECK(is_distributive(chain(3)).valid);
    }
    SECTION("budget guard") {
        CHECK_THROWS_AS(holds_identity(M, parse_term("x & (y | z)"),
                                       parse_term("(x & y) | (x & z)"), 10),
                        SizeGuardError);
    }
    SECTION("multithreaded scan gives the same canonical witness") {
        Verdict v1 = holds_identity(M, parse_term("x & (y | z)"), parse_term("(x & y) | (x & z)"),
                                    kDefaultEvalBudget, 1);
        Verdict v4 = holds_identity(M, parse_term("x & (y | z)"), parse_term("(x & y) | (x & z)"),
                                    kDefaultEvalBudget, 4);
        CHECK(v1.valid == v4.valid);
        CHECK(v1.counterexample == v4.counterexample);
    }
}

TEST_CASE("n-distributivity") {
    Lattice M = m3();
    CHECK_FALSE(is_n_distributive(M, 1).valid);
    CHECK(is_n_distributive(M, 2).valid);
    CHECK(is_n_distributive(chain(4), 1).valid);
    CHECK_FALSE(is_n_distributive_by_covers(M, 1).valid);
    CHECK(is_n_distributive_by_covers(M, 2).valid);

    SECTION("identity route agrees with raw-loop oracles") {
        for (const Lattice& L : {m3(), n5(), boolean_lattice(2), chain(4)}) {
            CHECK(is_n_distributive(L, 1).valid == oracle::distributive_def(L));
            CHECK(is_n_distributive(L, 2).valid == oracle::two_distributive_def(L));
        }
    }
    SECTION("witness of the cover route is a genuine oversized irredundant cover") {
        auto v = is_n_distributive_by_covers(M, 1);
        REQUIRE_FALSE(v.valid);
        CHECK(v.cover.size() > 1);
        CHECK(oracle::irredundant_def(M, v.p, v.cover));
        CHECK(M.join_irreducibles().has(v.p));
    }
    CHECK_THROWS_AS(is_n_distributive(M, 0), InputError);
}

TEST_CASE("p_n terms") {
    CHECK(p_term(0).to_string() == "y");
    CHECK(p_term(1).to_string() == "y & (x | z)");
    CHECK(p_term(2).to_string() == "y & (x | (z & (x | y)))");
    SECTION("y & z <= p_n <= y in every small lattice") {
        Term yz = parse_term("y & z"), y = parse_term("y");
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                for (int k = 0; k <= 3; ++k) {
                    CHECK(holds_inclusion(L, yz, p_term(k)).valid);
                    CHECK(holds_inclusion(L, p_term(k), y).valid);
                }
                return true;
            });
    }
}

TEST_CASE("SD-join identities") {
    SECTION("distributive lattices satisfy the n = 1 case") {
        CHECK(holds_sdj(chain(3), 1).valid);
        CHECK(holds_sdj(boolean_lattice(2), 1).valid);
    }
    SECTION("monotone in n, and any level implies join-semidistributivity") {
        for (int n = 1; n <= 6; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                bool prev = holds_sdj(L, 1).valid;
                if (prev) CHECK(is_join_semidistributive(L).valid);
                for (int k = 2; k <= 3; ++k) {
                    bool cur = holds_sdj(L, k).valid;
                    if (prev) CHECK(cur);
                    if (cur) CHECK(is_join_semidistributive(L).valid);
                    prev = cur;
                }
                return true;
            });
    }
}

TEST_CASE("named properties") {
    Lattice M = m3(), N = n5(), B = boolean_lattice(2);
    SECTION("N5: nonmodular but join-semidistributive") {
        CHECK_FALSE(is_modular(N).valid);
        CHECK(is_join_semidistributive(N).valid);
    }
    SECTION("M3: modular but not join-semidistributive, witness is the atom triple") {
        CHECK(is_modular(M).valid);
        Verdict v = is_join_semidistributive(M);
        REQUIRE_FALSE(v.valid);
        Assignment expect{{"x", M.index_of("a")}, {"y", M.index_of("b")}, {"z", M.index_of("c")}};
        CHECK(v.counterexample == expect);
    }
    SECTION("Boolean lattices satisfy everything") {
        CHECK(is_modular(B).valid);
        CHECK(is_distributive(B).valid);
        CHECK(is_join_semidistributive(B).valid);
    }
    SECTION("distributive iff 1-distributive; distributive implies modular") {
        for (int n = 1; n <= 5; ++n)
            enumerate_lattices(n, [&](const Lattice& L) {
                CHECK(is_distributive(L).valid == is_n_distributive(L, 1).valid);
                CHECK(is_distributive(L).valid == oracle::distributive_def(L));
                CHECK(is_modular(L).valid == oracle::modular_def(L));
                if (is_distributive(L).valid) CHECK(is_modular(L).valid);
                return true;
            });
    }
}

TEST_CASE("first-order sentence with two strict upper bounds") {
    SECTION("chains satisfy it") {
        CHECK(holds_sentence_1storder(chain(5)).valid);
    }
    SECTION("M3 with a two-step chain on top violates it") {
        Lattice L = Lattice::from_covers(
            "M3tt", {"0", "a", "b", "c", "1", "t1", "t2"},
            {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"},
             {"1", "t1"}, {"t1", "t2"}});
        Verdict v = holds_sentence_1storder(L);
        REQUIRE_FALSE(v.valid);
        // the witness satisfies the premise and violates the conclusion
        const Assignment& w = v.counterexample;
        const int x = w.at("x"), y = w.at("y"), z = w.at("z"), t1 = w.at("t1"), t2 = w.at("t2");
        const int s = L.join(L.join(x, y), z);
        CHECK(L.lt(s, t1));
        CHECK(L.lt(t1, t2));
        CHECK(L.meet(L.join(x, y), z) != L.join(L.meet(x, z), L.meet(y, z)));
    }
    SECTION("plain M3 satisfies it vacuously") {
        CHECK(holds_sentence_1storder(m3()).valid);
    }
}

TEST_CASE("refutation search") {
    SECTION("distributivity falls at size 5") {
        RefuteResult r = refute(parse_term("x & (y | z)"), parse_term("(x & y) | (x & z)"),
                                std::nullopt, 5);
        REQUIRE(r.found);
        REQUIRE(r.lattice.has_value());
        CHECK(r.lattice->size() == 5);
        CHECK(is_isomorphic(*r.lattice, m3()).has_value());
        // the reported assignment is a genuine counterexample
        CHECK(eval(*r.lattice, parse_term("x & (y | z)"), r.counterexample) !=
              eval(*r.lattice, parse_term("(x & y) | (x & z)"), r.counterexample));
    }
    SECTION("x = x exhausts") {
        RefuteResult r = refute(parse_term("x"), parse_term("x"), std::nullopt, 5);
        CHECK_FALSE(r.found);
        CHECK(r.max_size_searched == 5);
    }
    SECTION("restricted to 1-distributive lattices, distributivity survives") {
        RefuteResult r = refute(parse_term("x & (y | z)"), parse_term("(x & y) | (x & z)"), 1, 6);
        CHECK_FALSE(r.found);
    }
    SECTION("size bound is guarded") {
        CHECK_THROWS_AS(refute(parse_term("x"), parse_term("x"), std::nullopt, 9),
                        SizeGuardError);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/smash.hpp"

using namespace cyclo;

namespace {

ParamSpec spec_for(int m, int n) {
    ParamSpec s;
    s.q = 2;
    s.v = {Rational(1), Rational(3), Rational(5)};
    s.v.resize(static_cast<std::size_t>(m));
    s.n = n;
    return s;
}

RatFn r1(const char* s) { return parse_ratfn(s, 1); }

Matrix<RatFn> scaled(const std::vector<std::vector<const char*>>& rows, const char* factor) {
    Matrix<RatFn> a(rows.size(), rows.size(), RatFn(1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = r1(rows[i][j]) * r1(factor);
    return a;
}

const char* k2 = "1/(q+q^-1)";
const char* k3 = "1/(q^2+1+q^-2)";

/// Permutes a representation of one shape into the order of the given tableau list.
Matrix<RatFn> reorder(const Representation& r, const Matrix<RatFn>& a, const std::vector<StandardMTableau>& order) {
    Matrix<RatFn> b(a.rows(), a.cols(), RatFn(r.m));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) b(i, j) = a(r.index_of(order[i]), r.index_of(order[j]));
    return b;
}

}  // namespace

TEST_CASE("push-through instructions") {
    auto x1 = parse_tableau("[[[1]],[[2]]]");
    auto t = push_through(0, x1);
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0].coefficient == RatFn::v(2, 1));
    CHECK(t.terms[0].residual.b.is_zero());

    auto s = push_through(1, x1);
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0].coefficient == parse_ratfn("-(q-q^-1)*v2/(v1-v2)", 2));
    CHECK(s.terms[0].tableau == x1);
    CHECK(s.terms[1].tableau == parse_tableau("[[[2]],[[1]]]"));
    CHECK(s.terms[1].residual.a == parse_ratfn("(q-q^-1)*v1/(v2-v1)", 2));
    CHECK(s.terms[1].residual.b == RatFn::constant(2, 1));

    auto row = push_through(1, parse_tableau("[[[1,2]],[]]"));
    REQUIRE(row.terms.size() == 1);
    CHECK(row.terms[0].coefficient == RatFn::q(2));
    auto col = push_through(1, parse_tableau("[[[1],[2]],[]]"));
    REQUIRE(col.terms.size() == 1);
    CHECK(col.terms[0].coefficient == -RatFn::q(2).inverse());
    CHECK_THROWS_AS(push_through(2, x1), LookupError);
}

TEST_CASE("J_k pushes through as its content") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& l : enumerate_mpartitions(m, n))
                for (const auto& x : enumerate_standard_tableaux(l))
                    for (int k = 1; k <= n; ++k) {
                        std::string why;
                        CHECK_MESSAGE(verify_jm_push(k, x, &why), why);
                    }
    auto x = parse_tableau("[[[1],[3]],[[2,4]]]");
    for (int k = 1; k <= 4; ++k) CHECK(verify_jm_push(k, x));
}

TEST_CASE("raw J residual words are not scalars") {
    auto e = push_jm(2, parse_tableau("[[[1]],[[2]]]"));
    bool nontrivial = false;
    for (const auto& t : e) nontrivial = nontrivial || !t.word.empty();
    CHECK(nontrivial);
}

TEST_CASE("one factor gives the seminormal module") {
    for (int m = 1; m <= 2; ++m)
        for (const auto& l : enumerate_mpartitions(m, 3)) {
            auto t = build_tensor_module({l});
            auto r = build_representation(l);
            CHECK(t.gens.tau == r.gens.tau);
            for (int i = 1; i < 3; ++i) CHECK(t.gens.sigma[i - 1] == r.sigma(i));
        }
}

TEST_CASE("tensor modules satisfy the defining relations") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n) {
            const auto shapes = enumerate_mpartitions(m, n);
            const auto p = symbolic_parameters(m);
            for (const auto& a : shapes)
                for (const auto& b : shapes) {
                    auto t = build_tensor_module({a, b});
                    CHECK(t.dim() == static_cast<std::size_t>(BigInt(dim_mpartition(a) * dim_mpartition(b)).get_ui()));
                    auto r = verify_defining_relations(t.gens, p);
                    CHECK_MESSAGE(r.ok(), (a.to_string() + " x " + b.to_string() + ": " + r.describe()));
                }
        }
    const auto spec = spec_for(2, 4);
    const auto p = checked_parameters(spec, 4);
    for (const auto& a : enumerate_mpartitions(2, 4))
        for (const auto& b : {parse_mpartition("[[1,1],[2]]"), parse_mpartition("[[2,1],[1]]")}) {
            auto r = verify_defining_relations(build_tensor_module({a, b}, p).gens, p);
            CHECK_MESSAGE(r.ok(), r.describe());
        }
    auto three = build_tensor_module({parse_mpartition("[[1],[1]]"), parse_mpartition("[[1],[1]]"),
                                      parse_mpartition("[[1],[1]]")});
    CHECK(three.dim() == 8);
    CHECK(verify_defining_relations(three.gens, symbolic_parameters(2)).ok());
}

TEST_CASE("size mismatch") {
    CHECK_THROWS_AS(build_tensor_module({parse_shape("[2,1]", 1), parse_shape("[2]", 1)}), SizeMismatchError);
    CHECK_THROWS_AS(build_tensor_module(std::vector<MPartition>{}), PreconditionError);
}

TEST_CASE("printed module matrices of (2,1) x (2,1)") {
    auto t = build_tensor_module({parse_shape("[2,1]", 1), parse_shape("[2,1]", 1)});
    REQUIRE(t.factor_bases[0][0] == parse_tableau("[[[1,2],[3]]]"));
    CHECK(t.gens.sigma[0] == scaled({{"q", "0", "0", "0"}, {"0", "q", "0", "0"}, {"0", "0", "-q^-1", "0"}, {"0", "0", "0", "-q^-1"}}, "1"));
    CHECK(t.gens.sigma[1] == scaled({{"-q^-2", "0", "0", "q^2+1+q^-2"},
                                     {"0", "-q^-2", "1", "q^2+q^-2"},
                                     {"-q^2-q^-2", "q^2+1+q^-2", "q^2", "0"},
                                     {"1", "0", "0", "q^2"}},
                                    k2));
}

TEST_CASE("printed module matrices of the (2,1,1) cases") {
    const auto cases = worked_tensor_cases();
    REQUIRE(cases.size() == 4);
    const auto p = symbolic_parameters(1);
    auto m2a = build_tensor_module_on(cases[1].factor_bases, p);
    CHECK(m2a.gens.sigma[1] == scaled({{"-q^-2", "0", "0", "q^2+1+q^-2", "0", "0"},
                                       {"0", "-q^-2", "1", "q^2+q^-2", "0", "0"},
                                       {"-q^2-q^-2", "q^2+1+q^-2", "q^2", "0", "0", "0"},
                                       {"1", "0", "0", "q^2", "0", "0"},
                                       {"0", "0", "0", "0", "-q^-1*(q+q^-1)", "0"},
                                       {"0", "0", "0", "0", "0", "-q^-1*(q+q^-1)"}},
                                      k2));
    CHECK(m2a.gens.sigma[2] == scaled({{"-q^-1*(q^2+1+q^-2)", "0", "0", "0", "0", "0"},
                                       {"0", "-q^-1*(q^2+1+q^-2)", "0", "0", "0", "0"},
                                       {"0", "0", "-q^-3", "0", "q^3+q+q^-1+q^-3", "0"},
                                       {"0", "0", "0", "-q^-3", "0", "-q-q^-1"},
                                       {"0", "0", "q+q^-1", "0", "q^3", "0"},
                                       {"0", "0", "0", "-q^3-q-q^-1-q^-3", "0", "q^3"}},
                                      k3));

    const char* z = "0";
    auto m2b = build_tensor_module_on(cases[2].factor_bases, p);
    CHECK(m2b.gens.sigma[1] == scaled({{"-q^-2", z, z, z, "q^2+1+q^-2", z, z, z, z},
                                       {z, "-q^-2", z, "1", "q^2+q^-2", z, z, z, z},
                                       {z, z, "-q^-2", z, z, "-1", z, z, z},
                                       {"-q^2-q^-2", "q^2+1+q^-2", z, "q^2", z, z, z, z, z},
                                       {"1", z, z, z, "q^2", z, z, z, z},
                                       {z, z, "-q^2-1-q^-2", z, z, "q^2", z, z, z},
                                       {z, z, z, z, z, z, "-q^-1*(q+q^-1)", z, z},
                                       {z, z, z, z, z, z, z, "-q^-1*(q+q^-1)", z},
                                       {z, z, z, z, z, z, z, z, "-q^-1*(q+q^-1)"}},
                                      k2));
    CHECK(m2b.gens.sigma[2] == scaled({{"-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z, z, z},
                                       {z, "-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z, z},
                                       {z, z, "-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z},
                                       {z, z, z, "-q^-3", z, z, "-q-q^-1", z, z},
                                       {z, z, z, z, "-q^-3", z, z, z, "q^3+q+q^-1+q^-3"},
                                       {z, z, z, z, z, "-q^-3", z, "q+q^-1", "q^3+q^-3"},
                                       {z, z, z, "-q^3-q-q^-1-q^-3", z, z, "q^3", z, z},
                                       {z, z, z, z, "-q^3-q^-3", "q^3+q+q^-1+q^-3", z, "q^3", z},
                                       {z, z, z, z, "q+q^-1", z, z, z, "q^3"}},
                                      k3));

    auto m2c = build_tensor_module_on(cases[3].factor_bases, p);
    CHECK(m2c.gens.sigma[1] == scaled({{"-q^-2", z, z, "q^2+q^-2", "1", z, z, z, z},
                                       {z, "-q^-2", z, "q^2+1+q^-2", z, z, z, z, z},
                                       {z, z, "-q^-2", z, z, "q^2+1+q^-2", z, z, z},
                                       {z, "1", z, "q^2", z, z, z, z, z},
                                       {"q^2+1+q^-2", "-q^2-q^-2", z, z, "q^2", z, z, z, z},
                                       {z, z, "1", z, z, "q^2", z, z, z},
                                       {z, z, z, z, z, z, "-q^-1*(q+q^-1)", z, z},
                                       {z, z, z, z, z, z, z, "-q^-1*(q+q^-1)", z},
                                       {z, z, z, z, z, z, z, z, "-q^-1*(q+q^-1)"}},
                                      k2));
    CHECK(m2c.gens.sigma[2] == scaled({{"-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z, z, z},
                                       {z, "-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z, z},
                                       {z, z, "-q^-1*(q^2+1+q^-2)", z, z, z, z, z, z},
                                       {z, z, z, "-q^-3", z, z, "q^3+q+q^-1+q^-3", z, z},
                                       {z, z, z, z, "-q^-3", z, z, "q^3+q^-3", "q+q^-1"},
                                       {z, z, z, z, z, "-q^-3", z, "q^3+q+q^-1+q^-3", z},
                                       {z, z, z, "q+q^-1", z, z, "q^3", z, z},
                                       {z, z, z, z, z, "q+q^-1", z, "q^3", z},
                                       {z, z, z, z, "q^3+q+q^-1+q^-3", "-q^3-q^-3", z, z, "q^3"}},
                                      k3));
}

TEST_CASE("the small target modules are the seminormal ones") {
    auto r21 = build_representation(parse_shape("[2,1]", 1));
    auto o21 = std::vector{parse_tableau("[[[1,2],[3]]]"), parse_tableau("[[[1,3],[2]]]")};
    auto t21 = target_rep21();
    for (int i = 1; i <= 2; ++i) CHECK(reorder(r21, r21.sigma(i), o21) == t21[i - 1]);
    auto r211 = build_representation(parse_shape("[2,1,1]", 1));
    auto o211 = worked_tensor_cases()[1].factor_bases[0];
    auto t211 = target_rep211();
    for (int i = 1; i <= 3; ++i) CHECK(reorder(r211, r211.sigma(i), o211) == t211[i - 1]);
}

TEST_CASE("worked invariant subspaces") {
    auto report = verify_worked_subspaces();
    for (const auto& s : report.subspaces) {
        CAPTURE(s.case_name);
        CAPTURE(s.subspace);
        CHECK_MESSAGE(s.invariant, s.failure);
        CHECK(s.full_rank);
    }
    for (const auto& f : report.case_failures) FAIL_CHECK(f);
    CHECK(report.ok());
}

TEST_CASE("a wrong spanning vector is detected") {
    auto cases = worked_tensor_cases();
    cases.resize(1);
    cases[0].subspaces[0][1][0].second = RatFn::constant(1, 3);
    auto report = verify_worked_subspaces(cases);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.subspaces[0].invariant);
}

TEST_CASE("decomposition examples") {
    const auto s1 = spec_for(1, 4);
    auto l21 = parse_shape("[2,1]", 1);
    auto d = decompose(build_tensor_module({l21, l21}), spec_for(1, 3));
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == l21);
    CHECK(d[0].second == 2);
    auto d2 = decompose(build_tensor_module({parse_shape("[2,1,1]", 1), parse_shape("[3,1]", 1)}, s1));
    CHECK(d2 == Multiset{{parse_shape("[2,1,1]", 1), 3}});
    auto lam = parse_mpartition("[[1],[1,1]]");
    auto d3 = decompose(build_tensor_module({lam, parse_mpartition("[[3],[]]")}, spec_for(2, 3)));
    CHECK(d3 == Multiset{{lam, 1}});
}

TEST_CASE("tensor products are multiples of the left factor") {
    auto check_all = [](int m, int n) {
        const auto spec = spec_for(m, n);
        const auto p = checked_parameters(spec, n);
        for (const auto& a : enumerate_mpartitions(m, n))
            for (const auto& b : enumerate_mpartitions(m, n)) {
                auto t = build_tensor_module({a, b}, p);
                auto d = decompose(t);
                CHECK_MESSAGE(d == expected_decomposition({a, b}),
                              (a.to_string() + " x " + b.to_string() + " gives " + multiset_to_string(d)));
                std::size_t total = 0;
                for (const auto& [mu, c] : d) total += c * static_cast<std::size_t>(dim_mpartition(mu).get_ui());
                CHECK(total == t.dim());
            }
    };
    for (int n = 1; n <= 3; ++n) {
        check_all(1, n);
        check_all(2, n);
    }
    check_all(1, 4);
}

TEST_CASE("three factors") {
    auto a = parse_mpartition("[[1],[1]]");
    auto b = parse_mpartition("[[2],[]]");
    auto d = decompose(build_tensor_module({a, a, a}, spec_for(2, 2)));
    CHECK(d == Multiset{{a, 4}});
    CHECK(expected_decomposition({a, a, b}) == Multiset{{a, 2}});
}

TEST_CASE("restriction compatibility") {
    auto l21 = parse_shape("[2,1]", 1);
    auto c = verify_restriction_compatibility({l21, l21}, spec_for(1, 3));
    CHECK(c.ok());
    CHECK(c.restricted == Multiset{{parse_shape("[2]", 1), 2}, {parse_shape("[1,1]", 1), 2}});
    auto a = parse_mpartition("[[1],[1]]");
    CHECK(verify_restriction_compatibility({a, a}, spec_for(2, 2)).ok());
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& x : enumerate_mpartitions(m, n)) {
                CHECK(verify_restriction_compatibility({x}, spec_for(m, n)).ok());
                for (const auto& y : enumerate_mpartitions(m, n)) {
                    auto r = verify_restriction_compatibility({x, y}, spec_for(m, n));
                    CHECK_MESSAGE(r.ok(), (multiset_to_string(r.restricted) + " vs " + multiset_to_string(r.factorwise)));
                }
            }
}

TEST_CASE("non-generic specialization is refused") {
    ParamSpec bad = spec_for(2, 2);
    bad.v = {Rational(1), Rational(4)};
    auto a = parse_mpartition("[[1],[1]]");
    CHECK_THROWS_AS(decompose(build_tensor_module({a, a}), bad), GenericityError);
}

TEST_CASE("json exports") {
    auto a = parse_mpartition("[[1],[1]]");
    auto j = tensor_json(build_tensor_module({a, a}));
    CHECK(j["basis"].size() == 4);
    CHECK(j["generators"]["sigma"].size() == 1);
    auto d = multiset_json({{a, 2}});
    CHECK(d[0]["multiplicity"] == 2);
    CHECK(d[0]["shape"] == a.to_string());
}

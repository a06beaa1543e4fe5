#include "cyclo/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>

#include "cyclo/bratteli.hpp"
#include "cyclo/forms.hpp"
#include "cyclo/smash.hpp"
#include "cyclo/worked_examples.hpp"

namespace cyclo {

namespace {

/// Collects cases and keeps the first failure message.
struct Tally {
    CheckResult r;

    explicit Tally(std::string name) { r.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& why) {
        ++r.cases;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = why();
        }
    }
    void fail(const std::string& why) { check(false, [&] { return why; }); }
};

std::vector<MPartition> shapes(int m, int n_min, int n_max) {
    std::vector<MPartition> out;
    for (int n = n_min; n <= n_max; ++n)
        for (auto& l : enumerate_mpartitions(m, n)) out.push_back(l);
    return out;
}

ParamSpec default_spec(int m, int n) {
    ParamSpec s;
    s.q = 2;
    for (int k = 0; k < m; ++k) s.v.push_back(Rational(2 * k + 1));
    s.n = n;
    return s;
}

ParamSpec with_n(ParamSpec s, int n) {
    s.n = n;
    return s;
}

template <class F>
CheckResult timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.detail.empty()) r.detail = std::to_string(r.cases) + " cases";
    return r;
}

// ---------------------------------------------------------------- individual checks

CheckResult golden_matrices() {
    Tally t("golden matrices");
    for (const auto& ex : worked::all()) {
        auto rep = build_representation(parse_mpartition(ex.shape));
        t.check(rep.dim() == ex.basis.size(), [&] { return ex.shape + ": wrong dimension"; });
        for (std::size_t k = 0; k < ex.basis.size() && k < rep.dim(); ++k)
            t.check(rep.basis[k] == parse_tableau(ex.basis[k]), [&] { return ex.shape + ": basis order differs"; });
        auto cmp = [&](const Matrix<RatFn>& a, const worked::Rows& rows, const std::string& what) {
            auto expected = worked::parse_matrix(rows, 2);
            auto d = a.first_difference(expected);
            t.check(!d, [&] {
                return ex.shape + " " + what + " differs at (" + std::to_string(d->first + 1) + ", " +
                       std::to_string(d->second + 1) + ")";
            });
        };
        cmp(rep.tau(), ex.tau, "tau");
        for (std::size_t i = 0; i < ex.sigma.size(); ++i)
            cmp(rep.sigma(static_cast<int>(i) + 1), ex.sigma[i], "sigma_" + std::to_string(i + 1));
    }
    return t.r;
}

CheckResult golden_gram(bool include_middle) {
    Tally t("golden Gram diagonals");
    for (const auto& ex : worked::all()) {
        if (!include_middle && ex.shape == worked::h213().shape) continue;
        auto g = gram_matrix(parse_mpartition(ex.shape));
        for (std::size_t k = 0; k < ex.gram.size(); ++k)
            t.check(g.diagonal.at(k) == parse_ratfn(ex.gram[k], 2),
                    [&] { return ex.shape + ": entry " + std::to_string(k + 1) + " differs"; });
    }
    return t.r;
}

CheckResult relations_symbolic(int m_max, int n_max) {
    Tally t("relations (symbolic)");
    for (int m = 1; m <= m_max; ++m)
        for (const auto& l : shapes(m, 0, n_max)) {
            auto rep = verify_defining_relations(build_representation(l));
            t.check(rep.ok(), [&] { return l.to_string() + ": " + rep.describe(); });
        }
    return t.r;
}

/// Every m up to the number of given v, using the leading parameters.
CheckResult relations_numeric(const ParamSpec& spec, int n_max) {
    Tally t("relations (numeric)");
    for (int m = 1; m <= spec.m(); ++m) {
        ParamSpec s = with_n(spec, n_max);
        s.v.resize(static_cast<std::size_t>(m));
        for (const auto& l : shapes(m, 0, n_max)) {
            auto rep = verify_defining_relations(build_representation(l, s));
            t.check(rep.ok(), [&] { return l.to_string() + ": " + rep.describe(); });
        }
    }
    return t.r;
}

CheckResult dimension_identity(int m_max, int n_max) {
    Tally t("dimension identity");
    for (int m = 1; m <= m_max; ++m) {
        const auto g = young_graph_power(m, n_max);
        for (int n = 0; n <= n_max; ++n) {
            BigInt expected = factorial(n);
            for (int k = 0; k < n; ++k) expected *= m;
            BigInt direct = 0;
            for (const auto& l : enumerate_mpartitions(m, n)) direct += dim_mpartition(l) * dim_mpartition(l);
            t.check(level_square_sum(g, n) == expected && direct == expected,
                    [&] { return "m = " + std::to_string(m) + ", n = " + std::to_string(n); });
            t.check(level_square_sum_recursive(m, n) == expected,
                    [&] { return "recursion, m = " + std::to_string(m) + ", n = " + std::to_string(n); });
            t.check(check_product_dimension(m, n),
                    [&] { return "product rule, m = " + std::to_string(m) + ", n = " + std::to_string(n); });
        }
    }
    return t.r;
}

CheckResult content_strings(int m_max, int n_max) {
    Tally t("content strings");
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n) {
            std::set<ContentString> seen;
            std::size_t total = 0;
            for (const auto& l : enumerate_mpartitions(m, n))
                for (const auto& x : enumerate_standard_tableaux(l)) {
                    auto s = content_string(x);
                    t.check(is_content_string(s, m).ok && string_to_tableau(s, m) == x,
                            [&] { return x.to_string() + " does not round-trip"; });
                    seen.insert(s);
                    ++total;
                }
            t.check(seen.size() == total, [&] {
                return "repeated content string at m = " + std::to_string(m) + ", n = " + std::to_string(n);
            });
        }
    return t.r;
}

CheckResult jm_diagonal(int m_max, int n_max) {
    Tally t("JM diagonal");
    for (int m = 1; m <= m_max; ++m)
        for (const auto& l : shapes(m, 1, n_max)) {
            auto rep = build_representation(l);
            auto js = jm_matrices(rep);
            for (std::size_t i = 0; i < js.size(); ++i) {
                bool ok = js[i].is_diagonal();
                for (std::size_t k = 0; ok && k < rep.dim(); ++k)
                    ok = js[i](k, k) == content_value(content_string(rep.basis[k]).entries[i], m);
                t.check(ok, [&] { return l.to_string() + ": J_" + std::to_string(i + 1); });
            }
        }
    return t.r;
}

CheckResult invariance(int m_max, int n_max, bool orthogonality) {
    Tally t("invariance laws");
    for (int m = 1; m <= m_max; ++m)
        for (const auto& l : shapes(m, 0, n_max)) {
            auto rep = build_representation(l);
            auto g = gram_matrix(l);
            for (auto kind : {InvarianceKind::BilinearSMinus, InvarianceKind::OmegaS, InvarianceKind::VarpiS}) {
                auto r = verify_invariance(rep, g, kind);
                t.check(r.ok, [&] { return l.to_string() + ": " + r.describe(); });
            }
            if (orthogonality) {
                auto r = verify_orthogonality_squared(rep, g);
                t.check(r.ok, [&] { return l.to_string() + ": " + r.describe(); });
            }
            for (const auto& d : g.diagonal) t.check(d.omega() == d, [&] { return l.to_string() + ": Gram entry not omega-stable"; });
        }
    return t.r;
}

CheckResult baxter(int m_max, int n_min, int n_max) {
    Tally t("Baxter relations");
    for (int m = 1; m <= m_max; ++m)
        for (const auto& l : shapes(m, n_min, n_max)) {
            auto r = build_representation(l);
            auto rep = verify_baxter_relations(r, default_spectral_parameters(r.params));
            t.check(rep.ok(), [&] { return l.to_string() + ": " + rep.describe(); });
        }
    return t.r;
}

CheckResult idempotents(const ParamSpec& spec, int n_max) {
    Tally t("idempotents");
    const int m = spec.m();
    for (int n = 1; n <= n_max; ++n) {
        std::vector<StandardMTableau> all;
        for (const auto& l : enumerate_mpartitions(m, n))
            for (auto& x : enumerate_standard_tableaux(l)) all.push_back(x);
        for (const auto& l : enumerate_mpartitions(m, n)) {
            auto amb = build_representation(l, with_n(spec, n));
            auto js = jm_matrices(amb);
            const auto id = Matrix<Rational>::identity(amb.dim(), Rational(0), Rational(1));
            Matrix<Rational> sum(amb.dim(), amb.dim(), Rational(0));
            std::vector<Matrix<Rational>> es;
            for (const auto& x : all) es.push_back(idempotent(x, amb.params, js, amb.dim()));
            for (std::size_t a = 0; a < all.size(); ++a) {
                sum += es[a];
                const std::size_t expected_rank = all[a].shape() == l ? 1 : 0;
                t.check(rank(es[a]) == expected_rank,
                        [&] { return "rank of E for " + all[a].to_string() + " in " + l.to_string(); });
                for (std::size_t b = 0; b < all.size(); ++b) {
                    auto prod = es[a] * es[b];
                    t.check(a == b ? prod == es[a] : prod.is_zero(), [&] {
                        return "E products for " + all[a].to_string() + ", " + all[b].to_string() + " in " + l.to_string();
                    });
                }
            }
            t.check(sum == id, [&] { return "idempotents do not sum to the identity on " + l.to_string(); });
        }
    }
    return t.r;
}

CheckResult tensor_decomposition(int m_max, int n_max, bool with_hecke_four) {
    Tally t("tensor decomposition");
    auto pairs = [&](int m, int n) {
        const auto spec = default_spec(m, n);
        const auto p = checked_parameters(spec, n);
        for (const auto& a : enumerate_mpartitions(m, n))
            for (const auto& b : enumerate_mpartitions(m, n)) {
                auto d = decompose(build_tensor_module({a, b}, p));
                t.check(d == expected_decomposition({a, b}), [&] {
                    return a.to_string() + " x " + b.to_string() + " gives " + multiset_to_string(d);
                });
            }
    };
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n) pairs(m, n);
    if (with_hecke_four) pairs(1, 4);
    auto report = verify_worked_subspaces();
    for (const auto& s : report.subspaces)
        t.check(s.invariant && s.full_rank, [&] {
            return s.case_name + " subspace " + std::to_string(s.subspace) + ": " +
                   (s.failure.empty() ? std::string("rank deficient") : s.failure);
        });
    for (const auto& f : report.case_failures) t.fail(f);
    return t.r;
}

CheckResult restriction_checks(int m_max, int n_max) {
    Tally t("restriction compatibility");
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n)
            for (const auto& a : enumerate_mpartitions(m, n))
                for (const auto& b : enumerate_mpartitions(m, n)) {
                    auto c = verify_restriction_compatibility({a, b}, default_spec(m, n));
                    t.check(c.ok(), [&] {
                        return a.to_string() + " x " + b.to_string() + ": " + multiset_to_string(c.restricted) + " vs " +
                               multiset_to_string(c.factorwise);
                    });
                }
    return t.r;
}

CheckResult traces() {
    Tally t("traces");
    const auto w = parse_word("s1 s3");
    auto r211 = build_representation(parse_shape("[2,1,1]", 1));
    t.check(word_trace(r211, w) == parse_ratfn("-2+q^-2", 1), [] { return "trace on (2,1,1)"; });
    auto r22 = build_representation(parse_shape("[2,2]", 1));
    auto r1111 = build_representation(parse_shape("[1,1,1,1]", 1));
    auto sum = direct_sum(r22.gens, r1111.gens);
    t.check(word_trace(sum, r22.params, w) == parse_ratfn("q^2+2*q^-2", 1), [] { return "trace on (2,2) + (1,1,1,1)"; });
    return t.r;
}

CheckResult commutant(const ParamSpec& spec, int n_max) {
    Tally t("commutant");
    for (const auto& l : shapes(spec.m(), 0, n_max)) {
        const auto d = commutant_dimension(build_representation(l), with_n(spec, n_max));
        t.check(d == 1, [&] { return l.to_string() + ": commutant dimension " + std::to_string(d); });
    }
    return t.r;
}

CheckResult merge(std::string name, const std::vector<CheckResult>& parts) {
    CheckResult r;
    r.name = std::move(name);
    for (const auto& p : parts) {
        r.cases += p.cases;
        if (!p.pass && r.pass) {
            r.pass = false;
            r.detail = p.name + ": " + p.detail;
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"relations",   "gram",      "baxter", "spectrum",  "dimensions",
                                                "idempotents", "commutant", "traces", "appendixA", "appendixC"};
    return names;
}

CheckResult run_suite(const std::string& name, const SuiteOptions& o) {
    const int m = o.spec ? o.spec->m() : o.m;
    const ParamSpec numeric = o.spec ? *o.spec : default_spec(m, o.max_n);
    auto r = timed([&]() -> CheckResult {
        if (name == "relations") return o.spec ? relations_numeric(numeric, o.max_n) : relations_symbolic(m, o.max_n);
        if (name == "gram") return invariance(m, o.max_n, true);
        if (name == "baxter") return baxter(m, 2, o.max_n);
        if (name == "spectrum") return merge("spectrum", {content_strings(m, o.max_n), jm_diagonal(m, o.max_n)});
        if (name == "dimensions") return dimension_identity(m, o.max_n);
        if (name == "idempotents") return idempotents(numeric, std::min(o.max_n, 3));
        if (name == "commutant") return commutant(numeric, o.max_n);
        if (name == "traces") return traces();
        if (name == "appendixA")
            return merge("appendixA", {tensor_decomposition(std::min(m, 2), std::min(o.max_n, 3), o.max_n >= 4),
                                       restriction_checks(std::min(m, 2), std::min(o.max_n, 3))});
        if (name == "appendixC") return merge("appendixC", {golden_matrices(), golden_gram(true)});
        throw LookupError("unknown suite '" + name + "'");
    });
    r.name = name;
    return r;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& names, const SuiteOptions& options, unsigned jobs) {
    for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw LookupError("unknown suite '" + n + "'");
    std::vector<CheckResult> out(names.size());
    if (jobs == 0) jobs = 1;
    std::size_t next = 0;
    while (next < names.size()) {
        std::vector<std::future<CheckResult>> batch;
        const std::size_t start = next;
        for (; next < names.size() && next - start < jobs; ++next)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                       [&, i = next] { return run_suite(names[i], options); }));
        for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
    }
    return out;
}

std::vector<Criterion> acceptance_criteria() {
    std::vector<Criterion> c;
    auto add = [&](std::string title, double budget, std::function<CheckResult()> f) {
        c.push_back({static_cast<int>(c.size()) + 1, std::move(title), budget, [f] { return timed(f); }});
    };
    add("golden matrices of the three m = 2 worked examples", 5, golden_matrices);
    add("golden Gram diagonals of H(2,1,2) and H(2,1,4)", 1, [] { return golden_gram(false); });
    add("defining relations, symbolic m <= 2, n <= 4 and numeric m <= 3, n <= 6", 180, [] {
        ParamSpec s = default_spec(3, 6);
        return merge("relations", {relations_symbolic(2, 4), relations_numeric(s, 6)});
    });
    add("sum of squared dimensions equals n! m^n for m <= 4, n <= 6", 10, [] {
        auto r = dimension_identity(4, 6);
        Tally t("spot values");
        t.check(level_square_sum(young_graph_power(2, 2), 2) == 8, [] { return "m = 2, n = 2 is not 8"; });
        t.check(level_square_sum(young_graph_power(3, 4), 4) == 1944, [] { return "m = 3, n = 4 is not 1944"; });
        return merge("dimensions", {r, t.r});
    });
    add("content strings round-trip and are distinct, m <= 3, n <= 6", 30, [] { return content_strings(3, 6); });
    add("Jucys-Murphy matrices are diagonal with content entries, m <= 2, n <= 4", 60, [] { return jm_diagonal(2, 4); });
    add("invariance of the Gram form for every generator, m <= 2, n <= 4", 60, [] { return invariance(2, 4, false); });
    add("Baxter relations for n = 3, 4 and m <= 2", 60, [] { return baxter(2, 3, 4); });
    add("idempotents: orthogonal, complete, ranks 1 and 0, m = 2, n <= 3", 30,
        [] { return idempotents(default_spec(2, 3), 3); });
    add("tensor products decompose as multiples of the left factor; worked subspaces", 120,
        [] { return tensor_decomposition(2, 3, true); });
    add("trace of sigma_1 sigma_3 on (2,1,1) and on (2,2) + (1,1,1,1)", 1, traces);
    add("commutant dimension 1 at q = 2, v = (1, 3), m = 2, n <= 4", 60, [] {
        ParamSpec s = default_spec(2, 4);
        return commutant(s, 4);
    });
    return c;
}

std::string format_criterion(const Criterion& c, const CheckResult& r) {
    const bool in_time = r.seconds <= c.budget_seconds;
    const bool pass = r.pass && in_time;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s (budget %.0f s)", r.seconds, c.budget_seconds);
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << (c.number < 10 ? " " : "") << c.number << ". " << c.title << "  [" << buf
       << "]";
    if (!r.pass)
        os << "  " << r.detail;
    else if (!in_time)
        os << "  over the time budget";
    else
        os << "  " << r.detail;
    return os.str();
}

}  // namespace cyclo

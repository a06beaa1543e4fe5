#include "cyclo/smash.hpp"

#include <map>
#include <sstream>

namespace cyclo {

PushResult push_through(int index, const StandardMTableau& x) {
    const auto p = symbolic_parameters(x.m());
    PushResult r;
    if (index == 0) {
        if (x.size() < 1) throw LookupError("tau is not a generator for n = 0");
        r.terms.push_back({tableau_content(x, 1, p), x, {p.one(), p.zero(), 0}});
        return r;
    }
    if (index < 1 || index >= x.size())
        throw LookupError("sigma_" + std::to_string(index) + " is not a generator for n = " + std::to_string(x.size()));
    const RatFn ci = tableau_content(x, index, p), cj = tableau_content(x, index + 1, p);
    const RatFn qq = p.q - p.q_inv;
    r.terms.push_back({-(qq * cj / (ci - cj)), x, {p.one(), p.zero(), index}});
    if (auto y = apply_adjacent_transposition(x, index)) r.terms.push_back({p.one(), *y, {qq * ci / (cj - ci), p.one(), index}});
    return r;
}

namespace {

std::string term_key(const StandardMTableau& x, const std::vector<int>& w) {
    std::string k = x.to_string() + "|";
    for (int l : w) k += std::to_string(l) + ",";
    return k;
}

void accumulate(std::map<std::string, SmashTerm>& acc, const StandardMTableau& x, const std::vector<int>& w,
                const RatFn& c) {
    if (c.is_zero()) return;
    auto key = term_key(x, w);
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, SmashTerm{x, w, c});
    else
        it->second.coefficient += c;
}

SmashElement collect(std::map<std::string, SmashTerm>& acc) {
    SmashElement out;
    for (auto& [k, t] : acc)
        if (!t.coefficient.is_zero()) out.push_back(std::move(t));
    return out;
}

}  // namespace

SmashElement left_multiply(int index, const SmashElement& e) {
    std::map<std::string, SmashTerm> acc;
    for (const auto& term : e) {
        for (const auto& pt : push_through(index, term.tableau).terms) {
            const RatFn c = term.coefficient * pt.coefficient;
            accumulate(acc, pt.tableau, term.word, c * pt.residual.a);
            if (!pt.residual.b.is_zero()) {
                std::vector<int> w{pt.residual.index};
                w.insert(w.end(), term.word.begin(), term.word.end());
                accumulate(acc, pt.tableau, w, c * pt.residual.b);
            }
        }
    }
    return collect(acc);
}

namespace {

std::vector<int> jm_word(int k) {
    std::vector<int> w{0};
    for (int i = 1; i < k; ++i) {
        std::vector<int> next{i};
        next.insert(next.end(), w.begin(), w.end());
        next.push_back(i);
        w = std::move(next);
    }
    return w;
}

}  // namespace

SmashElement push_jm(int k, const StandardMTableau& x) {
    if (k < 1 || k > x.size()) throw LookupError("J_" + std::to_string(k) + " is not defined for n = " + std::to_string(x.size()));
    SmashElement e{{x, {}, RatFn::constant(x.m(), 1)}};
    const auto w = jm_word(k);
    for (auto it = w.rbegin(); it != w.rend(); ++it) e = left_multiply(*it, e);
    return e;
}

bool verify_jm_push(int k, const StandardMTableau& x, std::string* why) {
    const auto e = push_jm(k, x);
    const auto p = symbolic_parameters(x.m());
    const RatFn expected = tableau_content(x, k, p);
    std::vector<StandardMTableau> tabs{x};
    for (const auto& t : e) {
        bool seen = false;
        for (const auto& s : tabs) seen = seen || s == t.tableau;
        if (!seen) tabs.push_back(t.tableau);
    }
    for (const auto& mu : enumerate_mpartitions(x.m(), x.size())) {
        const auto rep = build_representation(mu);
        const auto id = Matrix<RatFn>::identity(rep.dim(), p.zero(), p.one());
        for (const auto& y : tabs) {
            Matrix<RatFn> acc(rep.dim(), rep.dim(), p.zero());
            for (const auto& t : e) {
                if (!(t.tableau == y)) continue;
                GeneratorWord w;
                for (int l : t.word) w.letters.push_back({l, false});
                acc += evaluate_word(rep.gens, rep.params, w) * t.coefficient;
            }
            const auto target = y == x ? id * expected : Matrix<RatFn>(rep.dim(), rep.dim(), p.zero());
            if (!(acc == target)) {
                if (why)
                    *why = "residual of " + y.to_string() + " differs from the expected value in the module " +
                           mu.to_string();
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- tensor modules

TensorModule<RatFn> build_tensor_module(const std::vector<MPartition>& shapes) {
    if (shapes.empty()) throw PreconditionError("a tensor module needs at least one factor");
    return build_tensor_module(shapes, symbolic_parameters(shapes.front().m()));
}

TensorModule<Rational> build_tensor_module(const std::vector<MPartition>& shapes, const ParamSpec& spec) {
    if (shapes.empty()) throw PreconditionError("a tensor module needs at least one factor");
    return build_tensor_module(shapes, checked_parameters(spec, shapes.front().size()));
}

Multiset decompose(const GeneratorMatrices<Rational>& g, const Parameters<Rational>& p) {
    Multiset out;
    if (g.tau_placeholder) {
        out.emplace_back(MPartition::empty(p.m), g.dim());
        return out;
    }
    const auto jm = jm_matrices(g);
    for (const auto& mu : enumerate_mpartitions(p.m, g.n())) {
        const auto tabs = enumerate_standard_tableaux(mu);
        const std::size_t r = rank(idempotent(tabs.front(), p, jm, g.dim()));
        for (std::size_t k = 1; k < tabs.size(); ++k)
            if (rank(idempotent(tabs[k], p, jm, g.dim())) != r)
                throw DegeneracyError("idempotent ranks differ between tableaux of " + mu.to_string());
        if (r > 0) out.emplace_back(mu, r);
    }
    return out;
}

Multiset decompose(const TensorModule<Rational>& t) { return decompose(t.gens, t.params); }

Multiset decompose(const TensorModule<RatFn>& t, const ParamSpec& spec) {
    return decompose(specialize(t.gens, spec), checked_parameters(spec, t.n()));
}

Multiset expected_decomposition(const std::vector<MPartition>& shapes) {
    if (shapes.empty()) throw PreconditionError("no factors");
    BigInt d = 1;
    for (std::size_t k = 1; k < shapes.size(); ++k) d *= dim_mpartition(shapes[k]);
    return {{shapes.front(), static_cast<std::size_t>(d.get_ui())}};
}

std::string multiset_to_string(const Multiset& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? ", " : "") << s[k].first.to_string() << ": " << s[k].second;
    os << "}";
    return os.str();
}

namespace {

Multiset merge(const Multiset& a, const Multiset& b, int m, int n) {
    std::map<std::string, std::size_t> count;
    for (const auto* s : {&a, &b})
        for (const auto& [mu, c] : *s) count[mu.to_string()] += c;
    Multiset out;
    for (const auto& mu : enumerate_mpartitions(m, n))
        if (auto it = count.find(mu.to_string()); it != count.end() && it->second > 0) out.emplace_back(mu, it->second);
    return out;
}

}  // namespace

RestrictionComparison verify_restriction_compatibility(const std::vector<MPartition>& shapes, const ParamSpec& spec) {
    if (shapes.empty()) throw PreconditionError("no factors");
    const int n = shapes.front().size(), m = shapes.front().m();
    if (n < 1) throw PreconditionError("restriction needs n >= 1");
    RestrictionComparison cmp;

    const auto full = build_tensor_module(shapes, spec);
    GeneratorMatrices<Rational> res = full.gens;
    if (n == 1) {
        res.tau = Matrix<Rational>::identity(full.dim(), Rational(0), Rational(1));
        res.tau_placeholder = true;
    } else {
        res.sigma.pop_back();
    }
    cmp.restricted = decompose(res, full.params);

    std::vector<std::vector<MPartition>> tuples{{}};
    for (const auto& s : shapes) {
        std::vector<std::vector<MPartition>> next;
        for (const auto& t : tuples)
            for (const auto& node : boundary_nodes(s, BoundaryKind::Removable)) {
                auto u = t;
                u.push_back(s.without_node(node));
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    const auto p = checked_parameters(spec, n - 1);
    for (const auto& t : tuples) cmp.factorwise = merge(cmp.factorwise, decompose(build_tensor_module(t, p)), m, n - 1);
    return cmp;
}

// ---------------------------------------------------------------- worked tensor examples

namespace {

using Vector = std::vector<std::pair<std::vector<std::size_t>, RatFn>>;

RatFn r1(const char* s) { return parse_ratfn(s, 1); }

Matrix<RatFn> rows1(const std::vector<std::vector<const char*>>& rows) {
    Matrix<RatFn> a(rows.size(), rows.size(), RatFn(1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = r1(rows[i][j]);
    return a;
}

/// Entries given with 1-based factor indices.
Vector vec(std::initializer_list<std::tuple<std::size_t, std::size_t, const char*>> entries) {
    Vector v;
    for (const auto& [i, j, c] : entries) v.push_back({{i - 1, j - 1}, r1(c)});
    return v;
}

std::vector<StandardMTableau> tabs(std::initializer_list<const char*> t) {
    std::vector<StandardMTableau> out;
    for (const char* s : t) out.push_back(parse_tableau(s));
    return out;
}

}  // namespace

std::vector<Matrix<RatFn>> target_rep21() {
    return {rows1({{"q", "0"}, {"0", "-q^-1"}}),
            rows1({{"-q^-2/(q+q^-1)", "(q^2+1+q^-2)/(q+q^-1)"}, {"1/(q+q^-1)", "q^2/(q+q^-1)"}})};
}

std::vector<Matrix<RatFn>> target_rep211() {
    return {rows1({{"q", "0", "0"}, {"0", "-q^-1", "0"}, {"0", "0", "-q^-1"}}),
            rows1({{"-q^-2/(q+q^-1)", "(q^2+1+q^-2)/(q+q^-1)", "0"},
                   {"1/(q+q^-1)", "q^2/(q+q^-1)", "0"},
                   {"0", "0", "-q^-1"}}),
            rows1({{"-q^-1", "0", "0"},
                   {"0", "-q^-3/(q^2+1+q^-2)", "(q^3+q+q^-1+q^-3)/(q^2+1+q^-2)"},
                   {"0", "(q+q^-1)/(q^2+1+q^-2)", "q^3/(q^2+1+q^-2)"}})};
}

std::vector<WorkedTensorCase> worked_tensor_cases() {
    const auto x21 = tabs({"[[[1,2],[3]]]", "[[[1,3],[2]]]"});
    const auto x211 = tabs({"[[[1,2],[3],[4]]]", "[[[1,3],[2],[4]]]", "[[[1,4],[2],[3]]]"});
    const auto y22 = tabs({"[[[1,2],[3,4]]]", "[[[1,3],[2,4]]]"});
    const auto y31 = tabs({"[[[1,3,4],[2]]]", "[[[1,2,4],[3]]]", "[[[1,2,3],[4]]]"});
    const char* three = "(q^2+1+q^-2)";
    const char* q22 = "q^2+q^-2";
    std::vector<WorkedTensorCase> cases;
    cases.push_back({"(2,1) x (2,1)",
                     {x21, x21},
                     {{vec({{1, 2, "1"}}), vec({{2, 1, three}})},
                      {vec({{1, 1, "1"}, {1, 2, "1"}}), vec({{2, 1, "1"}, {2, 2, "1"}})}},
                     target_rep21()});
    cases.push_back({"(2,1,1) x (2,2)",
                     {x211, y22},
                     {{vec({{1, 2, "1"}}), vec({{2, 1, three}}), vec({{3, 1, three}})},
                      {vec({{1, 1, "1"}, {1, 2, "1"}}), vec({{2, 1, "1"}, {2, 2, "1"}}),
                       vec({{3, 1, "1"}, {3, 2, "-(q^2+q^-2)"}})}},
                     target_rep211()});
    cases.push_back({"(2,1,1) x (2,1,1)",
                     {x211, x211},
                     {{vec({{1, 2, "1"}}), vec({{2, 1, three}}), vec({{3, 1, "-(q^2+1+q^-2)*(q^2+q^-2)"}})},
                      {vec({{1, 1, "1"}, {1, 2, "1"}}), vec({{2, 1, "1"}, {2, 2, "1"}}),
                       vec({{3, 1, "-(q^2+q^-2)"}, {3, 2, "-(q^3+q^-3)/(q+q^-1)"}, {3, 3, "1"}})},
                      {vec({{1, 3, "1"}}), vec({{2, 3, "-(q^2+1+q^-2)"}}), vec({{3, 2, "-(q^2+1+q^-2)*(q^2+q^-2)"}})}},
                     target_rep211()});
    cases.push_back({"(2,1,1) x (3,1)",
                     {x211, y31},
                     {{vec({{1, 1, "1"}}), vec({{2, 2, three}}), vec({{3, 3, "(q^2+1+q^-2)*(q^2+q^-2)"}})},
                      {vec({{1, 1, "1"}, {1, 2, "1"}}), vec({{2, 1, "1"}, {2, 2, "1"}}), vec({{3, 1, "1"}, {3, 3, q22}})},
                      {vec({{1, 3, "1"}}), vec({{2, 3, "1"}}), vec({{3, 2, "1"}, {3, 3, "-(q^3+q^-3)/(q+q^-1)"}})}},
                     target_rep211()});
    return cases;
}

bool SubspaceReport::ok() const {
    if (!case_failures.empty()) return false;
    for (const auto& s : subspaces)
        if (!s.invariant || !s.full_rank) return false;
    return true;
}

SubspaceReport verify_worked_subspaces() { return verify_worked_subspaces(worked_tensor_cases()); }

SubspaceReport verify_worked_subspaces(const std::vector<WorkedTensorCase>& cases) {
    SubspaceReport report;
    const auto p = symbolic_parameters(1);
    for (const auto& c : cases) {
        const auto t = build_tensor_module_on(c.factor_bases, p);
        const std::size_t d = t.dim();
        std::size_t total = 0;
        Matrix<RatFn> all(d, 0, p.zero());
        std::vector<Matrix<RatFn>> spans;
        for (std::size_t s = 0; s < c.subspaces.size(); ++s) {
            const auto& vs = c.subspaces[s];
            Matrix<RatFn> span(d, vs.size(), p.zero());
            for (std::size_t k = 0; k < vs.size(); ++k)
                for (const auto& [tuple, coef] : vs[k]) {
                    std::size_t row = 0;
                    while (row < d && t.basis[row] != tuple) ++row;
                    if (row == d) throw LookupError("basis tuple not found in " + c.name);
                    span(row, k) += coef;
                }
            SubspaceResult r;
            r.case_name = c.name;
            r.subspace = s + 1;
            r.full_rank = rank(span) == vs.size();
            r.invariant = true;
            const std::size_t k = vs.size();
            auto check = [&](const Matrix<RatFn>& a, const Matrix<RatFn>& target, const std::string& name) {
                if (!r.invariant) return;
                if (auto diff = (a * span).first_difference(span * target)) {
                    r.invariant = false;
                    r.failure = name + " differs in row " + std::to_string(diff->first + 1) + ", column " +
                                std::to_string(diff->second + 1);
                }
            };
            check(t.gens.tau, Matrix<RatFn>::identity(k, p.zero(), p.one()) * p.v[0], "tau");
            for (int i = 1; i < t.n(); ++i)
                check(t.gens.sigma[static_cast<std::size_t>(i - 1)], c.target.at(static_cast<std::size_t>(i - 1)),
                      "sigma_" + std::to_string(i));
            report.subspaces.push_back(r);
            total += k;
            spans.push_back(span);
        }
        if (total != d) report.case_failures.push_back(c.name + ": subspace dimensions add up to " + std::to_string(total));
        Matrix<RatFn> joined(d, total, p.zero());
        std::size_t col = 0;
        for (const auto& s : spans)
            for (std::size_t j = 0; j < s.cols(); ++j, ++col)
                for (std::size_t i = 0; i < d; ++i) joined(i, col) = s(i, j);
        if (rank(joined) != d) report.case_failures.push_back(c.name + ": subspaces do not span the module");
    }
    return report;
}

nlohmann::ordered_json multiset_json(const Multiset& s) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : s) j.push_back({{"shape", mu.to_string()}, {"multiplicity", c}});
    return j;
}

nlohmann::ordered_json tensor_json(const TensorModule<RatFn>& t) {
    nlohmann::ordered_json j;
    auto shapes = nlohmann::ordered_json::array();
    for (const auto& s : t.shapes) shapes.push_back(s.to_string());
    j["shapes"] = shapes;
    auto basis = nlohmann::ordered_json::array();
    for (const auto& tuple : t.basis) {
        auto b = nlohmann::ordered_json::array();
        for (std::size_t f = 0; f < tuple.size(); ++f) b.push_back(t.factor_bases[f][tuple[f]].to_string());
        basis.push_back(b);
    }
    j["basis"] = basis;
    nlohmann::ordered_json gens;
    gens["tau"] = matrix_json(t.gens.tau);
    auto sig = nlohmann::ordered_json::array();
    for (const auto& s : t.gens.sigma) sig.push_back(matrix_json(s));
    gens["sigma"] = sig;
    j["generators"] = gens;
    return j;
}

}  // namespace cyclo

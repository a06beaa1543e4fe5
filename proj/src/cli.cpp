#include "cyclo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

#include "cyclo/bratteli.hpp"
#include "cyclo/forms.hpp"
#include "cyclo/smash.hpp"
#include "cyclo/suites.hpp"

namespace cyclo {

namespace {

/// A failure the user caused; reported with exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    int m = 0;  // 0 means: infer from the shape or the number of --v values
    int n = -1;
    std::vector<std::string> shapes;
    std::string single_shape;
    std::string q_text;
    std::string v_text;
    bool symbolic = false;
    std::string format = "text";
    unsigned jobs = 1;
    int max_n = 4;
    std::vector<std::string> suites;
    bool dot = false;
    bool decompose = false;
};

MPartition shape_arg(const Options& o, std::size_t k = 0) {
    if (o.shapes.size() <= k) throw UsageError("missing --shape");
    const auto& text = o.shapes[k];
    try {
        MPartition l = o.m > 0 ? parse_shape(text, o.m) : parse_mpartition(text);
        if (o.n >= 0 && l.size() != o.n)
            throw UsageError("shape " + l.to_string() + " has size " + std::to_string(l.size()) + ", not --n " +
                             std::to_string(o.n));
        if (!l.is_valid()) throw UsageError("shape " + text + " is not an m-partition (rows must weakly decrease)");
        return l;
    } catch (const ParseError& e) {
        throw UsageError(std::string("cannot parse shape '") + text + "': " + e.what());
    }
}

std::vector<Rational> split_rationals(const std::string& text, const char* flag) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw UsageError(std::string("cannot parse ") + flag + " value '" + item + "' at position " +
                             std::to_string(start + e.position()));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

bool numeric_requested(const Options& o) { return !o.symbolic && (!o.q_text.empty() || !o.v_text.empty()); }

/// Explicit --q/--v, or q = 2, v = 1, 3, 5, ... when only an m is known.
ParamSpec spec_arg(const Options& o, int m, int n) {
    ParamSpec s;
    s.q = o.q_text.empty() ? Rational(2) : split_rationals(o.q_text, "--q").at(0);
    if (!o.v_text.empty()) {
        s.v = split_rationals(o.v_text, "--v");
    } else {
        for (int k = 0; k < m; ++k) s.v.push_back(Rational(2 * k + 1));
    }
    if (m > 0 && s.m() != m)
        throw UsageError("--v gives " + std::to_string(s.m()) + " parameters but m is " + std::to_string(m));
    s.n = std::max(n, 1);
    require_generic(s);
    return s;
}

std::string text_matrix(const Matrix<RatFn>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << scalar_text(a(i, j));
        os << "]\n";
    }
    return os.str();
}

std::string text_matrix(const Matrix<Rational>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << scalar_text(a(i, j));
        os << "]\n";
    }
    return os.str();
}

template <class T>
void print_rep(const BasicRepresentation<T>& r, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        out << representation_json(r).dump(2) << "\n";
        return;
    }
    out << "shape " << r.shape.to_string() << "\n";
    out << "dimension " << r.dim() << "\n";
    out << "basis\n";
    for (std::size_t k = 0; k < r.basis.size(); ++k) out << "  " << k + 1 << " " << r.basis[k].to_string() << "\n";
    if (!r.gens.tau_placeholder) out << "tau\n" << text_matrix(r.tau());
    for (int i = 1; i < r.n; ++i) out << "sigma_" << i << "\n" << text_matrix(r.sigma(i));
}

int cmd_tableaux(const Options& o, std::ostream& out) {
    const auto l = shape_arg(o);
    const auto tabs = enumerate_standard_tableaux(l);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["shape"] = l.to_string();
        j["tableaux"] = nlohmann::ordered_json::array();
        for (const auto& x : tabs) j["tableaux"].push_back(x.to_string());
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << tabs.size() << " standard tableaux of shape " << l.to_string() << "\n";
    for (std::size_t k = 0; k < tabs.size(); ++k) out << "  " << k + 1 << " " << tabs[k].to_string() << "\n";
    return kExitOk;
}

int cmd_rep(const Options& o, std::ostream& out) {
    const auto l = shape_arg(o);
    if (numeric_requested(o))
        print_rep(build_representation(l, spec_arg(o, l.m(), l.size())), o, out);
    else
        print_rep(build_representation(l), o, out);
    return kExitOk;
}

int cmd_jm(const Options& o, std::ostream& out) {
    const auto l = shape_arg(o);
    const auto r = build_representation(l);
    const auto js = jm_matrices(r);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool diagonal = true;
    for (const auto& x : js) diagonal = diagonal && x.is_diagonal();
    for (std::size_t k = 0; k < r.dim(); ++k) {
        nlohmann::ordered_json row;
        row["tableau"] = r.basis[k].to_string();
        auto ev = nlohmann::ordered_json::array();
        for (const auto& x : js) ev.push_back(scalar_text(x(k, k)));
        row["eigenvalues"] = ev;
        j.push_back(row);
    }
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& row : j) {
            out << row["tableau"].get<std::string>() << "\n   ";
            for (const auto& e : row["eigenvalues"]) out << " " << e.get<std::string>();
            out << "\n";
        }
    }
    return diagonal ? kExitOk : kExitVerificationFailed;
}

int cmd_gram(const Options& o, std::ostream& out) {
    const auto g = gram_matrix(shape_arg(o));
    if (o.format == "json") {
        out << gram_json(g).dump(2) << "\n";
        return kExitOk;
    }
    out << "Gram diagonal of " << g.shape.to_string() << "\n";
    for (std::size_t k = 0; k < g.basis.size(); ++k)
        out << "  " << k + 1 << " " << g.basis[k].to_string() << "  " << scalar_text(g.diagonal[k]) << "\n";
    return kExitOk;
}

int cmd_bratteli(const Options& o, std::ostream& out) {
    if (o.m < 1) throw UsageError("bratteli needs --m >= 1");
    const int depth = o.n >= 0 ? o.n : o.max_n;
    const auto g = young_graph_power(o.m, depth);
    if (o.dot)
        out << export_dot(g);
    else
        out << export_json(g) << "\n";
    return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
    if (o.shapes.empty()) throw UsageError("tensor needs at least one --shape");
    std::vector<MPartition> shapes;
    for (std::size_t k = 0; k < o.shapes.size(); ++k) shapes.push_back(shape_arg(o, k));
    for (const auto& s : shapes)
        if (s.m() != shapes.front().m() || s.size() != shapes.front().size())
            throw UsageError("tensor factors must have the same m and the same size");
    if (!o.decompose) {
        out << tensor_json(build_tensor_module(shapes)).dump(2) << "\n";
        return kExitOk;
    }
    const auto spec = spec_arg(o, shapes.front().m(), shapes.front().size());
    const auto d = decompose(build_tensor_module(shapes, spec));
    const bool expected = d == expected_decomposition(shapes);
    if (o.format == "json") {
        out << multiset_json(d).dump(2) << "\n";
    } else {
        for (const auto& [mu, c] : d) out << mu.to_string() << " x " << c << "\n";
        out << (expected ? "matches" : "differs from") << " dim-multiple of the left factor\n";
    }
    return expected ? kExitOk : kExitVerificationFailed;
}

int cmd_idempotents(const Options& o, std::ostream& out) {
    const auto l = shape_arg(o);
    const auto spec = spec_arg(o, l.m(), l.size());
    const auto amb = build_representation(l, spec);
    const auto js = jm_matrices(amb);
    Matrix<Rational> sum(amb.dim(), amb.dim(), Rational(0));
    bool ok = true;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& mu : enumerate_mpartitions(l.m(), l.size()))
        for (const auto& x : enumerate_standard_tableaux(mu)) {
            const auto e = idempotent(x, amb.params, js, amb.dim());
            const std::size_t r = rank(e);
            ok = ok && r == (mu == l ? 1u : 0u) && e * e == e;
            sum += e;
            j.push_back({{"tableau", x.to_string()}, {"rank", r}});
        }
    ok = ok && sum == Matrix<Rational>::identity(amb.dim(), Rational(0), Rational(1));
    if (o.format == "json") {
        nlohmann::ordered_json top;
        top["ambient"] = l.to_string();
        top["idempotents"] = j;
        top["complete"] = ok;
        out << top.dump(2) << "\n";
    } else {
        out << "idempotent ranks in " << l.to_string() << "\n";
        for (const auto& e : j) out << "  " << e["tableau"].get<std::string>() << "  " << e["rank"].get<std::size_t>() << "\n";
        out << (ok ? "orthogonal, complete, ranks as expected" : "FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> names;
    for (const auto& s : o.suites.empty() ? std::vector<std::string>{"all"} : o.suites) {
        if (s == "all")
            names.insert(names.end(), suite_names().begin(), suite_names().end());
        else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end())
            names.push_back(s);
        else
            throw UsageError("unknown suite '" + s + "'");
    }
    SuiteOptions so;
    so.m = o.m > 0 ? o.m : 2;
    so.max_n = o.max_n;
    if (so.max_n < 0 || so.max_n > 8) throw UsageError("--max-n must lie in 0..8");
    if (numeric_requested(o)) so.spec = spec_arg(o, o.m, so.max_n);
    bool ok = true;
    for (const auto& r : run_suites(names, so, o.jobs)) {
        ok = ok && r.pass;
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_spec_check(const Options& o, std::ostream& out) {
    const auto criteria = acceptance_criteria();
    std::vector<CheckResult> results(criteria.size());
    const unsigned jobs = std::max(1u, o.jobs);
    for (std::size_t start = 0; start < criteria.size(); start += jobs) {
        std::vector<std::future<CheckResult>> batch;
        for (std::size_t k = start; k < criteria.size() && k < start + jobs; ++k)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, criteria[k].run));
        for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
    }
    bool ok = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        ok = ok && results[k].pass && results[k].seconds <= criteria[k].budget_seconds;
        out << format_criterion(criteria[k], results[k]) << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seminormal representations of cyclotomic Hecke algebras", "cyclo"};
    app.require_subcommand(1, 1);
    Options o;

    auto shape_opts = [&](CLI::App* s, bool many = false) {
        s->add_option("--m", o.m, "number of components")->check(CLI::Range(1, 8));
        s->add_option("--n", o.n, "size of the shapes")->check(CLI::Range(0, 32));
        if (many)
            s->add_option("--shape", o.shapes, "m-partition such as [[2,1],[1]]; repeat for each factor")
                ->take_all()
                ->allow_extra_args(false);
        else
            s->add_option("--shape", o.single_shape, "m-partition such as [[2,1],[1]]");
        s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto param_opts = [&](CLI::App* s) {
        s->add_option("--q", o.q_text, "value of q, e.g. 2 or 3/2");
        s->add_option("--v", o.v_text, "comma separated values of v_1..v_m");
        s->add_flag("--symbolic", o.symbolic, "keep q and v as indeterminates");
    };

    auto* tableaux = app.add_subcommand("tableaux", "list the standard tableaux of a shape");
    shape_opts(tableaux);
    auto* rep = app.add_subcommand("rep", "matrices of tau and sigma_i");
    shape_opts(rep);
    param_opts(rep);
    auto* jm = app.add_subcommand("jm", "eigenvalues of the Jucys-Murphy elements");
    shape_opts(jm);
    auto* gram = app.add_subcommand("gram", "diagonal of the invariant form");
    shape_opts(gram);
    auto* bratteli = app.add_subcommand("bratteli", "levels of the m-th power of the Young graph");
    bratteli->add_option("--m", o.m)->check(CLI::Range(1, 8));
    bratteli->add_option("--n", o.n, "depth")->check(CLI::Range(0, 12));
    bratteli->add_option("--max-n", o.max_n, "depth when --n is absent")->check(CLI::Range(0, 12));
    bratteli->add_flag("--dot", o.dot, "Graphviz output");
    auto* tensor = app.add_subcommand("tensor", "tensor product module of several shapes");
    shape_opts(tensor, true);
    param_opts(tensor);
    tensor->add_flag("--decompose", o.decompose, "multiplicities via idempotent ranks");
    auto* idem = app.add_subcommand("idempotents", "ranks of the primitive idempotents in one module");
    shape_opts(idem);
    param_opts(idem);
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", o.suites, "relations, gram, baxter, spectrum, dimensions, idempotents, commutant, "
                                            "traces, appendixA, appendixC or all");
    verify->add_option("--m", o.m)->check(CLI::Range(1, 8));
    verify->add_option("--max-n", o.max_n)->check(CLI::Range(0, 8));
    verify->add_option("--jobs", o.jobs)->check(CLI::Range(1, 64));
    param_opts(verify);
    auto* check = app.add_subcommand("spec-check", "run the full conformance checklist");
    check->add_option("--jobs", o.jobs)->check(CLI::Range(1, 64));

    std::vector<const char*> argv{"cyclo"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!o.single_shape.empty()) o.shapes.insert(o.shapes.begin(), o.single_shape);
    try {
        if (*tableaux) return cmd_tableaux(o, out);
        if (*rep) return cmd_rep(o, out);
        if (*jm) return cmd_jm(o, out);
        if (*gram) return cmd_gram(o, out);
        if (*bratteli) return cmd_bratteli(o, out);
        if (*tensor) return cmd_tensor(o, out);
        if (*idem) return cmd_idempotents(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*check) return cmd_spec_check(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GenericityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegeneracyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cyclo

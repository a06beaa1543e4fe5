#include "cyclo/repn.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cyclo {

Representation build_representation(const MPartition& lambda, Vacuum vacuum) {
    return build_representation(lambda, symbolic_parameters(lambda.m()), vacuum);
}

Representation build_representation(const MPartition& lambda, int m, int n) {
    if (lambda.m() != m) throw ArityError("shape " + lambda.to_string() + " is not an " + std::to_string(m) + "-partition");
    if (lambda.size() != n)
        throw PreconditionError("shape " + lambda.to_string() + " has size " + std::to_string(lambda.size()) + ", not " +
                                std::to_string(n));
    return build_representation(lambda);
}

Parameters<Rational> checked_parameters(const ParamSpec& spec, int n) {
    ParamSpec s = spec;
    s.n = std::max(s.n, n);
    return numeric_parameters(s);
}

NumericRepresentation build_representation(const MPartition& lambda, const ParamSpec& spec) {
    return build_representation(lambda, checked_parameters(spec, lambda.size()));
}

namespace {

Matrix<Rational> specialize_matrix(const Matrix<RatFn>& a, const ParamSpec& spec) {
    Matrix<Rational> r(a.rows(), a.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) r(i, j) = specialize(a(i, j), spec);
    return r;
}

}  // namespace

GeneratorMatrices<Rational> specialize(const GeneratorMatrices<RatFn>& g, const ParamSpec& spec) {
    GeneratorMatrices<Rational> r;
    r.tau = specialize_matrix(g.tau, spec);
    r.tau_placeholder = g.tau_placeholder;
    for (const auto& s : g.sigma) r.sigma.push_back(specialize_matrix(s, spec));
    return r;
}

NumericRepresentation specialize(const Representation& r, const ParamSpec& spec) {
    NumericRepresentation out;
    out.m = r.m;
    out.n = r.n;
    out.shape = r.shape;
    out.basis = r.basis;
    out.params = checked_parameters(spec, r.n);
    if (spec.m() != r.m) throw ArityError("specialization has the wrong number of parameters v");
    out.gens = specialize(r.gens, spec);
    return out;
}

std::string RelationFailure::describe() const {
    std::ostringstream os;
    os << relation;
    if (relation == "braid" || relation == "commutation")
        os << " (sigma_" << i << ", sigma_" << j << ")";
    else if (relation == "tau-braid" || relation == "tau-commutation")
        os << " (tau, sigma_" << j << ")";
    else if (relation == "quadratic" || relation == "unitarity")
        os << " (sigma_" << i << ")";
    else if (relation == "yang-baxter" || relation == "far-commutation")
        os << " (sigma_" << i << ", sigma_" << j << ")";
    os << " fails at entry (" << row + 1 << ", " << col + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------- affine H_2

H2Representation h2_one_dimensional(const RatFn& a, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
    const int m = a.arity();
    Exponent e;
    e[0] = 2 * epsilon;
    Exponent s;
    s[0] = epsilon;
    H2Representation h;
    h.x = Matrix<RatFn>::diagonal({a}, RatFn(m));
    h.y = Matrix<RatFn>::diagonal({a * RatFn::monomial(m, e)}, RatFn(m));
    h.sigma = Matrix<RatFn>::diagonal({RatFn::monomial(m, s, epsilon)}, RatFn(m));
    return h;
}

H2Representation h2_two_dimensional(const RatFn& a, const RatFn& b) {
    const int m = a.arity();
    if (b.arity() != m) throw ArityError("a and b live over different parameter sets");
    const RatFn q = RatFn::q(m);
    const RatFn q2 = q * q;
    if (a == b) throw DegeneracyError("b = a: X and Y are not diagonalizable");
    if (b == q2 * a || a == q2 * b) throw DegeneracyError("b = q^(+-2) a: the representation is reducible");
    const RatFn qq = q - q.inverse();
    const RatFn d = b - a;
    const RatFn one = RatFn::constant(m, 1);
    H2Representation h;
    h.sigma = Matrix<RatFn>(2, 2, RatFn(m));
    h.sigma(0, 0) = qq * b / d;
    h.sigma(0, 1) = one - qq * qq * a * b / (d * d);
    h.sigma(1, 0) = one;
    h.sigma(1, 1) = -(qq * a / d);
    h.x = Matrix<RatFn>::diagonal({a, b}, RatFn(m));
    h.y = Matrix<RatFn>::diagonal({b, a}, RatFn(m));
    return h;
}

H2Representation h2_affine_irreps(const RatFn& a, const RatFn& b) {
    const int m = a.arity();
    const RatFn q2 = RatFn::q(m) * RatFn::q(m);
    if (b == q2 * a) return h2_one_dimensional(a, 1);
    if (a == q2 * b) return h2_one_dimensional(a, -1);
    return h2_two_dimensional(a, b);
}

bool verify_h2_relations(const H2Representation& h) {
    const int m = h.sigma(0, 0).arity();
    const RatFn q = RatFn::q(m);
    const auto id = Matrix<RatFn>::identity(h.dim(), RatFn(m), RatFn::constant(m, 1));
    return h.x * h.y == h.y * h.x && h.y == h.sigma * h.x * h.sigma &&
           h.sigma * h.sigma == h.sigma * (q - q.inverse()) + id;
}

// ---------------------------------------------------------------- words

std::string GeneratorWord::to_string() const {
    if (letters.empty()) return "1";
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += l.index == 0 ? std::string("t") : "s" + std::to_string(l.index);
        if (l.inverse) s += "^-1";
    }
    return s;
}

GeneratorWord parse_word(std::string_view text) {
    GeneratorWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip();
        if (i != text.size()) throw ParseError("unexpected text after the empty word", i);
        return w;
    }
    while (i < text.size()) {
        GeneratorLetter l;
        if (text[i] == 't') {
            ++i;
        } else if (text[i] == 's') {
            ++i;
            const std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("expected a generator index", i);
            l.index = std::stoi(std::string(text.substr(start, i - start)));
            if (l.index < 1) throw ParseError("generator index must be positive", start);
        } else {
            throw ParseError("expected t or s<index>", i);
        }
        if (text.substr(i, 3) == "^-1") {
            l.inverse = true;
            i += 3;
        }
        w.letters.push_back(l);
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a space between letters", i);
        skip();
    }
    return w;
}

// ---------------------------------------------------------------- commutant

namespace {

using SparseRow = std::map<std::size_t, Rational>;

class Echelon {
public:
    /// Returns true when the row was independent of the stored ones.
    bool insert(SparseRow row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots_.find(lead->first);
            if (it == pivots_.end()) {
                const Rational inv = 1 / lead->second;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            const Rational f = lead->second;
            for (const auto& [c, v] : it->second) {
                auto [pos, fresh] = row.try_emplace(c, 0);
                pos->second -= f * v;
                if (is_zero(pos->second)) row.erase(pos);
            }
        }
        return false;
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::size_t commutant_dimension(const GeneratorMatrices<Rational>& g) {
    const std::size_t d = g.dim();
    std::vector<const Matrix<Rational>*> gens{&g.tau};
    for (const auto& s : g.sigma) gens.push_back(&s);
    Echelon e;
    for (const auto* a : gens)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                // (M A - A M)(r, c)
                SparseRow row;
                for (std::size_t k = 0; k < d; ++k) {
                    if (!is_zero((*a)(k, c))) row[r * d + k] += (*a)(k, c);
                    if (!is_zero((*a)(r, k))) row[k * d + c] -= (*a)(r, k);
                }
                std::erase_if(row, [](const auto& kv) { return is_zero(kv.second); });
                if (!row.empty()) e.insert(std::move(row));
                if (e.rank() == d * d) return 0;
            }
    return d * d - e.rank();
}

std::size_t commutant_dimension(const Representation& r, const ParamSpec& spec) {
    return commutant_dimension(specialize(r, spec).gens);
}

// ---------------------------------------------------------------- serialization

std::string scalar_text(const RatFn& x) { return x.to_string(); }
std::string scalar_text(const Rational& x) { return rational_to_string(x); }

namespace {

template <class T>
nlohmann::ordered_json matrix_json_impl(const Matrix<T>& a) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(scalar_text(a(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class T>
nlohmann::ordered_json representation_json_impl(const BasicRepresentation<T>& r) {
    nlohmann::ordered_json j;
    j["shape"] = r.shape.to_string();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& x : r.basis) basis.push_back(x.to_string());
    j["basis"] = basis;
    nlohmann::ordered_json gens;
    gens["tau"] = matrix_json_impl(r.gens.tau);
    nlohmann::ordered_json sig = nlohmann::ordered_json::array();
    for (const auto& s : r.gens.sigma) sig.push_back(matrix_json_impl(s));
    gens["sigma"] = sig;
    j["generators"] = gens;
    return j;
}

Matrix<RatFn> matrix_from_json(const nlohmann::ordered_json& j, int m, std::size_t d) {
    if (!j.is_array() || j.size() != d) throw ParseError("matrix has the wrong number of rows", 0);
    Matrix<RatFn> a(d, d, RatFn(m));
    for (std::size_t i = 0; i < d; ++i) {
        if (!j[i].is_array() || j[i].size() != d) throw ParseError("matrix row has the wrong length", 0);
        for (std::size_t k = 0; k < d; ++k) a(i, k) = parse_ratfn(j[i][k].get<std::string>(), m);
    }
    return a;
}

}  // namespace

nlohmann::ordered_json matrix_json(const Matrix<RatFn>& a) { return matrix_json_impl(a); }
nlohmann::ordered_json matrix_json(const Matrix<Rational>& a) { return matrix_json_impl(a); }
nlohmann::ordered_json representation_json(const Representation& r) { return representation_json_impl(r); }
nlohmann::ordered_json representation_json(const NumericRepresentation& r) { return representation_json_impl(r); }

Representation representation_from_json(const nlohmann::ordered_json& j) {
    try {
        Representation r;
        r.shape = parse_mpartition(j.at("shape").get<std::string>());
        r.m = r.shape.m();
        r.n = r.shape.size();
        r.params = symbolic_parameters(r.m);
        for (const auto& x : j.at("basis")) r.basis.push_back(parse_tableau(x.get<std::string>()));
        const std::size_t d = r.n == 0 ? 1 : r.basis.size();
        const auto& g = j.at("generators");
        r.gens.tau = matrix_from_json(g.at("tau"), r.m, d);
        r.gens.tau_placeholder = r.n == 0;
        for (const auto& s : g.at("sigma")) r.gens.sigma.push_back(matrix_from_json(s, r.m, d));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed representation document: ") + e.what(), 0);
    }
}

}  // namespace cyclo

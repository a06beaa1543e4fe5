#include "cyclo/forms.hpp"

#include <sstream>

namespace cyclo {

Matrix<RatFn> GramMatrix::matrix() const {
    const int m = shape.m();
    return Matrix<RatFn>::diagonal(diagonal, RatFn(m));
}

Matrix<RatFn> GramMatrix::inverse_matrix() const {
    std::vector<RatFn> inv;
    for (const auto& d : diagonal) inv.push_back(d.inverse());
    return Matrix<RatFn>::diagonal(inv, RatFn(shape.m()));
}

GramMatrix gram_matrix(const MPartition& lambda) {
    if (!lambda.is_valid()) throw PreconditionError("invalid m-partition " + lambda.to_string());
    GramMatrix g;
    g.shape = lambda;
    g.basis = enumerate_standard_tableaux(lambda);
    const auto p = symbolic_parameters(lambda.m());
    for (const auto& x : g.basis) g.diagonal.push_back(gram_entry(x, p));
    return g;
}

RatFn gram_entry_qnumber(const StandardMTableau& x) {
    if (x.m() != 1) throw PreconditionError("the q-number form applies to m = 1 only");
    RatFn g = RatFn::constant(1, 1);
    for (int j = 1; j <= x.size(); ++j)
        for (int k = j + 1; k <= x.size(); ++k) {
            const MNode& a = x.node_of(j);
            const MNode& b = x.node_of(k);
            const int d = (a.col - a.row) - (b.col - b.row);
            if (d == 0 || d == 1 || d == -1) continue;
            g *= q_number(d - 1, 1) / q_number(d, 1);
        }
    return g;
}

RatFn neighbour_ratio(const StandardMTableau& x, int i) {
    const auto p = symbolic_parameters(x.m());
    const RatFn a = tableau_content(x, i, p), b = tableau_content(x, i + 1, p);
    return (p.q * a - p.q_inv * b) / (p.q_inv * a - p.q * b);
}

std::string FormReport::describe() const {
    if (ok) return "pass";
    std::ostringstream os;
    os << law << " fails for " << generator << " at entry (" << row + 1 << ", " << col + 1 << ")";
    return os.str();
}

Matrix<RatFn> apply_omega(const Matrix<RatFn>& a) {
    return a.map([](const RatFn& x) { return x.omega(); });
}

namespace {

void check_basis(const Representation& rep, const GramMatrix& g) {
    if (!(rep.shape == g.shape) || rep.basis != g.basis)
        throw BasisMismatchError("Gram matrix of " + g.shape.to_string() + " does not match the representation of " +
                                 rep.shape.to_string());
}

std::vector<std::pair<std::string, const Matrix<RatFn>*>> generators(const Representation& rep) {
    std::vector<std::pair<std::string, const Matrix<RatFn>*>> out;
    if (rep.gens.tau_placeholder) return out;
    out.emplace_back("tau", &rep.gens.tau);
    for (int i = 1; i < rep.n; ++i) out.emplace_back("sigma_" + std::to_string(i), &rep.sigma(i));
    return out;
}

FormReport compare(const Matrix<RatFn>& a, const Matrix<RatFn>& b, const std::string& gen, const char* law) {
    FormReport r;
    if (auto d = a.first_difference(b)) {
        r.ok = false;
        r.generator = gen;
        r.law = law;
        r.row = d->first;
        r.col = d->second;
    }
    return r;
}

}  // namespace

FormReport verify_invariance(const Representation& rep, const GramMatrix& g, InvarianceKind kind) {
    check_basis(rep, g);
    const auto gm = g.matrix();
    for (const auto& [name, a] : generators(rep)) {
        FormReport r;
        if (kind == InvarianceKind::BilinearSMinus)
            r = compare(a->transpose() * gm, gm * *a, name, "bilinear S^- invariance");
        else
            r = compare(a->transpose() * gm * apply_omega(*a), gm, name,
                        kind == InvarianceKind::OmegaS ? "omega S invariance" : "varpi S invariance");
        if (!r.ok) return r;
    }
    return {};
}

FormReport verify_orthogonality_squared(const Representation& rep, const GramMatrix& g) {
    check_basis(rep, g);
    const auto ginv = g.inverse_matrix();
    for (const auto& [name, a] : generators(rep)) {
        Matrix<RatFn> ainv = name == "tau" ? inverse(*a, rep.params.one()) : sigma_inverse(*a, rep.params);
        auto r = compare(*a * ginv * ainv.transpose(), ginv, name, "A (A^-1)^T = Id in the rescaled basis");
        if (!r.ok) return r;
        r = compare(*a * ginv * apply_omega(*a).transpose(), ginv, name, "A omega(A)^T = Id in the rescaled basis");
        if (!r.ok) return r;
    }
    return {};
}

nlohmann::ordered_json gram_json(const GramMatrix& g) {
    nlohmann::ordered_json j;
    j["shape"] = g.shape.to_string();
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < g.diagonal.size(); ++k) d[std::to_string(k + 1)] = g.diagonal[k].to_string();
    j["diagonal"] = d;
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (const auto& x : g.basis) b.push_back(x.to_string());
    j["basis"] = b;
    return j;
}

}  // namespace cyclo

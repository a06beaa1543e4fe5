// Printed matrices of the m = 2 worked examples, transcribed into the ratfn text grammar.
#ifndef CYCLO_WORKED_EXAMPLES_HPP
#define CYCLO_WORKED_EXAMPLES_HPP

#include <string>
#include <vector>

#include "cyclo/repn.hpp"

namespace cyclo::worked {

using Rows = std::vector<std::vector<std::string>>;

struct Example {
    std::string shape;
    std::vector<std::string> basis;
    Rows tau;
    std::vector<Rows> sigma;
    std::vector<std::string> gram;  // diagonal
};

inline Example h212() {
    return {"[[1],[1]]",
            {"[[[1]],[[2]]]", "[[[2]],[[1]]]"},
            {{"v1", "0"}, {"0", "v2"}},
            {{{"-(q-q^-1)*v2/(v1-v2)", "(q*v1-q^-1*v2)/(v1-v2)"},
              {"(q*v2-q^-1*v1)/(v2-v1)", "-(q-q^-1)*v1/(v2-v1)"}}},
            {"(q^-1*v1-q*v2)/(v1-v2)", "(q*v1-q^-1*v2)/(v1-v2)"}};
}

inline Example h213() {
    return {"[[1,1],[1]]",
            {"[[[1],[2]],[[3]]]", "[[[1],[3]],[[2]]]", "[[[2],[3]],[[1]]]"},
            {{"v1", "0", "0"}, {"0", "v1", "0"}, {"0", "0", "v2"}},
            {{{"-q^-1", "0", "0"},
              {"0", "-(q-q^-1)*v2/(v1-v2)", "(q*v1-q^-1*v2)/(v1-v2)"},
              {"0", "(q*v2-q^-1*v1)/(v2-v1)", "-(q-q^-1)*v1/(v2-v1)"}},
             {{"-(q-q^-1)*v2/(v1*q^-2-v2)", "(v1*q^-1-q^-1*v2)/(v1*q^-2-v2)", "0"},
              {"(q*v2-v1*q^-3)/(v2-v1*q^-2)", "-(q-q^-1)*v1*q^-2/(v2-v1*q^-2)", "0"},
              {"0", "0", "-q^-1"}}},
            {"(q^-2*v1-q^2*v2)/(v1-v2)", "1", "(q*v1-q^-1*v2)/(q^-1*v1-q*v2)"}};
}

/// The (3,3) entry of sigma_3 is printed with denominator v2 q^2 - v1 q^-1.
inline const char* kH214Sigma3Entry33Printed = "-(q-q^-1)*v1*q^-2/(v2*q^2-v1*q^-1)";
inline const char* kH214Sigma3Entry33Corrected = "-(q-q^-1)*v1*q^-2/(v2*q^2-v1*q^-2)";

inline Example h214() {
    const std::string z = "0";
    const std::string a = "-(q-q^-1)*v2/(v1-v2)", b = "(q*v1-q^-1*v2)/(v1-v2)";
    const std::string c = "(q*v2-q^-1*v1)/(v2-v1)", d = "-(q-q^-1)*v1/(v2-v1)";
    const std::string e = "-(q-q^-1)*v2*q^2/(v1*q^-2-v2*q^2)", f = "(v1*q^-1-v2*q)/(v1*q^-2-v2*q^2)";
    const std::string g = "(v2*q^3-v1*q^-3)/(v2*q^2-v1*q^-2)";
    return {"[[1,1],[2]]",
            {"[[[1],[2]],[[3,4]]]", "[[[1],[3]],[[2,4]]]", "[[[1],[4]],[[2,3]]]", "[[[2],[3]],[[1,4]]]",
             "[[[2],[4]],[[1,3]]]", "[[[3],[4]],[[1,2]]]"},
            {{"v1", z, z, z, z, z},
             {z, "v1", z, z, z, z},
             {z, z, "v1", z, z, z},
             {z, z, z, "v2", z, z},
             {z, z, z, z, "v2", z},
             {z, z, z, z, z, "v2"}},
            {{{"-q^-1", z, z, z, z, z},
              {z, a, z, b, z, z},
              {z, z, a, z, b, z},
              {z, c, z, d, z, z},
              {z, z, c, z, d, z},
              {z, z, z, z, z, "q"}},
             {{"-(q-q^-1)*v2/(v1*q^-2-v2)", "(v1*q^-1-q^-1*v2)/(v1*q^-2-v2)", z, z, z, z},
              {"(q*v2-v1*q^-3)/(v2-v1*q^-2)", "-(q-q^-1)*v1*q^-2/(v2-v1*q^-2)", z, z, z, z},
              {z, z, "q", z, z, z},
              {z, z, z, "-q^-1", z, z},
              {z, z, z, z, "-(q-q^-1)*v2*q^2/(v1-v2*q^2)", "(q*v1-v2*q)/(v1-v2*q^2)"},
              {z, z, z, z, "(v2*q^3-q^-1*v1)/(v2*q^2-v1)", "-(q-q^-1)*v1/(v2*q^2-v1)"}},
             {{"q", z, z, z, z, z},
              {z, e, f, z, z, z},
              {z, g, kH214Sigma3Entry33Corrected, z, z, z},
              {z, z, z, e, f, z},
              {z, z, z, g, "-(q-q^-1)*v1*q^-2/(v2*q^2-v1*q^-2)", z},
              {z, z, z, z, z, "-q^-1"}}},
            {"(q^-2*v1-q^2*v2)*(q^-3*v1-q^3*v2)/((v1-v2)*(q^-1*v1-q*v2))",
             "(q^-3*v1-q^3*v2)/(q^-1*v1-q*v2)", "1",
             "(q*v1-q^-1*v2)*(q^-3*v1-q^3*v2)/(q^-1*v1-q*v2)^2",
             "(q*v1-q^-1*v2)/(q^-1*v1-q*v2)",
             "(v1-v2)*(q*v1-q^-1*v2)/((q^-1*v1-q*v2)*(q^-2*v1-q^2*v2))"}};
}

inline std::vector<Example> all() { return {h212(), h213(), h214()}; }

inline cyclo::Matrix<cyclo::RatFn> parse_matrix(const Rows& rows, int m) {
    const std::size_t d = rows.size();
    cyclo::Matrix<cyclo::RatFn> a(d, d, cyclo::RatFn(m));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = cyclo::parse_ratfn(rows[i][j], m);
    return a;
}

}  // namespace cyclo::worked

#endif

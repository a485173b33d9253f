#ifndef LGCAT_PROBLEM_HPP
#define LGCAT_PROBLEM_HPP

#include "lgcat/koszul.hpp"

namespace lgcat {

// Matrix as written in a problem file: rows of expression strings.
using MatrixLiteral = std::vector<std::vector<std::string>>;

// kind "mf": matrices d0, d1.
// kind "koszul": lo, ranks, matrices d[n] / h[n] (missing means zero) and
// optionally k[n] (contraction data for the contraction command).
// kind "presentation": one matrix m (input to stabilize).
struct ProblemObject {
    std::string name;
    std::string kind;
    std::optional<int> lo;
    std::vector<std::size_t> ranks;
    std::map<std::string, MatrixLiteral> mats;

    bool operator==(const ProblemObject&) const = default;
};

struct ProblemFile {
    Field field;
    std::vector<std::string> vars;
    MonoOrder order = MonoOrder::DegRevLex;
    std::string potential;  // raw expression, "0" when absent
    std::vector<ProblemObject> objects;

    bool operator==(const ProblemFile&) const = default;
};

// Sectioned key-value format; see the grammar in the README. Throws
// ParseError with a character position.
ProblemFile parse_problem(const std::string& text);
std::string print_problem(const ProblemFile& p);  // canonical form, re-parses equal

std::string field_to_string(const Field& f);
Field field_from_string(const std::string& s);

RingCtxPtr problem_ring(const ProblemFile& p);
PolyMatrix build_matrix(const MatrixLiteral& lit, const RingCtxPtr& ctx);
const ProblemObject& find_object(const ProblemFile& p, const std::string& name);

MatrixFactorization build_mf(const ProblemFile& p, const ProblemObject& o);
KoszulModule build_koszul(const ProblemFile& p, const ProblemObject& o);
PolyMatrix build_presentation(const ProblemFile& p, const ProblemObject& o);
// contraction matrices k[n] for every degree of m; missing entries are zero
std::vector<PolyMatrix> build_contraction(const ProblemFile& p,
                                          const ProblemObject& o,
                                          const KoszulModule& m);

} // namespace lgcat

#endif

#include "lgcat/problem.hpp"

#include <sstream>

namespace lgcat {

std::string field_to_string(const Field& f) {
    return f.kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(f.p);
}

Field field_from_string(const std::string& s) {
    if (s == "Q" || s == "q") return Field::rationals();
    std::string digits = s;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f'))
        digits = digits.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad field '" + s + "' (expected Q or F<p>)", 0);
    return Field::prime(std::uint32_t(std::stoul(digits)));
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

MatrixLiteral parse_matrix_literal(const std::string& s, std::size_t base) {
    MatrixLiteral rows;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(std::string("expected '") + c + "' in matrix", base + i);
        ++i;
    };
    expect('[');
    skip_ws();
    while (i < s.size() && s[i] != ']') {
        expect('[');
        std::vector<std::string> row;
        skip_ws();
        while (i < s.size() && s[i] != ']') {
            expect('"');
            std::size_t start = i;
            while (i < s.size() && s[i] != '"') ++i;
            if (i >= s.size()) throw ParseError("unterminated string", base + start);
            row.push_back(s.substr(start, i - start));
            ++i;  // closing quote
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        expect(']');
        rows.push_back(std::move(row));
        skip_ws();
        if (i < s.size() && s[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    expect(']');
    skip_ws();
    if (i != s.size()) throw ParseError("trailing characters after matrix", base + i);
    if (!rows.empty())
        for (auto& r : rows)
            if (r.size() != rows[0].size())
                throw ParseError("ragged matrix rows", base);
    return rows;
}

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile p;
    p.potential = "0";
    enum class Sect { None, Ring, Potential, Object };
    Sect sect = Sect::None;
    ProblemObject* obj = nullptr;
    bool saw_ring = false;

    std::size_t pos = 0;
    std::stringstream ss(text);
    std::string raw;
    while (std::getline(ss, raw)) {
        std::size_t line_start = pos;
        pos += raw.size() + 1;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            std::string head = trim(line.substr(1, line.size() - 2));
            if (head == "ring") {
                sect = Sect::Ring;
                saw_ring = true;
            } else if (head == "potential") {
                sect = Sect::Potential;
            } else if (head.rfind("object", 0) == 0) {
                std::string name = trim(head.substr(6));
                if (name.empty())
                    throw ParseError("object section without a name", line_start);
                p.objects.emplace_back();
                obj = &p.objects.back();
                obj->name = name;
                sect = Sect::Object;
            } else {
                throw ParseError("unknown section '" + head + "'", line_start);
            }
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_start);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        switch (sect) {
        case Sect::None:
            throw ParseError("assignment outside any section", line_start);
        case Sect::Ring:
            if (key == "field") p.field = field_from_string(val);
            else if (key == "vars") p.vars = split_list(val);
            else if (key == "order") p.order = mono_order_from_string(val);
            else throw ParseError("unknown ring key '" + key + "'", line_start);
            break;
        case Sect::Potential:
            if (key == "f") p.potential = val;
            else throw ParseError("unknown potential key '" + key + "'", line_start);
            break;
        case Sect::Object:
            if (key == "kind") obj->kind = val;
            else if (key == "lo") obj->lo = std::stoi(val);
            else if (key == "ranks") {
                for (auto& r : split_list(val))
                    obj->ranks.push_back(std::size_t(std::stoul(r)));
            } else if (!val.empty() && val.front() == '[') {
                obj->mats[key] = parse_matrix_literal(val, line_start + eq + 1);
            } else {
                throw ParseError("unknown object key '" + key + "'", line_start);
            }
            break;
        }
    }
    if (!saw_ring) throw ParseError("missing [ring] section", 0);
    for (auto& o : p.objects)
        if (o.kind.empty())
            throw ParseError("object '" + o.name + "' has no kind", 0);
    return p;
}

namespace {

std::string print_matrix_literal(const MatrixLiteral& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c) out += ", ";
            out += "\"" + m[r][c] + "\"";
        }
        out += "]";
    }
    return out + "]";
}

} // namespace

std::string print_problem(const ProblemFile& p) {
    std::string out = "[ring]\nfield = " + field_to_string(p.field) + "\nvars = ";
    for (std::size_t i = 0; i < p.vars.size(); ++i)
        out += (i ? ", " : "") + p.vars[i];
    out += "\norder = " + mono_order_to_string(p.order) + "\n";
    out += "\n[potential]\nf = " + p.potential + "\n";
    for (auto& o : p.objects) {
        out += "\n[object " + o.name + "]\nkind = " + o.kind + "\n";
        if (o.lo) out += "lo = " + std::to_string(*o.lo) + "\n";
        if (!o.ranks.empty()) {
            out += "ranks = ";
            for (std::size_t i = 0; i < o.ranks.size(); ++i)
                out += (i ? ", " : "") + std::to_string(o.ranks[i]);
            out += "\n";
        }
        for (auto& [key, lit] : o.mats)
            out += key + " = " + print_matrix_literal(lit) + "\n";
    }
    return out;
}

RingCtxPtr problem_ring(const ProblemFile& p) {
    return make_ring(p.field, p.vars, p.order);
}

PolyMatrix build_matrix(const MatrixLiteral& lit, const RingCtxPtr& ctx) {
    std::size_t rows = lit.size();
    std::size_t cols = rows ? lit[0].size() : 0;
    PolyMatrix m(ctx, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = parse_poly(lit[r][c], ctx);
    return m;
}

const ProblemObject& find_object(const ProblemFile& p, const std::string& name) {
    for (auto& o : p.objects)
        if (o.name == name) return o;
    throw ParseError("no object named '" + name + "'", 0);
}

MatrixFactorization build_mf(const ProblemFile& p, const ProblemObject& o) {
    if (o.kind != "mf") throw ParseError("object '" + o.name + "' is not an mf", 0);
    RingCtxPtr ctx = problem_ring(p);
    LGPair lg(ctx, parse_poly(p.potential, ctx));
    auto d0 = o.mats.find("d0");
    auto d1 = o.mats.find("d1");
    if (d0 == o.mats.end() || d1 == o.mats.end())
        throw ParseError("mf object '" + o.name + "' needs d0 and d1", 0);
    return new_mf(lg, build_matrix(d0->second, ctx), build_matrix(d1->second, ctx));
}

KoszulModule build_koszul(const ProblemFile& p, const ProblemObject& o) {
    if (o.kind != "koszul")
        throw ParseError("object '" + o.name + "' is not a koszul module", 0);
    if (!o.lo || o.ranks.empty())
        throw ParseError("koszul object '" + o.name + "' needs lo and ranks", 0);
    RingCtxPtr ctx = problem_ring(p);
    LGPair lg(ctx, parse_poly(p.potential, ctx));
    int lo = *o.lo, hi = lo + int(o.ranks.size()) - 1;
    auto rank = [&](int n) {
        return n < lo || n > hi ? std::size_t(0) : o.ranks[std::size_t(n - lo)];
    };
    std::vector<PolyMatrix> d, h;
    for (int n = lo; n <= hi; ++n) {
        auto it = o.mats.find("d[" + std::to_string(n) + "]");
        d.push_back(it != o.mats.end() ? build_matrix(it->second, ctx)
                                       : PolyMatrix(ctx, rank(n + 1), rank(n)));
        it = o.mats.find("h[" + std::to_string(n) + "]");
        h.push_back(it != o.mats.end() ? build_matrix(it->second, ctx)
                                       : PolyMatrix(ctx, rank(n - 1), rank(n)));
    }
    return new_koszul(lg, lo, o.ranks, std::move(d), std::move(h));
}

PolyMatrix build_presentation(const ProblemFile& p, const ProblemObject& o) {
    if (o.kind != "presentation")
        throw ParseError("object '" + o.name + "' is not a presentation", 0);
    auto it = o.mats.find("m");
    if (it == o.mats.end())
        throw ParseError("presentation object '" + o.name + "' needs m", 0);
    return build_matrix(it->second, problem_ring(p));
}

std::vector<PolyMatrix> build_contraction(const ProblemFile& p,
                                          const ProblemObject& o,
                                          const KoszulModule& m) {
    RingCtxPtr ctx = problem_ring(p);
    std::vector<PolyMatrix> k;
    for (int n = m.lo; n <= m.hi; ++n) {
        auto it = o.mats.find("k[" + std::to_string(n) + "]");
        k.push_back(it != o.mats.end() ? build_matrix(it->second, ctx)
                                       : PolyMatrix(ctx, m.rank(n - 1), m.rank(n)));
    }
    return k;
}

} // namespace lgcat

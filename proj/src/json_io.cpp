#include "superschur/json_io.hpp"

#include <stdexcept>

namespace superschur {

ojson to_json(const Partition& p) {
    return ojson(p.parts());
}

Partition partition_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("partition json must be an array");
    return Partition(j.get<std::vector<int>>());
}

ojson to_json(const SparsePolynomial& p) {
    ojson terms = ojson::array();
    for (const auto& [e, c] : p.terms()) {
        ojson term;
        term["exp"] = e;
        term["coef"] = c.str();
        terms.push_back(std::move(term));
    }
    ojson out;
    out["dims"] = p.dims();
    out["terms"] = std::move(terms);
    return out;
}

SparsePolynomial polynomial_from_json(const ojson& j) {
    SparsePolynomial p(j.at("dims").get<int>());
    for (const auto& term : j.at("terms")) {
        const auto e = term.at("exp").get<std::vector<int>>();
        const auto& cj = term.at("coef");
        BigInt c = cj.is_string() ? BigInt(cj.get<std::string>()) : BigInt(cj.get<long long>());
        p.add_term(e, c);
    }
    return p;
}

ojson to_json(const SuperTableau& t) {
    ojson rows = ojson::array();
    for (const auto& row : t.rows) {
        ojson r = ojson::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

SuperTableau tableau_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("tableau json must be an array of rows");
    SuperTableau t;
    std::vector<int> shape;
    for (const auto& rj : j) {
        std::vector<SuperLetter> row;
        for (const auto& cell : rj) row.push_back(SuperLetter::parse(cell.get<std::string>()));
        shape.push_back(static_cast<int>(row.size()));
        t.rows.push_back(std::move(row));
    }
    t.shape = Partition(std::move(shape));
    return t;
}

ojson to_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    return rows;
}

IntMatrix matrix_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix json must be an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    for (const auto& rj : j) {
        if (!rj.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        if (cols < 0)
            cols = static_cast<int>(rj.size());
        else if (cols != static_cast<int>(rj.size()))
            throw std::invalid_argument("matrix rows have unequal lengths");
    }
    if (rows == 0) return IntMatrix(0, 0);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
            m.at(r, c) = j[r][c].get<long long>();
        }
    return m;
}

ojson to_json(const HookSystem& sys) {
    ojson out;
    out["k"] = sys.k;
    out["l"] = sys.l;
    out["Atilde"] = to_json(sys.atilde);
    out["btilde"] = sys.btilde;
    return out;
}

ojson to_json(const LatticePointSet& pts) {
    ojson out = ojson::array();
    for (const auto& p : pts.points) out.push_back(p);
    return out;
}

ojson to_json(const std::vector<Rational>& v) {
    ojson out = ojson::array();
    for (const Rational& x : v) {
        if (boost::multiprecision::denominator(x) == 1)
            out.push_back(static_cast<long long>(boost::multiprecision::numerator(x)));
        else
            out.push_back(x.str());
    }
    return out;
}

ojson to_json(const VerificationReport& rep, bool include_timing) {
    ojson checks;
    for (const auto& [name, ok] : rep.checks) checks[name] = ok;
    ojson counts;
    for (const auto& [name, n] : rep.counts) counts[name] = n;
    ojson out;
    out["checks"] = std::move(checks);
    out["counterexample"] = rep.counterexample ? to_json(*rep.counterexample) : ojson(nullptr);
    out["counts"] = std::move(counts);
    if (include_timing) out["elapsed_ms"] = rep.elapsed_ms;
    return out;
}

ojson to_json(const CertReport& rep, bool include_timing) {
    ojson checks;
    checks["normalized_zero_one"] = rep.zero_one_pass;
    checks["normalized_interval"] = rep.interval_pass;
    checks["exhaustive_tu"] = rep.exhaustive_checked ? ojson(rep.exhaustive_pass) : ojson(nullptr);
    ojson counts;
    counts["rows"] = rep.rows;
    counts["cols"] = rep.cols;
    ojson out;
    out["certified"] = rep.certified();
    out["checks"] = std::move(checks);
    out["counts"] = std::move(counts);
    if (include_timing) out["elapsed_ms"] = rep.elapsed_ms;
    return out;
}

} // namespace superschur

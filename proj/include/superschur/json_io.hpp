#pragma once

#include "superschur/hook_system.hpp"
#include "superschur/matrix.hpp"
#include "superschur/partition.hpp"
#include "superschur/polynomial.hpp"
#include "superschur/report.hpp"
#include "superschur/tableau.hpp"

#include <json.hpp>

namespace superschur {

// Key order is fixed by construction (insertion order) so dumps are
// byte-deterministic for fixed inputs.
using ojson = nlohmann::ordered_json;

ojson to_json(const Partition& p);                // [2,1,1]; [] for the empty shape
Partition partition_from_json(const ojson& j);

// { "dims": d, "terms": [ {"exp":[...], "coef":"<decimal>"} ... ] },
// terms in lexicographic exponent order, coefficients as decimal strings.
ojson to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const ojson& j);

ojson to_json(const SuperTableau& t);             // rows of "t1","u2",... strings
SuperTableau tableau_from_json(const ojson& j);

ojson to_json(const IntMatrix& m);                // array of row arrays
IntMatrix matrix_from_json(const ojson& j);

ojson to_json(const HookSystem& sys);             // {"k","l","Atilde","btilde"}

ojson to_json(const LatticePointSet& pts);        // sorted array of arrays

// Rational coordinates serialize as integers when integral, else "p/q".
ojson to_json(const std::vector<Rational>& v);

ojson to_json(const VerificationReport& rep, bool include_timing = false);
ojson to_json(const CertReport& rep, bool include_timing = false);

} // namespace superschur

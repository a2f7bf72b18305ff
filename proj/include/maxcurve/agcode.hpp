/*
   Copyright 2026 The maxcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file agcode.hpp
 * @brief One-point codes C(D, λP∞): evaluation of L(λP∞) at the affine rational points.
 *
 * Matrix entries are written as colon-joined base-p digits "c0:c1:...", one digit per power
 * of the generator of the ambient field.
 */

#ifndef MAXCURVE_AGCODE_HPP
#define MAXCURVE_AGCODE_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curve_model.hpp"
#include "function_field.hpp"
#include "linear_algebra.hpp"
#include "weierstrass.hpp"

namespace maxcurve {

struct CodeParams {
    std::uint64_t length = 0;     // n' = #X(k) - 1
    std::uint64_t dimension = 0;  // k' = #{h in H(P∞) : h <= λ}
    std::uint64_t lambda = 0;
    std::uint64_t designed_distance = 0;  // n' - λ
    std::uint64_t field_size = 0;         // q^2
};

struct Code {
    CodeParams params;
    std::vector<Point> evaluation_points;
    std::vector<Monomial> basis;
    Matrix generator;  // one row per basis monomial
};

inline constexpr std::uint64_t kDefaultCodeBudget = std::uint64_t{1} << 22;

inline Code build_code(const CurveModel& curve, std::uint64_t lambda) {
    if (!curve.is_maximal()) throw ValidationError("code construction needs a maximal curve");
    Code code;
    for (const auto& p : curve.points(Level::kFq2))
        if (!p.at_infinity) code.evaluation_points.push_back(p);
    const std::uint64_t n = code.evaluation_points.size();
    if (lambda >= n) throw ValidationError("lambda must be below the code length " + std::to_string(n));

    FunctionField ff(curve);
    const RRBasis basis = ff.rr_basis(lambda);
    code.basis = basis.monomials;
    for (const auto& m : basis.monomials) {
        std::vector<Fe> row;
        row.reserve(n);
        const FuncElement f = ff.monomial(m);
        for (const auto& p : code.evaluation_points) row.push_back(ff.evaluate(f, p));
        code.generator.push_back(std::move(row));
    }
    code.params.length = n;
    code.params.lambda = lambda;
    code.params.dimension = semigroup_at_infinity(curve).count_up_to(lambda);
    code.params.designed_distance = n - lambda;
    code.params.field_size = curve.q() * curve.q();
    if (rank(curve.tower(), code.generator) != code.params.dimension)
        throw IdentityFailure("generator matrix rank differs from the non-gap count");
    return code;
}

/**
 * Minimum Hamming weight over nonzero codewords. Messages are enumerated with leading
 * nonzero entry 1 (scalar multiples share a weight); a codeword is abandoned once its weight
 * reaches the current minimum.
 */
inline std::uint64_t min_distance_exact(const FieldTower& t, const Code& code, std::uint64_t budget = kDefaultCodeBudget) {
    const std::size_t k = code.generator.size();
    const std::uint64_t n = code.params.length;
    const auto& field = t.elements(Level::kFq2);
    const std::uint64_t qq = field.size();
    // (qq^k - 1)/(qq - 1) normalized messages, n symbols each
    std::uint64_t messages = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        messages += power;
        power *= qq;
        if (messages > budget) throw BudgetExceeded("codeword scan exceeds the budget");
    }
    if (messages * n > budget) throw BudgetExceeded("codeword scan exceeds the budget");

    std::uint64_t best = n + 1;
    std::vector<Fe> word(n);
    std::vector<std::size_t> digits(k);
    for (std::size_t lead = 0; lead < k; ++lead) {
        // message = e_lead + Σ_{i > lead} c_i e_i
        const std::size_t free = k - lead - 1;
        std::fill(digits.begin(), digits.end(), 0);
        for (;;) {
            std::uint64_t weight = 0;
            for (std::uint64_t col = 0; col < n && weight < best; ++col) {
                Fe v = code.generator[lead][col];
                for (std::size_t i = 0; i < free; ++i)
                    if (digits[i] != 0) v = t.add(v, t.mul(field[digits[i]], code.generator[lead + 1 + i][col]));
                if (v != t.zero()) ++weight;
            }
            if (weight < best) best = weight;
            std::size_t i = 0;
            while (i < free && ++digits[i] == qq) digits[i++] = 0;
            if (i == free) break;
        }
    }
    return best;
}

inline nlohmann::json code_to_json(const FieldTower& t, const Code& code) {
    nlohmann::json j;
    j["params"] = {{"n", code.params.length},
                   {"k", code.params.dimension},
                   {"lambda", code.params.lambda},
                   {"q2", code.params.field_size},
                   {"d_designed", code.params.designed_distance}};
    j["basis_monomials"] = nlohmann::json::array();
    for (const auto& m : code.basis) j["basis_monomials"].push_back({m.x_deg, m.y_deg});
    j["matrix"] = nlohmann::json::array();
    for (const auto& row : code.generator) {
        nlohmann::json r = nlohmann::json::array();
        for (Fe x : row) r.push_back(encode_element(t, x));
        j["matrix"].push_back(std::move(r));
    }
    return j;
}

inline std::string code_to_csv(const FieldTower& t, const Code& code) {
    std::ostringstream out;
    out << "n,k,lambda,q2\n";
    out << code.params.length << ',' << code.params.dimension << ',' << code.params.lambda << ','
        << code.params.field_size << '\n';
    for (const auto& row : code.generator) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << encode_element(t, row[i]);
        out << '\n';
    }
    return out.str();
}

enum class MatrixFormat { kCsv, kJson };

inline MatrixFormat parse_format(const std::string& s) {
    if (s == "csv") return MatrixFormat::kCsv;
    if (s == "json") return MatrixFormat::kJson;
    throw ValidationError("format must be csv or json");
}

inline void export_matrix(const FieldTower& t, const Code& code, const std::string& path, MatrixFormat format) {
    if (path.empty()) throw ValidationError("export path is empty");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    if (format == MatrixFormat::kCsv)
        out << code_to_csv(t, code);
    else
        out << code_to_json(t, code).dump(2) << '\n';
    if (!out) throw Error("write to '" + path + "' failed");
}

/// Parameters and matrix read back from an export; evaluation points are not stored.
struct ImportedCode {
    CodeParams params;
    std::vector<Monomial> basis;  // empty for csv
    Matrix generator;
};

inline ImportedCode import_matrix(const FieldTower& t, const std::string& path, MatrixFormat format) {
    if (path.empty()) throw ValidationError("import path is empty");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    ImportedCode code;
    if (format == MatrixFormat::kJson) {
        nlohmann::json j;
        try {
            in >> j;
            const auto& p = j.at("params");
            code.params.length = p.at("n").get<std::uint64_t>();
            code.params.dimension = p.at("k").get<std::uint64_t>();
            code.params.lambda = p.at("lambda").get<std::uint64_t>();
            code.params.field_size = p.at("q2").get<std::uint64_t>();
            code.params.designed_distance = p.at("d_designed").get<std::uint64_t>();
            for (const auto& m : j.at("basis_monomials"))
                code.basis.push_back(Monomial{m.at(0).get<std::uint32_t>(), m.at(1).get<std::uint32_t>()});
            for (const auto& row : j.at("matrix")) {
                std::vector<Fe> r;
                for (const auto& e : row) r.push_back(decode_element(t, e.get<std::string>()));
                code.generator.push_back(std::move(r));
            }
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("malformed code json: ") + e.what());
        }
        return code;
    }
    std::string line;
    if (!std::getline(in, line) || line != "n,k,lambda,q2") throw ValidationError("csv header must be n,k,lambda,q2");
    if (!std::getline(in, line)) throw ValidationError("csv is missing the parameter line");
    {
        std::stringstream ps(line);
        std::string field;
        std::vector<std::uint64_t> v;
        while (std::getline(ps, field, ',')) v.push_back(std::stoull(field));
        if (v.size() != 4) throw ValidationError("csv parameter line needs 4 values");
        code.params.length = v[0];
        code.params.dimension = v[1];
        code.params.lambda = v[2];
        code.params.field_size = v[3];
        code.params.designed_distance = v[0] - v[2];
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream rs(line);
        std::string cell;
        std::vector<Fe> row;
        while (std::getline(rs, cell, ',')) row.push_back(decode_element(t, cell));
        if (row.size() != code.params.length) throw ValidationError("csv row length differs from n");
        code.generator.push_back(std::move(row));
    }
    if (code.generator.size() != code.params.dimension) throw ValidationError("csv row count differs from k");
    return code;
}

}  // namespace maxcurve

#endif

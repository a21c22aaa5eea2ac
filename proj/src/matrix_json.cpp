#include "linwave/matrix_json.hpp"

#include <stdexcept>

namespace linwave {

namespace {

nlohmann::json quad_to_json(const ExtReal& x) {
    return nlohmann::json::array(
        {to_string(x.a), to_string(x.b), to_string(x.c), to_string(x.d)});
}

ExtReal quad_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("coefficient quadruple must be a 4-element array");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>())};
}

nlohmann::json scalar_to_json(const SymScalar& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coeff] : s.terms()) {
        terms.push_back({{"exp", {exp[0], exp[1], exp[2]}},
                         {"re", quad_to_json(coeff.re)},
                         {"im", quad_to_json(coeff.im)}});
    }
    return terms;
}

SymScalar scalar_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix entry must be an array of terms");
    SymScalar s;
    for (const auto& term : j) {
        const auto& exp = term.at("exp");
        if (!exp.is_array() || exp.size() != 3)
            throw std::invalid_argument("term 'exp' must be a 3-element array");
        ExtScalar coeff{quad_from_json(term.at("re")), quad_from_json(term.at("im"))};
        s += SymScalar::term(coeff, exp[0].get<int>(), exp[1].get<int>(), exp[2].get<int>());
    }
    return s;
}

}  // namespace

nlohmann::json matrix_to_json(const SymMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(scalar_to_json(m.at(r, c)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SymMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        int rows = j.at("rows").get<int>();
        int cols = j.at("cols").get<int>();
        const auto& entries = j.at("entries");
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("dimensions must be positive");
        if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("'entries' must list rows*cols entries in row-major order");
        SymMatrix m(rows, cols);
        size_t index = 0;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(entries[index++]);
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
}

}  // namespace linwave

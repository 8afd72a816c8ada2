#include "hallq/render.hpp"

#include <algorithm>

namespace hallq {

using nlohmann::json;

std::string matrix_str(const Ring& R, const RMatrix& m) {
    if (m.rows == 0) return "[]";
    std::string out = "[";
    for (int i = 0; i < m.rows; ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += R.str(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

std::string rep_str(const Ring& R, const FreeRep& rep) {
    std::string out = dim_str(rep.dim);
    for (const RMatrix& m : rep.maps) out += " " + matrix_str(R, m);
    return out;
}

json matrix_json(const Ring& R, const RMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(R.str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json rep_json(const Ring& R, const FreeRep& rep) {
    json maps = json::array();
    for (const RMatrix& m : rep.maps) maps.push_back(matrix_json(R, m));
    return json{{"dim", rep.dim}, {"maps", std::move(maps)}};
}

RMatrix matrix_from_json(const Ring& R, const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument("matrix json: wrong row count");
    RMatrix out(rows, cols, R.zero());
    for (int i = 0; i < rows; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix json: wrong column count");
        for (int c = 0; c < cols; ++c)
            out.at(i, c) = R.parse_elem(row[static_cast<size_t>(c)].get<std::string>());
    }
    return out;
}

FreeRep rep_from_json(const Quiver& quiver, const Ring& R, const json& j) {
    FreeRep rep;
    rep.dim = j.at("dim").get<DimVec>();
    const json& maps = j.at("maps");
    if (static_cast<int>(maps.size()) != quiver.arrow_count())
        throw std::invalid_argument("rep json: wrong arrow count");
    for (int k = 0; k < quiver.arrow_count(); ++k) {
        const Arrow& h = quiver.arrows[static_cast<size_t>(k)];
        rep.maps.push_back(matrix_from_json(R, maps[static_cast<size_t>(k)],
                                            rep.dim[h.dst], rep.dim[h.src]));
    }
    validate_rep(quiver, R, rep);
    return rep;
}

json sqrtq_json(const SqrtQ& c) { return json{{"a", c.a.str()}, {"b", c.b.str()}}; }

SqrtQ sqrtq_from_json(const json& j, long long q) {
    return SqrtQ{parse_rational(j.at("a").get<std::string>()),
                 parse_rational(j.at("b").get<std::string>()), q};
}

std::string hall_table_text(const Ring& R, const HallElement& elem) {
    if (elem.terms.empty()) return "  (empty element)\n";
    size_t width = 0;
    for (auto& [rep, c] : elem.terms) width = std::max(width, rep_str(R, rep).size());
    std::string out;
    for (auto& [rep, c] : elem.terms) {
        std::string r = rep_str(R, rep);
        out += "  " + r + std::string(width - r.size() + 2, ' ') + c.str() + "\n";
    }
    return out;
}

json hall_element_json(const Ring& R, const HallElement& elem) {
    json terms = json::array();
    for (auto& [rep, c] : elem.terms) {
        json t = rep_json(R, rep);
        t["coeff"] = sqrtq_json(c);
        terms.push_back(std::move(t));
    }
    return json{{"q", R.q()}, {"n", R.n()}, {"terms", std::move(terms)}};
}

HallElement hall_element_from_json(const Quiver& quiver, const Ring& R, const json& j) {
    if (j.at("q").get<int>() != R.q() || j.at("n").get<int>() != R.n())
        throw std::invalid_argument("hall element json: ring parameters disagree");
    HallElement out;
    for (const json& t : j.at("terms"))
        out.add(rep_from_json(quiver, R, t), sqrtq_from_json(t.at("coeff"), R.q()));
    return out;
}

std::string tensor_table_text(const Ring& R, const TensorElement& elem) {
    if (elem.terms.empty()) return "  (empty element)\n";
    size_t width = 0;
    for (auto& [key, c] : elem.terms) {
        std::string k = rep_str(R, key.first) + " (x) " + rep_str(R, key.second);
        width = std::max(width, k.size());
    }
    std::string out;
    for (auto& [key, c] : elem.terms) {
        std::string k = rep_str(R, key.first) + " (x) " + rep_str(R, key.second);
        out += "  " + k + std::string(width - k.size() + 2, ' ') + c.str() + "\n";
    }
    return out;
}

json tensor_element_json(const Ring& R, const TensorElement& elem) {
    json terms = json::array();
    for (auto& [key, c] : elem.terms) {
        terms.push_back(json{{"left", rep_json(R, key.first)},
                             {"right", rep_json(R, key.second)},
                             {"coeff", sqrtq_json(c)}});
    }
    return json{{"q", R.q()}, {"n", R.n()}, {"terms", std::move(terms)}};
}

}  // namespace hallq

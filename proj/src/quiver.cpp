#include "hallq/quiver.hpp"

#include <stdexcept>

namespace hallq {

int Quiver::index_of(int label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("unknown vertex label " + std::to_string(label));
}

void Quiver::validate() const {
    for (const Arrow& h : arrows) {
        if (h.src < 0 || h.src >= vertex_count() || h.dst < 0 || h.dst >= vertex_count())
            throw std::invalid_argument("arrow endpoint out of range");
        if (h.src == h.dst) throw std::invalid_argument("quiver must be loop-free");
    }
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw std::invalid_argument("duplicate vertex label");
}

Quiver quiver_preset(const std::string& name) {
    if (name == "a2") return Quiver{{1, 2}, {{0, 1}}};
    if (name == "a3") return Quiver{{1, 2, 3}, {{0, 1}, {1, 2}}};
    if (name == "two-points") return Quiver{{1, 2}, {}};
    throw std::invalid_argument("unknown quiver preset: " + name);
}

long long euler_form(const Quiver& quiver, const DimVec& a, const DimVec& b) {
    if (static_cast<int>(a.size()) != quiver.vertex_count() ||
        static_cast<int>(b.size()) != quiver.vertex_count())
        throw std::invalid_argument("euler_form: dimension vector length mismatch");
    long long out = 0;
    for (size_t i = 0; i < a.size(); ++i) out += static_cast<long long>(a[i]) * b[i];
    for (const Arrow& h : quiver.arrows) out -= static_cast<long long>(a[h.src]) * b[h.dst];
    return out;
}

DimVec dim_add(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dim_add: length mismatch");
    DimVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool dim_leq(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dim_leq: length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string dim_str(const DimVec& d) {
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

}  // namespace hallq

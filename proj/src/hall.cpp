#include "hallq/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallq {

void HallElement::add(const FreeRep& rep, const SqrtQ& c) {
    if (c.is_zero()) return;
    auto it = terms.find(rep);
    if (it == terms.end()) {
        terms.emplace(rep, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

void TensorElement::add(const FreeRep& left, const FreeRep& right, const SqrtQ& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

std::vector<std::pair<FreeRep, FreeRep>> TensorElement::support() const {
    std::vector<std::pair<FreeRep, FreeRep>> out;
    out.reserve(terms.size());
    for (auto& [key, c] : terms) out.push_back(key);
    return out;
}

SqrtQ DualFunction::at(const FreeRep& rep, long long q) const {
    auto it = values.find(rep);
    return it == values.end() ? SqrtQ::of(0, q) : it->second;
}

Context::Context(Quiver quiver, RingParams params, TwistMode twist, std::uint64_t budget)
    : quiver_(std::move(quiver)), ring_(params), twist_(twist), budget_(budget) {
    quiver_.validate();
    if (budget_ == 0) throw std::invalid_argument("budget must be positive");
}

SqrtQ Context::twist_pow(long long e) const {
    int ee = static_cast<int>(twist_ == TwistMode::half ? e : 2 * e);
    return SqrtQ::v_pow(ee, q());
}

FreeRep Context::canonical(const FreeRep& rep) {
    Code code = rep_code(rep);
    auto it = canonical_cache_.find(code);
    if (it != canonical_cache_.end()) return it->second;
    FreeRep canon = canonical_form(quiver_, ring_, rep, budget_);
    canonical_cache_.emplace(rep_code(canon), canon);  // canonical is a fixed point
    canonical_cache_.emplace(std::move(code), canon);
    return canon;
}

std::uint64_t Context::aut(const FreeRep& rep) {
    FreeRep canon = canonical(rep);
    Code code = rep_code(canon);
    auto it = aut_cache_.find(code);
    if (it != aut_cache_.end()) return it->second;
    std::uint64_t a = aut_count(quiver_, ring_, canon, budget_);
    aut_cache_.emplace(std::move(code), a);
    return a;
}

const std::vector<FreeRep>& Context::classes(const DimVec& dim) {
    auto it = class_cache_.find(dim);
    if (it != class_cache_.end()) return it->second;
    auto cls = iso_classes(quiver_, ring_, dim, budget_);
    return class_cache_.emplace(dim, std::move(cls)).first->second;
}

std::vector<std::pair<FreeRep, FreeRep>> Context::enumerate_free_subreps(const FreeRep& L,
                                                                         const DimVec& w) {
    std::vector<std::pair<FreeRep, FreeRep>> out;
    for (const auto& pr : enumerate_free_subreps_raw(quiver_, ring_, L, w, budget_))
        out.emplace_back(canonical(pr.sub), canonical(pr.quot));
    return out;
}

const Context::SubTable& Context::subrep_table(const FreeRep& canonical_L) {
    Code lcode = rep_code(canonical_L);
    auto it = subtable_cache_.find(lcode);
    if (it != subtable_cache_.end()) return it->second;
    SubTable table;
    int nv = quiver_.vertex_count();
    DimVec w(nv, 0);
    while (true) {
        for (const auto& pr : enumerate_free_subreps_raw(quiver_, ring_, canonical_L, w, budget_)) {
            FreeRep sub = canonical(pr.sub);
            FreeRep quot = canonical(pr.quot);
            Code quot_code = rep_code(quot), sub_code = rep_code(sub);
            table.reps.emplace(quot_code, quot);
            table.reps.emplace(sub_code, sub);
            ++table.counts[{std::move(quot_code), std::move(sub_code)}];
        }
        int k = 0;
        for (; k < nv; ++k) {
            if (++w[k] <= canonical_L.dim[k]) break;
            w[k] = 0;
        }
        if (k == nv) break;
    }
    return subtable_cache_.emplace(std::move(lcode), std::move(table)).first->second;
}

long long Context::hall_number(const FreeRep& L, const FreeRep& X, const FreeRep& Y) {
    if (dim_add(X.dim, Y.dim) != L.dim) return 0;  // grading mismatch
    FreeRep lc = canonical(L);
    auto key = std::make_pair(rep_code(canonical(X)), rep_code(canonical(Y)));
    const SubTable& table = subrep_table(lc);
    auto it = table.counts.find(key);
    return it == table.counts.end() ? 0 : it->second;
}

HallElement Context::circ_product(const FreeRep& X, const FreeRep& Y) {
    HallElement out;
    FreeRep xc = canonical(X), yc = canonical(Y);
    auto key = std::make_pair(rep_code(xc), rep_code(yc));
    for (const FreeRep& L : classes(dim_add(X.dim, Y.dim))) {
        const SubTable& table = subrep_table(L);
        auto it = table.counts.find(key);
        if (it != table.counts.end()) out.add(L, scalar(it->second));
    }
    return out;
}

HallElement Context::element(const FreeRep& rep) {
    HallElement out;
    out.add(canonical(rep), scalar(1));
    return out;
}

HallElement Context::scale(const HallElement& a, const SqrtQ& c) {
    HallElement out;
    for (auto& [rep, coeff] : a.terms) out.add(rep, coeff * c);
    return out;
}

HallElement Context::sum(const HallElement& a, const HallElement& b) {
    HallElement out = a;
    for (auto& [rep, coeff] : b.terms) out.add(rep, coeff);
    return out;
}

HallElement Context::twisted_product(const HallElement& a, const HallElement& b) {
    HallElement out;
    for (auto& [x, cx] : a.terms)
        for (auto& [y, cy] : b.terms) {
            SqrtQ factor = cx * cy * twist_pow(n() * euler_form(quiver_, x.dim, y.dim));
            for (auto& [l, f] : circ_product(x, y).terms) out.add(l, factor * f);
        }
    return out;
}

HallElement Context::word_product(const std::vector<int>& word) {
    HallElement out = unit();
    for (int v : word) out = twisted_product(out, element(simple(v)));
    return out;
}

std::vector<HallElement> Context::composition_span(const std::vector<std::vector<int>>& words) {
    std::vector<HallElement> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(word_product(w));
    return out;
}

TensorElement Context::delta(const FreeRep& E) {
    FreeRep ec = canonical(E);
    SqrtQ a_e = scalar(static_cast<long long>(aut(ec)));
    TensorElement out;
    const SubTable& table = subrep_table(ec);
    for (auto& [key, count] : table.counts) {
        const FreeRep& quot = table.reps.at(key.first);  // M
        const FreeRep& sub = table.reps.at(key.second);  // N
        SqrtQ coeff = twist_pow(n() * euler_form(quiver_, quot.dim, sub.dim)) * scalar(count) *
                      scalar(static_cast<long long>(aut(quot))) *
                      scalar(static_cast<long long>(aut(sub))) / a_e;
        out.add(quot, sub, coeff);
    }
    return out;
}

TensorElement Context::delta_linear(const HallElement& a) {
    TensorElement out;
    for (auto& [rep, c] : a.terms)
        for (auto& [key, dc] : delta(rep).terms) out.add(key.first, key.second, c * dc);
    return out;
}

TensorElement Context::tensor_scale(const TensorElement& u, const SqrtQ& c) {
    TensorElement out;
    for (auto& [key, coeff] : u.terms) out.add(key.first, key.second, coeff * c);
    return out;
}

TensorElement Context::tensor_twisted_product(const TensorElement& u, const TensorElement& w) {
    TensorElement out;
    for (auto& [ab, cab] : u.terms)
        for (auto& [cd, ccd] : w.terms) {
            const FreeRep& b = ab.second;
            const FreeRep& c = cd.first;
            long long cross =
                euler_form(quiver_, b.dim, c.dim) + euler_form(quiver_, c.dim, b.dim);
            SqrtQ factor = cab * ccd * twist_pow(n() * cross);
            HallElement left = twisted_product(element(ab.first), element(cd.first));
            HallElement right = twisted_product(element(ab.second), element(cd.second));
            for (auto& [lrep, lc] : left.terms)
                for (auto& [rrep, rc] : right.terms) out.add(lrep, rrep, factor * lc * rc);
        }
    return out;
}

DeltaReport Context::check_delta_homomorphism(const FreeRep& M, const FreeRep& N) {
    DeltaReport report;
    HallElement mn = twisted_product(element(M), element(N));
    report.lhs = delta_linear(mn);
    report.rhs = tensor_twisted_product(delta(M), delta(N));
    report.homomorphism = report.lhs == report.rhs;
    for (auto& [key, c] : report.lhs.terms)
        if (!report.rhs.terms.contains(key)) report.lhs_only.push_back(key);
    for (auto& [key, c] : report.rhs.terms)
        if (!report.lhs.terms.contains(key)) report.rhs_only.push_back(key);
    return report;
}

DualFunction Context::characteristic_function(const FreeRep& rep) {
    DualFunction out;
    FreeRep canon = canonical(rep);
    out.grade = canon.dim;
    out.values.emplace(std::move(canon), scalar(1));
    return out;
}

DualFunction Context::dual_product(const DualFunction& f1, const DualFunction& f2) {
    // (f1 . f2)(E) = sum over subobjects N of E of f1(E/N) f2(N)
    DualFunction out;
    out.grade = dim_add(f1.grade, f2.grade);
    for (const FreeRep& e : classes(out.grade)) {
        SqrtQ val = scalar(0);
        const SubTable& table = subrep_table(e);
        for (auto& [key, count] : table.counts) {
            const FreeRep& quot = table.reps.at(key.first);
            const FreeRep& sub = table.reps.at(key.second);
            if (quot.dim != f1.grade || sub.dim != f2.grade) continue;
            val = val + scalar(count) * f1.at(quot, q()) * f2.at(sub, q());
        }
        if (!val.is_zero()) out.values.emplace(e, val);
    }
    return out;
}

}  // namespace hallq

#include "spt/rg_circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

int exact_log3(int L) {
    if (L < 1) throw std::invalid_argument("system size must be a power of 3");
    int l = 0;
    int x = L;
    while (x % 3 == 0) {
        x /= 3;
        ++l;
    }
    if (x != 1) throw std::invalid_argument("system size " + std::to_string(L) + " is not a power of 3");
    return l;
}

LegLayout make_layout(int L, int depth) {
    LegLayout lay;
    lay.L = L;
    lay.l = exact_log3(L);
    if (depth < 0 || depth > lay.l) throw std::invalid_argument("depth must lie in [0, log3 L]");
    lay.depth = depth;
    lay.ancilla_layer.assign(L, 0);
    std::vector<int> legs(L);
    for (int i = 0; i < L; ++i) legs[i] = i;
    lay.renormalised.push_back(legs);
    for (int k = 1; k <= depth; ++k) {
        std::vector<int> next;
        for (std::size_t t = 0; t + 2 < legs.size(); t += 3) {
            next.push_back(legs[t + 1]);
            lay.ancilla_layer[legs[t]] = k;
            lay.ancilla_layer[legs[t + 2]] = k;
        }
        legs = next;
        lay.renormalised.push_back(legs);
    }
    return lay;
}

std::vector<int> LegLayout::ancillas(int layer) const {
    std::vector<int> a;
    for (int i = 0; i < L; ++i)
        if (ancilla_layer[i] == layer && layer > 0) a.push_back(i);
    return a;
}

std::vector<int> LegLayout::all_ancillas() const {
    std::vector<int> a;
    for (int i = 0; i < L; ++i)
        if (ancilla_layer[i] > 0) a.push_back(i);
    return a;
}

bool LegLayout::is_renormalised(int site, int layer) const {
    const auto& v = renormalised.at(layer);
    return std::find(v.begin(), v.end(), site) != v.end();
}

int max_string_depth(int L) {
    int l = exact_log3(L);
    if (l < 1) throw std::invalid_argument("a two-point string needs at least three sites");
    return l - 1;
}

std::pair<int, int> string_span(int L) {
    LegLayout lay = make_layout(L, max_string_depth(L));
    const auto& legs = lay.renormalised.back();
    return {legs.front(), legs.back()};
}

std::vector<LocalOp> mso_string(const SptModel& m, const LegLayout& lay, int d, int g, int i, int j) {
    if (d > lay.depth) throw std::invalid_argument("string depth exceeds the circuit depth");
    if (!(i < j) || !lay.is_renormalised(i, d) || !lay.is_renormalised(j, d))
        throw std::invalid_argument("string end points must be distinct renormalised legs of that depth");
    std::vector<LocalOp> ops;
    if (g == 0) return ops;
    ops.emplace_back(i, m.SR(g));
    for (int s : lay.renormalised[d])
        if (s > i && s < j) ops.emplace_back(s, m.R(g));
    ops.emplace_back(j, m.SL(g));
    return ops;
}

}  // namespace spt

#include "qfs/linalg.hpp"

namespace qfs {

SparseRow row_axpy(const SparseRow& r, uint64_t c, const SparseRow& s, const Modulus& mod) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < s.size()) {
        if (r[i].first < s[j].first) {
            out.push_back(r[i++]);
        } else if (r[i].first > s[j].first) {
            uint64_t v = mod.mul(mod.neg(c), s[j].second);
            if (v) out.push_back({s[j].first, v});
            ++j;
        } else {
            uint64_t v = mod.sub(r[i].second, mod.mul(c, s[j].second));
            if (v) out.push_back({r[i].first, v});
            ++i, ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(r[i]);
    for (; j < s.size(); ++j) {
        uint64_t v = mod.mul(mod.neg(c), s[j].second);
        if (v) out.push_back({s[j].first, v});
    }
    return out;
}

Eliminator::Result Eliminator::add_row(SparseRow row) {
    SparseRow hist;
    if (track_) hist.push_back({uint32_t(added_), 1});
    while (!row.empty()) {
        auto it = lead_.find(row.front().first);
        if (it == lead_.end()) break;
        const PivotRow& pv = pivots_[it->second];
        uint64_t c = row.front().second;  // pivot lead is 1
        row = row_axpy(row, c, pv.row, mod_);
        if (track_) hist = row_axpy(hist, c, pv.history, mod_);
    }
    ++added_;
    if (row.empty()) return {true, std::move(hist)};
    uint64_t inv = mod_.inv(row.front().second);
    if (inv != 1) {
        for (auto& [col, v] : row) v = mod_.mul(v, inv);
        if (track_)
            for (auto& [col, v] : hist) v = mod_.mul(v, inv);
    }
    lead_[row.front().first] = uint32_t(pivots_.size());
    pivots_.push_back({std::move(row), std::move(hist)});
    return {false, {}};
}

SparseRow Eliminator::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = lead_.find(row.front().first);
        if (it == lead_.end()) break;
        row = row_axpy(row, row.front().second, pivots_[it->second].row, mod_);
    }
    return row;
}

}  // namespace qfs

#pragma once

#include <cstdint>
#include <vector>

#include "qfs/poly.hpp"

namespace qfs {

// Multidegree of a polynomial: either zero (bottom element), a common degree
// vector, or inhomogeneous.
struct DegreeResult {
    enum Kind { Zero, Homogeneous, Inhomogeneous } kind = Zero;
    std::vector<int64_t> degree;  // valid when kind == Homogeneous

    bool operator==(const DegreeResult& o) const {
        return kind == o.kind && (kind != Homogeneous || degree == o.degree);
    }
};

// Weighted multigrading: m components, one nonzero weight vector per variable.
// mu is the componentwise sum of the weights; a hypersurface f with
// deg f = mu is the Calabi-Yau case.
class Grading {
public:
    Grading(int nvars, std::vector<std::vector<int64_t>> weights)
        : nvars_(nvars), weights_(std::move(weights)) {
        if (int(weights_.size()) != nvars) throw std::invalid_argument("grading: weight count");
        if (weights_.empty()) throw std::invalid_argument("grading: no variables");
        ncomp_ = int(weights_.front().size());
        if (ncomp_ < 1) throw std::invalid_argument("grading: no components");
        mu_.assign(size_t(ncomp_), 0);
        for (const auto& w : weights_) {
            if (int(w.size()) != ncomp_) throw std::invalid_argument("grading: ragged weights");
            bool nonzero = false;
            for (int c = 0; c < ncomp_; ++c) {
                if (w[size_t(c)] < 0) throw std::invalid_argument("grading: negative weight");
                if (w[size_t(c)]) nonzero = true;
                mu_[size_t(c)] += w[size_t(c)];
            }
            if (!nonzero) throw std::invalid_argument("grading: zero weight vector");
        }
    }

    static Grading standard(int nvars) {
        return Grading(nvars, std::vector<std::vector<int64_t>>(size_t(nvars), {1}));
    }
    static Grading weighted(std::vector<int64_t> w) {
        std::vector<std::vector<int64_t>> ws;
        ws.reserve(w.size());
        for (int64_t x : w) ws.push_back({x});
        return Grading(int(w.size()), std::move(ws));
    }

    int nvars() const { return nvars_; }
    int ncomponents() const { return ncomp_; }
    const std::vector<int64_t>& mu() const { return mu_; }
    const std::vector<std::vector<int64_t>>& weights() const { return weights_; }

    std::vector<int64_t> term_degree(const Mono& m) const {
        std::vector<int64_t> d(size_t(ncomp_), 0);
        for (int i = 0; i < nvars_; ++i)
            for (int c = 0; c < ncomp_; ++c) d[size_t(c)] += int64_t(m.e[i]) * weights_[size_t(i)][size_t(c)];
        return d;
    }
    // Summed weight of one variable; used for total-degree slicing.
    int64_t total_weight(int var) const {
        int64_t t = 0;
        for (int c = 0; c < ncomp_; ++c) t += weights_[size_t(var)][size_t(c)];
        return t;
    }
    int64_t term_total_degree(const Mono& m) const {
        int64_t d = 0;
        for (int i = 0; i < nvars_; ++i) d += int64_t(m.e[i]) * total_weight(i);
        return d;
    }
    int64_t mu_total() const {
        int64_t t = 0;
        for (int64_t x : mu_) t += x;
        return t;
    }

    DegreeResult degree(const SparsePoly& f) const {
        DegreeResult r;
        if (f.is_zero()) return r;
        r.kind = DegreeResult::Homogeneous;
        r.degree = term_degree(f.terms().front().m);
        for (const auto& t : f.terms()) {
            if (term_degree(t.m) != r.degree) {
                r.kind = DegreeResult::Inhomogeneous;
                r.degree.clear();
                return r;
            }
        }
        return r;
    }
    bool is_homogeneous(const SparsePoly& f) const {
        return degree(f).kind != DegreeResult::Inhomogeneous;
    }
    bool is_calabi_yau(const SparsePoly& f) const {
        DegreeResult d = degree(f);
        return d.kind == DegreeResult::Homogeneous && d.degree == mu_;
    }
    int64_t max_total_degree(const SparsePoly& f) const {
        int64_t m = 0;
        for (const auto& t : f.terms()) m = std::max(m, term_total_degree(t.m));
        return m;
    }

private:
    int nvars_;
    int ncomp_;
    std::vector<std::vector<int64_t>> weights_;
    std::vector<int64_t> mu_;
};

}  // namespace qfs

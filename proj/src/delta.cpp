#include "qfs/delta.hpp"

#include "qfs/frobenius.hpp"

namespace qfs {

namespace {

void require_field(const SparsePoly& a) {
    if (!a.modulus().is_field()) throw std::invalid_argument("delta: expects an F_p polynomial");
}

std::optional<std::vector<int64_t>> delta_degree(const SparsePoly& a, const Grading* grading,
                                                 uint64_t scale) {
    if (!grading) return std::nullopt;
    DegreeResult d = grading->degree(a);
    if (d.kind != DegreeResult::Homogeneous) return std::nullopt;
    for (auto& x : d.degree) x *= int64_t(scale);
    return d.degree;
}

SparsePoly delta1_core(const SparsePoly& a, const std::vector<uint64_t>& lifts) {
    require_field(a);
    uint64_t p = a.modulus().p();
    Modulus ring(p, 2);
    int n = a.nvars();

    std::vector<Term> lterms, pterms;
    lterms.reserve(a.term_count());
    pterms.reserve(a.term_count());
    for (size_t i = 0; i < a.term_count(); ++i) {
        const Term& t = a.terms()[i];
        uint64_t c = lifts.empty() ? t.c : lifts[i] % ring.pe();
        if (c % p != t.c) throw std::invalid_argument("delta: lift does not reduce to coefficient");
        lterms.push_back({t.m, c});
        pterms.push_back({t.m.scaled_exponents(uint32_t(p)), ring.pow(c, p)});
    }
    SparsePoly L = SparsePoly::from_terms(ring, n, std::move(lterms));
    SparsePoly P = SparsePoly::from_terms(ring, n, std::move(pterms));
    SparsePoly D = L.pow(p) - P;

    std::vector<Term> out;
    out.reserve(D.term_count());
    for (const auto& t : D.terms()) {
        if (t.c % p != 0)
            throw std::logic_error("delta: L^p - P has a coefficient not divisible by p");
        uint64_t c = (t.c / p) % p;
        if (c) out.push_back({t.m, c});
    }
    return SparsePoly::from_terms(Modulus(p, 1), n, std::move(out));
}

}  // namespace

DeltaRepresentative delta1(const SparsePoly& a, const Grading* grading) {
    SparsePoly v = delta1_core(a, {});
    return {v, delta_degree(a, grading, a.modulus().p())};
}

SparsePoly delta1_with_lifts(const SparsePoly& a, const std::vector<uint64_t>& lifts) {
    if (lifts.size() != a.term_count())
        throw std::invalid_argument("delta: one lift per term required");
    return delta1_core(a, lifts);
}

DeltaRepresentative delta1_multinomial(const SparsePoly& a, uint64_t guard) {
    require_field(a);
    uint64_t p = a.modulus().p();
    size_t m = a.term_count();
    Modulus field(p, 1);
    if (m == 0) return {SparsePoly::zero(field, a.nvars()), delta_degree(a, nullptr, p)};

    // compositions of p into m parts, each part <= p-1
    double est = 1;
    for (uint64_t i = 1; i <= p; ++i) est = est * (m + i - 1) / i;
    if (est > double(guard)) throw std::invalid_argument("delta: composition guard exceeded");

    // multinomial coefficients over the integers; p <= 20 keeps p! in range
    auto factorial = [](uint64_t k) {
        uint64_t f = 1;
        for (uint64_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    uint64_t pfact = factorial(p);

    std::vector<Term> out;
    std::vector<uint32_t> alpha(m, 0);
    // iterate over all alpha with sum p; skip those with some alpha_i = p
    size_t pos = 0;
    alpha[0] = uint32_t(p);
    while (true) {
        bool valid = true;
        for (size_t i = 0; i < m; ++i)
            if (alpha[i] >= p) { valid = false; break; }
        if (valid) {
            uint64_t denom = 1;
            for (size_t i = 0; i < m; ++i) denom *= factorial(alpha[i]);
            uint64_t coeff = (pfact / denom) / p;  // binom(p; alpha) is divisible by p here
            uint64_t c = coeff % p;
            if (c) {
                Mono mono;
                for (size_t i = 0; i < m; ++i) {
                    if (alpha[i] == 0) continue;
                    Mono powm = a.terms()[i].m.scaled_exponents(alpha[i]);
                    mono = mono * powm;
                    c = field.mul(c, field.pow(a.terms()[i].c, alpha[i]));
                }
                if (c) out.push_back({mono, c});
            }
        }
        // next composition in colex order
        if (alpha[m - 1] == p) break;
        if (m == 1) break;
        // move one unit from the leftmost nonzero slot
        pos = 0;
        while (alpha[pos] == 0) ++pos;
        if (pos + 1 == m) break;
        uint32_t head = alpha[pos];
        alpha[pos] = 0;
        alpha[0] = head - 1;
        alpha[pos + 1] += 1;
    }
    SparsePoly v = SparsePoly::from_terms(field, a.nvars(), std::move(out));
    return {v, std::nullopt};
}

DeltaRepresentative delta_n_rep(const SparsePoly& a, int n, const Grading* grading) {
    if (n < 1) throw std::invalid_argument("delta: n must be >= 1");
    DeltaRepresentative d1 = delta1(a, grading);
    if (n == 1) return d1;
    uint64_t p = a.modulus().p();
    uint64_t q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    SparsePoly v = a.pow(q - p) * d1.value;
    return {v, delta_degree(a, grading, q)};
}

}  // namespace qfs

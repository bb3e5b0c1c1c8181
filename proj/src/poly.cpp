#include "qfs/poly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qfs {

SparsePoly SparsePoly::constant(Modulus mod, int nvars, uint64_t c) {
    SparsePoly r(mod, nvars);
    c %= mod.pe();
    if (c) r.terms_.push_back({Mono{}, c});
    return r;
}

SparsePoly SparsePoly::monomial(Modulus mod, int nvars, Mono m, uint64_t c) {
    SparsePoly r(mod, nvars);
    c %= mod.pe();
    if (c) r.terms_.push_back({m, c});
    return r;
}

SparsePoly SparsePoly::from_terms(Modulus mod, int nvars, std::vector<Term> terms) {
    SparsePoly r(mod, nvars);
    r.terms_ = std::move(terms);
    for (auto& t : r.terms_) t.c %= mod.pe();
    r.normalize();
    return r;
}

void SparsePoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
    size_t out = 0;
    for (size_t i = 0; i < terms_.size();) {
        Mono m = terms_[i].m;
        uint64_t c = 0;
        while (i < terms_.size() && terms_[i].m == m) {
            c = mod_.add(c, terms_[i].c);
            ++i;
        }
        if (c) terms_[out++] = {m, c};
    }
    terms_.resize(out);
}

const Term& SparsePoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    require_compatible(o);
    SparsePoly r(mod_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            uint64_t s = mod_.add(terms_[i].c, o.terms_[j].c);
            if (s) r.terms_.push_back({terms_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(mod_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, mod_.neg(t.c)});
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::scaled(uint64_t c) const {
    c %= mod_.pe();
    SparsePoly r(mod_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint64_t x = mod_.mul(t.c, c);
        if (x) r.terms_.push_back({t.m, x});
    }
    return r;
}

SparsePoly SparsePoly::times_monomial(const Mono& m, uint64_t c) const {
    c %= mod_.pe();
    SparsePoly r(mod_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint64_t x = mod_.mul(t.c, c);
        if (x) r.terms_.push_back({t.m * m, x});
    }
    return r;
}

namespace {

// Accumulation keys for the product: a packed 64-bit key when the exponent
// range allows it, the full exponent array otherwise.
inline bool fits_u16x4(const SparsePoly& a, const SparsePoly& b, int nvars) {
    return nvars <= 4 && a.max_total_degree() + b.max_total_degree() <= 0xffff;
}
inline bool fits_u8x8(const SparsePoly& a, const SparsePoly& b, int nvars) {
    return nvars <= 8 && a.max_total_degree() + b.max_total_degree() <= 0xff;
}

template <int W>
uint64_t pack(const Mono& m) {
    uint64_t k = 0;
    for (int i = 0; i < W; ++i) k |= uint64_t(m.e[i]) << (i * (64 / W));
    return k;
}
template <int W>
Mono unpack(uint64_t k) {
    Mono m;
    constexpr uint64_t mask = (W == 4) ? 0xffff : 0xff;
    for (int i = 0; i < W; ++i) m.e[i] = uint16_t((k >> (i * (64 / W))) & mask);
    return m;
}

}  // namespace

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    require_compatible(o);
    SparsePoly r(mod_, nvars_);
    if (is_zero() || o.is_zero()) return r;
    const SparsePoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const SparsePoly& big = terms_.size() <= o.terms_.size() ? o : *this;

    auto emit = [&](auto&& collect) {
        for (const auto& ts : small.terms_)
            for (const auto& tb : big.terms_) collect(ts.m * tb.m, mod_.mul(ts.c, tb.c));
    };

    std::vector<Term> out;
    if (fits_u16x4(*this, o, nvars_)) {
        std::unordered_map<uint64_t, uint64_t> acc;
        acc.reserve(small.terms_.size() * 2 + big.terms_.size());
        emit([&](const Mono& m, uint64_t c) {
            uint64_t& slot = acc[pack<4>(m)];
            slot = mod_.add(slot, c);
        });
        out.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c) out.push_back({unpack<4>(k), c});
    } else if (fits_u8x8(*this, o, nvars_)) {
        std::unordered_map<uint64_t, uint64_t> acc;
        acc.reserve(small.terms_.size() * 2 + big.terms_.size());
        emit([&](const Mono& m, uint64_t c) {
            uint64_t& slot = acc[pack<8>(m)];
            slot = mod_.add(slot, c);
        });
        out.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c) out.push_back({unpack<8>(k), c});
    } else {
        std::unordered_map<Mono, uint64_t, MonoHash> acc;
        acc.reserve(small.terms_.size() * 2 + big.terms_.size());
        emit([&](const Mono& m, uint64_t c) {
            uint64_t& slot = acc[m];
            slot = mod_.add(slot, c);
        });
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) out.push_back({m, c});
    }
    SparsePoly res(mod_, nvars_);
    res.terms_ = std::move(out);
    std::sort(res.terms_.begin(), res.terms_.end(),
              [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
    return res;
}

SparsePoly SparsePoly::pow(uint64_t k) const {
    SparsePoly r = constant(mod_, nvars_, 1);
    if (k == 0) return r;
    SparsePoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

uint64_t SparsePoly::coefficient(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& key) { return mono_less(key, t.m); });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
}

SparsePoly SparsePoly::reduce_mod_p() const {
    Modulus f(mod_.p(), 1);
    SparsePoly r(f, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        uint64_t c = t.c % mod_.p();
        if (c) r.terms_.push_back({t.m, c});
    }
    return r;
}

SparsePoly SparsePoly::lift_to(uint32_t e) const {
    if (!mod_.is_field()) throw std::invalid_argument("lift expects an F_p polynomial");
    SparsePoly r(Modulus(mod_.p(), e), nvars_);
    r.terms_ = terms_;
    return r;
}

SparsePoly SparsePoly::frobenius_power(uint32_t k) const {
    if (!mod_.is_field()) throw std::invalid_argument("frobenius power expects F_p");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) q *= mod_.p();
    SparsePoly r(mod_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m.scaled_exponents(uint32_t(q)), t.c});
    return r;
}

bool SparsePoly::in_m_bracket(uint32_t q) const { return !escape_term(q).has_value(); }

std::optional<Mono> SparsePoly::escape_term(uint32_t q) const {
    for (const auto& t : terms_)
        if (t.m.all_below(q)) return t.m;
    return std::nullopt;
}

uint64_t SparsePoly::hash() const {
    uint64_t h = 1469598103934665603ull ^ (uint64_t(nvars_) << 32) ^ mod_.pe();
    MonoHash mh;
    for (const auto& t : terms_) {
        h ^= mh(t.m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= t.c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string SparsePoly::serialize(const std::vector<std::string>& vars) const {
    if (int(vars.size()) != nvars_)
        throw std::invalid_argument("serialize: variable name count mismatch");
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) s += "+";
        first = false;
        bool wrote = false;
        if (t.c != 1 || t.m.is_one()) {
            s += std::to_string(t.c);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (t.m.e[i] == 0) continue;
            if (wrote) s += "*";
            s += vars[size_t(i)];
            if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
            wrote = true;
        }
    }
    return s;
}

std::vector<SparsePoly> bracket_power_ideal_gens(const std::vector<SparsePoly>& gens, uint64_t q) {
    if (gens.empty()) throw std::invalid_argument("bracket power of empty generator list");
    uint64_t p = gens.front().modulus().p();
    uint64_t qq = q;
    uint32_t k = 0;
    while (qq > 1 && qq % p == 0) { qq /= p; ++k; }
    if (qq != 1 || k == 0) throw std::invalid_argument("bracket power: q must be a positive power of p");
    std::vector<SparsePoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens)
        out.push_back(g.modulus().is_field() ? g.frobenius_power(k) : g.pow(q));
    return out;
}

}  // namespace qfs

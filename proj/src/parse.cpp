#include "qfs/parse.hpp"

#include <cctype>

namespace qfs {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    uint64_t integer() {
        skip_ws();
        size_t start = i;
        uint64_t v = 0;
        while (i < s.size() && std::isdigit(uint8_t(s[i]))) {
            uint64_t d = uint64_t(s[i] - '0');
            if (v > (UINT64_MAX - d) / 10) throw ParseError("integer literal too large", start);
            v = v * 10 + d;
            ++i;
        }
        if (i == start) throw ParseError("expected integer", i);
        return v;
    }
    std::string identifier() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || !std::isalpha(uint8_t(s[i])))
            throw ParseError("expected identifier", i);
        ++i;
        while (i < s.size() && (std::isalnum(uint8_t(s[i])) || s[i] == '_')) ++i;
        return s.substr(start, i - start);
    }
};

int find_var(const std::vector<std::string>& vars, const std::string& name) {
    for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == name) return int(k);
    return -1;
}

// Greedy split of a juxtaposed identifier into declared variable names.
bool split_vars(const std::string& id, const std::vector<std::string>& vars, std::vector<int>& out) {
    size_t pos = 0;
    while (pos < id.size()) {
        int best = -1;
        size_t best_len = 0;
        for (size_t k = 0; k < vars.size(); ++k) {
            const std::string& v = vars[k];
            if (v.size() > best_len && id.compare(pos, v.size(), v) == 0) {
                best = int(k);
                best_len = v.size();
            }
        }
        if (best < 0) return false;
        out.push_back(best);
        pos += best_len;
    }
    return true;
}

}  // namespace

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars, Modulus mod) {
    if (int(vars.size()) < 1 || int(vars.size()) > kMaxVars)
        throw std::invalid_argument("parse: variable count out of range");
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        if (lx.done()) {
            if (first) throw ParseError("empty polynomial", lx.i);
            break;
        }
        bool negative = false;
        if (!first) {
            if (lx.eat('+')) {
            } else if (lx.eat('-')) {
                negative = true;
            } else {
                throw ParseError("expected '+' between terms", lx.i);
            }
        } else if (lx.eat('-')) {
            negative = true;
        }
        first = false;

        uint64_t coeff = 1;
        bool have_any = false;
        if (std::isdigit(uint8_t(lx.peek()))) {
            coeff = lx.integer() % mod.pe();
            have_any = true;
            lx.eat('*');
        }
        Mono m;
        while (std::isalpha(uint8_t(lx.peek()))) {
            size_t id_pos = lx.i;
            std::string id = lx.identifier();
            std::vector<int> split;
            int v = find_var(vars, id);
            if (v >= 0) {
                split.push_back(v);
            } else if (!split_vars(id, vars, split)) {
                throw ParseError("unknown variable '" + id + "'", id_pos);
            }
            uint64_t exp = 1;
            if (lx.eat('^')) exp = lx.integer();
            if (exp > 0xffff) throw ParseError("exponent too large", id_pos);
            // an exponent binds to the last variable of a juxtaposed group
            for (size_t k = 0; k < split.size(); ++k) {
                uint64_t e = (k + 1 == split.size()) ? exp : 1;
                uint64_t total = uint64_t(m.e[split[k]]) + e;
                if (total > 0xffff) throw ParseError("exponent too large", id_pos);
                m.e[split[k]] = uint16_t(total);
            }
            have_any = true;
            lx.eat('*');
        }
        if (!have_any) throw ParseError("expected term", lx.i);
        if (negative) coeff = mod.neg(coeff % mod.pe());
        terms.push_back({m, coeff});
    }
    return SparsePoly::from_terms(mod, int(vars.size()), std::move(terms));
}

}  // namespace qfs

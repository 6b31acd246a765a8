#include "hsalg/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace hsalg {

int LaurentPoly::var_index(const std::string& var) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return int(i);
    throw DomainError("unknown variable '" + var + "'");
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("variable-list mismatch between Laurent polynomials");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rational& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, const std::string& var, int exp,
                                  const Rational& coeff) {
    LaurentPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(var)] = exp;
    p.add_term(e, coeff);
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw DimensionError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return as_constant().has_value();
}

std::optional<Rational> LaurentPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (int x : e)
        if (x != 0) return std::nullopt;
    return c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LaurentPoly::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly p(vars_);
    if (c.is_zero()) return p;
    for (const auto& [e, t] : terms_) p.terms_.emplace(e, t * c);
    return p;
}

LaurentPoly LaurentPoly::derivative(const std::string& var) const {
    int vi = var_index(var);
    LaurentPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        Exponents de = e;
        de[vi] -= 1;
        p.add_term(de, c * Rational(e[vi]));
    }
    return p;
}

std::optional<int> LaurentPoly::min_exponent(const std::string& var) const {
    int vi = var_index(var);
    if (terms_.empty()) return std::nullopt;
    int best = terms_.begin()->first[vi];
    for (const auto& [e, c] : terms_) best = std::min(best, e[vi]);
    return best;
}

bool LaurentPoly::depends_on(const std::string& var) const {
    int vi = var_index(var);
    for (const auto& [e, c] : terms_)
        if (e[vi] != 0) return true;
    return false;
}

LaurentPoly LaurentPoly::at_zero(const std::string& var) const {
    int vi = var_index(var);
    LaurentPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] < 0) throw DomainError("pole at " + var + " = 0");
        if (e[vi] > 0) continue;
        p.add_term(e, c);
    }
    return p;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& g) const {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    check_compatible(g);
    if (is_zero()) return LaurentPoly(vars_);

    // Shift both operands into ordinary polynomials with zero-minimum
    // exponents per variable; the shift is a unit of the Laurent ring, and
    // with that normalization Laurent exactness reduces to ordinary division.
    size_t n = vars_.size();
    Exponents shift_f = terms_.begin()->first, shift_g = g.terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < n; ++i) shift_f[i] = std::min(shift_f[i], e[i]);
    for (const auto& [e, c] : g.terms_)
        for (size_t i = 0; i < n; ++i) shift_g[i] = std::min(shift_g[i], e[i]);

    std::map<Exponents, Rational> rem;
    for (const auto& [e, c] : terms_) {
        Exponents s(n);
        for (size_t i = 0; i < n; ++i) s[i] = e[i] - shift_f[i];
        rem.emplace(s, c);
    }
    std::map<Exponents, Rational> divisor;
    for (const auto& [e, c] : g.terms_) {
        Exponents s(n);
        for (size_t i = 0; i < n; ++i) s[i] = e[i] - shift_g[i];
        divisor.emplace(s, c);
    }

    const auto& [lt_e, lt_c] = *divisor.rbegin();  // lex-leading term of g
    LaurentPoly q(vars_);

    while (!rem.empty()) {
        auto [re, rc] = *rem.rbegin();
        Exponents qe(n);
        bool divisible = true;
        for (size_t i = 0; i < n; ++i) {
            qe[i] = re[i] - lt_e[i];
            if (qe[i] < 0) divisible = false;
        }
        if (!divisible) return std::nullopt;  // nonzero remainder: not exact
        Rational qc = rc / lt_c;
        // q-term exponents in the original Laurent normalization
        Exponents qe_shifted(n);
        for (size_t i = 0; i < n; ++i) qe_shifted[i] = qe[i] + shift_f[i] - shift_g[i];
        q.add_term(qe_shifted, qc);
        for (const auto& [de, dc] : divisor) {
            Exponents e(n);
            for (size_t i = 0; i < n; ++i) e[i] = de[i] + qe[i];
            auto it = rem.find(e);
            Rational sub = dc * qc;
            if (it == rem.end()) {
                rem.emplace(e, -sub);
            } else {
                it->second -= sub;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return q;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
};

long parse_int(Lexer& lx) {
    lx.skip_ws();
    size_t start = lx.pos;
    if (lx.pos < lx.s.size() && (lx.s[lx.pos] == '-' || lx.s[lx.pos] == '+')) ++lx.pos;
    size_t digits = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == digits) throw ParseError("expected integer at '" + lx.s.substr(start) + "'");
    return std::stol(lx.s.substr(start, lx.pos - start));
}

std::string parse_ident(Lexer& lx) {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) ||
                                    lx.s[lx.pos] == '_')) {
        ++lx.pos;
    }
    if (lx.pos == start) throw ParseError("expected identifier in '" + lx.s + "'");
    return lx.s.substr(start, lx.pos - start);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::vector<std::string>& vars, const std::string& text) {
    LaurentPoly p(vars);
    Lexer lx{text};
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;

        Rational coeff(sign);
        Exponents e(vars.size(), 0);
        bool saw_factor = false;

        // optional leading rational coefficient
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            long num = parse_int(lx);
            long den = 1;
            if (lx.peek() == '/') {
                lx.get();
                den = parse_int(lx);
            }
            coeff *= Rational(num, den);
            saw_factor = true;
            if (lx.peek() == '*') lx.get();
        }
        while (!lx.eof() && std::isalpha(static_cast<unsigned char>(lx.peek()))) {
            std::string name = parse_ident(lx);
            int exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = int(parse_int(lx));
            }
            e[p.var_index(name)] += exp;
            saw_factor = true;
            if (lx.peek() == '*') lx.get();
        }
        if (!saw_factor) throw ParseError("empty term in '" + text + "'");
        p.add_term(e, coeff);
    }
    return p;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (!first) os << (a.sign() < 0 ? "-" : "+");
        else if (a.sign() < 0) os << "-";
        first = false;
        if (a.sign() < 0) a = -a;
        std::vector<std::string> factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = vars_[i];
            if (e[i] != 1) f += "^" + std::to_string(e[i]);
            factors.push_back(f);
        }
        if (factors.empty()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

LaurentMatrix laurent_identity(const std::vector<std::string>& vars, int n) {
    LaurentMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::constant(vars, Rational(1));
    return m;
}

LaurentMatrix laurent_mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    int n = int(a.size()), m = int(b[0].size()), k = int(b.size());
    LaurentMatrix c(n, std::vector<LaurentPoly>(m, LaurentPoly(a[0][0].vars())));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                c[i][j] = c[i][j] + a[i][l] * b[l][j];
            }
        }
    return c;
}

LaurentMatrix laurent_transpose(const LaurentMatrix& a) {
    int n = int(a.size()), m = int(a[0].size());
    LaurentMatrix t(m, std::vector<LaurentPoly>(n, LaurentPoly(a[0][0].vars())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

namespace {

LaurentPoly det_minor(const LaurentMatrix& a, std::vector<int> rows, std::vector<int> cols) {
    const auto& vars = a[0][0].vars();
    if (rows.empty()) return LaurentPoly::constant(vars, Rational(1));
    LaurentPoly acc(vars);
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (a[r0][cols[j]].is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        LaurentPoly term = a[r0][cols[j]] * det_minor(a, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

LaurentPoly laurent_det(const LaurentMatrix& a) {
    int n = int(a.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return det_minor(a, idx, idx);
}

LaurentMatrix laurent_adjugate(const LaurentMatrix& a) {
    int n = int(a.size());
    const auto& vars = a[0][0].vars();
    LaurentMatrix adj(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            LaurentPoly m = det_minor(a, rows, cols);
            adj[i][j] = ((i + j) % 2 == 0) ? m : -m;
        }
    return adj;
}

LaurentPoly laurent_pfaffian(const LaurentMatrix& a) {
    int n = int(a.size());
    if (n % 2 != 0) throw DimensionError("Pfaffian needs even dimension");
    const auto& vars = a[0][0].vars();
    if (n == 0) return LaurentPoly::constant(vars, Rational(1));

    // Expand along the first remaining row: Pf(A) = sum_j (-1)^j a_{0j} Pf(A_{0j}).
    struct Rec {
        const LaurentMatrix& a;
        LaurentPoly run(std::vector<int> idx) {
            const auto& vars = a[0][0].vars();
            if (idx.empty()) return LaurentPoly::constant(vars, Rational(1));
            LaurentPoly acc(vars);
            int i0 = idx[0];
            for (size_t j = 1; j < idx.size(); ++j) {
                if (a[i0][idx[j]].is_zero()) continue;
                std::vector<int> rest;
                for (size_t l = 1; l < idx.size(); ++l)
                    if (l != j) rest.push_back(idx[l]);
                LaurentPoly term = a[i0][idx[j]] * run(rest);
                acc = (j % 2 == 1) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{a};
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return rec.run(idx);
}

}  // namespace hsalg

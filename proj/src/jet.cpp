#include "hsalg/jet.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace hsalg {

namespace {

// Truncated polynomials without constant term, coefficient of z^{i+1} at
// index i, length k.
using Trunc = std::vector<Rational>;

Trunc trunc_mul(const Trunc& a, const Trunc& b, int k) {
    Trunc out(k);
    // z-degree of index i is i+1, so the product lands at index i+j+1
    for (int i = 0; i < k; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j + i + 1 < k; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j + 1] += a[i] * b[j];
        }
    }
    return out;
}

// f(g(z)) truncated: f, g of length k.
Trunc trunc_compose(const Trunc& f, const Trunc& g, int k) {
    Trunc out(k);
    Trunc gpow = g;  // g^{i+1}, starting at i = 0
    for (int i = 0; i < k; ++i) {
        if (!f[i].is_zero())
            for (int j = 0; j < k; ++j) out[j] += f[i] * gpow[j];
        if (i + 1 < k) gpow = trunc_mul(gpow, g, k);
    }
    return out;
}

}  // namespace

JetPoly::JetPoly(int order, std::vector<Rational> coeffs) : k(order), c(std::move(coeffs)) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    if (int(c.size()) != k) throw DimensionError("jet coefficient count must equal the order");
    if (c[0].is_zero()) throw DomainError("jet linear coefficient a0 must be nonzero");
}

JetPoly JetPoly::identity(int order) {
    std::vector<Rational> c(order);
    c[0] = Rational(1);
    return JetPoly(order, std::move(c));
}

bool JetPoly::is_identity() const {
    if (!c[0].is_one()) return false;
    for (int i = 1; i < k; ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

JetVectorField::JetVectorField(int order, std::vector<Rational> coeffs)
    : k(order), c(std::move(coeffs)) {
    if (k < 1) throw DomainError("jet order must be >= 1");
    if (int(c.size()) != k) throw DimensionError("vector field coefficient count must equal the order");
}

JetVectorField JetVectorField::zero(int order) {
    return JetVectorField(order, std::vector<Rational>(order));
}

bool JetVectorField::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

JetPoly compose(const JetPoly& f, const JetPoly& g) {
    if (f.k != g.k) throw DimensionError("jet order mismatch in composition");
    return JetPoly(f.k, trunc_compose(f.c, g.c, f.k));
}

JetPoly invert(const JetPoly& f) {
    int k = f.k;
    Trunc h(k);
    h[0] = Rational(1) / f.c[0];
    for (int d = 1; d < k; ++d) {
        // The z^{d+1} coefficient of f(h(z)) depends linearly on h[d] with
        // factor a0; fix coefficients degree by degree.
        Trunc r = trunc_compose(f.c, h, k);
        h[d] -= r[d] / f.c[0];
    }
    return JetPoly(k, std::move(h));
}

JetPoly project(const JetPoly& f, int m) {
    if (m < 1 || m > f.k) throw DimensionError("projection order out of range");
    return JetPoly(m, Trunc(f.c.begin(), f.c.begin() + m));
}

JetVectorField project(const JetVectorField& x, int m) {
    if (m < 1 || m > x.k) throw DimensionError("projection order out of range");
    return JetVectorField(m, Trunc(x.c.begin(), x.c.begin() + m));
}

std::pair<Rational, JetPoly> decompose_semidirect(const JetPoly& f) {
    Rational u = f.c[0];
    Trunc h(f.k);
    Rational upow = u;  // u^{i+1}
    for (int i = 0; i < f.k; ++i) {
        h[i] = f.c[i] / upow;
        upow *= u;
    }
    return {u, JetPoly(f.k, std::move(h))};
}

JetPoly recompose_semidirect(const Rational& u, const JetPoly& h) {
    if (!h.is_unipotent()) throw DomainError("semidirect factor must be unipotent");
    Trunc c(h.k);
    Rational upow = u;
    for (int i = 0; i < h.k; ++i) {
        c[i] = h.c[i] * upow;
        upow *= u;
    }
    return JetPoly(h.k, std::move(c));
}

JetVectorField lie_bracket(const JetVectorField& x, const JetVectorField& y) {
    if (x.k != y.k) throw DimensionError("jet order mismatch in bracket");
    int k = x.k;
    Trunc out(k);
    // [z^{i+1} d, z^{j+1} d] = (j - i) z^{i+j+1} d; index i+j must stay < k
    for (int i = 0; i < k; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; i + j < k; ++j) {
            if (y.c[j].is_zero()) continue;
            out[i + j] += Rational(j - i) * x.c[i] * y.c[j];
        }
    }
    return JetVectorField(k, std::move(out));
}

JetPoly exp_flow(const JetVectorField& x) {
    if (!x.is_nilpotent())
        throw DomainError(
            "exp_flow: nonzero z d/dz component has transcendental flow (a0 = e^{c0}); "
            "exact arithmetic covers the unipotent subalgebra only");
    int k = x.k;
    // Lie series: exp(X)(z) = sum_n D^n(z)/n!, D = V(z) d/dz. Each application
    // of D raises the valuation, so the series stops after k terms.
    Trunc term(k);
    term[0] = Rational(1);  // D^0(z) = z
    Trunc acc = term;
    Rational nfact(1);
    for (int n = 1; n <= k; ++n) {
        // D(p) = V * p'; p' shifts index down and multiplies by the z-degree
        Trunc dp(k);
        for (int i = 0; i + 1 < k; ++i) dp[i] = term[i + 1] * Rational(i + 2);
        Rational p0 = term[0];  // derivative constant term times V
        Trunc next(k);
        for (int i = 0; i < k; ++i) {
            if (x.c[i].is_zero()) continue;
            next[i] += x.c[i] * p0;
            for (int j = 0; i + j + 1 < k; ++j) next[i + j + 1] += x.c[i] * dp[j];
        }
        term = next;
        nfact *= Rational(n);
        bool all_zero = true;
        for (int i = 0; i < k; ++i) {
            if (!term[i].is_zero()) all_zero = false;
            acc[i] += term[i] / nfact;
        }
        if (all_zero) break;
    }
    return JetPoly(k, std::move(acc));
}

JetVectorField log_jet(const JetPoly& f) {
    if (!f.is_unipotent()) throw DomainError("log_jet requires a unipotent jet (a0 = 1)");
    int k = f.k;
    Trunc x(k);
    for (int d = 1; d < k; ++d) {
        // exp(X + e z^{d+1} d) = exp(X) + e z^{d+1} + higher order
        JetPoly e = exp_flow(JetVectorField(k, x));
        x[d] += f.c[d] - e.c[d];
    }
    return JetVectorField(k, std::move(x));
}

Rational extension_cocycle(const JetPoly& f, const JetPoly& g) {
    if (f.k != g.k) throw DimensionError("jet order mismatch in cocycle");
    int k = f.k;
    auto lift = [k](const JetPoly& p) {
        Trunc c = p.c;
        c.push_back(Rational(0));
        return JetPoly(k + 1, std::move(c));
    };
    JetPoly prod = compose(lift(f), lift(g));
    JetPoly rest = invert(lift(compose(f, g)));
    return compose(prod, rest).c[k];
}

std::vector<std::string> jet_coordinate_vars(int k) {
    std::vector<std::string> vars;
    for (int i = 1; i < k; ++i) vars.push_back("a" + std::to_string(i));
    return vars;
}

std::vector<LaurentPoly> right_invariant_coeffs(int r, int k) {
    if (r < 1 || r > k - 1) throw DomainError("right_invariant_coeffs: index out of range");
    std::vector<std::string> vars = jet_coordinate_vars(k);

    std::vector<BigInt> fact(r + 2);
    fact[0] = 1;
    for (int i = 1; i <= r + 1; ++i) fact[i] = fact[i - 1] * i;

    std::vector<LaurentPoly> out;
    for (int i = r; i < k; ++i) {
        LaurentPoly p(vars);
        // tuples (j_0..j_{k-1}) >= 0 with sum j_t = r+1 and sum t j_t = i - r;
        // j_0 is fixed by the count once j_1..j_{k-1} are chosen
        std::vector<int> j(k, 0);
        int weight = i - r;
        std::function<void(int, int, int)> enumerate = [&](int t, int used, int wleft) {
            if (t == k) {
                if (wleft != 0 || used > r + 1) return;
                int j0 = r + 1 - used;
                BigInt denom = fact[j0];
                LaurentPoly::Exponents e(vars.size(), 0);
                for (int s = 1; s < k; ++s) {
                    denom *= fact[j[s]];
                    e[s - 1] = j[s];
                }
                p.add_term(e, Rational(fact[r + 1], denom));
                return;
            }
            for (int v = 0; used + v <= r + 1 && v * t <= wleft; ++v) {
                j[t] = v;
                enumerate(t + 1, used + v, wleft - v * t);
            }
            j[t] = 0;
        };
        enumerate(1, 0, weight);
        out.push_back(std::move(p));
    }
    return out;
}

Rational evaluate_at_jet(const LaurentPoly& p, const JetPoly& h) {
    Rational out(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rational base = h.c[i + 1];
            term *= base.pow(e[i]);
        }
        out += term;
    }
    return out;
}

JetVectorField adjoint(const JetPoly& f, const JetVectorField& x) {
    if (f.k != x.k) throw DimensionError("jet order mismatch in adjoint");
    int k = f.k;
    // Ad_f X = (f' o f^{-1}) * (X o f^{-1}), truncated to z-degree k.
    JetPoly h = invert(f);

    // X o h: substitute h into the field coefficients (valuation >= 1 both sides)
    Trunc xh = trunc_compose(x.c, h.c, k);

    // f' o h as a polynomial with constant term: f'(z) = sum (i+1) a_i z^i
    Rational const_term = f.c[0];
    Trunc fp(k);  // nonconstant part, index i = coefficient of z^{i+1}
    for (int i = 1; i < k; ++i) fp[i - 1] = f.c[i] * Rational(i + 1);
    Trunc fph = trunc_compose(fp, h.c, k);

    Trunc out(k);
    for (int i = 0; i < k; ++i) out[i] = const_term * xh[i];
    // product of the nonconstant parts: z-degrees (i+1) + (j+1) <= k
    for (int i = 0; i < k; ++i) {
        if (fph[i].is_zero()) continue;
        for (int j = 0; i + j + 1 < k; ++j) out[i + j + 1] += fph[i] * xh[j];
    }
    return JetVectorField(k, std::move(out));
}

JetPoly JetPoly::parse(int order, const std::string& text) {
    std::vector<Rational> c(order);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (skip(), pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in jet '" + text + "'");
        }
        first = false;
        skip();
        Rational coeff(sign);
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > start) coeff *= Rational::parse(text.substr(start, pos - start));
        skip();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != 'z')
            throw ParseError("expected 'z' in jet term of '" + text + "'");
        ++pos;
        long deg = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ParseError("missing exponent in '" + text + "'");
            deg = std::stol(text.substr(start, pos - start));
        }
        if (deg < 1 || deg > order)
            throw ParseError("jet term degree out of range in '" + text + "'");
        c[deg - 1] += coeff;
    }
    return JetPoly(order, std::move(c));
}

static std::string trunc_str(const std::vector<Rational>& c, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        Rational a = c[i];
        if (!first) os << (a.sign() < 0 ? "-" : "+");
        else if (a.sign() < 0) os << "-";
        first = false;
        if (a.sign() < 0) a = -a;
        if (!a.is_one()) os << a.str() << "*";
        os << var;
        if (i > 0) os << "^" << i + 1;
    }
    if (first) os << "0";
    return os.str();
}

std::string JetPoly::str() const {
    return trunc_str(c, "z");
}

std::string JetVectorField::str() const {
    std::string body = trunc_str(c, "z");
    if (body == "0") return body;
    return "(" + body + ")*dz";
}

}  // namespace hsalg

#include "painleve/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "painleve/errors.hpp"

namespace painleve {

BivarPoly BivarPoly::constant(Rational c) {
    BivarPoly p;
    p.set_coeff(0, 0, std::move(c));
    return p;
}

BivarPoly BivarPoly::var_x() { return monomial(Rational(1), 1, 0); }
BivarPoly BivarPoly::var_y() { return monomial(Rational(1), 0, 1); }

BivarPoly BivarPoly::monomial(Rational c, int dx, int dy) {
    BivarPoly p;
    p.set_coeff(dx, dy, std::move(c));
    return p;
}

int BivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : c_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::degree_y() const {
    int d = -1;
    for (const auto& [k, c] : c_) d = std::max(d, k.second);
    return d;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : c_) d = std::max(d, k.first + k.second);
    return d;
}

int BivarPoly::origin_multiplicity() const {
    int d = -1;
    for (const auto& [k, c] : c_) {
        int t = k.first + k.second;
        if (d < 0 || t < d) d = t;
    }
    return d;
}

int BivarPoly::min_exp_x() const {
    int d = -1;
    for (const auto& [k, c] : c_)
        if (d < 0 || k.first < d) d = k.first;
    return d;
}

int BivarPoly::min_exp_y() const {
    int d = -1;
    for (const auto& [k, c] : c_)
        if (d < 0 || k.second < d) d = k.second;
    return d;
}

Rational BivarPoly::coeff(int dx, int dy) const {
    auto it = c_.find({dx, dy});
    return it == c_.end() ? Rational(0) : it->second;
}

void BivarPoly::set_coeff(int dx, int dy, Rational c) {
    if (c.is_zero())
        c_.erase({dx, dy});
    else
        c_[{dx, dy}] = std::move(c);
}

namespace {

template <typename T>
T eval_generic(const std::map<BivarPoly::Key, Rational>& terms, const T& x, const T& y, const T& one) {
    // Horner in y of Horner-in-x rows would need dense layout; with sparse
    // terms just use cached powers.
    int dx = 0, dy = 0;
    for (const auto& [k, c] : terms) {
        dx = std::max(dx, k.first);
        dy = std::max(dy, k.second);
    }
    std::vector<T> xp{one}, yp{one};
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * x);
    for (int j = 1; j <= dy; ++j) yp.push_back(yp.back() * y);
    T acc = one - one;  // zero of the right type
    for (const auto& [k, c] : terms) acc = acc + xp[k.first] * yp[k.second] * T(c);
    return acc;
}

}  // namespace

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
    return eval_generic<Rational>(c_, x, y, Rational(1));
}

Scalar BivarPoly::eval(const Scalar& x, const Scalar& y) const {
    return eval_generic<Scalar>(c_, x, y, Scalar(1));
}

RatFunc BivarPoly::eval(const RatFunc& x, const RatFunc& y) const {
    return eval_generic<RatFunc>(c_, x, y, RatFunc(Rational(1)));
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly p;
    for (const auto& [k, c] : c_) p.c_[k] = -c;
    return p;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly p = a;
    for (const auto& [k, c] : b.c_) p.set_coeff(k.first, k.second, p.coeff(k.first, k.second) + c);
    return p;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly p;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) {
            int dx = ka.first + kb.first, dy = ka.second + kb.second;
            p.set_coeff(dx, dy, p.coeff(dx, dy) + ca * cb);
        }
    return p;
}

BivarPoly BivarPoly::operator*(const Rational& c) const {
    BivarPoly p;
    if (c.is_zero()) return p;
    for (const auto& [k, v] : c_) p.c_[k] = v * c;
    return p;
}

BivarPoly BivarPoly::exact_divide_monomial(int dx, int dy) const {
    BivarPoly p;
    for (const auto& [k, c] : c_) {
        if (k.first < dx || k.second < dy) {
            std::ostringstream os;
            os << c.str() << "*x^" << k.first << "*y^" << k.second;
            throw ExactDivideError(os.str(), "term not divisible by monomial x^" + std::to_string(dx) +
                                                 "*y^" + std::to_string(dy));
        }
        p.c_[{k.first - dx, k.second - dy}] = c;
    }
    return p;
}

BivarPoly BivarPoly::translate(const Rational& a, const Rational& b) const {
    // (x+a)^i (y+b)^j expanded with binomial rows
    BivarPoly out;
    int dx = degree_x(), dy = degree_y();
    if (dx < 0) return out;
    // binomial(i, k) a^{i-k} table rows, computed once per needed exponent
    auto shift_pows = [](int dmax, const Rational& s) {
        // row[i][k] = C(i,k) s^(i-k)
        std::vector<std::vector<Rational>> row(dmax + 1);
        for (int i = 0; i <= dmax; ++i) {
            row[i].assign(i + 1, Rational(0));
            for (int k = 0; k <= i; ++k) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), i, k);
                row[i][k] = Rational(mpq_class(binom)) * s.pow(i - k);
            }
        }
        return row;
    };
    auto rx = shift_pows(dx, a);
    auto ry = shift_pows(dy, b);
    for (const auto& [k, c] : c_)
        for (int p = 0; p <= k.first; ++p)
            for (int q = 0; q <= k.second; ++q)
                out.set_coeff(p, q, out.coeff(p, q) + c * rx[k.first][p] * ry[k.second][q]);
    return out;
}

BivarPoly BivarPoly::subs_x_times_y() const {
    BivarPoly p;
    for (const auto& [k, c] : c_) p.set_coeff(k.first, k.second + k.first, p.coeff(k.first, k.second + k.first) + c);
    return p;
}

BivarPoly BivarPoly::subs_y_times_x() const {
    BivarPoly p;
    for (const auto& [k, c] : c_) p.set_coeff(k.first + k.second, k.second, p.coeff(k.first + k.second, k.second) + c);
    return p;
}

BivarPoly BivarPoly::reciprocal_x(int clear_deg) const {
    if (clear_deg < degree_x()) throw DomainError("reciprocal_x clearing degree too small");
    BivarPoly p;
    for (const auto& [k, c] : c_) p.c_[{clear_deg - k.first, k.second}] = c;
    return p;
}

BivarPoly BivarPoly::reciprocal_y(int clear_deg) const {
    if (clear_deg < degree_y()) throw DomainError("reciprocal_y clearing degree too small");
    BivarPoly p;
    for (const auto& [k, c] : c_) p.c_[{k.first, clear_deg - k.second}] = c;
    return p;
}

BivarPoly BivarPoly::swap_xy() const {
    BivarPoly p;
    for (const auto& [k, c] : c_) p.c_[{k.second, k.first}] = c;
    return p;
}

UnivarPoly BivarPoly::at_x(const Rational& x0) const {
    std::vector<Rational> out(std::max(degree_y() + 1, 0), Rational(0));
    for (const auto& [k, c] : c_) out[k.second] += c * x0.pow(k.first);
    return UnivarPoly(std::move(out));
}

UnivarPoly BivarPoly::at_y(const Rational& y0) const {
    std::vector<Rational> out(std::max(degree_x() + 1, 0), Rational(0));
    for (const auto& [k, c] : c_) out[k.first] += c * y0.pow(k.second);
    return UnivarPoly(std::move(out));
}

std::vector<UnivarPoly> BivarPoly::y_coefficients() const {
    std::vector<std::vector<Rational>> rows(std::max(degree_y() + 1, 0));
    for (auto& r : rows) r.assign(std::max(degree_x() + 1, 0), Rational(0));
    for (const auto& [k, c] : c_) rows[k.second][k.first] = c;
    std::vector<UnivarPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

std::string BivarPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : c_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        if (k.first > 0) out += "*x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) out += "*y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return out;
}

BivarPoly poly_arith(const BivarPoly& p, const BivarPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
        case PolyOp::ExactDivideMonomial: {
            if (q.terms().size() != 1) throw DomainError("exact-divide divisor must be a monomial");
            const auto& [k, c] = *q.terms().begin();
            return p.exact_divide_monomial(k.first, k.second) * c.inverse();
        }
    }
    throw InternalError("unreachable poly op");
}

UnivarPoly resultant_y(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int dya = a.degree_y(), dyb = b.degree_y();
    if (dya == 0 && dyb == 0) throw DomainError("resultant_y of two polynomials constant in y");
    auto ac = a.y_coefficients();
    auto bc = b.y_coefficients();

    // Sylvester matrix over Q[x], reduced by fraction-free (Bareiss)
    // elimination; divisions are exact by construction.
    int dim = dya + dyb;
    std::vector<std::vector<UnivarPoly>> s(dim, std::vector<UnivarPoly>(dim));
    for (int i = 0; i < dyb; ++i)
        for (int j = 0; j <= dya; ++j) s[i][i + j] = ac[dya - j];
    for (int i = 0; i < dya; ++i)
        for (int j = 0; j <= dyb; ++j) s[dyb + i][i + j] = bc[dyb - j];

    UnivarPoly prev(Rational(1));
    int sign = 1;
    for (int k = 0; k + 1 < dim; ++k) {
        if (s[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < dim; ++r)
                if (!s[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return {};  // zero resultant
            std::swap(s[piv], s[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                UnivarPoly num = s[k][k] * s[i][j] - s[i][k] * s[k][j];
                auto [quot, rem] = num.divmod(prev);
                if (!rem.is_zero()) throw InternalError("Bareiss division not exact");
                s[i][j] = std::move(quot);
            }
            s[i][k] = UnivarPoly();
        }
        prev = s[k][k];
    }
    UnivarPoly det = s[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

namespace {

// Minimal recursive-descent parser for sums of rational-coefficient
// monomials in x and y.
struct MonoParser {
    const std::string& s;
    size_t i = 0;

    explicit MonoParser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool parse_number(Rational& out) {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) {
            i = start;
            return false;
        }
        std::string num = s.substr(start, i - start);
        skip();
        if (i < s.size() && s[i] == '/') {
            ++i;
            skip();
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) throw DomainError("polynomial parse error: missing denominator");
            auto q = Rational::parse(num + "/" + s.substr(dstart, i - dstart));
            if (!q) throw DomainError("polynomial parse error: bad rational");
            out = *q;
            return true;
        }
        out = *Rational::parse(num);
        return true;
    }

    int parse_exponent() {
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw DomainError("polynomial parse error: missing exponent");
            return std::stoi(s.substr(start, i - start));
        }
        return 1;
    }

    BivarPoly parse() {
        BivarPoly poly;
        skip();
        bool first = true;
        while (i < s.size()) {
            int sign = 1;
            skip();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw DomainError("polynomial parse error: expected + or -");
            }
            first = false;
            Rational coeff(1);
            int dx = 0, dy = 0;
            bool any = false;
            Rational num;
            if (parse_number(num)) {
                coeff = num;
                any = true;
            }
            while (true) {
                skip();
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip();
                }
                if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
                    ++i;
                    dx += parse_exponent();
                    any = true;
                } else if (i < s.size() && (s[i] == 'y' || s[i] == 'Y')) {
                    ++i;
                    dy += parse_exponent();
                    any = true;
                } else {
                    break;
                }
            }
            if (!any) throw DomainError("polynomial parse error: empty term");
            if (sign < 0) coeff = -coeff;
            poly.set_coeff(dx, dy, poly.coeff(dx, dy) + coeff);
            skip();
        }
        return poly;
    }
};

}  // namespace

BivarPoly parse_bivar(const std::string& text) { return MonoParser(text).parse(); }

}  // namespace painleve

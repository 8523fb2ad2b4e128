#include "painleve/univar.hpp"

#include <algorithm>
#include <map>

#include "painleve/errors.hpp"

namespace painleve {

UnivarPoly::UnivarPoly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UnivarPoly UnivarPoly::monomial(Rational c, int deg) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = std::move(c);
    return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::variable() { return monomial(Rational(1), 1); }

void UnivarPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UnivarPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rational& UnivarPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UnivarPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivarPoly UnivarPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UnivarPoly(std::move(d));
}

UnivarPoly UnivarPoly::operator-() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UnivarPoly(std::move(d));
}

UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UnivarPoly(std::move(d));
}

UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) { return a + (-b); }

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UnivarPoly(std::move(d));
}

UnivarPoly UnivarPoly::operator*(const Rational& c) const {
    if (c.is_zero()) return {};
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * c;
    return UnivarPoly(std::move(d));
}

std::pair<UnivarPoly, UnivarPoly> UnivarPoly::divmod(const UnivarPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UnivarPoly r = *this;
    std::vector<Rational> q(std::max(0, degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational c = r.leading() / d.leading();
        int k = r.degree() - d.degree();
        q[k] = c;
        r = r - d * UnivarPoly::monomial(c, k);
    }
    return {UnivarPoly(std::move(q)), r};
}

UnivarPoly UnivarPoly::gcd(UnivarPoly a, UnivarPoly b) {
    while (!b.is_zero()) {
        UnivarPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading().inverse();  // monic
}

UnivarPoly UnivarPoly::deflate(const Rational& r) const {
    auto [q, rem] = divmod(UnivarPoly({-r, Rational(1)}));
    if (!rem.is_zero()) throw InternalError("deflate by non-root");
    return q;
}

std::string UnivarPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeff(i).str();
        if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

namespace {

// All positive divisors of |n|, via naive factorization (trial division then
// Pollard rho for any large cofactor). Throws if the divisor set explodes.
void factorize(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_rho(const mpz_class& n) {
    // Brent variant; n must be composite and odd.
    mpz_class c(1);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2, y = x, d(1);
        c = rng.get_z_range(n - 1) + 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    mpz_class d(17);
    while (d * d <= n && d < 100000) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    mpz_class f = pollard_rho(n);
    factorize(f, out);
    factorize(n / f, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> fac;
    factorize(n, fac);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : fac) {
        size_t sz = divs.size();
        mpz_class pe(1);
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (size_t i = 0; i < sz; ++i) {
                divs.push_back(divs[i] * pe);
                if (divs.size() > 200000) throw DomainError("rational root search too large");
            }
        }
    }
    return divs;
}

}  // namespace

RationalRoots rational_roots(const UnivarPoly& p) {
    RationalRoots out{{}, 0};
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    UnivarPoly q = p;

    // peel off x = 0 roots
    while (q.degree() >= 1 && q.coeff(0).is_zero()) {
        out.roots.emplace_back(0);
        std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = UnivarPoly(std::move(shifted));
    }
    if (q.degree() < 1) {
        out.residual_degree = 0;
        return out;
    }

    // root search runs on the squarefree part; multiplicities recovered by
    // deflating the original
    UnivarPoly sf = q;
    if (q.degree() >= 2) {
        UnivarPoly g = UnivarPoly::gcd(q, q.derivative());
        if (g.degree() > 0) sf = q.divmod(g).first;
    }

    // primitive integer form: clear denominators, strip the content
    mpz_class lead_den(1);
    for (const auto& c : sf.coeffs()) mpz_lcm(lead_den.get_mpz_t(), lead_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic(sf.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) ic[i] = sf.coeffs()[i].num() * (lead_den / sf.coeffs()[i].den());
    mpz_class content(0);
    for (const auto& c : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : ic) c /= content;

    std::vector<mpz_class> ps = divisors(ic.front());
    std::vector<mpz_class> qs = divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& pp : ps)
        for (const auto& qq : qs) {
            candidates.emplace_back(pp, qq);
            candidates.emplace_back(-pp, qq);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    int sf_left = sf.degree();
    for (const auto& r : candidates) {
        if (sf_left == 0) break;
        if (!sf.eval(r).is_zero()) continue;
        --sf_left;
        while (q.degree() >= 1 && q.eval(r).is_zero()) {
            out.roots.push_back(r);
            q = q.deflate(r);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual_degree = std::max(q.degree(), 0);
    return out;
}

Rational resultant(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) return a.coeff(0).pow(n);
    if (n == 0) return b.coeff(0).pow(m);
    int dim = m + n;
    std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);

    // exact Gaussian elimination
    Rational det(1);
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (!s[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rational inv = s[col][col].inverse();
        for (int r = col + 1; r < dim; ++r) {
            if (s[r][col].is_zero()) continue;
            Rational f = s[r][col] * inv;
            for (int cc = col; cc < dim; ++cc) s[r][cc] -= f * s[col][cc];
        }
    }
    return det;
}

RatFunc::RatFunc(UnivarPoly num, UnivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UnivarPoly(Rational(1));
        return;
    }
    UnivarPoly g = UnivarPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lc = den_.leading().inverse();
    num_ = num_ * lc;
    den_ = den_ * lc;
}

RatFunc RatFunc::variable() { return RatFunc(UnivarPoly::variable(), UnivarPoly(Rational(1))); }

RatFunc::Limit RatFunc::at_zero() const {
    Rational d0 = den_.coeff(0);
    if (d0.is_zero()) return {true, Rational(0)};  // reduced form: num(0) != 0
    return {false, num_.coeff(0) / d0};
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

}  // namespace painleve

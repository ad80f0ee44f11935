#include "skewcode/poly.hpp"

#include <stdexcept>

namespace skewcode::poly {

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(const FiniteField&, Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const Poly& f) { return f.empty(); }

bool is_monic(const FiniteField& F, const Poly& f) {
    return !f.empty() && f.back() == F.one();
}

Poly add(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elt x = i < a.size() ? a[i] : 0;
        Elt y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(F, r);
    return r;
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elt x = i < a.size() ? a[i] : 0;
        Elt y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(F, r);
    return r;
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

Poly scale(const FiniteField& F, Elt c, const Poly& a) {
    if (c == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    trim(F, r);
    return r;
}

Poly make_monic(const FiniteField& F, Poly a) {
    trim(F, a);
    if (a.empty() || a.back() == F.one()) return a;
    return scale(F, F.inv(a.back()), a);
}

void divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(F, r);
    const int db = degree(b);
    q.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, 0);
    const Elt lcinv = F.inv(b.back());
    while (degree(r) >= db) {
        const int shift = degree(r) - db;
        const Elt c = F.mul(r.back(), lcinv);
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
        trim(F, r);
    }
    trim(F, q);
}

Poly mod(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(F, a, b, q, r);
    return r;
}

Poly gcd(const FiniteField& F, Poly a, Poly b) {
    trim(F, a);
    trim(F, b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

Poly gcd_ext(const FiniteField& F, Poly a, Poly b, Poly& u, Poly& v) {
    trim(F, a);
    trim(F, b);
    Poly u0{F.one()}, v0{}, u1{}, v1{F.one()};
    if (a.empty() && b.empty()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.empty()) {
        Poly q, r;
        divmod(F, a, b, q, r);
        Poly u2 = sub(F, u0, mul(F, q, u1));
        Poly v2 = sub(F, v0, mul(F, q, v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!a.empty() && a.back() != F.one()) {
        Elt c = F.inv(a.back());
        a = scale(F, c, a);
        u0 = scale(F, c, u0);
        v0 = scale(F, c, v0);
    }
    u = std::move(u0);
    v = std::move(v0);
    return a;
}

Poly powmod(const FiniteField& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r{F.one()};
    base = mod(F, base, m);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, base), m);
        base = mod(F, mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

Elt evaluate(const FiniteField& F, const Poly& f, Elt x) {
    Elt acc = 0;
    for (int i = degree(f); i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

Elt evaluate_embedded(const Embedding& emb, const Poly& f, Elt x) {
    const FiniteField& S = emb.sup();
    Elt acc = 0;
    for (int i = degree(f); i >= 0; --i) acc = S.add(S.mul(acc, x), emb.apply(f[i]));
    return acc;
}

bool is_irreducible(const FiniteField& F, const Poly& f) {
    const int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin test: y^{|F|^d} = y (mod f), and gcd(y^{|F|^{d/r}} - y, f) = 1 for
    // every prime r | d.
    const Poly y{0, 1};
    // Compute y^{|F|^i} by iterated |F|-powering to avoid forming |F|^d.
    Poly t = y;
    for (int i = 0; i < d; ++i) t = powmod(F, t, F.size(), f);
    if (sub(F, t, mod(F, y, f)) != Poly{}) return false;
    int dd = d;
    for (int r = 2; r <= dd; ++r) {
        if (dd % r != 0) continue;
        while (dd % r == 0) dd /= r;
        Poly u = y;
        for (int i = 0; i < d / r; ++i) u = powmod(F, u, F.size(), f);
        Poly g = gcd(F, sub(F, u, y), f);
        if (degree(g) != 0) return false;
    }
    return true;
}

Poly lambda_scale(const FiniteField& F, const Poly& f, Elt lambda) {
    if (lambda == 0) throw std::domain_error("lambda must be nonzero");
    const int d = degree(f);
    Poly r(f.size());
    // λ^{-d} f(λ y): coefficient i becomes f_i λ^{i-d}.
    Elt linv = F.inv(lambda);
    for (int i = 0; i <= d; ++i)
        r[i] = F.mul(f[i], F.pow(linv, static_cast<std::uint64_t>(d - i)));
    trim(F, r);
    return r;
}

}  // namespace skewcode::poly

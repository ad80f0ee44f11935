#include "skewcode/field.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace skewcode {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::uint64_t modpow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    // m fits in 32 bits for all fields we build, so 64-bit products suffice.
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// --- dense polynomial helpers over F_p (bootstrap-time only) ---

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> pmul_modp(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a by monic m, both over F_p.
std::vector<int> pmod_modp(std::vector<int> a, const std::vector<int>& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& t = a[shift + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<int> ppow_modp(std::vector<int> base, std::uint64_t e,
                           const std::vector<int>& m, int p) {
    std::vector<int> r{1};
    base = pmod_modp(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod_modp(pmul_modp(r, base, p), m, p);
        base = pmod_modp(pmul_modp(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factorization(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool FiniteField::is_irreducible_mod_p(int p, const std::vector<int>& poly) {
    std::vector<int> f = poly;
    trim(f);
    const int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return false;
    if (f.back() != 1) return false;  // callers always pass monic polynomials
    if (d == 1) return true;
    // f is irreducible iff y^{p^d} == y (mod f) and gcd-free of proper-degree
    // Frobenius fixed points: y^{p^{d/r}} != y (mod f) for every prime r | d.
    const std::vector<int> y{0, 1};
    std::vector<int> ypd = ppow_modp(y, ipow(p, d), f, p);
    if (ypd != pmod_modp(y, f, p)) return false;
    for (std::uint64_t r : prime_factorization(static_cast<std::uint64_t>(d))) {
        std::vector<int> t = ppow_modp(y, ipow(p, d / static_cast<int>(r)), f, p);
        // t - y must be a unit mod f, i.e. gcd(t - y, f) = 1.  Since f has no
        // roots-of-lower-subfield factors exactly when t != y fails to share a
        // factor, run a plain gcd.
        std::vector<int> g = t;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        // gcd(g, f) over F_p
        std::vector<int> a = f, b = g;
        while (!b.empty()) {
            // make b monic for pmod_modp
            int lc = b.back();
            if (lc != 1) {
                int lcinv = 1;
                for (int x = 1; x < p; ++x)
                    if (x * lc % p == 1) { lcinv = x; break; }
                for (int& c : b) c = c * lcinv % p;
            }
            std::vector<int> rem = pmod_modp(a, b, p);
            a = std::move(b);
            b = std::move(rem);
        }
        if (a.size() != 1) return false;  // nontrivial common factor
    }
    return true;
}

std::vector<int> FiniteField::smallest_irreducible(int p, int degree) {
    // Scan monic polynomials in the canonical order: coefficient sequences
    // (c_0, ..., c_{degree-1}) compared lexicographically from c_0 upward.
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), degree);
    for (std::uint64_t w = 0; w < total; ++w) {
        std::vector<int> f(degree + 1, 0);
        f[degree] = 1;
        std::uint64_t t = w;
        // c_0 is the most significant digit of w so that increasing w walks
        // the canonical order.
        for (int i = degree - 1; i >= 0; --i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        if (is_irreducible_mod_p(p, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found (unreachable)");
}

FiniteField::FiniteField(int p, int degree)
    : FiniteField(p, degree, smallest_irreducible(p, degree)) {}

FiniteField::FiniteField(int p, int degree, std::vector<int> modulus)
    : p_(p), deg_(degree), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
    if (deg_ < 1) throw std::invalid_argument("field degree must be positive");
    for (int& c : modulus_) c = (c % p_ + p_) % p_;
    if (static_cast<int>(modulus_.size()) != deg_ + 1 || modulus_.back() != 1)
        throw std::invalid_argument("modulus must be monic of the field degree");
    if (!is_irreducible_mod_p(p_, modulus_))
        throw std::invalid_argument("modulus is reducible");
    size_ = ipow(static_cast<std::uint64_t>(p_), deg_);
    if (size_ > (1u << 24))
        throw std::invalid_argument("field size exceeds the desk-scale table cap");
    ord_ = size_ - 1;
    prime_factors_ = prime_factorization(ord_);
    build_tables();
}

std::vector<int> FiniteField::raw_mul(const std::vector<int>& a, const std::vector<int>& b) const {
    return pmod_modp(pmul_modp(a, b, p_), modulus_, p_);
}

std::vector<int> FiniteField::coeffs(Elt a) const {
    std::vector<int> c(deg_, 0);
    std::uint64_t t = a;
    for (int i = 0; i < deg_; ++i) {
        c[i] = static_cast<int>(t % p_);
        t /= p_;
    }
    return c;
}

Elt FiniteField::from_coeffs(const std::vector<int>& c) const {
    std::uint64_t idx = 0;
    for (int i = deg_ - 1; i >= 0; --i) {
        int v = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
        idx = idx * p_ + v;
    }
    return static_cast<Elt>(idx);
}

Elt FiniteField::nth(std::uint64_t i) const {
    // Digits of i in base p, most significant digit = c_0.
    std::vector<int> c(deg_, 0);
    for (int k = deg_ - 1; k >= 0; --k) {
        c[k] = static_cast<int>(i % p_);
        i /= p_;
    }
    return from_coeffs(c);
}

bool FiniteField::less(Elt a, Elt b) const {
    std::uint64_t ra = 0, rb = 0;
    std::uint64_t ta = a, tb = b;
    // rank = sum c_i p^{deg-1-i}: low-degree coefficient most significant.
    std::uint64_t place = 1;
    for (int i = 0; i < deg_; ++i) {
        ra += (ta % p_) * (size_ / (place * p_));
        rb += (tb % p_) * (size_ / (place * p_));
        ta /= p_;
        tb /= p_;
        place *= p_;
    }
    return ra < rb;
}

void FiniteField::build_tables() {
    // Find the canonical generator: smallest primitive element in the
    // canonical order, verified with the factored group order.
    std::vector<int> gen_coeffs;
    for (std::uint64_t i = 1; i < size_; ++i) {
        Elt cand = nth(i);
        if (cand == 0) continue;
        std::vector<int> cc = coeffs(cand);
        trim(cc);
        bool primitive = true;
        for (std::uint64_t f : prime_factors_) {
            std::vector<int> t = ppow_modp(cc, ord_ / f, modulus_, p_);
            if (t == std::vector<int>{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = cand;
            gen_coeffs = cc;
            break;
        }
    }
    if (gen_ == 0 && ord_ > 1) throw std::logic_error("no generator found (unreachable)");
    if (ord_ == 1) gen_ = 1;

    exp_.assign(ord_, 0);
    log_.assign(size_, 0);
    std::vector<int> acc{1};
    for (std::uint64_t i = 0; i < ord_; ++i) {
        Elt e = from_coeffs(acc);
        exp_[i] = e;
        log_[e] = static_cast<std::uint32_t>(i);
        acc = raw_mul(acc, gen_coeffs.empty() ? std::vector<int>{1} : gen_coeffs);
    }
}

Elt FiniteField::add(Elt a, Elt b) const {
    std::uint64_t r = 0, place = 1;
    for (int i = 0; i < deg_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return static_cast<Elt>(r);
}

Elt FiniteField::neg(Elt a) const {
    std::uint64_t r = 0, place = 1;
    for (int i = 0; i < deg_; ++i) {
        r += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return static_cast<Elt>(r);
}

Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FiniteField::inv(Elt a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(ord_ - log_[a]) % ord_];
}

Elt FiniteField::pow(Elt a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? one() : zero();
    std::uint64_t k = static_cast<std::uint64_t>(log_[a]) % ord_ * (e % ord_) % ord_;
    return exp_[k];
}

Elt FiniteField::frob(Elt a, std::uint64_t h) const {
    if (a == 0) return 0;
    return pow(a, modpow_u64(p_, h, ord_));
}

std::uint64_t FiniteField::dlog(Elt a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    return log_[a];
}

std::uint64_t FiniteField::mult_order(Elt a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t k = log_[a];
    std::uint64_t g = std::gcd(k, ord_);
    return ord_ / (g == 0 ? ord_ : g);
}

std::string FiniteField::to_string(Elt a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    return "g^" + std::to_string(log_[a]);
}

// --- Embedding ---

Embedding::Embedding(const FiniteField& sub, const FiniteField& sup)
    : sub_(&sub), sup_(&sup) {
    if (sub.characteristic() != sup.characteristic())
        throw std::invalid_argument("embedding across different characteristics");
    if (sup.degree() % sub.degree() != 0)
        throw std::invalid_argument("subfield degree does not divide superfield degree");
    // Smallest root of the subfield modulus, in the canonical order.
    const std::vector<int>& m = sub.modulus();
    root_ = 0;
    bool found = false;
    for (std::uint64_t i = 0; i < sup.size(); ++i) {
        Elt cand = sup.nth(i);
        Elt acc = 0;
        for (int d = static_cast<int>(m.size()) - 1; d >= 0; --d)
            acc = sup.add(sup.mul(acc, cand), static_cast<Elt>(m[d]));
        if (acc == 0) {
            root_ = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no root of subfield modulus (unreachable)");
    power_images_.resize(sub.degree());
    Elt acc = sup.one();
    for (int i = 0; i < sub.degree(); ++i) {
        power_images_[i] = acc;
        acc = sup.mul(acc, root_);
    }
    basis_cols_.resize(sub.degree());
    for (int i = 0; i < sub.degree(); ++i) basis_cols_[i] = sup.coeffs(power_images_[i]);
}

Elt Embedding::apply(Elt a) const {
    std::vector<int> c = sub_->coeffs(a);
    Elt r = 0;
    for (int i = 0; i < sub_->degree(); ++i)
        if (c[i] != 0) r = sup_->add(r, sup_->mul(static_cast<Elt>(c[i]), power_images_[i]));
    return r;
}

Elt Embedding::pull_back(Elt a) const {
    // Solve sum_i z_i * basis_cols_[i] = coeffs(a) over F_p by elimination.
    const int p = sup_->characteristic();
    const int rows = sup_->degree();
    const int cols = sub_->degree();
    std::vector<std::vector<int>> M(rows, std::vector<int>(cols + 1, 0));
    std::vector<int> rhs = sup_->coeffs(a);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) M[r][c] = basis_cols_[c][r];
        M[r][cols] = rhs[r];
    }
    std::vector<int> pivot_col_of_row(rows, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(M[rank], M[pr]);
        int lcinv = 1;
        for (int x = 1; x < p; ++x)
            if (x * M[rank][c] % p == 1) { lcinv = x; break; }
        for (int j = c; j <= cols; ++j) M[rank][j] = M[rank][j] * lcinv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            int f = M[r][c];
            for (int j = c; j <= cols; ++j)
                M[r][j] = ((M[r][j] - f * M[rank][j]) % p + p) % p;
        }
        pivot_col_of_row[rank] = c;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (M[r][cols] != 0) throw std::domain_error("element not in subfield image");
    std::vector<int> z(cols, 0);
    for (int r = 0; r < rank; ++r) z[pivot_col_of_row[r]] = M[r][cols];
    return sub_->from_coeffs(z);
}

bool Embedding::in_image(Elt a) const {
    try {
        (void)pull_back(a);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace skewcode

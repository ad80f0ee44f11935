#include "skewcode/tower.hpp"

#include <numeric>
#include <stdexcept>

namespace skewcode {

namespace {
std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

TowerContext::TowerContext(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.e < 1 || spec_.n < 1 || spec_.s < 1)
        throw std::invalid_argument("tower degrees must be positive");
    q_ = ipow(static_cast<std::uint64_t>(spec_.p), spec_.e);
    // Force construction of the standard levels up front so that invalid
    // specs (non-prime p, bad overrides) fail at build time.
    (void)prime();
    (void)K();
    (void)L();
    (void)E();
}

const FiniteField& TowerContext::field_of_degree(int d) const {
    if (d < 1) throw std::invalid_argument("field degree must be positive");
    auto it = fields_.find(d);
    if (it == fields_.end()) {
        auto ov = spec_.modulus_override.find(d);
        std::unique_ptr<FiniteField> f =
            ov == spec_.modulus_override.end()
                ? std::make_unique<FiniteField>(spec_.p, d)
                : std::make_unique<FiniteField>(spec_.p, d, ov->second);
        it = fields_.emplace(d, std::move(f)).first;
    }
    return *it->second;
}

const Embedding& TowerContext::embed(int dsub, int dsup) const {
    auto key = std::make_pair(dsub, dsup);
    auto it = embeddings_.find(key);
    if (it == embeddings_.end()) {
        it = embeddings_
                 .emplace(key, std::make_unique<Embedding>(field_of_degree(dsub),
                                                           field_of_degree(dsup)))
                 .first;
    }
    return *it->second;
}

Elt TowerContext::sigma(Elt a, int j) const {
    const int ne = spec_.n * spec_.e;
    long long h = static_cast<long long>(spec_.e) * j % ne;
    if (h < 0) h += ne;
    return L().frob(a, static_cast<std::uint64_t>(h));
}

Elt TowerContext::frobenius_apply(Elt a, long long j, AutSpec aut) const {
    const int ne = spec_.n * spec_.e;
    long long h = static_cast<long long>(aut.h) * j % ne;
    if (h < 0) h += ne;
    return L().frob(a, static_cast<std::uint64_t>(h));
}

int TowerContext::fixed_field_degree(AutSpec aut) const {
    const int ne = spec_.n * spec_.e;
    return std::gcd(ne, aut.h) == 0 ? ne : std::gcd(ne, aut.h);
}

Elt TowerContext::norm_in_sup(Elt a, int dsub, int dsup) const {
    if (dsup % dsub != 0) throw std::invalid_argument("norm levels not nested");
    const FiniteField& F = field_of_degree(dsup);
    const int r = dsup / dsub;
    Elt acc = F.one();
    for (int i = 0; i < r; ++i) {
        acc = F.mul(acc, a);
        a = F.frob(a, static_cast<std::uint64_t>(dsub));
    }
    return acc;
}

Elt TowerContext::norm_between(Elt a, int dsub, int dsup) const {
    Elt v = norm_in_sup(a, dsub, dsup);
    if (dsub == dsup) return v;
    return embed(dsub, dsup).pull_back(v);
}

Elt TowerContext::truncated_norm(Elt a, int i) const {
    const FiniteField& F = L();
    Elt acc = F.one();
    for (int j = 0; j < i; ++j) acc = F.mul(acc, sigma(a, j));
    return acc;
}

TowerContext::SquareResult TowerContext::is_square(const FiniteField& field, Elt a) const {
    SquareResult r;
    if (field.characteristic() == 2) {
        r.is_square = true;
        r.char2_warning = true;
        return r;
    }
    if (a == 0) {
        r.is_square = true;
        return r;
    }
    r.is_square = field.pow(a, (field.size() - 1) / 2) == field.one();
    return r;
}

}  // namespace skewcode

#include "nexus/cyclotomic.hpp"

#include "nexus/errors.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

namespace nexus {

namespace {

struct MobiusCache {
    std::mutex lock;
    std::uint64_t bound = 10000;
    std::vector<int> values;  // values[k] for 1 <= k < values.size()
};

MobiusCache& mobiusCache() {
    static MobiusCache cache;
    return cache;
}

int mobiusByTrialDivision(std::uint64_t k) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) sign = -sign;
    return sign;
}

struct CyclotomicCache {
    std::mutex lock;
    std::map<std::uint64_t, UniPoly> polys;
};

CyclotomicCache& cyclotomicCache() {
    static CyclotomicCache cache;
    return cache;
}

}  // namespace

// ---------------------------------------------------------------- CycloProduct

CycloProduct::CycloProduct(const FactorMap& factors) {
    for (auto [k, c] : factors) {
        if (k == 0) throw DomainError("cyclotomic index must be positive");
        if (c > 0) factors_[k] = c;
    }
}

CycloProduct::CycloProduct(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> factors)
    : CycloProduct(FactorMap(factors)) {}

std::uint64_t CycloProduct::exponent(std::uint64_t k) const {
    auto it = factors_.find(k);
    return it == factors_.end() ? 0 : it->second;
}

std::uint64_t CycloProduct::degree() const {
    std::uint64_t d = 0;
    for (auto [k, c] : factors_) d += c * eulerPhi(k);
    return d;
}

std::string CycloProduct::toString() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto [k, c] : factors_) {
        if (!first) out << " * ";
        first = false;
        out << "Phi_" << k;
        if (c > 1) out << '^' << c;
    }
    return out.str();
}

CycloProduct CycloProduct::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::uint64_t {
        skip();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
            if (pos - start > 18) throw ParseError("number too large", start);
        }
        if (start == pos) throw ParseError("expected a number", pos);
        return v;
    };
    skip();
    if (text.substr(pos) == "1") return {};
    FactorMap out;
    for (;;) {
        skip();
        if (text.substr(pos, 4) != "Phi_") throw ParseError("expected 'Phi_'", pos);
        pos += 4;
        std::size_t at = pos;
        std::uint64_t k = number();
        if (k == 0) throw ParseError("cyclotomic index must be positive", at);
        std::uint64_t c = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            c = number();
        }
        out[k] += c;
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError("expected '*'", pos);
        ++pos;
    }
    return CycloProduct(out);
}

// ---------------------------------------------------------------- number theory

std::uint64_t eulerPhi(std::uint64_t k) {
    if (k == 0) throw DomainError("eulerPhi(0)");
    std::uint64_t result = k;
    for (std::uint64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

int mobius(std::uint64_t k) {
    if (k == 0) throw DomainError("mobius(0)");
    auto& cache = mobiusCache();
    std::lock_guard guard(cache.lock);
    if (k >= cache.bound) return mobiusByTrialDivision(k);
    if (cache.values.size() <= k) {
        std::size_t old = cache.values.size();
        cache.values.resize(k + 1);
        for (std::size_t i = std::max<std::size_t>(old, 1); i <= k; ++i)
            cache.values[i] = mobiusByTrialDivision(i);
    }
    return cache.values[k];
}

void setMobiusCacheBound(std::uint64_t bound) {
    auto& cache = mobiusCache();
    std::lock_guard guard(cache.lock);
    cache.bound = bound;
    cache.values.clear();
}

std::vector<std::uint64_t> divisors(std::uint64_t d) {
    if (d == 0) throw DomainError("divisors(0)");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t i = 1; i * i <= d; ++i) {
        if (d % i != 0) continue;
        small.push_back(i);
        if (i != d / i) large.push_back(d / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// ---------------------------------------------------------------- cyclotomics

UniPoly cyclotomic(std::uint64_t k) {
    if (k == 0) throw DomainError("cyclotomic index must be positive");
    auto& cache = cyclotomicCache();
    {
        std::lock_guard guard(cache.lock);
        if (auto it = cache.polys.find(k); it != cache.polys.end()) return it->second;
    }
    UniPoly quotient = UniPoly::unityMinusOne(k);
    for (std::uint64_t j : divisors(k))
        if (j < k) quotient = uniDivExact(quotient, cyclotomic(j));
    std::lock_guard guard(cache.lock);
    cache.polys.emplace(k, quotient);
    return quotient;
}

CycloProduct factorUnity(std::uint64_t d) {
    if (d == 0) throw DomainError("factorUnity needs d >= 1");
    CycloProduct::FactorMap f;
    for (std::uint64_t k : divisors(d)) f[k] = 1;
    return CycloProduct(f);
}

HomogeneousExponents homogeneousExponents(std::uint64_t n, std::uint64_t d) {
    if (n < 1) throw DomainError("homogeneous formula needs n >= 1");
    if (d < 2) throw DomainError("homogeneous formula needs degree d >= 2");
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), d - 1, n);
    const long sign = (n % 2 == 0) ? 1 : -1;
    top -= sign;
    if (!mpz_divisible_ui_p(top.get_mpz_t(), d))
        throw InvariantViolation("b0 = ((d-1)^n - (-1)^n)/d is not an integer");
    mpz_class b0 = top / static_cast<unsigned long>(d);
    mpz_class a0 = b0 + sign;
    if (!b0.fits_slong_p() || !a0.fits_slong_p() || a0 < 0 || b0 < 0)
        throw DomainError("homogeneous exponents out of range");
    return {a0.get_si(), b0.get_si()};
}

CycloProduct homogeneousChar(std::uint64_t n, std::uint64_t d) {
    auto [a0, b0] = homogeneousExponents(n, d);
    CycloProduct::FactorMap f;
    f[1] = static_cast<std::uint64_t>(a0);
    for (std::uint64_t k : divisors(d))
        if (k > 1) f[k] = static_cast<std::uint64_t>(b0);
    return CycloProduct(f);
}

CycloProduct gcd(const CycloProduct& a, const CycloProduct& b) {
    CycloProduct::FactorMap f;
    for (auto [k, c] : a.factors()) {
        std::uint64_t e = std::min(c, b.exponent(k));
        if (e > 0) f[k] = e;
    }
    return CycloProduct(f);
}

CycloProduct operator*(const CycloProduct& a, const CycloProduct& b) {
    CycloProduct::FactorMap f = a.factors();
    for (auto [k, c] : b.factors()) f[k] += c;
    return CycloProduct(f);
}

CycloProduct product(std::span<const CycloProduct> factors) {
    CycloProduct acc;
    for (const auto& p : factors) acc = acc * p;
    return acc;
}

bool divides(const CycloProduct& a, const CycloProduct& b) {
    for (auto [k, c] : a.factors())
        if (c > b.exponent(k)) return false;
    return true;
}

std::int64_t trace(const CycloProduct& a) {
    std::int64_t t = 0;
    for (auto [k, c] : a.factors()) t += static_cast<std::int64_t>(c) * mobius(k);
    return t;
}

UniPoly expand(const CycloProduct& a) {
    UniPoly acc = UniPoly::constant(1);
    for (auto [k, c] : a.factors()) {
        UniPoly phi = cyclotomic(k);
        for (std::uint64_t i = 0; i < c; ++i) acc = uniMul(acc, phi);
    }
    return acc;
}

}  // namespace nexus

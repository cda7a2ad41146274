#include "nexus/unipoly.hpp"

#include "nexus/errors.hpp"

#include <sstream>

namespace nexus {

namespace {

using QPoly = std::vector<mpq_class>;

void trimQ(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a modulo b over Q; b nonzero.
QPoly remQ(QPoly a, const QPoly& b) {
    trimQ(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trimQ(a);
    }
    return a;
}

UniPoly primitiveIntegral(const QPoly& p) {
    if (p.empty()) return {};
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> z;
    z.reserve(p.size());
    for (const auto& c : p) z.push_back(mpz_class(c * den));
    mpz_class g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return UniPoly(std::move(z));
}

}  // namespace

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

UniPoly UniPoly::constant(const mpz_class& c) { return UniPoly(std::vector<mpz_class>{c}); }

UniPoly UniPoly::unityMinusOne(std::uint64_t d) {
    std::vector<mpz_class> c(d + 1, 0);
    c[0] = -1;
    c[d] += 1;
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class UniPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string UniPoly::toString(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << var;
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

UniPoly uniMul(const UniPoly& a, const UniPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<mpz_class> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UniPoly(std::move(r));
}

UniPoly uniAdd(const UniPoly& a, const UniPoly& b) {
    std::vector<mpz_class> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly uniSub(const UniPoly& a, const UniPoly& b) { return uniAdd(a, -b); }

UniPoly uniDivExact(const UniPoly& a, const UniPoly& b) {
    if (b.isZero()) throw DomainError("division by the zero polynomial");
    if (a.isZero()) return {};
    if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
    std::vector<mpz_class> rem = a.coeffs();
    const auto& d = b.coeffs();
    std::vector<mpz_class> q(rem.size() - d.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
            throw DomainError("inexact polynomial division");
        q[k] = top / d.back();
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw DomainError("inexact polynomial division");
    return UniPoly(std::move(q));
}

UniPoly uniGcd(const UniPoly& a, const UniPoly& b) {
    QPoly x(a.coeffs().begin(), a.coeffs().end());
    QPoly y(b.coeffs().begin(), b.coeffs().end());
    while (!y.empty()) {
        QPoly r = remQ(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return primitiveIntegral(x);
}

bool equalUpToSign(const UniPoly& a, const UniPoly& b) { return a == b || a == -b; }

}  // namespace nexus

#include "nexus/polynomial.hpp"

#include "nexus/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace nexus {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t varCount, std::size_t index, std::uint32_t power) {
    if (index >= varCount) throw DomainError("variable index out of range");
    Monomial m(varCount);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    r.degree_ -= divisor.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::dropVariable(std::size_t index) const {
    std::vector<std::uint32_t> e = exps_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
    return Monomial(std::move(e));
}

Monomial Monomial::prependVariables(std::size_t count) const {
    std::vector<std::uint32_t> e(count, 0);
    e.insert(e.end(), exps_.begin(), exps_.end());
    return Monomial(std::move(e));
}

std::strong_ordering grlexCompare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (auto c = ea[i] <=> eb[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::size_t n, std::vector<mpq_class> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw DomainError("matrix entry count does not match size");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

mpq_class QMatrix::determinant() const {
    QMatrix w = *this;
    mpq_class det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && w(p, c) == 0) ++p;
        if (p == n_) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(w(p, j), w(c, j));
            det = -det;
        }
        det *= w(c, c);
        for (std::size_t r = c + 1; r < n_; ++r) {
            if (w(r, c) == 0) continue;
            mpq_class factor = w(r, c) / w(c, c);
            for (std::size_t j = c; j < n_; ++j) w(r, j) -= factor * w(c, j);
        }
    }
    return det;
}

QMatrix QMatrix::inverse() const {
    QMatrix w = *this;
    QMatrix inv = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && w(p, c) == 0) ++p;
        if (p == n_) throw DomainError("singular matrix");
        for (std::size_t j = 0; j < n_; ++j) {
            std::swap(w(p, j), w(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        mpq_class pivot = w(c, c);
        for (std::size_t j = 0; j < n_; ++j) {
            w(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == c || w(r, c) == 0) continue;
            mpq_class factor = w(r, c);
            for (std::size_t j = 0; j < n_; ++j) {
                w(r, j) -= factor * w(c, j);
                inv(r, j) -= factor * inv(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t varCount, const mpq_class& c) {
    MultiPoly p(varCount);
    p.addTerm(Monomial(varCount), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t varCount, std::size_t index) {
    MultiPoly p(varCount);
    p.addTerm(Monomial::variable(varCount, index), 1);
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const mpq_class& c) {
    MultiPoly p(m.varCount());
    p.addTerm(m, c);
    return p;
}

bool MultiPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

std::int64_t MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<std::int64_t>(terms_.begin()->first.degree());
}

mpq_class MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class MultiPoly::constantTerm() const { return coefficient(Monomial(varCount_)); }

void MultiPoly::addTerm(const Monomial& m, const mpq_class& coeff) {
    if (m.varCount() != varCount_) throw DomainError("monomial variable count mismatch");
    mpq_class c = coeff;
    c.canonicalize();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::requireSameRing(const MultiPoly& o) const {
    if (o.varCount_ != varCount_) throw DomainError("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    requireSameRing(o);
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    requireSameRing(o);
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& scale) {
    mpq_class c = scale;
    c.canonicalize();
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.requireSameRing(b);
    MultiPoly r(a.varCount_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly result = constant(varCount_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::prependVariables(std::size_t count) const {
    MultiPoly r(varCount_ + count);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.prependVariables(count), c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return varCount_ == o.varCount_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

    MultiPoly run() {
        if (vars_.empty()) throw DomainError("at least one variable is required");
        skipSpace();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        MultiPoly r = expression();
        skipSpace();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expression() {
        MultiPoly acc = product();
        for (;;) {
            if (accept('+'))
                acc += product();
            else if (accept('-'))
                acc -= product();
            else
                return acc;
        }
    }

    MultiPoly product() {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                MultiPoly d = unary();
                if (!d.isConstant() || d.isZero())
                    throw ParseError("division only by a nonzero constant", at);
                acc *= 1 / d.constantTerm();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (accept('^')) {
            skipSpace();
            std::size_t at = pos_;
            auto digits = integerLiteral();
            if (!digits) throw ParseError("exponent must be a nonnegative integer literal", at);
            mpz_class e(*digits);
            if (e > 1000000) throw ParseError("exponent too large", at);
            return base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    std::optional<std::string> integerLiteral() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    MultiPoly primary() {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expression();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto digits = integerLiteral();
            MultiPoly r = MultiPoly::constant(vars_.size(), mpq_class(mpz_class(*digits)));
            if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '('))
                throw ParseError("implicit multiplication is not allowed", pos_);
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(vars_.size(), i);
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse(std::string_view text, std::span<const std::string> vars) {
    return Parser(text, vars).run();
}

std::string print(const MultiPoly& f, std::span<const std::string> vars) {
    if (vars.size() != f.varCount()) throw DomainError("variable name count mismatch");
    if (f.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wroteCoeff = false;
        if (mag != 1 || m.isOne()) {
            out << mag.get_str();
            wroteCoeff = true;
        }
        for (std::size_t i = 0; i < m.varCount(); ++i) {
            if (m[i] == 0) continue;
            if (wroteCoeff) out << '*';
            out << vars[i];
            if (m[i] > 1) out << '^' << m[i];
            wroteCoeff = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- transforms

MultiPoly partial(const MultiPoly& f, std::size_t i) {
    if (i >= f.varCount()) throw DomainError("partial: variable index out of range");
    MultiPoly r(f.varCount());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
        mpq_class k = c * e[i];
        --e[i];
        r.addTerm(Monomial(std::move(e)), k);
    }
    return r;
}

MultiPoly linearChange(const MultiPoly& f, const QMatrix& m) {
    const std::size_t n = f.varCount();
    if (m.size() != n) throw DomainError("linearChange: matrix size does not match variable count");
    if (m.determinant() == 0) throw DomainError("linearChange: singular matrix");

    std::vector<MultiPoly> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly row(n);
        for (std::size_t j = 0; j < n; ++j) row.addTerm(Monomial::variable(n, j), m(i, j));
        rows.push_back(std::move(row));
    }
    // powers[i][e] = rows[i]^e, grown on demand
    std::vector<std::vector<MultiPoly>> powers(n, std::vector<MultiPoly>{MultiPoly::constant(n, 1)});
    auto rowPower = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * rows[i]);
        return powers[i][e];
    };

    MultiPoly r(n);
    for (const auto& [mono, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (mono[i] > 0) t = t * rowPower(i, mono[i]);
        r += t;
    }
    return r;
}

MultiPoly restrictFirstVar(const MultiPoly& f) {
    if (f.varCount() < 2) throw DomainError("restrictFirstVar needs at least two variables");
    MultiPoly r(f.varCount() - 1);
    for (const auto& [m, c] : f.terms())
        if (m[0] == 0) r.addTerm(m.dropVariable(0), c);
    return r;
}

mpq_class evaluate(const MultiPoly& f, std::span<const mpq_class> point) {
    if (point.size() != f.varCount()) throw DomainError("evaluate: point dimension mismatch");
    mpq_class sum = 0;
    for (const auto& [m, c] : f.terms()) {
        mpq_class t = c;
        for (std::size_t i = 0; i < m.varCount(); ++i) {
            mpq_class b = point[i];
            for (std::uint32_t k = 0; k < m[i]; ++k) t *= b;
        }
        sum += t;
    }
    return sum;
}

std::vector<std::string> defaultVariableNames(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace nexus

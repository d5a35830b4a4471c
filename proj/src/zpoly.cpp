#include "cid/zpoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cid {

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_constant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("monomial: mismatched ambient variables");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<std::uint8_t>(exps_[i] + o.exps_[i]);
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw std::invalid_argument("monomial: mismatched ambient variables");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    Monomial out = numerator;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<std::uint8_t>(numerator.exps_[i] - exps_[i]);
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

Monomial Monomial::variable(int nvars, int i) {
    Monomial m(nvars);
    m.exps_[i] = 1;
    return m;
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::degrevlex: {
            const int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
            // Reverse-lex tiebreak: larger exponent in the last differing
            // variable means smaller monomial.
            for (int i = a.nvars() - 1; i >= 0; --i)
                if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
            return false;
        }
        case MonomialOrder::lex:
            for (int i = 0; i < a.nvars(); ++i)
                if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
            return false;
    }
    return false;
}

namespace {
struct DescDegrevlex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(b, a, MonomialOrder::degrevlex);
    }
};
} // namespace

Polynomial Polynomial::constant(int nvars, Int c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::variable(nvars, i), Int(1)});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    std::map<Monomial, Int, DescDegrevlex> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != nvars) throw std::invalid_argument("polynomial: mismatched ambient variables");
        acc[t.mono] += t.coeff;
    }
    Polynomial p(nvars);
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Int Polynomial::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("polynomial: not a constant");
    return terms_.empty() ? Int(0) : terms_[0].coeff;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::invalid_argument("polynomial: zero has no leading term");
    if (order == MonomialOrder::degrevlex) return terms_.front();
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (monomial_less(best->mono, t.mono, order)) best = &t;
    return *best;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: mismatched ambient variables");
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    DescDegrevlex before;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Int c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (before(terms_[i].mono, o.terms_[j].mono)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::map<Monomial, Int, DescDegrevlex> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    Polynomial out(nvars_);
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.push_back({m, c});
    return out;
}

Polynomial Polynomial::operator*(const Int& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::add_scaled(const Int& c, const Monomial& m, const Polynomial& o) const {
    check_compatible(o);
    if (c == 0 || o.is_zero()) return *this;
    Polynomial scaled(nvars_);
    scaled.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) scaled.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying every monomial by m preserves the degrevlex ordering.
    return *this + scaled;
}

Int Polynomial::evaluate(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: point length does not match ambient variable count");
    Int total = 0;
    for (const auto& t : terms_) {
        Int v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.mono.exponent(i); ++e) v *= point[i];
        total += v;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool const_mono = t.mono.is_constant();
        if (c != 1 || const_mono) os << c.get_str();
        bool printed_var = false;
        for (int i = 0; i < nvars_; ++i) {
            const int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (c != 1 || printed_var) os << "*";
            os << "x" << i;
            if (e > 1) os << "^" << e;
            printed_var = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

SymMatrix SymMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    SymMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), nvars_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return out;
}

namespace {

Polynomial det_rec(const SymMatrix& m, int row, std::uint32_t colmask) {
    const int n = m.rows();
    if (row == n) return Polynomial::constant(m.nvars(), 1);
    int sign = 1;
    Polynomial acc(m.nvars());
    for (int c = 0; c < m.cols(); ++c) {
        if (!((colmask >> c) & 1u)) continue;
        const Polynomial& entry = m.at(row, c);
        if (!entry.is_zero()) {
            Polynomial minor = det_rec(m, row + 1, colmask & ~(1u << c));
            Polynomial piece = entry * minor;
            acc = (sign > 0) ? acc + piece : acc - piece;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

Polynomial determinant(const SymMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() > 6) throw std::invalid_argument("determinant: cofactor expansion supports dimension <= 6");
    if (m.rows() == 0) return Polynomial::constant(m.nvars(), 1);
    return det_rec(m, 0, (1u << m.rows()) - 1u);
}

} // namespace cid

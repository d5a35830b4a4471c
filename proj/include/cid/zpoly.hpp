#ifndef CID_ZPOLY_HPP
#define CID_ZPOLY_HPP

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <vector>

namespace cid {

/// Coefficients are arbitrary precision: bases over the integers can blow up
/// coefficients even from +-1 inputs.
using Int = mpz_class;

/// Exponent vector over a fixed ambient variable list (one variable per
/// vertex, ordered by vertex index).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<std::uint8_t> exps) : exps_(exps) {}

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[i]; }
    int total_degree() const;
    bool is_constant() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_of(const Monomial& numerator) const; // numerator / *this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial variable(int nvars, int i);

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<std::uint8_t> exps_;
};

enum class MonomialOrder { degrevlex, lex };

/// Strict "less" in the given order; variables ordered by vertex index
/// (x0 largest).
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
    Monomial mono;
    Int coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over Int. Terms are stored descending in
/// degrevlex with no zero coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, Int c);
    static Polynomial variable(int nvars, int i);
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value of a degree-zero polynomial (0 for the zero polynomial).
    Int constant_value() const;
    int total_degree() const;
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term(MonomialOrder order = MonomialOrder::degrevlex) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Int& c) const;
    /// *this + c * m * o, the workhorse of reduction.
    Polynomial add_scaled(const Int& c, const Monomial& m, const Polynomial& o) const;

    Int evaluate(const std::vector<Int>& point) const;

    std::string to_string() const; // "3*x0^2*x1 - 1"

    bool operator==(const Polynomial&) const = default;

  private:
    void check_compatible(const Polynomial& o) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Int& c) {
    return p + Polynomial::constant(p.nvars(), c);
}
inline Polynomial operator-(const Polynomial& p, const Int& c) {
    return p - Polynomial::constant(p.nvars(), c);
}
inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

/// Rectangular matrix of polynomials.
class SymMatrix {
  public:
    SymMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(static_cast<std::size_t>(rows) * cols, Polynomial(nvars)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    Polynomial& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Polynomial& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    SymMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  private:
    int rows_, cols_, nvars_;
    std::vector<Polynomial> data_;
};

/// Exact determinant by cofactor expansion; square matrices up to 6x6.
Polynomial determinant(const SymMatrix& m);

} // namespace cid

#endif

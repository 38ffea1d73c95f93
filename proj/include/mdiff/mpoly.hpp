#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "mdiff/rational.hpp"
#include "mdiff/varid.hpp"

namespace mdiff {

// A monomial with signed (Laurent) exponents. Variables are kept sorted by
// the canonical VarId order and exponents are nonzero.
class Monomial {
  public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<VarId, int>> factors);

    static Monomial var(const VarId& v, int exp = 1);

    int exponent(const VarId& v) const;
    int total_degree() const;
    bool is_constant() const { return v_.empty(); }
    const std::vector<std::pair<VarId, int>>& factors() const { return v_; }

    Monomial operator*(const Monomial& o) const;
    // Canonical order: graded, then lexicographic in the canonical variable
    // order with the larger exponent first.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return v_ == o.v_; }

  private:
    std::vector<std::pair<VarId, int>> v_;
    friend class MPoly;
};

// Sparse multivariate Laurent polynomial over Rational. Immutable in spirit:
// arithmetic returns new values, and no zero coefficient is ever stored.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& c); // constant
    MPoly(long c) : MPoly(rat(c)) {}
    static MPoly var(const VarId& v, int exp = 1);
    static MPoly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    const Rational& coeff(const Monomial& m) const; // 0 if absent
    Rational constant_term() const { return coeff(Monomial{}); }

    MPoly& add_term(const Monomial& m, const Rational& c); // in place, prunes zeros

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly operator/(const Rational& c) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);

    bool operator==(const MPoly& o) const { return t_ == o.t_; }

    // Formal partial derivative; Laurent exponents follow d/dx x^n = n x^{n-1}.
    MPoly derivative(const VarId& v) const;

    // Substitute variables by polynomials; variables absent from the map are
    // left alone. Negative exponents of substituted variables are rejected.
    MPoly substitute(const std::map<VarId, MPoly>& repl) const;

    // Coefficient of var^k, collected as a polynomial in the other variables.
    MPoly coeff_of(const VarId& v, int k) const;
    // Largest/smallest exponent of v present (0 if v absent).
    int max_exponent(const VarId& v) const;
    int min_exponent(const VarId& v) const;

    int weight(const Monomial& m, const Grading& g) const;
    MPoly weighted_truncate(const Grading& g, int bound) const;
    bool is_homogeneous(const Grading& g, int weight) const;

  private:
    TermMap t_;
};

inline MPoly operator*(const Rational& c, const MPoly& p) { return p * c; }

// log(1+N) = N - N^2/2 + ... truncated at the given weight; the argument must
// have constant term 1 and N strictly positive weight.
MPoly mpoly_log(const MPoly& a, const Grading& g, int bound);

} // namespace mdiff

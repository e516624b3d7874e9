#pragma once

#include "g2/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2 {

/// The globally fixed, ordered parameter list. Canonical across all modules
/// so polynomial comparison is coefficient-wise everywhere.
inline constexpr int kNumParams = 13;
inline constexpr char kParamNames[kNumParams] = {'a', 'b', 'c', 'd', 'p', 'q', 'r',
                                                 'x', 'y', 'z', 'u', 'v', 's'};

/// Index of a parameter letter in the fixed list; -1 if not a parameter.
int param_index(char name);

/// Exponent tuple over the fixed parameter list.
struct Monomial {
    std::array<std::uint8_t, kNumParams> exp{};

    int total_degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: lower total degree first, then lex.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

/// Multivariate polynomial over Q in the fixed parameters. No zero
/// coefficients are stored, so equality is map equality.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(int n) { if (n != 0) terms_[Monomial{}] = Rational(n); }
    ParamPoly(long n) { if (n != 0) terms_[Monomial{}] = Rational(n); }
    ParamPoly(Rational r) {
        if (!r.is_zero()) terms_[Monomial{}] = std::move(r);
    }
    /// The parameter with the given letter, as a degree-1 polynomial.
    static ParamPoly param(char name);
    static ParamPoly term(Rational coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value if parameter-free, else nullopt.
    std::optional<Rational> constant_value() const;
    int degree_in(int param) const;
    int total_degree() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    /// Exact division by a nonzero rational.
    ParamPoly div_rational(const Rational& r) const;

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    /// Exact substitution param -> polynomial for each bound parameter;
    /// unbound parameters stay free. Total function.
    ParamPoly substitute(const std::map<int, ParamPoly>& bindings) const;
    /// Substitution allowing rational-function bindings num/den per parameter.
    /// Returns the numerator polynomial after clearing every denominator
    /// (each den^deg_in(param) multiplied through), which vanishes iff the
    /// substituted rational function vanishes.
    ParamPoly substitute_cleared(const std::map<int, std::pair<ParamPoly, ParamPoly>>& bindings) const;
    /// Full evaluation at a rational point (all parameters bound).
    Rational evaluate(const std::array<Rational, kNumParams>& point) const;

    const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }

    /// Deterministic rendering, graded-lex term order, e.g. "a^2 - 3/2*b*c".
    std::string str() const;

    /// Parses polynomial expressions: rationals, parameter letters, + - * ^,
    /// parentheses. Throws std::invalid_argument on syntax errors.
    static ParamPoly parse(const std::string& text);

private:
    void prune(const Monomial& m);
    std::map<Monomial, Rational, GradedLex> terms_;
};

inline ParamPoly operator*(const Rational& r, const ParamPoly& p) { return ParamPoly(r) * p; }

}  // namespace g2

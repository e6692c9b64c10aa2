#pragma once

// Symmetric functions with rational coefficients, stored in the power-sum
// basis. Elements may mix degrees; truncation is explicit at call sites.

#include <limits>
#include <map>
#include <string>

#include "facealg/combinatorics.hpp"
#include "facealg/rational.hpp"

namespace facealg {

  class SymFunc {
   public:
    using Terms = std::map<Partition, Rational>;

    SymFunc() = default;
    // The constant c.
    explicit SymFunc(Rational const& c);

    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    Rational coefficient(Partition const& rho) const;
    void     add_term(Partition const& rho, Rational const& c);

    // Part of degree d.
    SymFunc homogeneous(int d) const;
    // Terms of degree <= max_degree.
    SymFunc truncated(int max_degree) const;
    // Largest degree present; -1 for zero.
    int max_degree() const;

    SymFunc& operator+=(SymFunc const& other);
    SymFunc& operator-=(SymFunc const& other);
    SymFunc  operator+(SymFunc const& other) const;
    SymFunc  operator-(SymFunc const& other) const;
    SymFunc  operator-() const;
    SymFunc  operator*(Rational const& c) const;
    SymFunc  operator*(SymFunc const& other) const;

    bool operator==(SymFunc const&) const = default;

   private:
    Terms _terms;
  };

  inline constexpr int kNoTruncation = std::numeric_limits<int>::max();

  SymFunc p(Partition const& rho);
  SymFunc h(int k);
  SymFunc h_of(Partition const& mu);
  SymFunc h_of(Composition const& alpha);
  SymFunc s(Partition const& lambda);

  // Product dropping every term of degree above max_degree.
  SymFunc multiply(SymFunc const& f,
                   SymFunc const& g,
                   int            max_degree = kNoTruncation);
  // Degrees pair separately; <p_rho, p_sigma> = delta z_rho.
  Rational hall_inner(SymFunc const& f, SymFunc const& g);

  // f[g]. Rational scalars are constants: p_r[c] = c.
  SymFunc plethysm(SymFunc const& f,
                   SymFunc const& g,
                   int            max_degree = kNoTruncation);

  int mobius(int n);
  // (1/n) sum_{d | n} mu(d) p_d^{n/d}.
  SymFunc lie(int n);
  // prod_i h_{m_i}[L_i], m_i the multiplicity of i in lambda. Cached. Throws
  // std::logic_error if the Schur expansion is not a nonnegative integer
  // combination.
  SymFunc higher_lie(Partition const& lambda);

  // Coefficient of x^nu, i.e. <f, h_nu>.
  Rational monomial_coefficient(SymFunc const& f, Partition const& nu);
  // <f, s_lambda> for every lambda of every degree present; zeros omitted.
  std::map<Partition, Rational> schur_expand(SymFunc const& f);
  SymFunc from_schur(std::map<Partition, Rational> const& coefficients);
  // True when every Schur coefficient is a nonnegative integer.
  bool is_schur_positive_integral(SymFunc const& f);

  // sum_rho traces(rho) p_rho / z_rho. Throws std::invalid_argument if a
  // cycle type of n is missing.
  SymFunc frobenius_from_traces(int n, std::map<Partition, Rational> const& traces);

  // "2*s[3,1] + s[2,1,1]"; "0" when empty. Coefficients print as rationals.
  std::string format_expansion(std::map<Partition, Rational> const& coefficients,
                               char                                 basis);
  std::string format_schur(SymFunc const& f);
  std::string format_power_sum(SymFunc const& f);

}  // namespace facealg

#pragma once

// The Lyndon-word product
//   prod_{Lyndon w} sum_rho y_{|w| rho} z_{w^{|rho|}} L_rho[h_w]
// truncated at total degree N, its coefficients, and the Cartan invariants
// of the descent algebra computed from it and by counting compositions.

#include <map>
#include <utility>
#include <vector>

#include "facealg/lyndon.hpp"
#include "facealg/repanalysis.hpp"
#include "facealg/symfunc.hpp"

namespace facealg {

  inline constexpr int kDefaultSeriesCap = 8;

  // Sparse map (y index, z index) -> symmetric function. The empty pair
  // holds the constant term.
  class BivariateSeries {
   public:
    using Key   = std::pair<Partition, Partition>;
    using Terms = std::map<Key, SymFunc>;

    explicit BivariateSeries(int truncation) : _truncation(truncation) {}
    static BivariateSeries one(int truncation);

    int truncation() const noexcept {
      return _truncation;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    // Coefficient of y_lambda z_mu, zero when absent.
    SymFunc coefficient(Partition const& lambda, Partition const& mu) const;
    // Ignores terms whose z-weight exceeds the truncation.
    void add_term(Partition const& y, Partition const& z, SymFunc const& value);

    // Product, dropping terms of z-weight above the truncation.
    BivariateSeries operator*(BivariateSeries const& other) const;

   private:
    int   _truncation;
    Terms _terms;
  };

  // 1 + sum over nonempty rho with |rho||w| <= N of
  // y_{|w| rho} z_{w^{|rho|}} L_rho[h_w].
  BivariateSeries lyndon_factor(Word const& w, int truncation);
  // Product of the factors of every Lyndon word of size <= N, in
  // lyndon_words_up_to order. Throws std::out_of_range when N > cap.
  BivariateSeries rhs_series(int truncation, int cap = kDefaultSeriesCap, int jobs = 1);

  // <s_n, coefficient(lambda, mu)>.
  Integer cartan_via_series(BivariateSeries const& series,
                            Partition const&       lambda,
                            Partition const&       mu);
  // #{alpha ~ mu : type(alpha) = lambda}.
  Integer cartan_via_count(Partition const& lambda, Partition const& mu);

  struct TheoremCheck {
    Partition lambda;
    Partition mu;
    SymFunc   brute_force;  // ch(E_lambda CF_n E_mu)
    SymFunc   series;       // coefficient of y_lambda z_mu
    bool      equal = false;
  };

  struct TheoremReport {
    int                       n = 0;
    std::vector<TheoremCheck> pairs;
    bool                      ok() const;
  };

  // Compares both sides for every (lambda, mu) of n. Inequalities are
  // reported, not thrown.
  TheoremReport verify_main_theorem(int n, AnalysisOptions const& options = {});

  // Symmetric functions with coefficients in the z variables: z-monomial
  // (as a multiset of subscripts) -> symmetric function.
  using ZSeries = std::map<Partition, SymFunc>;

  // sum_{r >= 1} L_r[z_1 h_1 + z_2 h_2 + ...], terms of degree <= N.
  ZSeries lie_of_weighted_h_sum(int truncation);
  // sum_{Lyndon w} sum_{m >= 1} z_{w^m} L_m[h_w], terms of degree <= N.
  ZSeries lyndon_lie_sum(int truncation);

}  // namespace facealg

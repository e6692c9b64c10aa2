#pragma once

// Brute-force module structure of the face algebra: characters of
// E_lambda CF_n E_mu and of CF_n E_mu from exact traces, isotypic
// dimensions and composition multiplicities of descent-algebra simples.

#include <map>
#include <vector>

#include "facealg/idempotents.hpp"
#include "facealg/symfunc.hpp"

namespace facealg {

  inline constexpr int kDefaultAnalysisCap = 5;

  enum class Route {
    // Basis {f E_support(f) : support(f) of type mu} of CF_n E_mu; only the
    // left action of E_lambda is computed.
    reduced,
    // T(x) = E_lambda x E_mu on all of CF_n.
    full,
  };

  struct AnalysisOptions {
    Route route = Route::reduced;
    // Largest n accepted; above it std::out_of_range.
    int cap = kDefaultAnalysisCap;
    // Check trace == rank and T^2 = T by exact elimination up to this n.
    int rank_check_up_to = 5;
    int jobs             = 1;
  };

  struct ProjectedSpace {
    int       n = 0;
    Partition left;   // lambda
    Partition right;  // mu
    Route     route = Route::reduced;
    // Trace of w o T per cycle type of w.
    std::map<Partition, Rational> traces;
    Integer                       dimension;
    // -1 when the rank check was skipped.
    long rank = -1;
  };

  // Throws std::logic_error if trace and rank disagree or T is not
  // idempotent.
  ProjectedSpace projected_space(int                    n,
                                 Partition const&       lambda,
                                 Partition const&       mu,
                                 AnalysisOptions const& options = {});

  // sum_rho tr(w_rho o T) p_rho / z_rho. Throws std::logic_error unless
  // Schur positive with integer coefficients.
  SymFunc character_of(ProjectedSpace const& space);

  // ch(E_lambda CF_n E_mu), cached per (n, lambda, mu, route).
  SymFunc projected_character(int                    n,
                              Partition const&       lambda,
                              Partition const&       mu,
                              AnalysisOptions const& options = {});

  // ch(CF_n E_mu) by traces of w o (right multiplication by E_mu). Throws
  // std::logic_error unless it equals #{alpha ~ mu} h_mu. Above
  // rank_check_up_to the diagonal coefficients come from fiber sums of E_mu
  // instead of explicit products.
  SymFunc ch_of_right_module(int                    n,
                             Partition const&       mu,
                             AnalysisOptions const& options = {});

  // dim (CF_n E_mu)^nu by the isotypic projector trace, checked against
  // f^nu #{alpha ~ mu} K_{nu,mu}. Throws std::logic_error on disagreement.
  Integer isotypic_dimension(int                    n,
                             Partition const&       nu,
                             Partition const&       mu,
                             AnalysisOptions const& options = {});

  // [(CF_n E_mu)^nu : M_lambda] = f^nu <s_nu, ch(E_lambda CF_n E_mu)>.
  Integer composition_multiplicity(int                    n,
                                   Partition const&       nu,
                                   Partition const&       mu,
                                   Partition const&       lambda,
                                   AnalysisOptions const& options = {});

  // The unique lambda with [(CF_n)^{1^n} : M_lambda] != 0 (taken at
  // mu = 1^n). Throws std::logic_error if it is not unique.
  Partition sign_isotypic_type(int n, AnalysisOptions const& options = {});

  struct Multiplicity {
    Partition nu;
    Partition lambda;
    Integer   value;
  };

  // Everything known about one (lambda, mu) pair.
  struct RepReport {
    int                       n = 0;
    Partition                 lambda;
    Partition                 mu;
    SymFunc                   ch;
    Integer                   dimension;
    std::map<Partition, Integer> isotypic_dims;  // dim of nu-isotypic part
    std::vector<Multiplicity> multiplicities;    // nonzero only
  };

  RepReport analyze(int                    n,
                    Partition const&       lambda,
                    Partition const&       mu,
                    AnalysisOptions const& options = {});

}  // namespace facealg

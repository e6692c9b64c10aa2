#pragma once

// An S_n-equivariant complete family of primitive orthogonal idempotents
// {E_X : X a set partition of [n]} in the face algebra, with orbit sums
// E_lambda, and exhaustive verification of their defining properties.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "facealg/face.hpp"

namespace facealg {

  struct IdempotentFamily {
    int                                         n = 0;
    std::map<SetPartition, FaceAlgebraElement> by_support;
    std::map<Partition, FaceAlgebraElement>    by_orbit;
  };

  struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool        passed = true;
    // First few violations, human readable.
    std::vector<std::string> violations;
  };

  struct FamilyReport {
    int                      n = 0;
    std::vector<CheckResult> checks;
    bool                     ok() const;
  };

  struct BuildOptions {
    int cap  = kDefaultFaceCap;
    int jobs = 1;
    // Run verify_family after building and throw std::logic_error naming the
    // failed property. Defaults to n <= 5 when unset.
    int verify_up_to = 5;
  };

  // E_X = u_X (1 - sum of E_Y over finer Y), u_X the uniform average of
  // the faces with support X, processed from finest to coarsest. The
  // single-block partition is the maximum of the lattice. Throws
  // std::out_of_range past the cap.
  IdempotentFamily build_family(int n, BuildOptions const& options = {});

  // Shared, lazily built family per n (built with default options and the
  // given cap). Thread safe.
  IdempotentFamily const& family(int n, int cap = kDefaultFaceCap);

  struct VerifyOptions {
    // The basis property of {f E_support(f)} by exact rank; cubic in |F_n|.
    int basis_rank_up_to = 4;
    int jobs             = 1;
  };

  // Completeness, orthogonality, idempotency, equivariance, support and
  // triangularity of every E_X, normalization c_X(E_X) = 1, orbit sums, and
  // the orbit annihilation rule.
  FamilyReport verify_family(IdempotentFamily const& family,
                             VerifyOptions const&    options = {});

  // f E_mu = 0 for every face f and every mu that does not refine the block
  // type of support(f). Lists violations.
  CheckResult orbit_annihilation_check(IdempotentFamily const& family,
                                       int                     jobs = 1);

}  // namespace facealg

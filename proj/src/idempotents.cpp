#include "facealg/idempotents.hpp"

#include <mutex>
#include <stdexcept>

#include "accumulator.hpp"
#include "facealg/linalg.hpp"
#include "facealg/parallel.hpp"

namespace facealg {

  namespace {
    using detail::Accumulator;
    using detail::from_sparse;
    using detail::Sparse;
    using detail::to_sparse;

    constexpr std::size_t kMaxListed = 5;

    void record(CheckResult& check, std::string message) {
      check.passed = false;
      if (check.violations.size() < kMaxListed) {
        check.violations.push_back(std::move(message));
      }
    }
  }  // namespace

  bool FamilyReport::ok() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  IdempotentFamily build_family(int n, BuildOptions const& options) {
    FaceBasis const basis(n, options.cap);
    auto const&     sps = basis.set_partitions();

    std::vector<std::vector<std::size_t>> fiber(sps.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      fiber[basis.support_index(i)].push_back(i);
    }

    // remainder = 1 - sum of the idempotents built so far. Levels run from
    // finest to coarsest; u_X E_Y vanishes unless Y <= X, so one remainder
    // per level serves every X on it.
    Sparse remainder{{basis.index(Face::identity(n)), Rational(1)}};
    std::vector<Sparse> idem(sps.size());

    for (int k = n; k >= 1; --k) {
      std::vector<std::size_t> level;
      for (std::size_t x = 0; x < sps.size(); ++x) {
        if (sps[x].block_count() == k) {
          level.push_back(x);
        }
      }
      Rational const weight = ratio(1, factorial(k));
      parallel_for(level.size(), options.jobs, [&](std::size_t t) {
        std::size_t const x = level[t];
        Accumulator       acc(basis.size());
        for (std::size_t f : fiber[x]) {
          for (auto const& [g, c] : remainder) {
            acc.add(basis.product(f, g), c);
          }
        }
        Sparse e = acc.take();
        for (auto& [i, c] : e) {
          c *= weight;
        }
        idem[x] = std::move(e);
      });
      std::vector<Rational> dense(basis.size());
      for (auto const& [i, c] : remainder) {
        dense[i] = c;
      }
      for (std::size_t x : level) {
        for (auto const& [i, c] : idem[x]) {
          dense[i] -= c;
        }
      }
      remainder.clear();
      for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
          remainder.emplace_back(i, dense[i]);
        }
      }
    }

    IdempotentFamily out;
    out.n = n;
    for (std::size_t x = 0; x < sps.size(); ++x) {
      auto e = from_sparse(basis, idem[x]);
      auto [it, inserted]
          = out.by_orbit.try_emplace(block_size_type(sps[x]), FaceAlgebraElement(n));
      it->second += e;
      out.by_support.emplace(sps[x], std::move(e));
    }

    if (n <= options.verify_up_to) {
      VerifyOptions vo;
      vo.jobs         = options.jobs;
      auto const report = verify_family(out, vo);
      for (auto const& check : report.checks) {
        if (!check.passed) {
          throw std::logic_error("build_family(" + std::to_string(n)
                                 + "): property '" + check.name + "' fails: "
                                 + (check.violations.empty()
                                        ? std::string("?")
                                        : check.violations.front()));
        }
      }
    }
    return out;
  }

  IdempotentFamily const& family(int n, int cap) {
    static std::mutex                                       mutex;
    static std::map<int, std::unique_ptr<IdempotentFamily>> cache;
    std::lock_guard                                         lock(mutex);
    auto&                                                   slot = cache[n];
    if (!slot) {
      BuildOptions options;
      options.cap = cap;
      slot        = std::make_unique<IdempotentFamily>(build_family(n, options));
    }
    return *slot;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  FamilyReport verify_family(IdempotentFamily const& fam,
                             VerifyOptions const&    options) {
    int const       n = fam.n;
    FaceBasis const basis(n, std::max(n, kDefaultFaceCap));
    auto const&     sps = basis.set_partitions();
    std::size_t const nx  = sps.size();
    std::size_t const nf  = basis.size();

    std::vector<Sparse> idem(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      idem[x] = to_sparse(basis, fam.by_support.at(sps[x]));
    }

    FamilyReport report;
    report.n = n;

    CheckResult completeness{"completeness"};
    {
      FaceAlgebraElement total(n);
      for (auto const& [x, e] : fam.by_support) {
        total += e;
      }
      if (!(total == FaceAlgebraElement::identity(n))) {
        record(completeness, "sum of E_X is not the identity face");
      }
    }

    CheckResult support_check{"support below X"};
    CheckResult normalization{"normalization c_X(E_X) = 1"};
    for (std::size_t x = 0; x < nx; ++x) {
      Rational fiber_sum = 0;
      for (auto const& [i, c] : idem[x]) {
        auto const& y = sps[basis.support_index(i)];
        if (!leq(y, sps[x])) {
          record(support_check,
                 "E_" + sps[x].label() + " has term " + basis.face(i).label());
        }
        if (y == sps[x]) {
          fiber_sum += c;
        }
      }
      if (fiber_sum != 1) {
        record(normalization,
               "E_" + sps[x].label() + " fiber sum " + fiber_sum.get_str());
      }
    }

    // right[f][y] = f E_Y for every face f and set partition Y.
    std::vector<std::vector<Sparse>> right(nf, std::vector<Sparse>(nx));
    parallel_for(nf, options.jobs, [&](std::size_t f) {
      Accumulator acc(nf);
      for (std::size_t y = 0; y < nx; ++y) {
        for (auto const& [g, c] : idem[y]) {
          acc.add(basis.product(f, g), c);
        }
        right[f][y] = acc.take();
      }
    });

    CheckResult annihilation{"f E_X = 0 unless support(f) >= X"};
    CheckResult triangular{"f E_support(f) = f + lower terms"};
    for (std::size_t f = 0; f < nf; ++f) {
      std::size_t const sf = basis.support_index(f);
      for (std::size_t y = 0; y < nx; ++y) {
        if (!leq(sps[y], sps[sf]) && !right[f][y].empty()) {
          record(annihilation,
                 basis.face(f).label() + " E_" + sps[y].label() + " != 0");
        }
      }
      bool ok = false;
      for (auto const& [g, c] : right[f][sf]) {
        std::size_t const sg = basis.support_index(g);
        if (g == f) {
          ok = c == 1;
        } else if (sg == sf || !leq(sps[sg], sps[sf])) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        record(triangular, basis.face(f).label());
      }
    }

    CheckResult idempotency{"idempotency"};
    CheckResult orthogonality{"orthogonality"};
    std::vector<std::vector<std::string>> bad_pairs(nx);
    std::vector<char>                     bad_idem(nx, 0);
    parallel_for(nx, options.jobs, [&](std::size_t x) {
      Accumulator acc(nf);
      for (std::size_t y = 0; y < nx; ++y) {
        for (auto const& [f, c] : idem[x]) {
          for (auto const& [g, d] : right[f][y]) {
            acc.add(g, c * d);
          }
        }
        Sparse const prod = acc.take();
        if (x == y) {
          bad_idem[x] = prod != idem[x];
        } else if (!prod.empty()) {
          bad_pairs[x].push_back("E_" + sps[x].label() + " E_" + sps[y].label());
        }
      }
    });
    for (std::size_t x = 0; x < nx; ++x) {
      if (bad_idem[x]) {
        record(idempotency, "E_" + sps[x].label());
      }
      for (auto& msg : bad_pairs[x]) {
        record(orthogonality, msg + " != 0");
      }
    }

    CheckResult equivariance{"equivariance"};
    for (int i = 1; i < n; ++i) {
      auto const s = Permutation::adjacent_transposition(n, i);
      for (auto const& [x, e] : fam.by_support) {
        if (!(act_linear(s, e) == fam.by_support.at(act(s, x)))) {
          record(equivariance, "s_" + std::to_string(i) + " on E_" + x.label());
        }
      }
    }

    CheckResult orbit_sums{"orbit sums"};
    for (auto const& [lambda, e] : fam.by_orbit) {
      FaceAlgebraElement total(n);
      for (auto const& [x, ex] : fam.by_support) {
        if (block_size_type(x) == lambda) {
          total += ex;
        }
      }
      if (!(total == e)) {
        record(orbit_sums, "E_" + lambda.label());
      }
    }

    report.checks = {completeness,  support_check, normalization,
                     annihilation,  triangular,    idempotency,
                     orthogonality, equivariance,  orbit_sums};

    if (n <= options.basis_rank_up_to) {
      CheckResult basis_check{"{f E_support(f)} is a basis"};
      Matrix      rows(nf, std::vector<Rational>(nf));
      for (std::size_t f = 0; f < nf; ++f) {
        for (auto const& [g, c] : right[f][basis.support_index(f)]) {
          rows[f][g] = c;
        }
      }
      std::size_t const r = rank(std::move(rows));
      if (r != nf) {
        record(basis_check, "rank " + std::to_string(r) + " of "
                                + std::to_string(nf));
      }
      report.checks.push_back(basis_check);
    }

    report.checks.push_back(orbit_annihilation_check(fam, options.jobs));
    return report;
  }

  CheckResult orbit_annihilation_check(IdempotentFamily const& fam, int jobs) {
    int const       n = fam.n;
    FaceBasis const basis(n, std::max(n, kDefaultFaceCap));
    std::vector<Partition>  types;
    std::vector<Sparse>     orbit;
    for (auto const& [mu, e] : fam.by_orbit) {
      types.push_back(mu);
      orbit.push_back(to_sparse(basis, e));
    }
    std::vector<std::vector<std::string>> bad(basis.size());
    parallel_for(basis.size(), jobs, [&](std::size_t f) {
      Partition const type = block_size_type(support(basis.face(f)));
      Accumulator     acc(basis.size());
      for (std::size_t m = 0; m < types.size(); ++m) {
        if (refines(types[m], type)) {
          continue;
        }
        for (auto const& [g, c] : orbit[m]) {
          acc.add(basis.product(f, g), c);
        }
        if (!acc.take().empty()) {
          bad[f].push_back(basis.face(f).label() + " E_" + types[m].label()
                           + " != 0");
        }
      }
    });
    CheckResult out{"orbit annihilation"};
    for (auto const& msgs : bad) {
      for (auto const& msg : msgs) {
        record(out, msg);
      }
    }
    return out;
  }

}  // namespace facealg

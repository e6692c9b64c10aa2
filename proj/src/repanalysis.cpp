#include "facealg/repanalysis.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "accumulator.hpp"
#include "facealg/characters.hpp"
#include "facealg/linalg.hpp"
#include "facealg/parallel.hpp"

namespace facealg {

  namespace {
    using detail::Accumulator;
    using detail::lookup;
    using detail::Sparse;
    using detail::to_sparse;

    // Data shared by every computation at one n.
    struct Context {
      explicit Context(int n, int cap)
          : basis(n, std::max(cap, n)), fam(&family(n, std::max(cap, n))) {
        for (auto const& [lambda, e] : fam->by_orbit) {
          orbit.emplace(lambda, to_sparse(basis, e));
        }
        for (auto const& cls : conjugacy_class_data(n)) {
          // Index of w^{-1} f for every face f.
          auto const       inv = cls.representative.inverse();
          std::vector<std::size_t> perm(basis.size());
          for (std::size_t i = 0; i < basis.size(); ++i) {
            perm[i] = basis.index(act(inv, basis.face(i)));
          }
          classes.emplace_back(cls.type, std::move(perm));
        }
      }

      FaceBasis                                              basis;
      IdempotentFamily const*                                fam;
      std::map<Partition, Sparse>                            orbit;
      std::vector<std::pair<Partition, std::vector<std::size_t>>> classes;
    };

    Context const& context(int n, int cap) {
      static std::mutex                                mutex;
      static std::map<int, std::unique_ptr<Context>>   cache;
      std::lock_guard                                  lock(mutex);
      auto&                                            slot = cache[n];
      if (!slot) {
        slot = std::make_unique<Context>(n, cap);
      }
      return *slot;
    }

    void require_partition_of(int n, Partition const& p, char const* what) {
      if (p.size() != n) {
        throw std::invalid_argument(std::string(what) + " = " + p.label()
                                    + " is not a partition of "
                                    + std::to_string(n));
      }
    }

    void require_cap(int n, AnalysisOptions const& options) {
      if (n < 1) {
        throw std::invalid_argument("n must be positive");
      }
      if (n > options.cap) {
        throw std::out_of_range("n = " + std::to_string(n)
                                + " exceeds the analysis cap "
                                + std::to_string(options.cap));
      }
    }

    // Trace, rank and idempotency of one block given as columns.
    void check_block(std::vector<std::size_t> const& index,
                     std::vector<Sparse> const&      columns,
                     long&                           rank_total,
                     std::string const&              where) {
      std::size_t const m = index.size();
      std::map<std::size_t, std::size_t> pos;
      for (std::size_t i = 0; i < m; ++i) {
        pos.emplace(index[i], i);
      }
      Matrix a(m, std::vector<Rational>(m));
      for (std::size_t j = 0; j < m; ++j) {
        for (auto const& [g, c] : columns[j]) {
          auto it = pos.find(g);
          if (it != pos.end()) {
            a[it->second][j] = c;
          }
        }
      }
      if (matmul(a, a) != a) {
        throw std::logic_error("projector is not idempotent: " + where);
      }
      rank_total += static_cast<long>(rank(a));
    }

    ProjectedSpace reduced_space(Context const&         ctx,
                                 Partition const&       lambda,
                                 Partition const&       mu,
                                 AnalysisOptions const& options) {
      auto const& basis = ctx.basis;
      auto const& sps   = basis.set_partitions();
      auto const& e     = ctx.orbit.at(lambda);

      std::vector<std::size_t> faces;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (block_size_type(sps[basis.support_index(i)]) == mu) {
          faces.push_back(i);
        }
      }
      // E_lambda (f E_X) = sum_g c_g (g E_X) over g with support X, where
      // E_lambda f = sum_g c_g g; the other terms lie strictly below X.
      std::vector<Sparse> columns(faces.size());
      parallel_for(faces.size(), options.jobs, [&](std::size_t t) {
        std::size_t const f  = faces[t];
        std::size_t const sf = basis.support_index(f);
        Accumulator       acc(basis.size());
        for (auto const& [g, c] : e) {
          acc.add(basis.product(g, f), c);
        }
        Sparse column;
        for (auto& [g, c] : acc.take()) {
          std::size_t const sg = basis.support_index(g);
          if (sg == sf) {
            column.emplace_back(g, std::move(c));
          } else if (!leq(sps[sg], sps[sf])) {
            throw std::logic_error("E_lambda f leaves the support interval");
          }
        }
        columns[t] = std::move(column);
      });

      ProjectedSpace out;
      out.n     = basis.degree();
      out.left  = lambda;
      out.right = mu;
      out.route = Route::reduced;
      for (auto const& [rho, perm] : ctx.classes) {
        Rational tr = 0;
        for (std::size_t t = 0; t < faces.size(); ++t) {
          tr += lookup(columns[t], perm[faces[t]]);
        }
        out.traces.emplace(rho, tr);
      }

      if (out.n <= options.rank_check_up_to) {
        std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<Sparse>>>
            blocks;
        for (std::size_t t = 0; t < faces.size(); ++t) {
          auto& blk = blocks[basis.support_index(faces[t])];
          blk.first.push_back(faces[t]);
          blk.second.push_back(columns[t]);
        }
        long r = 0;
        for (auto const& [x, blk] : blocks) {
          check_block(blk.first, blk.second, r,
                      "E_" + lambda.label() + " on " + sps[x].label());
        }
        out.rank = r;
      }
      return out;
    }

    ProjectedSpace full_space(Context const&         ctx,
                              Partition const&       lambda,
                              Partition const&       mu,
                              AnalysisOptions const& options) {
      auto const& basis = ctx.basis;
      auto const& el    = ctx.orbit.at(lambda);
      auto const& em    = ctx.orbit.at(mu);

      std::vector<Sparse> columns(basis.size());
      parallel_for(basis.size(), options.jobs, [&](std::size_t x) {
        Accumulator acc(basis.size());
        for (auto const& [g, c] : el) {
          acc.add(basis.product(g, x), c);
        }
        Sparse const left = acc.take();
        for (auto const& [y, a] : left) {
          for (auto const& [g, c] : em) {
            acc.add(basis.product(y, g), a * c);
          }
        }
        columns[x] = acc.take();
      });

      ProjectedSpace out;
      out.n     = basis.degree();
      out.left  = lambda;
      out.right = mu;
      out.route = Route::full;
      for (auto const& [rho, perm] : ctx.classes) {
        Rational tr = 0;
        for (std::size_t x = 0; x < basis.size(); ++x) {
          tr += lookup(columns[x], perm[x]);
        }
        out.traces.emplace(rho, tr);
      }
      if (out.n <= std::min(options.rank_check_up_to, 4)) {
        std::vector<std::size_t> all(basis.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
          all[i] = i;
        }
        long r = 0;
        check_block(all, columns, r, "E_" + lambda.label() + " . E_" + mu.label());
        out.rank = r;
      }
      return out;
    }

    using SpaceKey = std::tuple<int, Partition, Partition, Route>;
    std::mutex                         space_mutex;
    std::map<SpaceKey, ProjectedSpace> space_cache;

    std::mutex                               right_mutex;
    std::map<std::pair<int, Partition>, SymFunc> right_cache;
  }  // namespace

  ProjectedSpace projected_space(int                    n,
                                 Partition const&       lambda,
                                 Partition const&       mu,
                                 AnalysisOptions const& options) {
    require_cap(n, options);
    require_partition_of(n, lambda, "lambda");
    require_partition_of(n, mu, "mu");
    SpaceKey const key{n, lambda, mu, options.route};
    {
      std::lock_guard lock(space_mutex);
      auto            it = space_cache.find(key);
      if (it != space_cache.end()) {
        return it->second;
      }
    }
    Context const& ctx = context(n, options.cap);
    ProjectedSpace out = options.route == Route::reduced
                             ? reduced_space(ctx, lambda, mu, options)
                             : full_space(ctx, lambda, mu, options);
    out.dimension = 0;
    Rational const dim = out.traces.at(Partition::rectangle(1, n));
    if (!is_integer(dim) || dim < 0) {
      throw std::logic_error("projected_space: trace at identity is "
                             + dim.get_str());
    }
    out.dimension = dim.get_num();
    if (out.rank >= 0 && Integer(out.rank) != out.dimension) {
      throw std::logic_error("projected_space: trace " + out.dimension.get_str()
                             + " != rank " + std::to_string(out.rank));
    }
    std::lock_guard lock(space_mutex);
    space_cache.emplace(key, out);
    return out;
  }

  SymFunc character_of(ProjectedSpace const& space) {
    SymFunc ch = frobenius_from_traces(space.n, space.traces);
    if (!is_schur_positive_integral(ch)) {
      throw std::logic_error("character_of: E_" + space.left.label() + " CF E_"
                             + space.right.label()
                             + " is not a nonnegative integer Schur combination");
    }
    return ch;
  }

  SymFunc projected_character(int                    n,
                              Partition const&       lambda,
                              Partition const&       mu,
                              AnalysisOptions const& options) {
    return character_of(projected_space(n, lambda, mu, options));
  }

  SymFunc ch_of_right_module(int                    n,
                             Partition const&       mu,
                             AnalysisOptions const& options) {
    require_cap(n, options);
    require_partition_of(n, mu, "mu");
    {
      std::lock_guard lock(right_mutex);
      auto            it = right_cache.find({n, mu});
      if (it != right_cache.end()) {
        return it->second;
      }
    }
    Context const& ctx   = context(n, options.cap);
    auto const&    basis = ctx.basis;
    auto const&    e     = ctx.orbit.at(mu);
    std::map<Partition, Rational> traces;
    if (n <= options.rank_check_up_to) {
      std::vector<Sparse> columns(basis.size());
      parallel_for(basis.size(), options.jobs, [&](std::size_t f) {
        Accumulator acc(basis.size());
        for (auto const& [g, c] : e) {
          acc.add(basis.product(f, g), c);
        }
        columns[f] = acc.take();
      });
      for (auto const& [rho, perm] : ctx.classes) {
        Rational tr = 0;
        for (std::size_t f = 0; f < basis.size(); ++f) {
          tr += lookup(columns[f], perm[f]);
        }
        traces.emplace(rho, tr);
      }
    } else {
      // fg has as many blocks as f only when fg = f, which happens exactly
      // when support(g) >= support(f). So the coefficient of w^{-1} f in
      // f E_mu vanishes unless w fixes f, and is then the sum of the
      // coefficients of E_mu over faces g with support(g) >= support(f).
      auto const&           sps = basis.set_partitions();
      std::vector<Rational> fiber(sps.size());
      for (auto const& [g, c] : e) {
        fiber[basis.support_index(g)] += c;
      }
      std::vector<Rational> above(sps.size());
      for (std::size_t x = 0; x < sps.size(); ++x) {
        for (std::size_t y = 0; y < sps.size(); ++y) {
          if (fiber[y] != 0 && leq(sps[x], sps[y])) {
            above[x] += fiber[y];
          }
        }
      }
      for (auto const& [rho, perm] : ctx.classes) {
        Rational tr = 0;
        for (std::size_t f = 0; f < basis.size(); ++f) {
          if (perm[f] == f) {
            tr += above[basis.support_index(f)];
          }
        }
        traces.emplace(rho, tr);
      }
    }
    SymFunc const ch       = frobenius_from_traces(n, traces);
    SymFunc const expected = h_of(mu) * Rational(count_compositions_rearranging_to(mu));
    if (ch != expected) {
      throw std::logic_error("ch(CF_n E_" + mu.label() + ") = " + format_schur(ch)
                             + ", expected " + format_schur(expected));
    }
    std::lock_guard lock(right_mutex);
    right_cache.emplace(std::make_pair(n, mu), ch);
    return ch;
  }

  Integer isotypic_dimension(int                    n,
                             Partition const&       nu,
                             Partition const&       mu,
                             AnalysisOptions const& options) {
    require_partition_of(n, nu, "nu");
    SymFunc const ch = ch_of_right_module(n, mu, options);
    // (f^nu / n!) sum_w chi^nu(w) tr(w o R_mu), grouped by class.
    Rational trace = 0;
    for (auto const& cls : conjugacy_class_data(n)) {
      trace += Rational(cls.size) * Rational(character_value(nu, cls.type))
               * ch.coefficient(cls.type) * Rational(z_coefficient(cls.type));
    }
    trace *= ratio(dimension(nu), factorial(n));
    Rational const closed = Rational(dimension(nu))
                            * Rational(count_compositions_rearranging_to(mu))
                            * hall_inner(s(nu), h_of(mu));
    if (trace != closed) {
      throw std::logic_error("isotypic_dimension: projector trace "
                             + trace.get_str() + " != closed form "
                             + closed.get_str());
    }
    return trace.get_num();
  }

  Integer composition_multiplicity(int                    n,
                                   Partition const&       nu,
                                   Partition const&       mu,
                                   Partition const&       lambda,
                                   AnalysisOptions const& options) {
    require_partition_of(n, nu, "nu");
    Rational const value = Rational(dimension(nu))
                           * hall_inner(s(nu), projected_character(n, lambda, mu, options));
    if (!is_integer(value) || value < 0) {
      throw std::logic_error("composition_multiplicity: " + value.get_str());
    }
    return value.get_num();
  }

  Partition sign_isotypic_type(int n, AnalysisOptions const& options) {
    Partition const ones = Partition::rectangle(1, n);
    Partition       found;
    int             hits = 0;
    for (auto const& lambda : partitions_of(n)) {
      Integer const m = composition_multiplicity(n, ones, ones, lambda, options);
      if (m != 0) {
        ++hits;
        found = lambda;
        if (m != 1) {
          throw std::logic_error("sign_isotypic_type: multiplicity "
                                 + m.get_str() + " at " + lambda.label());
        }
      }
    }
    if (hits != 1) {
      throw std::logic_error("sign_isotypic_type: " + std::to_string(hits)
                             + " simple labels");
    }
    return found;
  }

  RepReport analyze(int                    n,
                    Partition const&       lambda,
                    Partition const&       mu,
                    AnalysisOptions const& options) {
    RepReport out;
    out.n      = n;
    out.lambda = lambda;
    out.mu     = mu;
    auto const space = projected_space(n, lambda, mu, options);
    out.ch           = character_of(space);
    out.dimension    = space.dimension;
    for (auto const& nu : partitions_of(n)) {
      Integer const fnu = dimension(nu);
      Rational const m  = hall_inner(s(nu), out.ch);
      if (m != 0) {
        Rational const value = m * Rational(fnu);
        out.isotypic_dims.emplace(nu, value.get_num());
        out.multiplicities.push_back({nu, lambda, value.get_num()});
      }
    }
    return out;
  }

}  // namespace facealg

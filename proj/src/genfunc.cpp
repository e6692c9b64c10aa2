#include "facealg/genfunc.hpp"

#include <stdexcept>

#include "facealg/lyndon.hpp"
#include "facealg/parallel.hpp"

namespace facealg {

  namespace {
    // Sorted letters of w repeated `times` times.
    Partition z_index(Word const& w, int times) {
      return w.power(times).sorted();
    }

    void accumulate(std::map<Partition, SymFunc>& into,
                    Partition const&              key,
                    SymFunc const&                value) {
      if (value.is_zero()) {
        return;
      }
      auto [it, inserted] = into.try_emplace(key, value);
      if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
          into.erase(it);
        }
      }
    }

    ZSeries multiply(ZSeries const& a, ZSeries const& b, int truncation) {
      ZSeries out;
      for (auto const& [za, fa] : a) {
        for (auto const& [zb, fb] : b) {
          if (za.size() + zb.size() > truncation) {
            continue;
          }
          accumulate(out, za + zb, facealg::multiply(fa, fb, truncation));
        }
      }
      return out;
    }

    // p_k[z-monomial] raises every variable to the k-th power.
    Partition power_of(Partition const& z, int k) {
      std::vector<int> parts;
      for (int a : z) {
        parts.insert(parts.end(), static_cast<std::size_t>(k), a);
      }
      return Partition::from_unsorted(std::move(parts));
    }

    // f[G] for f in the power-sum basis and G a z-series with no constant
    // term.
    ZSeries plethysm(SymFunc const& f, ZSeries const& g, int truncation) {
      std::map<int, ZSeries> pk;
      auto power_sum = [&](int k) -> ZSeries const& {
        auto it = pk.find(k);
        if (it == pk.end()) {
          ZSeries out;
          for (auto const& [z, value] : g) {
            if (z.size() * k <= truncation) {
              accumulate(out, power_of(z, k), facealg::plethysm(p(Partition{k}), value));
            }
          }
          it = pk.emplace(k, std::move(out)).first;
        }
        return it->second;
      };
      ZSeries out;
      for (auto const& [rho, c] : f.terms()) {
        if (rho.size() > truncation) {
          continue;
        }
        ZSeries term{{Partition{}, SymFunc(c)}};
        for (int k : rho) {
          term = multiply(term, power_sum(k), truncation);
        }
        for (auto const& [z, value] : term) {
          accumulate(out, z, value);
        }
      }
      return out;
    }
  }  // namespace

  BivariateSeries BivariateSeries::one(int truncation) {
    BivariateSeries out(truncation);
    out.add_term({}, {}, SymFunc(Rational(1)));
    return out;
  }

  SymFunc BivariateSeries::coefficient(Partition const& lambda, Partition const& mu) const {
    auto it = _terms.find({lambda, mu});
    return it == _terms.end() ? SymFunc() : it->second;
  }

  void BivariateSeries::add_term(Partition const& y, Partition const& z, SymFunc const& value) {
    if (z.size() > _truncation || value.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace({y, z}, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  BivariateSeries BivariateSeries::operator*(BivariateSeries const& other) const {
    int const       n = std::min(_truncation, other._truncation);
    BivariateSeries out(n);
    for (auto const& [ka, fa] : _terms) {
      for (auto const& [kb, fb] : other._terms) {
        if (ka.second.size() + kb.second.size() > n) {
          continue;
        }
        out.add_term(ka.first + kb.first, ka.second + kb.second, multiply(fa, fb, n));
      }
    }
    return out;
  }

  BivariateSeries lyndon_factor(Word const& w, int truncation) {
    BivariateSeries out = BivariateSeries::one(truncation);
    int const       len = w.size();
    SymFunc const   hw  = h_of(w);
    for (int r = 1; r * len <= truncation; ++r) {
      for (auto const& rho : partitions_of(r)) {
        out.add_term(rho.scaled(len), z_index(w, r),
                     plethysm(higher_lie(rho), hw, truncation));
      }
    }
    return out;
  }

  BivariateSeries rhs_series(int truncation, int cap, int jobs) {
    if (truncation < 1) {
      throw std::invalid_argument("series truncation must be positive");
    }
    if (truncation > cap) {
      throw std::out_of_range("series truncation " + std::to_string(truncation)
                              + " exceeds the cap " + std::to_string(cap));
    }
    auto const                   words = lyndon_words_up_to(truncation);
    std::vector<BivariateSeries> factors(words.size(), BivariateSeries(truncation));
    // higher_lie is cached; warm it before the workers share it.
    for (int r = 1; r <= truncation; ++r) {
      for (auto const& rho : partitions_of(r)) {
        higher_lie(rho);
      }
    }
    parallel_for(words.size(), jobs, [&](std::size_t i) {
      factors[i] = lyndon_factor(words[i], truncation);
    });
    BivariateSeries out = BivariateSeries::one(truncation);
    for (auto const& f : factors) {
      out = out * f;
    }
    return out;
  }

  Integer cartan_via_series(BivariateSeries const& series,
                            Partition const&       lambda,
                            Partition const&       mu) {
    if (lambda.size() != mu.size()) {
      throw std::invalid_argument("cartan: |lambda| != |mu|");
    }
    Rational const value = hall_inner(h(mu.size()), series.coefficient(lambda, mu));
    if (!is_integer(value) || value < 0) {
      throw std::logic_error("cartan_via_series: " + value.get_str());
    }
    return value.get_num();
  }

  Integer cartan_via_count(Partition const& lambda, Partition const& mu) {
    if (lambda.size() != mu.size()) {
      throw std::invalid_argument("cartan: |lambda| != |mu|");
    }
    Integer count = 0;
    for (auto const& alpha : compositions_rearranging_to(mu)) {
      if (lyndon_type(alpha) == lambda) {
        ++count;
      }
    }
    return count;
  }

  bool TheoremReport::ok() const {
    for (auto const& pair : pairs) {
      if (!pair.equal) {
        return false;
      }
    }
    return true;
  }

  TheoremReport verify_main_theorem(int n, AnalysisOptions const& options) {
    if (n > options.cap) {
      throw std::out_of_range("n = " + std::to_string(n) + " exceeds the analysis cap "
                              + std::to_string(options.cap));
    }
    BivariateSeries const series = rhs_series(n, std::max(n, kDefaultSeriesCap), options.jobs);
    TheoremReport         report;
    report.n = n;
    for (auto const& lambda : partitions_of(n)) {
      for (auto const& mu : partitions_of(n)) {
        TheoremCheck check;
        check.lambda      = lambda;
        check.mu          = mu;
        check.brute_force = projected_character(n, lambda, mu, options);
        check.series      = series.coefficient(lambda, mu);
        check.equal       = check.brute_force == check.series;
        report.pairs.push_back(std::move(check));
      }
    }
    return report;
  }

  ZSeries lie_of_weighted_h_sum(int truncation) {
    ZSeries g;
    for (int i = 1; i <= truncation; ++i) {
      g.emplace(Partition{i}, h(i));
    }
    ZSeries out;
    for (int r = 1; r <= truncation; ++r) {
      for (auto const& [z, value] : plethysm(lie(r), g, truncation)) {
        accumulate(out, z, value);
      }
    }
    return out;
  }

  ZSeries lyndon_lie_sum(int truncation) {
    ZSeries out;
    for (auto const& w : lyndon_words_up_to(truncation)) {
      SymFunc const hw = h_of(w);
      for (int m = 1; m * w.size() <= truncation; ++m) {
        accumulate(out, z_index(w, m), plethysm(lie(m), hw, truncation));
      }
    }
    return out;
  }

}  // namespace facealg

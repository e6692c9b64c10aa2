#include "facealg/symfunc.hpp"

#include <mutex>
#include <stdexcept>

#include "facealg/characters.hpp"

namespace facealg {

  ////////////////////////////////////////////////////////////////////////
  // SymFunc
  ////////////////////////////////////////////////////////////////////////

  SymFunc::SymFunc(Rational const& c) {
    add_term(Partition(), c);
  }

  Rational SymFunc::coefficient(Partition const& rho) const {
    auto it = _terms.find(rho);
    return it == _terms.end() ? Rational(0) : it->second;
  }

  void SymFunc::add_term(Partition const& rho, Rational const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(rho, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  SymFunc SymFunc::homogeneous(int d) const {
    SymFunc out;
    for (auto const& [rho, c] : _terms) {
      if (rho.size() == d) {
        out._terms.emplace_hint(out._terms.end(), rho, c);
      }
    }
    return out;
  }

  SymFunc SymFunc::truncated(int max_degree) const {
    SymFunc out;
    for (auto const& [rho, c] : _terms) {
      if (rho.size() <= max_degree) {
        out._terms.emplace_hint(out._terms.end(), rho, c);
      }
    }
    return out;
  }

  int SymFunc::max_degree() const {
    int out = -1;
    for (auto const& [rho, c] : _terms) {
      out = std::max(out, rho.size());
    }
    return out;
  }

  SymFunc& SymFunc::operator+=(SymFunc const& other) {
    for (auto const& [rho, c] : other._terms) {
      add_term(rho, c);
    }
    return *this;
  }

  SymFunc& SymFunc::operator-=(SymFunc const& other) {
    for (auto const& [rho, c] : other._terms) {
      add_term(rho, -c);
    }
    return *this;
  }

  SymFunc SymFunc::operator+(SymFunc const& other) const {
    SymFunc out(*this);
    out += other;
    return out;
  }

  SymFunc SymFunc::operator-(SymFunc const& other) const {
    SymFunc out(*this);
    out -= other;
    return out;
  }

  SymFunc SymFunc::operator-() const {
    return *this * Rational(-1);
  }

  SymFunc SymFunc::operator*(Rational const& c) const {
    SymFunc out;
    if (c == 0) {
      return out;
    }
    for (auto const& [rho, a] : _terms) {
      out._terms.emplace_hint(out._terms.end(), rho, a * c);
    }
    return out;
  }

  SymFunc SymFunc::operator*(SymFunc const& other) const {
    return multiply(*this, other);
  }

  ////////////////////////////////////////////////////////////////////////
  // Bases
  ////////////////////////////////////////////////////////////////////////

  SymFunc p(Partition const& rho) {
    SymFunc out;
    out.add_term(rho, 1);
    return out;
  }

  SymFunc h(int k) {
    SymFunc out;
    for (auto const& rho : partitions_of(k)) {
      out.add_term(rho, ratio(1, z_coefficient(rho)));
    }
    return out;
  }

  SymFunc h_of(Partition const& mu) {
    SymFunc out(1);
    for (int part : mu) {
      out = multiply(out, h(part));
    }
    return out;
  }

  SymFunc h_of(Composition const& alpha) {
    return h_of(alpha.sorted());
  }

  SymFunc s(Partition const& lambda) {
    SymFunc out;
    for (auto const& rho : partitions_of(lambda.size())) {
      out.add_term(rho,
                   ratio(character_value(lambda, rho), z_coefficient(rho)));
    }
    return out;
  }

  SymFunc multiply(SymFunc const& f, SymFunc const& g, int max_degree) {
    SymFunc  out;
    Rational prod;
    for (auto const& [rho, a] : f.terms()) {
      for (auto const& [sigma, b] : g.terms()) {
        if (max_degree != kNoTruncation && rho.size() + sigma.size() > max_degree) {
          continue;
        }
        prod = a * b;
        out.add_term(rho + sigma, prod);
      }
    }
    return out;
  }

  Rational hall_inner(SymFunc const& f, SymFunc const& g) {
    Rational out = 0;
    for (auto const& [rho, a] : f.terms()) {
      auto b = g.coefficient(rho);
      if (b != 0) {
        out += a * b * Rational(z_coefficient(rho));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Plethysm
  ////////////////////////////////////////////////////////////////////////

  SymFunc plethysm(SymFunc const& f, SymFunc const& g, int max_degree) {
    // p_r[g]: rescale every power-sum index of g by r.
    std::map<int, SymFunc> pr;
    auto                   p_r_of_g = [&](int r) -> SymFunc const& {
      auto it = pr.find(r);
      if (it == pr.end()) {
        SymFunc out;
        for (auto const& [sigma, c] : g.terms()) {
          if (max_degree == kNoTruncation || sigma.size() * r <= max_degree) {
            out.add_term(sigma.scaled(r), c);
          }
        }
        it = pr.emplace(r, std::move(out)).first;
      }
      return it->second;
    };
    SymFunc out;
    for (auto const& [rho, c] : f.terms()) {
      SymFunc term(c);
      for (int r : rho) {
        term = multiply(term, p_r_of_g(r), max_degree);
        if (term.is_zero()) {
          break;
        }
      }
      out += term;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Higher Lie characters
  ////////////////////////////////////////////////////////////////////////

  int mobius(int n) {
    if (n < 1) {
      throw std::invalid_argument("mobius: n must be positive");
    }
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) {
          return 0;
        }
        result = -result;
      }
    }
    return n > 1 ? -result : result;
  }

  SymFunc lie(int n) {
    SymFunc out;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0 && mobius(d) != 0) {
        out.add_term(Partition::rectangle(d, n / d), make_rational(mobius(d), n));
      }
    }
    return out;
  }

  namespace {
    std::mutex                   lie_mutex;
    std::map<Partition, SymFunc> lie_cache;
  }  // namespace

  SymFunc higher_lie(Partition const& lambda) {
    {
      std::lock_guard lock(lie_mutex);
      auto            it = lie_cache.find(lambda);
      if (it != lie_cache.end()) {
        return it->second;
      }
    }
    SymFunc out(1);
    for (std::size_t i = 0; i < lambda.parts().size();) {
      std::size_t j = i;
      while (j < lambda.parts().size() && lambda[j] == lambda[i]) {
        ++j;
      }
      out = multiply(out, plethysm(h(static_cast<int>(j - i)), lie(lambda[i])));
      i = j;
    }
    if (!is_schur_positive_integral(out)) {
      throw std::logic_error("higher_lie: L_" + lambda.label()
                             + " is not a nonnegative integer Schur combination");
    }
    std::lock_guard lock(lie_mutex);
    lie_cache.emplace(lambda, out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Expansions
  ////////////////////////////////////////////////////////////////////////

  Rational monomial_coefficient(SymFunc const& f, Partition const& nu) {
    return hall_inner(f.homogeneous(nu.size()), h_of(nu));
  }

  std::map<Partition, Rational> schur_expand(SymFunc const& f) {
    // <p_rho, s_lambda> = chi^lambda(rho).
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
    for (auto const& [rho, c] : f.terms()) {
      by_degree[rho.size()].emplace_back(rho, c);
    }
    std::map<Partition, Rational> out;
    for (auto const& [d, terms] : by_degree) {
      for (auto const& lambda : partitions_of(d)) {
        Rational sum = 0;
        for (auto const& [rho, c] : terms) {
          sum += c * Rational(character_value(lambda, rho));
        }
        if (sum != 0) {
          out.emplace(lambda, sum);
        }
      }
    }
    return out;
  }

  SymFunc from_schur(std::map<Partition, Rational> const& coefficients) {
    SymFunc out;
    for (auto const& [lambda, c] : coefficients) {
      out += s(lambda) * c;
    }
    return out;
  }

  bool is_schur_positive_integral(SymFunc const& f) {
    for (auto const& [lambda, c] : schur_expand(f)) {
      if (c < 0 || !is_integer(c)) {
        return false;
      }
    }
    return true;
  }

  SymFunc frobenius_from_traces(int n,
                                std::map<Partition, Rational> const& traces) {
    SymFunc out;
    for (auto const& rho : partitions_of(n)) {
      auto it = traces.find(rho);
      if (it == traces.end()) {
        throw std::invalid_argument("frobenius_from_traces: missing class "
                                    + rho.label());
      }
      out.add_term(rho, it->second / Rational(z_coefficient(rho)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  std::string format_expansion(std::map<Partition, Rational> const& coefficients,
                               char                                 basis) {
    if (coefficients.empty()) {
      return "0";
    }
    // Largest partitions first, matching the enumeration order.
    std::string out;
    bool        first = true;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      auto const& [lambda, c] = *it;
      Rational mag           = abs(c);
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (mag != 1) {
        out += mag.get_str() + "*";
      }
      out += basis;
      out += '[';
      for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        out += (i > 0 ? "," : "") + std::to_string(lambda[i]);
      }
      out += ']';
    }
    return out;
  }

  std::string format_schur(SymFunc const& f) {
    return format_expansion(schur_expand(f), 's');
  }

  std::string format_power_sum(SymFunc const& f) {
    return format_expansion(
        std::map<Partition, Rational>(f.terms().begin(), f.terms().end()), 'p');
  }

}  // namespace facealg

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "facealg/characters.hpp"
#include "facealg/cli.hpp"
#include "facealg/genfunc.hpp"
#include "facealg/idempotents.hpp"
#include "facealg/lyndon.hpp"
#include "facealg/repanalysis.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace facealg;

namespace {

  // Collects failure messages; a criterion passes when none are recorded.
  class Failures {
   public:
    void expect(bool ok, std::string const& what) {
      if (!ok) {
        _messages.push_back(what);
      }
    }
    bool empty() const {
      return _messages.empty();
    }
    std::string summary() const {
      std::string out = _messages.front();
      if (_messages.size() > 1) {
        out += " (and " + std::to_string(_messages.size() - 1) + " more)";
      }
      return out;
    }

   private:
    std::vector<std::string> _messages;
  };

  std::string run_cli(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "facealg");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
  }

  void main_theorem(Failures& f) {
    for (int n = 1; n <= 5; ++n) {
      auto const report = verify_main_theorem(n);
      for (auto const& c : report.pairs) {
        f.expect(c.equal && c.brute_force == c.series,
                 "n = " + std::to_string(n) + ", lambda = " + c.lambda.label()
                     + ", mu = " + c.mu.label());
      }
      f.expect(report.pairs.size() == partitions_of(n).size() * partitions_of(n).size(),
               "pair count at n = " + std::to_string(n));
    }
  }

  void n4_table(Failures& f) {
    // Every cell of the CSV output of `table --n 4`.
    int               code = 0;
    std::string const csv  = run_cli({"table", "--n", "4", "--format", "csv"}, code);
    f.expect(code == 0, "table exit code");
    std::map<std::pair<Partition, Partition>, golden::Cell> seen;
    std::istringstream                                      lines(csv);
    std::string                                             line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      std::istringstream row(line);
      std::string        nu, mu, lambda, value;
      std::getline(row, nu, ',');
      std::getline(row, mu, ',');
      std::getline(row, lambda, ',');
      std::getline(row, value, ',');
      auto to_partition = [](std::string const& label) {
        std::vector<int> parts;
        for (char c : label) {
          parts.push_back(c - '0');
        }
        return Partition(parts);
      };
      seen[{to_partition(nu), to_partition(mu)}][to_partition(lambda)] = std::stoi(value);
    }
    f.expect(seen == golden::n4_table(), "table --n 4 differs from the reference grid");
    f.expect(composition_multiplicity(4, {3, 1}, {2, 1, 1}, {4}) == 6, "[(CF_4 E_211)^31 : M_4] != 6");
    f.expect(dimension({3, 1}) == 3, "f^31 != 3");

    auto const series = rhs_series(4);
    for (auto const& [lambda, text] : golden::n4_z211()) {
      f.expect(format_schur(series.coefficient(lambda, {2, 1, 1})) == text,
               "z_211 coefficient of y_" + lambda.label());
    }
    f.expect(hall_inner(s({3, 1}), series.coefficient({4}, {2, 1, 1})) == 2,
             "coefficient of y_4 s_31 != 2");
  }

  void cartan(Failures& f) {
    auto const series = rhs_series(8);
    for (int n = 1; n <= 8; ++n) {
      for (auto const& lambda : partitions_of(n)) {
        for (auto const& mu : partitions_of(n)) {
          f.expect(cartan_via_series(series, lambda, mu) == cartan_via_count(lambda, mu),
                   "lambda = " + lambda.label() + ", mu = " + mu.label());
        }
      }
    }
    std::map<Partition, Integer> row;
    for (auto const& lambda : partitions_of(4)) {
      if (Integer c = cartan_via_series(series, lambda, {2, 1, 1}); c != 0) {
        row[lambda] = c;
      }
    }
    f.expect(row == std::map<Partition, Integer>{{{2, 1, 1}, 1}, {{3, 1}, 1}, {{4}, 1}},
             "mu = 211 row");
    int        code = 0;
    auto const text = run_cli({"cartan", "--n", "4"}, code);
    f.expect(code == 0 && text.find("mu = 211: {4:1, 31:1, 211:1}") != std::string::npos,
             "cartan --n 4 output");
  }

  void family_axioms(Failures& f) {
    for (int n = 1; n <= 5; ++n) {
      auto const report = verify_family(family(n));
      for (auto const& c : report.checks) {
        f.expect(c.passed, "n = " + std::to_string(n) + ": " + c.name);
      }
    }
  }

  void dimension_formula(Failures& f) {
    for (int n = 1; n <= 5; ++n) {
      for (auto const& nu : partitions_of(n)) {
        for (auto const& mu : partitions_of(n)) {
          Integer const expected = dimension(nu) * count_compositions_rearranging_to(mu)
                                   * oracle::kostka(nu.parts(), mu.parts());
          f.expect(isotypic_dimension(n, nu, mu) == expected,
                   "nu = " + nu.label() + ", mu = " + mu.label());
        }
      }
    }
  }

  void higher_lie_suite(Failures& f) {
    for (int n = 1; n <= 10; ++n) {
      SymFunc total;
      for (auto const& lambda : partitions_of(n)) {
        total += higher_lie(lambda);
      }
      f.expect(total == h_of(Partition::rectangle(1, n)), "sum of L_lambda at n = " + std::to_string(n));
    }
    for (int k = 1; k <= 7; ++k) {
      for (auto const& content : partitions_of(k)) {
        std::int64_t const count = oracle::primitive_necklaces(content.parts());
        f.expect(monomial_coefficient(lie(k), content) == Rational(static_cast<long>(count)),
                 "L_" + std::to_string(k) + " monomial " + content.label());
        f.expect(static_cast<std::int64_t>(primitive_necklaces_with_content(content).size()) == count,
                 "necklaces with content " + content.label());
      }
    }
    for (int j = 1; j <= 8; ++j) {
      for (int k = 1; j * k <= 8; ++k) {
        for (auto const& nu : partitions_of(j)) {
          for (auto const& mu : partitions_of(k)) {
            Rational const m = hall_inner(s({j * k}), plethysm(higher_lie(nu), h_of(mu)));
            f.expect(m == (nu == Partition::rectangle(1, j) ? 1 : 0),
                     "trivial in L_" + nu.label() + "[h_" + mu.label() + "]");
          }
        }
      }
    }
  }

  void sign_isotypic(Failures& f) {
    AnalysisOptions options;
    options.cap = 6;
    for (int n = 1; n <= 6; ++n) {
      Partition const ones = Partition::rectangle(1, n);
      Integer         dim  = 0;
      for (auto const& mu : partitions_of(n)) {
        dim += isotypic_dimension(n, ones, mu, options);
      }
      f.expect(dim == 1, "dim of the sign component at n = " + std::to_string(n));
      f.expect(sign_isotypic_type(n, options) == cycle_type(Permutation::reversal(n)),
               "sign label at n = " + std::to_string(n));
      for (auto const& lambda : partitions_of(n)) {
        f.expect(hall_inner(higher_lie(lambda), s(ones)) == oracle::full_descent_count(lambda.parts()),
                 "full descents of type " + lambda.label());
      }
    }
  }

  void necklace_bijection(Failures& f) {
    auto const all = primitive_partition_necklaces(6);
    f.expect(!all.empty(), "no necklaces");
    std::set<TupleNecklace> images;
    for (auto const& eta : all) {
      auto const tau = psi(eta);
      images.insert(tau);
      f.expect(theta(tau) == eta, "theta(psi(eta)) != eta");
      f.expect(eval(tau) == eval(eta), "psi changes eval");
      f.expect(psi(theta(tau)) == tau, "psi(theta(tau)) != tau");
    }
    f.expect(images.size() == all.size(), "psi is not injective");
  }

  void plethysm_engine(Failures& f) {
    std::vector<SymFunc> const samples{h(1), h(2), s({1, 1}), lie(3), p({2}) + h(1),
                                       s({2, 1}) * make_rational(1, 2)};
    for (auto const& a : samples) {
      for (auto const& b : samples) {
        for (auto const& c : samples) {
          if (a.max_degree() * b.max_degree() * c.max_degree() > 6) {
            continue;
          }
          f.expect(plethysm(a, plethysm(b, c)) == plethysm(plethysm(a, b), c), "associativity");
          f.expect(plethysm(a + b, c) == plethysm(a, c) + plethysm(b, c), "additivity");
          f.expect(plethysm(a * b, c) == plethysm(a, c) * plethysm(b, c), "multiplicativity");
        }
      }
    }
    // sum_i t^i h_i[f_1 + ... + f_k] = prod_j sum_l t^l h_l[f_j] in degrees <= 6.
    int const N = 6;
    std::vector<SymFunc> const fs{h(1), s({1, 1}), lie(2) + h(2), lie(3)};
    for (std::size_t k = 1; k <= fs.size(); ++k) {
      SymFunc              sum;
      std::vector<SymFunc> series(N + 1);
      series[0] = SymFunc(Rational(1));
      for (std::size_t j = 0; j < k; ++j) {
        sum += fs[j];
        std::vector<SymFunc> next(N + 1);
        for (int a = 0; a <= N; ++a) {
          for (int b = 0; a + b <= N; ++b) {
            SymFunc const factor = b == 0 ? SymFunc(Rational(1)) : plethysm(h(b), fs[j], N);
            next[a + b] += multiply(series[a], factor, N);
          }
        }
        series = std::move(next);
      }
      for (int i = 1; i <= N; ++i) {
        f.expect(plethysm(h(i), sum, N) == series[i],
                 "t-product identity, k = " + std::to_string(k) + ", i = " + std::to_string(i));
      }
    }
    f.expect(lie_of_weighted_h_sum(6) == lyndon_lie_sum(6), "Lie of a weighted sum");
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        f.expect(plethysm(p({a}), p({b})) == p({a * b}),
                 "p_" + std::to_string(a) + "[p_" + std::to_string(b) + "]");
      }
    }
  }

}  // namespace

int main() {
  struct Criterion {
    char const*                    name;
    std::function<void(Failures&)> body;
  };
  std::vector<Criterion> const criteria{
      {"main theorem, n = 1..5", main_theorem},
      {"n = 4 table and z_211 coefficients", n4_table},
      {"Cartan invariants, n <= 8", cartan},
      {"idempotent family axioms, n <= 5", family_axioms},
      {"isotypic dimension formula, n <= 5", dimension_formula},
      {"higher Lie characters", higher_lie_suite},
      {"sign-isotypic component, n <= 6", sign_isotypic},
      {"necklace bijection, total size <= 6", necklace_bijection},
      {"plethysm identities", plethysm_engine},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Failures   f;
    try {
      criteria[i].body(f);
    } catch (std::exception const& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (f.empty() ? "PASS" : "FAIL") << ' ' << (i + 1) << ". " << criteria[i].name << " ["
              << std::fixed << std::setprecision(2) << seconds << " s]";
    if (!f.empty()) {
      std::cout << ": " << f.summary();
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

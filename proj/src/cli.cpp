#include "facealg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "facealg/characters.hpp"
#include "facealg/repanalysis.hpp"
#include "facealg/serialize.hpp"

namespace facealg::cli {

  namespace {
    std::vector<int> parse_parts(std::string const& text, char const* what) {
      std::vector<int> parts;
      std::stringstream in(text);
      std::string       item;
      while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int         value = 0;
        try {
          value = std::stoi(item, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used == 0 || used != item.size()) {
          throw std::invalid_argument(std::string("bad ") + what + " '" + text
                                      + "': expected comma-separated positive integers");
        }
        parts.push_back(value);
      }
      if (parts.empty()) {
        throw std::invalid_argument(std::string("empty ") + what);
      }
      return parts;
    }

    AnalysisOptions analysis_options(RunConfig const& config) {
      AnalysisOptions options;
      options.cap  = config.cap_faces;
      options.jobs = config.jobs;
      return options;
    }

    void require_n(RunConfig const& config, int cap, char const* flag) {
      if (config.n < 1) {
        throw std::invalid_argument("--n must be positive");
      }
      if (config.n > cap) {
        throw std::out_of_range("n = " + std::to_string(config.n) + " exceeds " + flag
                                + " = " + std::to_string(cap));
      }
    }

    void require_size(std::optional<Partition> const& p, int n, char const* flag) {
      if (p && p->size() != n) {
        throw std::invalid_argument(std::string(flag) + " " + p->label()
                                    + " is not a partition of " + std::to_string(n));
      }
    }

    void warn_if_large(RunConfig const& config, std::ostream& err) {
      if (config.n >= 6) {
        err << "warning: n = " << config.n
            << " builds the full face algebra; expect tens of seconds to minutes and "
               "a few hundred MB of memory\n";
      }
    }

    std::string csv_quote(std::string const& s) {
      if (s.find_first_of(",\"") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return out + "\"";
    }

    // Fixed-width grid; column 0 left aligned.
    void print_grid(std::ostream& out, std::vector<std::vector<std::string>> const& rows) {
      std::vector<std::size_t> width;
      for (auto const& row : rows) {
        width.resize(std::max(width.size(), row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      for (auto const& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c > 0) {
            line += " | ";
          }
          line += row[c] + std::string(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') {
          line.pop_back();
        }
        out << line << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////
    // table
    ////////////////////////////////////////////////////////////////////

    int cmd_table(RunConfig const& config, std::ostream& out, std::ostream& err) {
      require_n(config, config.cap_faces, "--cap-faces");
      require_size(config.nu, config.n, "--nu");
      require_size(config.mu, config.n, "--mu");
      warn_if_large(config, err);
      int const  n       = config.n;
      auto const options = analysis_options(config);
      auto const parts   = partitions_of(n);

      // Rows nu from 1^n down to (n), columns mu from (n) to 1^n.
      std::vector<Partition> rows(parts.rbegin(), parts.rend());
      std::vector<Partition> cols = parts;
      if (config.nu) {
        rows = {*config.nu};
      }
      if (config.mu) {
        cols = {*config.mu};
      }

      std::map<std::pair<Partition, Partition>, RepReport> reports;
      for (auto const& mu : cols) {
        for (auto const& lambda : parts) {
          reports.emplace(std::make_pair(lambda, mu), analyze(n, lambda, mu, options));
        }
      }
      // cell(nu, mu) = [(lambda, multiplicity)] in enumeration order of lambda.
      auto cell = [&](Partition const& nu, Partition const& mu) {
        std::vector<std::pair<Partition, Integer>> entries;
        for (auto const& lambda : parts) {
          for (auto const& m : reports.at({lambda, mu}).multiplicities) {
            if (m.nu == nu) {
              entries.emplace_back(lambda, m.value);
            }
          }
        }
        return entries;
      };

      if (config.format == Format::json) {
        Json cells = Json::array();
        for (auto const& nu : rows) {
          for (auto const& mu : cols) {
            Json entries = Json::array();
            for (auto const& [lambda, m] : cell(nu, mu)) {
              entries.push_back({{"lambda", encode(lambda)}, {"value", m.get_si()}});
            }
            cells.push_back({{"nu", encode(nu)}, {"mu", encode(mu)}, {"entries", entries}});
          }
        }
        Json list = Json::array();
        for (auto const& [key, report] : reports) {
          if (!report.ch.is_zero()) {
            list.push_back(encode(report));
          }
        }
        out << Json{{"n", n}, {"cells", cells}, {"reports", list}}.dump(2) << '\n';
      } else if (config.format == Format::csv) {
        out << "nu,mu,lambda,multiplicity\n";
        for (auto const& nu : rows) {
          for (auto const& mu : cols) {
            for (auto const& [lambda, m] : cell(nu, mu)) {
              out << csv_quote(nu.label()) << ',' << csv_quote(mu.label()) << ','
                  << csv_quote(lambda.label()) << ',' << m.get_str() << '\n';
            }
          }
        }
      } else {
        out << "n = " << n << ": row nu, column mu, entries lambda(multiplicity) for "
            << "[(CF_n E_mu)^nu : M_lambda]\n";
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string>              header{"nu \\ mu"};
        for (auto const& mu : cols) {
          header.push_back(mu.label());
        }
        grid.push_back(header);
        for (auto const& nu : rows) {
          std::vector<std::string> line{nu.label()};
          for (auto const& mu : cols) {
            std::string text;
            for (auto const& [lambda, m] : cell(nu, mu)) {
              text += (text.empty() ? "" : " ") + lambda.label();
              if (m != 1) {
                text += "(" + m.get_str() + ")";
              }
            }
            line.push_back(text.empty() ? "." : text);
          }
          grid.push_back(std::move(line));
        }
        print_grid(out, grid);
      }
      return kSuccess;
    }

    ////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////

    int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err) {
      require_n(config, config.cap_faces, "--cap-faces");
      warn_if_large(config, err);
      int const  n       = config.n;
      auto const options = analysis_options(config);

      BuildOptions build;
      build.cap          = std::max(config.cap_faces, kDefaultFaceCap);
      build.jobs         = config.jobs;
      build.verify_up_to = 0;
      VerifyOptions verify;
      verify.jobs = config.jobs;
      FamilyReport const family_report = verify_family(build_family(n, build), verify);

      TheoremReport const theorem = verify_main_theorem(n, options);

      CheckResult dims("dimension formula");
      for (auto const& nu : partitions_of(n)) {
        for (auto const& mu : partitions_of(n)) {
          try {
            isotypic_dimension(n, nu, mu, options);
          } catch (std::logic_error const& e) {
            dims.passed = false;
            if (dims.violations.size() < 5) {
              dims.violations.push_back(e.what());
            }
          }
        }
      }

      bool const ok = family_report.ok() && theorem.ok() && dims.passed;
      if (config.format == Format::json) {
        Json checks = Json::array();
        for (auto const& c : family_report.checks) {
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"violations", c.violations}});
        }
        checks.push_back({{"name", dims.name}, {"passed", dims.passed}, {"violations", dims.violations}});
        Json pairs = Json::array();
        for (auto const& p : theorem.pairs) {
          pairs.push_back({{"lambda", encode(p.lambda)},
                           {"mu", encode(p.mu)},
                           {"equal", p.equal},
                           {"brute_force", encode(p.brute_force)},
                           {"series", encode(p.series)}});
        }
        out << Json{{"n", n}, {"ok", ok}, {"checks", checks}, {"theorem", pairs}}.dump(2) << '\n';
      } else if (config.format == Format::csv) {
        out << "section,name,passed\n";
        for (auto const& c : family_report.checks) {
          out << "idempotents," << csv_quote(c.name) << ',' << (c.passed ? 1 : 0) << '\n';
        }
        out << "dimensions," << csv_quote(dims.name) << ',' << (dims.passed ? 1 : 0) << '\n';
        for (auto const& p : theorem.pairs) {
          out << "theorem," << csv_quote(p.lambda.label() + "/" + p.mu.label()) << ','
              << (p.equal ? 1 : 0) << '\n';
        }
      } else {
        out << "idempotent family, n = " << n << '\n';
        auto show = [&](CheckResult const& c) {
          out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
          for (auto const& v : c.violations) {
            out << "       " << v << '\n';
          }
        };
        for (auto const& c : family_report.checks) {
          show(c);
        }
        show(dims);
        out << "generating function vs brute force, n = " << n << '\n';
        std::size_t equal = 0;
        for (auto const& p : theorem.pairs) {
          if (p.equal) {
            ++equal;
          } else {
            out << "  FAIL lambda = " << p.lambda.label() << ", mu = " << p.mu.label()
                << ": " << format_schur(p.brute_force) << " != " << format_schur(p.series)
                << '\n';
          }
        }
        out << "  " << (theorem.ok() ? "PASS " : "FAIL ") << equal << " of "
            << theorem.pairs.size() << " pairs equal\n";
        out << (ok ? "OK" : "FAILED") << '\n';
      }
      return ok ? kSuccess : kVerifyFailed;
    }

    ////////////////////////////////////////////////////////////////////
    // cartan
    ////////////////////////////////////////////////////////////////////

    int cmd_cartan(RunConfig const& config, std::ostream& out, std::ostream&) {
      require_n(config, config.cap_series, "--cap-series");
      int const             n      = config.n;
      BivariateSeries const series = rhs_series(n, config.cap_series, config.jobs);
      auto const            parts  = partitions_of(n);

      struct Row {
        Partition                                  mu;
        std::vector<std::pair<Partition, Integer>> counts;  // nonzero only
        bool                                       agree = true;
      };
      std::vector<Row> rows;
      bool             ok = true;
      for (auto const& mu : parts) {
        Row row{mu, {}, true};
        for (auto const& lambda : parts) {
          Integer const a = cartan_via_series(series, lambda, mu);
          Integer const b = cartan_via_count(lambda, mu);
          row.agree       = row.agree && a == b;
          if (a != 0 || b != 0) {
            row.counts.emplace_back(lambda, a);
          }
        }
        ok = ok && row.agree;
        rows.push_back(std::move(row));
      }

      if (config.format == Format::json) {
        Json list = Json::array();
        for (auto const& row : rows) {
          Json counts = Json::array();
          for (auto const& [lambda, c] : row.counts) {
            counts.push_back({{"lambda", encode(lambda)}, {"value", c.get_si()}});
          }
          list.push_back({{"mu", encode(row.mu)}, {"counts", counts}, {"agree", row.agree}});
        }
        out << Json{{"n", n}, {"ok", ok}, {"rows", list}}.dump(2) << '\n';
      } else if (config.format == Format::csv) {
        out << "mu,lambda,value,agree\n";
        for (auto const& row : rows) {
          for (auto const& [lambda, c] : row.counts) {
            out << csv_quote(row.mu.label()) << ',' << csv_quote(lambda.label()) << ','
                << c.get_str() << ',' << (row.agree ? 1 : 0) << '\n';
          }
        }
      } else {
        out << "n = " << n << ": [P_mu : M_lambda], series and composition count\n";
        for (auto const& row : rows) {
          out << "mu = " << row.mu.label() << ": {";
          for (std::size_t i = 0; i < row.counts.size(); ++i) {
            out << (i > 0 ? ", " : "") << row.counts[i].first.label() << ':'
                << row.counts[i].second.get_str();
          }
          out << '}' << (row.agree ? "" : "  DISAGREE") << '\n';
        }
      }
      return ok ? kSuccess : kVerifyFailed;
    }

    ////////////////////////////////////////////////////////////////////
    // series
    ////////////////////////////////////////////////////////////////////

    int cmd_series(RunConfig const& config, std::ostream& out, std::ostream&) {
      require_n(config, config.cap_series, "--cap-series");
      BivariateSeries const series = rhs_series(config.n, config.cap_series, config.jobs);
      std::vector<std::pair<BivariateSeries::Key, SymFunc>> terms;
      for (auto const& [key, value] : series.terms()) {
        if (key.second.size() == config.n && (!config.lambda || key.first == *config.lambda)
            && (!config.mu || key.second == *config.mu)) {
          terms.emplace_back(key, value);
        }
      }
      if (config.format == Format::json) {
        BivariateSeries part(config.n);
        for (auto const& [key, value] : terms) {
          part.add_term(key.first, key.second, value);
        }
        out << encode(part).dump(2) << '\n';
      } else if (config.format == Format::csv) {
        out << "y,z,ch\n";
        for (auto const& [key, value] : terms) {
          out << csv_quote(key.first.label()) << ',' << csv_quote(key.second.label()) << ','
              << csv_quote(format_schur(value)) << '\n';
        }
      } else {
        for (auto const& [key, value] : terms) {
          out << "y_" << key.first.label() << " z_" << key.second.label() << ": "
              << format_schur(value) << '\n';
        }
      }
      return kSuccess;
    }

    ////////////////////////////////////////////////////////////////////
    // lie, lyndon, sign
    ////////////////////////////////////////////////////////////////////

    int cmd_lie(RunConfig const& config, std::ostream& out, std::ostream&) {
      if (!config.lambda) {
        throw std::invalid_argument("lie needs --lambda");
      }
      SymFunc const f     = higher_lie(*config.lambda);
      Basis const   basis = config.basis == 'p' ? Basis::power_sum : Basis::schur;
      if (config.format == Format::json) {
        out << encode(f, basis).dump(2) << '\n';
      } else if (config.format == Format::csv) {
        out << "partition,coefficient\n";
        std::map<Partition, Rational> const coefficients
            = basis == Basis::schur ? schur_expand(f)
                                    : std::map<Partition, Rational>(f.terms().begin(),
                                                                    f.terms().end());
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
          out << csv_quote(it->first.label()) << ',' << it->second.get_str() << '\n';
        }
      } else {
        out << (basis == Basis::schur ? format_schur(f) : format_power_sum(f)) << '\n';
      }
      return kSuccess;
    }

    int cmd_lyndon(RunConfig const& config, std::ostream& out, std::ostream&) {
      if (config.word.empty()) {
        throw std::invalid_argument("lyndon needs --word");
      }
      auto const factors = duval_factorization(config.word);
      auto const type    = lyndon_type(config.word);
      if (config.format == Format::json) {
        Json list = Json::array();
        for (auto const& w : factors) {
          list.push_back(w.parts());
        }
        out << Json{{"word", config.word.parts()},
                    {"lyndon", is_lyndon(config.word)},
                    {"factors", list},
                    {"type", encode(type)}}
                   .dump(2)
            << '\n';
      } else {
        std::string text;
        for (auto const& w : factors) {
          text += "(";
          for (std::size_t i = 0; i < w.parts().size(); ++i) {
            text += (i > 0 ? "," : "") + std::to_string(w[i]);
          }
          text += ")";
        }
        if (config.format == Format::csv) {
          out << "word,factors,type\n"
              << csv_quote(config.word.label()) << ',' << csv_quote(text) << ','
              << csv_quote(type.label()) << '\n';
        } else {
          out << "factors: " << text << '\n' << "type: " << type.label() << '\n';
        }
      }
      return kSuccess;
    }

    int cmd_sign(RunConfig const& config, std::ostream& out, std::ostream& err) {
      require_n(config, config.cap_faces, "--cap-faces");
      warn_if_large(config, err);
      int const       n       = config.n;
      auto            options = analysis_options(config);
      Partition const ones    = Partition::rectangle(1, n);
      Integer         total   = 0;
      for (auto const& mu : partitions_of(n)) {
        total += isotypic_dimension(n, ones, mu, options);
      }
      Partition const label    = sign_isotypic_type(n, options);
      Partition const expected = cycle_type(Permutation::reversal(n));
      bool const      ok       = total == 1 && label == expected;
      if (config.format == Format::json) {
        out << Json{{"n", n},
                    {"dimension", total.get_si()},
                    {"lambda", encode(label)},
                    {"longest_element_cycle_type", encode(expected)},
                    {"ok", ok}}
                   .dump(2)
            << '\n';
      } else if (config.format == Format::csv) {
        out << "n,dimension,lambda,longest_element_cycle_type\n"
            << n << ',' << total.get_str() << ',' << csv_quote(label.label()) << ','
            << csv_quote(expected.label()) << '\n';
      } else {
        out << "dim (CF_" << n << ")^sign = " << total.get_str() << '\n'
            << "simple label: M_" << label.label() << '\n'
            << "cycle type of the longest element: " << expected.label() << '\n';
      }
      return ok ? kSuccess : kVerifyFailed;
    }
  }  // namespace

  Partition parse_partition(std::string const& text) {
    return Partition(parse_parts(text, "partition"));
  }

  Word parse_word(std::string const& text) {
    return Word(parse_parts(text, "word"));
  }

  int execute(RunConfig const& config, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) {
        err << "error: cannot open " << config.out << " for writing\n";
        return kUsageError;
      }
      sink = &file;
    }
    try {
      if (config.command == "table") {
        return cmd_table(config, *sink, err);
      }
      if (config.command == "verify") {
        return cmd_verify(config, *sink, err);
      }
      if (config.command == "cartan") {
        return cmd_cartan(config, *sink, err);
      }
      if (config.command == "series") {
        return cmd_series(config, *sink, err);
      }
      if (config.command == "lie") {
        return cmd_lie(config, *sink, err);
      }
      if (config.command == "lyndon") {
        return cmd_lyndon(config, *sink, err);
      }
      if (config.command == "sign") {
        return cmd_sign(config, *sink, err);
      }
      err << "error: unknown command '" << config.command << "'\n";
      return kUsageError;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (std::logic_error const& e) {
      err << "verification failed: " << e.what() << '\n';
      return kVerifyFailed;
    }
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Face algebra of the braid arrangement: idempotents, module "
                 "structure and the Lyndon-word generating function"};
    app.require_subcommand(1);

    RunConfig   config;
    std::string lambda, mu, nu, word, format = "text", basis = "s";

    auto common = [&](CLI::App* sub) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"text", "json", "csv"}))
          ->envname("FACEALG_FORMAT");
      sub->add_option("--out", config.out, "Write output to this file")
          ->envname("FACEALG_OUT");
      sub->add_option("--jobs", config.jobs, "Worker threads")
          ->check(CLI::PositiveNumber)
          ->envname("FACEALG_JOBS");
    };
    auto with_n = [&](CLI::App* sub) {
      sub->add_option("--n", config.n, "Degree")->required()->envname("FACEALG_N");
    };
    auto face_cap = [&](CLI::App* sub) {
      sub->add_option("--cap-faces", config.cap_faces,
                      "Largest n for face-algebra computations (6 takes minutes)")
          ->check(CLI::Range(1, kMaxFaceDegree))
          ->envname("FACEALG_CAP_FACES");
    };
    auto series_cap = [&](CLI::App* sub) {
      sub->add_option("--cap-series", config.cap_series, "Largest series truncation")
          ->check(CLI::PositiveNumber)
          ->envname("FACEALG_CAP_SERIES");
    };

    auto* table = app.add_subcommand("table", "Composition multiplicities [(CF_n E_mu)^nu : M_lambda]");
    with_n(table);
    face_cap(table);
    table->add_option("--nu", nu, "Only this row, e.g. 3,1");
    table->add_option("--mu", mu, "Only this column, e.g. 2,1,1");
    common(table);

    auto* verify = app.add_subcommand("verify", "Check the idempotents, dimensions and generating function at n");
    with_n(verify);
    face_cap(verify);
    common(verify);

    auto* cartan = app.add_subcommand("cartan", "Cartan invariants of the descent algebra, two ways");
    with_n(cartan);
    series_cap(cartan);
    common(cartan);

    auto* series = app.add_subcommand("series", "Degree-n coefficients of the Lyndon-word product");
    with_n(series);
    series_cap(series);
    series->add_option("--lambda", lambda, "Only this y index");
    series->add_option("--mu", mu, "Only this z index");
    common(series);

    auto* lie = app.add_subcommand("lie", "Higher Lie character L_lambda");
    lie->add_option("--lambda", lambda, "Partition, e.g. 2,1")->required();
    lie->add_option("--basis", basis, "s (Schur) or p (power sum)")
        ->check(CLI::IsMember({"s", "p"}))
        ->envname("FACEALG_BASIS");
    common(lie);

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon factorization and type of a word");
    lyndon->add_option("--word", word, "Letters, e.g. 1,2,1")->required();
    common(lyndon);

    auto* sign = app.add_subcommand("sign", "Sign-isotypic component of the face algebra");
    with_n(sign);
    face_cap(sign);
    common(sign);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kUsageError;
    }

    try {
      config.command = app.get_subcommands().front()->get_name();
      config.format  = format == "json" ? Format::json
                       : format == "csv" ? Format::csv
                                         : Format::text;
      config.basis   = basis.front();
      if (!lambda.empty()) {
        config.lambda = parse_partition(lambda);
      }
      if (!mu.empty()) {
        config.mu = parse_partition(mu);
      }
      if (!nu.empty()) {
        config.nu = parse_partition(nu);
      }
      if (!word.empty()) {
        config.word = parse_word(word);
      }
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
    return execute(config, out, err);
  }

}  // namespace facealg::cli

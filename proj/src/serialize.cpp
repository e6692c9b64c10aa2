#include "facealg/serialize.hpp"

#include <stdexcept>

namespace facealg {

  namespace {
    // Integers that fit a long are written as JSON numbers, larger ones as
    // decimal strings.
    Json encode_integer(Integer const& z) {
      if (z.fits_slong_p()) {
        return z.get_si();
      }
      return z.get_str();
    }

    Integer decode_integer(Json const& j) {
      if (j.is_number_integer()) {
        return Integer(j.get<long>());
      }
      if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
          throw std::invalid_argument("not an integer: " + j.dump());
        }
        return z;
      }
      throw std::invalid_argument("not an integer: " + j.dump());
    }

    void put_rational(Json& record, Rational const& c) {
      record["numerator"]   = encode_integer(c.get_num());
      record["denominator"] = encode_integer(c.get_den());
    }

    Rational get_rational(Json const& record) {
      Integer const den = decode_integer(record.at("denominator"));
      if (den == 0) {
        throw std::invalid_argument("zero denominator");
      }
      return ratio(decode_integer(record.at("numerator")), den);
    }

    std::vector<std::vector<int>> decode_blocks(Json const& j, int& n) {
      if (!j.is_array()) {
        throw std::invalid_argument("expected an array of blocks: " + j.dump());
      }
      auto blocks = j.get<std::vector<std::vector<int>>>();
      n           = 0;
      for (auto const& b : blocks) {
        n += static_cast<int>(b.size());
      }
      return blocks;
    }

    template <typename F>
    auto guarded(char const* what, F&& f) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
      }
    }
  }  // namespace

  Json encode(Partition const& p) {
    return p.parts();
  }

  Json encode(SetPartition const& x) {
    return x.blocks();
  }

  Json encode(Face const& f) {
    return f.blocks();
  }

  Json encode(FaceAlgebraElement const& x) {
    Json out = Json::array();
    for (auto const& [f, c] : x.terms()) {
      Json record{{"face", encode(f)}};
      put_rational(record, c);
      out.push_back(std::move(record));
    }
    return out;
  }

  Json encode(SymFunc const& f, Basis basis) {
    Json terms = Json::array();
    auto emit  = [&](Partition const& rho, Rational const& c) {
      Json record{{"partition", encode(rho)}};
      put_rational(record, c);
      terms.push_back(std::move(record));
    };
    if (basis == Basis::schur) {
      for (auto const& [lambda, c] : schur_expand(f)) {
        emit(lambda, c);
      }
    } else {
      for (auto const& [rho, c] : f.terms()) {
        emit(rho, c);
      }
    }
    return {{"basis", basis == Basis::schur ? "s" : "p"}, {"terms", std::move(terms)}};
  }

  Json encode(RepReport const& report) {
    Json dims = Json::array();
    for (auto const& [nu, d] : report.isotypic_dims) {
      dims.push_back({{"nu", encode(nu)}, {"value", encode_integer(d)}});
    }
    Json mult = Json::array();
    for (auto const& m : report.multiplicities) {
      mult.push_back({{"nu", encode(m.nu)},
                      {"lambda", encode(m.lambda)},
                      {"value", encode_integer(m.value)}});
    }
    return {{"n", report.n},
            {"lambda", encode(report.lambda)},
            {"mu", encode(report.mu)},
            {"ch_schur", encode(report.ch, Basis::schur)},
            {"dimension", encode_integer(report.dimension)},
            {"dims", std::move(dims)},
            {"multiplicities", std::move(mult)}};
  }

  Json encode(BivariateSeries const& series) {
    Json out = Json::array();
    for (auto const& [key, value] : series.terms()) {
      out.push_back({{"y", encode(key.first)},
                     {"z", encode(key.second)},
                     {"ch", encode(value, Basis::schur)}});
    }
    return out;
  }

  Json encode(IdempotentFamily const& fam) {
    Json list = Json::array();
    for (auto const& [x, e] : fam.by_support) {
      list.push_back({{"support", encode(x)}, {"element", encode(e)}});
    }
    return {{"n", fam.n}, {"idempotents", std::move(list)}};
  }

  Partition decode_partition(Json const& j) {
    return guarded("partition", [&] {
      auto parts = j.get<std::vector<int>>();
      return Partition(std::move(parts));
    });
  }

  SetPartition decode_set_partition(Json const& j) {
    return guarded("set partition", [&] {
      int  n      = 0;
      auto blocks = decode_blocks(j, n);
      return SetPartition(n, blocks);
    });
  }

  Face decode_face(Json const& j) {
    return guarded("face", [&] {
      int  n      = 0;
      auto blocks = decode_blocks(j, n);
      return Face(n, blocks);
    });
  }

  FaceAlgebraElement decode_element(Json const& j, int n) {
    return guarded("face algebra element", [&] {
      if (!j.is_array()) {
        throw std::invalid_argument("face algebra element: expected an array");
      }
      FaceAlgebraElement out(n);
      for (auto const& record : j) {
        out.add_term(decode_face(record.at("face")), get_rational(record));
      }
      return out;
    });
  }

  SymFunc decode_symfunc(Json const& j) {
    return guarded("symmetric function", [&] {
      std::string const basis = j.at("basis").get<std::string>();
      if (basis != "s" && basis != "p") {
        throw std::invalid_argument("unknown basis '" + basis + "'");
      }
      std::map<Partition, Rational> coefficients;
      for (auto const& record : j.at("terms")) {
        coefficients[decode_partition(record.at("partition"))] += get_rational(record);
      }
      if (basis == "s") {
        return from_schur(coefficients);
      }
      SymFunc out;
      for (auto const& [rho, c] : coefficients) {
        out.add_term(rho, c);
      }
      return out;
    });
  }

  RepReport decode_report(Json const& j) {
    return guarded("report", [&] {
      RepReport out;
      out.n         = j.at("n").get<int>();
      out.lambda    = decode_partition(j.at("lambda"));
      out.mu        = decode_partition(j.at("mu"));
      out.ch        = decode_symfunc(j.at("ch_schur"));
      out.dimension = decode_integer(j.at("dimension"));
      for (auto const& d : j.at("dims")) {
        out.isotypic_dims.emplace(decode_partition(d.at("nu")), decode_integer(d.at("value")));
      }
      for (auto const& m : j.at("multiplicities")) {
        out.multiplicities.push_back({decode_partition(m.at("nu")),
                                      decode_partition(m.at("lambda")),
                                      decode_integer(m.at("value"))});
      }
      return out;
    });
  }

  BivariateSeries decode_series(Json const& j, int truncation) {
    return guarded("series", [&] {
      BivariateSeries out(truncation);
      for (auto const& record : j) {
        out.add_term(decode_partition(record.at("y")),
                     decode_partition(record.at("z")),
                     decode_symfunc(record.at("ch")));
      }
      return out;
    });
  }

  IdempotentFamily decode_family(Json const& j) {
    return guarded("family", [&] {
      IdempotentFamily out;
      out.n = j.at("n").get<int>();
      for (auto const& record : j.at("idempotents")) {
        auto const x = decode_set_partition(record.at("support"));
        auto       e = decode_element(record.at("element"), out.n);
        auto [it, inserted]
            = out.by_orbit.try_emplace(block_size_type(x), FaceAlgebraElement(out.n));
        it->second += e;
        out.by_support.emplace(x, std::move(e));
      }
      return out;
    });
  }

}  // namespace facealg

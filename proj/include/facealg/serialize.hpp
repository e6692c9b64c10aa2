#pragma once

// JSON encodings.
//   Partition            [2, 1, 1]
//   SetPartition, Face   [[1, 4], [2, 3]] (faces keep block order)
//   FaceAlgebraElement   [{"face": ..., "numerator": 1, "denominator": 6}]
//   SymFunc              {"basis": "p" | "s", "terms": [{"partition", "numerator", "denominator"}]}
//   RepReport            {"n", "lambda", "mu", "ch_schur", "dimension", "dims",
//                         "multiplicities"}
//   BivariateSeries      [{"y": ..., "z": ..., "ch": SymFunc}]
//   IdempotentFamily     {"n", "idempotents": [{"support": ..., "element": ...}]}
// Integers are JSON numbers when they fit a long and decimal strings
// otherwise, so values of any size round-trip.
// Decoders throw std::invalid_argument on malformed input.

#include "json.hpp"

#include "facealg/genfunc.hpp"
#include "facealg/idempotents.hpp"
#include "facealg/repanalysis.hpp"

namespace facealg {

  using Json = nlohmann::json;

  enum class Basis { power_sum, schur };

  Json encode(Partition const& p);
  Json encode(SetPartition const& x);
  Json encode(Face const& f);
  Json encode(FaceAlgebraElement const& x);
  Json encode(SymFunc const& f, Basis basis = Basis::schur);
  Json encode(RepReport const& report);
  Json encode(BivariateSeries const& series);
  Json encode(IdempotentFamily const& fam);

  Partition          decode_partition(Json const& j);
  SetPartition       decode_set_partition(Json const& j);
  Face               decode_face(Json const& j);
  FaceAlgebraElement decode_element(Json const& j, int n);
  SymFunc            decode_symfunc(Json const& j);
  RepReport          decode_report(Json const& j);
  BivariateSeries    decode_series(Json const& j, int truncation);
  IdempotentFamily   decode_family(Json const& j);

}  // namespace facealg

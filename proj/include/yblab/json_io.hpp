#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yblab/integrability.hpp"
#include "yblab/rmatrix.hpp"
#include "yblab/spin_chain.hpp"
#include "yblab/uq_sl2.hpp"

namespace yblab {

/// Minimal ordered JSON document builder.  All numbers are printed with
/// "%.17g" so identical inputs always serialize to identical bytes.
class JsonValue {
 public:
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue string(std::string v);
  static JsonValue complex_pair(Complex z);  // [re, im]
  static JsonValue array(std::vector<JsonValue> items);
  static JsonValue object();

  JsonValue& add(const std::string& key, JsonValue v);  // object insertion, keeps order
  void push_back(JsonValue v);                          // array append

  std::string dump() const;

 private:
  enum class Kind { object_k, array_k, literal_k };
  Kind kind_ = Kind::literal_k;
  std::string literal_;
  std::vector<std::pair<std::string, JsonValue>> members_;
  std::vector<JsonValue> items_;
};

std::string format_double(double v);

// Tensor wire format: {"n": <int>, "entries": [[[[ [re,im], ...]]]]} with
// nesting [i][j][k][l]; wrong-arity nesting is rejected.
std::string tensor_to_json(const VertexTensor& t);
VertexTensor tensor_from_json(const std::string& text);

// Family wire format: {"family": "six-vertex", "alpha": [re,im]} and the
// analogous shapes for the other catalog entries.
std::string family_to_json(const SpectralRFamily& family);
SpectralRFamily family_from_json(const std::string& text);

JsonValue ybe_report_json(const YbeReport& rep);
JsonValue star_report_json(const StarReport& rep);
JsonValue partition_report_json(Complex z, const LatticeSpec& lattice, const char* method);
JsonValue trotter_report_json(const TrotterOrderReport& rep);
JsonValue correspondence_report_json(const CorrespondenceReport& rep, double halving_ratio);
JsonValue convention_report_json(const ConventionSearchReport& rep);

}  // namespace yblab

#include "yblab/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace yblab {

namespace {
using nlohmann::json;

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

Complex complex_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(what) + ": complex values must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}
}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

JsonValue JsonValue::number(double v) {
  JsonValue j;
  // JSON has no inf/nan literals; null keeps the document parseable
  j.literal_ = std::isfinite(v) ? format_double(v) : "null";
  return j;
}

JsonValue JsonValue::integer(long long v) {
  JsonValue j;
  j.literal_ = std::to_string(v);
  return j;
}

JsonValue JsonValue::boolean(bool v) {
  JsonValue j;
  j.literal_ = v ? "true" : "false";
  return j;
}

JsonValue JsonValue::string(std::string v) {
  JsonValue j;
  j.literal_ = "\"" + escape(v) + "\"";
  return j;
}

JsonValue JsonValue::complex_pair(Complex z) {
  return array({number(z.real()), number(z.imag())});
}

JsonValue JsonValue::array(std::vector<JsonValue> items) {
  JsonValue j;
  j.kind_ = Kind::array_k;
  j.items_ = std::move(items);
  return j;
}

JsonValue JsonValue::object() {
  JsonValue j;
  j.kind_ = Kind::object_k;
  return j;
}

JsonValue& JsonValue::add(const std::string& key, JsonValue v) {
  members_.emplace_back(key, std::move(v));
  return *this;
}

void JsonValue::push_back(JsonValue v) { items_.push_back(std::move(v)); }

std::string JsonValue::dump() const {
  switch (kind_) {
    case Kind::literal_k:
      return literal_;
    case Kind::array_k: {
      std::string out = "[";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ",";
        out += items_[i].dump();
      }
      return out + "]";
    }
    case Kind::object_k: {
      std::string out = "{";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + escape(members_[i].first) + "\":" + members_[i].second.dump();
      }
      return out + "}";
    }
  }
  return "null";
}

std::string tensor_to_json(const VertexTensor& t) {
  const std::size_t n = t.n();
  JsonValue entries = JsonValue::array({});
  for (std::size_t i = 0; i < n; ++i) {
    JsonValue li = JsonValue::array({});
    for (std::size_t j = 0; j < n; ++j) {
      JsonValue lj = JsonValue::array({});
      for (std::size_t k = 0; k < n; ++k) {
        JsonValue lk = JsonValue::array({});
        for (std::size_t l = 0; l < n; ++l) lk.push_back(JsonValue::complex_pair(t.at(i, j, k, l)));
        lj.push_back(std::move(lk));
      }
      li.push_back(std::move(lj));
    }
    entries.push_back(std::move(li));
  }
  JsonValue doc = JsonValue::object();
  doc.add("n", JsonValue::integer(static_cast<long long>(n)));
  doc.add("entries", std::move(entries));
  return doc.dump();
}

VertexTensor tensor_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("tensor JSON: parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw std::invalid_argument("tensor JSON: expected object with 'n' and 'entries'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw std::invalid_argument("tensor JSON: 'n' must be a positive integer");
  const std::size_t n = doc["n"].get<std::size_t>();

  const json& e = doc["entries"];
  std::vector<Complex> flat;
  flat.reserve(n * n * n * n);
  const auto expect_level = [&](const json& level, const char* name) -> const json& {
    if (!level.is_array() || level.size() != n)
      throw std::invalid_argument(std::string("tensor JSON: '") + name + "' level must have " +
                                  std::to_string(n) + " elements");
    return level;
  };
  expect_level(e, "i");
  for (const json& li : e) {
    expect_level(li, "j");
    for (const json& lj : li) {
      expect_level(lj, "k");
      for (const json& lk : lj) {
        expect_level(lk, "l");
        for (const json& pair : lk) flat.push_back(complex_from(pair, "tensor JSON"));
      }
    }
  }
  return VertexTensor(n, std::move(flat));
}

std::string family_to_json(const SpectralRFamily& family) {
  const FamilyParams& p = family.params();
  if (p.kind == FamilyKind::custom)
    return std::string("{\"family\":\"custom\",\"tensor\":") + tensor_to_json(*p.table) + "}";

  JsonValue doc = JsonValue::object();
  switch (p.kind) {
    case FamilyKind::six_vertex:
      doc.add("family", JsonValue::string("six-vertex"));
      doc.add("alpha", JsonValue::complex_pair(p.alpha));
      break;
    case FamilyKind::xxz_first_order:
      doc.add("family", JsonValue::string("xxz-first-order"));
      doc.add("J", JsonValue::complex_pair(p.coupling));
      break;
    case FamilyKind::gauge_six_vertex:
      doc.add("family", JsonValue::string("gauge-six-vertex"));
      doc.add("gamma", JsonValue::number(p.gamma));
      break;
    case FamilyKind::from_local_h: {
      doc.add("family", JsonValue::string("from-local-h"));
      const Matrix& h = *p.local_h;
      JsonValue rows = JsonValue::array({});
      for (std::size_t r = 0; r < h.rows(); ++r) {
        JsonValue row = JsonValue::array({});
        for (std::size_t c = 0; c < h.cols(); ++c)
          row.push_back(JsonValue::complex_pair(h(r, c)));
        rows.push_back(std::move(row));
      }
      doc.add("h", std::move(rows));
      break;
    }
    case FamilyKind::custom:
      break;
  }
  return doc.dump();
}

SpectralRFamily family_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("family JSON: parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string())
    throw std::invalid_argument("family JSON: expected object with a 'family' string");
  const std::string kind = doc["family"].get<std::string>();
  if (kind == "six-vertex") {
    if (!doc.contains("alpha")) throw std::invalid_argument("family JSON: six-vertex needs alpha");
    return SpectralRFamily::six_vertex(complex_from(doc["alpha"], "family JSON"));
  }
  if (kind == "xxz-first-order") {
    if (!doc.contains("J")) throw std::invalid_argument("family JSON: xxz-first-order needs J");
    return SpectralRFamily::xxz_first_order(complex_from(doc["J"], "family JSON"));
  }
  if (kind == "gauge-six-vertex") {
    if (!doc.contains("gamma") || !doc["gamma"].is_number())
      throw std::invalid_argument("family JSON: gauge-six-vertex needs a real gamma");
    return SpectralRFamily::gauge_six_vertex(doc["gamma"].get<double>());
  }
  if (kind == "from-local-h") {
    if (!doc.contains("h") || !doc["h"].is_array())
      throw std::invalid_argument("family JSON: from-local-h needs an 'h' matrix");
    const json& rows = doc["h"];
    const std::size_t dim = rows.size();
    Matrix h(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim)
        throw std::invalid_argument("family JSON: 'h' must be square");
      for (std::size_t c = 0; c < dim; ++c) h(r, c) = complex_from(rows[r][c], "family JSON");
    }
    return SpectralRFamily::from_local_hamiltonian(std::move(h));
  }
  if (kind == "custom") {
    if (!doc.contains("tensor"))
      throw std::invalid_argument("family JSON: custom needs a 'tensor'");
    return SpectralRFamily::custom(tensor_from_json(doc["tensor"].dump()));
  }
  throw std::invalid_argument("family JSON: unknown family '" + kind + "'");
}

JsonValue ybe_report_json(const YbeReport& rep) {
  JsonValue doc = JsonValue::object();
  doc.add("residual", JsonValue::number(rep.residual));
  doc.add("lhs_norm", JsonValue::number(rep.lhs_norm));
  doc.add("lambda", JsonValue::complex_pair(rep.lambda));
  doc.add("mu", JsonValue::complex_pair(rep.mu));
  return doc;
}

JsonValue star_report_json(const StarReport& rep) {
  JsonValue doc = JsonValue::object();
  doc.add("unitarity", JsonValue::number(rep.unitarity));
  doc.add("hermiticity", JsonValue::number(rep.hermiticity));
  doc.add("symmetry", JsonValue::number(rep.symmetry));
  doc.add("verdict", JsonValue::string(to_string(rep.verdict)));
  doc.add("tol", JsonValue::number(rep.tol));
  return doc;
}

JsonValue partition_report_json(Complex z, const LatticeSpec& lattice, const char* method) {
  JsonValue doc = JsonValue::object();
  doc.add("Z", JsonValue::complex_pair(z));
  const double sites = static_cast<double>(lattice.columns * lattice.rows);
  doc.add("logZ_per_site", JsonValue::complex_pair(std::log(z) / sites));
  doc.add("N", JsonValue::integer(static_cast<long long>(lattice.columns)));
  doc.add("M", JsonValue::integer(static_cast<long long>(lattice.rows)));
  doc.add("method", JsonValue::string(method));
  return doc;
}

JsonValue trotter_report_json(const TrotterOrderReport& rep) {
  JsonValue doc = JsonValue::object();
  JsonValue ls = JsonValue::array({});
  for (std::size_t l : rep.steps) ls.push_back(JsonValue::integer(static_cast<long long>(l)));
  doc.add("L", std::move(ls));
  JsonValue errs = JsonValue::array({});
  for (double e : rep.errors) errs.push_back(JsonValue::number(e));
  doc.add("errors", std::move(errs));
  if (rep.status == TrotterOrderStatus::estimated)
    doc.add("slope", JsonValue::number(rep.slope));
  else
    doc.add("slope", JsonValue::string(rep.status == TrotterOrderStatus::exact ? "exact"
                                                                               : "undefined"));
  if (!rep.excluded.empty()) {
    JsonValue ex = JsonValue::array({});
    for (std::size_t i : rep.excluded) ex.push_back(JsonValue::integer(static_cast<long long>(i)));
    doc.add("excluded", std::move(ex));
  }
  return doc;
}

JsonValue correspondence_report_json(const CorrespondenceReport& rep, double halving_ratio) {
  JsonValue doc = JsonValue::object();
  doc.add("u", JsonValue::complex_pair(rep.u));
  doc.add("epsilon", JsonValue::complex_pair(rep.epsilon));
  doc.add("c", JsonValue::complex_pair(rep.scale));
  doc.add("residual", JsonValue::number(rep.residual));
  doc.add("halving_ratio", JsonValue::number(halving_ratio));
  doc.add("alpha", JsonValue::complex_pair(rep.alpha));
  doc.add("real_alpha", JsonValue::boolean(rep.real_alpha));
  return doc;
}

JsonValue convention_report_json(const ConventionSearchReport& rep) {
  JsonValue doc = JsonValue::object();
  if (rep.winner)
    doc.add("winner", JsonValue::string(to_string(*rep.winner)));
  else
    doc.add("winner", JsonValue::string("none: " + rep.failure));
  JsonValue table = JsonValue::object();
  for (std::size_t ci = 0; ci < kAllConventions.size(); ++ci) {
    JsonValue residuals = JsonValue::array({});
    for (double r : rep.table[ci]) residuals.push_back(JsonValue::number(r));
    table.add(to_string(kAllConventions[ci]), std::move(residuals));
  }
  doc.add("table", std::move(table));
  return doc;
}

}  // namespace yblab

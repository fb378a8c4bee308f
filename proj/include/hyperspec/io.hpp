#ifndef HYPERSPEC_IO_HPP
#define HYPERSPEC_IO_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/bounds.hpp"
#include "hyperspec/dynamics.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/theorems.hpp"

namespace hyperspec::io {

// Minimal JSON tree with insertion-ordered object keys and doubles
// printed with 17 significant digits, so emitted reports are
// byte-deterministic.
class JsonValue {
 public:
  enum class Type { Null, Bool, Int, Double, String, Array, Object };

  JsonValue() : type_(Type::Null) {}
  static JsonValue boolean(bool b);
  static JsonValue integer(std::int64_t i);
  static JsonValue number(double d);
  static JsonValue string(std::string s);
  static JsonValue array();
  static JsonValue object();

  Type type() const { return type_; }
  JsonValue& push(JsonValue v);                      // array append
  JsonValue& set(const std::string& key, JsonValue v);  // object append
  std::string dump(int indent = 2) const;

 private:
  void write(std::string& out, int indent, int depth) const;

  Type type_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JsonValue> array_;
  std::vector<std::pair<std::string, JsonValue>> object_;
};

std::string format_double(double d);  // %.17g

struct HypergraphFile {
  Hypergraph hypergraph;
  Annotations annotations;
  bool numeric_ids = false;
};

// Parses the hypergraph JSON document {"vertices", "edges",
// "edge_weights"?, "annotations"?}. Errors: ParseError (malformed JSON,
// with byte position) or the validation errors of the Hypergraph
// constructor.
HypergraphFile parse_hypergraph(const std::string& text);
HypergraphFile load_hypergraph(const std::string& path);

// Canonical emission: vertex order preserved, edge members sorted by
// vertex index, fixed key order. parse . emit is the identity.
std::string emit_hypergraph(const HypergraphFile& file);

// Report sections. schema_version is stamped by make_report.
JsonValue hypergraph_summary(const Hypergraph& h);
JsonValue scheme_section(const WeightScheme& scheme,
                         const WeightAssignment& wa);
JsonValue spectrum_section(const Spectrum& s, bool include_vectors);
JsonValue verification_section(const VerificationReport& report);
JsonValue bounds_section(const BoundReport& report);
JsonValue trajectory_json(const Trajectory& t,
                          const std::vector<std::string>& vertex_ids);
std::string trajectory_csv(const Trajectory& t,
                           const std::vector<std::string>& vertex_ids);

JsonValue make_report(JsonValue body);  // wraps with schema_version

}  // namespace hyperspec::io

#endif

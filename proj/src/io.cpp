#include "hyperspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperspec/error.hpp"
#include "json.hpp"

namespace hyperspec::io {

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.type_ = Type::Bool;
  v.bool_ = b;
  return v;
}
JsonValue JsonValue::integer(std::int64_t i) {
  JsonValue v;
  v.type_ = Type::Int;
  v.int_ = i;
  return v;
}
JsonValue JsonValue::number(double d) {
  JsonValue v;
  v.type_ = Type::Double;
  v.double_ = d;
  return v;
}
JsonValue JsonValue::string(std::string s) {
  JsonValue v;
  v.type_ = Type::String;
  v.string_ = std::move(s);
  return v;
}
JsonValue JsonValue::array() {
  JsonValue v;
  v.type_ = Type::Array;
  return v;
}
JsonValue JsonValue::object() {
  JsonValue v;
  v.type_ = Type::Object;
  return v;
}

JsonValue& JsonValue::push(JsonValue v) {
  array_.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  object_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_double(double d) {
  if (!std::isfinite(d)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  auto newline = [&](int d) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * d, ' ');
  };
  switch (type_) {
    case Type::Null: out += "null"; break;
    case Type::Bool: out += bool_ ? "true" : "false"; break;
    case Type::Int: out += std::to_string(int_); break;
    case Type::Double: out += format_double(double_); break;
    case Type::String: write_escaped(out, string_); break;
    case Type::Array:
      if (array_.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      for (std::size_t i = 0; i < array_.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        array_[i].write(out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    case Type::Object:
      if (object_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      for (std::size_t i = 0; i < object_.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        write_escaped(out, object_[i].first);
        out += indent > 0 ? ": " : ":";
        object_[i].second.write(out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------
// Hypergraph files
// ---------------------------------------------------------------------

HypergraphFile parse_hypergraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array())
    fail(ErrorCode::ParseError,
         "hypergraph file needs 'vertices' and 'edges' arrays");

  auto id_of = [](const nlohmann::json& j, bool* numeric) -> std::string {
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    if (j.is_string()) {
      *numeric = false;
      return j.get<std::string>();
    }
    fail(ErrorCode::ParseError, "vertex ids must be integers or strings");
  };

  bool numeric_ids = true;
  std::vector<std::string> ids;
  for (const auto& j : doc["vertices"]) ids.push_back(id_of(j, &numeric_ids));
  std::vector<std::vector<std::string>> edges;
  bool edge_numeric = true;
  for (const auto& je : doc["edges"]) {
    if (!je.is_array())
      fail(ErrorCode::ParseError, "each edge must be an array of vertex ids");
    std::vector<std::string> members;
    for (const auto& j : je) members.push_back(id_of(j, &edge_numeric));
    edges.push_back(std::move(members));
  }
  std::optional<std::vector<double>> weights;
  if (doc.contains("edge_weights") && !doc["edge_weights"].is_null()) {
    weights.emplace();
    for (const auto& j : doc["edge_weights"]) {
      if (!j.is_number())
        fail(ErrorCode::ParseError, "edge_weights must be numbers");
      weights->push_back(j.get<double>());
    }
  }
  Annotations annotations;
  if (doc.contains("annotations") && !doc["annotations"].is_null()) {
    for (const auto& [key, val] : doc["annotations"].items()) {
      std::vector<std::string> members;
      bool ignore = true;
      for (const auto& j : val) members.push_back(id_of(j, &ignore));
      annotations[key] = std::move(members);
    }
  }
  return HypergraphFile{Hypergraph(std::move(ids), edges, std::move(weights)),
                        std::move(annotations), numeric_ids};
}

HypergraphFile load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string emit_hypergraph(const HypergraphFile& file) {
  const Hypergraph& h = file.hypergraph;
  JsonValue doc = JsonValue::object();
  auto id_value = [&](const std::string& id) {
    if (file.numeric_ids) return JsonValue::integer(std::stoll(id));
    return JsonValue::string(id);
  };
  JsonValue vertices = JsonValue::array();
  for (const auto& id : h.vertex_ids()) vertices.push(id_value(id));
  doc.set("vertices", std::move(vertices));
  JsonValue edges = JsonValue::array();
  for (const auto& e : h.edges()) {
    JsonValue edge = JsonValue::array();
    for (int v : e) edge.push(id_value(h.vertex_id(v)));
    edges.push(std::move(edge));
  }
  doc.set("edges", std::move(edges));
  if (h.has_explicit_weights()) {
    JsonValue weights = JsonValue::array();
    for (double w : h.edge_weights()) weights.push(JsonValue::number(w));
    doc.set("edge_weights", std::move(weights));
  }
  if (!file.annotations.empty()) {
    JsonValue ann = JsonValue::object();
    for (const auto& [key, members] : file.annotations) {
      JsonValue list = JsonValue::array();
      for (const auto& id : members) list.push(id_value(id));
      ann.set(key, std::move(list));
    }
    doc.set("annotations", std::move(ann));
  }
  return doc.dump();
}

// ---------------------------------------------------------------------
// Report sections
// ---------------------------------------------------------------------

JsonValue hypergraph_summary(const Hypergraph& h) {
  JsonValue s = JsonValue::object();
  s.set("vertices", JsonValue::integer(static_cast<std::int64_t>(h.n_vertices())));
  s.set("edges", JsonValue::integer(static_cast<std::int64_t>(h.n_edges())));
  if (h.n_edges() > 0) {
    auto [rk, cr] = rank_corank(h);
    s.set("rank", JsonValue::integer(static_cast<std::int64_t>(rk)));
    s.set("corank", JsonValue::integer(static_cast<std::int64_t>(cr)));
  }
  auto comps = components(h);
  s.set("components", JsonValue::integer(static_cast<std::int64_t>(comps.size())));
  DistanceInfo di = distance_diameter(h);
  if (di.connected) {
    s.set("diameter", JsonValue::integer(di.diameter));
  } else {
    s.set("diameter", JsonValue());  // infinite
    JsonValue per = JsonValue::array();
    for (int d : di.component_diameters) per.push(JsonValue::integer(d));
    s.set("component_diameters", std::move(per));
  }
  if (!h.duplicate_edges().empty()) {
    JsonValue dups = JsonValue::array();
    for (auto [a, b] : h.duplicate_edges()) {
      JsonValue pair = JsonValue::array();
      pair.push(JsonValue::integer(a));
      pair.push(JsonValue::integer(b));
      dups.push(std::move(pair));
    }
    s.set("duplicate_edges", std::move(dups));
  }
  return s;
}

JsonValue scheme_section(const WeightScheme& scheme,
                         const WeightAssignment& wa) {
  JsonValue s = JsonValue::object();
  s.set("name", JsonValue::string(scheme_name(scheme.kind)));
  JsonValue dv = JsonValue::array();
  for (double v : wa.delta_v) dv.push(JsonValue::number(v));
  JsonValue de = JsonValue::array();
  for (double e : wa.delta_e) de.push(JsonValue::number(e));
  s.set("delta_v", std::move(dv));
  s.set("delta_e", std::move(de));
  return s;
}

JsonValue spectrum_section(const Spectrum& s, bool include_vectors) {
  JsonValue out = JsonValue::object();
  out.set("operator", JsonValue::string(operator_kind_name(s.kind)));
  JsonValue vals = JsonValue::array();
  for (double v : s.eigenvalues) vals.push(JsonValue::number(v));
  out.set("eigenvalues", std::move(vals));
  JsonValue clusters = JsonValue::array();
  for (const EigenCluster& c : s.clusters) {
    JsonValue jc = JsonValue::object();
    jc.set("value", JsonValue::number(c.value));
    jc.set("multiplicity",
           JsonValue::integer(static_cast<std::int64_t>(c.multiplicity)));
    clusters.push(std::move(jc));
  }
  out.set("clusters", std::move(clusters));
  out.set("cluster_tolerance", JsonValue::number(s.cluster_tolerance));
  if (include_vectors) {
    JsonValue vecs = JsonValue::array();
    for (const auto& z : s.eigenvectors) {
      JsonValue jz = JsonValue::array();
      for (double v : z) jz.push(JsonValue::number(v));
      vecs.push(std::move(jz));
    }
    out.set("eigenvectors", std::move(vecs));
  }
  return out;
}

JsonValue verification_section(const VerificationReport& report) {
  JsonValue out = JsonValue::object();
  JsonValue list = JsonValue::array();
  for (const PredictionOutcome& oc : report.outcomes) {
    JsonValue jp = JsonValue::object();
    jp.set("theorem", JsonValue::string(oc.prediction.theorem));
    jp.set("operator",
           JsonValue::string(operator_kind_name(oc.prediction.operator_kind)));
    jp.set("value", JsonValue::number(oc.prediction.value));
    jp.set("multiplicity_lower_bound",
           JsonValue::integer(static_cast<std::int64_t>(
               oc.prediction.multiplicity_lower_bound)));
    jp.set("multiplicity_found",
           JsonValue::integer(static_cast<std::int64_t>(oc.multiplicity_found)));
    jp.set("matched_value", JsonValue::number(oc.matched_value));
    jp.set("max_residual", JsonValue::number(oc.max_residual));
    jp.set("pass", JsonValue::boolean(oc.pass));
    JsonValue consts = JsonValue::object();
    for (const auto& [k, v] : oc.prediction.constants)
      consts.set(k, JsonValue::number(v));
    jp.set("constants", std::move(consts));
    list.push(std::move(jp));
  }
  out.set("predictions", std::move(list));
  out.set("all_pass", JsonValue::boolean(report.all_pass));
  return out;
}

JsonValue bounds_section(const BoundReport& report) {
  JsonValue out = JsonValue::object();
  JsonValue list = JsonValue::array();
  for (const BoundRecord& rec : report.records) {
    JsonValue jr = JsonValue::object();
    jr.set("name", JsonValue::string(rec.name));
    jr.set("evaluated", JsonValue::boolean(rec.evaluated));
    if (rec.evaluated) {
      jr.set("lhs", JsonValue::number(rec.lhs));
      jr.set("relation", JsonValue::string(rec.relation));
      jr.set("rhs", JsonValue::number(rec.rhs));
      jr.set("slack", JsonValue::number(rec.slack));
      jr.set("holds", JsonValue::boolean(rec.holds));
    }
    if (!rec.note.empty()) jr.set("note", JsonValue::string(rec.note));
    if (!rec.witness.empty()) jr.set("witness", JsonValue::string(rec.witness));
    list.push(std::move(jr));
  }
  out.set("inequalities", std::move(list));
  if (report.kappa) {
    out.set("kappa_w", JsonValue::integer(
                           static_cast<std::int64_t>(report.kappa->kappa)));
  }
  if (report.cuts) {
    out.set("max_cut",
            JsonValue::integer(static_cast<std::int64_t>(report.cuts->mc)));
    out.set("bipartition_width",
            JsonValue::integer(static_cast<std::int64_t>(report.cuts->bw)));
    out.set("cheeger", JsonValue::number(report.cuts->cheeger));
  }
  out.set("exact", JsonValue::boolean(report.exact));
  out.set("all_hold", JsonValue::boolean(report.all_hold));
  return out;
}

JsonValue trajectory_json(const Trajectory& t,
                          const std::vector<std::string>& vertex_ids) {
  JsonValue out = JsonValue::object();
  JsonValue header = JsonValue::array();
  for (const auto& id : vertex_ids) header.push(JsonValue::string(id));
  out.set("vertices", std::move(header));
  JsonValue times = JsonValue::array();
  for (double v : t.times) times.push(JsonValue::number(v));
  out.set("times", std::move(times));
  JsonValue states = JsonValue::array();
  for (const auto& state : t.states) {
    JsonValue row = JsonValue::array();
    for (double v : state) row.push(JsonValue::number(v));
    states.push(std::move(row));
  }
  out.set("states", std::move(states));
  JsonValue cons = JsonValue::array();
  for (double v : t.conserved) cons.push(JsonValue::number(v));
  out.set("conserved", std::move(cons));
  return out;
}

std::string trajectory_csv(const Trajectory& t,
                           const std::vector<std::string>& vertex_ids) {
  std::string out = "t";
  for (const auto& id : vertex_ids) out += "," + id;
  out += '\n';
  for (std::size_t i = 0; i < t.times.size(); ++i) {
    out += format_double(t.times[i]);
    for (double v : t.states[i]) out += "," + format_double(v);
    out += '\n';
  }
  return out;
}

JsonValue make_report(JsonValue body) {
  JsonValue report = JsonValue::object();
  report.set("schema_version", JsonValue::integer(1));
  report.set("report", std::move(body));
  return report;
}

}  // namespace hyperspec::io

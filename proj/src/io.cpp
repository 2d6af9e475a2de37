#include "discoef/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace discoef::io {

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
  return out;
}

std::string vector_json(const Vector& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v(i));
  }
  out += "]";
  return out;
}

std::string rows_json(const std::vector<Vector>& rows, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += inner + vector_json(rows[i]);
    if (i + 1 < rows.size()) out += ",";
    out += "\n";
  }
  out += pad + "]";
  return out;
}

std::string matrix_json(const Matrix& M, int indent) {
  std::vector<Vector> rows;
  rows.reserve(M.rows());
  for (int i = 0; i < M.rows(); ++i) rows.push_back(M.row(i).transpose());
  return rows_json(rows, indent);
}

std::string instance_json(const Instance& inst, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  const std::string inner2(indent + 4, ' ');
  std::ostringstream out;
  out << "{\n";
  out << inner << "\"dim\": " << inst.dim() << ",\n";
  out << inner << "\"body\": {\n";
  if (inst.body.is_polytope()) {
    out << inner2 << "\"kind\": \"vpolytope\",\n";
    out << inner2 << "\"generators\": "
        << rows_json(inst.body.as_polytope().generators(), indent + 4) << "\n";
  } else {
    out << inner2 << "\"kind\": \"ellipsoid\",\n";
    out << inner2 << "\"shape\": "
        << matrix_json(inst.body.as_ellipsoid().shape(), indent + 4) << "\n";
  }
  out << inner << "},\n";
  out << inner << "\"vectors\": " << rows_json(inst.vectors.vectors(), indent + 2);
  if (inst.label) {
    out << ",\n" << inner << "\"label\": \"" << escape(*inst.label) << "\"";
  }
  out << "\n" << pad << "}";
  return out.str();
}

Vector parse_vector(const json& j, int dim, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw IoError(std::string(where) + ": expected an array of " +
                  std::to_string(dim) + " numbers");
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number()) {
      throw IoError(std::string(where) + ": entries must be numbers");
    }
    v(i) = j[i].get<double>();
  }
  return v;
}

std::vector<Vector> parse_rows(const json& j, int dim, const char* where) {
  if (!j.is_array() || j.empty()) {
    throw IoError(std::string(where) + ": expected a nonempty array");
  }
  std::vector<Vector> rows;
  rows.reserve(j.size());
  for (const auto& row : j) rows.push_back(parse_vector(row, dim, where));
  return rows;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string serialize_instance(const Instance& inst) {
  return instance_json(inst, 0) + "\n";
}

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw IoError(std::string("instance: invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw IoError("instance: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw IoError("instance: missing integer field \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 2) throw IoError("instance: dim must be at least 2");
  if (!j.contains("body") || !j["body"].is_object()) {
    throw IoError("instance: missing object field \"body\"");
  }
  const json& body = j["body"];
  if (!body.contains("kind") || !body["kind"].is_string()) {
    throw IoError("instance: body needs a string field \"kind\"");
  }
  const std::string kind = body["kind"].get<std::string>();

  auto make_body = [&]() -> SymmetricBody {
    if (kind == "vpolytope") {
      if (!body.contains("generators")) {
        throw IoError("instance: vpolytope body needs \"generators\"");
      }
      return SymmetricBody::polytope(
          dim, parse_rows(body["generators"], dim, "generators"));
    }
    if (kind == "ellipsoid") {
      if (!body.contains("shape")) {
        throw IoError("instance: ellipsoid body needs \"shape\"");
      }
      std::vector<Vector> rows = parse_rows(body["shape"], dim, "shape");
      if (static_cast<int>(rows.size()) != dim) {
        throw IoError("shape: expected a square matrix");
      }
      Matrix M(dim, dim);
      for (int i = 0; i < dim; ++i) M.row(i) = rows[i].transpose();
      return SymmetricBody::ellipsoid(std::move(M));
    }
    throw IoError("instance: unknown body kind \"" + kind + "\"");
  };
  SymmetricBody K = make_body();

  if (!j.contains("vectors")) throw IoError("instance: missing \"vectors\"");
  VectorSet V(dim, parse_rows(j["vectors"], dim, "vectors"));

  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw IoError("instance: label must be a string");
    label = j["label"].get<std::string>();
  }
  return Instance{std::move(K), std::move(V), std::move(label)};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  if (!out) throw IoError("failed writing output file: " + path);
}

std::string serialize_ratio_report(const RatioReport& r) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"m\": " << r.m << ",\n";
  out << "  \"n_vectors\": " << r.n_vectors << ",\n";
  out << "  \"numerator\": " << format_double(r.numerator) << ",\n";
  out << "  \"denominator\": " << format_double(r.denominator) << ",\n";
  out << "  \"ratio\": " << format_double(r.ratio) << ",\n";
  out << "  \"coefficient\": " << format_double(r.coefficient) << ",\n";
  out << "  \"bound\": " << format_double(r.bound) << ",\n";
  out << "  \"coefficient_bound\": " << format_double(r.coefficient_bound) << ",\n";
  out << "  \"slack\": " << format_double(r.slack) << "\n";
  out << "}\n";
  return out.str();
}

std::string ratio_report_text(const RatioReport& r) {
  std::ostringstream out;
  out << "m = " << r.m << "\n";
  out << "n_vectors = " << r.n_vectors << "\n";
  out << "numerator = " << format_double(r.numerator) << "\n";
  out << "denominator = " << format_double(r.denominator) << "\n";
  out << "ratio = " << format_double(r.ratio) << "\n";
  out << "coefficient = " << format_double(r.coefficient) << "\n";
  out << "bound = " << format_double(r.bound) << "\n";
  out << "coefficient_bound = " << format_double(r.coefficient_bound) << "\n";
  out << "slack = " << format_double(r.slack) << "\n";
  return out.str();
}

std::string serialize_john(const JohnResult& j) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"dim\": " << j.dim << ",\n";
  out << "  \"eps\": " << format_double(j.eps) << ",\n";
  out << "  \"shape\": " << matrix_json(j.inner.shape(), 2) << ",\n";
  out << "  \"factor\": " << matrix_json(j.factor, 2) << ",\n";
  out << "  \"outer_ok\": " << bool_str(j.outer_ok) << ",\n";
  out << "  \"inner_ok\": " << bool_str(j.inner_ok) << ",\n";
  out << "  \"n_dirs\": " << j.n_dirs << "\n";
  out << "}\n";
  return out.str();
}

std::string john_text(const JohnResult& j) {
  std::ostringstream out;
  out << "dim = " << j.dim << "\n";
  out << "eps = " << format_double(j.eps) << "\n";
  for (int i = 0; i < j.inner.shape().rows(); ++i) {
    out << "shape[" << i << "] = " << vector_json(j.inner.shape().row(i).transpose())
        << "\n";
  }
  for (int i = 0; i < j.factor.rows(); ++i) {
    out << "factor[" << i << "] = " << vector_json(j.factor.row(i).transpose())
        << "\n";
  }
  out << "outer_ok = " << bool_str(j.outer_ok) << "\n";
  out << "inner_ok = " << bool_str(j.inner_ok) << "\n";
  out << "n_dirs = " << j.n_dirs << "\n";
  return out.str();
}

std::string serialize_sweep(const SweepSummary& s) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"trials\": " << s.trials << ",\n";
  out << "  \"violations_eq1\": " << s.violations_eq1 << ",\n";
  out << "  \"violations_chain\": " << s.violations_chain << ",\n";
  out << "  \"max_ratio_over_m\": " << format_double(s.max_ratio_over_m) << ",\n";
  out << "  \"max_ratio_over_bound\": " << format_double(s.max_ratio_over_bound)
      << ",\n";
  out << "  \"seed\": \"" << u64_str(s.seed) << "\",\n";
  out << "  \"elapsed_seconds\": " << format_double(s.elapsed_seconds) << ",\n";
  out << "  \"failures\": [";
  for (std::size_t i = 0; i < s.failures.size(); ++i) {
    if (i) out << ",";
    out << "\n    {\"trial\": " << s.failures[i].trial << ", \"seed\": \""
        << u64_str(s.failures[i].seed) << "\", \"message\": \""
        << escape(s.failures[i].message) << "\"}";
  }
  if (!s.failures.empty()) out << "\n  ";
  out << "]\n";
  out << "}\n";
  return out.str();
}

std::string sweep_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "trials = " << s.trials << "\n";
  out << "violations_eq1 = " << s.violations_eq1 << "\n";
  out << "violations_chain = " << s.violations_chain << "\n";
  out << "max_ratio_over_m = " << format_double(s.max_ratio_over_m) << "\n";
  out << "max_ratio_over_bound = " << format_double(s.max_ratio_over_bound) << "\n";
  out << "seed = " << u64_str(s.seed) << "\n";
  out << "elapsed_seconds = " << format_double(s.elapsed_seconds) << "\n";
  out << "failures = " << s.failures.size() << "\n";
  for (const auto& f : s.failures) {
    out << "failure trial=" << f.trial << " seed=" << u64_str(f.seed) << " message="
        << f.message << "\n";
  }
  return out.str();
}

std::string serialize_search(const SearchResult& s) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"max_ratio_over_m\": " << format_double(s.max_ratio_over_m) << ",\n";
  out << "  \"report\": {\n";
  out << "    \"m\": " << s.report.m << ",\n";
  out << "    \"n_vectors\": " << s.report.n_vectors << ",\n";
  out << "    \"numerator\": " << format_double(s.report.numerator) << ",\n";
  out << "    \"denominator\": " << format_double(s.report.denominator) << ",\n";
  out << "    \"ratio\": " << format_double(s.report.ratio) << ",\n";
  out << "    \"coefficient\": " << format_double(s.report.coefficient) << ",\n";
  out << "    \"bound\": " << format_double(s.report.bound) << ",\n";
  out << "    \"coefficient_bound\": " << format_double(s.report.coefficient_bound)
      << ",\n";
  out << "    \"slack\": " << format_double(s.report.slack) << "\n";
  out << "  },\n";
  out << "  \"instance\": " << instance_json(s.best, 2) << "\n";
  out << "}\n";
  return out.str();
}

std::string search_text(const SearchResult& s) {
  std::ostringstream out;
  out << "max_ratio_over_m = " << format_double(s.max_ratio_over_m) << "\n";
  out << ratio_report_text(s.report);
  return out.str();
}

std::string serialize_baum(const std::vector<BaumRow>& rows) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BaumRow& r = rows[i];
    out << "  {\"m\": " << r.m << ", \"mean\": " << format_double(r.estimate.mean)
        << ", \"stderr\": " << format_double(r.estimate.std_error)
        << ", \"threshold\": " << format_double(r.threshold)
        << ", \"n\": " << r.estimate.n << ", \"seed\": \""
        << u64_str(r.estimate.seed) << "\", \"ok\": " << bool_str(r.ok) << "}";
    if (i + 1 < rows.size()) out << ",";
    out << "\n";
  }
  out << "]\n";
  return out.str();
}

std::string baum_text(const std::vector<BaumRow>& rows) {
  std::ostringstream out;
  for (const BaumRow& r : rows) {
    out << "m=" << r.m << " mean=" << format_double(r.estimate.mean)
        << " stderr=" << format_double(r.estimate.std_error)
        << " threshold=" << format_double(r.threshold)
        << " ok=" << bool_str(r.ok) << "\n";
  }
  return out.str();
}

}  // namespace discoef::io

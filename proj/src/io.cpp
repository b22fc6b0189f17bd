#include "ratapprox/io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "ratapprox/error.hpp"

namespace ratapprox::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw ArgumentError("CsvWriter: wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& cells) {
  std::vector<std::string> s;
  s.reserve(cells.size());
  for (double x : cells) s.push_back(format_double(x));
  row(s);
}

void JsonWriter::separator() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ << ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ << '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ << '}';
  if (first_.empty()) out_ << '\n';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ << '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ << ']';
  if (first_.empty()) out_ << '\n';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separator();
  out_ << nlohmann::json(std::string(k)).dump() << ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separator();
  if (std::isfinite(x)) out_ << format_double(x);
  else out_ << "null";
  return *this;
}

JsonWriter& JsonWriter::value(long long x) {
  separator();
  out_ << x;
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separator();
  out_ << (b ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separator();
  out_ << nlohmann::json(std::string(s)).dump();
  return *this;
}

JsonWriter& JsonWriter::array(const std::vector<double>& xs) {
  begin_array();
  for (double x : xs) value(x);
  return end_array();
}

JsonWriter& JsonWriter::matrix(const linalg::DenseMatrix& M) {
  begin_array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    begin_array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) value(M(i, j));
    end_array();
  }
  return end_array();
}

namespace {

std::vector<double> to_std(const linalg::Vector& v) { return {v.data(), v.data() + v.size()}; }

linalg::DenseMatrix matrix_from(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) throw DataError(std::string("model JSON: ") + name + " must be an array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  linalg::DenseMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw DataError(std::string("model JSON: ragged matrix ") + name);
    for (Eigen::Index c = 0; c < cols; ++c) M(i, c) = j[i][c].get<double>();
  }
  return M;
}

linalg::Vector vector_from(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) throw DataError(std::string("model JSON: ") + name + " must be an array");
  linalg::Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

nlohmann::json parse(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

void write_model_json(std::ostream& out, const RationalApproximant& m) {
  JsonWriter w(out);
  w.begin_object();
  w.key("order").value(static_cast<long long>(m.order()));
  w.key("num_degree").value(m.num_degree);
  w.key("den_degree").value(m.den_degree);
  w.key("E").matrix(m.E);
  w.key("A").matrix(m.A);
  w.key("B").array(to_std(m.B));
  w.key("C").array(to_std(m.C));
  w.key("D").value(m.D);
  w.end_object();
}

RationalApproximant read_model_json(std::istream& in) {
  const auto j = parse(in);
  try {
    RationalApproximant m;
    m.E = matrix_from(j.at("E"), "E");
    m.A = matrix_from(j.at("A"), "A");
    m.B = vector_from(j.at("B"), "B");
    m.C = vector_from(j.at("C"), "C");
    m.D = j.value("D", 0.0);
    m.num_degree = j.value("num_degree", static_cast<int>(m.E.rows()) - 1);
    m.den_degree = j.value("den_degree", static_cast<int>(m.E.rows()));
    check_shapes(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("model JSON: ") + e.what());
  }
}

void write_barycentric_json(std::ostream& out, const aaa::BarycentricForm& b) {
  JsonWriter w(out);
  w.begin_object();
  w.key("order").value(b.order());
  w.key("support").array(b.support);
  w.key("values").array(b.values);
  w.key("weights").array(b.weights);
  w.end_object();
}

aaa::BarycentricForm read_barycentric_json(std::istream& in) {
  const auto j = parse(in);
  try {
    aaa::BarycentricForm b;
    b.support = j.at("support").get<std::vector<double>>();
    b.values = j.at("values").get<std::vector<double>>();
    b.weights = j.at("weights").get<std::vector<double>>();
    if (b.values.size() != b.support.size() || b.weights.size() != b.support.size())
      throw DataError("barycentric JSON: support, values and weights differ in length");
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("barycentric JSON: ") + e.what());
  }
}

void write_report_fields(JsonWriter& w, const maxerror::ErrorReport& r) {
  w.key("eps_total").value(r.eps_total);
  w.key("eps_minus").value(r.eps_minus);
  w.key("eps_plus").value(r.eps_plus);
  w.key("eps_at").begin_object();
  w.key("-1").value(r.eps_at_minus1);
  w.key("0").value(r.eps_at_0);
  w.key("1").value(r.eps_at_1);
  w.end_object();
  w.key("argmax_minus").value(r.argmax_minus);
  w.key("argmax_plus").value(r.argmax_plus);
  w.key("argmax_total").value(r.argmax_total);
  w.key("valid").value(r.valid);
  w.key("poles_in_interval").array(r.poles_in_interval);
}

void write_report_json(std::ostream& out, const maxerror::ErrorReport& r) {
  JsonWriter w(out);
  w.begin_object();
  write_report_fields(w, r);
  w.end_object();
}

}  // namespace ratapprox::io

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ratapprox/aaa.hpp"
#include "ratapprox/maxerror.hpp"
#include "ratapprox/model.hpp"

namespace ratapprox::io {

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

/// Comma separated, header row, LF line endings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<double>& cells);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

/// Minimal streaming JSON writer. Numbers use 17 significant digits,
/// non-finite numbers are written as null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(long long x);
  JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& array(const std::vector<double>& xs);
  JsonWriter& matrix(const linalg::DenseMatrix& M);  // row-major nested arrays

 private:
  void separator();
  std::ostream& out_;
  std::vector<bool> first_;  // per open container
  bool after_key_ = false;
};

/// {"order", "num_degree", "den_degree", "E", "A", "B", "C", "D"}.
void write_model_json(std::ostream& out, const RationalApproximant& m);
RationalApproximant read_model_json(std::istream& in);

/// {"support", "values", "weights"}.
void write_barycentric_json(std::ostream& out, const aaa::BarycentricForm& b);
aaa::BarycentricForm read_barycentric_json(std::istream& in);

void write_report_json(std::ostream& out, const maxerror::ErrorReport& r);
void write_report_fields(JsonWriter& w, const maxerror::ErrorReport& r);

}  // namespace ratapprox::io

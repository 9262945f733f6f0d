#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace relspeed::cli {

// Doubles rendered as %.12g with negative zero flushed to zero, so identical
// inputs give byte-identical documents run after run.
std::string fmt_double(double v);

std::string json_escape(std::string_view s);

// Streaming JSON writer with insertion-ordered keys. Hand-rolled because the
// byte layout is part of the output contract: a general serializer owns the
// float format and key order, this one pins both.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

  // The finished document plus trailing newline.
  std::string take();

 private:
  void separate();

  std::string out_;
  std::vector<bool> first_in_scope_;
  bool after_key_ = false;
};

// One CSV field, quoted only when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);

// Joins fields with commas and appends a newline.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace relspeed::cli

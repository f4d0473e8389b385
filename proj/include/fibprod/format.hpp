#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coeff_array.hpp"

namespace fibprod {

enum class dump_format { bfile, csv, json };

inline dump_format parse_dump_format(const std::string& name) {
  if (name == "bfile") return dump_format::bfile;
  if (name == "csv") return dump_format::csv;
  if (name == "json") return dump_format::json;
  throw std::invalid_argument("unknown format: " + name);
}

namespace detail {

// Strings are assembled by hand (std::to_string and raw bytes), so the
// output is identical no matter what the global locale says.
inline void write_lines(std::ostream& os, const coeff_array& arr, char sep) {
  std::string buf;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    buf += std::to_string(i);
    buf += sep;
    buf += std::to_string(arr[i].value());
    buf += '\n';
    if (buf.size() >= (1u << 16)) {
      os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

inline coeff parse_coeff_token(const std::string& token, std::size_t line_no) {
  if (token == "1") return coeff(1);
  if (token == "0") return coeff(0);
  if (token == "-1") return coeff(-1);
  throw std::invalid_argument("line " + std::to_string(line_no) + ": coefficient \"" + token +
                              "\" is not one of -1, 0, 1");
}

inline coeff_array parse_lines(std::istream& is, char sep, bool header) {
  std::string line;
  std::size_t line_no = 0;
  if (header) {
    if (!std::getline(is, line) || line != "position,coefficient")
      throw std::invalid_argument("missing or malformed csv header");
    ++line_no;
  }
  std::vector<coeff> values;
  while (std::getline(is, line)) {
    ++line_no;
    const auto cut = line.find(sep);
    if (cut == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": missing separator");
    if (line.substr(0, cut) != std::to_string(values.size()))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": positions must ascend from 0 without gaps");
    values.push_back(parse_coeff_token(line.substr(cut + 1), line_no));
  }
  coeff_array out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.set(i, values[i]);
  return out;
}

}  // namespace detail

// b-file: "position coefficient\n" per line, ascending from 0, no header,
// no trailing blank line. The standard interchange shape for integer
// sequences; pinned byte for byte.
inline void write_bfile(std::ostream& os, const coeff_array& arr) {
  detail::write_lines(os, arr, ' ');
}

inline coeff_array parse_bfile(std::istream& is) { return detail::parse_lines(is, ' ', false); }

inline void write_csv(std::ostream& os, const coeff_array& arr) {
  os.write("position,coefficient\n", 21);
  detail::write_lines(os, arr, ',');
}

inline coeff_array parse_csv(std::istream& is) { return detail::parse_lines(is, ',', true); }

// JSON: array of [position-as-string, coefficient-as-number]. Positions ride
// as strings so the format stays lossless at any magnitude.
inline void write_json(std::ostream& os, const coeff_array& arr) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < arr.size(); ++i)
    rows.push_back({std::to_string(i), arr[i].value()});
  const std::string text = rows.dump();
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
}

inline coeff_array parse_json(std::istream& is) {
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed json: ") + e.what());
  }
  if (!rows.is_array()) throw std::invalid_argument("json root must be an array");
  coeff_array out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_number_integer())
      throw std::invalid_argument("json row " + std::to_string(i) +
                                  " is not [position-string, coefficient]");
    if (row[0].get<std::string>() != std::to_string(i))
      throw std::invalid_argument("json positions must ascend from 0 without gaps");
    const auto v = row[1].get<std::int64_t>();
    if (v < -1 || v > 1)
      throw std::invalid_argument("json row " + std::to_string(i) + ": coefficient out of range");
    out.set(i, coeff(static_cast<int>(v)));
  }
  return out;
}

inline void write_dump(std::ostream& os, const coeff_array& arr, dump_format format) {
  switch (format) {
    case dump_format::bfile: write_bfile(os, arr); break;
    case dump_format::csv: write_csv(os, arr); break;
    case dump_format::json: write_json(os, arr); break;
  }
}

}  // namespace fibprod

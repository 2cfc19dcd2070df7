#include "weylwalk/io.hpp"

#include <cstdio>
#include <fstream>

namespace weylwalk::io {

namespace {

BigInt bigint_from_decimal(const Json& j, const char* field) {
  if (!j.is_string())
    throw FormatError(std::string(field) + " must be a decimal string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw FormatError(std::string(field) + " is not a valid decimal integer: " +
                      j.get<std::string>());
  }
}

}  // namespace

Json amplitude_json(const Amplitude& a) {
  return Json{{"re", a.re().get_str()},
              {"im", a.im().get_str()},
              {"log2_den", a.log2_den()}};
}

Amplitude amplitude_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
      !j.contains("log2_den"))
    throw FormatError("amplitude must be {re, im, log2_den}");
  if (!j.at("log2_den").is_number_integer())
    throw FormatError("log2_den must be an integer");
  const long d = j.at("log2_den").get<long>();
  if (d < 0) throw FormatError("log2_den must be non-negative");
  return Amplitude(bigint_from_decimal(j.at("re"), "re"),
                   bigint_from_decimal(j.at("im"), "im"), d);
}

Json spinor_json(const Spinor& v) {
  return Json{{"up", amplitude_json(v.up)}, {"down", amplitude_json(v.down)}};
}

Spinor spinor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("up") || !j.contains("down"))
    throw FormatError("spinor must be {up, down}");
  return {amplitude_from_json(j.at("up")), amplitude_from_json(j.at("down"))};
}

Json site_json(const Site& x) { return Json::array({x.x1, x.x2, x.x3}); }

Site site_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() ||
      !j[1].is_number_integer() || !j[2].is_number_integer())
    throw FormatError("site must be an array of three integers");
  try {
    return Site(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                j[2].get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json state_json(const WalkState& s) {
  Json arr = Json::array();
  for (const auto& [x, v] : s.sites()) {
    Json row = Json{{"x", site_json(x)}};
    row.update(spinor_json(v));
    arr.push_back(std::move(row));
  }
  return arr;
}

WalkState state_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("state must be an array of site rows");
  WalkState s;
  for (const auto& row : j) {
    if (!row.is_object() || !row.contains("x"))
      throw FormatError("state row must be {x, up, down}");
    try {
      s.add(site_from_json(row.at("x")), spinor_from_json(row));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());  // mixed parity across rows
    }
  }
  return s;
}

WalkState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open state file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw FormatError("state file is not valid JSON: " + std::string(e.what()));
  }
  return state_from_json(j);
}

Json matrix_entries_json(const SpinMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(amplitude_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_float_view_json(const SpinMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) {
      const auto z = m.at(r, c).to_complex();
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SpinMatrix matrix_from_entries_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw FormatError("matrix entries must be a 2x2 array");
  SpinMatrix m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.at(r, c) = amplitude_from_json(j[r][c]);
  return m;
}

Json propagator_record_json(const Propagator& p) {
  return Json{{"t", p.t},
              {"chirality", chirality_label(p.chirality)},
              {"from", site_json(p.from)},
              {"to", site_json(p.to)},
              {"entries", matrix_entries_json(p.matrix)},
              {"float_view", matrix_float_view_json(p.matrix)}};
}

std::string chirality_label(Chirality c) {
  return c == Chirality::plus ? "+" : "-";
}

Chirality chirality_from_label(const std::string& s) {
  if (s == "+" || s == "plus") return Chirality::plus;
  if (s == "-" || s == "minus") return Chirality::minus;
  throw FormatError("chirality must be '+' or '-'");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace weylwalk::io

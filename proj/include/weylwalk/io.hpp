#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "weylwalk/propagator.hpp"
#include "weylwalk/walk.hpp"

namespace weylwalk::io {

using Json = nlohmann::ordered_json;

/// Malformed input file or record.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact amplitude <-> {"re": decimal string, "im": decimal string,
/// "log2_den": integer}.  The round trip is lossless.
Json amplitude_json(const Amplitude& a);
Amplitude amplitude_from_json(const Json& j);

Json spinor_json(const Spinor& v);
Spinor spinor_from_json(const Json& j);

/// State <-> array of {"x": [x1,x2,x3], "up": amp, "down": amp}.
Json state_json(const WalkState& s);
WalkState state_from_json(const Json& j);
WalkState read_state_file(const std::string& path);

Json site_json(const Site& x);
Site site_from_json(const Json& j);

/// 2x2 entries as exact amplitudes plus a nearest-double view.
Json matrix_entries_json(const SpinMatrix& m);
Json matrix_float_view_json(const SpinMatrix& m);
SpinMatrix matrix_from_entries_json(const Json& j);

Json propagator_record_json(const Propagator& p);

std::string chirality_label(Chirality c);
Chirality chirality_from_label(const std::string& s);

/// Shortest round-trip decimal form used by every CSV column.
std::string format_double(double v);

}  // namespace weylwalk::io

#pragma once

#include <string>

#include "superpose/states.hpp"

namespace superpose {

/// Parsed state plus the normalization that was applied to the raw entries
/// (1.0 when the file already held a unit vector).
struct LoadedState {
  PureState state;
  double norm_factor;
};

/// State JSON schema: {"n": int, "m": int, "re": [n*m], "im": [n*m]},
/// row-major. Wrong lengths, non-finite values and malformed documents are
/// parse errors naming the offending field.
LoadedState parse_state_json(const std::string& text);
LoadedState load_state(const std::string& path);

std::string state_to_json(const PureState& s);
void save_state(const PureState& s, const std::string& path);

/// 17 significant digits: round-trip exact for doubles, byte-stable output.
std::string fmt_g17(double x);
/// 7 significant digits for human-facing text.
std::string fmt_g7(double x);

}  // namespace superpose

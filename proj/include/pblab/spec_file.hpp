#ifndef PBLAB_SPEC_FILE_HPP
#define PBLAB_SPEC_FILE_HPP

#include <string>
#include <vector>

#include "pblab/family.hpp"

namespace pblab {

/// A family description plus optional explicit lower components of G for
/// build-g runs.
struct SpecFile {
  FamilySpec family;
  std::vector<Poly> lower_g;  // G_1, G_2, ... (dense, zero-filled)
};

/// Flat key-value format, one `key = value` per line, '#' comments.
/// Keys: n, d, N, t (integers), h (polynomial text), F1..Fs (polynomial
/// text, omitted components are zero), a<j> (rationals), optional G<j>
/// lower components. Malformed lines raise errc::parse_error with the
/// line number; violated family invariants raise errc::invalid_parameters
/// naming the constraint.
SpecFile parse_spec_text(const std::string& text);

SpecFile load_spec_file(const std::string& path);

}  // namespace pblab

#endif

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcarrier/spinor_field.hpp"

namespace qcarrier {

class CsvFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a tabulated initial state with header `q,re_a,im_a,re_b,im_b`.
/// Rows must be uniformly spaced in q (relative tolerance 1e-9) and their
/// count a power of two; the grid is [q_0, q_0 + n dq).
/// Throws CsvFormatError on malformed input.
SpinorField read_spinor_csv(std::istream& in, double h1 = 1.0);
SpinorField read_spinor_csv(const std::string& path, double h1 = 1.0);

/// Writes `q,density,re_a,im_a,re_b,im_b`, 17 significant digits.
void write_snapshot_csv(std::ostream& out, const SpinorField& psi);

/// %.17g
std::string format_double(double value);

}  // namespace qcarrier

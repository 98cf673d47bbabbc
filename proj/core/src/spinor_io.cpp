#include "qcarrier/spinor_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace qcarrier {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> values;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cell.size() || !std::isfinite(v)) {
      throw CsvFormatError("line " + std::to_string(line_no) +
                           ": not a finite number: '" + cell + "'");
    }
    values.push_back(v);
  }
  if (values.size() != 5) {
    throw CsvFormatError("line " + std::to_string(line_no) +
                         ": expected 5 columns");
  }
  return values;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SpinorField read_spinor_csv(std::istream& in, double h1) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "q,re_a,im_a,re_b,im_b") {
    throw CsvFormatError("expected header 'q,re_a,im_a,re_b,im_b'");
  }
  std::vector<double> q;
  std::vector<complex> a;
  std::vector<complex> b;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto row = parse_row(line, line_no);
    q.push_back(row[0]);
    a.emplace_back(row[1], row[2]);
    b.emplace_back(row[3], row[4]);
  }
  if (q.size() < 2) throw CsvFormatError("need at least two rows");
  const double dq = q[1] - q[0];
  if (!(dq > 0.0)) throw CsvFormatError("q must be strictly increasing");
  for (std::size_t j = 1; j < q.size(); ++j) {
    const double expected = q[0] + static_cast<double>(j) * dq;
    if (std::abs(q[j] - expected) > 1e-9 * std::max(std::abs(dq), std::abs(expected))) {
      throw CsvFormatError("q column is not uniformly spaced at row " +
                           std::to_string(j + 2));
    }
  }
  try {
    SpatialGrid grid(q.size(), q[0], q[0] + static_cast<double>(q.size()) * dq, h1);
    return SpinorField{grid, Domain::position, std::move(a), std::move(b)};
  } catch (const std::invalid_argument& e) {
    throw CsvFormatError(e.what());
  }
}

SpinorField read_spinor_csv(const std::string& path, double h1) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_spinor_csv(in, h1);
}

void write_snapshot_csv(std::ostream& out, const SpinorField& psi) {
  psi.validate();
  out << "q,density,re_a,im_a,re_b,im_b\n";
  for (std::size_t j = 0; j < psi.a.size(); ++j) {
    const double density = std::norm(psi.a[j]) + std::norm(psi.b[j]);
    out << format_double(psi.grid.q(j)) << ',' << format_double(density) << ','
        << format_double(psi.a[j].real()) << ','
        << format_double(psi.a[j].imag()) << ','
        << format_double(psi.b[j].real()) << ','
        << format_double(psi.b[j].imag()) << '\n';
  }
}

}  // namespace qcarrier

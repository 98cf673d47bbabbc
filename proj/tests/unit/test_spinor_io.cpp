#include <catch_amalgamated.hpp>

#include <sstream>

#include "qcarrier/pse.hpp"
#include "qcarrier/spinor_io.hpp"

using namespace qcarrier;

TEST_CASE("snapshot CSV round-trips through the initial-state reader", "[io]") {
  const SpatialGrid grid(16, -4.0, 4.0);
  const auto psi = gaussian_packet(
      grid, {.center = 0.5, .width = 1.1, .momentum = 0.9, .weight_a = 1.0,
             .weight_b = complex{0.0, 0.4}});
  std::ostringstream out;
  write_snapshot_csv(out, psi);
  const std::string text = out.str();
  CHECK(text.rfind("q,density,re_a,im_a,re_b,im_b\n", 0) == 0);

  // Drop the density column to get the input schema.
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  std::ostringstream input;
  input << "q,re_a,im_a,re_b,im_b\n";
  while (std::getline(lines, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    input << line.substr(0, first) << line.substr(second) << '\n';
  }
  std::istringstream in(input.str());
  const auto back = read_spinor_csv(in);
  CHECK(back.grid.n_points() == 16);
  CHECK(back.grid.q_min() == -4.0);
  CHECK(back.a == psi.a);
  CHECK(back.b == psi.b);
}

TEST_CASE("17 significant digits", "[io]") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("malformed initial-state CSV is rejected", "[io]") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_spinor_csv(in);
  };
  CHECK_THROWS_AS(parse("x,re_a,im_a,re_b,im_b\n0,1,0,0,0\n1,1,0,0,0\n"), CsvFormatError);
  CHECK_THROWS_AS(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0\n1,1,0,0,0\n"), CsvFormatError);
  CHECK_THROWS_AS(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0,0\n1,abc,0,0,0\n"), CsvFormatError);
  CHECK_THROWS_AS(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0,0\n1,1,0,0,0\n2,1,0,0,0\n"),
                  CsvFormatError);
  CHECK_THROWS_AS(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0,0\n1,1,0,0,0\n3,1,0,0,0\n"
                        "4,1,0,0,0\n"),
                  CsvFormatError);
  CHECK_THROWS_AS(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0,0\n"), CsvFormatError);
  CHECK_NOTHROW(parse("q,re_a,im_a,re_b,im_b\n0,1,0,0,0\n0.5,1,0,0,0\n"));
}

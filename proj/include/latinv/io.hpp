// Record ingestion (CSV / JSON), invariant reports and grid export.
//
// CSV schemas, selected by the header:
//   cell:      id,a,b,c,alpha,beta,gamma        (angles in degrees)
//   basis:     id,b11,b12,b13,b21,b22,b23,b31,b32,b33   (rows are v1,v2,v3)
//   root form: id,r23,r13,r12,r01,r02,r03,sign,oriented
// Blank lines and lines starting with '#' are ignored; extra columns are
// ignored.  JSON input is an array of flat objects with the same keys.

#ifndef LATINV_IO_HPP_
#define LATINV_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latinv/forms.hpp"
#include "latinv/lattice.hpp"
#include "latinv/metrics.hpp"
#include "latinv/projection.hpp"

namespace latinv {

enum class InputFormat { csv, json, detect };

struct LatticeRecord {
  std::string id;
  std::variant<UnitCell, Basis> source;
  int line = 0;  // CSV line or 1-based JSON element index

  Basis basis() const;
};

struct RootFormRecord {
  std::string id;
  RootForm rf;
  std::optional<LatticeSign> sign;
  int line = 0;
};

// Errors name the line (or JSON element) and, once known, the record id.
std::vector<LatticeRecord> parse_records(std::istream& in, InputFormat fmt = InputFormat::detect);
std::vector<RootFormRecord> parse_root_forms(std::istream& in,
                                             InputFormat fmt = InputFormat::detect);

struct InvariantReport {
  std::string id;
  RootForm root_form;           // non-oriented
  RootForm oriented_root_form;  // in the orientation of the input basis
  LatticeSign sign = LatticeSign::neutral;
  SpecialFlags special;
  Dc7Vector dc7{};
  ProjectedForm projection;
};

InvariantReport make_report(const LatticeRecord& rec, double rel_tol = kDefaultRelTol);

// 12 significant digits, negative zero printed as 0.
std::string format_number(double v);

// Header and rows of the report table; `oriented` selects which form fills
// the r columns.
std::string report_csv_header();
std::string report_csv_row(const InvariantReport& r, bool oriented);
std::string report_json(const std::vector<InvariantReport>& reports);

// row = y bin, col = x bin, every cell listed.
void write_grid_csv(std::ostream& out, const DensityGrid& g);
// Plain PGM with maxval = max count (at most 65535, scaled beyond); the
// first image row is the highest y bin.
void write_grid_pgm(std::ostream& out, const DensityGrid& g);
void write_grid_svg(std::ostream& out, const DensityGrid& g);

}  // namespace latinv

#endif  // LATINV_IO_HPP_

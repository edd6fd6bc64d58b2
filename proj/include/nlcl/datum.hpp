#pragma once

#include <string>
#include <vector>

#include "nlcl/grid.hpp"
#include "nlcl/state.hpp"

namespace nlcl {

/// A constant value on [lo, hi). Endpoints may be infinite, which is how
/// far-field constants are expressed.
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
};

/// Piecewise-constant initial datum, zero outside the listed pieces.
class PiecewiseConstant {
public:
  PiecewiseConstant() = default;
  /// Throws ErrorKind::invalid_datum on empty or overlapping pieces.
  explicit PiecewiseConstant(std::vector<Piece> pieces);

  double operator()(double x) const;
  /// Exact mean over [lo, hi].
  double average(double lo, double hi) const;

  double left_far_field() const;
  double right_far_field() const;
  double min_value() const;
  double max_value() const;
  const std::vector<Piece>& pieces() const { return pieces_; }

private:
  std::vector<Piece> pieces_;  // sorted by lo
};

/// Parses "lo:hi:value, lo:hi:value, ..." ("inf"/"-inf" allowed).
PiecewiseConstant parse_pieces(const std::string& text);
std::string format_pieces(const PiecewiseConstant& datum);

/// Exact cell averages; ghosts hold the far-field constants.
State project_initial_datum(const PiecewiseConstant& datum, const Grid& grid);

}  // namespace nlcl

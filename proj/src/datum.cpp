#include "nlcl/datum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "nlcl/error.hpp"

namespace nlcl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_bound(std::string token) {
  token.erase(0, token.find_first_not_of(" \t"));
  token.erase(token.find_last_not_of(" \t") + 1);
  if (token == "inf" || token == "+inf") return kInf;
  if (token == "-inf") return -kInf;
  double value = 0.0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorKind::invalid_datum, "bad number '" + token + "' in datum pieces");
  }
  return value;
}

std::string format_bound(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

PiecewiseConstant::PiecewiseConstant(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorKind::invalid_datum, "datum needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& l, const Piece& r) { return l.lo < r.lo; });
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.lo < p.hi) || !std::isfinite(p.value)) {
      throw Error(ErrorKind::invalid_datum, "datum piece needs lo < hi and a finite value");
    }
    if (i > 0 && pieces_[i - 1].hi > p.lo) {
      throw Error(ErrorKind::invalid_datum, "overlapping datum pieces at x = " + format_bound(p.lo));
    }
  }
}

double PiecewiseConstant::operator()(double x) const {
  for (const Piece& p : pieces_) {
    if (x >= p.lo && x < p.hi) return p.value;
  }
  return 0.0;
}

double PiecewiseConstant::average(double lo, double hi) const {
  double sum = 0.0;
  for (const Piece& p : pieces_) {
    const double l = std::max(lo, p.lo);
    const double r = std::min(hi, p.hi);
    if (r <= l) continue;
    // A piece covering the whole interval gives its value exactly.
    if (l == lo && r == hi) return p.value;
    sum += p.value * (r - l);
  }
  return sum / (hi - lo);
}

double PiecewiseConstant::left_far_field() const {
  return pieces_.front().lo == -kInf ? pieces_.front().value : 0.0;
}

double PiecewiseConstant::right_far_field() const {
  return pieces_.back().hi == kInf ? pieces_.back().value : 0.0;
}

double PiecewiseConstant::min_value() const {
  double v = std::min(left_far_field(), right_far_field());
  bool gaps = false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    v = std::min(v, pieces_[i].value);
    if (i > 0 && pieces_[i - 1].hi < pieces_[i].lo) gaps = true;
  }
  return gaps ? std::min(v, 0.0) : v;
}

double PiecewiseConstant::max_value() const {
  double v = std::max(left_far_field(), right_far_field());
  bool gaps = false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    v = std::max(v, pieces_[i].value);
    if (i > 0 && pieces_[i - 1].hi < pieces_[i].lo) gaps = true;
  }
  return gaps ? std::max(v, 0.0) : v;
}

PiecewiseConstant parse_pieces(const std::string& text) {
  std::vector<Piece> pieces;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream fields(item);
    std::string lo, hi, value, extra;
    if (!std::getline(fields, lo, ':') || !std::getline(fields, hi, ':') ||
        !std::getline(fields, value, ':') || std::getline(fields, extra, ':')) {
      throw Error(ErrorKind::invalid_datum, "datum piece '" + item + "' is not lo:hi:value");
    }
    pieces.push_back({parse_bound(lo), parse_bound(hi), parse_bound(value)});
  }
  return PiecewiseConstant(std::move(pieces));
}

std::string format_pieces(const PiecewiseConstant& datum) {
  std::string out;
  for (const Piece& p : datum.pieces()) {
    if (!out.empty()) out += ", ";
    out += format_bound(p.lo) + ":" + format_bound(p.hi) + ":" + format_bound(p.value);
  }
  return out;
}

State project_initial_datum(const PiecewiseConstant& datum, const Grid& grid) {
  State s;
  s.rho.assign(grid.storage_size(), 0.0);
  for (long j = 0; j < grid.n_cells; ++j) {
    const double lo = grid.cell_left(j);
    const double hi = j + 1 == grid.n_cells ? grid.x_max : grid.cell_left(j + 1);
    s.at(grid, j) = datum.average(lo, hi);
  }
  for (long g = 1; g <= grid.ghost_width; ++g) {
    s.at(grid, -g) = datum.left_far_field();
    s.at(grid, grid.n_cells - 1 + g) = datum.right_far_field();
  }
  return s;
}

void refresh_ghosts(State& state, const Grid& grid) {
  const double left = state.at(grid, 0);
  const double right = state.at(grid, grid.n_cells - 1);
  for (long g = 1; g <= grid.ghost_width; ++g) {
    state.at(grid, -g) = left;
    state.at(grid, grid.n_cells - 1 + g) = right;
  }
}

}  // namespace nlcl

#include "delpezzo/bipoly.hpp"

#include <algorithm>
#include <utility>

namespace delpezzo {

BiPoly::BiPoly(const Rational& constant) {
  if (!constant.is_zero()) rows_.push_back({constant});
}

BiPoly::BiPoly(std::vector<std::vector<Rational>> coefficients) : rows_(std::move(coefficients)) {
  trim();
}

BiPoly BiPoly::x() { return monomial(Rational(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(Rational(1), 0, 1); }

BiPoly BiPoly::monomial(const Rational& coefficient, std::size_t deg_x, std::size_t deg_y) {
  std::vector<std::vector<Rational>> rows(deg_x + 1);
  rows[deg_x].resize(deg_y + 1);
  rows[deg_x][deg_y] = coefficient;
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::in_x(const Poly& p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : p.coefficients()) rows.push_back({c});
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::in_y(const Poly& p) {
  if (p.is_zero()) return BiPoly();
  return BiPoly(std::vector<std::vector<Rational>>{p.coefficients()});
}

void BiPoly::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int BiPoly::degree_y() const {
  std::size_t width = 0;
  for (const auto& row : rows_) width = std::max(width, row.size());
  return static_cast<int>(width) - 1;
}

Rational BiPoly::coefficient(std::size_t deg_x, std::size_t deg_y) const {
  if (deg_x >= rows_.size() || deg_y >= rows_[deg_x].size()) return Rational();
  return rows_[deg_x][deg_y];
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc;
  for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
    Rational inner;
    for (auto c = row->rbegin(); c != row->rend(); ++c) {
      inner *= y;
      inner += *c;
    }
    acc *= x;
    acc += inner;
  }
  return acc;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result(Rational(1));
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) {
    auto& row = rows_[i];
    if (o.rows_[i].size() > row.size()) row.resize(o.rows_[i].size());
    for (std::size_t j = 0; j < o.rows_[i].size(); ++j) row[j] += o.rows_[i][j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) {
    auto& row = rows_[i];
    if (o.rows_[i].size() > row.size()) row.resize(o.rows_[i].size());
    for (std::size_t j = 0; j < o.rows_[i].size(); ++j) row[j] -= o.rows_[i][j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& row : rows_) {
    for (auto& c : row) c *= s;
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  const int wa = a.degree_y() + 1;
  const int wb = b.degree_y() + 1;
  std::vector<std::vector<Rational>> out(a.rows_.size() + b.rows_.size() - 1,
                                         std::vector<Rational>(static_cast<std::size_t>(wa + wb - 1)));
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    for (std::size_t j = 0; j < a.rows_[i].size(); ++j) {
      const Rational& ca = a.rows_[i][j];
      if (ca.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_.size(); ++k) {
        for (std::size_t l = 0; l < b.rows_[k].size(); ++l) {
          if (b.rows_[k][l].is_zero()) continue;
          out[i + k][j + l] += ca * b.rows_[k][l];
        }
      }
    }
  }
  return BiPoly(std::move(out));
}

}  // namespace delpezzo

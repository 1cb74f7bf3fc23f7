#include "ecsk/exprkit/chart.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace ecsk::exprkit {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Chart::Chart(std::array<std::string, kDim> names, std::array<Interval, kDim> domain)
    : names_(std::move(names)), domain_(domain) {
  for (int i = 0; i < kDim; ++i) {
    if (!is_identifier(names_[i])) {
      throw ChartError("coordinate " + std::to_string(i) + " has invalid name '" + names_[i] + "'");
    }
    for (int j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ChartError("duplicate coordinate name '" + names_[i] + "'");
    }
    const Interval& iv = domain_[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.hi > iv.lo)) {
      throw ChartError("coordinate '" + names_[i] + "' needs a finite interval of positive length");
    }
  }
}

int Chart::coordinate_index(std::string_view name) const {
  for (int i = 0; i < kDim; ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

bool Chart::contains(const Point& x) const {
  for (int i = 0; i < kDim; ++i) {
    if (!(x[i] >= domain_[i].lo && x[i] <= domain_[i].hi)) return false;
  }
  return true;
}

std::string format_point(const Point& x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", x[0], x[1], x[2], x[3]);
  return buf;
}

}  // namespace ecsk::exprkit

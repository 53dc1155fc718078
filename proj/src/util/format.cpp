#include "diagen/util/format.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

namespace diagen::util {

std::string format_number(double v, int decimals) {
  assert(decimals >= 0 && decimals <= 6);
  double scale = std::pow(10.0, decimals);
  assert(std::isfinite(v) && std::fabs(v) < 9e14);
  long long scaled = std::llround(v * scale);
  if (scaled == 0) return "0";
  long long unit = static_cast<long long>(scale);
  if (scaled % unit == 0) return std::to_string(scaled / unit);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, static_cast<double>(scaled) / scale);
  return buf;
}

std::string format_point(double x, double y, int decimals) {
  return "(" + format_number(x, decimals) + ", " + format_number(y, decimals) + ")";
}

std::string join_with_and(const std::vector<std::string>& parts) {
  if (parts.empty()) return "";
  if (parts.size() == 1) return parts[0];
  std::string out;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  out += " and " + parts.back();
  return out;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace diagen::util

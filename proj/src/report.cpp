#include "randmin/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace randmin {

DensityReport DensityReport::from_density(const Params& params, const BigRational& dr, std::string method,
                                          double seconds) {
  params.validate();
  DensityReport r;
  r.sigma = params.sigma;
  r.k = params.k;
  r.w = params.w;
  r.dr = dr;
  r.dfr = dr * BigRational(params.w + 1);
  const BigRational scale(big_pow(static_cast<std::uint64_t>(params.sigma),
                                  static_cast<std::uint64_t>(params.context_length())));
  r.dev = (dr - make_rational(2, params.w + 1)) * scale;
  r.method = std::move(method);
  r.seconds = seconds;
  return r;
}

std::string format_float(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json rational_json(const BigRational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::optional<double> log_abs_base(const BigRational& q, double base) {
  if (sgn(q) == 0) return std::nullopt;
  return log_abs(q) / std::log(base);
}

std::string sign_label(const BigRational& dfr) {
  const int s = cmp(dfr, BigRational(2));
  return s > 0 ? "above" : (s < 0 ? "below" : "equal");
}

nlohmann::json DensityReport::to_json() const {
  return {{"sigma", sigma},
          {"k", k},
          {"w", w},
          {"method", method},
          {"dr", rational_json(dr)},
          {"dfr", rational_json(dfr)},
          {"dev", rational_json(dev)},
          {"dr_float", to_double(dr)},
          {"dfr_float", to_double(dfr)},
          {"dev_float", to_double(dev)},
          {"seconds", seconds}};
}

std::string DensityReport::csv_header() { return "sigma,k,w,method,dr,dfr,dev,dr_exact,seconds"; }

std::string DensityReport::to_csv_row() const {
  std::ostringstream os;
  os << sigma << ',' << k << ',' << w << ',' << method << ',' << format_float(to_double(dr)) << ','
     << format_float(to_double(dfr)) << ',' << format_float(to_double(dev)) << ',' << to_string(dr) << ','
     << format_float(seconds);
  return os.str();
}

std::string DensityReport::to_text() const {
  std::ostringstream os;
  os << "sigma=" << sigma << " k=" << k << " w=" << w << " method=" << method << '\n'
     << "DR  = " << to_string(dr) << " (" << format_float(to_double(dr)) << ")\n"
     << "DFR = " << to_string(dfr) << " (" << format_float(to_double(dfr)) << ")\n"
     << "Dev = " << to_string(dev) << " (" << format_float(to_double(dev)) << ")\n";
  return os.str();
}

}  // namespace randmin

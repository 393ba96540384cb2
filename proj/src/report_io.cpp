#include "kgdisp/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kgdisp/errors.hpp"

namespace kgd {

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  return os;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Series {
  std::vector<double> lx;
  std::vector<double> ly;
};

Series log_series(const std::vector<double>& t, const std::vector<double>& v) {
  Series s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > 0.0 && v[i] > 0.0) {
      s.lx.push_back(std::log10(t[i]));
      s.ly.push_back(std::log10(v[i]));
    }
  }
  return s;
}

}  // namespace

Json to_json(const FitResult& fit) {
  Json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["residual"] = fit.residual;
  j["points"] = fit.points;
  return j;
}

Json to_json(const DecayReport& r, bool include_curve) {
  Json j;
  j["inequality_id"] = r.inequality_id;
  j["band"] = r.band;
  j["mass"] = r.mass;
  j["dim"] = r.dim;
  j["t0"] = r.t0;
  if (r.inequality_id == "interpolation" || r.inequality_id == "wavedecay_implied") j["s"] = r.s;
  j["status"] = r.skipped ? "skipped" : "evaluated";
  j["empirical_constant"] = r.empirical_constant;
  j["unnormalized_constant"] = r.unnormalized_constant;
  j["data_norm"] = r.curve.data_norm;
  if (r.fitted) j["fit"] = to_json(r.fit);
  if (include_curve) {
    j["times"] = r.curve.times;
    j["weighted_sup"] = r.curve.weighted_sup;
    j["raw_sup"] = r.curve.raw_sup;
  }
  return j;
}

void write_json(const std::string& path, const Json& value) {
  auto os = open_for_write(path);
  os << value.dump(2) << '\n';
}

void write_csv(const std::string& path, const DecayCurve& curve) {
  auto os = open_for_write(path);
  os << "t,weighted_sup,raw_sup\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    os << num(curve.times[i]) << ',' << num(curve.weighted_sup[i]) << ',' << num(curve.raw_sup[i])
       << '\n';
  }
}

void write_svg(const std::string& path, const DecayCurve& curve) {
  constexpr double W = 640;
  constexpr double H = 420;
  constexpr double ml = 70, mr = 20, mt = 30, mb = 50;
  const Series a = log_series(curve.times, curve.weighted_sup);
  const Series b = log_series(curve.times, curve.raw_sup);

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  for (const Series* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->lx.size(); ++i) {
      if (!any) {
        x0 = x1 = s->lx[i];
        y0 = y1 = s->ly[i];
        any = true;
      }
      x0 = std::min(x0, s->lx[i]);
      x1 = std::max(x1, s->lx[i]);
      y0 = std::min(y0, s->ly[i]);
      y1 = std::max(y1, s->ly[i]);
    }
  }
  x0 = std::floor(x0);
  x1 = std::max(std::ceil(x1), x0 + 1);
  y0 = std::floor(y0);
  y1 = std::max(std::ceil(y1), y0 + 1);
  auto px = [&](double v) { return ml + (v - x0) / (x1 - x0) * (W - ml - mr); };
  auto py = [&](double v) { return H - mb - (v - y0) / (y1 - y0) * (H - mt - mb); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << ml << "\" y=\"18\">" << curve.label << " (log-log)</text>\n";
  for (double d = x0; d <= x1 + 1e-9; d += 1.0) {
    os << "<line x1=\"" << num(px(d)) << "\" y1=\"" << num(py(y0)) << "\" x2=\"" << num(px(d))
       << "\" y2=\"" << num(py(y1)) << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << num(px(d)) << "\" y=\"" << num(H - mb + 18)
       << "\" text-anchor=\"middle\">1e" << static_cast<int>(d) << "</text>\n";
  }
  for (double d = y0; d <= y1 + 1e-9; d += 1.0) {
    os << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(d)) << "\" x2=\"" << num(px(x1))
       << "\" y2=\"" << num(py(d)) << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py(d) + 4)
       << "\" text-anchor=\"end\">1e" << static_cast<int>(d) << "</text>\n";
  }
  os << "<text x=\"" << num(W / 2) << "\" y=\"" << num(H - 10) << "\" text-anchor=\"middle\">t</text>\n";
  const char* colors[2] = {"#1f77b4", "#d62728"};
  const char* names[2] = {"weighted_sup", "raw_sup"};
  int c = 0;
  for (const Series* s : {&a, &b}) {
    if (!s->lx.empty()) {
      os << "<polyline fill=\"none\" stroke=\"" << colors[c] << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s->lx.size(); ++i) {
        os << num(px(s->lx[i])) << ',' << num(py(s->ly[i])) << ' ';
      }
      os << "\"/>\n";
    }
    os << "<text x=\"" << num(W - mr - 110) << "\" y=\"" << (mt + 14 * (c + 1)) << "\" fill=\""
       << colors[c] << "\">" << names[c] << "</text>\n";
    ++c;
  }
  os << "</svg>\n";
  auto out = open_for_write(path);
  out << os.str();
}

}  // namespace kgd

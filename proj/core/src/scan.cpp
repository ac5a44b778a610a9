#include "entanglia/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entanglia/bipartite.hpp"
#include "entanglia/multiqubit.hpp"
#include "entanglia/parallel.hpp"
#include "entanglia/twoqubit.hpp"

namespace entanglia {

const std::vector<std::string>& scan_criteria_names() {
  static const std::vector<std::string> n = {"ppt", "gs",   "su1", "su2", "maj",
                                             "red", "ccnr", "perm", "wit", "wootters"};
  return n;
}

std::vector<std::string> scan_columns(const std::string& c) {
  if (c == "ppt") return {"ppt_min_eig"};
  if (c == "gs") return {"gs2a", "gs2b", "gs3_2g", "gs3_11", "gs_fullsep_min", "pptes"};
  if (c == "su1") return {"su1_2sep", "su1_bipart", "su1_3sep"};
  if (c == "su2") return {"su2_2sep", "su2_bipart", "su2_3sep"};
  if (c == "maj") return {"maj"};
  if (c == "red") return {"red"};
  if (c == "ccnr") return {"ccnr"};
  if (c == "perm") return {"perm_min"};
  if (c == "wit") return {"wit_ghz", "wit_w1", "wit_w2"};
  if (c == "wootters") return {"wootters23"};
  throw std::invalid_argument("unknown criterion: " + c);
}

std::vector<double> scan_point(const SimplexPoint& p, const std::vector<std::string>& criteria) {
  const DensityMatrix rho = build_ghzw(p);
  std::vector<double> out;
  for (auto& c : criteria) {
    if (c == "ppt") {
      out.push_back(ppt_criterion(rho, {0}).verdict.min_margin());
    } else if (c == "gs") {
      double full = std::numeric_limits<double>::infinity(), g2a = 0, g2b = 0, g32 = 0, g311 = 0;
      for (auto& v : gs_matrix_criteria(rho)) {
        if (v.id == "gs2a") g2a = v.min_margin();
        else if (v.id == "gs2b") g2b = v.min_margin();
        else if (v.id == "gs3.2g") g32 = v.min_margin();
        else full = std::min(full, v.min_margin());
        if (v.id == "gs3.1g:r4.5") g311 = v.min_margin();
      }
      const bool ppt = ppt_criterion(rho, {0}).verdict.holds;
      out.insert(out.end(), {g2a, g2b, g32, g311, full, ppt && full < -1e-9 ? 1.0 : 0.0});
    } else if (c == "su1" || c == "su2") {
      SuVerdicts v = su_criteria(rho, c == "su1" ? SpinSetting::setting_I() : SpinSetting::setting_II());
      out.insert(out.end(), {v.bisep.min_margin(), v.all_bipartitions.min_margin(), v.fullsep.min_margin()});
    } else if (c == "maj") {
      out.push_back(majorization_criterion(rho, {0}).min_margin());
    } else if (c == "red") {
      out.push_back(reduction_criterion(rho, {0}).min_margin());
    } else if (c == "ccnr") {
      out.push_back(reshuffling_criterion(rho, {0}).min_margin());
    } else if (c == "perm") {
      double m = std::numeric_limits<double>::infinity();
      for (auto& v : permutation_criterion(rho)) m = std::min(m, v.min_margin());
      out.push_back(m);
    } else if (c == "wit") {
      for (auto& v : witness_criteria(rho)) out.push_back(v.min_margin());
    } else if (c == "wootters") {
      out.push_back(wootters_concurrence(reduced(rho, {1, 2})));
    } else {
      throw std::invalid_argument("unknown criterion: " + c);
    }
  }
  return out;
}

ScanTable scan_simplex(const ScanOptions& opt) {
  if (opt.res < 1 || opt.res > 2000) throw std::invalid_argument("resolution must be in 1..2000");
  ScanTable t;
  t.columns = {"g", "w"};
  for (auto& c : opt.criteria) {
    auto cols = scan_columns(c);
    t.columns.insert(t.columns.end(), cols.begin(), cols.end());
  }
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= opt.res; ++i)
    for (int j = 0; i + j <= opt.res; ++j) pts.push_back({i, j});
  t.rows.resize(pts.size());
  parallel_for(static_cast<long>(pts.size()), [&](long k) {
    SimplexPoint p{static_cast<double>(pts[k].first) / opt.res,
                   static_cast<double>(pts[k].second) / opt.res};
    std::vector<double> row = {p.g, p.w};
    auto v = scan_point(p, opt.criteria);
    row.insert(row.end(), v.begin(), v.end());
    t.rows[k] = std::move(row);
  }, opt.max_workers);
  return t;
}

std::string scan_csv(const ScanTable& t, const ScanOptions& opt) {
  std::ostringstream os;
  os << "# entanglia-scan v1 res=" << opt.res << " criteria=";
  for (size_t i = 0; i < opt.criteria.size(); ++i) os << (i ? "," : "") << opt.criteria[i];
  os << '\n';
  for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  char buf[64];
  for (auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", r[i]);
      os << (i ? "," : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

namespace {
struct Seg {
  double x0, y0, x1, y1;
};

// Marching squares on a (res+1)^2 grid with NaN outside the domain.
std::vector<Seg> contour(const std::vector<double>& f, int res, double level) {
  const int n = res + 1;
  auto at = [&](int i, int j) { return f[static_cast<size_t>(i) * n + j] - level; };
  std::vector<Seg> segs;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      double x[4] = {double(i), double(i + 1), double(i + 1), double(i)};
      double y[4] = {double(j), double(j), double(j + 1), double(j + 1)};
      if (std::isnan(v[0]) || std::isnan(v[1]) || std::isnan(v[2]) || std::isnan(v[3])) continue;
      std::vector<std::pair<double, double>> cut;
      for (int e = 0; e < 4; ++e) {
        int a = e, b = (e + 1) % 4;
        if ((v[a] < 0) != (v[b] < 0)) {
          double s = v[a] / (v[a] - v[b]);
          cut.push_back({x[a] + s * (x[b] - x[a]), y[a] + s * (y[b] - y[a])});
        }
      }
      if (cut.size() == 2) {
        segs.push_back({cut[0].first, cut[0].second, cut[1].first, cut[1].second});
      } else if (cut.size() == 4) {
        // saddle: pair by the sign of the centre
        double c = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        if ((c < 0) == (v[0] < 0)) {
          segs.push_back({cut[0].first, cut[0].second, cut[1].first, cut[1].second});
          segs.push_back({cut[2].first, cut[2].second, cut[3].first, cut[3].second});
        } else {
          segs.push_back({cut[0].first, cut[0].second, cut[3].first, cut[3].second});
          segs.push_back({cut[1].first, cut[1].second, cut[2].first, cut[2].second});
        }
      }
    }
  return segs;
}
}  // namespace

std::string scan_svg(const ScanTable& t, const ScanOptions& opt) {
  const int res = opt.res, n = res + 1;
  const double size = 600, pad = 40;
  auto X = [&](double i) { return pad + size * i / res; };
  auto Y = [&](double j) { return pad + size - size * j / res; };
  static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad + 200
     << "\" height=\"" << size + 2 * pad << "\">\n";
  os << "<polygon points=\"" << X(0) << "," << Y(0) << " " << X(res) << "," << Y(0) << " " << X(0)
     << "," << Y(res) << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << X(res) << "\" y=\"" << Y(0) + 20 << "\">g</text>\n";
  os << "<text x=\"" << X(0) - 20 << "\" y=\"" << Y(res) << "\">w</text>\n";
  for (size_t c = 2; c < t.columns.size(); ++c) {
    std::vector<double> f(static_cast<size_t>(n) * n, std::nan(""));
    for (auto& r : t.rows) {
      int i = static_cast<int>(std::lround(r[0] * res)), j = static_cast<int>(std::lround(r[1] * res));
      f[static_cast<size_t>(i) * n + j] = r[c];
    }
    const std::string& name = t.columns[c];
    const double level = name == "pptes" ? 0.5 : name == "wootters23" ? 1e-9 : 0.0;
    const char* col = colors[(c - 2) % 10];
    os << "<g stroke=\"" << col << "\" stroke-width=\"1.2\" fill=\"none\"><title>" << name
       << "</title>\n";
    for (auto& s : contour(f, res, level))
      os << "<line x1=\"" << X(s.x0) << "\" y1=\"" << Y(s.y0) << "\" x2=\"" << X(s.x1) << "\" y2=\""
         << Y(s.y1) << "\"/>\n";
    os << "</g>\n";
    os << "<text x=\"" << size + 2 * pad << "\" y=\"" << pad + 14 * (c - 2) << "\" fill=\"" << col
       << "\" font-size=\"12\">" << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace entanglia

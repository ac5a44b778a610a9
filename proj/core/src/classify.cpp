#include "entanglia/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "entanglia/bipartite.hpp"
#include "entanglia/fts.hpp"
#include "entanglia/multiqubit.hpp"

namespace entanglia {

const char* to_string(Zeroness z) {
  switch (z) {
    case Zeroness::Zero: return "=0";
    case Zeroness::NonZero: return ">0";
    default: return "?";
  }
}

namespace {
// column indices
constexpr int kF123 = 0, kSingle = 1, kPair = 4, kBisep = 7, kTau = 8;

std::vector<std::pair<std::string, std::array<int, 8>>> build_ps() {
  std::vector<std::pair<std::string, std::array<int, 8>>> t;
  t.push_back({"C3", {0, 0, 0, 0, 0, 0, 0, 0}});
  t.push_back({"C2.8", {1, 0, 0, 0, 0, 0, 0, 0}});
  auto row = [](std::array<int, 3> single, std::array<int, 3> pair) {
    return std::array<int, 8>{1, single[0], single[1], single[2], pair[0], pair[1], pair[2], 0};
  };
  auto unit = [](int a) {
    std::array<int, 3> u{0, 0, 0};
    u[a] = 1;
    return u;
  };
  auto others = [](int a) {
    std::array<int, 3> u{1, 1, 1};
    u[a] = 0;
    return u;
  };
  const std::array<int, 3> none{0, 0, 0}, all{1, 1, 1};
  for (int a = 0; a < 3; ++a) t.push_back({"C2.7." + std::to_string(a + 1), row(unit(a), none)});
  for (int a = 0; a < 3; ++a) t.push_back({"C2.6." + std::to_string(a + 1), row(others(a), none)});
  for (int a = 0; a < 3; ++a) t.push_back({"C2.5." + std::to_string(a + 1), row(others(a), unit(a))});
  t.push_back({"C2.4", row(all, none)});
  for (int a = 0; a < 3; ++a) t.push_back({"C2.3." + std::to_string(a + 1), row(all, unit(a))});
  for (int a = 0; a < 3; ++a) t.push_back({"C2.2." + std::to_string(a + 1), row(all, others(a))});
  t.push_back({"C2.1", row(all, all)});
  t.push_back({"C1", {1, 1, 1, 1, 1, 1, 1, 1}});
  return t;
}

template <size_t N>
std::vector<std::string> match(const std::vector<std::pair<std::string, std::array<int, N>>>& table,
                               const std::vector<Zeroness>& cols) {
  if (cols.size() != N) throw std::invalid_argument("wrong number of indicator columns");
  std::vector<std::string> out;
  for (auto& [name, row] : table) {
    bool ok = true;
    for (size_t i = 0; i < N && ok; ++i) {
      if (cols[i] == Zeroness::Unknown) continue;
      ok = (cols[i] == Zeroness::NonZero) == (row[i] == 1);
    }
    if (ok) out.push_back(name);
  }
  return out;
}

// Containments among the subsets behind the columns: zero spreads to larger
// subsets, nonzero to smaller ones.
void close_verdicts(std::vector<IndicatorEntry>& p) {
  const bool tau = p.size() > 8;
  auto set = [&](int i, Zeroness z) {
    if (p[i].verdict == Zeroness::Unknown) {
      p[i].verdict = z;
      p[i].source = "implied";
    }
  };
  for (int pass = 0; pass < 4; ++pass) {
    if (p[kF123].verdict == Zeroness::Zero)
      for (size_t i = 1; i < p.size(); ++i) set(static_cast<int>(i), Zeroness::Zero);
    for (int a = 0; a < 3; ++a) {
      if (p[kSingle + a].verdict == Zeroness::Zero) {
        for (int x = 0; x < 3; ++x)
          if (x != a) set(kPair + x, Zeroness::Zero);
        set(kBisep, Zeroness::Zero);
      }
      if (p[kSingle + a].verdict == Zeroness::NonZero) set(kF123, Zeroness::NonZero);
      if (p[kPair + a].verdict == Zeroness::Zero) set(kBisep, Zeroness::Zero);
      if (p[kPair + a].verdict == Zeroness::NonZero)
        for (int x = 0; x < 3; ++x)
          if (x != a) set(kSingle + x, Zeroness::NonZero);
    }
    if (p[kBisep].verdict == Zeroness::NonZero)
      for (int i = 0; i < kBisep; ++i) set(i, Zeroness::NonZero);
    if (tau) {
      if (p[kBisep].verdict == Zeroness::Zero) set(kTau, Zeroness::Zero);
      if (p[kTau].verdict == Zeroness::NonZero) set(kBisep, Zeroness::NonZero);
    }
  }
}

void mark(std::vector<IndicatorEntry>& p, int i, const std::string& why) {
  if (p[i].verdict == Zeroness::Unknown) {
    p[i].verdict = Zeroness::NonZero;
    p[i].source = "shortcut:" + why;
  }
}

void apply_shortcuts(const DensityMatrix& rho, std::vector<IndicatorEntry>& p) {
  const double tol = 1e-9;
  for (int z = 0; z < 3; ++z) {
    int x = (z + 1) % 3, y = (z + 2) % 3;
    if (x > y) std::swap(x, y);
    DensityMatrix m = reduced(rho, {x, y});
    if (ppt_criterion(m, {0}).verdict.min_margin() < -tol) {
      const std::string why = "rho" + std::to_string(x + 1) + std::to_string(y + 1) + " npt";
      mark(p, kF123, why);
      mark(p, kSingle + x, why);
      mark(p, kSingle + y, why);
      mark(p, kPair + z, why);
    }
  }
  for (int a = 0; a < 3; ++a) {
    if (ppt_criterion(rho, {a}).verdict.min_margin() < -tol) {
      const std::string why = "npt " + std::to_string(a + 1) + "|rest";
      mark(p, kF123, why);
      mark(p, kSingle + a, why);
    }
  }
  if (rho.dims == Dims{2, 2, 2}) {
    for (auto& v : witness_criteria(rho)) {
      // "wit-ghz" detects states outside the W class; the other two detect
      // genuine tripartite entanglement
      if (v.holds) continue;
      if (v.id == "wit-ghz") {
        if (p.size() > 8) mark(p, kTau, v.id);
        mark(p, kBisep, v.id);
      } else {
        mark(p, kBisep, v.id);
      }
    }
  }
}

ClassifyResult run_classification(const DensityMatrix& rho, const ClassifyOptions& opt,
                                  const std::vector<std::string>& names,
                                  const std::vector<PureFunctional>& fs, bool pss) {
  std::vector<IndicatorEntry> p(names.size());
  for (size_t i = 0; i < names.size(); ++i) p[i].label = names[i];

  for (auto& h : opt.hints) {
    const double res = ensemble_residual(rho, h);
    if (res > 1e-8) throw std::invalid_argument("hint ensemble does not decompose the state");
  }
  // membership by construction
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t hi = 0; hi < opt.hints.size() && p[i].verdict == Zeroness::Unknown; ++hi) {
      const Ensemble& h = opt.hints[hi];
      bool all = true;
      for (size_t j = 0; j < h.vectors.size() && all; ++j)
        all = h.weights[j] <= 0 || fs[i](h.vectors[j]) < opt.eps;
      if (all) {
        p[i].verdict = Zeroness::Zero;
        p[i].source = "hint";
        RoofOptions ro = opt.roof;
        ro.restarts = 0;
        ro.hints = {h};
        p[i].roof = convex_roof(rho, fs[i], ro);
        p[i].roof_run = true;
      }
    }
  }
  if (opt.shortcuts) apply_shortcuts(rho, p);
  close_verdicts(p);

  if (opt.run_roofs) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].verdict != Zeroness::Unknown) continue;
      RoofOptions ro = opt.roof;
      ro.hints.insert(ro.hints.end(), opt.hints.begin(), opt.hints.end());
      p[i].roof = convex_roof(rho, fs[i], ro);
      p[i].roof_run = true;
      p[i].verdict = p[i].roof.value < opt.eps ? Zeroness::Zero : Zeroness::NonZero;
      p[i].source = "roof";
      close_verdicts(p);
    }
  }

  std::vector<Zeroness> cols;
  for (auto& e : p) cols.push_back(e.verdict);
  ClassifyResult r;
  r.candidates = pss ? match_pss(cols) : match_ps(cols);
  r.class_name = r.candidates.size() == 1 ? r.candidates[0] : "undecided";
  r.profile = std::move(p);
  return r;
}

void require_tripartite(const DensityMatrix& rho) {
  if (rho.n() != 3) throw StateError("tripartite state expected");
}
}  // namespace

const std::vector<std::pair<std::string, std::array<int, 8>>>& ps_table() {
  static const auto t = build_ps();
  return t;
}

const std::vector<std::pair<std::string, std::array<int, 9>>>& pss_table() {
  static const auto t = [] {
    std::vector<std::pair<std::string, std::array<int, 9>>> out;
    for (auto& [name, row] : ps_table()) {
      std::array<int, 9> r{};
      std::copy(row.begin(), row.end(), r.begin());
      if (name == "C1") {
        out.push_back({"CW", r});
        r[8] = 1;
        out.push_back({"CGHZ", r});
      } else {
        out.push_back({name, r});
      }
    }
    return out;
  }();
  return t;
}

std::vector<std::string> match_ps(const std::vector<Zeroness>& cols) { return match(ps_table(), cols); }
std::vector<std::string> match_pss(const std::vector<Zeroness>& cols) { return match(pss_table(), cols); }

ClassifyResult classify_ps(const DensityMatrix& rho, const ClassifyOptions& opt) {
  require_tripartite(rho);
  std::vector<std::string> names;
  std::vector<PureFunctional> fs;
  for (auto& l : tripartite_indicator_labels()) {
    names.push_back(label_str(l));
    IndicatorSpec spec{l, opt.base, Combine::SumProduct};
    fs.push_back([spec](const StateVector& psi) { return pure_indicator(psi, spec); });
  }
  return run_classification(rho, opt, names, fs, false);
}

ClassifyResult classify_pss(const DensityMatrix& rho, const ClassifyOptions& opt) {
  if (rho.dims != Dims{2, 2, 2}) throw StateError("three-qubit state expected");
  std::vector<std::string> names = {"y", "c2_1", "c2_2", "c2_3", "g_1", "g_2", "g_3", "t", "tau2"};
  std::vector<PureFunctional> fs;
  fs.push_back([](const StateVector& s) { return fts_invariants_raw(s).y; });
  for (int a = 0; a < 3; ++a)
    fs.push_back([a](const StateVector& s) { return fts_invariants_raw(s).c2[a]; });
  for (int a = 0; a < 3; ++a)
    fs.push_back([a](const StateVector& s) { return fts_invariants_raw(s).g[a]; });
  fs.push_back([](const StateVector& s) { return fts_invariants_raw(s).t; });
  fs.push_back([](const StateVector& s) { return fts_invariants_raw(s).tau2; });
  return run_classification(rho, opt, names, fs, true);
}

std::string classify_ps_pure(const StateVector& psi, double eps, const EntropyFamily& base) {
  if (psi.n() != 3) throw StateError("tripartite vector expected");
  std::vector<Zeroness> cols;
  for (auto& l : tripartite_indicator_labels()) {
    double v = pure_indicator(psi, IndicatorSpec{l, base, Combine::SumProduct});
    cols.push_back(v < eps ? Zeroness::Zero : Zeroness::NonZero);
  }
  auto m = match_ps(cols);
  return m.size() == 1 ? m[0] : "undecided";
}

}  // namespace entanglia

// entanglia command line front end
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "entanglia/bipartite.hpp"
#include "entanglia/classify.hpp"
#include "entanglia/fts.hpp"
#include "entanglia/lattice.hpp"
#include "entanglia/luinv.hpp"
#include "entanglia/multiqubit.hpp"
#include "entanglia/scan.hpp"
#include "entanglia/state_io.hpp"

using namespace entanglia;
using nlohmann::json;

namespace {

json verdict_json(const CriterionVerdict& v) {
  return {{"id", v.id}, {"holds", v.holds}, {"margins", v.margins}};
}

std::string cut_name(const SubsystemSet& s, int n) {
  std::string a, b;
  for (int j = 0; j < n; ++j)
    (std::find(s.begin(), s.end(), j) != s.end() ? a : b) += std::to_string(j + 1);
  return a + "|" + b;
}

// Each bipartition once: the side holding subsystem 1.
std::vector<SubsystemSet> cuts(int n) {
  std::vector<SubsystemSet> out;
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    if (!(mask & 1)) continue;
    SubsystemSet s;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) s.push_back(j);
    out.push_back(s);
  }
  return out;
}

json bipartite_report(const DensityMatrix& rho, bool bits) {
  json out;
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  out["entropy_unit"] = bits ? "bit" : "nat";
  out["entropy"] = entropy(rho, EntropyFamily::von_neumann()) * scale;
  for (auto& c : cuts(rho.n())) {
    json j;
    j["majorization"] = verdict_json(majorization_criterion(rho, c));
    j["entropy_vn"] = verdict_json(entropy_criterion(rho, c, EntropyFamily::von_neumann()));
    j["entropy_tsallis2"] = verdict_json(entropy_criterion(rho, c, EntropyFamily::tsallis(2)));
    PptResult p = ppt_criterion(rho, c);
    j["ppt"] = verdict_json(p.verdict);
    j["negativity"] = p.negativity;
    j["reduction"] = verdict_json(reduction_criterion(rho, c));
    j["reshuffling"] = verdict_json(reshuffling_criterion(rho, c));
    out["cuts"][cut_name(c, rho.n())] = j;
  }
  if (rho.dims == Dims{2, 2, 2}) {
    json m = json::array();
    for (auto& v : gs_matrix_criteria(rho)) m.push_back(verdict_json(v));
    for (const char* s : {"I", "II", "III"}) {
      SpinSetting st = std::string(s) == "I"    ? SpinSetting::setting_I()
                       : std::string(s) == "II" ? SpinSetting::setting_II()
                                                : SpinSetting::setting_III();
      SuVerdicts su = su_criteria(rho, st);
      for (auto* v : {&su.bisep, &su.all_bipartitions, &su.fullsep}) {
        json j = verdict_json(*v);
        j["id"] = v->id + ":" + s;
        m.push_back(j);
      }
    }
    for (int k = 2; k <= 3; ++k) {
      json a = verdict_json(gabriel_criterion(rho, k, phi_ghz()));
      a["id"] = a["id"].get<std::string>() + ":ghz";
      m.push_back(a);
      json b = verdict_json(gabriel_criterion(rho, k, phi_w()));
      b["id"] = b["id"].get<std::string>() + ":w";
      m.push_back(b);
    }
    for (auto& v : permutation_criterion(rho)) m.push_back(verdict_json(v));
    for (auto& v : witness_criteria(rho)) m.push_back(verdict_json(v));
    out["multiqubit"] = m;
  }
  return out;
}

json classify_json(const ClassifyResult& r, double eps) {
  json out;
  out["class"] = r.class_name;
  out["candidates"] = r.candidates;
  out["eps_class"] = eps;
  out["eps_note"] = "a roof below eps_class is reported as vanishing";
  for (auto& e : r.profile) {
    json j = {{"label", e.label}, {"verdict", to_string(e.verdict)}, {"source", e.source}};
    if (e.roof_run) j["roof"] = json::parse(roof_json(e.roof));
    out["profile"].push_back(j);
  }
  return out;
}

json fts_report(const StateVector& psi) {
  json out;
  FtsCovariants c = fts_covariants(psi);
  for (int a = 0; a < 3; ++a) {
    json g = json::array();
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) g.push_back({c.gamma[a](i, k).real(), c.gamma[a](i, k).imag()});
    out["gamma"].push_back(g);
  }
  out["q"] = {c.q.real(), c.q.imag()};
  FtsInvariants v = fts_invariants(psi);
  out["invariants"] = {{"n", v.n}, {"y", v.y}, {"c2", v.c2}, {"g", v.g}, {"t", v.t}, {"tau2", v.tau2}};
  out["class"] = slocc_class_pure(psi);
  CanonicalInvariants ci = canonical_invariants(psi);
  out["canonical"] = {{"I0", ci.I0}, {"I1", ci.I1}, {"I2", ci.I2}, {"I3", ci.I3},
                      {"I4", ci.I4}, {"I5", ci.I5}, {"kempe_residual", ci.kempe_residual},
                      {"t_norm_residual", ci.t_norm_residual}};
  for (auto& r : reduced_concurrence_fidelity(psi)) {
    out["pairs"].push_back({{"pair", std::to_string(r.b + 1) + std::to_string(r.c + 1)},
                            {"wootters2", r.wootters2},
                            {"predicted2", r.predicted2},
                            {"fidelity2", r.fidelity2},
                            {"ckw_residual_" + std::to_string(r.a + 1), r.ckw_residual}});
  }
  return out;
}

json invariants_report(const LoadedState& s, int grade) {
  json out = json::array();
  const int n = s.is_vector ? s.psi.n() : s.rho.n();
  const int r = s.is_vector ? n - 1 : n;
  for (int m = 1; m <= grade; ++m) {
    for (auto& l : lu_labels(m, r)) {
      double v = s.is_vector ? pure_invariant(s.psi, l) : mixed_invariant(s.rho, l);
      out.push_back({{"grade", m}, {"label", l.str()}, {"value", v}});
    }
  }
  return out;
}

Ensemble load_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateError("cannot open " + path);
  json j = json::parse(in);
  Ensemble e;
  e.weights = j.at("weights").get<std::vector<double>>();
  Dims dims = j.at("dims").get<Dims>();
  for (auto& v : j.at("vectors")) {
    Vec a(v.size());
    for (size_t i = 0; i < v.size(); ++i) a(i) = cplx(v[i][0].get<double>(), v[i][1].get<double>());
    e.vectors.emplace_back(dims, a.normalized());
  }
  if (e.weights.size() != e.vectors.size()) throw StateError("hint weights and vectors differ in count");
  return e;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text << '\n';
  else save_text(path, text + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglia: entanglement criteria, indicators and invariants"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "evaluate criteria over the GHZ-W-noise simplex");
  ScanOptions sopt;
  std::string crit = "ppt,gs,su1,su2,maj,red,ccnr,wit,wootters", csv, svg;
  scan->add_option("--res", sopt.res, "grid resolution (steps per axis)")->check(CLI::Range(1, 2000));
  scan->add_option("--criteria", crit, "comma separated criteria");
  scan->add_option("--csv", csv, "CSV output path ('-' for stdout)");
  scan->add_option("--svg", svg, "SVG output path");

  // classify
  auto* cls = app.add_subcommand("classify", "classify a state read from JSON");
  std::string in, mode = "bipartite", out, hint;
  int restarts = 32, max_steps = 2000;
  std::uint64_t seed = 1;
  double eps = 1e-6;
  bool no_roofs = false, bits = false;
  cls->add_option("--in", in, "state file")->required();
  cls->add_option("--mode", mode, "bipartite, ps, pss, fts or invariants")
      ->check(CLI::IsMember({"bipartite", "ps", "pss", "fts", "invariants"}));
  cls->add_option("--roof-restarts", restarts, "random restarts per convex roof");
  cls->add_option("--roof-steps", max_steps, "descent steps per restart");
  cls->add_option("--seed", seed, "random seed");
  cls->add_option("--eps", eps, "vanishing threshold for roofs");
  cls->add_option("--hint", hint, "known decomposition {dims, weights, vectors}");
  cls->add_flag("--no-roofs", no_roofs, "decide with shortcuts and hints only");
  cls->add_flag("--bits", bits, "report entropies in bits");
  cls->add_option("--out", out, "report path (default stdout)");

  // lattice
  auto* lat = app.add_subcommand("lattice", "partitions, proper labels and class labels");
  int ln = 3;
  std::string dump;
  lat->add_option("--n", ln, "number of subsystems")->check(CLI::Range(1, 4));
  lat->add_option("--dump", dump, "JSON output path (default stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "LU-invariant polynomials");
  std::string iin, iout;
  int grade = 3;
  inv->add_option("--in", iin, "state file")->required();
  inv->add_option("--grade", grade, "maximal grade")->check(CLI::Range(1, 3));
  inv->add_option("--out", iout, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan) {
      sopt.criteria.clear();
      std::stringstream ss(crit);
      std::string c;
      while (std::getline(ss, c, ',')) {
        scan_columns(c);  // validates the name
        sopt.criteria.push_back(c);
      }
      ScanTable t = scan_simplex(sopt);
      if (!csv.empty()) {
        std::string text = scan_csv(t, sopt);
        if (csv == "-") std::cout << text;
        else save_text(csv, text);
      }
      if (!svg.empty()) save_text(svg, scan_svg(t, sopt));
      if (csv.empty() && svg.empty()) std::cout << scan_csv(t, sopt);
    } else if (*cls) {
      LoadedState s = load_state(in);
      json rep;
      rep["dims"] = s.is_vector ? s.psi.dims : s.rho.dims;
      rep["mode"] = mode;
      if (mode == "bipartite") {
        rep["report"] = bipartite_report(s.density(), bits);
      } else if (mode == "ps" || mode == "pss") {
        ClassifyOptions o;
        o.roof.restarts = restarts;
        o.roof.max_steps = max_steps;
        o.roof.seed = seed;
        o.eps = eps;
        o.run_roofs = !no_roofs;
        if (!hint.empty()) o.hints.push_back(load_ensemble(hint));
        if (s.is_vector) o.hints.push_back(Ensemble{{1.0}, {StateVector(s.psi.dims, s.psi.amps.normalized())}});
        DensityMatrix rho = s.density();
        rho.m /= rho.m.trace().real();
        rep["report"] = classify_json(mode == "ps" ? classify_ps(rho, o) : classify_pss(rho, o), eps);
      } else if (mode == "fts") {
        if (!s.is_vector) throw StateError("fts mode needs a state vector");
        rep["report"] = fts_report(s.psi);
      } else {
        rep["report"] = invariants_report(s, 3);
      }
      emit(out, rep.dump(2));
    } else if (*lat) {
      json j;
      j["n"] = ln;
      for (auto& p : enumerate_partitions(ln)) j["partitions"].push_back(p.str());
      auto labels = proper_labels(ln);
      for (auto& l : labels) j["proper_labels"].push_back(label_str(l));
      for (auto& e : label_cover_edges(labels)) j["cover_edges"].push_back({e.lower, e.upper});
      j["proper_label_count"] = labels.size();
      if (ln <= 3) {
        for (auto& c : class_labels(ln)) {
          json cl;
          for (int i : c.above) cl["above"].push_back(label_str(labels[i]));
          for (int i : c.below) cl["below"].push_back(label_str(labels[i]));
          j["class_labels"].push_back(cl);
        }
        j["class_label_count"] = j["class_labels"].size();
      }
      emit(dump, j.dump(2));
    } else if (*inv) {
      LoadedState s = load_state(iin);
      emit(iout, invariants_report(s, grade).dump(2));
    }
  } catch (const std::exception& e) {
    std::cerr << "entanglia: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

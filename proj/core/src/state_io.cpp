#include "entanglia/state_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace entanglia {

using nlohmann::json;

namespace {
cplx read_cplx(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2) throw StateError("complex entries must be [re, im]");
  return {e[0].get<double>(), e[1].get<double>()};
}

json write_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

// flattens one level of row nesting if present
std::vector<cplx> read_entries(const json& data) {
  std::vector<cplx> out;
  if (!data.is_array()) throw StateError("\"data\" must be an array");
  for (auto& e : data) {
    if (e.is_array() && !e.empty() && e[0].is_array()) {
      for (auto& x : e) out.push_back(read_cplx(x));
    } else {
      out.push_back(read_cplx(e));
    }
  }
  return out;
}
}  // namespace

LoadedState parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateError(std::string("malformed state file: ") + e.what());
  }
  if (!j.contains("dims") || !j.contains("kind") || !j.contains("data"))
    throw StateError("state file needs \"dims\", \"kind\" and \"data\"");
  Dims dims = j["dims"].get<Dims>();
  check_dims(dims);
  const std::string kind = j["kind"].get<std::string>();
  std::vector<cplx> v = read_entries(j["data"]);
  const long D = total_dim(dims);
  LoadedState s;
  if (kind == "vector") {
    if (static_cast<long>(v.size()) != D) throw StateError("vector length does not match dims");
    Vec a(D);
    for (long i = 0; i < D; ++i) a(i) = v[i];
    s.is_vector = true;
    s.psi = StateVector(dims, a);
  } else if (kind == "density") {
    if (static_cast<long>(v.size()) != D * D) throw StateError("matrix size does not match dims");
    Mat m(D, D);
    for (long r = 0; r < D; ++r)
      for (long c = 0; c < D; ++c) m(r, c) = v[r * D + c];
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol * std::max(1.0, m.cwiseAbs().maxCoeff()))
      throw StateError("density matrix is not Hermitian");
    s.rho = DensityMatrix(dims, hermitize(m));
  } else {
    throw StateError("kind must be \"vector\" or \"density\"");
  }
  return s;
}

LoadedState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

std::string dump_state(const StateVector& psi) {
  json j;
  j["dims"] = psi.dims;
  j["kind"] = "vector";
  j["data"] = json::array();
  for (long i = 0; i < psi.amps.size(); ++i) j["data"].push_back(write_cplx(psi.amps(i)));
  return j.dump(1);
}

std::string dump_state(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims;
  j["kind"] = "density";
  j["data"] = json::array();
  for (long r = 0; r < rho.m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < rho.m.cols(); ++c) row.push_back(write_cplx(rho.m(r, c)));
    j["data"].push_back(row);
  }
  return j.dump(1);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw StateError("cannot write " + path);
  out << text;
}

std::string roof_json(const RoofResult& r) {
  json j;
  j["value"] = r.value;
  j["weights"] = r.weights;
  j["vectors"] = json::array();
  for (auto& v : r.vectors) {
    json a = json::array();
    for (long i = 0; i < v.amps.size(); ++i) a.push_back(write_cplx(v.amps(i)));
    j["vectors"].push_back(a);
  }
  j["restarts_used"] = r.restarts_used;
  j["converged"] = r.converged;
  j["steps"] = r.steps;
  j["best_restart"] = r.best_restart;
  return j.dump();
}

}  // namespace entanglia

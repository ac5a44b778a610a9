#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entanglia {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Dims = std::vector<int>;

// Subsystems are numbered from 0 in the C++ API. Labels and the CLI use 1..n.
using SubsystemSet = std::vector<int>;

struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kHermTol = 1e-12;
constexpr double kPosTol = 1e-9;

struct StateVector {
  Dims dims;
  Vec amps;

  StateVector() = default;
  StateVector(Dims d, Vec a);
  int n() const { return static_cast<int>(dims.size()); }
  double norm2() const { return amps.squaredNorm(); }
};

struct DensityMatrix {
  Dims dims;
  Mat m;

  DensityMatrix() = default;
  DensityMatrix(Dims d, Mat a);
  int n() const { return static_cast<int>(dims.size()); }
  cplx trace() const { return m.trace(); }
};

long total_dim(const Dims& dims);
void check_dims(const Dims& dims);

DensityMatrix projector(const StateVector& psi);
StateVector kron(const StateVector& a, const StateVector& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
Mat kron(const Mat& a, const Mat& b);

// computational basis vector |i1 i2 ... in>
StateVector basis_state(const Dims& dims, const std::vector<int>& digits);
std::vector<int> digits_of(long index, const Dims& dims);
long index_of(const std::vector<int>& digits, const Dims& dims);

SubsystemSet complement(const SubsystemSet& k, int n);

// Reorders tensor factors: new subsystem j is old subsystem order[j].
StateVector reorder(const StateVector& psi, const std::vector<int>& order);
DensityMatrix reorder(const DensityMatrix& rho, const std::vector<int>& order);

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& traced);
DensityMatrix reduced(const StateVector& psi, const SubsystemSet& kept);
DensityMatrix reduced(const DensityMatrix& rho, const SubsystemSet& kept);
DensityMatrix partial_transpose(const DensityMatrix& rho, const SubsystemSet& on);

// Generic slot permutation on a tensor with 2n slots (n row slots, n column
// slots).  Output slot k carries input slot sigma[k].  The first nrow output
// slots index rows.
Mat permute_slots(const Mat& data, const std::vector<int>& slot_dims,
                  const std::vector<int>& sigma, int nrow_out,
                  std::vector<int>* out_slot_dims = nullptr);
Mat permute_systems(const DensityMatrix& rho, const std::vector<int>& sigma);
// R(rho) for the cut (A = cut, B = rest), rows (a a'), columns (b b').
Mat realign(const DensityMatrix& rho, const SubsystemSet& cut);

StateVector spin_flip(const StateVector& psi);
DensityMatrix spin_flip(const DensityMatrix& rho);

struct Schmidt {
  RVec coeffs;
  Mat left;
  Mat right;
};
Schmidt schmidt_decompose(const StateVector& psi, const SubsystemSet& cut);

double trace_norm(const Mat& m);
RVec singular_values(const Mat& m);
Mat hermitize(const Mat& h);
RVec herm_spectrum(const Mat& h);
RVec herm_spectrum(const DensityMatrix& rho);
void herm_eigen(const Mat& h, RVec& vals, Mat& vecs);  // descending

Mat pauli(int k);
Mat epsilon2();
Mat local_op(const Dims& dims, int site, const Mat& op);

}  // namespace entanglia

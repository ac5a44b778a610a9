#pragma once

#include <array>
#include <string>
#include <vector>

#include "entanglia/tensor.hpp"

namespace entanglia {

enum class S3 { e, s, s2, t, ts, ts2 };

const char* s3_name(S3 x);
S3 s3_parse(const std::string& name);
// Image of {0,1,2}; products read left to right (ts: apply t, then s).
std::array<int, 3> s3_perm(S3 x);
S3 s3_from_perm(const std::array<int, 3>& p);
S3 s3_mul(S3 a, S3 b);
S3 s3_inv(S3 a);
// beta gamma beta^-1 from the hard-coded table.
S3 s3_conj(S3 beta, S3 gamma);
// 0: [e], 1: [s], 2: [t]
int s3_class(S3 x);

struct PermLabel {
  int grade = 3;  // 1, 2 or 3
  std::vector<S3> perms;

  std::string str() const;  // "t,ts,e"
  // Grade 0 means infer: 3 if any 3-cycle or transposition other than t, else 2 if any t, else 1.
  static PermLabel parse(const std::string& s, int grade = 0);
};

// One representative per orbit of simultaneous conjugation, 1 <= r <= 6.
std::vector<PermLabel> s3_labels(int r);
// S2^r (conjugation is trivial), S1^r is the single all-e label.
std::vector<PermLabel> lu_labels(int grade, int r);
long s3_label_count(int r);  // 6^(r-1) + 3^(r-1) + 2^(r-1)

// Label of length n-1 for an n-partite vector.
double pure_invariant(const StateVector& psi, const PermLabel& label);
// Label of length n.
double mixed_invariant(const DensityMatrix& rho, const PermLabel& label);

// Index-loop contractions for arbitrary permutations in S_m (images, 0-based).
// Cost is (prod d)^m; meant for tiny systems.
using PermTuple = std::vector<std::vector<int>>;
PermTuple to_perm_tuple(const PermLabel& label);
cplx naive_pure_invariant(const StateVector& psi, const PermTuple& sigma);
cplx naive_mixed_invariant(const DensityMatrix& rho, const PermTuple& sigma);

}  // namespace entanglia

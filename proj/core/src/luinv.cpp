#include "entanglia/luinv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entanglia/bipartite.hpp"

namespace entanglia {

namespace {
constexpr S3 kAll[6] = {S3::e, S3::s, S3::s2, S3::t, S3::ts, S3::ts2};

// beta gamma beta^-1, rows beta, columns gamma, both in kAll order
constexpr S3 kConj[6][6] = {
    {S3::e, S3::s, S3::s2, S3::t, S3::ts, S3::ts2},
    {S3::e, S3::s, S3::s2, S3::ts, S3::ts2, S3::t},
    {S3::e, S3::s, S3::s2, S3::ts2, S3::t, S3::ts},
    {S3::e, S3::s2, S3::s, S3::t, S3::ts2, S3::ts},
    {S3::e, S3::s2, S3::s, S3::ts2, S3::ts, S3::t},
    {S3::e, S3::s2, S3::s, S3::ts, S3::t, S3::ts2},
};
}  // namespace

const char* s3_name(S3 x) {
  switch (x) {
    case S3::e: return "e";
    case S3::s: return "s";
    case S3::s2: return "s2";
    case S3::t: return "t";
    case S3::ts: return "ts";
    case S3::ts2: return "ts2";
  }
  return "?";
}

S3 s3_parse(const std::string& name) {
  for (S3 x : kAll)
    if (name == s3_name(x)) return x;
  if (name == "s^2") return S3::s2;
  if (name == "ts^2") return S3::ts2;
  throw std::invalid_argument("unknown permutation name: " + name);
}

std::array<int, 3> s3_perm(S3 x) {
  switch (x) {
    case S3::e: return {0, 1, 2};
    case S3::s: return {1, 2, 0};
    case S3::s2: return {2, 0, 1};
    case S3::t: return {1, 0, 2};
    case S3::ts: return {2, 1, 0};
    case S3::ts2: return {0, 2, 1};
  }
  return {0, 1, 2};
}

S3 s3_from_perm(const std::array<int, 3>& p) {
  for (S3 x : kAll)
    if (s3_perm(x) == p) return x;
  throw std::invalid_argument("not a permutation of three elements");
}

S3 s3_mul(S3 a, S3 b) {
  auto pa = s3_perm(a), pb = s3_perm(b);
  std::array<int, 3> r{};
  for (int i = 0; i < 3; ++i) r[i] = pb[pa[i]];
  return s3_from_perm(r);
}

S3 s3_inv(S3 a) {
  auto p = s3_perm(a);
  std::array<int, 3> r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return s3_from_perm(r);
}

S3 s3_conj(S3 beta, S3 gamma) {
  return kConj[static_cast<int>(beta)][static_cast<int>(gamma)];
}

int s3_class(S3 x) {
  switch (x) {
    case S3::e: return 0;
    case S3::s:
    case S3::s2: return 1;
    default: return 2;
  }
}

std::string PermLabel::str() const {
  std::string out;
  for (size_t i = 0; i < perms.size(); ++i) {
    if (i) out += ',';
    out += s3_name(perms[i]);
  }
  return out;
}

PermLabel PermLabel::parse(const std::string& s, int grade) {
  PermLabel l;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("empty permutation in label");
    l.perms.push_back(s3_parse(tok));
  }
  int need = 1;
  for (S3 x : l.perms) {
    if (x == S3::t) need = std::max(need, 2);
    else if (x != S3::e) need = 3;
  }
  if (grade == 0) grade = need;
  if (grade < need || grade > 3) throw std::invalid_argument("label does not fit grade");
  l.grade = grade;
  return l;
}

namespace {
void assign_classes(int r, std::vector<int>& cls, std::vector<PermLabel>& out);

void fill(const std::vector<int>& cls, size_t pos, bool seen_s, bool seen_t, bool seen_ts,
          bool any_s, std::vector<S3>& cur, std::vector<PermLabel>& out) {
  if (pos == cls.size()) {
    out.push_back(PermLabel{3, cur});
    return;
  }
  auto go = [&](S3 x, bool ss, bool st, bool sts) {
    cur.push_back(x);
    fill(cls, pos + 1, ss, st, sts, any_s, cur, out);
    cur.pop_back();
  };
  switch (cls[pos]) {
    case 0: go(S3::e, seen_s, seen_t, seen_ts); break;
    case 1:
      if (!seen_s) {
        go(S3::s, true, seen_t, seen_ts);
      } else {
        go(S3::s, true, seen_t, seen_ts);
        go(S3::s2, true, seen_t, seen_ts);
      }
      break;
    default:
      if (!seen_t) {
        go(S3::t, seen_s, true, seen_ts);
      } else if (any_s || seen_ts) {
        go(S3::t, seen_s, true, seen_ts);
        go(S3::ts, seen_s, true, true);
        go(S3::ts2, seen_s, true, seen_ts);
      } else {
        go(S3::t, seen_s, true, false);
        go(S3::ts, seen_s, true, true);
      }
  }
}

void assign_classes(int r, std::vector<int>& cls, std::vector<PermLabel>& out) {
  if (static_cast<int>(cls.size()) == r) {
    bool any_s = std::count(cls.begin(), cls.end(), 1) > 0;
    std::vector<S3> cur;
    fill(cls, 0, false, false, false, any_s, cur, out);
    return;
  }
  for (int c = 0; c < 3; ++c) {
    cls.push_back(c);
    assign_classes(r, cls, out);
    cls.pop_back();
  }
}
}  // namespace

std::vector<PermLabel> s3_labels(int r) {
  if (r < 1 || r > 6) throw std::invalid_argument("s3_labels: r must be in 1..6");
  std::vector<PermLabel> out;
  std::vector<int> cls;
  assign_classes(r, cls, out);
  return out;
}

std::vector<PermLabel> lu_labels(int grade, int r) {
  if (grade == 3) return s3_labels(r);
  if (r < 0 || r > 16) throw std::invalid_argument("lu_labels: r out of range");
  if (grade == 1) return {PermLabel{1, std::vector<S3>(r, S3::e)}};
  if (grade != 2) throw std::invalid_argument("grade must be 1, 2 or 3");
  std::vector<PermLabel> out;
  for (long mask = 0; mask < (1L << r); ++mask) {
    PermLabel l{2, {}};
    for (int j = 0; j < r; ++j) l.perms.push_back((mask >> (r - 1 - j)) & 1 ? S3::t : S3::e);
    out.push_back(l);
  }
  return out;
}

long s3_label_count(int r) {
  auto p = [](long b, int k) {
    long v = 1;
    while (k-- > 0) v *= b;
    return v;
  };
  return p(6, r - 1) + p(3, r - 1) + p(2, r - 1);
}

namespace {
void check_label(const PermLabel& label, int n) {
  if (static_cast<int>(label.perms.size()) != n)
    throw std::invalid_argument("label length does not match the number of subsystems");
  if (label.grade < 1 || label.grade > 3) throw std::invalid_argument("grade must be 1, 2 or 3");
  for (S3 x : label.perms) {
    if (label.grade == 1 && x != S3::e) throw std::invalid_argument("grade 1 label must be all e");
    if (label.grade == 2 && x != S3::e && x != S3::t)
      throw std::invalid_argument("grade 2 label allows only e and t");
  }
}

SubsystemSet where(const PermLabel& l, S3 x) {
  SubsystemSet out;
  for (int j = 0; j < static_cast<int>(l.perms.size()); ++j)
    if (l.perms[j] == x) out.push_back(j);
  return out;
}

SubsystemSet unite(SubsystemSet a, const SubsystemSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}
}  // namespace

double mixed_invariant(const DensityMatrix& rho, const PermLabel& label) {
  const int n = rho.n();
  check_label(label, n);
  const double tr = rho.m.trace().real();
  if (label.grade == 1) return tr;
  const SubsystemSet je = where(label, S3::e);
  if (label.grade == 2) {
    Mat r = partial_trace(rho, je).m;
    return (r * r).trace().real();
  }
  const SubsystemSet kept = complement(je, n);
  if (kept.empty()) return tr * tr * tr;
  DensityMatrix rt = partial_transpose(rho, where(label, S3::s2));
  Dims kd;
  for (int j : kept) kd.push_back(rho.dims[j]);
  Mat prod;
  for (S3 tau : {S3::ts2, S3::ts, S3::t}) {
    const SubsystemSet jt = where(label, tau);
    Mat b = partial_trace(rt, unite(jt, je)).m;
    // positions inside `kept` that survive the trace
    SubsystemSet on;
    for (int p = 0; p < static_cast<int>(kept.size()); ++p)
      if (!std::binary_search(jt.begin(), jt.end(), kept[p])) on.push_back(p);
    Mat a = on.empty() ? Mat(b(0, 0) * Mat::Identity(total_dim(kd), total_dim(kd)))
                       : embed(b, kd, on);
    prod = prod.size() == 0 ? a : Mat(prod * a);
  }
  return prod.trace().real();
}

double pure_invariant(const StateVector& psi, const PermLabel& label) {
  PermLabel ext = label;
  ext.perms.push_back(S3::e);
  return mixed_invariant(projector(psi), ext);
}

PermTuple to_perm_tuple(const PermLabel& label) {
  PermTuple out;
  for (S3 x : label.perms) {
    auto p = s3_perm(x);
    out.push_back(std::vector<int>(p.begin(), p.begin() + label.grade));
    if (label.grade < 3 && x != S3::e && x != S3::t) throw std::invalid_argument("bad label");
  }
  return out;
}

namespace {
void check_tuple(const PermTuple& sigma, int n, int& m) {
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation tuple length");
  m = sigma.empty() ? 1 : static_cast<int>(sigma[0].size());
  if (m < 1 || m > 4) throw std::invalid_argument("grade must be in 1..4");
  for (auto& p : sigma) {
    if (static_cast<int>(p.size()) != m) throw std::invalid_argument("mixed permutation sizes");
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    for (int i = 0; i < m; ++i)
      if (q[i] != i) throw std::invalid_argument("not a permutation");
  }
}

// Iterates over m multi-indices; body gets digits[l][j].
template <class F>
void for_each_indices(const Dims& dims, int m, F body) {
  const long D = total_dim(dims);
  long total = 1;
  for (int l = 0; l < m; ++l) total *= D;
  std::vector<std::vector<int>> dig(m);
  std::vector<long> idx(m);
  for (long c = 0; c < total; ++c) {
    long r = c;
    for (int l = m - 1; l >= 0; --l) {
      idx[l] = r % D;
      r /= D;
      dig[l] = digits_of(idx[l], dims);
    }
    body(idx, dig);
  }
}
}  // namespace

cplx naive_mixed_invariant(const DensityMatrix& rho, const PermTuple& sigma) {
  int m;
  check_tuple(sigma, rho.n(), m);
  const int n = rho.n();
  cplx sum = 0;
  std::vector<int> low(n);
  for_each_indices(rho.dims, m, [&](const std::vector<long>& idx, const std::vector<std::vector<int>>& dig) {
    cplx term = 1;
    for (int l = 0; l < m; ++l) {
      for (int j = 0; j < n; ++j) low[j] = dig[sigma[j][l]][j];
      term *= rho.m(idx[l], index_of(low, rho.dims));
    }
    sum += term;
  });
  return sum;
}

cplx naive_pure_invariant(const StateVector& psi, const PermTuple& sigma) {
  const int n = psi.n();
  if (static_cast<int>(sigma.size()) != n - 1)
    throw std::invalid_argument("pure label must have n-1 entries");
  int m;
  PermTuple full = sigma;
  const int mm = sigma.empty() ? 1 : static_cast<int>(sigma[0].size());
  std::vector<int> id(mm);
  for (int i = 0; i < mm; ++i) id[i] = i;
  full.push_back(id);
  check_tuple(full, n, m);
  cplx sum = 0;
  std::vector<int> low(n);
  for_each_indices(psi.dims, m, [&](const std::vector<long>& idx, const std::vector<std::vector<int>>& dig) {
    cplx term = 1;
    for (int l = 0; l < m; ++l) {
      for (int j = 0; j < n; ++j) low[j] = dig[full[j][l]][j];
      term *= psi.amps(idx[l]) * std::conj(psi.amps(index_of(low, psi.dims)));
    }
    sum += term;
  });
  return sum;
}

}  // namespace entanglia

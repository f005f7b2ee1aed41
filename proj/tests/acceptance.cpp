// Copyright 2026 The choi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "choi/choi.hpp"
#include "choi/cli.hpp"

namespace {

using namespace choi;

const std::string kData = CHOI_DATA_DIR;
const BipartiteShape kShapes[] = {{2, 2}, {3, 2}, {2, 3}, {4, 3}};

// Tracks the worst observed value of a quantity against its bound.
struct Worst {
  double value = 0.0;
  bool ok = true;
  void check(double v, double bound) {
    value = std::max(value, v);
    if (!(v <= bound)) ok = false;
  }
};

double rel_err(const Matrix& a, const Matrix& b) {
  const double s = std::max({frobenius_norm(a), frobenius_norm(b), 1e-300});
  return frobenius_norm(a - b) / s;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Matrix kraus_action(const KrausSet& k, const Matrix& rho) {
  Matrix out(k.shape().m, k.shape().m);
  for (const Matrix& a : k.ops()) out += a * rho * adjoint(a);
  return out;
}

// Newton power sums of the values against Tr(h^k), k = 1..n; these fix the multiset.
double power_sum_gap(const std::vector<Complex>& mu, const Matrix& h) {
  double gap = 0.0;
  Matrix hk = Matrix::identity(h.rows());
  const double s = std::max(frobenius_norm(h), 1e-300);
  for (std::size_t k = 1; k <= mu.size(); ++k) {
    hk = hk * h;
    Complex pk{};
    for (Complex z : mu) pk += std::pow(z, static_cast<double>(k));
    gap = std::max(gap, std::abs(pk - trace(hk)) / std::pow(s, static_cast<double>(k)));
  }
  return gap;
}

std::string criterion1() {
  std::mt19937_64 rng(101);
  Worst iso1, iso2;
  for (const auto& s : kShapes)
    for (int t = 0; t < 200; ++t) {
      const Matrix a = random::complex_normal(s.dim(), 1, rng), b = random::complex_normal(s.dim(), 1, rng);
      const Complex lhs = dot(b, a);
      const Complex rhs = frobenius_inner(hat(BipartiteVector(s, b)), hat(BipartiteVector(s, a)));
      iso1.check(std::abs(lhs - rhs) / (frobenius_norm(a) * frobenius_norm(b)), 1e-10);

      const Channel d(s, random::complex_normal(s.dim(), s.dim(), rng));
      const Channel e(s, random::complex_normal(s.dim(), s.dim(), rng));
      const Matrix se = superop_from_channel(e);
      Complex sum{};
      for (std::size_t j = 0; j < s.n; ++j)
        for (std::size_t l = 0; l < s.n; ++l) {
          Matrix ej(s.m, s.m);
          for (std::size_t i = 0; i < s.m; ++i)
            for (std::size_t k = 0; k < s.m; ++k) ej(i, k) = se(i * s.m + k, j * s.n + l);
          sum += frobenius_inner(ej, apply(d, Matrix::unit(s.n, s.n, j, l)));
        }
      const Complex direct = frobenius_inner(e.choi_matrix(), d.choi_matrix());
      iso2.check(std::abs(direct - sum) / (frobenius_norm(e.choi_matrix()) * frobenius_norm(d.choi_matrix())), 1e-10);
    }
  if (!(iso1.ok && iso2.ok)) throw std::runtime_error("worst " + fmt("%.2e", iso1.value) + " / " + fmt("%.2e", iso2.value));
  return "vector/hat worst " + fmt("%.2e", iso1.value) + ", choi/superop worst " + fmt("%.2e", iso2.value);
}

std::string criterion2() {
  std::mt19937_64 rng(102);
  Worst trip, eig;
  for (int t = 0; t < 100; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const Channel c = channel_from_kraus(random::kraus_set(s.m, s.n, random::integer(1, 4, rng), rng));
    const Channel back = channel_from_kraus(kraus_from_channel(c));
    trip.check(rel_err(back.choi_matrix(), c.choi_matrix()), 1e-10);
    const double lo = hermitian_eig(c.choi_matrix()).values.back();
    eig.check(-lo / frobenius_norm(c.choi_matrix()), 1e-10);
  }
  if (!(trip.ok && eig.ok)) throw std::runtime_error("round trip " + fmt("%.2e", trip.value));
  return "round trip worst " + fmt("%.2e", trip.value) + ", most negative eig/|choi| " + fmt("%.2e", -eig.value);
}

std::string criterion3() {
  const Channel t = transpose_channel(2);
  const std::vector<double> ev = hermitian_eig(t.choi_matrix()).values;
  const double want[] = {1.0, 1.0, 1.0, -1.0};
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(ev[k] - want[k]) > 1e-10) throw std::runtime_error("eigenvalue " + fmt("%.17g", ev[k]));
  const CpCheck cp = is_completely_positive(t);
  if (cp.completely_positive || !cp.witness) throw std::runtime_error("transpose reported CP");
  const double r = std::sqrt(0.5);
  const double overlap = std::abs(dot(Matrix::column({0.0, r, -r, 0.0}), cp.witness->data()));
  if (std::abs(overlap - 1.0) > 1e-10) throw std::runtime_error("witness overlap " + fmt("%.3g", overlap));
  const PositivityVerdict p = check_positive_preserving(t, 10000, 0);
  if (p.outcome != PositivityOutcome::NoViolationFound || p.samples_used != 10000)
    throw std::runtime_error("falsifier reported a violation");
  return "eigenvalues {1,1,1,-1}, witness overlap " + fmt("%.12f", overlap) + ", 10000 samples clean";
}

std::string criterion4() {
  std::mt19937_64 rng(104);
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 100; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const KrausSet k = random::tp_kraus_set(s.m, s.n, random::integer((s.n + s.m - 1) / s.m, 4, rng), rng);
    const TpConditions c = six_tp_conditions(channel_from_kraus(k));
    if (c.agree() && c.partial_trace && c.kraus_sum && c.check_kraus_sum) ++accepted;

    // Perturb one Kraus operator: still CP, no longer TP.
    std::vector<Matrix> ops = k.ops();
    ops[0] = (1.0 + random::uniform(0.05, 0.5, rng)) * ops[0];
    const TpConditions d = six_tp_conditions(channel_from_kraus(KrausSet(s, ops)));
    if (d.agree() && !d.partial_trace && d.kraus_sum && d.check_kraus_sum) ++rejected;
  }
  if (accepted != 100 || rejected != 100)
    throw std::runtime_error(std::to_string(accepted) + "/100 accepted, " + std::to_string(rejected) + "/100 rejected");
  return "100/100 TP unanimous, 100/100 perturbed rejected unanimously";
}

std::string criterion5() {
  std::mt19937_64 rng(105);
  Worst single;
  for (int t = 0; t < 50; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const Factorizability f = factorizability(channel_from_kraus(KrausSet({random::complex_normal(s.m, s.n, rng)})));
    single.check(std::abs(f.superop_value), 1e-9);
  }
  if (!single.ok) throw std::runtime_error("single-Kraus value " + fmt("%.2e", single.value));
  std::string tail;
  for (std::size_t n : {2u, 3u}) {
    const Factorizability f = factorizability(depolarizing_channel(n));
    const double hand = static_cast<double>(n * n - 1);
    if (!(f.normalized > 0.1) || std::abs(f.superop_value - hand) > 1e-9)
      throw std::runtime_error("depolarizing n=" + std::to_string(n) + " value " + fmt("%.17g", f.superop_value.real()));
    tail += ", depolarizing n=" + std::to_string(n) + " value " + fmt("%.12g", f.superop_value.real()) +
            " (normalized " + fmt("%.3g", f.normalized) + ")";
  }
  return "single-Kraus worst " + fmt("%.2e", single.value) + tail;
}

std::string criterion6() {
  std::mt19937_64 rng(106);
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = t < 50 ? 2 : 3;
    const KrausSet k = random::tp_kraus_set(n, n, random::integer(1, n, rng), rng);
    if (extremality(channel_from_kraus(k)).paths_agree) ++agree;
  }
  int unitary = 0;
  for (int t = 0; t < 20; ++t)
    if (is_extremal_tp(unitary_channel(random::unitary(2 + t % 3, rng)))) ++unitary;
  const double r = std::sqrt(0.5);
  Matrix z{{1.0, 0.0}, {0.0, -1.0}};
  const bool mixture = is_extremal_tp(channel_from_kraus(KrausSet({r * Matrix::identity(2), r * z})));
  if (agree != 100 || unitary != 20 || mixture)
    throw std::runtime_error(std::to_string(agree) + "/100 agree, " + std::to_string(unitary) + "/20 unitary extremal");
  return "criteria agree on 50+50 channels, 20/20 unitary extremal, Id/Z mixture not extremal";
}

std::string criterion7() {
  std::mt19937_64 rng(107);
  Worst rec, lam, diag;
  for (int t = 0; t < 100; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const BipartiteVector v(s, random::complex_normal(s.dim(), 1, rng));
    const SchmidtForm f = schmidt(v);
    rec.check(rel_err(reconstruct(f, s).data(), v.data()), 1e-9);
    if (s.m >= s.n) rec.check(rel_err(reconstruct(one_sided_triangular(v), s).data(), v.data()), 1e-9);

    const std::vector<double> ev = hermitian_eig(partial_trace_2(projector(v))).values;
    const double norm2 = std::pow(frobenius_norm(v.data()), 2);
    for (std::size_t k = 0; k < ev.size(); ++k) {
      const double l = k < f.coefficients.size() ? f.coefficients[k] : 0.0;
      lam.check(std::abs(l * l - ev[k]) / norm2, 1e-9);
    }

    const std::size_t n = 2 + t % 3;
    const BipartiteVector w({n, n}, random::complex_normal(n * n, 1, rng));
    const TriangularForm g = two_sided_triangular(w);
    rec.check(rel_err(reconstruct(g, {n, n}).data(), w.data()), 1e-9);
    std::vector<Complex> mu;
    for (std::size_t k = 0; k < n; ++k) mu.push_back(g.coefficients(k, k));
    diag.check(power_sum_gap(mu, hat(w)), 1e-9);
  }
  if (!(rec.ok && lam.ok && diag.ok))
    throw std::runtime_error("reconstruct " + fmt("%.2e", rec.value) + ", lambda " + fmt("%.2e", lam.value) +
                             ", diagonal " + fmt("%.2e", diag.value));
  return "reconstruct worst " + fmt("%.2e", rec.value) + ", lambda^2 " + fmt("%.2e", lam.value) + ", diagonal " +
         fmt("%.2e", diag.value);
}

std::string criterion8() {
  std::mt19937_64 rng(108);
  Worst gram, tp, action;
  for (int t = 0; t < 50; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const KrausSet k = random::kraus_set(s.m, s.n, random::integer(1, 4, rng), rng);
    Matrix sum(s.n, s.n);
    for (const Matrix& a : k.ops()) sum += adjoint(a) * a;
    const Dilation d = dilate(k);
    gram.check(rel_err(d.gram, sum), 1e-10);
    for (int r = 0; r < 20; ++r) {
      const Matrix rho = random::positive(s.n, random::integer(1, s.n, rng), rng);
      action.check(rel_err(apply_dilation(d, rho), kraus_action(k, rho)), 1e-10);
    }
    const KrausSet ktp = random::tp_kraus_set(s.m, s.n, random::integer((s.n + s.m - 1) / s.m, 4, rng), rng);
    tp.check(frobenius_norm(dilate(ktp).gram - Matrix::identity(s.n)), 1e-10);
  }
  if (!(gram.ok && tp.ok && action.ok)) throw std::runtime_error("gram " + fmt("%.2e", gram.value));
  return "gram worst " + fmt("%.2e", gram.value) + ", TP gram-Id " + fmt("%.2e", tp.value) + ", traced action " +
         fmt("%.2e", action.value);
}

std::string criterion9() {
  std::mt19937_64 rng(109);
  Worst choi, residual;
  for (int t = 0; t < 50; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const std::size_t q = random::integer(1, 4, rng), p = random::integer(q, 6, rng);
    const KrausSet b = random::kraus_set(s.m, s.n, q, rng);
    const Matrix u = random::isometry(p, q, rng);
    std::vector<Matrix> a(p, Matrix(s.m, s.n));
    for (std::size_t x = 0; x < p; ++x)
      for (std::size_t y = 0; y < q; ++y) a[x] += u(x, y) * b[y];
    const KrausSet ka(s, a);
    choi.check(rel_err(channel_from_kraus(ka).choi_matrix(), channel_from_kraus(b).choi_matrix()), 1e-10);
    residual.check(find_kraus_isometry(ka, b).residual, 1e-8);
  }
  if (!(choi.ok && residual.ok)) throw std::runtime_error("choi " + fmt("%.2e", choi.value) + ", residual " + fmt("%.2e", residual.value));
  return "choi worst " + fmt("%.2e", choi.value) + ", recovered residual worst " + fmt("%.2e", residual.value);
}

StateSquare pure_square(const Matrix& ahat) {
  return StateSquare(projector(unhat(ahat, BipartiteShape(ahat.rows(), ahat.cols()))));
}

std::string criterion10() {
  std::mt19937_64 rng(110);
  Worst assoc, pure, inv, hom;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 2;
    auto sq = [&] { return StateSquare(n, random::complex_normal(n * n, n * n, rng)); };
    const StateSquare a = sq(), b = sq(), c = sq();
    assoc.check(rel_err(diamond(diamond(a, b), c).mat(), diamond(a, diamond(b, c)).mat()), 1e-9);
    assoc.check(rel_err(diamond(a, diamond_identity(n)).mat(), a.mat()), 1e-9);
    assoc.check(rel_err(diamond(diamond_identity(n), a).mat(), a.mat()), 1e-9);

    const Matrix x = random::complex_normal(2, 2, rng), y = random::complex_normal(2, 2, rng);
    pure.check(rel_err(diamond(pure_square(x), pure_square(y)).mat(), pure_square(x * y).mat()), 1e-9);

    const Matrix g = random::complex_normal(n, n, rng), h = random::complex_normal(n, n, rng);
    const StateSquare pg = phi_homomorphism(g);
    const Matrix id = diamond_identity(n).mat();
    inv.check(rel_err(diamond(pg, group_inverse(pg)).mat() / trace(diamond(pg, group_inverse(pg)).mat()), id / Complex(double(n))), 1e-9);
    inv.check(rel_err(diamond(group_inverse(pg), pg).mat() / trace(diamond(group_inverse(pg), pg).mat()), id / Complex(double(n))), 1e-9);
    hom.check(rel_err(phi_homomorphism(g * h).mat(), diamond(pg, phi_homomorphism(h)).mat()), 1e-9);
  }
  int cp = 0;
  for (int t = 0; t < 50; ++t) {
    const Channel a = channel_from_kraus(random::kraus_set(2, 2, random::integer(1, 3, rng), rng));
    const Channel b = channel_from_kraus(random::kraus_set(2, 2, random::integer(1, 3, rng), rng));
    if (is_completely_positive(schur_product_channels(a, b)).completely_positive) ++cp;
  }
  if (!(assoc.ok && pure.ok && inv.ok && hom.ok) || cp != 50)
    throw std::runtime_error("assoc " + fmt("%.2e", assoc.value) + ", pure " + fmt("%.2e", pure.value) + ", inverse " +
                             fmt("%.2e", inv.value) + ", phi " + fmt("%.2e", hom.value) + ", schur CP " +
                             std::to_string(cp) + "/50");
  return "assoc/identity " + fmt("%.2e", assoc.value) + ", pure-to-pure " + fmt("%.2e", pure.value) + ", inverse " +
         fmt("%.2e", inv.value) + ", phi " + fmt("%.2e", hom.value) + ", schur CP 50/50";
}

std::string criterion11() {
  std::mt19937_64 rng(111);
  Worst w;
  const BipartiteShape shapes[] = {{2, 2}, {3, 2}};
  for (int t = 0; t < 100; ++t) {
    const BipartiteShape s = shapes[t % 2];
    const BipartiteOperator st(s, random::positive(s.dim(), random::integer(1, s.dim(), rng), rng));
    const Matrix m = random::complex_normal(s.n, s.n, rng);
    w.check(rel_err(state_as_measurement(st, m), apply(Channel(st), transpose(adjoint(m) * m))), 1e-9);
  }
  if (!w.ok) throw std::runtime_error("worst " + fmt("%.2e", w.value));
  return "worst " + fmt("%.2e", w.value);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string criterion12() {
  const char* names[] = {"identity", "transpose", "dephasing", "depolarizing", "measure_and_reset"};
  for (const char* name : names) {
    const io::Json report = cli::cmd_classify(io::read_file(kData + "/channels/" + name + ".json"), cli::Options{});
    if (io::render(report) != slurp(kData + "/golden/" + name + ".classify.json"))
      throw std::runtime_error(std::string(name) + " report differs from golden");
  }
  std::mt19937_64 rng(112);
  const io::Representation reps[] = {io::Representation::Choi, io::Representation::Superop, io::Representation::Kraus};
  Worst w;
  for (int t = 0; t < 60; ++t) {
    const BipartiteShape s = kShapes[t % 4];
    const Channel c = channel_from_kraus(random::kraus_set(s.m, s.n, random::integer(1, 3, rng), rng));
    for (auto from : reps)
      for (auto to : reps) {
        const io::Json a = io::parse(io::render(io::channel_to_json(c, from)));
        const io::Json b = io::parse(io::render(cli::cmd_convert(a, to, {})));
        w.check(rel_err(io::channel_from_json(b).channel.choi_matrix(), c.choi_matrix()), 1e-10);
      }
  }
  if (!w.ok) throw std::runtime_error("round trip " + fmt("%.2e", w.value));
  return "5/5 golden reports byte-identical, round trips worst " + fmt("%.2e", w.value);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"isomorphism isometries", criterion1},
      {"kraus/choi round trip", criterion2},
      {"transpose counterexample", criterion3},
      {"six TP conditions", criterion4},
      {"factorizability condition", criterion5},
      {"extremality", criterion6},
      {"decompositions", criterion7},
      {"dilation", criterion8},
      {"unitary freedom", criterion9},
      {"algebra", criterion10},
      {"state as measurement", criterion11},
      {"CLI golden files and round trips", criterion12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[k].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first, detail.c_str(), secs);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

/*
 * Copyright 2026 The Ortholog Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ortholog/ortholog.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ortholog;

struct Options {
  std::optional<double> tol_orth, tol_cluster, tol_pi, tol_recon;
  std::string out;
  std::string format;  // "", "json", "csv"
  double radius = 10.0;
  int count = 8;
  std::uint64_t seed = 0;
  int samples = 0;
  double t_min = 0.0;
  double t_max = 1.0;
  int max_den = 64;
  int order = 0;
};

Tolerances tolerances_for(int n, const Options& opt) {
  Tolerances tol = Tolerances::for_order(n);
  if (const char* scale_env = std::getenv("ORTHOLOG_TOL_SCALE")) {
    const double scale = std::atof(scale_env);
    if (scale > 0) tol = tol.scaled(scale);
  }
  if (opt.tol_orth) tol.orth_tol = *opt.tol_orth;
  if (opt.tol_cluster) tol.cluster_tol = *opt.tol_cluster;
  if (opt.tol_pi) tol.pi_tol = *opt.tol_pi;
  if (opt.tol_recon) tol.recon_tol = *opt.tol_recon;
  tol.validate();
  return tol;
}

void emit(const std::string& payload, const Options& opt) {
  if (opt.out.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + opt.out);
  out << payload << "\n";
}

std::string json_matrix_list(const std::vector<Mat>& mats) {
  std::string out = "[";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i) out += ", ";
    out += matrix_to_json(mats[i]);
  }
  out += "]";
  return out;
}

template <typename T>
std::string json_num_list(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_floating_point_v<T>)
      out += json_number(xs[i]);
    else
      out += std::to_string(xs[i]);
  }
  out += "]";
  return out;
}

std::string structure_json(const AplogStructure& s) {
  return "\"structure\": \"" + to_string(s.kind) +
         "\", \"mu\": " + std::to_string(s.mu) +
         ", \"dim\": " + std::to_string(s.dim) +
         ", \"components\": " + std::to_string(s.components);
}

int run_exp(const std::string& path, const Options& opt) {
  const Mat a = read_matrix(path);
  emit(matrix_to_json(exp_oracle(a)), opt);
  return 0;
}

int run_svd_skew(const std::string& path, const Options& opt) {
  const Mat a = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(a.rows()), opt);
  const SvdSystem sys = decompose(a, tol);
  const EigSummary summary = eig_summary(sys);
  std::string out = "{\"n\": " + std::to_string(sys.n);
  out += ", \"zetas\": " + json_num_list(sys.zetas);
  out += ", \"rank\": " + std::to_string(summary.rank);
  out += ", \"tr_sq\": " + json_number(summary.tr_sq);
  out += ", \"factors\": " + json_matrix_list(sys.factors) + "}";
  emit(out, opt);
  return 0;
}

int run_pfaffian(const std::string& path, const Options& opt) {
  const Mat a = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(a.rows()), opt);
  emit("{\"pfaffian\": " + json_number(pfaffian(a, tol)) + "}", opt);
  return 0;
}

int run_canon(const std::string& path, const Options& opt) {
  const Mat r = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(r.rows()), opt);
  const CanonicalForm form = canonical_form(r, tol);
  std::string out = "{\"n\": " + std::to_string(form.n);
  out += ", \"thetas\": " + json_num_list(form.thetas);
  out += ", \"mults\": " + json_num_list(form.mults);
  out += ", \"fixed_dim\": " + std::to_string(form.fixed_dim);
  out += ", \"K\": " + matrix_to_json(form.conjugator) + "}";
  emit(out, opt);
  return 0;
}

int run_plog(const std::string& path, const Options& opt) {
  const Mat r = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(r.rows()), opt);
  const PlogDescriptor d = principal_log(r, tol);
  std::string out = "{\"n\": " + std::to_string(d.form.n);
  out += ", " + structure_json(d.structure);
  out += ", \"thetas\": " + json_num_list(d.form.thetas);
  out += ", \"mults\": " + json_num_list(d.form.mults);
  out += ", \"B\": " + matrix_to_json(d.principal);
  if (d.structure.kind != AplogKind::Manifold) {
    std::vector<Mat> logs{d.principal};
    if (d.structure.kind == AplogKind::TwoPoints)
      logs.push_back(d.principal - 2.0 * 3.14159265358979323846 *
                                       d.system.factors.front());
    out += ", \"logs\": " + json_matrix_list(logs);
  }
  if (d.b1_squared)
    out += ", \"b1_squared\": " + matrix_to_json(*d.b1_squared);
  out += "}";
  emit(out, opt);
  return 0;
}

int run_sample_aplog(const std::string& path, const Options& opt) {
  const Mat r = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(r.rows()), opt);
  const std::vector<Mat> samples = sample_aplog(r, opt.count, opt.seed, tol);
  std::string out = "{\"count\": " + std::to_string(samples.size());
  out += ", \"samples\": " + json_matrix_list(samples) + "}";
  emit(out, opt);
  return 0;
}

int run_logs(const std::string& path, const Options& opt) {
  const Mat r = read_matrix(path);
  const Tolerances tol = tolerances_for(static_cast<int>(r.rows()), opt);
  const std::vector<LatticeLog> logs = enumerate_logs(r, opt.radius, tol);
  std::string out = "{\"radius\": " + json_number(opt.radius);
  out += ", \"count\": " + std::to_string(logs.size());
  out += ", \"logs\": [";
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (i) out += ", ";
    out += "{\"coeffs\": " + json_num_list(logs[i].coeffs);
    out += ", \"norm\": " + json_number(logs[i].norm);
    out += ", \"matrix\": " + matrix_to_json(logs[i].matrix) + "}";
  }
  out += "]}";
  emit(out, opt);
  return 0;
}

int run_verify_log(const std::string& r_path, const std::string& a_path,
                   const Options& opt) {
  const Mat r = read_matrix(r_path);
  const Mat a = read_matrix(a_path);
  const Tolerances tol = tolerances_for(static_cast<int>(r.rows()), opt);
  const VerifyResult res = verify_general_form(r, a, tol);
  std::string out = std::string("{\"ok\": ") + (res.ok ? "true" : "false");
  out += ", \"reason\": \"" + res.reason + "\"";
  out += ", \"base\": " + matrix_to_json(res.base);
  out += ", \"ints\": " + json_num_list(res.ints);
  out += ", \"witness\": {\"zetas\": " + json_num_list(res.witness.zetas);
  out += ", \"factors\": " + json_matrix_list(res.witness.factors) + "}}";
  emit(out, opt);
  return 0;
}

int run_dist(const std::string& g_path, const std::string& h_path,
             const Options& opt) {
  const Mat g = read_matrix(g_path);
  const Mat h = read_matrix(h_path);
  const Tolerances tol = tolerances_for(static_cast<int>(g.rows()), opt);
  emit("{\"distance\": " + json_number(distance(g, h, tol)) + "}", opt);
  return 0;
}

int run_geodesic(const std::string& g_path, const std::string& a_path,
                 const Options& opt) {
  const Mat g = read_matrix(g_path);
  const Mat a = read_matrix(a_path);
  const Tolerances tol = tolerances_for(static_cast<int>(g.rows()), opt);
  const GeodesicArc arc = geodesic(g, a, tol);

  const bool csv = (opt.samples > 0 && opt.format != "json") ||
                   opt.format == "csv";
  if (csv) {
    const int k = std::max(opt.samples, 1);
    std::string out;
    for (int i = 0; i < k; ++i) {
      const double t =
          (k == 1) ? opt.t_min
                   : opt.t_min + (opt.t_max - opt.t_min) * i / (k - 1.0);
      const Mat p = eval(arc, t);
      out += json_number(t);
      for (Eigen::Index row = 0; row < p.rows(); ++row)
        for (Eigen::Index col = 0; col < p.cols(); ++col)
          out += "," + json_number(p(row, col));
      out += i + 1 < k ? "\n" : "";
    }
    emit(out, opt);
    return 0;
  }

  std::string out = std::string("{\"is_principal\": ") +
                    (arc.is_principal ? "true" : "false");
  out += ", \"length\": " + json_number(arc_length(arc));
  if (arc.system.size() > 0) {
    const Periodicity per = classify_periodicity(arc, tol, opt.max_den);
    out += ", \"periodicity\": {\"kind\": \"";
    out += per.kind == PeriodicityKind::Periodic ? "Periodic" : "Undecided";
    out += "\"";
    if (per.kind == PeriodicityKind::Periodic)
      out += ", \"period\": " + json_number(per.period);
    out += "}";
  }
  out += ", \"zetas\": " + json_num_list(arc.system.zetas) + "}";
  emit(out, opt);
  return 0;
}

int run_classify_pair(const std::string& g_path, const std::string& h_path,
                      const Options& opt) {
  const Mat g = read_matrix(g_path);
  const Mat h = read_matrix(h_path);
  const Tolerances tol = tolerances_for(static_cast<int>(g.rows()), opt);
  const PairClass pc = classify_pair(g, h, tol);
  std::string out = std::string("{\"same_component\": ") +
                    (pc.same_component ? "true" : "false");
  out += std::string(", \"weakly_diametral\": ") +
         (pc.weakly_diametral ? "true" : "false");
  out += std::string(", \"diametral\": ") + (pc.diametral ? "true" : "false");
  out += ", \"signature\": ";
  if (pc.grassmann_signature) {
    out += "[" + std::to_string(pc.grassmann_signature->first) + ", " +
           std::to_string(pc.grassmann_signature->second) + "]";
  } else {
    out += "null";
  }
  out += ", \"distance\": " + json_number(pc.distance) + "}";
  emit(out, opt);
  return 0;
}

int run_curvature(const std::vector<std::string>& planes, const Options& opt) {
  int n = opt.order;
  std::string sectional;
  if (planes.size() == 2) {
    const Mat x = read_matrix(planes[0]);
    const Mat y = read_matrix(planes[1]);
    n = static_cast<int>(x.rows());
    sectional = ", \"sectional\": " + json_number(sectional_curvature(x, y));
  } else if (n < 1) {
    throw DomainError("curvature: pass --n or two skew matrices");
  }
  const EinsteinConstants c = einstein_constants(n);
  std::string out = "{\"n\": " + std::to_string(n);
  out += ", \"ricci_coeff\": " + json_number(c.ricci_coeff);
  out += ", \"scalar\": " + json_number(c.scalar);
  out += sectional + "}";
  emit(out, opt);
  return 0;
}

int run_diameter(const Options& opt) {
  std::string out = "{\"n\": " + std::to_string(opt.order);
  out += ", \"diameter\": " + json_number(diameter(opt.order)) + "}";
  emit(out, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew-symmetric logarithms of special orthogonal matrices and "
               "the geometry of the orthogonal group"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--tol-orth", opt.tol_orth, "orthogonality tolerance");
  app.add_option("--tol-cluster", opt.tol_cluster, "clustering tolerance");
  app.add_option("--tol-pi", opt.tol_pi, "pi-snapping tolerance");
  app.add_option("--tol-recon", opt.tol_recon, "reconstruction tolerance");
  app.add_option("--out", opt.out, "write output to this file");
  app.add_option("--format", opt.format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.fallthrough();

  std::string in_a, in_b;
  std::vector<std::string> planes;

  auto* exp_cmd = app.add_subcommand("exp", "matrix exponential");
  exp_cmd->add_option("matrix", in_a, "input matrix (JSON/text, - for stdin)")
      ->required();

  auto* svd_cmd =
      app.add_subcommand("svd-skew", "SVD system of a skew-symmetric matrix");
  svd_cmd->add_option("matrix", in_a)->required();

  auto* pf_cmd = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix");
  pf_cmd->add_option("matrix", in_a)->required();

  auto* canon_cmd =
      app.add_subcommand("canon", "angle-block factorization of R in SO_n");
  canon_cmd->add_option("matrix", in_a)->required();

  auto* plog_cmd = app.add_subcommand(
      "plog", "principal logarithm and the structure of the full set");
  plog_cmd->add_option("matrix", in_a)->required();

  auto* sample_cmd = app.add_subcommand(
      "sample-aplog", "sample principal logarithms when -1 is an eigenvalue");
  sample_cmd->add_option("matrix", in_a)->required();
  sample_cmd->add_option("--count", opt.count, "number of samples");
  sample_cmd->add_option("--seed", opt.seed, "RNG seed")->required();

  auto* logs_cmd = app.add_subcommand(
      "logs", "enumerate the logarithm lattice of a generic matrix");
  logs_cmd->add_option("matrix", in_a)->required();
  logs_cmd->add_option("--radius", opt.radius, "Frobenius-norm bound")
      ->required();

  auto* verify_cmd = app.add_subcommand(
      "verify-log", "check a claimed skew logarithm and extract its witness");
  verify_cmd->add_option("matrix", in_a, "the matrix R")->required();
  verify_cmd->add_option("log", in_b, "the claimed logarithm A")->required();

  auto* dist_cmd =
      app.add_subcommand("dist", "Riemannian distance between G and H");
  dist_cmd->add_option("G", in_a)->required();
  dist_cmd->add_option("H", in_b)->required();

  auto* geo_cmd = app.add_subcommand(
      "geodesic", "evaluate or classify the geodesic G exp(tA)");
  geo_cmd->add_option("G", in_a)->required();
  geo_cmd->add_option("A", in_b)->required();
  geo_cmd->add_option("--samples", opt.samples,
                      "emit CSV rows: t, then the n^2 entries of the point");
  geo_cmd->add_option("--t-min", opt.t_min, "sampling start");
  geo_cmd->add_option("--t-max", opt.t_max, "sampling end");
  geo_cmd->add_option("--max-den", opt.max_den,
                      "largest denominator tried for frequency ratios");

  auto* pair_cmd = app.add_subcommand(
      "classify-pair", "diametral / weakly diametral classification");
  pair_cmd->add_option("G", in_a)->required();
  pair_cmd->add_option("H", in_b)->required();

  auto* curv_cmd = app.add_subcommand(
      "curvature", "Einstein constants, or the sectional curvature of a plane");
  curv_cmd->add_option("--n", opt.order, "group order");
  curv_cmd->add_option("planes", planes, "two skew matrices spanning a plane")
      ->expected(0, 2);

  auto* diam_cmd = app.add_subcommand("diameter", "diameter of a component");
  diam_cmd->add_option("--n", opt.order, "group order")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp_cmd->parsed()) return run_exp(in_a, opt);
    if (svd_cmd->parsed()) return run_svd_skew(in_a, opt);
    if (pf_cmd->parsed()) return run_pfaffian(in_a, opt);
    if (canon_cmd->parsed()) return run_canon(in_a, opt);
    if (plog_cmd->parsed()) return run_plog(in_a, opt);
    if (sample_cmd->parsed()) return run_sample_aplog(in_a, opt);
    if (logs_cmd->parsed()) return run_logs(in_a, opt);
    if (verify_cmd->parsed()) return run_verify_log(in_a, in_b, opt);
    if (dist_cmd->parsed()) return run_dist(in_a, in_b, opt);
    if (geo_cmd->parsed()) return run_geodesic(in_a, in_b, opt);
    if (pair_cmd->parsed()) return run_classify_pair(in_a, in_b, opt);
    if (curv_cmd->parsed()) return run_curvature(planes, opt);
    if (diam_cmd->parsed()) return run_diameter(opt);
  } catch (const ParseError& e) {
    std::cout << "{\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}\n";
    return 1;
  } catch (const Error& e) {
    std::cout << "{\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "{\"code\": \"internal\", \"message\": \"" << e.what()
              << "\"}\n";
    return 1;
  }
  return 0;
}

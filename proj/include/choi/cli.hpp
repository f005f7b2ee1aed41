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

#pragma once

// Command implementations for the choi command-line tool. Each command maps
// parsed JSON inputs to a JSON document; run() wires them to arguments and
// exit codes so the tool can also be driven in-process.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "choi/algebra.hpp"
#include "choi/channel.hpp"
#include "choi/decomp.hpp"
#include "choi/error.hpp"
#include "choi/io.hpp"

namespace choi::cli {

using io::Json;

struct Options {
  Tolerance tol;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
};

enum ExitCode : int { kOk = 0, kParse = 2, kDimension = 3, kPrecondition = 4, kNumerical = 5 };

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::NonFinite:
    case ErrorKind::InvalidArgument:
      return kParse;
    case ErrorKind::DimensionMismatch:
      return kDimension;
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::NumericalFailure:
      return kNumerical;
    default:
      return kPrecondition;
  }
}

namespace detail {

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

/// Square split k = n * n, for inputs that carry no explicit cut.
inline std::size_t square_root_dim(std::size_t k, const char* what) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
  require(n * n == k, ErrorKind::DimensionMismatch,
          std::string(what) + ": dimension " + std::to_string(k) + " is not a perfect square; pass --cut");
  return n;
}

inline BipartiteShape cut_shape(const std::vector<std::size_t>& cut, std::size_t dim, const char* what) {
  if (cut.empty()) {
    const std::size_t n = square_root_dim(dim, what);
    return {n, n};
  }
  const BipartiteShape shape(cut.at(0), cut.at(1));
  require(shape.dim() == dim, ErrorKind::DimensionMismatch,
          std::string(what) + ": cut " + to_string(shape) + " does not match dimension " + std::to_string(dim));
  return shape;
}

/// A channel file, or a bare square matrix read as a Choi matrix with a square split.
inline StateSquare load_state_square(const Json& j) {
  if (j.is_object() && j.contains("representation")) {
    const Channel c = io::channel_from_json(j).channel;
    return StateSquare(c.choi());
  }
  const Matrix a = io::matrix_from_json(j);
  require(a.is_square(), ErrorKind::DimensionMismatch, "state must be a square matrix");
  const std::size_t n = square_root_dim(a.rows(), "state");
  return StateSquare(n, a);
}

}  // namespace detail

inline Json classify_report(const Channel& c, const Options& opt) {
  const ChannelVerdict v = classify(c, opt.tol);
  const TpConditions tp = six_tp_conditions(c, opt.tol);
  Json report;
  report["m"] = c.output_dim();
  report["n"] = c.input_dim();
  report["hermitian_preserving"] = v.hermitian_preserving;
  report["completely_positive"] = v.completely_positive;
  report["cp_min_eigenvalue"] = v.min_choi_eigenvalue;
  report["cp_witness"] = v.cp_witness ? io::matrix_to_json(v.cp_witness->data()) : Json(nullptr);
  report["cp_witness_eigenvalue"] = v.cp_witness ? Json(v.min_choi_eigenvalue) : Json(nullptr);
  report["trace_preserving"] = v.trace_preserving;
  report["tp_conditions"] = Json{{"kraus_sum", detail::optional_bool(tp.kraus_sum)},
                                 {"superop_trace_rows", tp.superop_trace_rows},
                                 {"check_kraus_sum", detail::optional_bool(tp.check_kraus_sum)},
                                 {"check_identity", tp.check_identity},
                                 {"partial_trace", tp.partial_trace},
                                 {"choi_indices", tp.choi_indices},
                                 {"agree", tp.agree()}};
  report["unital"] = v.unital;
  report["bistochastic"] = v.bistochastic;
  report["factorizable"] = v.factorizable;
  if (v.completely_positive) {
    const Factorizability f = factorizability(c, opt.tol);
    report["factorizability_value"] = f.superop_value.real();
    report["factorizability_normalized"] = f.normalized;
  } else {
    report["factorizability_value"] = nullptr;
    report["factorizability_normalized"] = nullptr;
  }
  report["higher_rank"] = v.higher_rank;
  report["extremal_tp"] = detail::optional_bool(v.extremal_tp);
  report["isometric"] = v.isometric;
  if (v.hermitian_preserving) {
    const PositivityVerdict p = check_positive_preserving(c, opt.samples, opt.seed, opt.tol);
    Json witness = nullptr;
    if (p.witness)
      witness = Json{{"psi", io::matrix_to_json(p.witness->first)},
                     {"phi", io::matrix_to_json(p.witness->second)}};
    report["positivity"] = Json{
        {"outcome", p.outcome == PositivityOutcome::NotPositive ? "NotPositive" : "NoViolationFound"},
        {"samples_used", p.samples_used},
        {"witness", std::move(witness)}};
  } else {
    report["positivity"] = nullptr;
  }
  report["settings"] = Json{{"tol_abs", opt.tol.abs},
                            {"tol_rel", opt.tol.rel},
                            {"seed", opt.seed},
                            {"samples", opt.samples}};
  return report;
}

inline Json cmd_classify(const Json& channel_file, const Options& opt) {
  return classify_report(io::channel_from_json(channel_file).channel, opt);
}

inline Json cmd_convert(const Json& channel_file, io::Representation to, const Options& opt) {
  return io::channel_to_json(io::channel_from_json(channel_file).channel, to, opt.tol);
}

enum class Method { Schmidt, Qr, Schur };

inline Method parse_method(const std::string& s) {
  if (s == "schmidt") return Method::Schmidt;
  if (s == "qr") return Method::Qr;
  if (s == "schur") return Method::Schur;
  fail(ErrorKind::Parse, "unknown method \"" + s + "\" (expected schmidt, qr or schur)");
}

inline Json cmd_decompose(const Json& vector_file, Method method, const std::vector<std::size_t>& cut,
                          const Options& opt) {
  const Matrix data = io::matrix_from_json(vector_file);
  require(data.cols() == 1, ErrorKind::DimensionMismatch, "decompose expects a column vector (cols = 1)");
  const BipartiteShape shape = detail::cut_shape(cut, data.rows(), "decompose");
  const BipartiteVector v(shape, data);
  Json report{{"m", shape.m}, {"n", shape.n}};
  switch (method) {
    case Method::Schmidt: {
      const SchmidtForm f = schmidt(v, opt.tol);
      report["method"] = "schmidt";
      report["rank"] = f.rank();
      report["coefficients"] = f.coefficients;
      report["left_basis"] = io::matrix_to_json(f.left_basis);
      report["right_basis"] = io::matrix_to_json(f.right_basis);
      break;
    }
    case Method::Qr: {
      const TriangularForm f = one_sided_triangular(v, opt.tol);
      report["method"] = "qr";
      report["basis_left"] = io::matrix_to_json(f.basis_left);
      report["coefficients"] = io::matrix_to_json(f.coefficients);
      break;
    }
    case Method::Schur: {
      const TriangularForm f = two_sided_triangular(v, opt.tol);
      report["method"] = "schur";
      report["basis_left"] = io::matrix_to_json(f.basis_left);
      report["basis_right"] = io::matrix_to_json(*f.basis_right);
      report["coefficients"] = io::matrix_to_json(f.coefficients);
      break;
    }
  }
  return report;
}

/// outer o inner, written as a Choi-form channel file.
inline Json cmd_compose(const Json& outer_file, const Json& inner_file, const Options& opt) {
  const Channel outer = io::channel_from_json(outer_file).channel;
  const Channel inner = io::channel_from_json(inner_file).channel;
  return io::channel_to_json(compose(outer, inner), io::Representation::Choi, opt.tol);
}

inline Json cmd_diamond(const Json& a_file, const Json& b_file, const Options&) {
  const StateSquare a = detail::load_state_square(a_file);
  const StateSquare b = detail::load_state_square(b_file);
  return io::matrix_to_json(diamond(a, b).mat());
}

inline Json cmd_apply(const Json& channel_file, const Json& state_file, const Options&) {
  const Channel c = io::channel_from_json(channel_file).channel;
  return io::matrix_to_json(apply(c, io::matrix_from_json(state_file)));
}

inline Json cmd_ppt(const Json& state_file, const std::vector<std::size_t>& cut, const Options& opt) {
  const Matrix a = io::matrix_from_json(state_file);
  require(a.is_square(), ErrorKind::DimensionMismatch, "ppt expects a square matrix");
  const BipartiteShape shape = detail::cut_shape(cut, a.rows(), "ppt");
  const PptResult r = ppt_test(BipartiteOperator(shape, a), opt.tol);
  return Json{{"is_ppt", r.is_ppt},
              {"min_eigenvalue", r.min_eigenvalue},
              {"side", to_string(r.side)},
              {"min_eigenvalue_first", r.min_eigenvalue_first},
              {"min_eigenvalue_second", r.min_eigenvalue_second}};
}

inline Json cmd_measure(const Json& state_file, const std::vector<std::size_t>& cut, const Json& m_op_file,
                        const Options&) {
  const Matrix a = io::matrix_from_json(state_file);
  require(a.is_square(), ErrorKind::DimensionMismatch, "measure expects a square state matrix");
  const BipartiteShape shape = detail::cut_shape(cut, a.rows(), "measure");
  return io::matrix_to_json(state_as_measurement(BipartiteOperator(shape, a), io::matrix_from_json(m_op_file)));
}

/// Parses arguments, runs one subcommand, writes the result to the -o file
/// or `out`, and diagnostics to `err`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conversions, predicates and decompositions for linear maps on matrices", "choi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  double tol_abs = opt.tol.abs, tol_rel = opt.tol.rel;
  std::string out_path;
  app.add_option("--tol-abs", tol_abs, "absolute tolerance")->capture_default_str();
  app.add_option("--tol-rel", tol_rel, "relative tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for the positivity falsifier")->capture_default_str();
  app.add_option("--samples", opt.samples, "positivity falsifier sample count")->capture_default_str();
  app.add_option("-o,--out", out_path, "output file (default stdout)");

  std::string path_a, path_b, to_name, method_name = "schmidt", m_op_path;
  std::vector<std::size_t> cut;

  auto* classify_cmd = app.add_subcommand("classify", "report every predicate of a channel");
  classify_cmd->add_option("channel", path_a, "channel file")->required();

  auto* convert_cmd = app.add_subcommand("convert", "rewrite a channel in another representation");
  convert_cmd->add_option("channel", path_a, "channel file")->required();
  convert_cmd->add_option("--to", to_name, "choi, superop or kraus")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Schmidt or triangular decomposition of a vector");
  decompose_cmd->add_option("vector", path_a, "vector file (cols = 1)")->required();
  decompose_cmd->add_option("--method", method_name, "schmidt, qr or schur")->capture_default_str();
  decompose_cmd->add_option("--cut", cut, "factor dimensions m n")->expected(2);

  auto* compose_cmd = app.add_subcommand("compose", "composition OUTER o INNER");
  compose_cmd->add_option("outer", path_a, "channel applied second")->required();
  compose_cmd->add_option("inner", path_b, "channel applied first")->required();

  auto* diamond_cmd = app.add_subcommand("diamond", "diamond product of two states on C^n (x) C^n");
  diamond_cmd->add_option("a", path_a, "state or channel file")->required();
  diamond_cmd->add_option("b", path_b, "state or channel file")->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply a channel to a matrix");
  apply_cmd->add_option("channel", path_a, "channel file")->required();
  apply_cmd->add_option("state", path_b, "n x n matrix file")->required();

  auto* ppt_cmd = app.add_subcommand("ppt", "positive partial transpose test");
  ppt_cmd->add_option("state", path_a, "state file")->required();
  ppt_cmd->add_option("--cut", cut, "factor dimensions m n")->expected(2);

  auto* measure_cmd = app.add_subcommand("measure", "post-measurement state on the first factor");
  measure_cmd->add_option("state", path_a, "state file")->required();
  measure_cmd->add_option("--cut", cut, "factor dimensions m n")->expected(2);
  measure_cmd->add_option("--m-op", m_op_path, "n x n measurement operator file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    opt.tol = Tolerance(tol_abs, tol_rel);
    Json result;
    if (*classify_cmd) {
      result = cmd_classify(io::read_file(path_a), opt);
    } else if (*convert_cmd) {
      result = cmd_convert(io::read_file(path_a), io::parse_representation(to_name), opt);
    } else if (*decompose_cmd) {
      result = cmd_decompose(io::read_file(path_a), parse_method(method_name), cut, opt);
    } else if (*compose_cmd) {
      result = cmd_compose(io::read_file(path_a), io::read_file(path_b), opt);
    } else if (*diamond_cmd) {
      result = cmd_diamond(io::read_file(path_a), io::read_file(path_b), opt);
    } else if (*apply_cmd) {
      result = cmd_apply(io::read_file(path_a), io::read_file(path_b), opt);
    } else if (*ppt_cmd) {
      result = cmd_ppt(io::read_file(path_a), cut, opt);
    } else if (*measure_cmd) {
      result = cmd_measure(io::read_file(path_a), cut, io::read_file(m_op_path), opt);
    }
    const std::string text = io::render(result);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path);
      if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + out_path);
      file << text;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace choi::cli

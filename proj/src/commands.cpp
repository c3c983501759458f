#include "gqd/commands.hpp"

#include "gqd/state_io.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gqd {

namespace {

using nlohmann::json;

json measurement_json(const LocalMeasurement& m) {
  json dirs = json::array();
  for (const auto& d : m.directions) dirs.push_back({d.x(), d.y(), d.z()});
  return dirs;
}

int parse_n_token(const std::string& token) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw InvalidInput("n list entry '" + token + "' is neither an integer nor 'inf'");
  }
  if (used != token.size()) throw InvalidInput("n list entry '" + token + "' is neither an integer nor 'inf'");
  if (n < 2) throw InvalidInput("n list entry " + token + " must be at least 2");
  return n;
}

bool write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

int cmd_compute(const ComputeRequest& request, std::ostream& out, std::ostream& err) {
  if (request.method != "auto" && request.method != "numeric" && request.method != "closed") {
    err << "error: unknown method '" << request.method << "' (expected auto, numeric or closed)\n";
    return exit_code::invalid_input;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const StateDocument doc = load_state_document(request.input);
    const bool dense = std::holds_alternative<DensityMatrix>(doc);
    if (request.method == "closed" && dense) {
      err << "error: no closed form for a dense state document; use --method numeric\n";
      return exit_code::invalid_input;
    }
    const int n = document_qubits(doc);

    GqdResult result;
    if (request.method == "numeric" || dense) {
      if (n > request.optimizer.dense_limit) {
        throw SizeLimitExceeded("numeric evaluation of " + std::to_string(n) + " qubits exceeds the dense limit of " +
                                std::to_string(request.optimizer.dense_limit));
      }
      result = gqd_numeric(materialize(doc), request.optimizer);
    } else if (const auto* w = std::get_if<WernerGhzParams>(&doc)) {
      result.value = gqd_werner_ghz(*w);
      result.method = Method::werner_ghz;
      result.diagnostics.raw_value = result.value;
    } else {
      const auto& p = std::get<PauliDiagonalParams>(doc);
      result.value = gqd_pauli_diagonal(p);
      result.method = Method::pauli_diagonal;
      result.diagnostics.raw_value = result.value;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json rec;
    rec["kind"] = std::string(document_kind(doc));
    rec["n"] = n;
    rec["value"] = result.value;
    rec["method"] = std::string(to_string(result.method));
    rec["optimal_measurement"] =
        result.optimal_measurement ? measurement_json(*result.optimal_measurement) : json(nullptr);
    rec["seed"] = request.optimizer.seed;
    rec["wall_time_s"] = wall;
    rec["diagnostics"] = {{"starts", result.diagnostics.starts},
                          {"iterations", result.diagnostics.iterations},
                          {"best_objective_history_length", result.diagnostics.best_objective_history_length},
                          {"raw_value", result.diagnostics.raw_value},
                          {"converged", result.diagnostics.converged}};
    out << rec.dump() << "\n";
    return exit_code::ok;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::resource_limit;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
}

std::string figure1_csv(const std::vector<std::string>& n_list, int mu_steps) {
  if (mu_steps < 2) throw InvalidInput("mu steps must be at least 2");
  if (n_list.empty()) throw InvalidInput("n list is empty");
  std::vector<int> ns;
  for (const auto& token : n_list) ns.push_back(token == "inf" ? 0 : parse_n_token(token));

  std::string csv = "mu,n,gqd_bits\n";
  for (std::size_t k = 0; k < ns.size(); ++k) {
    for (int i = 0; i < mu_steps; ++i) {
      const double mu = static_cast<double>(i) / (mu_steps - 1);
      const double d = ns[k] == 0 ? gqd_werner_ghz_asymptotic(mu) : gqd_werner_ghz({ns[k], mu});
      csv += csv_number(mu);
      csv += ',';
      csv += ns[k] == 0 ? std::string("inf") : std::to_string(ns[k]);
      csv += ',';
      csv += csv_number(d);
      csv += '\n';
    }
  }
  return csv;
}

int cmd_figure1(const Figure1Request& request, std::ostream& out, std::ostream& err) {
  std::string csv;
  try {
    csv = figure1_csv(request.n_list, request.mu_steps);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
  return write_output(request.output, csv, out, err) ? exit_code::ok : exit_code::invalid_input;
}

std::string scan_csv(const Scan& scan) {
  std::string csv = "p,c1_p,c2_p,c3_p,gqd_bits,active_branch\n";
  for (const auto& r : scan.records) {
    csv += csv_number(r.p) + ',' + csv_number(r.c1_p) + ',' + csv_number(r.c2_p) + ',' + csv_number(r.c3_p) + ',' +
           csv_number(r.gqd) + ',' + std::string(to_string(r.active_branch)) + '\n';
  }
  return csv;
}

std::string scan_report_text(const PauliDiagonalParams& params, const Scan& scan) {
  std::ostringstream os;
  os << "# dephasing scan n=" << params.n << " c=(" << csv_number(params.c1) << ", " << csv_number(params.c2) << ", "
     << csv_number(params.c3) << ")\n";
  if (scan.report.predicted_transition) {
    os << "predicted transition p* = " << csv_number(*scan.report.predicted_transition) << "\n";
  } else {
    os << "predicted transition: none (no sudden transition)\n";
  }
  os << "kinks: " << scan.report.kinks.size() << "\n";
  for (const auto& k : scan.report.kinks) {
    os << "  p = " << csv_number(k.p) << " (index " << k.index << ")";
    if (k.branch_change) os << " branch change";
    if (k.curvature_spike) os << " curvature spike";
    os << "\n";
  }
  os << "plateaus: " << scan.report.plateaus.size() << "\n";
  for (const auto& pl : scan.report.plateaus) {
    os << "  p in [" << csv_number(pl.p_begin) << ", " << csv_number(pl.p_end) << "] value " << csv_number(pl.value)
       << " bits (" << (pl.last - pl.first + 1) << " points)\n";
  }
  return os.str();
}

int cmd_dephase_scan(const DephaseScanRequest& request, std::ostream& out, std::ostream& err) {
  Scan scan;
  try {
    const auto v = validate_pauli_params(request.params);
    if (!v.ok) throw InvalidInput("invalid Pauli-diagonal coefficients: " + v.message());
    if (request.p_steps < 2) throw InvalidInput("p steps must be at least 2");
    const auto grid = uniform_grid(request.p_steps);
    scan = scan_gqd_vs_p(request.params, grid, request.scan);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
  if (!write_output(request.output, scan_csv(scan), out, err)) return exit_code::invalid_input;
  out << scan_report_text(request.params, scan);
  return exit_code::ok;
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  try {
    options.scope = parse_verify_scope(request.scope);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
  if (request.trials < 1) {
    err << "error: trials must be positive\n";
    return exit_code::invalid_input;
  }
  options.seed = request.seed;
  options.trials = request.trials;
  options.optimizer = request.optimizer;
  options.optimizer.seed = request.seed;

  const auto results = run_verification(options);
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-26s worst %.3e  tol %.1e  margin %+.3e  trials %d", r.passed ? "ok" : "FAIL",
                  r.name.c_str(), r.worst, r.tolerance, r.tolerance - r.worst, r.trials);
    out << line;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    err << "verification failed: " << first_failure->name << "\n";
    return exit_code::verification_failed;
  }
  out << results.size() << " checks passed\n";
  return exit_code::ok;
}

}  // namespace gqd

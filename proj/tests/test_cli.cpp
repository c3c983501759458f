#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gqd/commands.hpp"
#include "gqd/random_states.hpp"
#include "gqd/state_io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gqd;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gqd_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("state documents parse and validate") {
  const auto w = parse_state_document(R"({"kind": "werner_ghz", "n": 3, "mu": 0.5})");
  CHECK(document_kind(w) == "werner_ghz");
  CHECK(document_qubits(w) == 3);

  const auto p = parse_state_document(R"({"kind": "pauli_diagonal", "n": 2, "c1": 0.5, "c2": 0.1, "c3": 0.2})");
  CHECK(std::get<PauliDiagonalParams>(p).c2 == 0.1);

  CHECK_THROWS_AS(parse_state_document("{"), InvalidInput);
  CHECK_THROWS_AS(parse_state_document(R"({"kind": "other"})"), InvalidInput);
  CHECK_THROWS_AS(parse_state_document(R"({"kind": "werner_ghz", "n": 3})"), InvalidInput);
  CHECK_THROWS_AS(parse_state_document(R"({"kind": "werner_ghz", "n": 3, "mu": 2})"), InvalidInput);
  try {
    parse_state_document(R"({"kind": "pauli_diagonal", "n": 2, "c1": 0.8, "c2": 0.2, "c3": 0.3})");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("λ₄") != std::string::npos);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  // Dense: trace 1.2 is rejected.
  CHECK_THROWS_AS(parse_state_document(R"({"kind": "dense", "n": 1, "matrix": [[[0.6,0],[0,0]],[[0,0],[0.6,0]]]})"),
                  InvalidInput);
  // Wrong shape.
  CHECK_THROWS_AS(parse_state_document(R"({"kind": "dense", "n": 2, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})"),
                  InvalidInput);
}

TEST_CASE("dense round trip within 1e-12") {
  Rng rng(151);
  for (const DensityMatrix& rho : {werner_ghz_state({3, 0.37}), pauli_diagonal_state({2, 0.5, 0.1, 0.2}),
                                   random_density_matrix(3, rng)}) {
    const fs::path path = scratch("round_trip.json");
    save_state_document(path, StateDocument{rho});
    const auto back = load_state_document(path);
    CHECK(max_abs(std::get<DensityMatrix>(back).matrix() - rho.matrix()) <= 1e-12);
    // Serialising again is byte-identical.
    CHECK(to_json(back) == to_json(StateDocument{rho}));
  }
  const StateDocument w = WernerGhzParams{5, 0.25};
  const auto wb = parse_state_document(to_json(w));
  CHECK(std::get<WernerGhzParams>(wb).mu == 0.25);
}

TEST_CASE("compute: closed forms, numeric, errors") {
  std::ostringstream out, err;
  ComputeRequest req;
  req.input = write_file("w5.json", R"({"kind": "werner_ghz", "n": 5, "mu": 0.5})").string();
  REQUIRE(cmd_compute(req, out, err) == exit_code::ok);
  auto rec = nlohmann::json::parse(out.str());
  CHECK(rec["method"] == "werner_ghz");
  CHECK(std::abs(rec["value"].get<double>() - gqd_werner_ghz({5, 0.5})) < 1e-15);
  CHECK(rec["optimal_measurement"].is_null());
  CHECK(rec["seed"] == 0);
  CHECK(rec.contains("wall_time_s"));
  CHECK(lines(out.str()).size() == 1);

  out.str("");
  req.input = write_file("bell.json",
                         R"({"kind": "dense", "n": 2, "matrix": [[[0.5,0],[0,0],[0,0],[0.5,0]],
                             [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]], [[0.5,0],[0,0],[0,0],[0.5,0]]]})")
                  .string();
  REQUIRE(cmd_compute(req, out, err) == exit_code::ok);
  rec = nlohmann::json::parse(out.str());
  CHECK(rec["method"] == "numeric");
  CHECK(std::abs(rec["value"].get<double>() - 1.0) < 1e-5);
  CHECK(rec["optimal_measurement"].size() == 2);

  err.str("");
  req.method = "closed";
  CHECK(cmd_compute(req, out, err) == exit_code::invalid_input);

  req.method = "auto";
  req.input = write_file("bad.json", R"({"kind": "pauli_diagonal", "n": 2, "c1": 0.8, "c2": 0.2, "c3": 0.3})").string();
  err.str("");
  CHECK(cmd_compute(req, out, err) == exit_code::invalid_input);
  CHECK(err.str().find("λ₄") != std::string::npos);

  req.input = write_file("w13.json", R"({"kind": "werner_ghz", "n": 13, "mu": 0.5})").string();
  req.method = "numeric";
  CHECK(cmd_compute(req, out, err) == exit_code::resource_limit);

  req.input = scratch("missing.json").string();
  CHECK(cmd_compute(req, out, err) == exit_code::invalid_input);

  // Pauli numeric agrees with closed form.
  out.str("");
  req.input = write_file("p2.json", R"({"kind": "pauli_diagonal", "n": 2, "c1": 0.5, "c2": 0.1, "c3": 0.2})").string();
  REQUIRE(cmd_compute(req, out, err) == exit_code::ok);
  rec = nlohmann::json::parse(out.str());
  CHECK(std::abs(rec["value"].get<double>() - gqd_pauli_diagonal({2, 0.5, 0.1, 0.2})) < 1e-4);
}

TEST_CASE("figure1 CSV") {
  const std::string csv = figure1_csv({"2", "3", "5", "inf"}, 101);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 405);
  CHECK(rows[0] == "mu,n,gqd_bits");
  CHECK(rows[1] == "0,2,0");
  CHECK(rows[101] == "1,2,1");
  CHECK(rows[404] == "1,inf,1");
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(csv == figure1_csv({"2", "3", "5", "inf"}, 101));

  CHECK_THROWS_AS(figure1_csv({"1"}, 11), InvalidInput);
  CHECK_THROWS_AS(figure1_csv({"two"}, 11), InvalidInput);
  CHECK_THROWS_AS(figure1_csv({"2"}, 1), InvalidInput);

  std::ostringstream out, err;
  Figure1Request req;
  req.output = scratch("fig1.csv").string();
  REQUIRE(cmd_figure1(req, out, err) == exit_code::ok);
  std::ifstream f(req.output, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == csv);

  req.output = "/nonexistent-dir/x.csv";
  CHECK(cmd_figure1(req, out, err) != exit_code::ok);
}

TEST_CASE("csv number format") {
  CHECK(csv_number(0.1) == "0.1");
  CHECK(csv_number(1.0 / 3.0) == "0.333333333333");
  CHECK(csv_number(-0.0) == "0");
  CHECK(csv_number(1e-20) == "1e-20");
}

TEST_CASE("dephase-scan output") {
  std::ostringstream out, err;
  DephaseScanRequest req;
  req.params = {2, 0.5, 0.1, 0.2};
  REQUIRE(cmd_dephase_scan(req, out, err) == exit_code::ok);
  const auto rows = lines(out.str());
  CHECK(rows[0] == "p,c1_p,c2_p,c3_p,gqd_bits,active_branch");
  CHECK(rows[1].rfind("0,0.5,0.1,0.2,", 0) == 0);
  CHECK(out.str().find("predicted transition p* = 0.6") != std::string::npos);
  CHECK(out.str().find("kinks: 1") != std::string::npos);

  std::ostringstream again;
  cmd_dephase_scan(req, again, err);
  CHECK(again.str() == out.str());

  std::ostringstream freeze;
  req.params = {2, 1, -0.6, 0.6};
  REQUIRE(cmd_dephase_scan(req, freeze, err) == exit_code::ok);
  CHECK(freeze.str().find("value 0.278071905113") != std::string::npos);

  std::ostringstream none;
  req.params = {2, 0.4, 0.2, 0.0};
  REQUIRE(cmd_dephase_scan(req, none, err) == exit_code::ok);
  CHECK(none.str().find("no sudden transition") != std::string::npos);

  req.params = {2, 0.8, 0.2, 0.3};
  CHECK(cmd_dephase_scan(req, none, err) == exit_code::invalid_input);
  req.params = {2, 0.5, 0.1, 0.2};
  req.p_steps = 1;
  CHECK(cmd_dephase_scan(req, none, err) == exit_code::invalid_input);
}

TEST_CASE("verify: lemmas pass and output is deterministic") {
  std::ostringstream a, b, err;
  VerifyRequest req;
  req.scope = "lemmas";
  REQUIRE(cmd_verify(req, a, err) == exit_code::ok);
  REQUIRE(cmd_verify(req, b, err) == exit_code::ok);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("margin") != std::string::npos);
  req.scope = "everything";
  CHECK(cmd_verify(req, a, err) == exit_code::invalid_input);
}

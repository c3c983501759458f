#include "gqd/state_io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gqd {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw InvalidInput(std::string("state document is missing \"") + name + "\"");
  return doc.at(name);
}

double number(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number()) throw InvalidInput(std::string("\"") + name + "\" must be a number");
  return v.get<double>();
}

int integer(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw InvalidInput(std::string("\"") + name + "\" must be an integer");
  return v.get<int>();
}

DensityMatrix parse_dense(const json& doc) {
  const int n = integer(doc, "n");
  if (n < 1 || n > 16) throw InvalidInput("dense document n = " + std::to_string(n) + " is outside [1, 16]");
  const Eigen::Index d = Eigen::Index{1} << n;
  const json& rows = field(doc, "matrix");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
    throw InvalidInput("\"matrix\" must have 2^n = " + std::to_string(d) + " rows");
  }
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw InvalidInput("matrix row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      const json& e = row[static_cast<std::size_t>(j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw InvalidInput("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be [re, im]");
      }
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return DensityMatrix(std::move(m));
}

}  // namespace

StateDocument parse_state_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("state document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("state document must be a JSON object");
  const json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) throw InvalidInput("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "dense") return parse_dense(doc);
  if (kind == "werner_ghz") {
    WernerGhzParams p{integer(doc, "n"), number(doc, "mu")};
    p.validate();
    return p;
  }
  if (kind == "pauli_diagonal") {
    PauliDiagonalParams p{integer(doc, "n"), number(doc, "c1"), number(doc, "c2"), number(doc, "c3")};
    const auto v = validate_pauli_params(p);
    if (!v.ok) throw InvalidInput(v.message());
    return p;
  }
  throw InvalidInput("unknown state document kind \"" + kind + "\"");
}

StateDocument load_state_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read state document " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_document(buf.str());
}

std::string to_json(const StateDocument& doc) {
  std::ostringstream os;
  if (const auto* rho = std::get_if<DensityMatrix>(&doc)) {
    os << "{\"kind\": \"dense\", \"n\": " << rho->n_qubits() << ", \"matrix\": [";
    for (Eigen::Index i = 0; i < rho->dim(); ++i) {
      os << (i ? ",\n  [" : "\n  [");
      for (Eigen::Index j = 0; j < rho->dim(); ++j) {
        const Complex z = (*rho)(i, j);
        os << (j ? ", " : "") << '[' << num(z.real()) << ", " << num(z.imag()) << ']';
      }
      os << ']';
    }
    os << "\n]}\n";
  } else if (const auto* w = std::get_if<WernerGhzParams>(&doc)) {
    os << "{\"kind\": \"werner_ghz\", \"n\": " << w->n << ", \"mu\": " << num(w->mu) << "}\n";
  } else {
    const auto& p = std::get<PauliDiagonalParams>(doc);
    os << "{\"kind\": \"pauli_diagonal\", \"n\": " << p.n << ", \"c1\": " << num(p.c1) << ", \"c2\": " << num(p.c2)
       << ", \"c3\": " << num(p.c3) << "}\n";
  }
  return os.str();
}

void save_state_document(const std::filesystem::path& path, const StateDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(doc);
}

int document_qubits(const StateDocument& doc) {
  return std::visit(
      [](const auto& d) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, DensityMatrix>) {
          return d.n_qubits();
        } else {
          return d.n;
        }
      },
      doc);
}

std::string_view document_kind(const StateDocument& doc) {
  switch (doc.index()) {
    case 0: return "dense";
    case 1: return "werner_ghz";
    default: return "pauli_diagonal";
  }
}

DensityMatrix materialize(const StateDocument& doc) {
  if (const auto* rho = std::get_if<DensityMatrix>(&doc)) return *rho;
  if (const auto* w = std::get_if<WernerGhzParams>(&doc)) return werner_ghz_state(*w);
  return pauli_diagonal_state(std::get<PauliDiagonalParams>(doc));
}

}  // namespace gqd

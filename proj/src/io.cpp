#include "mub/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mub {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::ParseError, path + ": " + reason);
}

const json& member(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_fail(std::string("/") + key, "missing");
  return doc.at(key);
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) parse_fail(path, "expected a number");
  return v.get<double>();
}

json verify_to_json(const VerifyReport& r) {
  return json{{"pass", r.pass},
              {"max_unbiased_dev", r.max_unbiased_dev},
              {"max_unitarity_dev", r.max_unitarity_dev},
              {"pair_count", r.pair_count},
              {"basis_count", r.basis_count},
              {"within_count_bound", r.within_count_bound},
              {"worst_pair", {r.worst_pair.first, r.worst_pair.second}}};
}

json basis_to_json(const Basis& b) {
  json rows = json::array();
  for (std::size_t r = 0; r < b.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < b.dim(); ++c)
      row.push_back({b.matrix()(r, c).real(), b.matrix()(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string serialize(const CollectionFile& file) {
  const auto& c = file.collection;
  json bases = json::array();
  for (const auto& b : c.bases) bases.push_back(basis_to_json(b));
  json doc{{"format_version", kFormatVersion},
           {"d", c.dim},
           {"tol", c.tol},
           {"provenance", file.provenance},
           {"bases", std::move(bases)}};
  return doc.dump() + "\n";
}

CollectionFile parse_collection(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail("/", e.what());
  }
  if (!doc.is_object()) parse_fail("/", "expected an object");

  const json& version = member(doc, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    parse_fail("/format_version", "unsupported version");
  const json& dj = member(doc, "d");
  if (!dj.is_number_unsigned() || dj.get<long long>() < 1) parse_fail("/d", "expected a positive integer");
  const std::size_t d = dj.get<std::size_t>();
  if (d > 64) parse_fail("/d", "dimension above 64");
  const double tol = number_at(member(doc, "tol"), "/tol");
  if (!(tol > 0.0)) parse_fail("/tol", "must be positive");

  CollectionFile out;
  out.collection.dim = d;
  out.collection.tol = tol;
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) parse_fail("/provenance", "expected a string");
    out.provenance = doc["provenance"].get<std::string>();
  }

  const json& bases = member(doc, "bases");
  if (!bases.is_array()) parse_fail("/bases", "expected an array");
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const std::string bpath = "/bases/" + std::to_string(k);
    const json& rows = bases[k];
    if (!rows.is_array() || rows.size() != d) parse_fail(bpath, "expected " + std::to_string(d) + " rows");
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
      const std::string rpath = bpath + "/" + std::to_string(r);
      if (!rows[r].is_array() || rows[r].size() != d)
        parse_fail(rpath, "expected " + std::to_string(d) + " entries");
      for (std::size_t c = 0; c < d; ++c) {
        const std::string epath = rpath + "/" + std::to_string(c);
        const json& z = rows[r][c];
        if (!z.is_array() || z.size() != 2) parse_fail(epath, "expected [re, im]");
        m(r, c) = {number_at(z[0], epath + "/0"), number_at(z[1], epath + "/1")};
      }
    }
    Basis b(std::move(m));
    const double dev = b.unitarity_deviation();
    if (!(dev <= tol))
      throw Error(ErrorCode::ValidationError,
                  "basis " + std::to_string(k) + " is not unitary (deviation " + std::to_string(dev) +
                      " > tol " + std::to_string(tol) + ")");
    out.collection.bases.push_back(std::move(b));
  }
  return out;
}

CollectionFile read_collection(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_collection(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("error writing " + path);
}

std::string verify_report_json(const VerifyReport& r, int indent) {
  return verify_to_json(r).dump(indent) + "\n";
}

std::string completion_report_json(const CompletionReport& r, int indent) {
  json doc{{"status", std::string(to_string(r.status))},
           {"message", r.message},
           {"input_ok", r.input_ok},
           {"vperp_dim", r.vperp_dim}};
  if (r.masa_report) {
    const auto& m = *r.masa_report;
    json mj{{"passed", m.passed},
            {"failed_at", std::string(to_string(m.failed_at))},
            {"dimension", m.dimension},
            {"unit_residual", m.unit_residual},
            {"adjoint_residual", m.adjoint_residual},
            {"max_commutator", m.max_commutator}};
    if (m.subalgebra) {
      const auto& s = *m.subalgebra;
      json pj{{"psd", s.positivity.psd},
              {"threshold", s.positivity.threshold},
              {"choi_norm", s.positivity.choi_norm}};
      pj["min_eigenvalue"] = s.positivity.min_eigenvalue ? json(*s.positivity.min_eigenvalue) : json();
      mj["subalgebra"] = json{{"verdict", std::string(to_string(s.verdict))},
                              {"two_positivity", std::move(pj)},
                              {"closed", s.closed},
                              {"closure_residual", s.closure_residual},
                              {"schwarz_holds", s.schwarz_holds},
                              {"schwarz_min_eigenvalue", s.schwarz_min_eigenvalue},
                              {"multiplicative_defect", s.multiplicative_defect}};
    }
    doc["masa_report"] = std::move(mj);
  } else {
    doc["masa_report"] = nullptr;
  }
  doc["missing_basis"] = r.missing_basis ? basis_to_json(*r.missing_basis) : json();
  doc["final_verify"] = r.final_verify ? verify_to_json(*r.final_verify) : json();
  json res = json::object();
  for (const auto& [k, v] : r.residuals) res[k] = v;
  doc["residuals"] = std::move(res);
  return doc.dump(indent) + "\n";
}

}  // namespace mub

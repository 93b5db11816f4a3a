#include "tailspace/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tailspace {

Json function_to_json(const CubeFunction& f, Json meta) {
  Json j;
  j["n"] = f.dimension();
  j["kind"] = to_string(f.kind());
  j["convention"] = kPointConvention;
  j["values"] = std::vector<double>(f.values().data(),
                                    f.values().data() + f.values().size());
  j["meta"] = std::move(meta);
  return j;
}

CubeFunction function_from_json(const Json& j) {
  require(j.contains("n") && j.contains("kind") && j.contains("values"),
          "bad-file", "function file needs n, kind, values");
  const int n = j.at("n").get<int>();
  const ValueKind kind = value_kind_from_string(j.at("kind").get<std::string>());
  const auto vec = j.at("values").get<std::vector<double>>();
  Eigen::VectorXd values(static_cast<Index>(vec.size()));
  for (std::size_t i = 0; i < vec.size(); ++i) {
    values(static_cast<Index>(i)) = vec[i];
  }
  return CubeFunction(n, std::move(values), kind);
}

Json generator_to_json(const MarkovGenerator& gen) {
  Json j;
  const Index n = gen.size();
  j["mu"] = std::vector<double>(gen.space().mu.data(), gen.space().mu.data() + n);
  j["labels"] = std::vector<double>(gen.space().positions.data(),
                                    gen.space().positions.data() + n);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = gen.matrix()(i, k);
    }
  }
  j["matrix"] = std::move(rows);
  return j;
}

MarkovGenerator generator_from_json(const Json& j) {
  require(j.contains("mu") && j.contains("matrix"), "bad-file",
          "generator file needs mu, matrix");
  const auto mu_vec = j.at("mu").get<std::vector<double>>();
  const Index n = static_cast<Index>(mu_vec.size());
  Eigen::VectorXd mu(n), labels(n);
  for (Index i = 0; i < n; ++i) mu(i) = mu_vec[static_cast<std::size_t>(i)];
  if (j.contains("labels")) {
    const auto lv = j.at("labels").get<std::vector<double>>();
    require(static_cast<Index>(lv.size()) == n, "bad-file", "label size mismatch");
    for (Index i = 0; i < n; ++i) labels(i) = lv[static_cast<std::size_t>(i)];
  } else {
    for (Index i = 0; i < n; ++i) labels(i) = static_cast<double>(i);
  }
  const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
  require(static_cast<Index>(rows.size()) == n, "bad-file", "matrix shape mismatch");
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i) {
    require(static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) == n,
            "bad-file", "matrix shape mismatch");
    for (Index k = 0; k < n; ++k) {
      m(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
  }
  return MarkovGenerator(FiniteSpace(std::move(labels), std::move(mu)), std::move(m));
}

Json code_to_json(const LinearCode& c) {
  Json j;
  j["length"] = c.length();
  j["generators"] = c.row_strings();
  return j;
}

LinearCode code_from_json(const Json& j) {
  require(j.contains("length") && j.contains("generators"), "bad-file",
          "code file needs length, generators");
  const int length = j.at("length").get<int>();
  const auto rows = j.at("generators").get<std::vector<std::string>>();
  if (rows.empty()) return zero_code(length);
  LinearCode c = LinearCode::from_strings(rows);
  require(c.length() == length, "bad-file", "generator length mismatch");
  return c;
}

Json record_to_json(const ConstructionRecord& rec) {
  Json j;
  j["function"] = {{"n", rec.function.dimension()},
                   {"kind", to_string(rec.function.kind())}};
  j["parameters"] = rec.parameters;
  Json claims = Json::array();
  for (const Claim& c : rec.claims) {
    claims.push_back({{"claim", c.id},
                      {"relation", c.relation},
                      {"achieved", c.achieved.to_string()},
                      {"bound", c.bound.to_string()},
                      {"holds", c.holds}});
  }
  j["claims"] = std::move(claims);
  j["all_hold"] = rec.all_hold();
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json reports_to_json(const std::string& suite_id,
                     const std::vector<CheckReport>& reports) {
  Json j;
  j["suite"] = suite_id;
  std::size_t failures = 0;
  Json arr = Json::array();
  for (const CheckReport& r : reports) {
    if (!r.pass) ++failures;
    arr.push_back(report_to_json(r));
  }
  j["checks"] = reports.size();
  j["failures"] = failures;
  j["pass"] = (failures == 0);
  j["reports"] = std::move(arr);
  return j;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::set<std::string> keys;
  for (const CheckReport& r : reports) {
    for (const auto& [k, v] : r.params) keys.insert(k);
  }
  std::ostringstream out;
  out << "check_id";
  for (const std::string& k : keys) out << "," << k;
  out << ",lhs,rhs,slack,tol,pass,note\n";
  const auto num = [](double v) { return Json(v).dump(); };
  for (const CheckReport& r : reports) {
    out << r.check_id;
    for (const std::string& k : keys) {
      out << ",";
      const auto it = r.params.find(k);
      if (it != r.params.end()) out << num(it->second);
    }
    out << "," << num(r.lhs) << "," << num(r.rhs) << "," << num(r.slack) << ","
        << num(r.tol) << "," << (r.pass ? "1" : "0") << "," << r.note << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "io-error", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "io-error", "cannot write " + path);
  out << content;
  require(out.good(), "io-error", "write failed for " + path);
}

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace tailspace

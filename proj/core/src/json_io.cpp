#include "slicekit/json_io.hpp"

#include <limits>

namespace slicekit {

namespace {

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw invalid_input(path + ": not a decimal integer string: \"" + s +
                          "\"");
    }
  }
  throw invalid_input(path + ": expected an integer or decimal string");
}

i64 i64_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw invalid_input(path + ": expected an integer");
  }
  return j.get<i64>();
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw invalid_input(path + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json rep_to_json(const VirtualRep& rep) {
  json lambdas = json::array();
  for (const auto& [k, coeff] : rep.lambda_coeffs()) {
    lambdas.push_back({{"k", k}, {"coeff", coeff}});
  }
  return {{"m", rep.group().order()},
          {"trivial", rep.trivial_coeff()},
          {"sign", rep.sign_coeff()},
          {"lambda", lambdas}};
}

VirtualRep rep_from_json(const json& j) {
  const std::string path = "$";
  CyclicGroup group(i64_from_json(member(j, "m", path), path + ".m"));
  std::vector<RepTerm> terms;
  if (j.contains("trivial")) {
    terms.push_back(
        RepTerm::trivial(i64_from_json(j.at("trivial"), path + ".trivial")));
  }
  if (j.contains("sign")) {
    terms.push_back(
        RepTerm::sign(i64_from_json(j.at("sign"), path + ".sign")));
  }
  if (j.contains("lambda")) {
    const json& lambdas = j.at("lambda");
    if (!lambdas.is_array()) {
      throw invalid_input(path + ".lambda: expected an array");
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const std::string entry_path =
          path + ".lambda[" + std::to_string(i) + "]";
      const json& entry = lambdas[i];
      terms.push_back(RepTerm::lambda(
          i64_from_json(member(entry, "k", entry_path), entry_path + ".k"),
          i64_from_json(member(entry, "coeff", entry_path),
                        entry_path + ".coeff")));
    }
  }
  return canonicalize(group, terms);
}

json orbit_values_to_json(const OrbitFunction& f) {
  json values = json::array();
  const auto& divisors = f.group().divisors();
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    values.push_back({{"d", divisors[i]}, {"value", f.values()[i]}});
  }
  return values;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(int_to_json(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path) {
  if (!j.is_array()) throw invalid_input(path + ": expected an array");
  if (j.empty() && (rows == 0 || cols == 0)) return IntMatrix(rows, cols);
  if (j.size() != rows) {
    throw invalid_input(path + ": expected " + std::to_string(rows) +
                        " rows, got " + std::to_string(j.size()));
  }
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw invalid_input(row_path + ": expected " + std::to_string(cols) +
                          " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = int_from_json(
          row[c], row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

IntMatrix matrix_from_json_rows(const json& j, std::size_t rows,
                                const std::string& path) {
  if (!j.is_array()) throw invalid_input(path + ": expected an array");
  std::size_t cols = 0;
  if (!j.empty()) {
    if (!j[0].is_array()) {
      throw invalid_input(path + "[0]: expected an array");
    }
    cols = j[0].size();
  }
  return matrix_from_json(j, rows, cols, path);
}

json group_to_json(const FgAbGroup& g) {
  return {{"gens", g.generators()}, {"rels", matrix_to_json(g.relations())}};
}

FgAbGroup group_from_json(const json& j, const std::string& path) {
  i64 gens = i64_from_json(member(j, "gens", path), path + ".gens");
  if (gens < 0) throw invalid_input(path + ".gens: must be >= 0");
  IntMatrix rels = matrix_from_json_rows(member(j, "rels", path),
                                         static_cast<std::size_t>(gens),
                                         path + ".rels");
  return FgAbGroup(static_cast<std::size_t>(gens), std::move(rels));
}

json mackey_to_json(const CpMackey& m) {
  return {{"p", m.p()},
          {"bottom", group_to_json(m.bottom())},
          {"top", group_to_json(m.top())},
          {"res", matrix_to_json(m.res().matrix())},
          {"tr", matrix_to_json(m.tr().matrix())},
          {"gamma", matrix_to_json(m.gamma().matrix())}};
}

CpMackey mackey_from_json(const json& j) {
  const std::string path = "$";
  i64 p = i64_from_json(member(j, "p", path), path + ".p");
  FgAbGroup bottom = group_from_json(member(j, "bottom", path), path + ".bottom");
  FgAbGroup top = group_from_json(member(j, "top", path), path + ".top");
  IntMatrix gamma =
      matrix_from_json(member(j, "gamma", path), bottom.generators(),
                       bottom.generators(), path + ".gamma");
  IntMatrix res = matrix_from_json(member(j, "res", path), bottom.generators(),
                                   top.generators(), path + ".res");
  IntMatrix tr = matrix_from_json(member(j, "tr", path), top.generators(),
                                  bottom.generators(), path + ".tr");
  return CpMackey(p, std::move(bottom), std::move(top), std::move(gamma),
                  std::move(res), std::move(tr));
}

namespace {

json advisory_to_json(const std::vector<std::string>& advisories) {
  return json(advisories);
}

}  // namespace

json smash_verdict_to_json(const SmashVerdict& verdict) {
  json j = {{"verdict", to_string(verdict.kind)},
            {"advisory", advisory_to_json(verdict.advisories)}};
  j["witness_divisor"] = verdict.witness_divisor
                             ? json(*verdict.witness_divisor)
                             : json(nullptr);
  return j;
}

json sphere_verdict_to_json(const SphereVerdict& verdict) {
  json j = {{"member", verdict.member},
            {"advisory", advisory_to_json(verdict.advisories)}};
  j["witness_divisor"] = verdict.witness_divisor
                             ? json(*verdict.witness_divisor)
                             : json(nullptr);
  return j;
}

json partition_to_json(const ClassPartition& partition) {
  return {{"p", partition.p},
          {"k", partition.k},
          {"blocks", partition.blocks},
          {"representatives", partition.representatives},
          {"representative_blocks", partition.representative_blocks}};
}

json slice_description_to_json(const SliceDescription& desc) {
  return {{"n", desc.n},
          {"rho", desc.rho_mult},
          {"lambda", desc.lambda_mult},
          {"shift", desc.int_shift},
          {"functor", to_string(desc.functor)},
          {"degree", desc.degree_label}};
}

}  // namespace slicekit

#ifndef KANTOR_ALGEBRA_JSON_HPP
#define KANTOR_ALGEBRA_JSON_HPP

#include "kantor/algebra.hpp"
#include "kantor/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>

namespace kantor {

using Json = nlohmann::ordered_json;

/// An algebra read from JSON: scalar structure constants, or polynomial ones
/// in the seed coordinates u0..u{n-1}.
using AnyAlgebra = std::variant<Algebra<Scalar>, Algebra<Poly>>;

namespace detail {

inline std::string coefficient_text(const Scalar& c) { return c.str(); }
inline std::string coefficient_text(const Poly& c, std::size_t n) { return c.str(seed_variable_names(n)); }

inline std::string quoted(const std::string& s) { return Json(s).dump(); }

template <class R, class F>
std::string algebra_text(const Algebra<R>& a, F&& coeff) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << a.dim << ",\n  \"field\": ";
  if (a.field.is_rational())
    out << "{\"type\": \"rational\"}";
  else
    out << "{\"type\": \"prime\", \"p\": " << a.field.characteristic() << "}";
  out << ",\n  \"products\": {";
  bool first_product = true;
  for (const auto& [name, t] : a.products) {
    out << (first_product ? "\n" : ",\n") << "    " << quoted(name) << ": [";
    first_product = false;
    bool first = true;
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (const auto& [k, c] : t.cell(i, j)) {
          out << (first ? "\n" : ",\n") << "      [" << i << ", " << j << ", " << k << ", " << quoted(coeff(c)) << "]";
          first = false;
        }
    out << (first ? "]" : "\n    ]");
  }
  out << (first_product ? "}" : "\n  }");
  if (!a.labels.empty()) {
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < a.labels.size(); ++i) out << (i ? ", " : "") << quoted(a.labels[i]);
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace detail

/// Algebra JSON: one [i, j, k, "coefficient"] triple per nonzero structure
/// constant, products in name order.
inline std::string to_json_text(const Algebra<Scalar>& a) {
  return detail::algebra_text(a, [](const Scalar& c) { return detail::coefficient_text(c); });
}

inline std::string to_json_text(const Algebra<Poly>& a) {
  return detail::algebra_text(a, [&](const Poly& c) { return detail::coefficient_text(c, a.dim); });
}

inline std::string to_json_text(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return to_json_text(alg); }, a);
}

inline Field parse_field(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) throw InputError("field must be an object with a type");
  const std::string type = j["type"].get<std::string>();
  if (type == "rational") return Field::rational();
  if (type == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw InputError("prime field needs an unsigned \"p\"");
    return Field::prime(j["p"].get<std::uint64_t>());
  }
  throw InputError("unknown field type '" + type + "'");
}

inline AnyAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("algebra JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw InputError("algebra JSON needs an unsigned \"dim\"");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (n == 0 || n > 64) throw InputError("dimension must be between 1 and 64");
  Field field = j.contains("field") ? parse_field(j["field"]) : Field::rational();
  if (!j.contains("products") || !j["products"].is_object()) throw InputError("algebra JSON needs a \"products\" object");

  struct Raw {
    std::size_t i, j, k;
    std::string text;
  };
  std::map<std::string, std::vector<Raw>> raw;
  bool generic = false;
  for (const auto& [name, entries] : j["products"].items()) {
    if (name.empty()) throw InputError("empty product name");
    if (!entries.is_array()) throw InputError("product '" + name + "' must be a list of [i, j, k, coefficient]");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    auto& list = raw[name];
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 4) throw InputError("product '" + name + "': entries are [i, j, k, coefficient]");
      std::size_t idx[3];
      for (int t = 0; t < 3; ++t) {
        if (!e[t].is_number_unsigned()) throw InputError("product '" + name + "': indices must be unsigned integers");
        idx[t] = e[t].get<std::size_t>();
        if (idx[t] >= n) throw InputError("product '" + name + "': index " + std::to_string(idx[t]) + " out of range");
      }
      if (!seen.emplace(idx[0], idx[1], idx[2]).second)
        throw InputError("product '" + name + "': duplicate entry (" + std::to_string(idx[0]) + "," +
                         std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
      std::string text;
      if (e[3].is_string())
        text = e[3].get<std::string>();
      else if (e[3].is_number_integer())
        text = std::to_string(e[3].get<long long>());
      else
        throw InputError("product '" + name + "': coefficient must be a string or integer");
      if (!generic) {
        try {
          field.parse(text);
        } catch (const InputError&) {
          generic = true;
        }
      }
      list.push_back({idx[0], idx[1], idx[2], std::move(text)});
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n) throw InputError("labels must list one name per basis vector");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size()) throw InputError("duplicate basis labels");
  }
  auto build = [&](auto tag, auto&& parse) {
    using R = decltype(tag);
    Algebra<R> a(n, field);
    a.labels = labels;
    for (const auto& [name, list] : raw) {
      auto& t = a.add_product(name);
      for (const auto& r : list) t.set(r.i, r.j, r.k, parse(r.text));
    }
    return AnyAlgebra(std::move(a));
  };
  if (!generic) return build(Scalar{}, [&](const std::string& s) { return field.parse(s); });
  const auto names = seed_variable_names(n);
  return build(Poly{}, [&](const std::string& s) { return Poly::parse(s, names, field); });
}

inline AnyAlgebra algebra_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyAlgebra load_algebra(const std::string& path) { return algebra_from_text(read_file(path)); }

/// Loads an algebra that must have scalar structure constants.
inline Algebra<Scalar> load_scalar_algebra(const std::string& path) {
  AnyAlgebra a = load_algebra(path);
  if (auto* s = std::get_if<Algebra<Scalar>>(&a)) return std::move(*s);
  throw InputError("'" + path + "' has polynomial structure constants; a scalar table is required");
}

/// Every *.json file of a directory, in file-name order, as scalar algebras.
inline std::vector<Algebra<Scalar>> load_sample_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .json samples in '" + dir + "'");
  std::vector<Algebra<Scalar>> out;
  for (const auto& f : files) out.push_back(load_scalar_algebra(f.string()));
  return out;
}

inline void save_algebra(const std::string& path, const AnyAlgebra& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << to_json_text(a);
}

}  // namespace kantor

#endif  // KANTOR_ALGEBRA_JSON_HPP

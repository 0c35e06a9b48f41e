#pragma once

// JSON input files describing an instance's named objects and morphisms, plus
// serializers for lattices (Hasse dot output and a full table dump).

#include <complex>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "boolhat.hpp"
#include "fdhilb.hpp"
#include "finpinj.hpp"
#include "finrel.hpp"
#include "lattice.hpp"

namespace dagkern {

using nlohmann::json;

template <typename C>
struct InstanceFile {
  C cat;
  std::vector<std::pair<std::string, Obj_t<C>>> objects;
  std::vector<std::pair<std::string, Mor_t<C>>> morphisms;

  const Obj_t<C>& obj(const std::string& name) const {
    for (const auto& [n, o] : objects)
      if (n == name) return o;
    throw ParseError("no object named '" + name + "' in the input file");
  }
  const Mor_t<C>& mor(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
      if (n == name) return m;
    throw ParseError("no morphism named '" + name + "' in the input file");
  }
  bool has_obj(const std::string& name) const {
    for (const auto& [n, o] : objects)
      if (n == name) return true;
    return false;
  }
};

using AnyInstance =
    std::variant<InstanceFile<FinRel>, InstanceFile<FinPInj>, InstanceFile<FdHilb>,
                 InstanceFile<BoolHat>>;

namespace detail {

inline const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

inline std::string need_string(const json& j, const char* key, const char* what) {
  const json& v = need(j, key, what);
  if (!v.is_string())
    throw ParseError(std::string(what) + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(std::string(what) + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <typename C, typename ObjParse, typename MorParse>
InstanceFile<C> parse_file(const json& j, C cat, ObjParse&& parse_obj, MorParse&& parse_mor) {
  InstanceFile<C> file{std::move(cat), {}, {}};
  const json& objs = need(j, "objects", "instance file");
  if (!objs.is_object()) throw ParseError("instance file: 'objects' must be a JSON object");
  for (const auto& [name, body] : objs.items())
    file.objects.emplace_back(name, parse_obj(file.cat, name, body));
  if (j.contains("morphisms")) {
    const json& mors = j.at("morphisms");
    if (!mors.is_object())
      throw ParseError("instance file: 'morphisms' must be a JSON object");
    for (const auto& [name, body] : mors.items()) {
      const std::string sn = need_string(body, "src", "morphism");
      const std::string tn = need_string(body, "tgt", "morphism");
      file.morphisms.emplace_back(
          name, parse_mor(file.cat, name, file.obj(sn), file.obj(tn), body));
    }
  }
  return file;
}

inline std::complex<double> parse_entry(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ParseError("matrix entry must be a number or a [re, im] pair");
}

}  // namespace detail

inline InstanceFile<FinRel> parse_finrel(const json& j) {
  return detail::parse_file<FinRel>(
      j, FinRel{},
      [](const FinRel& cat, const std::string& name, const json& body) {
        return cat.make_object(detail::string_list(body, ("object " + name).c_str()));
      },
      [](const FinRel& cat, const std::string& name, const FinRel::Object& s,
         const FinRel::Object& t, const json& body) {
        const json& pairs = detail::need(body, "pairs", ("morphism " + name).c_str());
        std::vector<std::pair<std::string, std::string>> ps;
        for (const auto& p : pairs) {
          if (!p.is_array() || p.size() != 2)
            throw ParseError("morphism " + name + ": each pair must be [src, tgt]");
          ps.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        return cat.from_pairs(s, t, ps);
      });
}

inline InstanceFile<FinPInj> parse_finpinj(const json& j) {
  return detail::parse_file<FinPInj>(
      j, FinPInj{},
      [](const FinPInj& cat, const std::string& name, const json& body) {
        return cat.make_object(detail::string_list(body, ("object " + name).c_str()));
      },
      [](const FinPInj& cat, const std::string& name, const FinPInj::Object& s,
         const FinPInj::Object& t, const json& body) {
        const json& map = detail::need(body, "map", ("morphism " + name).c_str());
        if (!map.is_object())
          throw ParseError("morphism " + name + ": 'map' must be a JSON object");
        std::map<std::string, std::string> entries;
        for (const auto& [k, v] : map.items()) entries[k] = v.get<std::string>();
        return cat.from_map(s, t, entries);
      });
}

inline InstanceFile<FdHilb> parse_fdhilb(const json& j) {
  return detail::parse_file<FdHilb>(
      j, FdHilb{},
      [](const FdHilb&, const std::string& name, const json& body) {
        if (!body.is_number_unsigned())
          throw ParseError("object " + name + ": expected a dimension");
        return FdHilb::Object{body.get<std::size_t>()};
      },
      [](const FdHilb& cat, const std::string& name, const FdHilb::Object& s,
         const FdHilb::Object& t, const json& body) {
        const json& rows = detail::need(body, "matrix", ("morphism " + name).c_str());
        if (!rows.is_array() || rows.size() != t.dim)
          throw ParseError("morphism " + name + ": matrix must have one row per target axis");
        FdHilb::Mor out = cat.zero_mor(s, t);
        for (std::size_t r = 0; r < t.dim; ++r) {
          if (!rows[r].is_array() || rows[r].size() != s.dim)
            throw ParseError("morphism " + name +
                             ": matrix row length must match the source dimension");
          for (std::size_t c = 0; c < s.dim; ++c)
            out.mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                detail::parse_entry(rows[r][c]);
        }
        return out;
      });
}

inline InstanceFile<BoolHat> parse_boolhat(const json& j) {
  BoolHat cat(detail::string_list(detail::need(j, "atoms", "instance file"), "atoms"));
  return detail::parse_file<BoolHat>(
      std::move(j), std::move(cat),
      [](const BoolHat& c, const std::string& name, const json& body) {
        return c.make_object(c.mask_of(detail::string_list(body, ("object " + name).c_str())));
      },
      [](const BoolHat& c, const std::string& name, const BoolHat::Object& s,
         const BoolHat::Object& t, const json& body) {
        const BoolHat::Mask f =
            c.mask_of(detail::string_list(detail::need(body, "atoms", ("morphism " + name).c_str()),
                                          ("morphism " + name).c_str()));
        return c.make_mor(s, t, f);
      });
}

inline AnyInstance parse_instance(const json& j) {
  const std::string kind = detail::need_string(j, "instance", "instance file");
  try {
    if (kind == "finrel") return parse_finrel(j);
    if (kind == "finpinj") return parse_finpinj(j);
    if (kind == "fdhilb") return parse_fdhilb(j);
    if (kind == "boolhat") return parse_boolhat(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance file: ") + e.what());
  }
  throw ParseError("unknown instance kind '" + kind +
                   "' (expected finrel, finpinj, fdhilb, or boolhat)");
}

inline AnyInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_instance(j);
}

// ---- lattice output ----------------------------------------------------------

template <typename C>
json lattice_to_json(const C& cat, const KSubLattice<C>& lat) {
  json j;
  j["object"] = cat.show_obj(lat.codomain_obj);
  j["size"] = lat.size();
  json elems = json::array();
  for (const auto& m : lat.elems) elems.push_back(cat.show(m.mor));
  j["elements"] = std::move(elems);
  j["bottom"] = lat.bottom;
  j["top"] = lat.top;
  j["leq"] = lat.leq;
  j["meet"] = lat.meet_t;
  j["join"] = lat.join_t;
  j["ortho"] = lat.ortho_t;
  const auto atoms = lattice_atoms(lat);
  j["atoms"] = atoms;
  j["atomic"] = lattice_is_atomic(lat);
  j["atomistic"] = lattice_is_atomistic(lat);
  return j;
}

// Hasse diagram: an edge for each cover, orthocomplements as dashed arcs.
template <typename C>
std::string lattice_to_dot(const C& cat, const KSubLattice<C>& lat) {
  const int n = static_cast<int>(lat.size());
  std::ostringstream out;
  out << "digraph ksub {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < n; ++i) {
    std::string label = cat.show(lat.elems[static_cast<std::size_t>(i)].mor);
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped.push_back('\\');
      escaped.push_back(ch);
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !lat.leq_at(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (lat.leq_at(a, c) && lat.leq_at(c, b)) {
          cover = false;
          break;
        }
      }
      if (cover) out << "  n" << a << " -> n" << b << ";\n";
    }
  for (int a = 0; a < n; ++a) {
    const int oa = lat.ortho_t[static_cast<std::size_t>(a)];
    if (a < oa)
      out << "  n" << a << " -> n" << oa
          << " [dir=none, style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dagkern

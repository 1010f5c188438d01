#include "tss/json_io.hpp"

#include <set>

#include "tss/error.hpp"

namespace tss {

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key \"" + key + "\" in " + where);
  return *it;
}

int require_nonneg_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(where + " must be a nonnegative integer");
  }
  return static_cast<int>(v.get<long long>());
}

std::string require_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

Rational require_rational(const Json& v, const std::string& where) {
  return Rational::parse(require_string(v, where));
}

}  // namespace

TssSurface parse_tss(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error at byte ") + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("TSS document must be a JSON object");
  reject_unknown_keys(doc, {"closed", "leaves", "curves"}, "TSS document");

  TssSurface s;
  const Json& closed = require(doc, "closed", "TSS document");
  if (!closed.is_boolean()) throw ParseError("\"closed\" must be a boolean");
  s.closed = closed.get<bool>();

  const Json& leaves = require(doc, "leaves", "TSS document");
  if (!leaves.is_array()) throw ParseError("\"leaves\" must be an array");
  for (const Json& lj : leaves) {
    if (!lj.is_object()) throw ParseError("leaf entries must be objects");
    reject_unknown_keys(lj, {"id", "genus", "sign", "volume", "free_boundary"}, "leaf");
    Leaf l;
    l.id = require_string(require(lj, "id", "leaf"), "leaf id");
    l.genus = require_nonneg_int(require(lj, "genus", "leaf " + l.id), "genus of leaf " + l.id);
    std::string sign = require_string(require(lj, "sign", "leaf " + l.id), "sign of leaf " + l.id);
    if (sign == "+") {
      l.sign = +1;
    } else if (sign == "-") {
      l.sign = -1;
    } else {
      throw ParseError("sign of leaf " + l.id + " must be \"+\" or \"-\"");
    }
    l.volume = require_rational(require(lj, "volume", "leaf " + l.id), "volume of leaf " + l.id);
    l.free_boundary = require_nonneg_int(require(lj, "free_boundary", "leaf " + l.id),
                                         "free_boundary of leaf " + l.id);
    s.leaves.push_back(std::move(l));
  }

  const Json& curves = require(doc, "curves", "TSS document");
  if (!curves.is_array()) throw ParseError("\"curves\" must be an array");
  for (const Json& cj : curves) {
    if (!cj.is_object()) throw ParseError("curve entries must be objects");
    reject_unknown_keys(cj, {"id", "period", "neg", "pos"}, "curve");
    ZeroCurve c;
    c.id = require_string(require(cj, "id", "curve"), "curve id");
    c.period =
        require_rational(require(cj, "period", "curve " + c.id), "period of curve " + c.id);
    if (c.period.sign() <= 0) {
      throw ParseError("period of curve " + c.id + " must be positive");
    }
    c.neg_leaf = require_string(require(cj, "neg", "curve " + c.id), "neg of curve " + c.id);
    c.pos_leaf = require_string(require(cj, "pos", "curve " + c.id), "pos of curve " + c.id);
    for (const std::string* ref : {&c.neg_leaf, &c.pos_leaf}) {
      if (!s.find_leaf(*ref)) {
        throw ParseError("curve " + c.id + " references missing leaf " + *ref);
      }
    }
    s.curves.push_back(std::move(c));
  }
  return s;
}

Json to_json(const TssSurface& s) {
  Json leaves = Json::array();
  for (const auto& l : s.leaves) {
    leaves.push_back({{"id", l.id},
                      {"genus", l.genus},
                      {"sign", l.sign > 0 ? "+" : "-"},
                      {"volume", l.volume.str()},
                      {"free_boundary", l.free_boundary}});
  }
  Json curves = Json::array();
  for (const auto& c : s.curves) {
    curves.push_back({{"id", c.id},
                      {"period", c.period.str()},
                      {"neg", c.neg_leaf},
                      {"pos", c.pos_leaf}});
  }
  return {{"closed", s.closed}, {"leaves", leaves}, {"curves", curves}};
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"code", v.code}, {"message", v.message}});
  }
  return {{"valid", r.valid()}, {"violations", violations}};
}

Json to_json(const LabeledGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back({{"id", v.id}, {"genus", v.genus}, {"sign", v.sign > 0 ? "+" : "-"}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(
        {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"period", e.period.str()}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

Json to_json(const GraphMap& m) {
  return {{"vertices", m.vertex_map}, {"edges", m.edge_map}, {"reversal", m.global_reversal}};
}

GraphMap graph_map_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph map must be an object");
  reject_unknown_keys(j, {"vertices", "edges", "reversal"}, "graph map");
  GraphMap m;
  const Json& v = require(j, "vertices", "graph map");
  const Json& e = require(j, "edges", "graph map");
  const Json& r = require(j, "reversal", "graph map");
  if (!v.is_object() || !e.is_object() || !r.is_boolean()) {
    throw ParseError("graph map fields have wrong types");
  }
  for (const auto& [key, value] : v.items()) m.vertex_map[key] = require_string(value, "vertex image");
  for (const auto& [key, value] : e.items()) m.edge_map[key] = require_string(value, "edge image");
  m.global_reversal = r.get<bool>();
  return m;
}

Json to_json(const GroupDescription& d) {
  Json atoms = Json::array();
  for (const auto& a : d.atoms()) {
    switch (a.kind) {
      case GroupAtom::Kind::Trivial:
        atoms.push_back({{"type", "trivial"}});
        break;
      case GroupAtom::Kind::FreeAbelian:
        atoms.push_back({{"type", "free_abelian"}, {"rank", a.rank}});
        break;
      case GroupAtom::Kind::Torus:
        atoms.push_back({{"type", "torus"}, {"period", a.period.str()}});
        break;
      case GroupAtom::Kind::SymbolicPMod:
        atoms.push_back({{"type", "pmod"}, {"genus", a.genus}, {"punctures", a.punctures}});
        break;
      case GroupAtom::Kind::FiniteCyclic:
        atoms.push_back({{"type", "finite_cyclic"}, {"order", a.rank}});
        break;
    }
  }
  Json j{{"atoms", atoms}, {"pretty", d.pretty()}};
  if (!d.presentation_note().empty()) j["note"] = d.presentation_note();
  return j;
}

Json to_json(const PicardGroupDescription& d) {
  Json torus = Json::object();
  for (const auto& [curve, period] : d.torus_factors) torus[curve] = period.str();
  Json leaf_factors = Json::object();
  for (const auto& [leaf, desc] : d.leaf_factors) leaf_factors[leaf] = to_json(desc);
  Json outer_elements = Json::array();
  for (const auto& m : d.outer.elements) outer_elements.push_back(to_json(m));
  Json outer_generators = Json::array();
  for (const auto& m : d.outer.generators) outer_generators.push_back(to_json(m));
  return {{"torus_factors", torus},
          {"leaf_factors", leaf_factors},
          {"outer", {{"order", d.outer.order()},
                     {"elements", outer_elements},
                     {"generators", outer_generators}}},
          {"action_note", d.action_note},
          {"pretty", d.pretty()}};
}

Json to_json(const PicardElement& e) {
  Json angles = Json::object();
  for (const auto& [curve, angle] : e.angles) angles[curve] = angle.str();
  Json twists = Json::object();
  for (const auto& [leaf, vec] : e.twists) {
    Json row = Json::object();
    for (const auto& [curve, k] : vec) row[curve] = k;
    twists[leaf] = std::move(row);
  }
  Json words = Json::object();
  for (const auto& [leaf, w] : e.pmod_words) {
    Json letters = Json::array();
    for (const Letter& l : w.letters()) letters.push_back({l.generator, l.exponent});
    words[leaf] = std::move(letters);
  }
  return {{"outer", to_json(e.outer_part)}, {"angles", angles}, {"twists", twists},
          {"words", words}};
}

PicardElement element_from_json(const PicardGroupDescription& d, const Json& j) {
  if (!j.is_object()) throw ParseError("element must be an object");
  reject_unknown_keys(j, {"outer", "angles", "twists", "words"}, "element");
  PicardElement e = identity_element(d);
  if (j.contains("outer")) e.outer_part = graph_map_from_json(j.at("outer"));
  if (j.contains("angles")) {
    const Json& angles = j.at("angles");
    if (!angles.is_object()) throw ParseError("\"angles\" must be an object");
    for (const auto& [curve, value] : angles.items()) {
      if (!e.angles.count(curve)) throw ParseError("angle on unknown curve " + curve);
      e.angles[curve] = require_rational(value, "angle on curve " + curve).mod(d.period_of(curve));
    }
  }
  if (j.contains("twists")) {
    const Json& twists = j.at("twists");
    if (!twists.is_object()) throw ParseError("\"twists\" must be an object");
    for (const auto& [leaf, row] : twists.items()) {
      if (!e.twists.count(leaf)) throw ParseError("twists on unknown leaf " + leaf);
      if (!row.is_object()) throw ParseError("twist row must be an object");
      for (const auto& [curve, k] : row.items()) {
        if (!e.twists[leaf].count(curve)) {
          throw ParseError("twist slot " + curve + " not incident to leaf " + leaf);
        }
        if (!k.is_number_integer()) throw ParseError("twist powers must be integers");
        e.twists[leaf][curve] = k.get<long long>();
      }
    }
  }
  if (j.contains("words")) {
    const Json& words = j.at("words");
    if (!words.is_object()) throw ParseError("\"words\" must be an object");
    for (const auto& [leaf, letters] : words.items()) {
      if (!e.pmod_words.count(leaf)) throw ParseError("word on unknown leaf " + leaf);
      if (!letters.is_array()) throw ParseError("word must be an array of [gen, exp] pairs");
      std::vector<Letter> raw;
      for (const Json& pair : letters) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
          throw ParseError("word letters must be [generator, exponent] integer pairs");
        }
        raw.push_back({pair[0].get<int>(), pair[1].get<int>()});
      }
      const auto gens = pmod_generators(d.type_of(leaf));
      FreeWord w = FreeWord::reduce(raw, static_cast<int>(gens.size()));
      e.pmod_words[leaf] = std::move(w);
    }
  }
  // Normalize the twist lattice through the public constructor path.
  PicardElement normalized = compose(d, identity_element(d), e);
  return normalized;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name},
               {"samples", c.samples},
               {"max_residual", c.max_residual},
               {"tol", c.tol},
               {"pass", c.pass}};
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  return {{"model", r.model}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

Json to_json(const SymplecticPicardReport& r) {
  Json j{{"closed", r.closed}, {"genus", r.genus}, {"ends", r.ends}, {"symbolic", r.symbolic},
         {"relations", r.relations}};
  if (r.symbolic) {
    j["pic"] = r.pic_symbolic;
  } else {
    j["pic"] = to_json(r.pic);
  }
  return j;
}

}  // namespace tss

#include "poss/io.hpp"

#include <sstream>

#include <json.hpp>

namespace poss {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error(std::string("json: ") + e.what());
  }
}

std::vector<std::pair<int, int>> read_pairs(const json& arr, int n, const char* where) {
  if (!arr.is_array()) throw document_error(std::string(where) + ": expected array");
  std::vector<std::pair<int, int>> out;
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw document_error(std::string(where) + ": expected [x,y] pairs");
    int x = item[0].get<int>(), y = item[1].get<int>();
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw document_error(std::string(where) + ": state out of range");
    out.push_back({x, y});
  }
  return out;
}

}  // namespace

FrameDocument parse_frame_document(const std::string& text, bool check) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw document_error("frame document: expected object");
  if (!doc.contains("states") || !doc["states"].is_number_integer())
    throw document_error("frame document: missing integer field 'states'");
  int n = doc["states"].get<int>();
  if (n < 1 || n > kMaxStates)
    throw document_error("frame document: 'states' out of range");

  FrameDocument out;
  std::vector<std::pair<int, int>> leq;
  if (doc.contains("leq")) leq = read_pairs(doc["leq"], n, "leq");
  try {
    out.frame.poset = FinitePoset(n, leq);
  } catch (const std::invalid_argument& e) {
    throw document_error(std::string("leq: ") + e.what());
  }

  if (doc.contains("rels")) {
    if (!doc["rels"].is_object()) throw document_error("rels: expected object");
    for (auto it = doc["rels"].begin(); it != doc["rels"].end(); ++it) {
      out.frame.indices.push_back(it.key());
      Relation r(n, 0);
      for (auto [x, y] : read_pairs(it.value(), n, "rels")) r[x] = with(r[x], y);
      out.frame.rels.push_back(std::move(r));
    }
    // json object iteration is key-sorted for nlohmann's default map, which
    // matches the sorted-indices invariant
  }

  if (!doc.contains("props")) throw document_error("frame document: missing 'props'");
  if (doc["props"].is_string() && doc["props"].get<std::string>() == "full") {
    out.frame.props = regular_opens(out.frame.poset);
  } else if (doc["props"].is_array()) {
    for (const json& setj : doc["props"]) {
      if (!setj.is_array()) throw document_error("props: expected state lists");
      StateSet s = 0;
      for (const json& e : setj) {
        if (!e.is_number_integer()) throw document_error("props: expected states");
        int x = e.get<int>();
        if (x < 0 || x >= n) throw document_error("props: state out of range");
        s = with(s, x);
      }
      out.frame.props.push_back(s);
    }
    normalize(out.frame.props);
  } else {
    throw document_error("props: expected state lists or \"full\"");
  }

  out.extended = doc.value("extended", false);
  if (check && !out.extended) {
    CheckReport v = validate_frame(out.frame);
    if (!v.ok) throw document_error("frame invalid: " + v.condition);
  }
  return out;
}

std::string serialize_frame_document(const FrameDocument& doc) {
  const PossibilityFrame& f = doc.frame;
  json j;
  j["states"] = f.size();
  json leq = json::array();
  for (int y = 0; y < f.size(); ++y)
    for_each_state(f.poset.below[y], [&](int x) {
      if (x != y) leq.push_back(json::array({x, y}));
    });
  j["leq"] = leq;
  json rels = json::object();
  for (std::size_t k = 0; k < f.indices.size(); ++k) {
    json pairs = json::array();
    for (int x = 0; x < f.size(); ++x)
      for_each_state(f.rels[k][x],
                     [&](int y) { pairs.push_back(json::array({x, y})); });
    rels[f.indices[k]] = pairs;
  }
  j["rels"] = rels;
  json props = json::array();
  for (StateSet s : f.props) {
    json set = json::array();
    for_each_state(s, [&](int x) { set.push_back(x); });
    props.push_back(set);
  }
  j["props"] = props;
  if (doc.extended) j["extended"] = true;
  return j.dump(2) + "\n";
}

FiniteBAO parse_bao_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw document_error("bao document: expected object");
  if (!doc.contains("atoms") || !doc["atoms"].is_number_integer())
    throw document_error("bao document: missing integer field 'atoms'");
  int m = doc["atoms"].get<int>();
  if (m < 0 || m > 20) throw document_error("bao document: 'atoms' out of range");

  FiniteBAO b;
  b.atoms = m;
  if (!doc.contains("elements"))
    throw document_error("bao document: missing 'elements'");
  if (doc["elements"].is_string() && doc["elements"].get<std::string>() == "powerset") {
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << m); ++e) b.elements.push_back(e);
  } else if (doc["elements"].is_array()) {
    for (const json& setj : doc["elements"]) {
      if (!setj.is_array()) throw document_error("elements: expected atom lists");
      std::uint64_t s = 0;
      for (const json& e : setj) {
        if (!e.is_number_integer()) throw document_error("elements: expected atoms");
        int a = e.get<int>();
        if (a < 0 || a >= m) throw document_error("elements: atom out of range");
        s |= std::uint64_t{1} << a;
      }
      b.elements.push_back(s);
    }
    std::sort(b.elements.begin(), b.elements.end());
    b.elements.erase(std::unique(b.elements.begin(), b.elements.end()),
                     b.elements.end());
  } else {
    throw document_error("elements: expected atom lists or \"powerset\"");
  }

  if (doc.contains("ops")) {
    if (!doc["ops"].is_object()) throw document_error("ops: expected object");
    for (auto it = doc["ops"].begin(); it != doc["ops"].end(); ++it) {
      b.indices.push_back(it.key());
      if (!it.value().is_array() || it.value().size() != b.elements.size())
        throw document_error("ops: table size must match element count");
      std::vector<int> table;
      for (const json& e : it.value()) {
        if (!e.is_number_integer()) throw document_error("ops: expected element indices");
        int v = e.get<int>();
        if (v < 0 || v >= b.size())
          throw document_error("ops: element index out of range");
        table.push_back(v);
      }
      b.box.push_back(std::move(table));
    }
  }
  CheckReport v = validate_bao(b);
  if (!v.ok) throw document_error("bao invalid: " + v.condition);
  return b;
}

std::string serialize_bao_document(const FiniteBAO& b) {
  json j;
  j["atoms"] = b.atoms;
  json elems = json::array();
  for (std::uint64_t e : b.elements) {
    json set = json::array();
    for (int a = 0; a < b.atoms; ++a)
      if ((e >> a) & 1) set.push_back(a);
    elems.push_back(set);
  }
  j["elements"] = elems;
  json ops = json::object();
  for (std::size_t k = 0; k < b.indices.size(); ++k) ops[b.indices[k]] = b.box[k];
  j["ops"] = ops;
  return j.dump(2) + "\n";
}

std::string export_dot(const PossibilityFrame& f, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int x = 0; x < f.size(); ++x) out << "  s" << x << " [label=\"" << x << "\"];\n";
  // covering pairs of the order: y covers x when x < y with nothing between
  for (int y = 0; y < f.size(); ++y)
    for (int x = 0; x < f.size(); ++x) {
      if (x == y || !f.poset.leq(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < f.size(); ++z)
        if (z != x && z != y && f.poset.leq(x, z) && f.poset.leq(z, y)) covering = false;
      if (covering)
        out << "  s" << y << " -> s" << x << " [style=solid];\n";
    }
  for (std::size_t k = 0; k < f.indices.size(); ++k)
    for (int x = 0; x < f.size(); ++x)
      for_each_state(f.rels[k][x], [&](int y) {
        out << "  s" << x << " -> s" << y << " [style=dashed, label=\""
            << f.indices[k] << "\"];\n";
      });
  out << "}\n";
  return out.str();
}

}  // namespace poss

// possct: command-line workbench for finite possibility frames and BAOs.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poss/battery.hpp"
#include "poss/bao.hpp"
#include "poss/correspondence.hpp"
#include "poss/enumerate.hpp"
#include "poss/forcing.hpp"
#include "poss/formula.hpp"
#include "poss/frame.hpp"
#include "poss/io.hpp"
#include "poss/morphism.hpp"
#include "poss/transform.hpp"

namespace {

using namespace poss;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrameDocument load_frame(const std::string& path, bool check = true) {
  try {
    return parse_frame_document(read_file(path), check);
  } catch (const document_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

FiniteBAO load_bao(const std::string& path) {
  try {
    return parse_bao_document(read_file(path));
  } catch (const document_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

Fml parse_formula_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const parse_error& e) {
    std::ostringstream msg;
    msg << "formula: " << e.what() << " at offset " << e.offset << " (expected";
    for (const std::string& x : e.expected) msg << " " << x;
    msg << ")";
    throw input_error(msg.str());
  }
}

std::map<std::string, StateSet> load_valuation(const std::string& path, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  if (!j.is_object()) throw input_error(path + ": expected an object");
  std::map<std::string, StateSet> val;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_array()) throw input_error(path + ": expected state lists");
    StateSet s = 0;
    for (const nlohmann::json& e : it.value()) {
      int x = e.get<int>();
      if (x < 0 || x >= n) throw input_error(path + ": state out of range");
      s = with(s, x);
    }
    val[it.key()] = s;
  }
  return val;
}

std::string set_text(StateSet s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for_each_state(s, [&](int x) {
    if (!first) out << ",";
    out << x;
    first = false;
  });
  out << "}";
  return out.str();
}

void print_witness(const CheckReport& r) {
  if (r.ok) return;
  std::cout << "violated: " << r.condition << "\n";
  if (!r.states.empty()) {
    std::cout << "witness-states:";
    for (int s : r.states) std::cout << " " << s;
    std::cout << "\n";
  }
  if (!r.sets.empty()) {
    std::cout << "witness-sets:";
    for (StateSet s : r.sets) std::cout << " " << set_text(s);
    std::cout << "\n";
  }
}

int verdict(bool ok) {
  std::cout << "verdict: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

// Schema strings look like "e;i;i,i;e" (alpha;beta;delta;gamma, `e` empty,
// commas within a sequence; `|` is accepted as a separator alias).
LSSchema parse_schema(std::string text) {
  for (char& c : text)
    if (c == '|') c = ';';
  std::vector<std::vector<std::string>> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    std::vector<std::string> seq;
    if (piece != "e" && !piece.empty()) {
      std::stringstream inner(piece);
      std::string idx;
      while (std::getline(inner, idx, ','))
        if (!idx.empty()) seq.push_back(idx);
    }
    parts.push_back(seq);
  }
  if (parts.size() != 4)
    throw input_error("schema must have four ;-separated parts (e for empty)");
  return LSSchema{parts[0], parts[1], parts[2], parts[3]};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ','))
    if (!piece.empty()) out.push_back(std::stoi(piece));
  return out;
}

void emit_document(const std::string& doc) { std::cout << doc; }

int run(int argc, char** argv) {
  CLI::App app{"finite possibility-semantics workbench"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check frame axioms");
  cmd_validate->add_option("frame", validate_path)->required();

  // classify
  std::string classify_path;
  CLI::App* cmd_classify = app.add_subcommand("classify", "frame class flags");
  cmd_classify->add_option("frame", classify_path)->required();

  // force
  std::string force_path, force_val, force_formula;
  int force_at = 0;
  CLI::App* cmd_force = app.add_subcommand("force", "forcing at a state");
  cmd_force->add_option("frame", force_path)->required();
  cmd_force->add_option("--val", force_val, "valuation json")->required();
  cmd_force->add_option("--at", force_at, "state")->required();
  cmd_force->add_option("formula", force_formula)->required();

  // valid
  std::string valid_path, valid_formula;
  long long valid_budget = 10'000'000;
  CLI::App* cmd_valid = app.add_subcommand("valid", "frame validity");
  cmd_valid->add_option("frame", valid_path)->required();
  cmd_valid->add_option("formula", valid_formula)->required();
  cmd_valid->add_option("--budget", valid_budget, "forcing-call budget");

  // transform
  std::string tr_name;
  std::vector<std::string> tr_paths;
  std::string tr_subset;
  CLI::App* cmd_transform = app.add_subcommand("transform", "frame constructions");
  cmd_transform->add_option("name", tr_name,
                            "powerset|box-tighten|separative-quotient|tighten|"
                            "functionalize|atom-structure|extend-bot|restrict-bot|"
                            "disjoint-union|subframe")
      ->required();
  cmd_transform->add_option("frame", tr_paths, "frame document(s)")->required();
  cmd_transform->add_option("--subset", tr_subset, "states for subframe");

  // dual
  std::string dual_name, dual_path;
  CLI::App* cmd_dual = app.add_subcommand("dual", "duality maps and frames");
  cmd_dual->add_option("name", dual_name,
                       "under|principal-frame|full-frame|filter-frame|gff|"
                       "zeta-a|zeta-f|eta-a|eta-f")
      ->required();
  cmd_dual->add_option("input", dual_path)->required();

  // morphism
  CLI::App* cmd_morphism = app.add_subcommand("morphism", "check or find morphisms");
  std::string mo_mode, mo_source, mo_target, mo_map, mo_grade = "possibility";
  std::vector<std::string> mo_flags;
  cmd_morphism->add_option("mode", mo_mode, "check|find")->required();
  cmd_morphism->add_option("source", mo_source)->required();
  cmd_morphism->add_option("target", mo_target)->required();
  cmd_morphism->add_option("--map", mo_map, "comma-separated images (check)");
  cmd_morphism->add_option("--grade", mo_grade);
  cmd_morphism->add_option("--flags", mo_flags)->delimiter(',');

  // enumerate
  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "small structures");
  std::string en_kind;
  int en_size = 3, en_atoms = 2;
  std::vector<std::string> en_indices = {"i"};
  cmd_enumerate->add_option("kind", en_kind, "posets|frames|baos")->required();
  cmd_enumerate->add_option("--size", en_size);
  cmd_enumerate->add_option("--atoms", en_atoms);
  cmd_enumerate->add_option("--indices", en_indices)->delimiter(',');

  // correspond
  std::string co_schema, co_path;
  bool co_kripke = false;
  CLI::App* cmd_correspond =
      app.add_subcommand("correspond", "axiom validity vs frame condition");
  cmd_correspond->add_option("schema", co_schema)->required();
  cmd_correspond->add_option("frame", co_path)->required();
  cmd_correspond->add_flag("--kripke", co_kripke);

  // sweep
  std::string sw_schema;
  int sw_max = 3;
  bool sw_kripke = false;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "correspondence sweep");
  cmd_sweep->add_option("schema", sw_schema)->required();
  cmd_sweep->add_option("--max-size", sw_max);
  cmd_sweep->add_flag("--kripke", sw_kripke);

  // export-dot
  std::string dot_path;
  CLI::App* cmd_dot = app.add_subcommand("export-dot", "render the frame as DOT");
  cmd_dot->add_option("frame", dot_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (cmd_validate->parsed()) {
    FrameDocument doc = load_frame(validate_path, /*check=*/false);
    if (doc.extended) {
      PossibilityFrame r = restrict_bot(doc.frame);
      std::cout << "extended: true\nrestricted-states: " << r.size() << "\n";
      return verdict(true);
    }
    CheckReport r = validate_frame(doc.frame);
    print_witness(r);
    return verdict(r.ok);
  }

  if (cmd_classify->parsed()) {
    FrameDocument doc = load_frame(classify_path);
    FrameClasses c = classify(doc.frame);
    std::cout << "full: " << c.full << "\nstandard: " << c.standard
              << "\nstrong: " << c.strong << "\nseparative: " << c.separative
              << "\nleq-tight: " << c.leq_tight << "\nr-tight: " << c.r_tight
              << "\ntight: " << c.tight << "\ndifferentiated: " << c.differentiated
              << "\natomic: " << c.atomic << "\nprincipal: " << c.principal
              << "\nlattice-complete: " << c.lattice_complete
              << "\nrich: " << c.rich
              << "\nquasi-functional: " << c.quasi_functional
              << "\nfunctional: " << c.functional
              << "\nfilter-descriptive: " << c.filter_descriptive << "\n";
    return verdict(true);
  }

  if (cmd_force->parsed()) {
    FrameDocument doc = load_frame(force_path);
    Model m{&doc.frame, load_valuation(force_val, doc.frame.size())};
    for (const auto& [name, v] : m.valuation)
      if (!family_contains(doc.frame.props, v))
        throw input_error("valuation of " + name + " is not admissible");
    Fml f = parse_formula_arg(force_formula);
    if (force_at < 0 || force_at >= doc.frame.size())
      throw input_error("--at state out of range");
    bool ok = forces(m, force_at, f);
    std::cout << "state: " << force_at << "\nformula: " << print(f) << "\n";
    return verdict(ok);
  }

  if (cmd_valid->parsed()) {
    FrameDocument doc = load_frame(valid_path);
    Fml f = parse_formula_arg(valid_formula);
    Budget budget(valid_budget);
    ValidityReport r = valid_on_frame(doc.frame, f, &budget);
    std::cout << "formula: " << print(f) << "\n";
    if (!r.valid) {
      std::cout << "counter-state: " << r.state << "\n";
      for (std::size_t i = 0; i < r.vars.size(); ++i)
        std::cout << "counter-" << r.vars[i] << ": " << set_text(r.valuation[i])
                  << "\n";
    }
    return verdict(r.valid);
  }

  if (cmd_transform->parsed()) {
    if (tr_name == "disjoint-union") {
      std::vector<PossibilityFrame> frames;
      for (const std::string& p : tr_paths) frames.push_back(load_frame(p).frame);
      DisjointUnionResult r = disjoint_union(frames);
      emit_document(serialize_frame_document({r.frame, false}));
      return verdict(true);
    }
    if (tr_paths.size() != 1) throw input_error("transform expects one frame");
    FrameDocument doc = load_frame(tr_paths[0]);
    PossibilityFrame out;
    bool extended_out = false;
    if (tr_name == "powerset") {
      out = powerset_possibilization(doc.frame);
    } else if (tr_name == "box-tighten") {
      out = box_tighten(doc.frame);
    } else if (tr_name == "separative-quotient") {
      QuotientResult r = separative_quotient(doc.frame);
      std::cout << "classes: " << r.frame.size() << "\n";
      out = r.frame;
    } else if (tr_name == "tighten") {
      QuotientResult r = tighten(doc.frame);
      std::cout << "classes: " << r.frame.size() << "\n";
      out = r.frame;
    } else if (tr_name == "functionalize") {
      out = functionalize(doc.frame);
    } else if (tr_name == "atom-structure") {
      out = atom_structure(doc.frame).frame;
    } else if (tr_name == "extend-bot") {
      out = extend_bot(doc.frame);
      extended_out = true;
    } else if (tr_name == "restrict-bot") {
      out = restrict_bot(doc.frame);
    } else if (tr_name == "subframe") {
      if (tr_subset.empty()) throw input_error("subframe needs --subset");
      StateSet mask = 0;
      for (int s : parse_int_list(tr_subset)) {
        if (s < 0 || s >= doc.frame.size()) throw input_error("--subset out of range");
        mask = with(mask, s);
      }
      SubframeResult r = subframe(doc.frame, mask);
      std::cout << "kind: " << to_string(r.kind) << "\n";
      out = r.frame;
    } else {
      throw input_error("unknown transform: " + tr_name);
    }
    emit_document(serialize_frame_document({out, extended_out}));
    return verdict(true);
  }

  if (cmd_dual->parsed()) {
    if (dual_name == "under") {
      FrameDocument doc = load_frame(dual_path);
      UnderlyingBAO u = underlying_bao(doc.frame);
      emit_document(serialize_bao_document(u.bao));
      return verdict(true);
    }
    if (dual_name == "zeta-f" || dual_name == "eta-f") {
      FrameDocument doc = load_frame(dual_path);
      UnderlyingBAO u = underlying_bao(doc.frame);
      if (dual_name == "zeta-f") {
        AlgebraFrame pf = principal_frame(u.bao);
        MorphismSpec z = zeta_F(doc.frame, u, pf);
        std::cout << "map:";
        for (int v : z.map) std::cout << " " << v;
        std::cout << "\n";
        emit_document(serialize_frame_document({pf.frame, false}));
      } else {
        FilterFrame g = general_filter_frame(u.bao);
        MorphismSpec e = eta_F(doc.frame, u, g);
        std::cout << "map:";
        for (int v : e.map) std::cout << " " << v;
        std::cout << "\n";
        emit_document(serialize_frame_document({g.frame, false}));
      }
      return verdict(true);
    }
    FiniteBAO b = load_bao(dual_path);
    if (dual_name == "principal-frame") {
      emit_document(serialize_frame_document({principal_frame(b).frame, false}));
      return verdict(true);
    }
    if (dual_name == "full-frame") {
      emit_document(serialize_frame_document({full_frame(b).frame, false}));
      return verdict(true);
    }
    if (dual_name == "filter-frame") {
      emit_document(serialize_frame_document({filter_frame(b).frame, false}));
      return verdict(true);
    }
    if (dual_name == "gff") {
      emit_document(serialize_frame_document({general_filter_frame(b).frame, false}));
      return verdict(true);
    }
    if (dual_name == "zeta-a") {
      AlgebraFrame pf = principal_frame(b);
      UnderlyingBAO u = underlying_bao(pf.frame);
      BAOHom z = zeta_A(b, pf, u);
      std::cout << "map:";
      for (int v : z.map) std::cout << " " << v;
      std::cout << "\n";
      emit_document(serialize_bao_document(u.bao));
      return verdict(true);
    }
    if (dual_name == "eta-a") {
      FilterFrame g = general_filter_frame(b);
      UnderlyingBAO u = underlying_bao(g.frame);
      BAOHom e = eta_A(b, g, u);
      std::cout << "map:";
      for (int v : e.map) std::cout << " " << v;
      std::cout << "\n";
      emit_document(serialize_bao_document(u.bao));
      return verdict(true);
    }
    throw input_error("unknown dual: " + dual_name);
  }

  if (cmd_morphism->parsed()) {
    FrameDocument src = load_frame(mo_source);
    FrameDocument tgt = load_frame(mo_target);
    auto grade = grade_from_string(mo_grade);
    if (!grade) throw input_error("unknown grade: " + mo_grade);
    std::set<MorphismFlag> flags;
    for (const std::string& fl : mo_flags) {
      auto f = flag_from_string(fl);
      if (!f) throw input_error("unknown flag: " + fl);
      flags.insert(*f);
    }
    if (mo_mode == "check") {
      if (mo_map.empty()) throw input_error("morphism check needs --map");
      MorphismSpec spec{&src.frame, &tgt.frame, parse_int_list(mo_map), *grade, flags};
      if (static_cast<int>(spec.map.size()) != src.frame.size())
        throw input_error("--map must list one image per source state");
      CheckReport r = check_morphism(spec);
      print_witness(r);
      return verdict(r.ok);
    }
    if (mo_mode == "find") {
      auto found = find_morphism(src.frame, tgt.frame, *grade, flags);
      if (found) {
        std::cout << "map:";
        for (int v : found->map) std::cout << " " << v;
        std::cout << "\n";
      }
      return verdict(found.has_value());
    }
    throw input_error("morphism mode must be check or find");
  }

  if (cmd_enumerate->parsed()) {
    std::sort(en_indices.begin(), en_indices.end());
    if (en_kind == "posets") {
      auto posets = enumerate_posets(en_size);
      std::cout << "size: " << en_size << "\ncount: " << posets.size() << "\n";
      return verdict(true);
    }
    if (en_kind == "frames") {
      long long count =
          for_each_full_frame(en_size, en_indices, [](const PossibilityFrame&) {});
      std::cout << "size: " << en_size << "\ncount: " << count << "\n";
      return verdict(true);
    }
    if (en_kind == "baos") {
      auto baos = enumerate_baos(en_atoms, en_indices);
      std::cout << "atoms: " << en_atoms << "\ncount: " << baos.size() << "\n";
      return verdict(true);
    }
    throw input_error("enumerate kind must be posets, frames, or baos");
  }

  if (cmd_correspond->parsed()) {
    LSSchema schema = parse_schema(co_schema);
    FrameDocument doc = load_frame(co_path);
    PathKind kind = co_kripke ? PathKind::Kripke : PathKind::Possibility;
    Fml axiom = ls_axiom(schema);
    bool axiom_valid;
    if (co_kripke) {
      KripkeFrame kf{doc.frame.size(), doc.frame.indices, doc.frame.rels};
      axiom_valid = kripke_valid(kf, axiom).valid;
    } else {
      axiom_valid = valid_on_frame(doc.frame, axiom).valid;
    }
    CheckReport cond = ls_condition(doc.frame, schema, kind);
    std::cout << "axiom: " << print(axiom) << "\naxiom-valid: " << axiom_valid
              << "\ncondition-holds: " << cond.ok << "\n";
    return verdict(axiom_valid == cond.ok);
  }

  if (cmd_sweep->parsed()) {
    LSSchema schema = parse_schema(sw_schema);
    PathKind kind = sw_kripke ? PathKind::Kripke : PathKind::Possibility;
    long long total = 0;
    bool ok = true;
    for (int n = 1; n <= sw_max && ok; ++n) {
      std::vector<std::string> idx;
      for (const auto& seq : {schema.alpha, schema.beta, schema.delta, schema.gamma})
        for (const std::string& i : seq) idx.push_back(i);
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      if (idx.empty()) idx = {"i"};
      std::vector<PossibilityFrame> frames;
      for_each_full_frame(n, idx, [&](const PossibilityFrame& f) {
        if (kind == PathKind::Possibility) {
          bool standard = true;
          for (const Relation& r : f.rels)
            if (!check_interplay(f.poset, r, "R-down").ok) standard = false;
          if (!standard) return;
        } else {
          for (int x = 0; x < f.size(); ++x)
            if (f.poset.below[x] != with(0, x)) return;
        }
        frames.push_back(f);
      });
      std::size_t at = 0;
      CorrespondenceReport rep = verify_correspondence(
          schema,
          [&](PossibilityFrame& out) {
            if (at >= frames.size()) return false;
            out = frames[at++];
            return true;
          },
          kind);
      total += rep.frames_checked;
      if (!rep.ok) {
        ok = false;
        std::cout << "divergence-size: " << n << "\ndivergence-frame: "
                  << rep.divergent_frame << "\naxiom-valid: " << rep.axiom_valid
                  << "\ncondition-holds: " << rep.condition_holds << "\n";
      }
    }
    std::cout << "frames-checked: " << total << "\n";
    if (ok) std::cout << "result: no divergence, " << total << " frames checked\n";
    return verdict(ok);
  }

  if (cmd_dot->parsed()) {
    FrameDocument doc = load_frame(dot_path);
    std::cout << export_dot(doc.frame);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::boolalpha;
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const poss::budget_error&) {
    std::cerr << "error: budget exceeded\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

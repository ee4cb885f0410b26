#ifndef POSS_IO_HPP
#define POSS_IO_HPP

#include <string>

#include "poss/bao.hpp"
#include "poss/frame.hpp"

namespace poss {

// Raised for malformed documents; message carries the offending location.
struct document_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame documents:
//   { "states": n,
//     "leq": [[x,y], ...],        reflexive pairs may be omitted; the stated
//                                 pairs must already be a partial order
//     "rels": { "i": [[x,y],...], ... },
//     "props": [[0,2],...] | "full",
//     "extended": false }         optional, per the extended-frame shape
// Deserialization re-runs validate_frame (skipped for extended documents,
// whose restriction is validated instead).
struct FrameDocument {
  PossibilityFrame frame;
  bool extended = false;
};

// check=false skips the embedded validate_frame re-run (used by the validate
// command, which reports the verdict itself).
FrameDocument parse_frame_document(const std::string& json_text, bool check = true);
std::string serialize_frame_document(const FrameDocument& doc);

// BAO documents:
//   { "atoms": m,
//     "elements": [[0,1],...] | "powerset",   atom lists
//     "ops": { "i": [e0, e1, ...], ... } }    element-index tables
FiniteBAO parse_bao_document(const std::string& json_text);
std::string serialize_bao_document(const FiniteBAO& b);

// Deterministic DOT rendering: solid edges are the covering pairs of the
// refinement order (drawn from the refined state down to the refinement),
// dashed edges the accessibility relations labelled by index.
std::string export_dot(const PossibilityFrame& f, const std::string& name = "frame");

}  // namespace poss

#endif

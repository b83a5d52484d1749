#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

enum class Axiom { Seed, L, P, B, E, T };

char axiom_letter(Axiom a);  // 'S' for seeds
Axiom axiom_from_letter(char c);

using ObjectId = int;
using Object = std::variant<Point, Line>;

struct TraceStep {
  Axiom tag;
  std::string op;  // primitive or derived operation name, e.g. "bisect", "reflect"
  std::vector<ObjectId> inputs;
  std::vector<ObjectId> outputs;
};

// Append-only log of fold operations. Objects 0 and 1 are the seed points
// (0,0) and (1,0). Every object is kept in a prefix of the trace's current
// tower, so any two objects can be combined.
class ConstructionTrace {
 public:
  ConstructionTrace();

  static constexpr ObjectId kOrigin = 0;
  static constexpr ObjectId kUnit = 1;

  const TowerPtr& tower() const { return tower_; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  size_t object_count() const { return objects_.size(); }
  bool is_point(ObjectId id) const;
  bool is_line(ObjectId id) const;
  // Objects come back lifted to the current tower. UnknownObject on bad ids
  // or kind mismatch.
  Point point(ObjectId id) const;
  Line line(ObjectId id) const;
  const Object& raw(ObjectId id) const;
  std::string label(ObjectId id) const;
  void set_label(ObjectId id, std::string name);

  std::set<Axiom> profile() const;

  // Records a step whose outputs are new objects. Returns their ids.
  std::vector<ObjectId> record(Axiom tag, std::string op, std::vector<ObjectId> inputs, std::vector<Object> outputs);

  // Raw constructor used by import; does not check incidences.
  struct Raw {
    TowerPtr tower;
    std::vector<Object> objects;
    std::vector<std::string> labels;
    std::vector<TraceStep> steps;
  };
  static ConstructionTrace from_raw(Raw raw);

 private:
  void check_id(ObjectId id) const;
  void adopt(const TowerPtr& t);

  TowerPtr tower_;
  std::vector<Object> objects_;
  std::vector<std::string> labels_;
  std::vector<TraceStep> steps_;
};

// Image points for each fold line, so callers can check the axiom's
// incidences without recomputing reflections.
struct FoldWitness {
  std::vector<Point> images;
};

struct FoldResult {
  std::vector<ObjectId> lines;
  std::vector<FoldWitness> witnesses;
};

// (L) line through two points.
ObjectId fold_L(ConstructionTrace& t, ObjectId p, ObjectId q);
// (P) intersection of two lines.
ObjectId fold_P(ConstructionTrace& t, ObjectId l1, ObjectId l2);
// (B) both angle bisectors.
std::pair<ObjectId, ObjectId> fold_B(ConstructionTrace& t, ObjectId l1, ObjectId l2);

// Derived Pythagorean helpers, recorded with tag B.
ObjectId fold_perpendicular(ConstructionTrace& t, ObjectId p, ObjectId l);
ObjectId fold_perp_bisector(ConstructionTrace& t, ObjectId p, ObjectId q);
ObjectId fold_reflect(ConstructionTrace& t, ObjectId p, ObjectId l);
ObjectId fold_parallel(ConstructionTrace& t, ObjectId p, ObjectId l);
// Point on ray from p through q at distance |p r| from p (a reflection across
// the bisector of the angle q p r).
ObjectId fold_transfer(ConstructionTrace& t, ObjectId p, ObjectId q, ObjectId r);

// (E) lines through Q reflecting P onto l. NoRealFold when none exists.
FoldResult fold_E(ConstructionTrace& t, ObjectId p, ObjectId l, ObjectId q);
// (T) lines reflecting Q onto l and P onto the perpendicular bisector of PQ.
// All real solutions, principal first.
FoldResult fold_T(ConstructionTrace& t, ObjectId p, ObjectId q, ObjectId l);
// The two lines trisecting the acute angle between l1 and l2, the one nearer
// l1 first. Recorded with tag T.
std::pair<ObjectId, ObjectId> trisect_between_lines(ConstructionTrace& t, ObjectId l1, ObjectId l2);

// Same computations on bare values, for callers that do not keep a trace.
std::vector<Line> fold_T_lines(const Point& p, const Point& q, const Line& l);
std::pair<Line, Line> trisectors(const Line& l1, const Line& l2);

// Re-checks the defining incidence of every step. Throws InvalidTrace.
void validate(const ConstructionTrace& t);

}  // namespace origami

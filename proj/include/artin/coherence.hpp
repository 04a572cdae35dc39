#ifndef ARTIN_COHERENCE_HPP
#define ARTIN_COHERENCE_HPP

#include <string>

#include "artin/graph.hpp"

namespace artin {

enum class CoherenceVia { GeneralLemma, FCTheorem };

struct CoherenceReport {
  enum class Failure { None, NotChordal, BadCompleteSubgraph, ForbiddenSquare };
  bool coherent = false;
  Failure failure = Failure::None;
  VertexSet witness;  // offending subset, when there is one
  CoherenceVia via = CoherenceVia::GeneralLemma;
};

std::string coherence_failure_name(CoherenceReport::Failure f);

// Three conditions: the finite-label view is chordal, complete subgraphs on
// 3 or 4 vertices have at most one label above 2, and no induced square of
// 2-edges with one finite chord above 2 and the other diagonal infinite.
CoherenceReport coherence_general(const LabeledGraph& g);

// For FC-type graphs admitting retractions: coherent iff the graph and its
// label-2 restriction are both chordal.
CoherenceReport coherence_fc(const LabeledGraph& g);

// right-angled case (labels 2 and infinity only): chordality decides
bool droms_raag(const LabeledGraph& g);

}  // namespace artin

#endif

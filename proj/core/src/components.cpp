#include "dcjindel/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcj {

int indel_potential(int runs) {
  if (runs <= 0) return 0;
  return (runs + 2) / 2;  // ceil((runs + 1) / 2)
}

int transitions(const Component& c) { return c.transitions; }

int lambda_via_transitions(const Component& c) {
  return c.transitions / 2 + (c.runCount >= 1 ? 1 : 0);
}

namespace {

struct Walker {
  const Diagram& d;
  const std::vector<char>& selected;
  std::vector<std::vector<int>> incidentSel;  // vertex id - 1 -> selected edge ids
  std::vector<char> vertexDone;
  std::vector<char> edgeDone;

  explicit Walker(const Diagram& diagram, const std::vector<char>& sel)
      : d(diagram), selected(sel) {
    incidentSel.resize(d.vertices.size());
    vertexDone.assign(d.vertices.size(), 0);
    edgeDone.assign(d.edges.size(), 0);
    for (const auto& e : d.edges) {
      if (!selected[e.id - 1]) continue;
      incidentSel[e.u - 1].push_back(e.id);
      if (e.v != e.u) incidentSel[e.v - 1].push_back(e.id);
    }
    for (const auto& lst : incidentSel)
      if (lst.size() > 2) throw std::logic_error("selection has a vertex of degree > 2");
  }

  int otherEnd(int edgeId, int vertexId) const {
    const DiagramEdge& e = d.edge(edgeId);
    return e.u == vertexId ? e.v : e.u;
  }

  // Walk from `start` until a dead end (path) or back to `start` (cycle).
  Component walk(int start) {
    Component c;
    int v = start;
    c.vertexIds.push_back(v);
    vertexDone[v - 1] = 1;
    while (true) {
      int nextEdge = -1;
      for (int eid : incidentSel[v - 1]) {
        if (edgeDone[eid - 1]) continue;
        if (nextEdge == -1 || eid < nextEdge) nextEdge = eid;
      }
      if (nextEdge == -1) break;
      edgeDone[nextEdge - 1] = 1;
      c.edgeIds.push_back(nextEdge);
      v = otherEnd(nextEdge, v);
      if (v == start) {
        c.isCycle = true;
        break;
      }
      c.vertexIds.push_back(v);
      vertexDone[v - 1] = 1;
    }
    return c;
  }
};

void reverse_component(Component& c) {
  std::reverse(c.vertexIds.begin(), c.vertexIds.end());
  std::reverse(c.edgeIds.begin(), c.edgeIds.end());
}

void classify(const Diagram& d, Component& c) {
  int crossing = 0;
  std::vector<GenomeSide> indelSeq;
  for (int eid : c.edgeIds) {
    const DiagramEdge& e = d.edge(eid);
    if (is_crossing(e.kind)) ++crossing;
    if (is_indel(e.kind)) indelSeq.push_back(indel_side(e.kind));
  }
  int m = static_cast<int>(indelSeq.size());

  if (c.isCycle) {
    // run count: boundaries between cyclically consecutive indel edges of
    // different genomes; a cycle whose indel edges all share a genome has a
    // single run that wraps around
    int boundaries = 0;
    for (int j = 0; j < m; ++j)
      if (indelSeq[j] != indelSeq[(j + 1) % m]) ++boundaries;
    c.runCount = m == 0 ? 0 : (boundaries == 0 ? 1 : boundaries);
    c.transitions = c.runCount >= 2 ? c.runCount : 0;
    c.pathClass = PathClass::NotApplicable;
    c.kind = crossing > 0 ? ComponentKind::ABCycle : ComponentKind::IndelOnlyCycle;
    c.isCircularSingleton = crossing == 0;
    return;
  }

  GenomeSide front = d.vertex(c.vertexIds.front()).side;
  GenomeSide back = d.vertex(c.vertexIds.back()).side;
  if (front != back) {
    c.kind = ComponentKind::ABPath;
    if (front == GenomeSide::B) {  // AB-paths are read from A to B
      reverse_component(c);
      std::reverse(indelSeq.begin(), indelSeq.end());
    }
  } else {
    c.kind = front == GenomeSide::A ? ComponentKind::AAPath : ComponentKind::BBPath;
    if (c.vertexIds.front() > c.vertexIds.back()) {
      reverse_component(c);
      std::reverse(indelSeq.begin(), indelSeq.end());
    }
  }

  if (m == 0) {
    c.runCount = 0;
    c.pathClass = PathClass::Epsilon;
  } else {
    int blocks = 1;
    for (int j = 0; j + 1 < m; ++j)
      if (indelSeq[j] != indelSeq[j + 1]) ++blocks;
    c.runCount = blocks;
    bool firstA = indelSeq.front() == GenomeSide::A;
    bool lastA = indelSeq.back() == GenomeSide::A;
    if (firstA && lastA)
      c.pathClass = PathClass::A;
    else if (!firstA && !lastA)
      c.pathClass = PathClass::B;
    else if (firstA)
      c.pathClass = PathClass::AB;
    else
      c.pathClass = PathClass::BA;
    // no reading direction on same-genome paths
    if (c.kind != ComponentKind::ABPath && c.pathClass == PathClass::BA)
      c.pathClass = PathClass::AB;
  }
  c.isLinearSingleton = crossing == 0 && !c.edgeIds.empty();
}

}  // namespace

std::vector<Component> decompose_selection(const Diagram& d,
                                           const std::vector<char>& selectedEdges) {
  Walker walker(d, selectedEdges);
  std::vector<Component> out;

  // paths first, discovered from their endpoints in vertex-id order
  for (const auto& v : d.vertices) {
    if (walker.vertexDone[v.id - 1] || walker.incidentSel[v.id - 1].size() > 1) continue;
    Component c = walker.walk(v.id);
    if (c.edgeIds.empty()) continue;  // isolated vertex: nothing to classify
    classify(d, c);
    out.push_back(std::move(c));
  }
  // remaining vertices lie on cycles; the first unvisited id is the cycle minimum
  for (const auto& v : d.vertices) {
    if (walker.vertexDone[v.id - 1]) continue;
    Component c = walker.walk(v.id);
    classify(d, c);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> decompose_components(const Diagram& d) {
  std::vector<char> all(d.edges.size(), 1);
  return decompose_selection(d, all);
}

}  // namespace dcj

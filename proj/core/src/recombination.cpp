#include "dcjindel/recombination.hpp"

#include <algorithm>

namespace dcj {

GroupTally tally_paths(const std::vector<Component>& components) {
  GroupTally t;
  for (const Component& c : components) {
    if (c.isCycle || c.pathClass == PathClass::Epsilon) continue;
    switch (c.kind) {
      case ComponentKind::AAPath:
        if (c.pathClass == PathClass::AB) ++t.w;
        else if (c.pathClass == PathClass::A) ++t.wa;
        else ++t.wb;
        break;
      case ComponentKind::BBPath:
        if (c.pathClass == PathClass::AB) ++t.m;
        else if (c.pathClass == PathClass::A) ++t.ma;
        else ++t.mb;
        break;
      case ComponentKind::ABPath:
        // AB:a and AB:b paths cannot be sources, only AB:ab and AB:ba
        if (c.pathClass == PathClass::AB) ++t.z;
        else if (c.pathClass == PathClass::BA) ++t.n;
        break;
      default:
        break;
    }
  }
  return t;
}

namespace {

// counter order: W, WA, WB, M, MA, MB, Z, N
constexpr int W = 0, WA = 1, WB = 2, M = 3, MA = 4, MB = 5, Z = 6, N = 7;

std::array<int, 8> cons(std::initializer_list<std::pair<int, int>> entries) {
  std::array<int, 8> out{};
  for (auto [idx, count] : entries) out[idx] = count;
  return out;
}

std::vector<RecombinationGroup> make_groups() {
  using GP = GroupPart;
  std::vector<RecombinationGroup> g;
  g.push_back({GP::P, cons({{W, 1}, {M, 1}}), 2});

  g.push_back({GP::Q, cons({{W, 2}, {MA, 1}, {MB, 1}}), 3});
  g.push_back({GP::Q, cons({{M, 2}, {WA, 1}, {WB, 1}}), 3});

  g.push_back({GP::T, cons({{W, 1}, {Z, 1}, {MA, 1}}), 2});
  g.push_back({GP::T, cons({{W, 2}, {MA, 1}}), 2});
  g.push_back({GP::T, cons({{W, 1}, {N, 1}, {MB, 1}}), 2});
  g.push_back({GP::T, cons({{W, 2}, {MB, 1}}), 2});
  g.push_back({GP::T, cons({{M, 1}, {N, 1}, {WA, 1}}), 2});
  g.push_back({GP::T, cons({{M, 2}, {WA, 1}}), 2});
  g.push_back({GP::T, cons({{M, 1}, {Z, 1}, {WB, 1}}), 2});
  g.push_back({GP::T, cons({{M, 2}, {WB, 1}}), 2});

  g.push_back({GP::S, cons({{Z, 1}, {N, 1}}), 1});
  g.push_back({GP::S, cons({{WA, 1}, {MA, 1}}), 1});
  g.push_back({GP::S, cons({{WB, 1}, {MB, 1}}), 1});
  g.push_back({GP::S, cons({{W, 1}, {MA, 1}}), 1});
  g.push_back({GP::S, cons({{W, 1}, {MB, 1}}), 1});
  g.push_back({GP::S, cons({{W, 1}, {Z, 1}}), 1});
  g.push_back({GP::S, cons({{W, 1}, {N, 1}}), 1});
  g.push_back({GP::S, cons({{W, 2}}), 1});
  g.push_back({GP::S, cons({{M, 1}, {WA, 1}}), 1});
  g.push_back({GP::S, cons({{M, 1}, {WB, 1}}), 1});
  g.push_back({GP::S, cons({{M, 1}, {Z, 1}}), 1});
  g.push_back({GP::S, cons({{M, 1}, {N, 1}}), 1});
  g.push_back({GP::S, cons({{M, 2}}), 1});

  g.push_back({GP::M, cons({{Z, 2}, {WB, 1}, {MA, 1}}), 2});
  g.push_back({GP::M, cons({{N, 2}, {WA, 1}, {MB, 1}}), 2});

  g.push_back({GP::N, cons({{Z, 1}, {WB, 1}, {MA, 1}}), 1});
  g.push_back({GP::N, cons({{Z, 2}, {WB, 1}}), 1});
  g.push_back({GP::N, cons({{Z, 2}, {MA, 1}}), 1});
  g.push_back({GP::N, cons({{N, 1}, {WA, 1}, {MB, 1}}), 1});
  g.push_back({GP::N, cons({{N, 2}, {WA, 1}}), 1});
  g.push_back({GP::N, cons({{N, 2}, {MB, 1}}), 1});
  return g;
}

}  // namespace

const std::vector<RecombinationGroup>& recombination_groups() {
  static const std::vector<RecombinationGroup> groups = make_groups();
  return groups;
}

GroupTally greedy_delta(GroupTally t) {
  std::array<int, 8> c = t.counters();
  for (const RecombinationGroup& g : recombination_groups()) {
    int times = -1;
    for (int i = 0; i < 8; ++i) {
      if (g.consumes[i] == 0) continue;
      int cap = c[i] / g.consumes[i];
      times = times < 0 ? cap : std::min(times, cap);
    }
    if (times <= 0) continue;
    for (int i = 0; i < 8; ++i) c[i] -= times * g.consumes[i];
    switch (g.part) {
      case GroupPart::P: t.nP += times; break;
      case GroupPart::Q: t.nQ += times; break;
      case GroupPart::T: t.nT += times; break;
      case GroupPart::S: t.nS += times; break;
      case GroupPart::M: t.nM += times; break;
      case GroupPart::N: t.nN += times; break;
    }
  }
  t.delta = 2 * t.nP + 3 * t.nQ + 2 * t.nT + t.nS + 2 * t.nM + t.nN;
  return t;
}

}  // namespace dcj

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/common.hpp"
#include "linkinv/graph.hpp"

namespace linkinv {

// Front projection data of one Legendrian knot.
struct FrontData {
    Int writhe;
    Int cusps_down;
    Int cusps_up;
};

struct FrontInvariants {
    Int tb;   // writhe - (cusps_down + cusps_up)/2
    Int rot;  // (cusps_down - cusps_up)/2
};

FrontInvariants front_invariants(const FrontData& f);

enum class ZigzagSide { AllUp, AllDown };

struct LegendrianComponent {
    std::string vertex;
    Int weight;
    Int tb;       // weight + 1
    Int rot;
    Int surgery;  // tb - 1 = weight
    Int cusps_up;
    Int cusps_down;
};

struct LegendrianDiagram {
    std::vector<LegendrianComponent> components;
    ZigzagSide side = ZigzagSide::AllUp;
    // Graph adjacency carried as clasps between components (metadata only).
    std::vector<std::pair<std::size_t, std::size_t>> clasps;
};

// One Legendrian unknot per vertex, framing tb-1 = weight, all extra zigzags
// on one fixed side (all-up: rot = weight + 2, cusps 1 down / -2w-3 up).
// Requires every weight <= -2.
LegendrianDiagram canonical_surgery_diagram(const PlumbingGraph& g,
                                            ZigzagSide side = ZigzagSide::AllUp);

struct AdjunctionRow {
    std::string vertex;
    Int tb;
    Int rot;
    Int expected_rot;  // tb + 1
    bool ok;
};

struct AdjunctionReport {
    bool certified = false;  // rot_j = tb_j + 1 for every component
    std::vector<AdjunctionRow> rows;
};

// Certifies that the diagram presents the canonical contact structure:
// <c1,[S_j]> = S_j^2 + 2 at every vertex, i.e. rot = tb + 1.
AdjunctionReport adjunction_check(const LegendrianDiagram& d, const PlumbingGraph& g);

// Evaluation of c1 of the Stein filling on the surface classes: (rot_j)_j.
std::vector<Int> chern_evaluation(const LegendrianDiagram& d);

// Move one stabilization of component i to the other side: up->down raises
// rot by 2, down->up lowers it, tb unchanged. Requires a spare zigzag.
LegendrianDiagram flip_zigzag(const LegendrianDiagram& d, std::size_t component,
                              bool up_to_down = true);

}  // namespace linkinv

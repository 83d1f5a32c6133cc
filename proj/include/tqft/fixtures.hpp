#pragma once

#include "tqft/diagram.hpp"

#include <string>
#include <vector>

namespace tqft::fixtures {

LinkDiagram unknot();
// One positive curl, bracket -A^3 d. The negative curl gives -A^-3 d.
LinkDiagram kinked_unknot();
LinkDiagram negative_kinked_unknot();
LinkDiagram hopf_link();
LinkDiagram trefoil();
LinkDiagram figure_eight();

struct BraidFixture {
    std::string name;
    std::size_t strands;
    std::vector<int> word;
};
// Braid words whose closures serve as test links.
const std::vector<BraidFixture>& braid_fixtures();

struct NamedLink {
    std::string name;
    LinkDiagram link;
};
// Closed diagrams with at most 8 crossings used for oracle comparisons.
std::vector<NamedLink> small_links();

// Two-sphere kets on 8 points: points 0..3 on the first sphere, 4..7 on the second.
// Four lines joining the spheres, outer to outer.
TangleDiagram bell_connector();
// Each sphere capped on its own by adjacent cups.
TangleDiagram double_cup();
// Outer cups on each sphere, inner points joined across.
TangleDiagram bridge();
// Adjacent cups on each sphere with a ring hooked through both: the ring passes
// under the upper cup strands and over the lower ones. Four crossings.
TangleDiagram linked_ring();

} // namespace tqft::fixtures

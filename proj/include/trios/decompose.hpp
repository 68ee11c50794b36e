// The two lowering passes.
//
// Pass 1 runs before routing and rewrites everything into
// {one-qubit, CX, CCX}, leaving Toffolis whole so the router can move
// their operands as a group.  Pass 2 runs after routing and lowers
// each CCX into the CX network that fits how its operands ended up
// placed, and each SWAP into three CX.

#pragma once

#include <stdexcept>

#include "trios/circuit.hpp"
#include "trios/topology.hpp"

namespace trios {

struct PlacementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ToffoliPolicy {
  Auto,    // triangle placement -> 6-CX form, line placement -> 8-CX form
  Force6,  // always the 6-CX form, even where its CX are not coupled
  Force8,  // always the 8-CX form
};

// CU1 -> {U1, CX} and SWAP -> 3 CX; CCX and everything else unchanged.
Circuit pass1_decompose(const Circuit& in);

// Textbook 6-CX Toffoli network.  Needs all three operand pairs
// coupled (a triangle) to run without further routing.
void append_toffoli_6cnot(Circuit& c, int control1, int control2, int target);

// 8-CX Toffoli network for a line placement top-mid-bot: every CX acts
// on (top,mid) or (mid,bot).  The inner CX/T core is a
// doubly-controlled Z, which is symmetric in its qubits, so the
// basis-changing H pair goes on whichever position carries the target
// role; `target_pos` must be one of top/mid/bot.
void append_toffoli_8cnot(Circuit& c, int top, int mid, int bot,
                          int target_pos);

// Shape of a routed Toffoli's operands on the device.
enum class TrioShape { Triangle, Line };

struct TrioPlacement {
  TrioShape shape;
  int middle;  // line: the member coupled to both others; triangle: -1
};

// Classifies how a CCX's operands sit on `g`; throws PlacementError if
// they form neither a triangle nor a line.
TrioPlacement classify_trio(const CouplingGraph& g, int a, int b, int c);

// Lowers CCX and SWAP against the device graph.  Input CX and SWAP
// operands must be coupled and CU1 must already be gone (pass 1's
// job); violations throw PlacementError.  Under Force6 a line-placed
// CCX still gets the 6-CX form, whose control-control CX come out
// uncoupled; callers route those afterwards.
Circuit pass2_decompose(const Circuit& in, const CouplingGraph& g,
                        ToffoliPolicy policy = ToffoliPolicy::Auto);

}  // namespace trios

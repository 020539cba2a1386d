#pragma once

#include "jones2/matrix.hpp"
#include "jones2/word.hpp"

namespace jones2 {

// The homology H_1 of the genus-2 surface carries the ordered symplectic
// basis (x1, x2, y1, y2) with pairing <u,v> = u^T J v, J = [[0,I],[-I,0]].
//
// The chain curves carry the classes [C1]=y1, [C2]=x1, [C3]=y1-y2,
// [C4]=x2, [C5]=y2, and a twist acts by u |-> u - <u,c> c. This is the
// unique assignment (up to curve-class signs) under which the braid
// relations, the triviality of (z1 z2 z1)^4 on homology, and the exact
// change-of-basis identities of the t=-1 specialization all hold; the test
// suite pins it.

inline constexpr int kHomologyDim = 4;

const IntMatrix& symplectic_form();  // J

/// Homology class of the i-th chain curve (i = 1..5), as a column vector.
IntMatrix chain_curve_class(int i);

/// Transvection u |-> u - <u,c> c along a primitive class c.
IntMatrix transvection(const IntMatrix& c);

/// 4x4 homology action of one generator (xi maps to the product of the
/// five twist matrices).
const IntMatrix& homology_action(Letter l);

/// 4x4 homology action of a word; a group homomorphism.
IntMatrix symplectic_action(const GroupWord& w);

bool preserves_form(const IntMatrix& m);

/// Kernel test for the homology action.
bool is_torelli(const GroupWord& w);

// Basis of Lambda^2 H / omega Z used everywhere downstream:
//   t1=[x1^x2], t2=[y1^y2], t3=[x1^y1], t4=[x1^y2], t5=[x2^y1],
// with [x2^y2] = -t3 because the symplectic class omega is killed.

/// 5x5 matrix of the action a symplectic 4x4 matrix induces on the
/// t-basis of Lambda^2 H / omega Z.
IntMatrix induced_wedge_action(const IntMatrix& g);

}  // namespace jones2

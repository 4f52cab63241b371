#pragma once

// Exact homological algebra for finite-dimensional monomial bound quiver
// algebras over prime fields: syzygies, transposes, Auslander-Reiten
// translates, Ext^1 with explicit extensions, and Krull-Schmidt
// decomposition, plus a small input language and an extension-closure
// counterexample verifier.

#include "qmod/gf.hpp"
#include "qmod/matrix.hpp"
#include "qmod/linalg.hpp"
#include "qmod/quiver.hpp"
#include "qmod/algebra.hpp"
#include "qmod/representation.hpp"
#include "qmod/hom.hpp"
#include "qmod/decomp.hpp"
#include "qmod/homology.hpp"
#include "qmod/dsl.hpp"
#include "qmod/verifier.hpp"

#pragma once

// Umbrella header: posets and order ideals, the Fon-Der-Flaass action and
// toggle group, Weyl groups with parabolic quotients, heaps of fully
// commutative elements, exact q-polynomial arithmetic, and the cyclic sieving
// verifier over the minuscule catalog.

#include "minuscule/bits.hpp"
#include "minuscule/catalog.hpp"
#include "minuscule/coxeter.hpp"
#include "minuscule/csp.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/poset.hpp"
#include "minuscule/poset_io.hpp"
#include "minuscule/qpoly.hpp"
#include "minuscule/reports.hpp"
#include "minuscule/toggle.hpp"

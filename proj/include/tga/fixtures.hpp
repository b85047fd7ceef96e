#pragma once

#include "tga/algebra.hpp"

namespace tga {
namespace fixtures {

// The desk-scale corpus used throughout the test suites and shipped as
// groupoid files under fixtures/.

ContextPtr t1();          // one unit, one element
ContextPtr z2();          // the two-element group, untwisted
ContextPtr z2_proj();     // Z/2 with the order-two twist (g,g) -> -1
ContextPtr k4();          // Klein four-group, untwisted
ContextPtr k4_sigma();    // Klein four-group with the bicharacter twist
ContextPtr r2();          // pair groupoid on two points
ContextPtr r2_disjoint(); // two disjoint pair groupoids
ContextPtr b2();          // two disjoint copies of Z/2
ContextPtr g6();          // b2 together with a pair groupoid
ContextPtr swap_action(); // Z/2 acting on two points by the swap

// every fixture keyed by its short name, in a fixed order
std::vector<std::pair<std::string, ContextPtr>> all();

ContextPtr by_name(const std::string& name);

} // namespace fixtures
} // namespace tga

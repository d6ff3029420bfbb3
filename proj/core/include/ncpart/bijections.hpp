#pragma once

#include "ncpart/luka_walk.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/plane_tree.hpp"

namespace ncpart {

/// Dual two-type tree rooted at the white face adjacent to 1 and n. Black
/// vertices are the blocks; a block of size k has total degree k.
TwoTypeTree dual_tree_circ(const NCPartition& p);

/// Dual two-type tree rooted at the black vertex of the block containing n.
TwoTypeTree dual_tree_bullet(const NCPartition& p);

/// Janson-Stefansson map to a one-type tree: even-generation vertices become
/// leaves, odd-generation vertices with k children get k+1 children.
PlaneTree js_forward(const TwoTypeTree& t);

PlaneTree t_circ(const NCPartition& p);
PlaneTree t_bullet(const NCPartition& p);

/// Blocks are the sibling groups (lexicographic indices 1..n).
NCPartition p_circ(const PlaneTree& t);

/// Blocks are the maximal twigs (chains of last children below a non-root vertex).
NCPartition p_bullet(const PlaneTree& t);

/// Links consecutive siblings; maps t_circ(P) to t_bullet(P).
PlaneTree b_transform(const PlaneTree& t);

/// Kreweras complement, computed as p_bullet(t_circ(p)).
NCPartition kreweras(const NCPartition& p);

/// Equals p_circ(tree_from_walk(w)), computed directly with a monotone stack.
NCPartition partition_from_walk(const LukaWalk& w);

}  // namespace ncpart

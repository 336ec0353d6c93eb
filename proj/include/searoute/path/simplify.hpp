#pragma once

#include "searoute/geo/types.hpp"

namespace searoute::path {

/// Removes self-intersections from a path.
///
/// The path is walked once; whenever the next leg touches an earlier,
/// non-adjacent leg, everything between the two contact points is cut out
/// and the path is spliced at the contact. The earliest crossed leg wins, so
/// the largest loop goes. Live legs sit in an R-tree, giving O(n log n)
/// behaviour for paths with a bounded number of candidates per query.
/// Endpoints are preserved; an already simple path is returned unchanged.
geo::Polyline simplify_remove_loops(const geo::Polyline& path);

}  // namespace searoute::path

#pragma once

#include <map>
#include <string>
#include <vector>

#include "moonshine/report.hpp"

namespace moonshine {

// Named affine Cartan matrix. The matrices are embedded data (Bourbaki
// node numbering, affine node listed first; orderings and folding
// partitions are mirrored in data/affine_diagrams.json). The marks are
// always recomputed from the kernel, never read from a table, so the
// diagram checks are genuine computations against the printed lists.
struct AffineDiagram {
    std::string name;  // A1, E6, E7, E8, F4, G2 (affine extensions)
    std::vector<std::string> node_names;
    std::vector<std::vector<long>> cartan;
    // Node-index groups for the fold checks, ordered like the target
    // diagram's nodes; empty when no fold is declared.
    std::vector<std::vector<int>> folding_groups;
    std::string folding_target;
};

const AffineDiagram& affine_diagram(const std::string& name);
std::vector<std::string> affine_diagram_names();

// The unique primitive positive integer kernel vector of the Cartan
// matrix (the marks: coefficients of the linear relation among the
// simple roots). Exact rational elimination; kernel rank must be 1.
std::vector<BigInt> affine_marks(const AffineDiagram& d);

// Prime-power product vs the 54-digit printed order (grouping commas
// stripped on the comparison side), and prime set vs Ogg's list.
VerificationReport monster_order_check();

extern const std::map<long, long> kMonsterOrderPrimePowers;
extern const char* kMonsterOrderDigits;  // with grouping commas
extern const std::vector<long> kOggPrimes;

VerificationReport ogg_primes_check();

// All nonnegative integer solutions of sum a_i * dims_i = value
// (exhaustive bounded search), plus whether a target decomposition is
// among them.
std::vector<std::vector<long>> mckay_decomposition(const BigInt& value,
                                                   const std::vector<BigInt>& dims);

extern const std::vector<BigInt> kMonsterIrrepDims;  // 1, 196883, 21296876

// Verifies the two printed j-coefficient decompositions over the
// monster dims (196884 -> (1,1,0), 21493760 -> (1,1,1)).
VerificationReport mckay_decomposition_check();

// Printed involution-product order lists vs kernel-computed marks,
// as multisets. group_label in {monster/E8, baby/F4, Fi24/G2}.
VerificationReport involution_product_check(const std::string& group_label);

// Affine marks vs binary polyhedral irreducible-representation
// dimension lists (E6/tetrahedral, E7/octahedral, E8/icosahedral),
// with the sum-of-squares group-order sanity check (24, 48, 120).
VerificationReport binary_group_dims_check(const std::string& diagram);

// Grouping the source diagram's nodes by the declared folding partition
// must give equal marks within each group and reproduce the target's
// marks. cover in {E7->F4, E6->G2}.
VerificationReport fold_check(const std::string& cover);
// Generic fold of arbitrary partitions (the identity fold is a valid
// input and returns the source marks unchanged).
std::vector<BigInt> fold_marks(const AffineDiagram& source,
                               const std::vector<std::vector<int>>& groups);

}  // namespace moonshine

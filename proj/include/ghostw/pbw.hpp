#pragma once

// Sampled identities of the PBW engine: associativity, the defining
// relations, the filtration and the derivation rule for ad.

#include <cstdint>
#include <vector>

#include "ghostw/report.hpp"
#include "ghostw/uea.hpp"

namespace ghostw {

/// u_i u_j - (-1)^{p_i p_j} u_j u_i = [u_i, u_j] for all basis pairs.
CheckResult check_defining_relations(EnvelopingAlgebra& U);
/// (a b) c = a (b c) on random monomial triples of total degree <= d.
CheckResult check_associativity(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed);
/// A sorted word normal-orders to its own monomial, and a shuffled word to
/// the product of its letters.
CheckResult check_canonical_form(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed);
/// deg(a b) = deg a + deg b unless a and b share an odd factor, in which
/// case it is smaller; deg [a, b] < deg a + deg b.
CheckResult check_filtration(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed);
/// ad(x)(a b) = ad(x)(a) b + (-1)^{p(x)p(a)} a ad(x)(b).
CheckResult check_adjoint_derivation(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed);

std::vector<CheckResult> pbw_suite(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed);

}  // namespace ghostw

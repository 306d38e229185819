#pragma once

#include <vector>

// Test-only oracle, independent of the library's counting route: builds
// the Seifert matrix of the torus knot from the brick basis of its
// positive-braid surface and takes the exact signature of V + V^T.
namespace oracle {

// Seifert matrix of T(p,q) on the (p-1)(q-1) brick basis, p,q >= 2 coprime
std::vector<std::vector<long long>> torus_seifert_matrix(long long p, long long q);

// signature of a symmetric integer matrix by exact congruent
// diagonalization over big rationals
long long symmetric_signature(const std::vector<std::vector<long long>>& m);

long long torus_signature(long long p, long long q);

}  // namespace oracle

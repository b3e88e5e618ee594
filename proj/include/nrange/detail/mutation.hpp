#pragma once

// Fault-injection seam for the mutation smoke test. Regular builds leave NRANGE_MUTANT
// undefined and every factor is exactly 1. The mutant CLI binaries built by the test tree
// define NRANGE_MUTANT to one of the ids below, which scales that closed-form radius by
// (1 + 1e-3) so `nrange verify --suite all` must fail.

namespace nrange::detail {

enum class Mutant { None = 0, WDisc = 1, WnormDisc = 2, VectorEllipse = 3, PhiOuter = 4, PhiInner = 5 };

#ifdef NRANGE_MUTANT
inline constexpr Mutant kActiveMutant = static_cast<Mutant>(NRANGE_MUTANT);
#else
inline constexpr Mutant kActiveMutant = Mutant::None;
#endif

constexpr double mutation_factor(Mutant site) { return kActiveMutant == site ? 1.0 + 1e-3 : 1.0; }

}  // namespace nrange::detail

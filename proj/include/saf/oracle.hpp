#pragma once

#include <cstddef>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

/// Definition-literal brute force. Shares no conflict, defence or closure
/// code with the solver: it reads only the raw argument count and the
/// attack and subargument edge lists.
namespace saf::oracle {

inline constexpr std::size_t kOracleCap = 16;

/// Sweeps all 2^|A| subsets. Throws InstanceTooLarge above kOracleCap.
ExtensionSet oracle_extensions(const Saf& saf, Semantics s);

/// Same sweep against the textbook Dung definitions.
ExtensionSet oracle_dung(const DungAF& af, Semantics s);

}  // namespace saf::oracle

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "acymatch/reducer.hpp"

namespace acym {

/// Trace export. Field names are stable:
/// {n0, m0, delta, size, bound_ok, isolated_dropped, matching,
///  stages:[{rule, m_edges, removed, vm, nm, im, budget_ok, partition?}]}
/// where partition = {x,y,z,i1,i2,i3,i4,x1,x2,x3,
///                    checks:{e1,e2,e3,claim4,i3_final}} and is emitted for
/// local-search stages only when with_partitions is set.
nlohmann::ordered_json solve_report_json(const SolveReport& rep, bool with_partitions);

/// Dispatches one subcommand (solve, exact, verify, gen, bounds, bench,
/// baseline). args excludes the program name. Exit contract: 0 success and
/// certified, 1 user or input error, 2 internal invariant breach.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acym

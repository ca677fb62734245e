#ifndef GUARD_SUBN_ORACLE_INTERNAL_H
#define GUARD_SUBN_ORACLE_INTERNAL_H

#include "subn/oracle.hpp"

namespace subn::detail {

std::vector<Overgroup> exceptional_overgroups(GroupSpec const &spec, unsigned d, unsigned ell);

} // namespace subn::detail

#endif // GUARD_SUBN_ORACLE_INTERNAL_H

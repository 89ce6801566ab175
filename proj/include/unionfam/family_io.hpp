#ifndef UNIONFAM_FAMILY_IO_HPP
#define UNIONFAM_FAMILY_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "unionfam/setfam.hpp"

namespace unionfam {

// Interchange format, one family per line:
//   {"n": 6, "k": 2, "sets": [[1,2],[1,3]]}
// Element lists ascending; sets in canonical family order on output. Input
// in any order is re-canonicalized by make_family.
std::string family_to_jsonl(const Family& f);
Family family_from_jsonl(const std::string& line);

std::vector<Family> read_families(std::istream& in);
void write_families(std::ostream& out, const std::vector<Family>& fams);

}  // namespace unionfam

#endif

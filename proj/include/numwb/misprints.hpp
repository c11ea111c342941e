#pragma once
// Published values that disagree with the definitions they illustrate. The
// table documents them; it never overrides a computed value.

#include <string>
#include <vector>

namespace numwb {

struct Misprint {
    std::string check_id;  // the verification check this entry explains
    std::string locus;     // where the value is printed
    std::string printed;
    std::string derived;   // what the definition gives
    std::string note;
    bool anticipated = false;  // false: discovered by this suite
};

const std::vector<Misprint>& misprint_table();
const Misprint* find_misprint(const std::string& check_id);

}  // namespace numwb
